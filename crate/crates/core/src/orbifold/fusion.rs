//! Closed-form fusion products.

use super::{FusionMultiset, Orbifold, OrbifoldLabel, TwistedRule, Z2};
use crate::lattice::{CosetRep, DualVector};
use crate::multiset::Multiset;

impl Orbifold {
    /// `a ⊠ b` for canonical labels.
    pub fn fuse(&self, a: &OrbifoldLabel, b: &OrbifoldLabel) -> FusionMultiset {
        use OrbifoldLabel::{Diag, NonDiag, Twisted};
        match (a, b) {
            (Diag { lambda, eps }, Diag { lambda: g, eps: e1 }) => {
                Multiset::singleton(Diag { lambda: self.canon(&(lambda.vector() + g.vector())), eps: *eps + *e1 })
            }
            (Diag { lambda, .. }, NonDiag { lambda: g, mu: d }) | (NonDiag { lambda: g, mu: d }, Diag { lambda, .. }) => {
                let x = lambda.vector();
                Multiset::singleton(Self::ordered_pair(self.canon(&(x + g.vector())), self.canon(&(x + d.vector()))))
            }
            (NonDiag { lambda, mu }, NonDiag { lambda: g, mu: d }) => {
                self.fuse_non_diag(lambda.vector(), mu.vector(), g.vector(), d.vector())
            }
            (NonDiag { lambda, mu }, Twisted { lambda: g, .. }) | (Twisted { lambda: g, .. }, NonDiag { lambda, mu }) => {
                let x = &(lambda.vector() + mu.vector()) + g.vector();
                [Z2::ZERO, Z2::ONE].into_iter().map(|e| self.twisted_unchecked(&x, e)).collect()
            }
            (Diag { lambda, eps }, Twisted { lambda: m, eps: e1 }) | (Twisted { lambda: m, eps: e1 }, Diag { lambda, eps }) => {
                let x = &lambda.vector().scale(2) + m.vector();
                Multiset::singleton(self.twisted_unchecked(&x, *eps + *e1))
            }
            (Twisted { lambda, eps }, Twisted { lambda: m, eps: e1 }) => self.fuse_twisted(lambda, *eps, m, *e1),
        }
    }

    /// `(λ μ) ⊠ (γ δ)` as `c(λ+γ, μ+δ) + c(μ+γ, λ+δ)`, where `c(a, b)` is the
    /// pair module when `a ≢ b (mod L)` and both diagonal modules otherwise.
    pub fn fuse_non_diag(&self, l: &DualVector, m: &DualVector, g: &DualVector, d: &DualVector) -> FusionMultiset {
        let mut out = Multiset::new();
        for (a, b) in [(l + g, m + d), (m + g, l + d)] {
            let (a, b) = (self.canon(&a), self.canon(&b));
            if a == b {
                out.add(OrbifoldLabel::Diag { lambda: a.clone(), eps: Z2::ZERO }, 1);
                out.add(OrbifoldLabel::Diag { lambda: a, eps: Z2::ONE }, 1);
            } else {
                out.add(Self::ordered_pair(a, b), 1);
            }
        }
        out
    }

    /// The three-way case split for `(λ μ) ⊠ (γ δ)` in the given orientation.
    /// `None` when `λ+γ ≡ μ+δ` but `μ+γ ≢ λ+δ`, which the split leaves to the
    /// opposite orientation.
    pub fn fuse_non_diag_cases(
        &self,
        l: &DualVector,
        m: &DualVector,
        g: &DualVector,
        d: &DualVector,
    ) -> Option<FusionMultiset> {
        let c = |x: DualVector| self.canon(&x);
        let both_diag = |x: CosetRep| {
            [Z2::ZERO, Z2::ONE].map(|eps| OrbifoldLabel::Diag { lambda: x.clone(), eps })
        };
        let first = c(l + g) == c(m + d);
        let second = c(m + g) == c(l + d);
        let mut out = Multiset::new();
        match (first, second) {
            (true, true) => {
                out.extend(both_diag(c(l + g)).into_iter().map(|x| (x, 1)));
                out.extend(both_diag(c(m + g)).into_iter().map(|x| (x, 1)));
            }
            (false, true) => {
                out.add(Self::ordered_pair(c(l + g), c(m + d)), 1);
                out.extend(both_diag(c(m + g)).into_iter().map(|x| (x, 1)));
            }
            (false, false) => {
                out.add(Self::ordered_pair(c(l + g), c(m + d)), 1);
                out.add(Self::ordered_pair(c(m + g), c(l + d)), 1);
            }
            (true, false) => return None,
        }
        Some(out)
    }

    fn fuse_twisted(&self, lambda: &CosetRep, eps: Z2, mu: &CosetRep, e1: Z2) -> FusionMultiset {
        let sum = lambda.vector() + mu.vector();
        let halving = self.lattice.halve_mod_l(&sum).expect("λ+μ ∈ L°");
        let mut out = Multiset::new();
        let solutions: Vec<CosetRep> = halving.map(|h| h.solutions).unwrap_or_default();
        for x in &solutions {
            let flip = match self.rule {
                TwistedRule::Refined => {
                    let beta = &sum - &x.vector().scale(2);
                    Z2::from_sign(self.lattice.quadratic_sign(lambda.vector(), &beta))
                }
                TwistedRule::Naive => Z2::ZERO,
            };
            out.add(OrbifoldLabel::Diag { lambda: x.clone(), eps: eps + e1 + flip }, 1);
        }
        for delta in self.discriminant.iter() {
            if solutions.contains(delta) {
                continue;
            }
            let other = self.canon(&(&sum - delta.vector()));
            if *delta < other {
                out.add(OrbifoldLabel::NonDiag { lambda: delta.clone(), mu: other }, 1);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{named, GramLattice};

    fn orb(g: crate::smith::Matrix<i64>) -> Orbifold {
        Orbifold::new(GramLattice::new(g).unwrap())
    }

    fn fuse(o: &Orbifold, a: &str, b: &str) -> String {
        o.fuse(&o.parse_label(a).unwrap(), &o.parse_label(b).unwrap()).to_string()
    }

    #[test]
    fn rank_one_products() {
        let o = orb(named::a1());
        assert_eq!(fuse(&o, "D(1/2;0)", "D(1/2;1)"), "D(0;1)");
        assert_eq!(fuse(&o, "N(1/2,0)", "N(1/2,0)"), "D(0;0) + D(0;1) + D(1/2;0) + D(1/2;1)");
        assert_eq!(fuse(&o, "T(0;0)", "T(0;1)"), "D(0;1) + D(1/2;0)");
        assert_eq!(fuse(&o, "T(0;0)", "T(1/2;0)"), "N(0,1/2)");
        assert_eq!(fuse(&o, "T(0;0)", "T(0;0)"), "D(0;0) + D(1/2;1)");
        assert_eq!(fuse(&o, "T(1/2;0)", "T(1/2;0)"), "D(0;0) + D(1/2;0)");
        assert_eq!(fuse(&o, "D(1/2;0)", "T(0;0)"), "T(0;1)");
    }

    #[test]
    fn identity_acts_trivially() {
        for g in [named::a1(), named::a2(), named::det7(), named::e8()] {
            let o = orb(g);
            let one = o.identity();
            for m in o.enumerate_modules() {
                assert_eq!(o.fuse(&one, m), Multiset::singleton(m.clone()));
                assert_eq!(o.fuse(m, &one), Multiset::singleton(m.clone()));
            }
        }
    }

    #[test]
    fn agrees_with_restriction_route() {
        for g in [named::a1(), named::a1_squared(), named::a2(), named::det7(), named::a3(), named::a1_cubed()] {
            let o = orb(g);
            let index = o.constituent_index();
            for a in o.enumerate_modules() {
                for b in o.enumerate_modules() {
                    let lifted = o.fuse_by_restriction(&index, a, b);
                    assert_eq!(lifted.as_ref(), Some(&o.fuse(a, b)), "{a} x {b}");
                }
            }
        }
    }

    #[test]
    fn naive_rule_disagrees_with_restriction_route() {
        let o = Orbifold::with_rule(GramLattice::new(named::a1()).unwrap(), TwistedRule::Naive);
        assert_eq!(fuse(&o, "T(0;0)", "T(0;1)"), "D(0;1) + D(1/2;1)");
    }
}
