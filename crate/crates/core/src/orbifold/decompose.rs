//! Restriction of orbifold modules to `V_{√2L} ⊗ V_{√2L}^+` and the inverse
//! induction, plus an independent route to fusion products through it.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::{OrbifoldLabel, Orbifold, Z2};
use crate::base_fusion::{fuse_vl, Sign, VlLabel, VlPlusLabel};
use crate::character::chi_of_lambda;
use crate::lattice::DualVector;
use crate::multiset::Multiset;
use crate::QSqrt;

/// An irreducible `V_{√2L} ⊗ V_{√2L}^+`-module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Constituent {
    pub vl: VlLabel,
    pub vlplus: VlPlusLabel,
}

impl fmt::Display for Constituent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}", self.vl, self.vlplus)
    }
}

impl Orbifold {
    /// `(-1)^{Σ_{i<j} n_i n_j ⟨α_i,α_j⟩}` for `α = Σ n_i α_i`, `n_i ∈ {0,1}`.
    ///
    /// Sign of the split module paired with `V_α` inside the orbifold algebra.
    pub fn split_sign(&self, alpha: &DualVector) -> i8 {
        let n = alpha.to_integers().expect("lattice vector");
        let g = self.lattice.gram();
        let mut odd = false;
        for i in 0..n.len() {
            for j in i + 1..n.len() {
                if n[i] & 1 == 1 && n[j] & 1 == 1 && g[i][j] & 1 == 1 {
                    odd = !odd;
                }
            }
        }
        if odd {
            -1
        } else {
            1
        }
    }

    /// The simple current `V_α ⊗ V^{s(α)}_α`, one for each `α ∈ L/2L`.
    pub fn algebra_constituents(&self) -> Vec<Constituent> {
        self.decompose(&self.identity())
    }

    /// The `2^d` constituents, indexed by `α ∈ L/2L` in canonical order.
    pub fn decompose(&self, m: &OrbifoldLabel) -> Vec<Constituent> {
        let l = &self.lattice;
        let vl = |x: &DualVector| VlLabel::new(l, x).expect("dual vector");
        self.lattice_mod_two
            .iter()
            .map(|a| {
                let alpha = a.vector();
                match m {
                    OrbifoldLabel::NonDiag { lambda, mu } => {
                        let (x, y) = (lambda.vector(), mu.vector());
                        Constituent {
                            vl: vl(&(&(x + y) + alpha)),
                            vlplus: VlPlusLabel::non_split(l, &(&(x - y) + alpha)).expect("λ ≢ μ"),
                        }
                    }
                    OrbifoldLabel::Diag { lambda, eps } => {
                        let sign = Sign::from_value(eps.sign() * self.split_sign(alpha));
                        Constituent {
                            vl: vl(&(&lambda.vector().scale(2) + alpha)),
                            vlplus: VlPlusLabel::split(l, alpha, sign).expect("α ∈ L"),
                        }
                    }
                    OrbifoldLabel::Twisted { lambda, eps } => {
                        let x = lambda.vector() + alpha;
                        let sign = eps.sign() * self.lattice.quadratic_sign(lambda.vector(), alpha);
                        Constituent {
                            vl: vl(&x),
                            vlplus: VlPlusLabel::twisted(
                                chi_of_lambda(l, &x).expect("dual vector"),
                                Sign::from_value(sign),
                            ),
                        }
                    }
                }
            })
            .collect()
    }

    /// Quantum dimension of a constituent over `V_{√2L} ⊗ V_{√2L}^+`.
    pub fn constituent_qdim(&self, c: &Constituent) -> QSqrt {
        crate::base_fusion::qdim_base(&self.lattice, &c.vlplus)
    }

    /// Fusion of constituents: `V_x ⊗ B` with `V_y ⊗ B'`.
    pub fn fuse_constituents(&self, a: &Constituent, b: &Constituent) -> Multiset<Constituent> {
        let vl = fuse_vl(&self.lattice, &a.vl, &b.vl);
        self.base
            .fuse(&a.vlplus, &b.vlplus)
            .map_keys(|p| Constituent { vl: vl.clone(), vlplus: p.clone() })
    }

    /// Induces a twisted-sector constituent up to the orbifold algebra.
    ///
    /// `None` unless the character of the twisted factor matches the
    /// `V_{√2L}` weight, i.e. the orbit under the simple currents is a
    /// genuine orbifold module.
    pub fn induce(&self, w: &Constituent) -> Option<OrbifoldLabel> {
        let VlPlusLabel::TwistedSplit(chi, sign) = &w.vlplus else {
            return None;
        };
        let x = w.vl.lambda();
        if chi_of_lambda(&self.lattice, x).ok()? != *chi {
            return None;
        }
        let mut orbit: Vec<Constituent> = self
            .algebra_constituents()
            .iter()
            .flat_map(|j| self.fuse_constituents(j, w).keys().cloned().collect::<Vec<_>>())
            .collect();
        orbit.sort();
        orbit.dedup();
        let label = self.twisted_unchecked(x, Z2::from_sign(sign.value()));
        let mut expected = self.decompose(&label);
        expected.sort();
        (orbit == expected).then_some(label)
    }

    /// Map from every constituent to the orbifold module containing it.
    pub fn constituent_index(&self) -> HashMap<Constituent, usize> {
        let mut out = HashMap::new();
        for (i, m) in self.labels.iter().enumerate() {
            for c in self.decompose(m) {
                let prev = out.insert(c, i);
                assert!(prev.is_none(), "constituent shared by two modules");
            }
        }
        out
    }

    /// Fusion product computed by restricting to `V_{√2L} ⊗ V_{√2L}^+`:
    /// fuse one constituent of `a` with every constituent of `b`, and read
    /// off each orbifold module from any of its constituents.
    ///
    /// Returns `None` if the restricted product is not a sum of whole
    /// orbifold modules.
    pub fn fuse_by_restriction(
        &self,
        index: &HashMap<Constituent, usize>,
        a: &OrbifoldLabel,
        b: &OrbifoldLabel,
    ) -> Option<Multiset<OrbifoldLabel>> {
        let wa = self.decompose(a).swap_remove(0);
        let mut restricted: Multiset<Constituent> = Multiset::new();
        for wb in self.decompose(b) {
            restricted.extend(self.fuse_constituents(&wa, &wb).iter().map(|(c, n)| (c.clone(), n)));
        }
        let mut counts: HashMap<usize, Vec<u32>> = HashMap::new();
        for (c, n) in restricted.iter() {
            counts.entry(*index.get(c)?).or_default().push(n);
        }
        let mut out = Multiset::new();
        let per_module = self.lattice_mod_two.len();
        for (i, ns) in counts {
            if ns.len() != per_module || ns.iter().any(|&n| n != ns[0]) {
                return None;
            }
            out.add(self.labels[i].clone(), ns[0]);
        }
        Some(out)
    }
}
