use rayon::prelude::*;

use super::{FusionTable, Orbifold, OrbifoldLabel, DEFAULT_MAX_DET};
use crate::error::Result;
use crate::multiset::Multiset;
use crate::report::Report;
use crate::QSqrt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_det: i64,
    /// Also recompute every product through the restriction to
    /// `V_{√2L} ⊗ V_{√2L}^+`.
    pub restriction_route: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_det: DEFAULT_MAX_DET, restriction_route: true }
    }
}

fn first_failure<T: Send>(items: impl IntoParallelIterator<Item = T>, f: impl Fn(T) -> Option<String> + Sync + Send) -> Option<String> {
    // find_map_first keeps the reported witness deterministic
    items.into_par_iter().find_map_first(f)
}

impl Orbifold {
    /// Runs every structural check against the full fusion table.
    pub fn verify(&self, options: VerifyOptions) -> Result<Report> {
        let table = self.fusion_table(options.max_det)?;
        let mut report = Report::new();
        self.check_classification(&mut report);
        self.check_ring_axioms(&table, &mut report);
        self.check_associativity(&table, &mut report);
        self.check_qdims(&table, &mut report);
        self.check_restriction(&mut report, options.restriction_route);
        self.check_non_diag_cases(&mut report);
        Ok(report)
    }

    fn check_classification(&self, report: &mut Report) {
        let l = self.lattice.det();
        let n = self.labels.len() as i64;
        let expected = (l * l + 7 * l) / 2;
        report.record(
            "module count",
            format!("{n} = (l^2+7l)/2 with l = {l}"),
            (n != expected).then(|| format!("{n} modules, expected {expected}")),
        );
        let glob = self.glob();
        let want = QSqrt::integer(4 * l * l, l);
        report.record(
            "global dimension",
            format!("glob = {glob} = 4l^2"),
            (glob != want).then(|| format!("glob = {glob}, expected {want}")),
        );
        let one = QSqrt::integer(1, l);
        let low = self.labels.iter().find(|m| self.qdim(m).partial_cmp(&one) == Some(std::cmp::Ordering::Less));
        report.record("qdim lower bound", "every qdim >= 1", low.map(|m| format!("qdim {m} = {}", self.qdim(m))));
    }

    fn check_ring_axioms(&self, t: &FusionTable, report: &mut Report) {
        let n = t.len();
        let one = self.index_of(&self.identity()).expect("identity is a label");
        let w = (0..n).find_map(|a| {
            let p = t.product(one, a);
            (p != [(a, 1)] || t.product(a, one) != [(a, 1)]).then(|| format!("{} x {} = {}", self.labels[one], self.labels[a], self.show(p)))
        });
        report.record("identity", format!("{} is a two-sided unit", self.labels[one]), w);

        let w = first_failure(0..n * n, |k| {
            let (a, b) = (k / n, k % n);
            (t.product(a, b) != t.product(b, a)).then(|| {
                format!("{} x {} = {} but reversed = {}", self.labels[a], self.labels[b], self.show(t.product(a, b)), self.show(t.product(b, a)))
            })
        });
        report.record("commutativity", format!("{} ordered pairs", n * n), w);

        let w = first_failure(0..n * n, |k| {
            let (a, b) = (k / n, k % n);
            let dual = self.dual(&self.labels[a]) == self.labels[b];
            let got = t.n(a, b, one);
            (got != u32::from(dual)).then(|| {
                format!("N({}, {}; {}) = {got}, dual = {}", self.labels[a], self.labels[b], self.labels[one], self.dual(&self.labels[a]))
            })
        });
        report.record("duality pairing", "N(a,b;1) = 1 exactly when b = a'", w);

        let w = first_failure(0..n * n, |k| {
            let (a, b) = (k / n, k % n);
            let lhs = self.fuse(&self.labels[a], &self.labels[b]).map_keys(|c| self.dual(c));
            let rhs = self.fuse(&self.dual(&self.labels[a]), &self.dual(&self.labels[b]));
            (lhs != rhs).then(|| format!("({} x {})' = {lhs} but a' x b' = {rhs}", self.labels[a], self.labels[b]))
        });
        report.record("dual is an automorphism", "(a x b)' = a' x b'", w);

        let w = first_failure(0..n * n, |k| {
            let (a, b) = (k / n, k % n);
            t.product(a, b)
                .iter()
                .find(|e| e.1 != 1)
                .map(|e| format!("N({}, {}; {}) = {}", self.labels[a], self.labels[b], self.labels[e.0], e.1))
        });
        report.record("multiplicity one", "every nonzero N equals 1", w);
    }

    fn check_associativity(&self, t: &FusionTable, report: &mut Report) {
        let n = t.len();
        let w = first_failure(0..n, |a| {
            let mut lhs = vec![0u32; n];
            let mut rhs = vec![0u32; n];
            for b in 0..n {
                for c in 0..n {
                    lhs.iter_mut().for_each(|x| *x = 0);
                    rhs.iter_mut().for_each(|x| *x = 0);
                    for &(e, k) in t.product(a, b) {
                        for &(d, m) in t.product(e, c) {
                            lhs[d] += k * m;
                        }
                    }
                    for &(f, k) in t.product(b, c) {
                        for &(d, m) in t.product(a, f) {
                            rhs[d] += k * m;
                        }
                    }
                    if let Some(d) = (0..n).find(|&d| lhs[d] != rhs[d]) {
                        return Some(format!(
                            "a={}, b={}, c={}, d={}: (ab)c has {} but a(bc) has {}",
                            self.labels[a], self.labels[b], self.labels[c], self.labels[d], lhs[d], rhs[d]
                        ));
                    }
                }
            }
            None
        });
        report.record("associativity", format!("{} triples", n * n * n), w);
    }

    fn check_qdims(&self, t: &FusionTable, report: &mut Report) {
        let n = t.len();
        let l = self.lattice.det();
        let q: Vec<QSqrt> = self.labels.iter().map(|m| self.qdim(m)).collect();
        let w = first_failure(0..n * n, |k| {
            let (a, b) = (k / n, k % n);
            let sum = t
                .product(a, b)
                .iter()
                .fold(QSqrt::integer(0, l), |acc, &(c, m)| acc + q[c].scale(i64::from(m)));
            let prod = q[a].clone() * q[b].clone();
            (sum != prod).then(|| format!("{} x {}: qdim product {prod}, sum {sum}", self.labels[a], self.labels[b]))
        });
        report.record("qdim homomorphism", "qdim(a) qdim(b) = sum N(a,b;c) qdim(c)", w);

        let w = self.labels.iter().find_map(|m| {
            let sc = self.is_simple_current(m);
            let by_fusion = self.labels.iter().all(|x| self.fuse(m, x).total() == 1);
            (sc != by_fusion).then(|| format!("{m}: qdim says {sc}, fusion says {by_fusion}"))
        });
        report.record("simple currents", "qdim 1 exactly when every product is irreducible", w);

        let rank = 1i64 << self.lattice.dim();
        let w = self.labels.iter().find_map(|m| {
            let total = self
                .decompose(m)
                .iter()
                .fold(QSqrt::integer(0, l), |acc, c| acc + self.constituent_qdim(c));
            let want = self.qdim(m).scale(rank);
            (total != want).then(|| format!("{m}: constituents give {total}, expected {want}"))
        });
        report.record("decomposition qdims", "sum of constituent qdims = 2^d qdim", w);
    }

    fn check_restriction(&self, report: &mut Report, full: bool) {
        let w = self.labels.iter().filter(|m| m.is_twisted()).find_map(|m| {
            let parts = self.decompose(m);
            if parts.len() != 1 << self.lattice.dim() || parts.iter().any(|c| !c.vlplus.is_twisted()) {
                return Some(format!("{m}: malformed twisted decomposition"));
            }
            let back = self.induce(&parts[0]);
            (back.as_ref() != Some(m)).then(|| format!("{m}: induced back to {back:?}"))
        });
        report.record("twisted induction", "2^d twisted constituents; induction round-trips", w);
        if !full {
            return;
        }
        let index = self.constituent_index();
        let n = self.labels.len();
        let w = first_failure(0..n * n, |k| {
            let (a, b) = (&self.labels[k / n], &self.labels[k % n]);
            let lifted = self.fuse_by_restriction(&index, a, b);
            let direct = self.fuse(a, b);
            (lifted.as_ref() != Some(&direct)).then(|| {
                let shown = lifted.map_or("not a sum of modules".to_string(), |m| m.to_string());
                format!("{a} x {b}: closed form {direct}, by restriction {shown}")
            })
        });
        report.record("restriction route", "closed form equals the product computed over V x V+", w);
    }

    fn check_non_diag_cases(&self, report: &mut Report) {
        let pairs: Vec<(&OrbifoldLabel, &OrbifoldLabel)> = self
            .labels
            .iter()
            .filter(|m| matches!(m, OrbifoldLabel::NonDiag { .. }))
            .flat_map(|a| self.labels.iter().filter(|m| matches!(m, OrbifoldLabel::NonDiag { .. })).map(move |b| (a, b)))
            .collect();
        let w = first_failure(pairs, |(a, b)| {
            let (OrbifoldLabel::NonDiag { lambda, mu }, OrbifoldLabel::NonDiag { lambda: g, mu: d }) = (a, b) else {
                unreachable!()
            };
            let unified = self.fuse(a, b);
            let mut covered = false;
            for (x, y) in [(lambda, mu), (mu, lambda)] {
                for (u, v) in [(g, d), (d, g)] {
                    if let Some(cases) = self.fuse_non_diag_cases(x.vector(), y.vector(), u.vector(), v.vector()) {
                        covered = true;
                        if cases != unified {
                            return Some(format!("({x} {y}) x ({u} {v}): cases give {cases}, unified rule {unified}"));
                        }
                    }
                }
            }
            (!covered).then(|| format!("{a} x {b}: no orientation matches a case"))
        });
        report.record("non-diagonal case split", "unified rule equals the case split in every orientation", w);
    }

    fn show(&self, p: &[(usize, u32)]) -> String {
        let m: Multiset<OrbifoldLabel> = p.iter().map(|&(c, k)| (self.labels[c].clone(), k)).fold(Multiset::new(), |mut acc, (c, k)| {
            acc.add(c, k);
            acc
        });
        m.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{named, GramLattice};
    use crate::orbifold::TwistedRule;

    #[test]
    fn small_lattices_pass() {
        for g in [named::a1(), named::e8(), named::a2(), named::a1_squared(), named::det7()] {
            let o = Orbifold::new(GramLattice::new(g).unwrap());
            let r = o.verify(VerifyOptions::default()).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn naive_rule_fails_associativity_with_witness() {
        let o = Orbifold::with_rule(GramLattice::new(named::a1()).unwrap(), TwistedRule::Naive);
        let r = o.verify(VerifyOptions::default()).unwrap();
        let c = r.get("associativity").unwrap();
        assert!(!c.passed);
        assert!(c.detail.starts_with("a="), "{}", c.detail);
    }
}
