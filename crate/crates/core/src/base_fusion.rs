//! Irreducible modules and fusion rules of the lattice algebra of √2L and of
//! its θ-fixed subalgebra.
//!
//! All √2L data is kept in unscaled L coordinates: a dual vector `λ` stands
//! for `λ/√2 + √2L`, so every "∈ √2L" condition becomes "∈ 2L".

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::character::{chi_eval, chi_shift, SignCharacter};
use crate::error::{Error, Result};
use crate::lattice::{CosetRep, DualVector, GramLattice, Quotient};
use crate::multiset::Multiset;
use crate::report::Report;
use crate::QSqrt;

/// A `±` label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_value(v: i8) -> Self {
        if v > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn times(self, v: i8) -> Self {
        Self::from_value(self.value() * v)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Irreducible module `V_{λ/√2 + √2L}`, labelled by `λ ∈ L°/2L`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VlLabel(CosetRep);

impl VlLabel {
    pub fn new(lattice: &GramLattice, lambda: &DualVector) -> Result<Self> {
        lattice.canonicalize(lambda, Quotient::DualModTwoLattice).map(VlLabel)
    }

    pub fn lambda(&self) -> &DualVector {
        self.0.vector()
    }
}

impl fmt::Display for VlLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({})", self.0)
    }
}

impl Serialize for VlLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("lambda", self.lambda())?;
        m.end()
    }
}

/// Irreducible modules of the θ-fixed subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VlPlusLabel {
    /// `V_{λ/√2+√2L}` with `λ ∉ L`; `λ` and `-λ` give the same module.
    UntwistedNonSplit(CosetRep),
    /// `V^±_{λ/√2+√2L}` with `λ ∈ L/2L`.
    UntwistedSplit(CosetRep, Sign),
    /// `V^{T_χ,±}`.
    TwistedSplit(SignCharacter, Sign),
}

impl VlPlusLabel {
    pub fn non_split(lattice: &GramLattice, lambda: &DualVector) -> Result<Self> {
        lattice.require_dual(lambda)?;
        if lattice.contains(lambda) {
            return Err(Error::NotInAmbientGroup(format!(
                "{lambda} (non-split labels need λ ∉ L)"
            )));
        }
        let a = lattice.canonicalize(lambda, Quotient::DualModTwoLattice)?;
        let b = lattice.canonicalize(&-lambda, Quotient::DualModTwoLattice)?;
        Ok(VlPlusLabel::UntwistedNonSplit(a.min(b)))
    }

    pub fn split(lattice: &GramLattice, lambda: &DualVector, sign: Sign) -> Result<Self> {
        let r = lattice.canonicalize(lambda, Quotient::LatticeModTwoLattice)?;
        Ok(VlPlusLabel::UntwistedSplit(r, sign))
    }

    pub fn twisted(chi: SignCharacter, sign: Sign) -> Self {
        VlPlusLabel::TwistedSplit(chi, sign)
    }

    pub fn is_twisted(&self) -> bool {
        matches!(self, VlPlusLabel::TwistedSplit(..))
    }
}

impl fmt::Display for VlPlusLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VlPlusLabel::UntwistedNonSplit(l) => write!(f, "V+({l})"),
            VlPlusLabel::UntwistedSplit(l, s) => write!(f, "V+({l};{s})"),
            VlPlusLabel::TwistedSplit(c, s) => write!(f, "VT({c};{s})"),
        }
    }
}

impl Serialize for VlPlusLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            VlPlusLabel::UntwistedNonSplit(l) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("kind", "untwisted_non_split")?;
                m.serialize_entry("lambda", l.vector())?;
                m.end()
            }
            VlPlusLabel::UntwistedSplit(l, sign) => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("kind", "untwisted_split")?;
                m.serialize_entry("lambda", l.vector())?;
                m.serialize_entry("sign", sign.symbol())?;
                m.end()
            }
            VlPlusLabel::TwistedSplit(c, sign) => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("kind", "twisted_split")?;
                m.serialize_entry("character", &c.to_sign_string())?;
                m.serialize_entry("sign", sign.symbol())?;
                m.end()
            }
        }
    }
}

pub type BaseFusionMultiset = Multiset<VlPlusLabel>;

/// Whether some signed sum `±λ ± μ ± γ` lies in 2L.
pub fn is_admissible_triple(
    lattice: &GramLattice,
    lambda: &DualVector,
    mu: &DualVector,
    gamma: &DualVector,
) -> Result<bool> {
    for x in [lambda, mu, gamma] {
        lattice.require_dual(x)?;
    }
    Ok(admissible(lambda, mu, gamma))
}

fn in_two_lattice(x: &DualVector) -> bool {
    x.0.iter().all(|c| c.is_integer() && c.to_integer() % 2 == 0)
}

fn admissible(a: &DualVector, b: &DualVector, c: &DualVector) -> bool {
    let ab = a + b;
    let a_b = a - b;
    in_two_lattice(&(&ab + c))
        || in_two_lattice(&(&ab - c))
        || in_two_lattice(&(&a_b + c))
        || in_two_lattice(&(c - &a_b))
}

/// `V_λ ⊠ V_μ = V_{λ+μ}`.
pub fn fuse_vl(lattice: &GramLattice, a: &VlLabel, b: &VlLabel) -> VlLabel {
    VlLabel(lattice.canon(&(a.lambda() + b.lambda()), Quotient::DualModTwoLattice))
}

/// Contragredient of `V_λ` is `V_{-λ}`.
pub fn dual_vl(lattice: &GramLattice, a: &VlLabel) -> VlLabel {
    VlLabel(lattice.canon(&-a.lambda(), Quotient::DualModTwoLattice))
}

/// Every irreducible module of the fixed-point subalgebra is self-dual.
pub fn dual_base(m: &VlPlusLabel) -> VlPlusLabel {
    m.clone()
}

/// Quantum dimension: 1 for split, 2 for non-split, `√l` for twisted modules.
pub fn qdim_base(lattice: &GramLattice, m: &VlPlusLabel) -> QSqrt {
    let l = lattice.det();
    match m {
        VlPlusLabel::UntwistedSplit(..) => QSqrt::integer(1, l),
        VlPlusLabel::UntwistedNonSplit(..) => QSqrt::integer(2, l),
        VlPlusLabel::TwistedSplit(..) => QSqrt::sqrt_of(l),
    }
}

/// One line of the fusion-rule table, keyed by the shape of the first module.
///
/// Each row carries a lattice condition (admissibility, a `π` value, a
/// character value or a shifted-character equality); a [`RowMutation`]
/// negates exactly that condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    /// non-split; (non-split, non-split), admissible
    NonSplitNonSplitNonSplit,
    /// non-split; (split ±, non-split) either order, admissible
    NonSplitSplitNonSplit,
    /// non-split; (T_χ ±, T_χ^{(λ)} ±)
    NonSplitTwistedSame,
    /// non-split; (T_χ ±, T_χ^{(λ)} ∓)
    NonSplitTwistedOpposite,
    /// split +; (non-split, non-split), admissible
    PlusNonSplit,
    /// split +; (± , ±) when π = 1
    PlusSplitSame,
    /// split +; (± , ∓) when π = -1
    PlusSplitOpposite,
    /// split +; (T_χ ±, T_{χ shifted} ±) when χ(√2λ) = 1
    PlusTwistedSame,
    /// split +; (T_χ ±, T_{χ shifted} ∓) when χ(√2λ) = -1
    PlusTwistedOpposite,
    MinusNonSplit,
    /// split -; (±, ∓) when π = 1
    MinusSplitOpposite,
    /// split -; (±, ±) when π = -1
    MinusSplitSame,
    /// split -; (T ±, T ∓) when χ(√2λ) = 1
    MinusTwistedOpposite,
    /// split -; (T ±, T ±) when χ(√2λ) = -1
    MinusTwistedSame,
    /// T_χ +; (non-split λ, T_χ^{(λ)} ±) either order
    TwistedPlusNonSplit,
    /// T_χ +; (split ±, T ±) either order when χ(√2λ) = 1
    TwistedPlusSplitSame,
    /// T_χ +; (split ±, T ∓) either order when χ(√2λ) = -1
    TwistedPlusSplitOpposite,
    TwistedMinusNonSplit,
    /// T_χ -; (split ±, T ∓) when χ(√2λ) = 1
    TwistedMinusSplitOpposite,
    /// T_χ -; (split ±, T ±) when χ(√2λ) = -1
    TwistedMinusSplitSame,
}

impl Row {
    pub const ALL: [Row; 20] = [
        Row::NonSplitNonSplitNonSplit,
        Row::NonSplitSplitNonSplit,
        Row::NonSplitTwistedSame,
        Row::NonSplitTwistedOpposite,
        Row::PlusNonSplit,
        Row::PlusSplitSame,
        Row::PlusSplitOpposite,
        Row::PlusTwistedSame,
        Row::PlusTwistedOpposite,
        Row::MinusNonSplit,
        Row::MinusSplitOpposite,
        Row::MinusSplitSame,
        Row::MinusTwistedOpposite,
        Row::MinusTwistedSame,
        Row::TwistedPlusNonSplit,
        Row::TwistedPlusSplitSame,
        Row::TwistedPlusSplitOpposite,
        Row::TwistedMinusNonSplit,
        Row::TwistedMinusSplitOpposite,
        Row::TwistedMinusSplitSame,
    ];
}

/// Negates the lattice condition of a single table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowMutation(pub Row);

/// Fusion rules of the θ-fixed subalgebra of the √2L lattice algebra.
///
/// `N(a, b; c)` is symmetric in `a, b` and, since every module is self-dual,
/// in all three arguments, so a triple is accepted when any permutation of
/// it matches a table row.
#[derive(Debug, Clone)]
pub struct BaseFusion {
    lattice: GramLattice,
    labels: Vec<VlPlusLabel>,
    index: HashMap<VlPlusLabel, usize>,
    mutation: Option<RowMutation>,
    /// L°/2L° representatives, indexed by the parity pattern of their dual coordinates.
    by_parity: Vec<DualVector>,
    discriminant: Vec<DualVector>,
}

impl BaseFusion {
    pub fn new(lattice: GramLattice) -> Self {
        let labels = enumerate_vlplus(&lattice);
        let index = labels.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let by_parity = lattice.coset_reps(Quotient::DualModTwoDual).iter().map(|r| r.vector().clone()).collect();
        let discriminant = lattice.coset_reps_dual_mod_l().iter().map(|r| r.vector().clone()).collect();
        Self { lattice, labels, index, mutation: None, by_parity, discriminant }
    }

    /// The same rules with one row's condition negated.
    pub fn with_mutation(&self, mutation: RowMutation) -> Self {
        Self { mutation: Some(mutation), ..self.clone() }
    }

    pub fn index_of(&self, m: &VlPlusLabel) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Labels that can possibly occur in `a ⊠ b`.
    ///
    /// Every row forces the third weight to be `±λ ± μ` (untwisted pair), a
    /// shifted character (mixed pair), or a weight whose shift links the two
    /// characters (twisted pair), so only those are tested. A mutated table
    /// may fire anywhere, so it is tested against every label.
    fn candidates(&self, a: &VlPlusLabel, b: &VlPlusLabel) -> Vec<VlPlusLabel> {
        if self.mutation.is_some() {
            return self.labels.clone();
        }
        let l = &self.lattice;
        let untwisted = |x: &DualVector| -> Vec<VlPlusLabel> {
            if l.contains(x) {
                vec![
                    VlPlusLabel::split(l, x, Sign::Plus).expect("x ∈ L"),
                    VlPlusLabel::split(l, x, Sign::Minus).expect("x ∈ L"),
                ]
            } else {
                vec![VlPlusLabel::non_split(l, x).expect("x ∈ L° \\ L")]
            }
        };
        let weight = |m: &VlPlusLabel| match m {
            VlPlusLabel::UntwistedNonSplit(r) | VlPlusLabel::UntwistedSplit(r, _) => Some(r.vector().clone()),
            VlPlusLabel::TwistedSplit(..) => None,
        };
        let mut out = match (a, b, weight(a), weight(b)) {
            (_, _, Some(x), Some(y)) => [&x + &y, &x - &y].iter().flat_map(|z| untwisted(z)).collect(),
            (VlPlusLabel::TwistedSplit(chi, _), _, None, Some(x)) | (_, VlPlusLabel::TwistedSplit(chi, _), Some(x), None) => {
                let shifted = self.shift(chi, &x);
                vec![VlPlusLabel::twisted(shifted.clone(), Sign::Plus), VlPlusLabel::twisted(shifted, Sign::Minus)]
            }
            (VlPlusLabel::TwistedSplit(c1, _), VlPlusLabel::TwistedSplit(c2, _), ..) => {
                let pattern = c1.signs().iter().zip(c2.signs()).fold(0usize, |acc, (s, t)| 2 * acc + usize::from(s != t));
                let base = &self.by_parity[pattern];
                self.discriminant.iter().flat_map(|y| untwisted(&(base + &y.scale(2)))).collect()
            }
            _ => unreachable!("weights are absent exactly for twisted labels"),
        };
        out.sort();
        out.dedup();
        out
    }

    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    /// All irreducible labels in canonical order.
    pub fn labels(&self) -> &[VlPlusLabel] {
        &self.labels
    }

    pub fn vl_labels(&self) -> Vec<VlLabel> {
        self.lattice
            .coset_reps(Quotient::DualModTwoLattice)
            .reps
            .into_iter()
            .map(VlLabel)
            .collect()
    }

    /// `N(a, b; c) ∈ {0, 1}`.
    pub fn rule(&self, a: &VlPlusLabel, b: &VlPlusLabel, c: &VlPlusLabel) -> u32 {
        let perms = [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)];
        let hit = perms
            .iter()
            .any(|&(x, y, z)| Row::ALL.iter().any(|&r| self.row_matches(r, x, y, z)));
        u32::from(hit)
    }

    /// `{c : N(a, b; c) = 1}`, found by testing candidates against the table.
    pub fn fuse(&self, a: &VlPlusLabel, b: &VlPlusLabel) -> BaseFusionMultiset {
        self.candidates(a, b).into_iter().filter(|c| self.rule(a, b, c) == 1).collect()
    }

    /// Like [`Self::fuse`] but testing every label as a candidate.
    pub fn fuse_exhaustive(&self, a: &VlPlusLabel, b: &VlPlusLabel) -> BaseFusionMultiset {
        self.labels.iter().filter(|c| self.rule(a, b, c) == 1).cloned().collect()
    }

    fn table(&self) -> Vec<Vec<usize>> {
        let n = self.labels.len();
        (0..n * n)
            .into_par_iter()
            .map(|k| {
                let mut row: Vec<usize> = self
                    .fuse(&self.labels[k / n], &self.labels[k % n])
                    .keys()
                    .map(|c| self.index_of(c).expect("canonical label"))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect()
    }

    /// Identity, commutativity, self-dual pairing, qdim homomorphism,
    /// associativity and the simple-current characterization, exhaustively.
    pub fn verify(&self) -> Report {
        let n = self.labels.len();
        let t = &self.table();
        let l = self.lattice.det();
        let name = |i: usize| self.labels[i].to_string();
        let one = self
            .index_of(&VlPlusLabel::split(&self.lattice, &DualVector::zero(self.lattice.dim()), Sign::Plus).expect("0 ∈ L"))
            .expect("identity label");
        let mut report = Report::new();

        let w = (0..n).find(|&a| t[one * n + a] != [a] || t[a * n + one] != [a]);
        report.record("identity", "V+(0;+) is a two-sided unit", w.map(|a| format!("unit fails on {}", name(a))));

        let w = (0..n * n).find(|&k| t[k] != t[(k % n) * n + k / n]);
        report.record("commutativity", format!("{} ordered pairs", n * n), w.map(|k| format!("{} x {}", name(k / n), name(k % n))));

        let w = (0..n).find(|&a| !t[a * n + a].contains(&one));
        report.record("self-dual pairing", "a x a contains the unit", w.map(|a| format!("{} x {} misses the unit", name(a), name(a))));

        let q: Vec<QSqrt> = self.labels.iter().map(|m| qdim_base(&self.lattice, m)).collect();
        let w = (0..n * n).find(|&k| {
            let sum = t[k].iter().fold(QSqrt::integer(0, l), |acc, &c| acc + q[c].clone());
            sum != q[k / n].clone() * q[k % n].clone()
        });
        report.record("qdim homomorphism", "qdim(a) qdim(b) = sum qdim(c)", w.map(|k| format!("{} x {}", name(k / n), name(k % n))));

        let w = (0..n).into_par_iter().find_map_first(|a| {
            let mut lhs = vec![0u32; n];
            let mut rhs = vec![0u32; n];
            for b in 0..n {
                for c in 0..n {
                    lhs.iter_mut().for_each(|x| *x = 0);
                    rhs.iter_mut().for_each(|x| *x = 0);
                    for &e in &t[a * n + b] {
                        for &d in &t[e * n + c] {
                            lhs[d] += 1;
                        }
                    }
                    for &f in &t[b * n + c] {
                        for &d in &t[a * n + f] {
                            rhs[d] += 1;
                        }
                    }
                    if let Some(d) = (0..n).find(|&d| lhs[d] != rhs[d]) {
                        return Some(format!("a={}, b={}, c={}, d={}: {} vs {}", name(a), name(b), name(c), name(d), lhs[d], rhs[d]));
                    }
                }
            }
            None
        });
        report.record("associativity", format!("{} triples", n * n * n), w);

        let unit = QSqrt::integer(1, l);
        let w = (0..n).find(|&a| {
            let by_fusion = (0..n).all(|b| t[a * n + b].len() == 1);
            by_fusion != (q[a] == unit)
        });
        report.record("simple currents", "qdim 1 exactly when every product is irreducible", w.map(|a| name(a)));
        report
    }

    fn row_matches(&self, row: Row, m1: &VlPlusLabel, m2: &VlPlusLabel, m3: &VlPlusLabel) -> bool {
        match self.row_condition(row, m1, m2, m3) {
            Some(cond) => cond != (self.mutation == Some(RowMutation(row))),
            None => false,
        }
    }

    fn shift(&self, chi: &SignCharacter, lambda: &DualVector) -> SignCharacter {
        chi_shift(&self.lattice, chi, lambda).expect("label vectors lie in L°")
    }

    fn pi(&self, a: &DualVector, b: &DualVector) -> i8 {
        crate::character::pi_pairing(&self.lattice, a, b).expect("split labels lie in L")
    }

    /// `None` when the shapes (and fixed side constraints) do not fit the
    /// row; otherwise the row's lattice condition.
    fn row_condition(
        &self,
        row: Row,
        m1: &VlPlusLabel,
        m2: &VlPlusLabel,
        m3: &VlPlusLabel,
    ) -> Option<bool> {
        use Sign::{Minus, Plus};
        use VlPlusLabel::{TwistedSplit as T, UntwistedNonSplit as NS, UntwistedSplit as S};

        // split ± and twisted T in either order
        fn split_twisted<'a>(
            x: &'a VlPlusLabel,
            y: &'a VlPlusLabel,
        ) -> Option<(&'a CosetRep, Sign, &'a SignCharacter, Sign)> {
            match (x, y) {
                (S(l, s), T(c, t)) | (T(c, t), S(l, s)) => Some((l, *s, c, *t)),
                _ => None,
            }
        }
        fn nonsplit_twisted<'a>(
            x: &'a VlPlusLabel,
            y: &'a VlPlusLabel,
        ) -> Option<(&'a CosetRep, &'a SignCharacter)> {
            match (x, y) {
                (NS(l), T(c, _)) | (T(c, _), NS(l)) => Some((l, c)),
                _ => None,
            }
        }

        match row {
            Row::NonSplitNonSplitNonSplit => match (m1, m2, m3) {
                (NS(l), NS(m), NS(g)) => Some(admissible(l.vector(), m.vector(), g.vector())),
                _ => None,
            },
            Row::NonSplitSplitNonSplit => match (m1, m2, m3) {
                (NS(l), S(m, _), NS(g)) | (NS(l), NS(g), S(m, _)) => {
                    Some(admissible(l.vector(), m.vector(), g.vector()))
                }
                _ => None,
            },
            Row::NonSplitTwistedSame | Row::NonSplitTwistedOpposite => match (m1, m2, m3) {
                (NS(l), T(a, s2), T(b, s3)) => {
                    let want_same = row == Row::NonSplitTwistedSame;
                    ((s2 == s3) == want_same).then(|| *b == self.shift(a, l.vector()))
                }
                _ => None,
            },
            Row::PlusNonSplit | Row::MinusNonSplit => {
                let sign = if row == Row::PlusNonSplit { Plus } else { Minus };
                match (m1, m2, m3) {
                    (S(l, s), NS(m), NS(g)) if *s == sign => {
                        Some(admissible(l.vector(), m.vector(), g.vector()))
                    }
                    _ => None,
                }
            }
            Row::PlusSplitSame | Row::PlusSplitOpposite | Row::MinusSplitOpposite | Row::MinusSplitSame => {
                let (sign, same, pi_wanted) = match row {
                    Row::PlusSplitSame => (Plus, true, 1),
                    Row::PlusSplitOpposite => (Plus, false, -1),
                    Row::MinusSplitOpposite => (Minus, false, 1),
                    _ => (Minus, true, -1),
                };
                match (m1, m2, m3) {
                    (S(l, s1), S(m, s2), S(g, s3))
                        if *s1 == sign
                            && (s2 == s3) == same
                            && admissible(l.vector(), m.vector(), g.vector()) =>
                    {
                        Some(self.pi(l.vector(), m.vector()) == pi_wanted)
                    }
                    _ => None,
                }
            }
            Row::PlusTwistedSame | Row::PlusTwistedOpposite | Row::MinusTwistedOpposite | Row::MinusTwistedSame => {
                let (sign, same, chi_wanted) = match row {
                    Row::PlusTwistedSame => (Plus, true, 1),
                    Row::PlusTwistedOpposite => (Plus, false, -1),
                    Row::MinusTwistedOpposite => (Minus, false, 1),
                    _ => (Minus, true, -1),
                };
                match (m1, m2, m3) {
                    (S(l, s1), T(a, s2), T(b, s3))
                        if *s1 == sign && (s2 == s3) == same && *b == self.shift(a, l.vector()) =>
                    {
                        Some(chi_eval(a, l.vector()).expect("split labels lie in L") == chi_wanted)
                    }
                    _ => None,
                }
            }
            Row::TwistedPlusNonSplit | Row::TwistedMinusNonSplit => {
                let sign = if row == Row::TwistedPlusNonSplit { Plus } else { Minus };
                match m1 {
                    T(a, s1) if *s1 == sign => {
                        let (l, b) = nonsplit_twisted(m2, m3)?;
                        Some(*b == self.shift(a, l.vector()))
                    }
                    _ => None,
                }
            }
            Row::TwistedPlusSplitSame
            | Row::TwistedPlusSplitOpposite
            | Row::TwistedMinusSplitOpposite
            | Row::TwistedMinusSplitSame => {
                let (sign, same, chi_wanted) = match row {
                    Row::TwistedPlusSplitSame => (Plus, true, 1),
                    Row::TwistedPlusSplitOpposite => (Plus, false, -1),
                    Row::TwistedMinusSplitOpposite => (Minus, false, 1),
                    _ => (Minus, true, -1),
                };
                match m1 {
                    T(a, s1) if *s1 == sign => {
                        let (l, s2, b, s3) = split_twisted(m2, m3)?;
                        if (s2 == s3) != same || *b != self.shift(a, l.vector()) {
                            return None;
                        }
                        Some(chi_eval(a, l.vector()).expect("split labels lie in L") == chi_wanted)
                    }
                    _ => None,
                }
            }
        }
    }
}

/// Non-split, then split, then twisted labels, each in canonical order.
pub fn enumerate_vlplus(lattice: &GramLattice) -> Vec<VlPlusLabel> {
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for r in lattice.coset_reps(Quotient::DualModTwoLattice).iter() {
        if lattice.contains(r.vector()) {
            continue;
        }
        let label = VlPlusLabel::non_split(lattice, r.vector()).expect("rep lies in L° \\ L");
        if seen.insert(label.clone()) {
            out.push(label);
        }
    }
    for r in lattice.coset_reps_l_mod_2l().iter() {
        for s in [Sign::Plus, Sign::Minus] {
            out.push(VlPlusLabel::UntwistedSplit(r.clone(), s));
        }
    }
    for chi in SignCharacter::all(lattice.dim()) {
        for s in [Sign::Plus, Sign::Minus] {
            out.push(VlPlusLabel::TwistedSplit(chi.clone(), s));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::chi_of_lambda;
    use crate::lattice::named;

    fn v(c: &[&str]) -> DualVector {
        DualVector::parse(c).unwrap()
    }

    fn a1() -> GramLattice {
        GramLattice::new(named::a1()).unwrap()
    }

    #[test]
    fn admissible_triples_rank_one() {
        let l = a1();
        assert!(is_admissible_triple(&l, &v(&["1/2"]), &v(&["0"]), &v(&["1/2"])).unwrap());
        assert!(!is_admissible_triple(&l, &v(&["1/2"]), &v(&["1/2"]), &v(&["1/2"])).unwrap());
        assert!(is_admissible_triple(&l, &v(&["0"]), &v(&["0"]), &v(&["0"])).unwrap());
        assert!(is_admissible_triple(&l, &v(&["1/4"]), &v(&["0"]), &v(&["0"])).is_err());
    }

    #[test]
    fn fuse_vl_rank_one() {
        let l = a1();
        let lab = |s: &str| VlLabel::new(&l, &v(&[s])).unwrap();
        assert_eq!(fuse_vl(&l, &lab("1/2"), &lab("1/2")), lab("1"));
        assert_eq!(fuse_vl(&l, &lab("0"), &lab("3/2")), lab("3/2"));
        assert_eq!(fuse_vl(&l, &lab("3/2"), &lab("1/2")), lab("0"));
        assert_eq!(dual_vl(&l, &lab("1/2")), lab("3/2"));
        assert_eq!(dual_vl(&l, &lab("0")), lab("0"));
    }

    #[test]
    fn label_counts() {
        for g in [named::a1(), named::a1_squared(), named::a2(), named::det7(), named::d4()] {
            let l = GramLattice::new(g).unwrap();
            let d = 1i64 << l.dim();
            let non_split = (d * l.det() - d) / 2;
            assert_eq!(enumerate_vlplus(&l).len() as i64, non_split + 2 * d + 2 * d);
        }
    }

    #[test]
    fn worked_products_rank_one() {
        let l = a1();
        let bf = BaseFusion::new(l.clone());
        let ns = VlPlusLabel::non_split(&l, &v(&["1/2"])).unwrap();
        let one = VlPlusLabel::split(&l, &v(&["0"]), Sign::Plus).unwrap();
        assert_eq!(bf.fuse(&ns, &one), Multiset::singleton(ns.clone()));
        assert_eq!(bf.fuse(&one, &one), Multiset::singleton(one.clone()));
        let expected: BaseFusionMultiset = [
            VlPlusLabel::split(&l, &v(&["0"]), Sign::Plus).unwrap(),
            VlPlusLabel::split(&l, &v(&["0"]), Sign::Minus).unwrap(),
            VlPlusLabel::split(&l, &v(&["1"]), Sign::Plus).unwrap(),
            VlPlusLabel::split(&l, &v(&["1"]), Sign::Minus).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(bf.fuse(&ns, &ns), expected);
    }

    #[test]
    fn twisted_square_contains_split_iff_character_trivial() {
        for g in [named::a1(), named::a2(), named::det7()] {
            let l = GramLattice::new(g).unwrap();
            let bf = BaseFusion::new(l.clone());
            let chi0 = chi_of_lambda(&l, &DualVector::zero(l.dim())).unwrap();
            let t = VlPlusLabel::twisted(chi0.clone(), Sign::Plus);
            let prod = bf.fuse(&t, &t);
            for r in l.coset_reps_l_mod_2l().iter() {
                let shifted = chi_shift(&l, &chi0, r.vector()).unwrap();
                if shifted != chi0 {
                    continue;
                }
                let plus = VlPlusLabel::split(&l, r.vector(), Sign::Plus).unwrap();
                let expect = chi_eval(&chi0, r.vector()).unwrap() == 1;
                assert_eq!(prod.contains(&plus), expect, "λ = {r}");
            }
        }
    }

    #[test]
    fn self_duality_and_qdims() {
        let l = a1();
        for m in enumerate_vlplus(&l) {
            assert_eq!(dual_base(&m), m);
        }
        let ns = VlPlusLabel::non_split(&l, &v(&["1/2"])).unwrap();
        assert_eq!(qdim_base(&l, &ns), QSqrt::integer(2, 2));
        let one = VlPlusLabel::split(&l, &v(&["0"]), Sign::Plus).unwrap();
        assert_eq!(qdim_base(&l, &one), QSqrt::integer(1, 2));
        let chi0 = chi_of_lambda(&l, &v(&["0"])).unwrap();
        assert_eq!(qdim_base(&l, &VlPlusLabel::twisted(chi0, Sign::Plus)), QSqrt::sqrt_of(2));
    }

    #[test]
    fn non_split_identifies_negatives() {
        let l = a1();
        assert_eq!(
            VlPlusLabel::non_split(&l, &v(&["1/2"])).unwrap(),
            VlPlusLabel::non_split(&l, &v(&["-1/2"])).unwrap()
        );
        assert_eq!(
            VlPlusLabel::non_split(&l, &v(&["1/2"])).unwrap(),
            VlPlusLabel::non_split(&l, &v(&["3/2"])).unwrap()
        );
        assert!(VlPlusLabel::non_split(&l, &v(&["1"])).is_err());
    }

    fn small_lattices() -> Vec<GramLattice> {
        [named::a1(), named::a1_squared(), named::a2(), named::det7()]
            .into_iter()
            .map(|g| GramLattice::new(g).unwrap())
            .collect()
    }

    #[test]
    fn candidate_superset_loses_nothing() {
        for l in small_lattices().into_iter().chain([GramLattice::new(named::a3()).unwrap()]) {
            let bf = BaseFusion::new(l);
            for a in bf.labels() {
                for b in bf.labels() {
                    assert_eq!(bf.fuse(a, b), bf.fuse_exhaustive(a, b), "{a} x {b}");
                }
            }
        }
    }

    #[test]
    fn suite_passes_on_small_lattices() {
        for l in small_lattices() {
            let r = BaseFusion::new(l).verify();
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn every_row_mutation_is_detected() {
        let lattices: Vec<BaseFusion> = small_lattices().into_iter().map(BaseFusion::new).collect();
        for row in Row::ALL {
            let caught = lattices.iter().any(|bf| !bf.with_mutation(RowMutation(row)).verify().all_passed());
            assert!(caught, "{row:?}");
        }
    }
}
