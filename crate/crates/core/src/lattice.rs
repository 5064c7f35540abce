//! Even positive-definite lattices given by a Gram matrix, their duals and
//! the finite quotients L°/L, L/2L, L°/2L° and L°/2L.
//!
//! Vectors are exact rational coordinates in the basis `α_1, .., α_d` of L.
//! A vector `x` lies in L when its coordinates are integers and in L° when
//! `G x` is integral. Coset representatives are produced through the Smith
//! normal form `U G V = D`: for `x ∈ L°` the dual coordinates `y = G x` are
//! mapped to `z = U y`, reduced into `[0, d_i)` (or `[0, 2 d_i)` modulo 2L),
//! and mapped back as `V D^{-1} z`. The reduced tuple `z` is the sort key
//! that orders representatives everywhere downstream.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::smith::{self, Matrix, Smith};
use crate::Rational;

/// Rational coordinate vector `Σ x_i α_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualVector(pub Vec<Rational>);

impl DualVector {
    pub fn zero(dim: usize) -> Self {
        DualVector(vec![Rational::zero(); dim])
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        DualVector(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// Parses coordinates written as `"p/q"` or `"n"`.
    pub fn parse(coords: &[&str]) -> Result<Self> {
        coords
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map(DualVector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = Rational::from_integer(k);
        DualVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Integer coordinates, if all coordinates are integers.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.is_integral().then(|| self.0.iter().map(|x| x.to_integer()).collect())
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Add for &DualVector {
    type Output = DualVector;
    fn add(self, rhs: &DualVector) -> DualVector {
        DualVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DualVector {
    type Output = DualVector;
    fn sub(self, rhs: &DualVector) -> DualVector {
        DualVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &DualVector {
    type Output = DualVector;
    fn neg(self) -> DualVector {
        DualVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coord_strings().join(","))
    }
}

impl Serialize for DualVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coord_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DualVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        let refs: Vec<&str> = raw.iter().map(String::as_str).collect();
        DualVector::parse(&refs).map_err(D::Error::custom)
    }
}

/// `p/q` in lowest terms, integers without a denominator.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => s.parse::<i64>().map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// Which finite quotient a coset representative belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quotient {
    /// L°/L, the discriminant group.
    DualModLattice,
    /// L/2L.
    LatticeModTwoLattice,
    /// L°/2L°.
    DualModTwoDual,
    /// L°/2L, which labels the irreducible modules of the lattice algebra of √2L.
    DualModTwoLattice,
    /// `{γ ∈ L°/L : 2γ ∈ L}`.
    TwoTorsion,
}

/// Canonical representative of a coset; ordered by its reduced SNF key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetRep {
    key: Vec<i64>,
    vector: DualVector,
}

impl CosetRep {
    pub fn key(&self) -> &[i64] {
        &self.key
    }

    pub fn vector(&self) -> &DualVector {
        &self.vector
    }

    pub fn is_zero(&self) -> bool {
        self.key.iter().all(|&k| k == 0)
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.vector.fmt(f)
    }
}

/// An enumerated quotient: representatives in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSystem {
    pub quotient: Quotient,
    pub reps: Vec<CosetRep>,
}

impl CosetSystem {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CosetRep> {
        self.reps.iter()
    }
}

/// Result of solving `2x ≡ c (mod L)` over L°.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halving {
    pub particular: CosetRep,
    /// `particular + TwoTorsion`, canonical and sorted.
    pub solutions: Vec<CosetRep>,
}

/// A validated even positive-definite lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramLattice {
    gram: Matrix<i64>,
    det: i64,
    snf: Smith<i64>,
    invariants: Vec<i64>,
}

impl GramLattice {
    /// Validates a Gram matrix: square, symmetric, even diagonal, positive definite.
    pub fn new(gram: Matrix<i64>) -> Result<Self> {
        let dim = gram.len();
        if dim == 0 {
            return Err(Error::EmptyLattice);
        }
        for (row, r) in gram.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::NotSquare { row, len: r.len(), dim });
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        for (i, r) in gram.iter().enumerate() {
            if r[i].is_odd() {
                return Err(Error::NotEven { i, value: r[i] });
            }
        }
        let minors = smith::leading_minors(&gram);
        if let Some((k, &m)) = minors.iter().enumerate().find(|(_, &m)| m <= 0) {
            return Err(Error::NotPositiveDefinite { order: k + 1, minor: m });
        }
        let det = *minors.last().expect("dim >= 1");
        let snf = smith::smith_normal_form(&gram);
        let invariants = snf.invariants();
        debug_assert_eq!(invariants.iter().product::<i64>(), det);
        Ok(Self { gram, det, snf, invariants })
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    /// `l = |L°/L| = det G`.
    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn gram(&self) -> &Matrix<i64> {
        &self.gram
    }

    pub fn snf(&self) -> &Smith<i64> {
        &self.snf
    }

    /// Elementary divisors `d_1 | d_2 | ..`, with `Π d_i = l`.
    pub fn invariants(&self) -> &[i64] {
        &self.invariants
    }

    fn check_dim(&self, x: &DualVector) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(())
    }

    /// `xᵀ G y`.
    pub fn inner(&self, x: &DualVector, y: &DualVector) -> Result<Rational> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.inner_unchecked(x, y))
    }

    pub(crate) fn inner_unchecked(&self, x: &DualVector, y: &DualVector) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                acc += xi * yj * Rational::from_integer(self.gram[i][j]);
            }
        }
        acc
    }

    /// `⟨x, α_i⟩` for each basis vector.
    pub fn dual_coords(&self, x: &DualVector) -> Vec<Rational> {
        self.gram
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&x.0)
                    .fold(Rational::zero(), |acc, (&g, xi)| acc + xi * Rational::from_integer(g))
            })
            .collect()
    }

    fn integral_dual_coords(&self, x: &DualVector) -> Option<Vec<i64>> {
        let y = self.dual_coords(x);
        y.iter().all(|c| c.is_integer()).then(|| y.iter().map(|c| c.to_integer()).collect())
    }

    pub fn contains(&self, x: &DualVector) -> bool {
        x.dim() == self.dim() && x.is_integral()
    }

    pub fn dual_contains(&self, x: &DualVector) -> bool {
        x.dim() == self.dim() && self.integral_dual_coords(x).is_some()
    }

    pub fn require_dual(&self, x: &DualVector) -> Result<()> {
        self.check_dim(x)?;
        if self.dual_contains(x) {
            Ok(())
        } else {
            Err(Error::NotInDual(x.to_string()))
        }
    }

    pub fn require_lattice(&self, x: &DualVector) -> Result<()> {
        self.check_dim(x)?;
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::NotInLattice(x.to_string()))
        }
    }

    /// `V D^{-1} z`.
    fn from_snf_coords(&self, z: &[i64]) -> DualVector {
        let v = &self.snf.v;
        DualVector(
            (0..self.dim())
                .map(|i| {
                    (0..self.dim()).fold(Rational::zero(), |acc, j| {
                        acc + Rational::new(v[i][j] * z[j], self.invariants[j])
                    })
                })
                .collect(),
        )
    }

    /// `G^{-1} y` for integral dual coordinates.
    fn from_dual_coords(&self, y: &[i64]) -> DualVector {
        let z = smith::mat_vec(&self.snf.u, y);
        self.from_snf_coords(&z)
    }

    fn snf_key(&self, y: &[i64], scale: i64) -> Vec<i64> {
        smith::mat_vec(&self.snf.u, y)
            .iter()
            .zip(&self.invariants)
            .map(|(z, d)| z.mod_floor(&(d * scale)))
            .collect()
    }

    /// The stored representative of `x`'s coset in `quotient`.
    pub fn canonicalize(&self, x: &DualVector, quotient: Quotient) -> Result<CosetRep> {
        self.check_dim(x)?;
        let outside = || Error::NotInAmbientGroup(x.to_string());
        match quotient {
            Quotient::DualModLattice | Quotient::DualModTwoLattice | Quotient::TwoTorsion => {
                let y = self.integral_dual_coords(x).ok_or_else(outside)?;
                let scale = if quotient == Quotient::DualModTwoLattice { 2 } else { 1 };
                if quotient == Quotient::TwoTorsion && !self.contains(&x.scale(2)) {
                    return Err(outside());
                }
                let key = self.snf_key(&y, scale);
                let vector = self.from_snf_coords(&key);
                Ok(CosetRep { key, vector })
            }
            Quotient::LatticeModTwoLattice => {
                let n = x.to_integers().ok_or_else(outside)?;
                let key: Vec<i64> = n.iter().map(|c| c.mod_floor(&2)).collect();
                let vector = DualVector::from_integers(&key);
                Ok(CosetRep { key, vector })
            }
            Quotient::DualModTwoDual => {
                let y = self.integral_dual_coords(x).ok_or_else(outside)?;
                let key: Vec<i64> = y.iter().map(|c| c.mod_floor(&2)).collect();
                let vector = self.from_dual_coords(&key);
                Ok(CosetRep { key, vector })
            }
        }
    }

    /// Canonicalization for inputs already known to lie in the ambient group.
    pub(crate) fn canon(&self, x: &DualVector, quotient: Quotient) -> CosetRep {
        self.canonicalize(x, quotient)
            .unwrap_or_else(|e| panic!("internal invariant violated: {e}"))
    }

    /// All representatives of a quotient in canonical order.
    pub fn coset_reps(&self, quotient: Quotient) -> CosetSystem {
        let d = self.dim();
        let reps = match quotient {
            Quotient::DualModLattice | Quotient::DualModTwoLattice => {
                let scale = if quotient == Quotient::DualModLattice { 1 } else { 2 };
                let bounds: Vec<i64> = self.invariants.iter().map(|x| x * scale).collect();
                lex_tuples(&bounds)
                    .into_iter()
                    .map(|key| {
                        let vector = self.from_snf_coords(&key);
                        CosetRep { key, vector }
                    })
                    .collect()
            }
            Quotient::LatticeModTwoLattice => lex_tuples(&vec![2; d])
                .into_iter()
                .map(|key| {
                    let vector = DualVector::from_integers(&key);
                    CosetRep { key, vector }
                })
                .collect(),
            Quotient::DualModTwoDual => lex_tuples(&vec![2; d])
                .into_iter()
                .map(|key| {
                    let vector = self.from_dual_coords(&key);
                    CosetRep { key, vector }
                })
                .collect(),
            Quotient::TwoTorsion => self
                .coset_reps(Quotient::DualModLattice)
                .reps
                .into_iter()
                .filter(|r| self.contains(&r.vector.scale(2)))
                .collect(),
        };
        CosetSystem { quotient, reps }
    }

    /// 𝒯: representatives of L°/L.
    pub fn coset_reps_dual_mod_l(&self) -> CosetSystem {
        self.coset_reps(Quotient::DualModLattice)
    }

    /// 𝒮: representatives of L/2L.
    pub fn coset_reps_l_mod_2l(&self) -> CosetSystem {
        self.coset_reps(Quotient::LatticeModTwoLattice)
    }

    /// `{γ ∈ 𝒯 : 2γ ∈ L}`.
    pub fn two_torsion(&self) -> CosetSystem {
        self.coset_reps(Quotient::TwoTorsion)
    }

    /// Solves `2x ≡ c (mod L)` with `x ∈ L°`; `None` when no solution exists.
    pub fn halve_mod_l(&self, c: &DualVector) -> Result<Option<Halving>> {
        let cz = self.canonicalize(c, Quotient::DualModLattice)?;
        let mut z = Vec::with_capacity(self.dim());
        for (&zc, &d) in cz.key.iter().zip(&self.invariants) {
            if d.is_odd() {
                // 2 is invertible modulo odd d
                z.push((zc * ((d + 1) / 2)).mod_floor(&d));
            } else if zc.is_even() {
                z.push(zc / 2);
            } else {
                return Ok(None);
            }
        }
        let particular = CosetRep { vector: self.from_snf_coords(&z), key: z };
        let mut solutions: Vec<CosetRep> = self
            .two_torsion()
            .iter()
            .map(|g| self.canon(&(&particular.vector + &g.vector), Quotient::DualModLattice))
            .collect();
        solutions.sort();
        Ok(Some(Halving { particular, solutions }))
    }

    /// `(-1)^{⟨β,β⟩/2 + ⟨λ,β⟩}` for `λ ∈ L°`, `β ∈ L`.
    ///
    /// This quadratic refinement governs how the sign label of a twisted
    /// sector changes when its representative is moved within its L-coset.
    pub fn quadratic_sign(&self, lambda: &DualVector, beta: &DualVector) -> i8 {
        let half_norm = self.inner_unchecked(beta, beta) / Rational::from_integer(2);
        let e = half_norm + self.inner_unchecked(lambda, beta);
        debug_assert!(e.is_integer());
        if e.to_integer().is_even() {
            1
        } else {
            -1
        }
    }
}

fn lex_tuples(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..b).map(move |k| {
                    let mut p = prefix.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out
}

/// JSON input document `{"gram": [[..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GramDocument {
    pub gram: Matrix<i64>,
}

impl GramDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("gram document: {e}")))
    }

    pub fn into_lattice(self) -> Result<GramLattice> {
        GramLattice::new(self.gram)
    }
}

/// Gram matrices of a few root lattices, used by tests and examples.
pub mod named {
    use super::Matrix;

    fn cartan(n: usize, edges: &[(usize, usize)]) -> Matrix<i64> {
        let mut g = vec![vec![0; n]; n];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in edges {
            g[a][b] = -1;
            g[b][a] = -1;
        }
        g
    }

    pub fn a1() -> Matrix<i64> {
        vec![vec![2]]
    }

    pub fn a1_squared() -> Matrix<i64> {
        vec![vec![2, 0], vec![0, 2]]
    }

    pub fn a1_cubed() -> Matrix<i64> {
        vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]
    }

    pub fn a2() -> Matrix<i64> {
        cartan(2, &[(0, 1)])
    }

    pub fn a3() -> Matrix<i64> {
        cartan(3, &[(0, 1), (1, 2)])
    }

    pub fn d4() -> Matrix<i64> {
        cartan(4, &[(0, 1), (1, 2), (1, 3)])
    }

    pub fn e8() -> Matrix<i64> {
        cartan(8, &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)])
    }

    pub fn a4() -> Matrix<i64> {
        cartan(4, &[(0, 1), (1, 2), (2, 3)])
    }

    /// Rank 2, determinant 7.
    pub fn det7() -> Matrix<i64> {
        vec![vec![2, 1], vec![1, 4]]
    }

    /// A2 ⊕ ⟨4⟩, determinant 12.
    pub fn a2_plus_4() -> Matrix<i64> {
        vec![vec![2, -1, 0], vec![-1, 2, 0], vec![0, 0, 4]]
    }
}
