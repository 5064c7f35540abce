//! Irreducible modules of the 2-permutation orbifold `(V_L ⊗ V_L)^{Z2}`.

mod decompose;
mod fusion;
mod table;
mod verify;

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::base_fusion::BaseFusion;
use crate::error::{Error, Result};
use crate::lattice::{CosetRep, CosetSystem, DualVector, GramLattice, Quotient};
use crate::multiset::Multiset;
use crate::QSqrt;

pub use decompose::Constituent;
pub use table::{FusionTable, DEFAULT_MAX_DET};
pub use verify::VerifyOptions;

/// Element of Z/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z2(u8);

impl Z2 {
    pub const ZERO: Z2 = Z2(0);
    pub const ONE: Z2 = Z2(1);

    pub fn new(v: i64) -> Self {
        Z2(v.rem_euclid(2) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// `1` when the sign is `-1`.
    pub fn from_sign(s: i8) -> Self {
        Z2(u8::from(s < 0))
    }

    /// `(-1)^ε`.
    pub fn sign(self) -> i8 {
        if self.0 == 0 {
            1
        } else {
            -1
        }
    }
}

impl Add for Z2 {
    type Output = Z2;
    fn add(self, rhs: Z2) -> Z2 {
        Z2(self.0 ^ rhs.0)
    }
}

impl fmt::Display for Z2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Irreducible orbifold module. Lattice parts are canonical representatives
/// of L°/L; the derived order (Diag < NonDiag < Twisted, then by
/// representative) is the global output order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbifoldLabel {
    /// Symmetric (`ε = 0`) or antisymmetric (`ε = 1`) part of `V_{λ+L} ⊗ V_{λ+L}`.
    Diag { lambda: CosetRep, eps: Z2 },
    /// `V_{λ+L} ⊗ V_{μ+L} ≅ V_{μ+L} ⊗ V_{λ+L}` restricted, with `λ < μ`.
    NonDiag { lambda: CosetRep, mu: CosetRep },
    /// Twisted-sector module.
    Twisted { lambda: CosetRep, eps: Z2 },
}

impl OrbifoldLabel {
    pub fn kind(&self) -> &'static str {
        match self {
            OrbifoldLabel::Diag { .. } => "diag",
            OrbifoldLabel::NonDiag { .. } => "non_diag",
            OrbifoldLabel::Twisted { .. } => "twisted",
        }
    }

    pub fn is_twisted(&self) -> bool {
        matches!(self, OrbifoldLabel::Twisted { .. })
    }
}

fn coords(v: &DualVector) -> String {
    v.coord_strings().join(",")
}

impl fmt::Display for OrbifoldLabel {
    /// `D(λ;ε)`, `N(λ,μ)` or `T(λ;ε)`; this is also the accepted input syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbifoldLabel::Diag { lambda, eps } => write!(f, "D({};{eps})", coords(lambda.vector())),
            OrbifoldLabel::NonDiag { lambda, mu } => {
                write!(f, "N({},{})", coords(lambda.vector()), coords(mu.vector()))
            }
            OrbifoldLabel::Twisted { lambda, eps } => write!(f, "T({};{eps})", coords(lambda.vector())),
        }
    }
}

impl Serialize for OrbifoldLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("kind", self.kind())?;
        match self {
            OrbifoldLabel::Diag { lambda, eps } | OrbifoldLabel::Twisted { lambda, eps } => {
                m.serialize_entry("lambda", lambda.vector())?;
                m.serialize_entry("eps", &eps.value())?;
            }
            OrbifoldLabel::NonDiag { lambda, mu } => {
                m.serialize_entry("lambda", lambda.vector())?;
                m.serialize_entry("mu", mu.vector())?;
            }
        }
        m.end()
    }
}

pub type FusionMultiset = Multiset<OrbifoldLabel>;

/// Which closed-form rules govern the twisted-sector sign labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistedRule {
    /// Sign labels transported through the quadratic refinement
    /// `q_λ(β) = (-1)^{⟨β,β⟩/2 + ⟨λ,β⟩}` whenever a representative moves.
    Refined,
    /// Sign labels left untouched when a representative moves; fails
    /// associativity already for the root lattice A1. Kept as a negative control.
    Naive,
}

/// Everything needed to work with the orbifold of a fixed lattice.
#[derive(Debug, Clone)]
pub struct Orbifold {
    lattice: GramLattice,
    base: BaseFusion,
    discriminant: CosetSystem,
    lattice_mod_two: CosetSystem,
    torsion: CosetSystem,
    rule: TwistedRule,
    labels: Vec<OrbifoldLabel>,
    index: HashMap<OrbifoldLabel, usize>,
}

impl Orbifold {
    pub fn new(lattice: GramLattice) -> Self {
        Self::with_rule(lattice, TwistedRule::Refined)
    }

    pub fn with_rule(lattice: GramLattice, rule: TwistedRule) -> Self {
        let discriminant = lattice.coset_reps(Quotient::DualModLattice);
        let lattice_mod_two = lattice.coset_reps_l_mod_2l();
        let torsion = lattice.two_torsion();
        let base = BaseFusion::new(lattice.clone());
        let mut o = Self {
            lattice,
            base,
            discriminant,
            lattice_mod_two,
            torsion,
            rule,
            labels: Vec::new(),
            index: HashMap::new(),
        };
        o.labels = o.build_labels();
        o.index = o.labels.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        o
    }

    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    pub fn base(&self) -> &BaseFusion {
        &self.base
    }

    pub fn rule(&self) -> TwistedRule {
        self.rule
    }

    /// 𝒯, the representatives of L°/L.
    pub fn discriminant(&self) -> &CosetSystem {
        &self.discriminant
    }

    /// `{γ ∈ 𝒯 : 2γ ∈ L}`.
    pub fn two_torsion(&self) -> &CosetSystem {
        &self.torsion
    }

    /// All irreducible modules in the global order; `(l² + 7l)/2` of them.
    pub fn enumerate_modules(&self) -> &[OrbifoldLabel] {
        &self.labels
    }

    /// Position of a canonical label in [`Self::enumerate_modules`].
    pub fn index_of(&self, m: &OrbifoldLabel) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn build_labels(&self) -> Vec<OrbifoldLabel> {
        let t = &self.discriminant.reps;
        let mut out = Vec::with_capacity((t.len() * t.len() + 7 * t.len()) / 2);
        for eps in [Z2::ZERO, Z2::ONE] {
            for r in t {
                out.push(OrbifoldLabel::Diag { lambda: r.clone(), eps });
            }
        }
        for (i, a) in t.iter().enumerate() {
            for b in &t[i + 1..] {
                out.push(OrbifoldLabel::NonDiag { lambda: a.clone(), mu: b.clone() });
            }
        }
        for eps in [Z2::ZERO, Z2::ONE] {
            for r in t {
                out.push(OrbifoldLabel::Twisted { lambda: r.clone(), eps });
            }
        }
        out.sort();
        out
    }

    fn canon(&self, x: &DualVector) -> CosetRep {
        self.lattice.canon(x, Quotient::DualModLattice)
    }

    pub fn diag(&self, lambda: &DualVector, eps: Z2) -> Result<OrbifoldLabel> {
        let lambda = self.lattice.canonicalize(lambda, Quotient::DualModLattice)?;
        Ok(OrbifoldLabel::Diag { lambda, eps })
    }

    /// Fails with `DegeneratePair` when `λ ≡ μ (mod L)`.
    pub fn non_diag(&self, lambda: &DualVector, mu: &DualVector) -> Result<OrbifoldLabel> {
        let a = self.lattice.canonicalize(lambda, Quotient::DualModLattice)?;
        let b = self.lattice.canonicalize(mu, Quotient::DualModLattice)?;
        if a == b {
            return Err(Error::DegeneratePair(lambda.to_string(), mu.to_string()));
        }
        Ok(Self::ordered_pair(a, b))
    }

    fn ordered_pair(a: CosetRep, b: CosetRep) -> OrbifoldLabel {
        if a < b {
            OrbifoldLabel::NonDiag { lambda: a, mu: b }
        } else {
            OrbifoldLabel::NonDiag { lambda: b, mu: a }
        }
    }

    /// `Twisted(λ, ε)` for any representative `λ`; moving `λ` to its
    /// canonical representative may flip `ε`.
    pub fn twisted(&self, lambda: &DualVector, eps: Z2) -> Result<OrbifoldLabel> {
        self.lattice.require_dual(lambda)?;
        Ok(self.twisted_unchecked(lambda, eps))
    }

    pub(crate) fn twisted_unchecked(&self, lambda: &DualVector, eps: Z2) -> OrbifoldLabel {
        let c = self.canon(lambda);
        let eps = match self.rule {
            TwistedRule::Refined => {
                let beta = lambda - c.vector();
                eps + Z2::from_sign(self.lattice.quadratic_sign(c.vector(), &beta))
            }
            TwistedRule::Naive => eps,
        };
        OrbifoldLabel::Twisted { lambda: c, eps }
    }

    /// Quantum dimension: 1, 2 or `√l`.
    pub fn qdim(&self, m: &OrbifoldLabel) -> QSqrt {
        let l = self.lattice.det();
        match m {
            OrbifoldLabel::Diag { .. } => QSqrt::integer(1, l),
            OrbifoldLabel::NonDiag { .. } => QSqrt::integer(2, l),
            OrbifoldLabel::Twisted { .. } => QSqrt::sqrt_of(l),
        }
    }

    /// Global dimension `Σ qdim(M)²`; equals `4l²`.
    pub fn glob(&self) -> QSqrt {
        let l = self.lattice.det();
        self.labels
            .iter()
            .map(|m| {
                let q = self.qdim(m);
                q.clone() * q
            })
            .fold(QSqrt::integer(0, l), |acc, x| acc + x)
    }

    /// Contragredient module: negate the lattice data, keep `ε`.
    pub fn dual(&self, m: &OrbifoldLabel) -> OrbifoldLabel {
        match m {
            OrbifoldLabel::Diag { lambda, eps } => {
                OrbifoldLabel::Diag { lambda: self.canon(&-lambda.vector()), eps: *eps }
            }
            OrbifoldLabel::NonDiag { lambda, mu } => {
                Self::ordered_pair(self.canon(&-lambda.vector()), self.canon(&-mu.vector()))
            }
            OrbifoldLabel::Twisted { lambda, eps } => self.twisted_unchecked(&-lambda.vector(), *eps),
        }
    }

    /// Simple currents are exactly the modules of quantum dimension 1.
    pub fn is_simple_current(&self, m: &OrbifoldLabel) -> bool {
        self.qdim(m) == QSqrt::integer(1, self.lattice.det())
    }

    /// `Diag(0, 0)`, the orbifold algebra itself.
    pub fn identity(&self) -> OrbifoldLabel {
        OrbifoldLabel::Diag { lambda: self.canon(&DualVector::zero(self.lattice.dim())), eps: Z2::ZERO }
    }

    /// Parses `D(λ;ε)`, `N(λ,μ)` (2d coordinates) or `T(λ;ε)`.
    pub fn parse_label(&self, text: &str) -> Result<OrbifoldLabel> {
        let bad = || Error::Parse(format!("invalid label {text:?}; expected D(coords;eps), N(coords,coords) or T(coords;eps)"));
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut chars = t.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let d = self.lattice.dim();
        let parse_coords = |s: &str| -> Result<DualVector> {
            let parts: Vec<&str> = s.split(',').collect();
            if parts.iter().any(|p| p.is_empty()) {
                return Err(bad());
            }
            let v = DualVector::parse(&parts)?;
            if v.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, found: v.dim() });
            }
            Ok(v)
        };
        match kind.to_ascii_uppercase() {
            'D' | 'T' => {
                let (c, e) = inner.split_once(';').ok_or_else(bad)?;
                let lambda = parse_coords(c)?;
                let eps = match e {
                    "0" => Z2::ZERO,
                    "1" => Z2::ONE,
                    _ => return Err(bad()),
                };
                if kind.eq_ignore_ascii_case(&'D') {
                    self.lattice.require_dual(&lambda)?;
                    self.diag(&lambda, eps)
                } else {
                    self.twisted(&lambda, eps)
                }
            }
            'N' => {
                let parts: Vec<&str> = inner.split(',').collect();
                if parts.len() != 2 * d {
                    return Err(Error::Parse(format!(
                        "{text:?}: N(...) takes {} coordinates, got {}",
                        2 * d,
                        parts.len()
                    )));
                }
                let lambda = parse_coords(&parts[..d].join(","))?;
                let mu = parse_coords(&parts[d..].join(","))?;
                self.lattice.require_dual(&lambda)?;
                self.lattice.require_dual(&mu)?;
                self.non_diag(&lambda, &mu)
            }
            _ => Err(bad()),
        }
    }
}
