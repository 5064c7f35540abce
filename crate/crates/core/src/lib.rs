//! Exact fusion data for the 2-permutation orbifold `(V_L ⊗ V_L)^{Z2}` of a
//! positive-definite even lattice `L`.
//!
//! The integer kernels ([`smith`], [`qsqrt`]) are generic over the scalar;
//! the rest of the crate fixes it through the aliases below.

pub mod base_fusion;
pub mod character;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod multiset;
pub mod orbifold;
pub mod qsqrt;
pub mod report;
pub mod smith;

/// Exact rational coordinates.
pub type Rational = num_rational::Ratio<i64>;
/// Elements of `Q(√l)`.
pub type QSqrt = qsqrt::QuadraticSurd<i64>;
/// Integer matrices.
pub type IntMatrix = smith::Matrix<i64>;

pub use base_fusion::{BaseFusion, Sign, VlLabel, VlPlusLabel};
pub use character::SignCharacter;
pub use error::{Error, Result};
pub use lattice::{CosetRep, DualVector, GramLattice, Quotient};
pub use multiset::Multiset;
pub use orbifold::{FusionMultiset, FusionTable, Orbifold, OrbifoldLabel, TwistedRule, Z2};
pub use report::Report;
