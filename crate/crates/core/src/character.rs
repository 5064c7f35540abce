//! Sign characters of √2L/2√2L attached to dual vectors.
//!
//! A character is stored by its values on the generators `√2 α_i`. Values on
//! other lattice vectors come from the homomorphism property; the generator
//! formula `(-1)^{⟨α,α⟩/2 + ⟨λ,α⟩}` does not extend verbatim to composite
//! `α` because the cross terms `⟨α_i, α_j⟩` may be odd.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{DualVector, GramLattice};
use crate::Rational;

/// `signs[i] = χ(√2 α_i)`, each `+1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignCharacter {
    signs: Vec<i8>,
}

fn parity_sign(x: &Rational) -> i8 {
    debug_assert!(x.is_integer());
    if x.to_integer().is_even() {
        1
    } else {
        -1
    }
}

impl SignCharacter {
    pub fn from_signs(signs: Vec<i8>) -> Self {
        assert!(signs.iter().all(|s| *s == 1 || *s == -1), "signs must be ±1");
        Self { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    /// Pointwise product; characters form a group under it.
    pub fn product(&self, other: &Self) -> Self {
        Self { signs: self.signs.iter().zip(&other.signs).map(|(a, b)| a * b).collect() }
    }

    /// All `2^d` characters in lexicographic order of their sign strings
    /// (`+` before `-`).
    pub fn all(dim: usize) -> Vec<Self> {
        (0..1u64 << dim)
            .map(|mask| Self {
                signs: (0..dim).map(|i| if mask >> (dim - 1 - i) & 1 == 1 { -1 } else { 1 }).collect(),
            })
            .collect()
    }

    /// `+`/`-` string of length `d`.
    pub fn to_sign_string(&self) -> String {
        self.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
    }

    pub fn parse_sign_string(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' | '−' => Ok(-1),
                _ => Err(Error::Parse(format!("invalid character string {s:?}"))),
            })
            .collect::<Result<Vec<i8>>>()
            .map(|signs| Self { signs })
    }
}

impl fmt::Display for SignCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sign_string())
    }
}

/// `χ_λ(√2 α_i) = (-1)^{⟨α_i,α_i⟩/2 + ⟨λ,α_i⟩}`.
pub fn chi_of_lambda(lattice: &GramLattice, lambda: &DualVector) -> Result<SignCharacter> {
    lattice.require_dual(lambda)?;
    let y = lattice.dual_coords(lambda);
    let signs = (0..lattice.dim())
        .map(|i| {
            let half = Rational::from_integer(lattice.gram()[i][i] / 2);
            parity_sign(&(half + y[i]))
        })
        .collect();
    Ok(SignCharacter { signs })
}

/// `χ(√2 α)` for `α = Σ n_i α_i ∈ L`, extended multiplicatively from the generators.
pub fn chi_eval(chi: &SignCharacter, alpha: &DualVector) -> Result<i8> {
    if alpha.dim() != chi.dim() {
        return Err(Error::DimensionMismatch { expected: chi.dim(), found: alpha.dim() });
    }
    let n = alpha.to_integers().ok_or_else(|| Error::NotInLattice(alpha.to_string()))?;
    Ok(n.iter()
        .zip(&chi.signs)
        .filter(|(k, _)| k.is_odd())
        .fold(1, |acc, (_, &s)| acc * s))
}

/// `χ^{(λ/√2)}`: multiply each generator value by `(-1)^{⟨λ, α_i⟩}`.
pub fn chi_shift(lattice: &GramLattice, chi: &SignCharacter, lambda: &DualVector) -> Result<SignCharacter> {
    lattice.require_dual(lambda)?;
    let y = lattice.dual_coords(lambda);
    let signs = chi.signs.iter().zip(&y).map(|(&s, yi)| s * parity_sign(yi)).collect();
    Ok(SignCharacter { signs })
}

/// `π_{λ,μ} = (-1)^{⟨λ,μ⟩}`, defined when the pairing is an integer.
pub fn pi_pairing(lattice: &GramLattice, lambda: &DualVector, mu: &DualVector) -> Result<i8> {
    let p = lattice.inner(lambda, mu)?;
    if !p.is_integer() {
        return Err(Error::NonIntegralPairing(crate::lattice::format_rational(&p)));
    }
    Ok(parity_sign(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{named, Quotient};
    use std::collections::BTreeSet;

    fn v(c: &[&str]) -> DualVector {
        DualVector::parse(c).unwrap()
    }

    fn a1() -> GramLattice {
        GramLattice::new(named::a1()).unwrap()
    }

    #[test]
    fn chi_of_lambda_rank_one() {
        let l = a1();
        assert_eq!(chi_of_lambda(&l, &v(&["0"])).unwrap().signs(), &[-1]);
        assert_eq!(chi_of_lambda(&l, &v(&["1/2"])).unwrap().signs(), &[1]);
        assert_eq!(chi_of_lambda(&l, &v(&["3/2"])).unwrap().signs(), &[1]);
        assert!(matches!(chi_of_lambda(&l, &v(&["1/4"])), Err(Error::NotInDual(_))));
    }

    #[test]
    fn chi_eval_rank_one() {
        let l = a1();
        let chi0 = chi_of_lambda(&l, &v(&["0"])).unwrap();
        assert_eq!(chi_eval(&chi0, &v(&["1"])).unwrap(), -1);
        assert_eq!(chi_eval(&chi0, &v(&["0"])).unwrap(), 1);
        assert_eq!(chi_eval(&chi0, &v(&["2"])).unwrap(), 1);
        assert!(matches!(chi_eval(&chi0, &v(&["1/2"])), Err(Error::NotInLattice(_))));
    }

    #[test]
    fn chi_shift_rank_one() {
        let l = a1();
        let chi0 = chi_of_lambda(&l, &v(&["0"])).unwrap();
        let half = chi_shift(&l, &chi0, &v(&["1/2"])).unwrap();
        assert_eq!(half, chi_of_lambda(&l, &v(&["1/2"])).unwrap());
        assert_eq!(chi_shift(&l, &chi0, &v(&["0"])).unwrap(), chi0);
        assert_eq!(chi_shift(&l, &chi0, &v(&["1"])).unwrap(), chi_of_lambda(&l, &v(&["1"])).unwrap());
    }

    #[test]
    fn pi_pairing_rank_one() {
        let l = a1();
        assert_eq!(pi_pairing(&l, &v(&["1"]), &v(&["1"])).unwrap(), 1);
        assert_eq!(pi_pairing(&l, &v(&["1/2"]), &v(&["1"])).unwrap(), -1);
        assert_eq!(pi_pairing(&l, &v(&["0"]), &v(&["1/2"])).unwrap(), 1);
        assert!(matches!(
            pi_pairing(&l, &v(&["1/2"]), &v(&["1/2"])),
            Err(Error::NonIntegralPairing(_))
        ));
    }

    fn test_lattices() -> Vec<GramLattice> {
        [named::a1(), named::a1_squared(), named::a2(), named::a3(), named::det7(), named::d4()]
            .into_iter()
            .map(|g| GramLattice::new(g).unwrap())
            .collect()
    }

    #[test]
    fn chi_is_affine_homomorphism() {
        for l in test_lattices() {
            let chi0 = chi_of_lambda(&l, &DualVector::zero(l.dim())).unwrap();
            let t = l.coset_reps(Quotient::DualModTwoLattice);
            for a in t.iter() {
                for b in t.iter() {
                    let lhs = chi_of_lambda(&l, &(a.vector() + b.vector())).unwrap().product(&chi0);
                    let rhs = chi_of_lambda(&l, a.vector())
                        .unwrap()
                        .product(&chi_of_lambda(&l, b.vector()).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn chi_equal_iff_difference_in_two_dual() {
        for l in test_lattices() {
            let t = l.coset_reps(Quotient::DualModTwoLattice);
            for a in t.iter() {
                for b in t.iter() {
                    let same = chi_of_lambda(&l, a.vector()).unwrap() == chi_of_lambda(&l, b.vector()).unwrap();
                    let diff = a.vector() - b.vector();
                    let in_two_dual = l.dual_contains(&DualVector(
                        diff.0.iter().map(|x| x / Rational::from_integer(2)).collect(),
                    ));
                    assert_eq!(same, in_two_dual);
                }
            }
        }
    }

    #[test]
    fn chi_surjective_from_dual_mod_two_dual() {
        for l in test_lattices().into_iter().filter(|l| l.dim() <= 3) {
            let image: BTreeSet<_> = l
                .coset_reps(Quotient::DualModTwoDual)
                .iter()
                .map(|r| chi_of_lambda(&l, r.vector()).unwrap())
                .collect();
            assert_eq!(image.len(), 1 << l.dim());
        }
    }

    #[test]
    fn chi_eval_is_multiplicative_and_shift_by_two_dual_trivial() {
        for l in test_lattices() {
            let s = l.coset_reps_l_mod_2l();
            for chi in SignCharacter::all(l.dim()) {
                for a in s.iter() {
                    for b in s.iter() {
                        let ab = chi_eval(&chi, &(a.vector() + b.vector())).unwrap();
                        assert_eq!(ab, chi_eval(&chi, a.vector()).unwrap() * chi_eval(&chi, b.vector()).unwrap());
                    }
                }
                for y in l.coset_reps(Quotient::DualModTwoDual).iter() {
                    let two_y = y.vector().scale(2);
                    assert_eq!(chi_shift(&l, &chi, &two_y).unwrap(), chi);
                }
            }
        }
    }

    #[test]
    fn all_characters_and_strings() {
        let all = SignCharacter::all(2);
        let strings: Vec<_> = all.iter().map(|c| c.to_sign_string()).collect();
        assert_eq!(strings, vec!["++", "+-", "-+", "--"]);
        for c in &all {
            assert_eq!(&SignCharacter::parse_sign_string(&c.to_sign_string()).unwrap(), c);
        }
    }
}
