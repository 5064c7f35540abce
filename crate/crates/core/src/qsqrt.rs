//! Exact numbers `a + b*sqrt(r)` in a real quadratic field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::smith::IntScalar;

/// Element `a + b*sqrt(radicand)` of Q(sqrt(radicand)), `radicand >= 1`.
///
/// When the radicand is a perfect square the surd part is folded into the
/// rational part, so `b == 0` and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd<T: IntScalar> {
    a: Ratio<T>,
    b: Ratio<T>,
    radicand: T,
}

impl<T: IntScalar + Roots> QuadraticSurd<T> {
    pub fn new(a: Ratio<T>, b: Ratio<T>, radicand: T) -> Self {
        assert!(radicand.is_positive(), "radicand must be positive");
        let root = radicand.sqrt();
        if root.clone() * root.clone() == radicand {
            let a = a + b * Ratio::from_integer(root);
            Self { a, b: Ratio::zero(), radicand }
        } else {
            Self { a, b, radicand }
        }
    }

    pub fn rational(a: Ratio<T>, radicand: T) -> Self {
        Self::new(a, Ratio::zero(), radicand)
    }

    pub fn integer(a: T, radicand: T) -> Self {
        Self::rational(Ratio::from_integer(a), radicand)
    }

    /// `sqrt(radicand)` itself.
    pub fn sqrt_of(radicand: T) -> Self {
        Self::new(Ratio::zero(), Ratio::one(), radicand)
    }

    pub fn rational_part(&self) -> &Ratio<T> {
        &self.a
    }

    pub fn surd_part(&self) -> &Ratio<T> {
        &self.b
    }

    pub fn radicand(&self) -> &T {
        &self.radicand
    }

    fn same_field(&self, other: &Self) {
        assert!(self.radicand == other.radicand, "mixing quadratic fields");
    }

    /// Sign of the real number, decided by comparing squares exactly.
    pub fn signum(&self) -> Ordering {
        let r = Ratio::from_integer(self.radicand.clone());
        let sa = self.a.cmp(&Ratio::zero());
        let sb = self.b.cmp(&Ratio::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            _ => {
                // opposite signs: compare a^2 with b^2 r
                let a2 = self.a.clone() * self.a.clone();
                let b2r = self.b.clone() * self.b.clone() * r;
                match a2.cmp(&b2r) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                }
            }
        }
    }
}

impl<T: IntScalar + Roots> PartialOrd for QuadraticSurd<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.radicand != other.radicand {
            return None;
        }
        Some((self.clone() - other.clone()).signum())
    }
}

impl<T: IntScalar + Roots> Add for QuadraticSurd<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        Self::new(self.a + rhs.a, self.b + rhs.b, self.radicand)
    }
}

impl<T: IntScalar + Roots> Sub for QuadraticSurd<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        Self::new(self.a - rhs.a, self.b - rhs.b, self.radicand)
    }
}

impl<T: IntScalar + Roots> Neg for QuadraticSurd<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, self.radicand)
    }
}

impl<T: IntScalar + Roots> Mul for QuadraticSurd<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.same_field(&rhs);
        let r = Ratio::from_integer(self.radicand.clone());
        let a = self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.b.clone() * r;
        let b = self.a * rhs.b + self.b * rhs.a;
        Self::new(a, b, self.radicand)
    }
}

impl<T: IntScalar + Roots> QuadraticSurd<T> {
    pub fn scale(&self, k: T) -> Self {
        let k = Ratio::from_integer(k);
        Self::new(self.a.clone() * k.clone(), self.b.clone() * k, self.radicand.clone())
    }
}

fn fmt_ratio<T: IntScalar + fmt::Display>(r: &Ratio<T>) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl<T: IntScalar + Roots + fmt::Display> fmt::Display for QuadraticSurd<T> {
    /// `a+b*sqrt(r)` with zero terms elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |b: &Ratio<T>| {
            if b.is_one() {
                format!("sqrt({})", self.radicand)
            } else {
                format!("{}*sqrt({})", fmt_ratio(b), self.radicand)
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_ratio(&self.a)),
            (true, false) => {
                if self.b == -Ratio::one() {
                    write!(f, "-sqrt({})", self.radicand)
                } else {
                    write!(f, "{}", surd(&self.b))
                }
            }
            (false, false) => {
                if self.b.is_negative() {
                    let nb = -self.b.clone();
                    write!(f, "{}-{}", fmt_ratio(&self.a), surd(&nb))
                } else {
                    write!(f, "{}+{}", fmt_ratio(&self.a), surd(&self.b))
                }
            }
        }
    }
}
