//! The real quadratic field Q(√2), the only extension of Q the exact layer
//! ever needs.  An element is a + b√2 with rational a, b.

use num_bigint::BigInt;
use num_rational::BigRational;
use crate::ring::{Field, IntegralDomain, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadExt {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadExt { a, b }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadExt {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QuadExt {
            a: BigRational::from_integer(BigInt::from(a)),
            b: BigRational::from_integer(BigInt::from(b)),
        }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        QuadExt {
            a: BigRational::from_integer(n.clone()),
            b: BigRational::zero(),
        }
    }

    /// √2
    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    /// σ = -1 + √2
    pub fn sigma() -> Self {
        Self::from_ints(-1, 1)
    }

    /// σ̄ = -1 - √2
    pub fn sigma_bar() -> Self {
        Self::from_ints(-1, -1)
    }

    /// δ = 1 + √2 = 1/σ
    pub fn delta() -> Self {
        Self::from_ints(1, 1)
    }

    /// Galois conjugation √2 -> -√2.
    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm a² - 2b².
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl std::fmt::Display for QuadExt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt2", self.b)
        } else {
            write!(f, "{}+{}*sqrt2", self.a, self.b)
        }
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
    fn add(&self, rhs: &Self) -> Self {
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        // (a + b√2)(c + d√2) = ac + 2bd + (ad + bc)√2
        let two = BigRational::from_integer(BigInt::from(2));
        QuadExt {
            a: &self.a * &rhs.a + &two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
    fn neg(&self) -> Self {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl IntegralDomain for QuadExt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }
}

impl Field for QuadExt {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QuadExt {
            a: &c.a / &n,
            b: &c.b / &n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_delta_relations() {
        // σδ = (√2-1)(√2+1) = 1, σ̄ = -δ, σ² = 3 - 2√2, 2σ = 1 - σ²
        let s = QuadExt::sigma();
        let d = QuadExt::delta();
        assert!(s.mul(&d).is_one());
        assert_eq!(QuadExt::sigma_bar(), d.neg());
        let s2 = s.mul(&s);
        assert_eq!(s2, QuadExt::from_ints(3, -2));
        let lhs = QuadExt::from_ints(2, 0).mul(&s);
        assert_eq!(lhs, QuadExt::one().sub(&s2));
    }

    #[test]
    fn norm_is_multiplicative_and_conj_is_involution() {
        let x = QuadExt::from_ints(3, -5);
        let y = QuadExt::from_ints(-2, 7);
        assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn inverse() {
        let x = QuadExt::from_ints(3, 1); // norm 7
        let i = x.inv().unwrap();
        assert!(x.mul(&i).is_one());
        assert!(QuadExt::zero().inv().is_none());
    }
}
