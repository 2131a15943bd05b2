//! Coefficient rings for q-expansions: Q, Q(√2), and Q(ζ₈).

use exactalg::quadext::QuadExt;
use exactalg::ring::{Field, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;

/// A field usable as the coefficient domain of a Puiseux series.
pub trait SeriesCoeff: Ring {
    fn from_rational(r: &BigRational) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn invert(&self) -> Option<Self>;
}

impl SeriesCoeff for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn invert(&self) -> Option<Self> {
        Field::inv(self)
    }
}

impl SeriesCoeff for QuadExt {
    fn from_rational(r: &BigRational) -> Self {
        QuadExt::from_rational(r.clone())
    }
    fn invert(&self) -> Option<Self> {
        Field::inv(self)
    }
}

/// The cyclotomic field Q(ζ₈) in the basis 1, ζ, ζ², ζ³ with ζ⁴ = -1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Zeta8(pub [BigRational; 4]);

impl Zeta8 {
    pub fn from_parts(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        Zeta8([c0, c1, c2, c3])
    }

    pub fn zeta() -> Self {
        Self::basis(1)
    }

    /// i = ζ²
    pub fn i() -> Self {
        Self::basis(2)
    }

    /// √2 = ζ - ζ³
    pub fn sqrt2() -> Self {
        let mut z = Self::basis(1);
        z.0[3] = -BigRational::from_integer(BigInt::from(1));
        z
    }

    fn basis(k: usize) -> Self {
        let mut c = [
            BigRational::from_integer(BigInt::from(0)),
            BigRational::from_integer(BigInt::from(0)),
            BigRational::from_integer(BigInt::from(0)),
            BigRational::from_integer(BigInt::from(0)),
        ];
        c[k] = BigRational::from_integer(BigInt::from(1));
        Zeta8(c)
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        if k < 4 {
            Self::basis(k)
        } else {
            Self::basis(k - 4).neg()
        }
    }

    /// The Galois map ζ -> ζ^k for odd k.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k % 2 != 0);
        let mut out = Self::zero();
        for (j, c) in self.0.iter().enumerate() {
            let term = Self::zeta_pow(k * j as i64);
            out = out.add(&Self {
                0: [
                    &term.0[0] * c,
                    &term.0[1] * c,
                    &term.0[2] * c,
                    &term.0[3] * c,
                ],
            });
        }
        out
    }

    pub fn from_quadext(x: &QuadExt) -> Self {
        let mut out = Self::from_rational(&x.a);
        let r2 = Self::sqrt2();
        out = out.add(&Zeta8([
            &r2.0[0] * &x.b,
            &r2.0[1] * &x.b,
            &r2.0[2] * &x.b,
            &r2.0[3] * &x.b,
        ]));
        out
    }

    /// Rational part when the element lies in Q; `None` otherwise.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.0[1..].iter().all(|c| Ring::is_zero(c)) {
            Some(self.0[0].clone())
        } else {
            None
        }
    }
}

impl Ring for Zeta8 {
    fn zero() -> Self {
        Zeta8([
            Ring::zero(),
            Ring::zero(),
            Ring::zero(),
            Ring::zero(),
        ])
    }
    fn one() -> Self {
        Self::basis(0)
    }
    fn add(&self, rhs: &Self) -> Self {
        Zeta8([
            &self.0[0] + &rhs.0[0],
            &self.0[1] + &rhs.0[1],
            &self.0[2] + &rhs.0[2],
            &self.0[3] + &rhs.0[3],
        ])
    }
    fn sub(&self, rhs: &Self) -> Self {
        Zeta8([
            &self.0[0] - &rhs.0[0],
            &self.0[1] - &rhs.0[1],
            &self.0[2] - &rhs.0[2],
            &self.0[3] - &rhs.0[3],
        ])
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut acc = [
            BigRational::from_integer(BigInt::from(0)),
            BigRational::from_integer(BigInt::from(0)),
            BigRational::from_integer(BigInt::from(0)),
            BigRational::from_integer(BigInt::from(0)),
        ];
        for i in 0..4 {
            if Ring::is_zero(&self.0[i]) {
                continue;
            }
            for j in 0..4 {
                if Ring::is_zero(&rhs.0[j]) {
                    continue;
                }
                let prod = &self.0[i] * &rhs.0[j];
                let k = i + j;
                if k < 4 {
                    acc[k] = &acc[k] + &prod;
                } else {
                    acc[k - 4] = &acc[k - 4] - &prod;
                }
            }
        }
        Zeta8(acc)
    }
    fn neg(&self) -> Self {
        Zeta8([
            -self.0[0].clone(),
            -self.0[1].clone(),
            -self.0[2].clone(),
            -self.0[3].clone(),
        ])
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|c| Ring::is_zero(c))
    }
}

impl SeriesCoeff for Zeta8 {
    fn from_rational(r: &BigRational) -> Self {
        let mut z = Self::zero();
        z.0[0] = r.clone();
        z
    }

    fn invert(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        // product of the three nontrivial Galois images times self is the
        // rational norm
        let conj = self.galois(3).mul(&self.galois(5)).mul(&self.galois(7));
        let norm = self
            .mul(&conj)
            .as_rational()
            .expect("norm of a cyclotomic element is rational");
        let n_inv = Field::inv(&norm)?;
        Some(Zeta8([
            &conj.0[0] * &n_inv,
            &conj.0[1] * &n_inv,
            &conj.0[2] * &n_inv,
            &conj.0[3] * &n_inv,
        ]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_has_order_eight() {
        let z = Zeta8::zeta();
        let mut p = Zeta8::one();
        for _ in 0..8 {
            p = p.mul(&z);
        }
        assert!(p.is_one());
        assert_eq!(Zeta8::zeta_pow(4), Zeta8::one().neg());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let r = Zeta8::sqrt2();
        assert_eq!(r.mul(&r), Zeta8::from_i64(2));
        let i = Zeta8::i();
        assert_eq!(i.mul(&i), Zeta8::from_i64(-1));
    }

    #[test]
    fn inverse() {
        let x = Zeta8::from_parts(
            BigRational::from_integer(BigInt::from(2)),
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::from_integer(BigInt::from(3)),
            BigRational::from_integer(BigInt::from(1)),
        );
        let inv = x.invert().unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn quadext_embedding() {
        let s = exactalg::QuadExt::sigma();
        let z = Zeta8::from_quadext(&s);
        // σ² = 3 - 2√2
        let s2 = Zeta8::from_quadext(&s.mul(&s));
        assert_eq!(z.mul(&z), s2);
    }
}
