//! The ring Z_2[y]/(g(y), 2^P): an unramified extension of the 2-adic
//! integers of residue degree m at working precision P bits.
//!
//! The modulus g is the lexicographically least monic irreducible
//! polynomial of degree m over GF(2) (coefficient vectors compared as
//! binary numbers), so contexts are deterministic and reproducible.
//! Residue-field arithmetic runs on u64 bitmasks; full-precision elements
//! are coefficient vectors mod 2^P in the power basis of g.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::PadicError;

#[derive(Debug, Clone)]
pub struct UnramifiedContext {
    m: usize,
    prec: u32,
    /// Modulus bits: bit i is the coefficient of y^i, including the top bit.
    modulus_bits: u64,
    mask: BigUint,
}

/// An element as a coefficient vector of length m, entries mod 2^P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicElem {
    pub(crate) coeffs: Vec<BigUint>,
}

fn gf2_degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

/// Remainder of a by b over GF(2), bitmask representation.
fn gf2_rem(mut a: u64, b: u64) -> u64 {
    let db = gf2_degree(b);
    while a != 0 && gf2_degree(a) >= db {
        a ^= b << (gf2_degree(a) - db);
    }
    a
}

fn gf2_is_irreducible(p: u64, m: u32) -> bool {
    // trial division by every polynomial of degree 1..=m/2
    for d in 1..=(m / 2) {
        for low in 0..(1u64 << d) {
            let divisor = (1u64 << d) | low;
            if gf2_rem(p, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible polynomial of degree m.
pub fn least_irreducible(m: usize) -> u64 {
    assert!(m >= 1 && m <= 32);
    let top = 1u64 << m;
    for low in 0..top {
        let p = top | low;
        if m == 1 || gf2_is_irreducible(p, m as u32) {
            return p;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl UnramifiedContext {
    pub fn new(m: usize, prec: u32) -> Result<Self, PadicError> {
        if m < 1 || m > 32 {
            return Err(PadicError::BadContext(format!("residue degree {m}")));
        }
        if prec < 8 || prec > 4096 {
            return Err(PadicError::BadContext(format!("precision {prec}")));
        }
        let modulus_bits = least_irreducible(m);
        let mask = (BigUint::one() << prec) - BigUint::one();
        Ok(UnramifiedContext {
            m,
            prec,
            modulus_bits,
            mask,
        })
    }

    pub fn residue_degree(&self) -> usize {
        self.m
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn modulus_bits(&self) -> u64 {
        self.modulus_bits
    }

    /// Monic modulus as integer coefficients 0/1, ascending, length m+1.
    pub fn modulus_coeffs(&self) -> Vec<u8> {
        (0..=self.m)
            .map(|i| ((self.modulus_bits >> i) & 1) as u8)
            .collect()
    }

    // -- residue field (GF(2^m) as bitmasks) --

    pub fn gf_mul(&self, a: u64, b: u64) -> u64 {
        let mut acc = 0u64;
        let mut a_shift = a;
        let mut b_left = b;
        let mut bit = 0;
        while b_left != 0 {
            if (b >> bit) & 1 == 1 {
                acc ^= a_shift;
                b_left ^= 1 << bit;
            }
            bit += 1;
            a_shift <<= 1;
        }
        gf2_rem(acc, self.modulus_bits)
    }

    pub fn gf_pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.gf_mul(acc, a);
            }
            e >>= 1;
            if e > 0 {
                a = self.gf_mul(a, a);
            }
        }
        acc
    }

    pub fn gf_inv(&self, a: u64) -> u64 {
        assert!(a != 0);
        let order = (1u64 << self.m) - 2;
        self.gf_pow(a, order)
    }

    // -- elements --

    pub fn zero(&self) -> PadicElem {
        PadicElem {
            coeffs: vec![BigUint::zero(); self.m],
        }
    }

    pub fn one(&self) -> PadicElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, n: u64) -> PadicElem {
        let mut e = self.zero();
        e.coeffs[0] = BigUint::from(n) & self.mask.clone();
        e
    }

    pub fn from_i64(&self, n: i64) -> PadicElem {
        if n >= 0 {
            self.from_u64(n as u64)
        } else {
            self.neg(&self.from_u64(n.unsigned_abs()))
        }
    }

    pub fn from_bigint(&self, n: &num_bigint::BigInt) -> PadicElem {
        use num_bigint::Sign;
        let mag = PadicElem {
            coeffs: {
                let mut c = vec![BigUint::zero(); self.m];
                c[0] = n.magnitude() & self.mask.clone();
                c
            },
        };
        if n.sign() == Sign::Minus {
            self.neg(&mag)
        } else {
            mag
        }
    }

    /// Element from raw coefficients, reduced mod 2^P; length must be m.
    pub fn from_coeffs(&self, coeffs: Vec<BigUint>) -> PadicElem {
        assert_eq!(coeffs.len(), self.m);
        PadicElem {
            coeffs: coeffs.into_iter().map(|c| c & self.mask.clone()).collect(),
        }
    }

    /// Lift a residue-field bitmask to the element with 0/1 coefficients.
    pub fn from_residue(&self, r: u64) -> PadicElem {
        let mut e = self.zero();
        for i in 0..self.m {
            if (r >> i) & 1 == 1 {
                e.coeffs[i] = BigUint::one();
            }
        }
        e
    }

    /// Residue-field image as a bitmask.
    pub fn residue(&self, x: &PadicElem) -> u64 {
        let mut r = 0u64;
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.bit(0) {
                r |= 1 << i;
            }
        }
        r
    }

    pub fn add(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        PadicElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) & self.mask.clone())
                .collect(),
        }
    }

    pub fn sub(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let modulus = &self.mask + BigUint::one();
        PadicElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| ((x + &modulus) - y) & self.mask.clone())
                .collect(),
        }
    }

    pub fn neg(&self, a: &PadicElem) -> PadicElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let m = self.m;
        let mut t = vec![BigUint::zero(); 2 * m - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                t[i + j] = (&t[i + j] + x * y) & self.mask.clone();
            }
        }
        // reduce by the monic modulus: y^m = -(lower bits)
        let modulus_big = &self.mask + BigUint::one();
        for k in (m..2 * m - 1).rev() {
            let c = std::mem::replace(&mut t[k], BigUint::zero());
            if c.is_zero() {
                continue;
            }
            for i in 0..m {
                if (self.modulus_bits >> i) & 1 == 1 {
                    t[k - m + i] = ((&t[k - m + i] + &modulus_big) - &c) & self.mask.clone();
                }
            }
        }
        t.truncate(m);
        PadicElem { coeffs: t }
    }

    pub fn is_zero(&self, a: &PadicElem) -> bool {
        a.coeffs.iter().all(|c| c.is_zero())
    }

    /// 2-adic valuation: minimum coefficient valuation, capped at P.
    pub fn valuation(&self, a: &PadicElem) -> u32 {
        let mut v = self.prec;
        for c in &a.coeffs {
            if !c.is_zero() {
                v = v.min(c.trailing_zeros().unwrap_or(0) as u32);
            }
        }
        v
    }

    pub fn is_unit(&self, a: &PadicElem) -> bool {
        self.valuation(a) == 0
    }

    /// Inverse of a unit by lifting the residue-field inverse with
    /// Newton steps y <- y(2 - xy).
    pub fn inv(&self, x: &PadicElem) -> Result<PadicElem, PadicError> {
        if !self.is_unit(x) {
            return Err(PadicError::NotAUnit);
        }
        let r = self.residue(x);
        let mut y = self.from_residue(self.gf_inv(r));
        let two = self.from_u64(2);
        let mut bits = 1u32;
        while bits < self.prec {
            let t = self.sub(&two, &self.mul(x, &y));
            y = self.mul(&y, &t);
            bits *= 2;
        }
        debug_assert!(self.is_zero(&self.sub(&self.mul(x, &y), &self.one())));
        Ok(y)
    }

    /// Fresh random unit with x - 3 also a unit (residue not 0 or 1 when
    /// m > 1; residue 1 excluded always for x-3 to be a unit... the
    /// precondition is only that x-3 is a unit, i.e. residue(x) != 1).
    pub fn random_point_off_one(&self, rng: &mut impl FnMut() -> u64) -> PadicElem {
        loop {
            let mut e = self.zero();
            for c in e.coeffs.iter_mut() {
                let mut acc = BigUint::zero();
                let words = (self.prec as usize).div_ceil(64);
                for w in 0..words {
                    acc |= BigUint::from(rng()) << (64 * w);
                }
                *c = acc & self.mask.clone();
            }
            if self.residue(&e) != 1 {
                return e;
            }
        }
    }
}

impl PadicElem {
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }
}
