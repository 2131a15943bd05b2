//! Truncated Puiseux series in q with exact coefficients.
//!
//! A series is stored on a window of consecutive exponents k/D for
//! k in [min_num, prec_num); it is exact modulo q^(prec_num/D).  Binary
//! operations rescale both operands to the lcm of their exponent
//! denominators, and precision tracking is pessimistic: the result is
//! claimed exact only to the order guaranteed by the operands.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::coeff::SeriesCoeff;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PuiseuxSeries<C> {
    d: i64,
    min_num: i64,
    coeffs: Vec<C>,
}

/// Exponents are rationals with modest numerators; convert carefully.
fn rational_parts(r: &BigRational) -> (i64, i64) {
    let n = r.numer().to_i64().expect("exponent numerator out of range");
    let d = r.denom().to_i64().expect("exponent denominator out of range");
    (n, d)
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl<C: SeriesCoeff> PuiseuxSeries<C> {
    /// A window of coefficients: entry k corresponds to q^((min_num+k)/d).
    pub fn from_window(d: i64, min_num: i64, coeffs: Vec<C>) -> Self {
        assert!(d >= 1);
        PuiseuxSeries { d, min_num, coeffs }
    }

    /// The zero series, exact modulo q^order.
    pub fn zero_to(order: &BigRational) -> Self {
        let (n, d) = rational_parts(order);
        PuiseuxSeries {
            d,
            min_num: n,
            coeffs: Vec::new(),
        }
    }

    /// The constant series c + O(q^order).
    pub fn constant_to(c: C, order: &BigRational) -> Self {
        let (n, d) = rational_parts(order);
        assert!(n > 0, "constant series needs positive order");
        let mut coeffs = vec![C::zero(); n as usize];
        coeffs[0] = c;
        PuiseuxSeries {
            d,
            min_num: 0,
            coeffs,
        }
    }

    pub fn one_to(order: &BigRational) -> Self {
        Self::constant_to(C::one(), order)
    }

    pub fn exponent_denominator(&self) -> i64 {
        self.d
    }

    pub fn min_exponent_numerator(&self) -> i64 {
        self.min_num
    }

    pub fn coeff_window(&self) -> &[C] {
        &self.coeffs
    }

    /// Exact modulo q^(this order).
    pub fn truncation_order(&self) -> BigRational {
        rational(self.min_num + self.coeffs.len() as i64, self.d)
    }

    fn prec_num(&self) -> i64 {
        self.min_num + self.coeffs.len() as i64
    }

    /// Coefficient of q^e; `None` when e is at or beyond the truncation
    /// order (i.e. not determined by this series).
    pub fn coeff_at(&self, e: &BigRational) -> Option<C> {
        let scaled = e * BigRational::from_integer(BigInt::from(self.d));
        if !scaled.is_integer() {
            return if e < &self.truncation_order() {
                Some(C::zero())
            } else {
                None
            };
        }
        let k = scaled.to_integer().to_i64()?;
        if k >= self.prec_num() {
            return None;
        }
        if k < self.min_num {
            return Some(C::zero());
        }
        Some(self.coeffs[(k - self.min_num) as usize].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// First nonzero term as (exponent, coefficient).
    pub fn first_nonzero(&self) -> Option<(BigRational, C)> {
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                return Some((rational(self.min_num + k as i64, self.d), c.clone()));
            }
        }
        None
    }

    pub fn valuation(&self) -> Option<BigRational> {
        self.first_nonzero().map(|(e, _)| e)
    }

    /// Reduce the exponent denominator to the smallest exact choice.
    pub fn normalize_denominator(&self) -> Self {
        let mut g = self.d;
        g = g.gcd(&self.min_num);
        g = g.gcd(&self.prec_num());
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                g = g.gcd(&(self.min_num + k as i64));
            }
            if g == 1 {
                return self.clone();
            }
        }
        if g <= 1 {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() / g as usize + 1);
        for (k, c) in self.coeffs.iter().enumerate() {
            if (self.min_num + k as i64) % g == 0 {
                coeffs.push(c.clone());
            } else {
                debug_assert!(c.is_zero());
            }
        }
        PuiseuxSeries {
            d: self.d / g,
            min_num: self.min_num / g,
            coeffs,
        }
    }

    /// Change to a denominator that is a positive multiple of the current one.
    fn with_denominator(&self, new_d: i64) -> Self {
        assert!(new_d % self.d == 0);
        let k = new_d / self.d;
        if k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() * k as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        // window end maps to prec*k, so the zero padding after the last
        // stored entry up to the new precision is correct
        let mut s = PuiseuxSeries {
            d: new_d,
            min_num: self.min_num * k,
            coeffs,
        };
        let want = (self.prec_num() * k - s.min_num) as usize;
        s.coeffs.resize(want, C::zero());
        s
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let d = self.d.lcm(&other.d);
        (self.with_denominator(d), other.with_denominator(d))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let min = a.min_num.min(b.min_num);
        let prec = a.prec_num().min(b.prec_num());
        let len = (prec - min).max(0) as usize;
        let mut coeffs = vec![C::zero(); len];
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let k = min + i as i64;
            let mut v = C::zero();
            if k >= a.min_num && k < a.prec_num() {
                v = v.add(&a.coeffs[(k - a.min_num) as usize]);
            }
            if k >= b.min_num && k < b.prec_num() {
                v = v.add(&b.coeffs[(k - b.min_num) as usize]);
            }
            *slot = v;
        }
        PuiseuxSeries {
            d: a.d,
            min_num: min,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        PuiseuxSeries {
            d: self.d,
            min_num: self.min_num,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        // exactness: a known mod q^pa, b mod q^pb -> product known mod
        // q^min(pa + mb, pb + ma)
        let min = a.min_num + b.min_num;
        let prec = (a.prec_num() + b.min_num).min(b.prec_num() + a.min_num);
        let len = (prec - min).max(0) as usize;
        let mut coeffs = vec![C::zero(); len];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            if i >= len {
                break;
            }
            let top = (len - i).min(b.coeffs.len());
            for (j, cb) in b.coeffs.iter().enumerate().take(top) {
                if cb.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&ca.mul(cb));
            }
        }
        PuiseuxSeries {
            d: a.d,
            min_num: min,
            coeffs,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        PuiseuxSeries {
            d: self.d,
            min_num: self.min_num,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiply by q^e.
    pub fn mul_qpow(&self, e: &BigRational) -> Self {
        let (en, ed) = rational_parts(e);
        let d = self.d.lcm(&ed);
        let mut s = self.with_denominator(d);
        s.min_num += en * (d / ed);
        s
    }

    /// Substitute q -> q^k, modelling tau -> k*tau.
    pub fn rescale(&self, k: u32) -> Self {
        assert!(k >= 1, "rescale needs a positive integer");
        let k = k as i64;
        let mut coeffs = vec![C::zero(); self.coeffs.len() * k as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        let mut s = PuiseuxSeries {
            d: self.d,
            min_num: self.min_num * k,
            coeffs,
        };
        let want = (self.prec_num() * k - s.min_num) as usize;
        s.coeffs.resize(want, C::zero());
        s.normalize_denominator()
    }

    /// Multiplicative inverse; requires a nonzero leading term.
    pub fn inv(&self) -> Result<Self, crate::QSeriesError> {
        let (val_idx, lead) = match self
            .coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
        {
            Some((k, c)) => (k as i64, c.clone()),
            None => return Err(crate::QSeriesError::NotInvertible),
        };
        let lead_inv = lead.invert().ok_or(crate::QSeriesError::NotInvertible)?;
        let m = self.min_num + val_idx;
        let unit: Vec<&C> = self.coeffs[val_idx as usize..].iter().collect();
        let n = unit.len();
        let mut out = vec![C::zero(); n];
        out[0] = lead_inv.clone();
        for k in 1..n {
            let mut acc = C::zero();
            for j in 1..=k {
                if unit[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc = acc.add(&unit[j].mul(&out[k - j]));
            }
            out[k] = acc.neg().mul(&lead_inv);
        }
        Ok(PuiseuxSeries {
            d: self.d,
            min_num: -m,
            coeffs: out,
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self, crate::QSeriesError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if e == 0 {
            // preserve the precision of the base
            let prec = self.truncation_order();
            if prec.is_positive() {
                return Ok(Self::one_to(&prec));
            }
            return Err(crate::QSeriesError::NotInvertible);
        }
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        let mut e = e as u64;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        Ok(acc.unwrap())
    }

    /// Lower the truncation order (never raises it).
    pub fn truncate_to(&self, order: &BigRational) -> Self {
        let (on, od) = rational_parts(order);
        let d = self.d.lcm(&od);
        let mut s = self.with_denominator(d);
        let cut = on * (d / od);
        if cut < s.prec_num() {
            let len = (cut - s.min_num).max(0) as usize;
            s.coeffs.truncate(len);
            if s.coeffs.is_empty() {
                s.min_num = cut;
            }
        }
        s
    }

    pub fn map<T: SeriesCoeff>(&self, f: impl Fn(&C) -> T) -> PuiseuxSeries<T> {
        PuiseuxSeries {
            d: self.d,
            min_num: self.min_num,
            coeffs: self.coeffs.iter().map(|c| f(c)).collect(),
        }
    }

    /// Polynomial-at-series evaluation with exact integer coefficients,
    /// by Horner.  The polynomial is given in ascending degree.
    pub fn apply_int_poly(&self, coeffs: &[i64]) -> Self {
        let order = self.truncation_order();
        let mut acc = Self::zero_to(&order);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self);
            if c != 0 {
                acc = acc.add(&Self::constant_to(C::from_rational(&rational(c, 1)), &order));
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = PuiseuxSeries<BigRational>;

    fn ord(n: i64) -> BigRational {
        rational(n, 1)
    }

    #[test]
    fn one_minus_q_times_one_plus_q() {
        let one_plus = S::from_window(1, 0, vec![rational(1, 1), rational(1, 1)]);
        let one_minus = S::from_window(1, 0, vec![rational(1, 1), rational(-1, 1)]);
        let prod = one_plus.mul(&one_minus);
        assert_eq!(prod.coeff_at(&ord(0)).unwrap(), rational(1, 1));
        assert_eq!(prod.coeff_at(&ord(1)).unwrap(), rational(0, 1));
        // window is [0,2): the q^2 coefficient is beyond the precision
        assert!(prod.coeff_at(&ord(2)).is_none());
    }

    #[test]
    fn geometric_series_inverse() {
        let mut c = vec![rational(0, 1); 10];
        c[0] = rational(1, 1);
        c[1] = rational(-1, 1);
        let s = S::from_window(1, 0, c); // 1 - q + O(q^10)
        let inv = s.inv().unwrap();
        for k in 0..10 {
            assert_eq!(inv.coeff_at(&ord(k)).unwrap(), rational(1, 1));
        }
        let prod = s.mul(&inv);
        assert_eq!(prod.coeff_at(&ord(0)).unwrap(), rational(1, 1));
        assert!(prod
            .sub(&S::one_to(&ord(10)))
            .is_zero());
    }

    #[test]
    fn inversion_loses_twice_the_valuation() {
        // s = q^2 (1 - q) exact to q^8; 1/s must be exact to q^4: 8 - 2*2
        let s = S::from_window(1, 2, vec![
            rational(1, 1),
            rational(-1, 1),
            rational(0, 1),
            rational(0, 1),
            rational(0, 1),
            rational(0, 1),
        ]);
        let inv = s.inv().unwrap();
        assert_eq!(inv.truncation_order(), ord(4));
        assert_eq!(inv.valuation().unwrap(), ord(-2));
    }

    #[test]
    fn mixed_denominators_align() {
        // q^(1/2) + q
        let a = S::from_window(2, 1, vec![rational(1, 1)]);
        let b = S::from_window(1, 1, vec![rational(1, 1)]);
        let sum = a.add(&b);
        assert_eq!(sum.exponent_denominator(), 2);
        assert_eq!(sum.coeff_at(&rational(1, 2)).unwrap(), rational(1, 1));
        // precision is min(1, 2) = 1: the q^1 term is not covered
        assert!(sum.coeff_at(&ord(1)).is_none());
    }

    #[test]
    fn rescale_stretches_exponents() {
        let s = S::from_window(2, 1, vec![rational(1, 1), rational(3, 1)]); // q^(1/2) + 3q
        let t = s.rescale(4);
        assert_eq!(t.coeff_at(&ord(2)).unwrap(), rational(1, 1));
        assert_eq!(t.coeff_at(&ord(4)).unwrap(), rational(3, 1));
        assert_eq!(t.truncation_order(), ord(6));
        // denominators reduce: all exponents are integers now
        assert_eq!(t.exponent_denominator(), 1);
    }

    #[test]
    fn precision_tracking_in_products() {
        // a = 1 + O(q^3) with val 0, b = q + O(q^5):
        // product exact mod q^min(3+1, 5+0) = q^4
        let a = S::from_window(1, 0, vec![rational(1, 1); 3]);
        let b = S::from_window(1, 1, vec![rational(1, 1); 4]);
        let p = a.mul(&b);
        assert_eq!(p.truncation_order(), ord(4));
    }

    #[test]
    fn apply_poly_horner() {
        // s = q; p(x) = x^2 - 3x + 2 -> q^2 - 3q + 2
        let s = S::from_window(1, 1, vec![rational(1, 1), rational(0, 1), rational(0, 1)]);
        let p = s.apply_int_poly(&[2, -3, 1]);
        assert_eq!(p.coeff_at(&ord(0)).unwrap(), rational(2, 1));
        assert_eq!(p.coeff_at(&ord(1)).unwrap(), rational(-3, 1));
        assert_eq!(p.coeff_at(&ord(2)).unwrap(), rational(1, 1));
    }
}
