//! Dense univariate polynomials over an arbitrary coefficient ring.
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! zero polynomial is the empty vector.  Nesting `UniPoly<UniPoly<...>>`
//! gives multivariate polynomials with recursive exact division, which is
//! what the subresultant algorithm needs to run over Z[x][t].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::quadext::QuadExt;
use crate::ring::{Gf2, IntegralDomain, Ring};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c·x^k.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn from_i64_slice(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&n| R::from_i64(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k).sub(&rhs.coeff(k)));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Composition self(g(x)) by Horner.
    pub fn eval_poly(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&R::from_i64(k as i64)));
        }
        Self::new(out)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(|c| f(c)).collect())
    }

    /// Substitute x -> -x.
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }

    /// Substitute x -> x^k.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Self::new(out)
    }

    /// The homogenized composition p(n(x)/d(x)) · d(x)^(deg p) for a
    /// fractional linear substitution given by numerator and denominator.
    pub fn compose_fraction(&self, num: &Self, den: &Self) -> Self {
        let d = match self.degree() {
            None => return Self::zero(),
            Some(d) => d,
        };
        // sum c_i * num^i * den^(d-i)
        let mut num_pows = Vec::with_capacity(d + 1);
        let mut den_pows = Vec::with_capacity(d + 1);
        let mut p = Self::one();
        for _ in 0..=d {
            num_pows.push(p.clone());
            p = p.mul(num);
        }
        let mut p = Self::one();
        for _ in 0..=d {
            den_pows.push(p.clone());
            p = p.mul(den);
        }
        let mut acc = Self::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = num_pows[i].mul(&den_pows[d - i]).scale(c);
            acc = acc.add(&term);
        }
        acc
    }
}

impl<R: IntegralDomain> UniPoly<R> {
    /// Exact polynomial division; `None` if `rhs` does not divide `self`
    /// in R[x] (or `rhs` is zero).
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dr, dd) = (self.degree()?, rhs.degree()?);
        if dr < dd {
            return None;
        }
        let lc_d = rhs.lc().unwrap();
        let mut rem = self.clone();
        let mut q = vec![R::zero(); dr - dd + 1];
        while let Some(dcur) = rem.degree() {
            if dcur < dd {
                break;
            }
            let qc = rem.lc().unwrap().exact_div(lc_d)?;
            let k = dcur - dd;
            rem = rem.sub(&rhs.shift(k).scale(&qc));
            if rem.degree() == Some(dcur) {
                return None; // no cancellation: not an exact quotient
            }
            q[k] = qc;
        }
        if rem.is_zero() {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Pseudo-remainder: lc(d)^(deg n - deg d + 1) · n  mod  d.
    /// Requires deg n >= deg d and d nonzero.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let (dn, dd) = (
            self.degree().expect("pseudo_rem: zero dividend"),
            d.degree().expect("pseudo_rem: zero divisor"),
        );
        assert!(dn >= dd, "pseudo_rem: dividend degree below divisor degree");
        let l = d.lc().unwrap().clone();
        let mut r = self.clone();
        let mut owed = dn - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let top = r.lc().unwrap().clone();
            r = r.scale(&l).sub(&d.shift(dr - dd).scale(&top));
            owed -= 1;
        }
        if owed > 0 {
            let mut f = R::one();
            for _ in 0..owed {
                f = f.mul(&l);
            }
            r = r.scale(&f);
        }
        r
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        UniPoly::constant(R::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl<R: IntegralDomain> IntegralDomain for UniPoly<R> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        UniPoly::exact_div(self, rhs)
    }
}

/// Integer-coefficient helpers: content, primitive part, sign normalization.
impl UniPoly<BigInt> {
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::from(0);
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Remove the integer content and make the leading coefficient positive.
    pub fn normalized_primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_rational(&self) -> UniPoly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn to_quadext(&self) -> UniPoly<QuadExt> {
        self.map(QuadExt::from_bigint)
    }

    pub fn reduce_mod2(&self) -> UniPoly<Gf2> {
        self.map(Gf2::from_bigint)
    }

    /// Largest absolute coefficient, as a measure of height.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(|| BigInt::from(0))
    }
}

impl UniPoly<BigRational> {
    /// Clears denominators and normalizes; `None` only for the zero poly.
    pub fn to_integer_primitive(&self) -> Option<UniPoly<BigInt>> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let mut lcm = BigInt::from(1);
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        Some(UniPoly::new(ints).normalized_primitive())
    }

    /// Exact integer coefficients, erroring on any non-integer entry.
    pub fn to_integer_exact(&self) -> Result<UniPoly<BigInt>, (usize, BigRational)> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err((k, c.clone()));
            }
            out.push(c.to_integer());
        }
        Ok(UniPoly::new(out))
    }
}

impl<R: Ring + std::fmt::Display> std::fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type ZP = UniPoly<BigInt>;

    #[test]
    fn arithmetic_and_eval() {
        let p = ZP::from_i64_slice(&[1, 2, 3]); // 3x^2 + 2x + 1
        let q = ZP::from_i64_slice(&[-1, 1]); // x - 1
        assert_eq!(p.mul(&q), ZP::from_i64_slice(&[-1, -1, -1, 3]));
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(17));
        assert_eq!(p.degree(), Some(2));
        assert!(ZP::zero().degree().is_none());
    }

    #[test]
    fn exact_division() {
        let p = ZP::from_i64_slice(&[-1, 0, 1]); // x^2 - 1
        let q = ZP::from_i64_slice(&[1, 1]); // x + 1
        assert_eq!(p.exact_div(&q), Some(ZP::from_i64_slice(&[-1, 1])));
        let r = ZP::from_i64_slice(&[1, 0, 1]);
        assert!(r.exact_div(&q).is_none());
        // 2x+2 over Z is divisible by 2 but x+1 does not divide x+2
        assert!(ZP::from_i64_slice(&[2, 1]).exact_div(&q).is_none());
    }

    #[test]
    fn pseudo_remainder_matches_definition() {
        // lc(d)^(deg n - deg d + 1) n = q d + prem
        let n = ZP::from_i64_slice(&[3, -2, 0, 5, 1]);
        let d = ZP::from_i64_slice(&[1, 4, 7]);
        let r = n.pseudo_rem(&d);
        assert!(r.degree().unwrap_or(0) < d.degree().unwrap());
        // verify by dividing (lc^3 n - r) by d exactly
        let scaled = n.scale(&BigInt::from(7i64.pow(3))).sub(&r);
        assert!(scaled.exact_div(&d).is_some());
    }

    #[test]
    fn normalization() {
        let p = ZP::from_i64_slice(&[-6, 0, -9]);
        assert_eq!(p.normalized_primitive(), ZP::from_i64_slice(&[2, 0, 3]));
        assert_eq!(p.content(), BigInt::from(3));
    }

    #[test]
    fn composition_with_fraction() {
        // p(x) = x^2 + 1 at x -> (x+1)/(x-1), homogenized by (x-1)^2:
        // (x+1)^2 + (x-1)^2 = 2x^2 + 2
        let p = ZP::from_i64_slice(&[1, 0, 1]);
        let n = ZP::from_i64_slice(&[1, 1]);
        let d = ZP::from_i64_slice(&[-1, 1]);
        assert_eq!(p.compose_fraction(&n, &d), ZP::from_i64_slice(&[2, 0, 2]));
    }
}
