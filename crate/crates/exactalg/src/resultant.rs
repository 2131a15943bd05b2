//! Resultants via the subresultant polynomial remainder sequence.
//!
//! The algorithm runs over any integral domain with recognizable exact
//! division, so the same code eliminates a variable from Z[x], Q[x],
//! Q(√2)[x] and from nested polynomial rings like Z[x][t][u].  The sign
//! convention is the Sylvester determinant: Res(g,f) = (-1)^(mn) Res(f,g).

use crate::error::{ExactAlgError, Result};
use crate::ring::IntegralDomain;
use crate::unipoly::UniPoly;

impl<R: IntegralDomain> UniPoly<R> {
    /// Divide every coefficient exactly by `c`.
    pub fn exact_div_scalar(&self, c: &R) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coeffs().len());
        for a in self.coeffs() {
            out.push(a.exact_div(c)?);
        }
        Some(UniPoly::new(out))
    }
}

/// Resultant of two nonzero polynomials.
pub fn resultant<R: IntegralDomain>(p: &UniPoly<R>, q: &UniPoly<R>) -> Result<R> {
    if p.is_zero() || q.is_zero() {
        return Err(ExactAlgError::ZeroPolynomial);
    }
    let mut s_neg = false;
    let (mut a, mut b);
    if p.degree() < q.degree() {
        a = q.clone();
        b = p.clone();
        if p.degree().unwrap() % 2 == 1 && q.degree().unwrap() % 2 == 1 {
            s_neg = true;
        }
    } else {
        a = p.clone();
        b = q.clone();
    }
    let signed = |v: R, neg: bool| if neg { v.neg() } else { v };
    if b.degree() == Some(0) {
        let r = b.lc().unwrap().pow(a.deg_or_zero() as u32);
        return Ok(signed(r, s_neg));
    }

    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s_neg = !s_neg;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = r
            .exact_div_scalar(&divisor)
            .expect("subresultant: reduction step was not exact");
        g = a.lc().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant: h update was not exact"),
        };
        if b.is_zero() {
            return Ok(R::zero());
        }
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u32;
            let num = b.lc().unwrap().pow(da);
            let hf = if da <= 1 {
                num
            } else {
                num.exact_div(&h.pow(da - 1))
                    .expect("subresultant: final normalization was not exact")
            };
            return Ok(signed(hf, s_neg));
        }
    }
}

/// Discriminant disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p).
pub fn discriminant<R: IntegralDomain>(p: &UniPoly<R>) -> Result<R> {
    let d = p.degree().ok_or(ExactAlgError::ZeroPolynomial)?;
    if d == 0 {
        return Err(ExactAlgError::DegreeMismatch {
            expected: 1,
            found: 0,
        });
    }
    let res = resultant(p, &p.derivative())?;
    let quo = res
        .exact_div(p.lc().unwrap())
        .expect("discriminant: resultant not divisible by leading coefficient");
    Ok(if (d * (d - 1) / 2) % 2 == 1 {
        quo.neg()
    } else {
        quo
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type ZP = UniPoly<BigInt>;

    #[test]
    fn resultant_by_evaluation() {
        // Res(x^2 - 1, x - 2) = (x^2-1) evaluated at 2 ... with the
        // root-product orientation: product of (root - 2) = (1-2)(-1-2) = 3.
        let f = ZP::from_i64_slice(&[-1, 0, 1]);
        let g = ZP::from_i64_slice(&[-2, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(3));
    }

    #[test]
    fn swap_sign_convention() {
        // Res(x-a, x-b) = a-b and Res(x-b, x-a) = b-a
        let f = ZP::from_i64_slice(&[-5, 1]);
        let g = ZP::from_i64_slice(&[-7, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(-2));
        assert_eq!(resultant(&g, &f).unwrap(), BigInt::from(2));
    }

    #[test]
    fn zero_input_is_an_error() {
        let f = ZP::from_i64_slice(&[1, 1]);
        assert!(resultant(&f, &ZP::zero()).is_err());
        assert!(resultant(&ZP::zero(), &f).is_err());
    }

    #[test]
    fn shared_root_gives_zero() {
        let f = ZP::from_i64_slice(&[-1, 0, 1]);
        let g = ZP::from_i64_slice(&[-1, 1]);
        assert_eq!(resultant(&f, &g).unwrap(), BigInt::from(0));
    }

    #[test]
    fn discriminants() {
        // disc(x^2 + bx + c) = b^2 - 4c
        let p = ZP::from_i64_slice(&[3, -5, 1]);
        assert_eq!(discriminant(&p).unwrap(), BigInt::from(25 - 12));
        // disc(x^3 + px + q) = -4p^3 - 27q^2
        let p = ZP::from_i64_slice(&[2, -1, 0, 1]);
        assert_eq!(discriminant(&p).unwrap(), BigInt::from(4 - 108));
    }
}
