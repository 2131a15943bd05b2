//! Iterated resultants for the algebraic curve f(x,y) = x²y + x² + y² - y
//! and the periodic-point polynomials R_n(x) = R⁽ⁿ⁾(x,x).
//!
//! R⁽¹⁾(x,x₁) = f(x,x₁) and
//! R⁽ⁿ⁾(x,xₙ) = Res_{xₙ₋₁}( R⁽ⁿ⁻¹⁾(x,xₙ₋₁), f(xₙ₋₁,xₙ) ),
//! computed by the subresultant PRS over Z[x][xₙ].  The roots of R_n are the
//! periodic points of the two-valued algebraic function attached to f whose
//! minimal period divides n.

use num_bigint::BigInt;

use crate::bipoly::BiPoly;
use crate::error::Result;
use crate::quadext::QuadExt;
use crate::resultant::resultant;
use crate::ring::{Gf2, Ring};
use crate::unipoly::UniPoly;

pub type PolyZ = UniPoly<BigInt>;
/// Z[x][t]: outer variable t, inner variable x.
pub type PolyZ2 = UniPoly<PolyZ>;

/// f(x,y) = x²y + x² + y² - y.
pub fn curve_f() -> BiPoly<BigInt> {
    BiPoly::from_i64_rows(&[&[0, -1, 1], &[], &[1, 1]])
}

/// g(x,y) = y² - (x² - 4x + 1)y + x².
pub fn curve_g() -> BiPoly<BigInt> {
    BiPoly::from_i64_rows(&[&[0, -1, 1], &[0, 4], &[1, -1]])
}

/// F₂(X,Y) = X² + Y² - σ²(1 + X²Y²), σ = -1+√2.
pub fn curve_f2() -> BiPoly<QuadExt> {
    let s2 = QuadExt::sigma().mul(&QuadExt::sigma());
    let one = QuadExt::one();
    // rows by X-degree: row0 = -σ² + Y², row2 = 1 - σ²Y²
    BiPoly::new(vec![
        UniPoly::new(vec![s2.neg(), QuadExt::zero(), one.clone()]),
        UniPoly::zero(),
        UniPoly::new(vec![one, QuadExt::zero(), s2.neg()]),
    ])
}

/// f(u,t) viewed as a polynomial in u over Z[x][t]: u²(t+1) + (t² - t).
fn f_in_u() -> UniPoly<PolyZ2> {
    let c = |n: i64| PolyZ::from_i64_slice(&[n]);
    let t2_minus_t = PolyZ2::new(vec![c(0), c(-1), c(1)]);
    let t_plus_1 = PolyZ2::new(vec![c(1), c(1)]);
    UniPoly::new(vec![t2_minus_t, PolyZ2::zero(), t_plus_1])
}

/// The chain R⁽¹⁾ .. R⁽ⁿ⁾, each stored over Z[x] with the second variable
/// as the outer one.
pub struct PeriodicPolynomials {
    chain: Vec<PolyZ2>,
}

impl PeriodicPolynomials {
    /// Build the chain up to R⁽ⁿ_max⁾.  n_max >= 1.
    pub fn up_to(n_max: u32) -> Self {
        assert!(n_max >= 1);
        // R^(1)(x, t) = f(x, t) = t²  + (x²-1) t + x²
        let r1 = PolyZ2::new(vec![
            PolyZ::from_i64_slice(&[0, 0, 1]),
            PolyZ::from_i64_slice(&[-1, 0, 1]),
            PolyZ::from_i64_slice(&[1]),
        ]);
        let mut chain = vec![r1];
        let f_u = f_in_u();
        for _ in 1..n_max {
            let prev = chain.last().unwrap();
            // view R^(n-1)(x, v) as a polynomial in v over Z[x][t]
            let lifted: UniPoly<PolyZ2> = prev.map(|c: &PolyZ| PolyZ2::constant(c.clone()));
            let next = resultant(&lifted, &f_u)
                .expect("iterated resultant: inputs are nonzero by construction");
            chain.push(next);
        }
        PeriodicPolynomials { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// R⁽ⁿ⁾(x, xₙ) as a bivariate polynomial (x first, xₙ second).
    pub fn bivariate(&self, n: u32) -> BiPoly<BigInt> {
        BiPoly::from_nested_yx(&self.chain[(n - 1) as usize])
    }

    /// R_n(x) = R⁽ⁿ⁾(x,x), content-normalized with positive leading
    /// coefficient.
    pub fn periodic_poly(&self, n: u32) -> PolyZ {
        let raw = self.chain[(n - 1) as usize].eval(&PolyZ::x());
        raw.normalized_primitive()
    }
}

/// R⁽ⁿ⁾(x, xₙ) for a single n.
pub fn iterated_resultant(n: u32) -> BiPoly<BigInt> {
    PeriodicPolynomials::up_to(n).bivariate(n)
}

/// R_n(x) for a single n.
pub fn periodic_poly(n: u32) -> PolyZ {
    PeriodicPolynomials::up_to(n).periodic_poly(n)
}

/// (x^(2^n) + x)(x + 1)^(2^n - 1) over GF(2).
pub fn frobenius_factor_mod2(n: u32) -> UniPoly<Gf2> {
    let two_n = 1usize << n;
    let left = UniPoly::new({
        let mut v = vec![Gf2(false); two_n + 1];
        v[1] = Gf2(true);
        v[two_n] = Gf2(true);
        v
    });
    let x_plus_1 = UniPoly::new(vec![Gf2(true), Gf2(true)]);
    left.mul(&x_plus_1.pow((two_n - 1) as u32))
}

/// Verifies R_n ≡ (x^(2^n) + x)(x + 1)^(2^n - 1) (mod 2); returns the pass
/// flag together with the residual polynomial over GF(2).
pub fn check_prop13(n: u32, r_n: &PolyZ) -> (bool, UniPoly<Gf2>) {
    let residual = r_n.reduce_mod2().sub(&frobenius_factor_mod2(n));
    (residual.is_zero(), residual)
}

/// Bivariate congruence R⁽ⁿ⁾(x,t) ≡ (x^(2^n) + t)(t + 1)^(2^n - 1) (mod 2).
pub fn check_prop13_bivariate(n: u32, r_biv: &BiPoly<BigInt>) -> bool {
    let two_n = 1usize << n;
    let x_pow = BiPoly::new({
        let mut rows = vec![UniPoly::zero(); two_n + 1];
        rows[0] = UniPoly::new(vec![Gf2(false), Gf2(true)]); // t
        rows[two_n] = UniPoly::one();
        rows
    });
    let t_plus_1 = BiPoly::new(vec![UniPoly::new(vec![Gf2(true), Gf2(true)])]);
    let mut rhs = x_pow;
    let mut pw = t_plus_1;
    let mut e = (two_n - 1) as u32;
    // binary powering of the (t+1) factor inside BiPoly<Gf2>
    let mut acc = BiPoly::new(vec![UniPoly::one()]);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&pw);
        }
        e >>= 1;
        if e > 0 {
            pw = pw.mul(&pw);
        }
    }
    rhs = rhs.mul(&acc);
    r_biv.reduce_mod2() == rhs
}

/// Exact divisibility R_m | R_n over Z.
pub fn divides(r_m: &PolyZ, r_n: &PolyZ) -> bool {
    r_n.exact_div(r_m).is_some()
}

/// Degree claim deg R_n = 2^(n+1) - 1.
pub fn expected_degree(n: u32) -> usize {
    (1usize << (n + 1)) - 1
}

pub use crate::error::ExactAlgError;

/// Convenience wrapper matching the operation signature used by the CLI:
/// computes R_1..R_n and returns them with their mod-2 check results.
pub fn periodic_suite(n_max: u32) -> Result<Vec<(u32, PolyZ, bool)>> {
    let chain = PeriodicPolynomials::up_to(n_max);
    let mut out = Vec::new();
    for n in 1..=n_max {
        let p = chain.periodic_poly(n);
        let (ok, _) = check_prop13(n, &p);
        out.push((n, p, ok));
    }
    Ok(out)
}
