//! Builders for the q-expansions of the catalog: the theta-type sums
//! phi, psi, f(a,b), the eta quotients, the continued-fraction function v,
//! the companion function u, the Weber quotients p and b, alpha^4, and the
//! j-function.
//!
//! Products are accumulated in place on a window of exponents k/D, one
//! sparse binomial factor (1 ± q^e) at a time, so building to order N costs
//! O(N·D) per factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use exactalg::quadext::QuadExt;
use exactalg::ring::Ring;

use crate::coeff::{SeriesCoeff, Zeta8};
use crate::series::{rational, PuiseuxSeries};

fn ratio(n: i64, d: i64) -> BigRational {
    rational(n, d)
}

/// Number of 1/d steps needed to cover [base, order): ceil((order-base)*d).
fn steps(order: &BigRational, base: &BigRational, d: i64) -> usize {
    let diff = (order - base) * BigRational::from_integer(BigInt::from(d));
    if diff <= ratio(0, 1) {
        return 0;
    }
    let c = diff.ceil().to_integer().to_i64().expect("window too large");
    c as usize
}

/// In-place accumulator for unit products prod (1 + c q^(e/d))^power.
struct ProductAccumulator<C> {
    d: i64,
    coeffs: Vec<C>,
}

impl<C: SeriesCoeff> ProductAccumulator<C> {
    fn new(d: i64, len: usize) -> Self {
        let mut coeffs = vec![C::zero(); len];
        if let Some(first) = coeffs.first_mut() {
            *first = C::one();
        }
        ProductAccumulator { d, coeffs }
    }

    fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Multiply by (1 + c q^(e_idx/d))^power.  e_idx > 0.
    fn apply(&mut self, e_idx: usize, c: &C, power: i64) {
        assert!(e_idx > 0);
        if e_idx >= self.coeffs.len() || power == 0 || c.is_zero() {
            return;
        }
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                for k in (e_idx..self.coeffs.len()).rev() {
                    let add = self.coeffs[k - e_idx].mul(c);
                    self.coeffs[k] = self.coeffs[k].add(&add);
                }
            } else {
                for k in e_idx..self.coeffs.len() {
                    let sub = self.coeffs[k - e_idx].mul(c);
                    self.coeffs[k] = self.coeffs[k].sub(&sub);
                }
            }
        }
    }

    /// q^(pre_exp) * pre_coeff * (accumulated unit).
    fn into_series(self, pre_coeff: C, pre_exp: &BigRational) -> PuiseuxSeries<C> {
        let d = self.d;
        let scaled = pre_exp * BigRational::from_integer(BigInt::from(d));
        assert!(scaled.is_integer(), "prefactor exponent incompatible with D");
        let min = scaled.to_integer().to_i64().expect("exponent too large");
        let coeffs = self
            .coeffs
            .into_iter()
            .map(|c| c.mul(&pre_coeff))
            .collect();
        PuiseuxSeries::from_window(d, min, coeffs)
    }
}

fn denom_of(r: &BigRational) -> i64 {
    r.denom().to_i64().expect("denominator too large")
}

// ---------------------------------------------------------------------------
// theta-type sums
// ---------------------------------------------------------------------------

/// phi(±q^k) = sum_{n in Z} (±1)^n q^(k n²); `negated` selects the -q variant.
pub fn phi(scale: u32, negated: bool, order: &BigRational) -> PuiseuxSeries<BigRational> {
    let k = scale as i64;
    let len = steps(order, &ratio(0, 1), 1);
    let mut coeffs = vec![ratio(0, 1); len];
    if len > 0 {
        coeffs[0] = ratio(1, 1);
    }
    let mut n = 1i64;
    while (k * n * n) < len as i64 {
        let sign = if negated && n % 2 == 1 { -2 } else { 2 };
        coeffs[(k * n * n) as usize] = ratio(sign, 1);
        n += 1;
    }
    PuiseuxSeries::from_window(1, 0, coeffs)
}

/// psi(q^k) = sum_{n >= 0} q^(k n(n+1)/2).
pub fn psi(scale: u32, order: &BigRational) -> PuiseuxSeries<BigRational> {
    let k = scale as i64;
    let len = steps(order, &ratio(0, 1), 1);
    let mut coeffs = vec![ratio(0, 1); len];
    let mut n = 0i64;
    loop {
        let e = k * n * (n + 1) / 2;
        if e >= len as i64 {
            break;
        }
        coeffs[e as usize] = ratio(1, 1);
        n += 1;
    }
    PuiseuxSeries::from_window(1, 0, coeffs)
}

/// The two-variable theta sum f(sa·q^alpha, sb·q^beta) =
/// sum_n (sa)^(n(n+1)/2) (sb)^(n(n-1)/2) q^(alpha n(n+1)/2 + beta n(n-1)/2).
pub fn theta_f_sum(
    sa: i64,
    alpha: &BigRational,
    sb: i64,
    beta: &BigRational,
    order: &BigRational,
) -> PuiseuxSeries<BigRational> {
    assert!(sa == 1 || sa == -1);
    assert!(sb == 1 || sb == -1);
    let d = denom_of(alpha).lcm(&denom_of(beta));
    let len = steps(order, &ratio(0, 1), d);
    let mut coeffs = vec![ratio(0, 1); len];
    let mut push = |n: i64| -> bool {
        let tri_a = BigRational::from_integer(BigInt::from(n * (n + 1) / 2));
        let tri_b = BigRational::from_integer(BigInt::from(n * (n - 1) / 2));
        let e = alpha * &tri_a + beta * &tri_b;
        if e.is_negative() {
            // cannot happen for |q|<1 convergent parameters; guard anyway
            return true;
        }
        let idx = (&e * BigRational::from_integer(BigInt::from(d)))
            .to_integer()
            .to_i64()
            .expect("exponent too large");
        if idx >= len as i64 {
            return false;
        }
        let mut sign = 1i64;
        if sa < 0 && (n * (n + 1) / 2) % 2 != 0 {
            sign = -sign;
        }
        if sb < 0 && (n * (n - 1) / 2) % 2 != 0 {
            sign = -sign;
        }
        coeffs[idx as usize] = &coeffs[idx as usize] + ratio(sign, 1);
        true
    };
    let mut n = 0i64;
    while push(n) {
        n += 1;
    }
    let mut n = -1i64;
    while push(n) {
        n -= 1;
    }
    PuiseuxSeries::from_window(d, 0, coeffs)
}

/// Product form of f(sa·q^alpha, sb·q^beta) by the triple product:
/// (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.
pub fn theta_f_product(
    sa: i64,
    alpha: &BigRational,
    sb: i64,
    beta: &BigRational,
    order: &BigRational,
) -> PuiseuxSeries<BigRational> {
    let d = denom_of(alpha).lcm(&denom_of(beta));
    let len = steps(order, &ratio(0, 1), d);
    let mut acc = ProductAccumulator::<BigRational>::new(d, len);
    let step = alpha + beta; // exponent of ab
    let to_idx = |e: &BigRational| -> Option<usize> {
        let idx = (e * BigRational::from_integer(BigInt::from(d)))
            .to_integer()
            .to_i64()
            .unwrap();
        if idx > 0 && (idx as usize) < len {
            Some(idx as usize)
        } else {
            None
        }
    };
    // (-a; ab): factors 1 + sa q^(alpha + m step)
    let mut m = 0i64;
    loop {
        let e = alpha + &step * BigRational::from_integer(BigInt::from(m));
        match to_idx(&e) {
            Some(idx) => acc.apply(idx, &ratio(sa, 1), 1),
            None => break,
        }
        m += 1;
    }
    // (-b; ab)
    let mut m = 0i64;
    loop {
        let e = beta + &step * BigRational::from_integer(BigInt::from(m));
        match to_idx(&e) {
            Some(idx) => acc.apply(idx, &ratio(sb, 1), 1),
            None => break,
        }
        m += 1;
    }
    // (ab; ab): factors 1 - (sa sb) q^((m+1) step)
    let mut m = 1i64;
    loop {
        let e = &step * BigRational::from_integer(BigInt::from(m));
        match to_idx(&e) {
            Some(idx) => acc.apply(idx, &ratio(-sa * sb, 1), 1),
            None => break,
        }
        m += 1;
    }
    acc.into_series(ratio(1, 1), &ratio(0, 1))
}

/// Pentagonal-number sum for f(-q) = sum (-1)^n q^(n(3n-1)/2).
pub fn euler_pentagonal_sum(order: &BigRational) -> PuiseuxSeries<BigRational> {
    let len = steps(order, &ratio(0, 1), 1);
    let mut coeffs = vec![ratio(0, 1); len];
    let mut push = |n: i64| -> bool {
        let e = n * (3 * n - 1) / 2;
        if e < 0 || e >= len as i64 {
            return false;
        }
        let sign = if n.rem_euclid(2) == 1 { -1 } else { 1 };
        coeffs[e as usize] = &coeffs[e as usize] + ratio(sign, 1);
        true
    };
    let mut n = 0i64;
    while push(n) {
        n += 1;
    }
    let mut n = -1i64;
    while push(n) {
        n -= 1;
    }
    PuiseuxSeries::from_window(1, 0, coeffs)
}

/// chi(q) = (-q; q²)_inf.
pub fn chi(order: &BigRational) -> PuiseuxSeries<BigRational> {
    let len = steps(order, &ratio(0, 1), 1);
    let mut acc = ProductAccumulator::<BigRational>::new(1, len);
    let mut e = 1usize;
    while e < len {
        acc.apply(e, &ratio(1, 1), 1);
        e += 2;
    }
    acc.into_series(ratio(1, 1), &ratio(0, 1))
}

// ---------------------------------------------------------------------------
// eta quotients and Euler products
// ---------------------------------------------------------------------------

/// prod_{n>=1} (1 - q^(s n))^e.
pub fn euler_product(s: &BigRational, e: i64, order: &BigRational) -> PuiseuxSeries<BigRational> {
    let d = denom_of(s);
    let len = steps(order, &ratio(0, 1), d);
    let mut acc = ProductAccumulator::<BigRational>::new(d, len);
    apply_euler_factors(&mut acc, s, e);
    acc.into_series(ratio(1, 1), &ratio(0, 1))
}

fn apply_euler_factors<C: SeriesCoeff>(acc: &mut ProductAccumulator<C>, s: &BigRational, e: i64) {
    let d = acc.d;
    let step_idx = (s * BigRational::from_integer(BigInt::from(d)))
        .to_integer()
        .to_i64()
        .expect("scale incompatible with window denominator") as usize;
    assert!(step_idx > 0, "scale must be positive");
    let minus_one = C::from_rational(&ratio(-1, 1));
    let mut idx = step_idx;
    while idx < acc.len() {
        acc.apply(idx, &minus_one, e);
        idx += step_idx;
    }
}

/// prod_i eta(s_i · tau)^(e_i) as a q-expansion,
/// eta(s·tau) = q^(s/24) prod (1 - q^(s n)).
pub fn eta_quotient(parts: &[(BigRational, i64)], order: &BigRational) -> PuiseuxSeries<BigRational> {
    let mut pre = ratio(0, 1);
    let mut d = 1i64;
    for (s, e) in parts {
        pre += s / BigRational::from_integer(BigInt::from(24)) * BigRational::from_integer(BigInt::from(*e));
        d = d.lcm(&denom_of(s));
    }
    d = d.lcm(&denom_of(&pre));
    let len = steps(order, &pre, d);
    let mut acc = ProductAccumulator::<BigRational>::new(d, len);
    for (s, e) in parts {
        apply_euler_factors(&mut acc, s, *e);
    }
    acc.into_series(ratio(1, 1), &pre)
}

pub fn eta(s: &BigRational, order: &BigRational) -> PuiseuxSeries<BigRational> {
    eta_quotient(&[(s.clone(), 1)], order)
}

// ---------------------------------------------------------------------------
// the continued-fraction function v and its companion u
// ---------------------------------------------------------------------------

/// Kronecker symbol (2/n).
pub fn kronecker2(n: i64) -> i64 {
    if n % 2 == 0 {
        return 0;
    }
    match n.rem_euclid(8) {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => unreachable!(),
    }
}

/// Kronecker symbol (8/n) = (2/n)³, computed by multiplications so the two
/// product forms of v are produced through genuinely different code.
pub fn kronecker8(n: i64) -> i64 {
    kronecker2(n) * kronecker2(n) * kronecker2(n)
}

/// v(s·tau) = q^(s/2) prod (1 - q^(s n))^(chi(n)) with chi the Kronecker
/// symbol (8/·) (or (2/·) for the cross-check variant).
pub fn v_series_with(
    s: u32,
    order: &BigRational,
    chi: impl Fn(i64) -> i64,
) -> PuiseuxSeries<BigRational> {
    let s = s as i64;
    let pre = ratio(s, 2);
    let d = denom_of(&pre);
    let len = steps(order, &pre, d);
    let mut acc = ProductAccumulator::<BigRational>::new(d, len);
    let minus_one = ratio(-1, 1);
    let mut n = 1i64;
    loop {
        let idx = (s * n * d) as usize;
        if idx >= len {
            break;
        }
        let e = chi(n);
        if e != 0 {
            acc.apply(idx, &minus_one, e);
        }
        n += 1;
    }
    acc.into_series(ratio(1, 1), &pre)
}

pub fn v_series(s: u32, order: &BigRational) -> PuiseuxSeries<BigRational> {
    v_series_with(s, order, kronecker8)
}

/// u(s·tau) = √2 q^(s/8) prod (1 + q^(s n))^((-1)^n), over Q(√2).
pub fn u_series(s: u32, order: &BigRational) -> PuiseuxSeries<QuadExt> {
    let s = s as i64;
    let pre = ratio(s, 8);
    let d = denom_of(&pre);
    let len = steps(order, &pre, d);
    let mut acc = ProductAccumulator::<QuadExt>::new(d, len);
    let one = QuadExt::one();
    let mut n = 1i64;
    loop {
        let idx = (s * n * d) as usize;
        if idx >= len {
            break;
        }
        let e = if n % 2 == 0 { 1 } else { -1 };
        acc.apply(idx, &one, e);
        n += 1;
    }
    acc.into_series(QuadExt::sqrt2(), &pre)
}

/// u(s·tau)^p for even p, which is rational:
/// 2^(p/2) q^(s p/8) prod (1 + q^(s n))^(p (-1)^n).
pub fn u_even_power(s: u32, p: u32, order: &BigRational) -> PuiseuxSeries<BigRational> {
    assert!(p % 2 == 0);
    let s = s as i64;
    let pre = ratio(s * p as i64, 8);
    let d = denom_of(&pre).max(1);
    let len = steps(order, &pre, d);
    let mut acc = ProductAccumulator::<BigRational>::new(d, len);
    let one = ratio(1, 1);
    let mut n = 1i64;
    loop {
        let idx = (s * n * d) as usize;
        if idx >= len {
            break;
        }
        let e = if n % 2 == 0 { p as i64 } else { -(p as i64) };
        acc.apply(idx, &one, e);
        n += 1;
    }
    acc.into_series(
        BigRational::from_integer(BigInt::from(1i64 << (p / 2))),
        &pre,
    )
}

// ---------------------------------------------------------------------------
// Weber quotients
// ---------------------------------------------------------------------------

/// p(s·tau) = 2 q^(s/16) prod ( (1+q^(s n/2)) / (1+q^(s(2n-1)/4)) )².
pub fn p_weber(s: u32, order: &BigRational) -> PuiseuxSeries<BigRational> {
    let s = s as i64;
    let pre = ratio(s, 16);
    let d = denom_of(&pre).lcm(&denom_of(&ratio(s, 4)));
    let len = steps(order, &pre, d);
    let mut acc = ProductAccumulator::<BigRational>::new(d, len);
    let one = ratio(1, 1);
    let mut n = 1i64;
    loop {
        let idx = (ratio(s * n, 2) * BigRational::from_integer(BigInt::from(d)))
            .to_integer()
            .to_i64()
            .unwrap() as usize;
        if idx >= len {
            break;
        }
        acc.apply(idx, &one, 2);
        n += 1;
    }
    let mut n = 1i64;
    loop {
        let idx = (ratio(s * (2 * n - 1), 4) * BigRational::from_integer(BigInt::from(d)))
            .to_integer()
            .to_i64()
            .unwrap() as usize;
        if idx >= len {
            break;
        }
        acc.apply(idx, &one, -2);
        n += 1;
    }
    acc.into_series(ratio(2, 1), &pre)
}

/// b(s·tau) = 2 prod ( (1-q^(s(2n-1)/4)) / (1+q^(s(2n-1)/4)) )².
pub fn b_weber(s: u32, order: &BigRational) -> PuiseuxSeries<BigRational> {
    let s = s as i64;
    let d = denom_of(&ratio(s, 4));
    let len = steps(order, &ratio(0, 1), d);
    let mut acc = ProductAccumulator::<BigRational>::new(d, len);
    let one = ratio(1, 1);
    let minus_one = ratio(-1, 1);
    let mut n = 1i64;
    loop {
        let idx = (ratio(s * (2 * n - 1), 4) * BigRational::from_integer(BigInt::from(d)))
            .to_integer()
            .to_i64()
            .unwrap() as usize;
        if idx >= len {
            break;
        }
        acc.apply(idx, &minus_one, 2);
        acc.apply(idx, &one, -2);
        n += 1;
    }
    acc.into_series(ratio(2, 1), &ratio(0, 1))
}

// ---------------------------------------------------------------------------
// alpha and j
// ---------------------------------------------------------------------------

/// alpha(tau)^4 = -( eta(tau/4) / eta(tau) )^8, with rational coefficients.
pub fn alpha4(order: &BigRational) -> PuiseuxSeries<BigRational> {
    eta_quotient(&[(ratio(1, 4), 8), (ratio(1, 1), -8)], order).neg()
}

/// alpha(tau) = ζ₈⁻¹ eta(tau/4)² / eta(tau)², over Q(ζ₈).
pub fn alpha_zeta8(order: &BigRational) -> PuiseuxSeries<Zeta8> {
    let quotient = eta_quotient(&[(ratio(1, 4), 2), (ratio(1, 1), -2)], order);
    quotient.map(|c| {
        let z = Zeta8::zeta_pow(-1);
        let mut out = Zeta8::zero();
        for (k, comp) in z.0.iter().enumerate() {
            out.0[k] = comp * c;
        }
        out
    })
}

/// Eisenstein series E4 = 1 + 240 sum sigma_3(n) q^n.
pub fn e4(order: &BigRational) -> PuiseuxSeries<BigRational> {
    let len = steps(order, &ratio(0, 1), 1);
    let mut coeffs = vec![ratio(0, 1); len];
    if len > 0 {
        coeffs[0] = ratio(1, 1);
    }
    for n in 1..len as i64 {
        let mut sigma3 = 0i64;
        for d in 1..=n {
            if n % d == 0 {
                sigma3 += d * d * d;
            }
        }
        coeffs[n as usize] = ratio(240 * sigma3, 1);
    }
    PuiseuxSeries::from_window(1, 0, coeffs)
}

/// Delta = eta(tau)^24.
pub fn delta(order: &BigRational) -> PuiseuxSeries<BigRational> {
    eta_quotient(&[(ratio(1, 1), 24)], order)
}

/// j built through alpha^4: j = (A² - 16A + 16)³ / (A (A - 16)), A = alpha⁴.
pub fn j_series(order: &BigRational) -> PuiseuxSeries<BigRational> {
    let pad = order + ratio(2, 1);
    let a = alpha4(&pad);
    let num = a.apply_int_poly(&[16, -16, 1]).pow(3).expect("cube");
    let den = a.apply_int_poly(&[0, -16, 1]);
    num.mul(&den.inv().expect("alpha^4 (alpha^4 - 16) is invertible"))
        .truncate_to(order)
}

/// The classical route j = E4³ / Delta, used as a cross-check oracle.
pub fn j_classical(order: &BigRational) -> PuiseuxSeries<BigRational> {
    let pad = order + ratio(2, 1);
    let num = e4(&pad).pow(3).expect("cube");
    num.mul(&delta(&pad).inv().expect("Delta is invertible"))
        .truncate_to(order)
}

// ---------------------------------------------------------------------------
// reduced theta constants with characteristics
// ---------------------------------------------------------------------------

/// The rational series sum_n (-1)^(eps1 n) q^(m (8n+a)²/128), the
/// characteristic-(a/4, eps1) theta constant at m·tau with its constant
/// unimodular prefactor removed.
pub fn theta_reduced(a: i64, eps1: i64, m: u32, order: &BigRational) -> PuiseuxSeries<BigRational> {
    let m = m as i64;
    let base = ratio(m * a * a, 128);
    let d = denom_of(&base).lcm(&128);
    let len = steps(order, &ratio(0, 1), d);
    let mut coeffs = vec![ratio(0, 1); len];
    let mut push = |n: i64| -> bool {
        let t = 8 * n + a;
        let e = ratio(m * t * t, 128);
        let idx = (&e * BigRational::from_integer(BigInt::from(d)))
            .to_integer()
            .to_i64()
            .unwrap();
        if idx >= len as i64 {
            return false;
        }
        let sign = if (eps1 * n).rem_euclid(2) == 1 { -1 } else { 1 };
        coeffs[idx as usize] = &coeffs[idx as usize] + ratio(sign, 1);
        true
    };
    let mut n = 0i64;
    while push(n) {
        n += 1;
    }
    let mut n = -1i64;
    while push(n) {
        n -= 1;
    }
    PuiseuxSeries::from_window(d, 0, coeffs)
}

// ---------------------------------------------------------------------------
// catalog-key entry point
// ---------------------------------------------------------------------------

/// Catalog-keyed builder for the rational-coefficient series.
pub fn build(name: &str, order: &BigRational) -> Result<PuiseuxSeries<BigRational>, crate::QSeriesError> {
    let s = match name {
        "phi" => phi(1, false, order),
        "psi" => psi(1, order),
        "fminus" => euler_product(&ratio(1, 1), 1, order),
        "chi" => chi(order),
        "v" => v_series(1, order),
        "p" => p_weber(1, order),
        "b" => b_weber(1, order),
        "alpha4" => alpha4(order),
        "e4" => e4(order),
        "delta" => delta(order),
        "j" => j_series(order),
        _ => return Err(crate::QSeriesError::UnknownName(name.to_string())),
    };
    Ok(s)
}
