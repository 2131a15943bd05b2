//! The 2-adic Frobenius lift
//! T(x) = x² - 4x + 2 - (x-1)(x-3) Σ_{k≥1} C_{k-1} 2^k / (x-3)^{2k},
//! convergent on |x-3| = 1, together with Newton lifting of its periodic
//! points and their cross-checks against the periodic-point polynomials.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use exactalg::unipoly::UniPoly;

use crate::context::{PadicElem, UnramifiedContext};
use crate::PadicError;

/// Exact Catalan numbers C_0..C_K.
pub struct CatalanTable {
    values: Vec<BigUint>,
}

impl CatalanTable {
    pub fn new(k_max: usize) -> Self {
        // C_0 = 1, C_{k+1} = C_k · 2(2k+1)/(k+2); the division is exact
        let mut values = Vec::with_capacity(k_max + 1);
        values.push(BigUint::one());
        for k in 0..k_max {
            let next = (&values[k] * BigUint::from(2 * (2 * k + 1))) / BigUint::from(k + 2);
            values.push(next);
        }
        CatalanTable { values }
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Value-plus-derivative pairs for forward-mode differentiation of T.
#[derive(Clone, Debug)]
struct Dual {
    v: PadicElem,
    d: PadicElem,
}

struct DualOps<'a> {
    ctx: &'a UnramifiedContext,
}

impl<'a> DualOps<'a> {
    fn constant(&self, v: PadicElem) -> Dual {
        Dual {
            d: self.ctx.zero(),
            v,
        }
    }

    fn variable(&self, v: PadicElem) -> Dual {
        Dual {
            d: self.ctx.one(),
            v,
        }
    }

    fn add(&self, a: &Dual, b: &Dual) -> Dual {
        Dual {
            v: self.ctx.add(&a.v, &b.v),
            d: self.ctx.add(&a.d, &b.d),
        }
    }

    fn sub(&self, a: &Dual, b: &Dual) -> Dual {
        Dual {
            v: self.ctx.sub(&a.v, &b.v),
            d: self.ctx.sub(&a.d, &b.d),
        }
    }

    fn mul(&self, a: &Dual, b: &Dual) -> Dual {
        Dual {
            v: self.ctx.mul(&a.v, &b.v),
            d: self.ctx.add(&self.ctx.mul(&a.v, &b.d), &self.ctx.mul(&a.d, &b.v)),
        }
    }

    fn inv(&self, a: &Dual) -> Result<Dual, PadicError> {
        let iv = self.ctx.inv(&a.v)?;
        let iv2 = self.ctx.mul(&iv, &iv);
        Dual {
            v: iv,
            d: self.ctx.neg(&self.ctx.mul(&iv2, &a.d)),
        }
        .pipe_ok()
    }
}

trait PipeOk: Sized {
    fn pipe_ok<E>(self) -> Result<Self, E> {
        Ok(self)
    }
}
impl PipeOk for Dual {}

fn eval_t_dual(
    ctx: &UnramifiedContext,
    catalan: &CatalanTable,
    x: &Dual,
) -> Result<Dual, PadicError> {
    let ops = DualOps { ctx };
    let three = ops.constant(ctx.from_u64(3));
    let one = ops.constant(ctx.one());
    let t = ops.sub(x, &three); // x - 3
    if ctx.valuation(&t.v) != 0 {
        return Err(PadicError::OutsideDomain);
    }
    // u = 1/(x-3)²; term k contributes C_{k-1} 2^k u^k
    let u = ops.inv(&ops.mul(&t, &t))?;
    let prec = ctx.precision();
    let mut sum = ops.constant(ctx.zero());
    let mut upow = one.clone();
    let mut two_pow = BigUint::one();
    for k in 1..=(prec as usize) {
        upow = ops.mul(&upow, &u);
        two_pow <<= 1;
        let c = &two_pow * catalan.get(k - 1);
        let coeff = ops.constant(ctx.from_bigint(&BigInt::from(c)));
        sum = ops.add(&sum, &ops.mul(&coeff, &upow));
    }
    // x² - 4x + 2 - (x-1)(x-3) sum
    let x2 = ops.mul(x, x);
    let four_x = ops.mul(&ops.constant(ctx.from_u64(4)), x);
    let head = ops.add(
        &ops.sub(&x2, &four_x),
        &ops.constant(ctx.from_u64(2)),
    );
    let tail = ops.mul(&ops.mul(&ops.sub(x, &one), &t), &sum);
    Ok(ops.sub(&head, &tail))
}

/// T(x); requires |x-3| = 1.
pub fn eval_t(
    ctx: &UnramifiedContext,
    catalan: &CatalanTable,
    x: &PadicElem,
) -> Result<PadicElem, PadicError> {
    let ops = DualOps { ctx };
    Ok(eval_t_dual(ctx, catalan, &ops.constant(x.clone()))?.v)
}

/// T iterated n times together with its derivative at x.
fn eval_tn_dual(
    ctx: &UnramifiedContext,
    catalan: &CatalanTable,
    x: &PadicElem,
    n: u32,
) -> Result<Dual, PadicError> {
    let ops = DualOps { ctx };
    let mut cur = ops.variable(x.clone());
    for _ in 0..n {
        cur = eval_t_dual(ctx, catalan, &cur)?;
    }
    Ok(cur)
}

/// One orbit of periodic points: the points in T-iteration order, the
/// orbit length, and the valuation trace of the Newton updates for the
/// lifted representative.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub points: Vec<PadicElem>,
    pub period: u32,
    pub newton_valuations: Vec<u32>,
}

/// Newton-lift the fixed point of T^n with the given residue.
fn lift_fixed_point(
    ctx: &UnramifiedContext,
    catalan: &CatalanTable,
    residue: u64,
    n: u32,
) -> Result<(PadicElem, Vec<u32>), PadicError> {
    let mut x = ctx.from_residue(residue);
    let mut trace = Vec::new();
    for _ in 0..64 {
        let tn = eval_tn_dual(ctx, catalan, &x, n)?;
        let g = ctx.sub(&tn.v, &x); // g(x) = T^n(x) - x
        let v = ctx.valuation(&g);
        if v >= ctx.precision() {
            return Ok((x, trace));
        }
        trace.push(v);
        let gd = ctx.sub(&tn.d, &ctx.one()); // g'(x) = (T^n)'(x) - 1, a unit
        let update = ctx.mul(&g, &ctx.inv(&gd)?);
        x = ctx.sub(&x, &update);
    }
    Err(PadicError::NoConvergence)
}

/// All periodic points of exact residue data in the degree-n context:
/// the 2^n - 2 lifts of the residues other than 0 and 1, grouped into
/// T-orbits.  Requires ctx.residue_degree() == n.
pub fn find_periodic_points(
    ctx: &UnramifiedContext,
    n: u32,
) -> Result<Vec<Orbit>, PadicError> {
    if ctx.residue_degree() != n as usize {
        return Err(PadicError::BadContext(format!(
            "need residue degree {n}, context has {}",
            ctx.residue_degree()
        )));
    }
    if ctx.precision() < 16 {
        return Err(PadicError::BadContext("need P >= 16".into()));
    }
    let catalan = CatalanTable::new(ctx.precision() as usize);
    let size = 1u64 << n;
    let mut seen = vec![false; size as usize];
    seen[0] = true;
    seen[1] = true;
    let mut orbits = Vec::new();
    for r in 2..size {
        if seen[r as usize] {
            continue;
        }
        // Frobenius orbit of the residue
        let mut residues = vec![r];
        seen[r as usize] = true;
        let mut s = ctx.gf_mul(r, r);
        while s != r {
            seen[s as usize] = true;
            residues.push(s);
            s = ctx.gf_mul(s, s);
        }
        let period = residues.len() as u32;
        let (x0, trace) = lift_fixed_point(ctx, &catalan, r, n)?;
        let mut points = vec![x0.clone()];
        let mut cur = x0;
        for expect in residues.iter().skip(1) {
            cur = eval_t(ctx, &catalan, &cur)?;
            if ctx.residue(&cur) != *expect {
                return Err(PadicError::NoConvergence);
            }
            points.push(cur.clone());
        }
        orbits.push(Orbit {
            points,
            period,
            newton_valuations: trace,
        });
    }
    Ok(orbits)
}

/// Valuation of R_n(x), computed by Horner with the exact integer
/// coefficients reduced mod 2^P.
pub fn verify_against_rn(
    ctx: &UnramifiedContext,
    x: &PadicElem,
    r_n: &UniPoly<BigInt>,
) -> u32 {
    let mut acc = ctx.zero();
    for c in r_n.coeffs().iter().rev() {
        acc = ctx.mul(&acc, x);
        acc = ctx.add(&acc, &ctx.from_bigint(c));
    }
    ctx.valuation(&acc)
}

/// Smallest k <= n_max with v(T^k(x) - x) >= P - slack, or None.
pub fn orbit_period(
    ctx: &UnramifiedContext,
    x: &PadicElem,
    n_max: u32,
    slack: u32,
) -> Result<Option<u32>, PadicError> {
    if ctx.valuation(&ctx.sub(x, &ctx.from_u64(3))) != 0 {
        return Err(PadicError::OutsideDomain);
    }
    let catalan = CatalanTable::new(ctx.precision() as usize);
    let mut cur = x.clone();
    for k in 1..=n_max {
        cur = eval_t(ctx, &catalan, &cur)?;
        let diff = ctx.sub(&cur, x);
        if ctx.valuation(&diff) + slack >= ctx.precision() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn ctx(m: usize, p: u32) -> UnramifiedContext {
        UnramifiedContext::new(m, p).unwrap()
    }

    #[test]
    fn catalan_values() {
        let t = CatalanTable::new(10);
        let expect: [u64; 11] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(t.get(k), &BigUint::from(*e));
        }
    }

    #[test]
    fn catalan_closed_form_via_binomial_half() {
        // C_{k-1} = (-1)^(k-1) 2^(2k-1) binom(1/2, k), exactly, k <= 40
        let t = CatalanTable::new(40);
        for k in 1usize..=40 {
            let mut binom = BigRational::one();
            for i in 0..k {
                let term = BigRational::new(BigInt::from(1), BigInt::from(2))
                    - BigRational::from_integer(BigInt::from(i as i64));
                binom *= term / BigRational::from_integer(BigInt::from((i + 1) as i64));
            }
            let sign = if (k - 1) % 2 == 0 {
                BigInt::from(1)
            } else {
                BigInt::from(-1)
            };
            let rhs = BigRational::from_integer(sign)
                * BigRational::from_integer(BigInt::from(2).pow(2 * k as u32 - 1))
                * binom;
            assert_eq!(
                rhs,
                BigRational::from_integer(BigInt::from(t.get(k - 1).clone())),
                "k = {k}"
            );
        }
    }

    #[test]
    fn t_is_a_frobenius_lift() {
        // T(x) ≡ x² mod 2 on |x-3| = 1
        let c = ctx(3, 32);
        let cat = CatalanTable::new(32);
        for r in [2u64, 3, 4, 5, 6, 7] {
            let x = c.from_residue(r);
            let t = eval_t(&c, &cat, &x).unwrap();
            assert_eq!(c.residue(&t), c.gf_mul(r, r), "residue {r}");
            // first series term: T - (x²-4x+2) ≡ -(x-1)(x-3) 2/(x-3)² mod 4
            let diff = c.sub(
                &t,
                &{
                    let x2 = c.mul(&x, &x);
                    let fx = c.mul(&c.from_u64(4), &x);
                    c.add(&c.sub(&x2, &fx), &c.from_u64(2))
                },
            );
            assert!(c.valuation(&diff) >= 1);
        }
    }

    #[test]
    fn t_satisfies_its_quadratic_relation() {
        // g(x, T(x)) = T² - (x²-4x+1)T + x² ≡ 0 mod 2^P: the strongest
        // end-to-end check of the series, its signs, and the Catalan table.
        let c = ctx(3, 64);
        let cat = CatalanTable::new(64);
        let mut state = 0x12345u64;
        let mut rng = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for _ in 0..25 {
            let x = c.random_point_off_one(&mut rng);
            let t = eval_t(&c, &cat, &x).unwrap();
            let x2 = c.mul(&x, &x);
            let coeff = c.add(&c.sub(&x2, &c.mul(&c.from_u64(4), &x)), &c.one());
            let g = c.add(&c.sub(&c.mul(&t, &t), &c.mul(&coeff, &t)), &x2);
            assert_eq!(c.valuation(&g), 64);
        }
    }

    #[test]
    fn domain_wall_is_enforced() {
        let c = ctx(2, 32);
        let cat = CatalanTable::new(32);
        // residue 1 makes x-3 non-unit
        let x = c.one();
        assert!(matches!(
            eval_t(&c, &cat, &x),
            Err(PadicError::OutsideDomain)
        ));
    }

    #[test]
    fn eq_8_6_on_random_units() {
        // |T(x) - 3| = |x - 3|² = 1
        let c = ctx(2, 32);
        let cat = CatalanTable::new(32);
        let mut state = 99u64;
        let mut rng = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for _ in 0..100 {
            let x = c.random_point_off_one(&mut rng);
            let t = eval_t(&c, &cat, &x).unwrap();
            let t3 = c.sub(&t, &c.from_u64(3));
            assert_eq!(c.valuation(&t3), 0);
        }
    }

    #[test]
    fn no_periodic_points_in_the_prime_field() {
        let c = ctx(1, 32);
        let orbits = find_periodic_points(&c, 1).unwrap();
        assert!(orbits.is_empty());
    }

    #[test]
    fn two_cycle_at_degree_two() {
        let c = ctx(2, 64);
        let orbits = find_periodic_points(&c, 2).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].period, 2);
        assert_eq!(orbits[0].points.len(), 2);
        // Newton valuations double monotonically
        let t = &orbits[0].newton_valuations;
        for w in t.windows(2) {
            assert!(w[1] >= 2 * w[0], "trace {t:?}");
        }
        // and the two points map to each other under T
        let cat = CatalanTable::new(64);
        let back = eval_t(&c, &cat, &orbits[0].points[1]).unwrap();
        assert!(c.is_zero(&c.sub(&back, &orbits[0].points[0])));
    }

    #[test]
    fn orbit_census_at_degree_three() {
        let c = ctx(3, 64);
        let orbits = find_periodic_points(&c, 3).unwrap();
        let total: usize = orbits.iter().map(|o| o.points.len()).sum();
        assert_eq!(total, 6); // 2³ - 2
        assert_eq!(orbits.len(), 2);
        for o in &orbits {
            assert_eq!(o.period, 3);
        }
    }

    #[test]
    fn periods_via_orbit_period() {
        let c = ctx(3, 64);
        let orbits = find_periodic_points(&c, 3).unwrap();
        for o in &orbits {
            for p in &o.points {
                assert_eq!(orbit_period(&c, p, 6, 8).unwrap(), Some(3));
            }
        }
        // a random unit is not periodic
        let mut state = 4242u64;
        let mut rng = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        let x = c.random_point_off_one(&mut rng);
        assert_eq!(orbit_period(&c, &x, 6, 8).unwrap(), None);
    }
}
