//! End-to-end checks of the periodic-point pipeline: orbit censuses,
//! valuations of R_n at the lifted points, Newton convergence, and an
//! independent term-by-term oracle for T at doubled precision.

use num_bigint::{BigInt, BigUint};

use exactalg::periodic::PeriodicPolynomials;
use padic2::{
    eval_t, find_periodic_points, orbit_period, verify_against_rn, CatalanTable,
    PadicElem, UnramifiedContext,
};

fn lcg(state: &mut u64) -> u64 {
    *state = state
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    *state
}

/// T(x) summed with every term computed by its own inversion: an
/// independent accumulation path for cross-checking eval_t.
fn eval_t_oracle(ctx: &UnramifiedContext, x: &PadicElem) -> PadicElem {
    let catalan = CatalanTable::new(ctx.precision() as usize);
    let t = ctx.sub(x, &ctx.from_u64(3));
    let t2 = ctx.mul(&t, &t);
    let x2 = ctx.mul(x, x);
    let head = ctx.add(&ctx.sub(&x2, &ctx.mul(&ctx.from_u64(4), x)), &ctx.from_u64(2));
    let mut sum = ctx.zero();
    let mut denom_inv = ctx.one();
    for k in 1..=(ctx.precision() as usize) {
        // divide by (x-3)^2 once per term, re-inverting each time
        denom_inv = ctx.mul(&denom_inv, &ctx.inv(&t2).unwrap());
        let c = BigUint::from(2u64).pow(k as u32) * catalan.get(k - 1);
        let term = ctx.mul(&ctx.from_bigint(&BigInt::from(c)), &denom_inv);
        sum = ctx.add(&sum, &term);
    }
    let tail = ctx.mul(&ctx.mul(&ctx.sub(x, &ctx.one()), &t), &sum);
    ctx.sub(&head, &tail)
}

#[test]
fn eval_t_matches_term_by_term_oracle_at_doubled_precision() {
    let ctx64 = UnramifiedContext::new(3, 64).unwrap();
    let ctx128 = UnramifiedContext::new(3, 128).unwrap();
    let catalan = CatalanTable::new(64);
    let mut state = 7u64;
    for _ in 0..10 {
        // sample at P=64, re-read the same coefficients at P=128
        let x64 = ctx64.random_point_off_one(&mut || lcg(&mut state));
        let x128 = ctx128.from_coeffs(x64.coeffs().to_vec());
        let fast = eval_t(&ctx64, &catalan, &x64).unwrap();
        let slow = eval_t_oracle(&ctx128, &x128);
        // agreement mod 2^64
        let mask = (BigUint::from(1u64) << 64) - BigUint::from(1u64);
        for (a, b) in fast.coeffs().iter().zip(slow.coeffs()) {
            assert_eq!(a.clone(), b & mask.clone());
        }
    }
}

#[test]
fn census_valuations_and_newton_doubling() {
    let chain = PeriodicPolynomials::up_to(4);
    for n in [2u32, 3, 4] {
        let ctx = UnramifiedContext::new(n as usize, 64).unwrap();
        let orbits = find_periodic_points(&ctx, n).unwrap();
        let total: usize = orbits.iter().map(|o| o.points.len()).sum();
        assert_eq!(total, (1 << n) - 2, "census at n = {n}");

        let r_n = chain.periodic_poly(n);
        let catalan = CatalanTable::new(64);
        for orbit in &orbits {
            assert!(n % orbit.period == 0, "orbit length divides n");
            // quadratic Newton convergence
            for w in orbit.newton_valuations.windows(2) {
                assert!(w[1] >= 2 * w[0], "trace {:?}", orbit.newton_valuations);
            }
            for p in &orbit.points {
                // T^n fixes the point to full precision
                let mut cur = p.clone();
                for _ in 0..n {
                    cur = eval_t(&ctx, &catalan, &cur).unwrap();
                }
                let diff = ctx.sub(&cur, p);
                assert!(ctx.valuation(&diff) >= 56, "T^n fixed-point defect");
                // R_n vanishes at the point
                let v = verify_against_rn(&ctx, p, &r_n);
                assert!(v >= 50, "v(R_n(x)) = {v} at n = {n}");
            }
        }
    }
}

#[test]
fn negative_control_random_unit_has_small_rn_valuation() {
    let chain = PeriodicPolynomials::up_to(3);
    let r3 = chain.periodic_poly(3);
    let ctx = UnramifiedContext::new(3, 64).unwrap();
    let mut state = 1234u64;
    let mut small = 0;
    for _ in 0..20 {
        let x = ctx.random_point_off_one(&mut || lcg(&mut state));
        let v = verify_against_rn(&ctx, &x, &r3);
        if v < 8 {
            small += 1;
        }
    }
    // overwhelmingly, random units are far from roots
    assert!(small >= 18, "only {small} of 20 negative controls were small");
}

#[test]
fn minimal_periods_partition_r4_roots() {
    // at n = 4 the residues of exact period 2 reappear: their orbit length
    // is 2 and orbit_period sees through T^2
    let ctx = UnramifiedContext::new(4, 64).unwrap();
    let orbits = find_periodic_points(&ctx, 4).unwrap();
    let mut by_period = std::collections::BTreeMap::new();
    for o in &orbits {
        *by_period.entry(o.period).or_insert(0usize) += o.points.len();
    }
    // 2^4 - 2 = 14 points: one 2-cycle (the degree-2 subfield minus GF(2))
    // and three 4-cycles
    assert_eq!(by_period.get(&2), Some(&2));
    assert_eq!(by_period.get(&4), Some(&12));
    for o in &orbits {
        let p = orbit_period(&ctx, &o.points[0], 8, 8).unwrap();
        assert_eq!(p, Some(o.period));
    }
}
