//! Random-series property suite: ring axioms on truncated series,
//! inverse correctness, and compatibility of rescaling with products.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qseries::series::rational;
use qseries::PuiseuxSeries;

type S = PuiseuxSeries<BigRational>;

fn random_series(rng: &mut ChaCha8Rng, allow_fractional: bool) -> S {
    let d = if allow_fractional {
        *[1i64, 2, 3, 4, 8].iter().nth(rng.gen_range(0..5)).unwrap()
    } else {
        1
    };
    let min = rng.gen_range(-4i64..4);
    let len = rng.gen_range(6usize..18);
    let coeffs = (0..len)
        .map(|_| rational(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)))
        .collect();
    S::from_window(d, min, coeffs)
}

#[test]
fn ring_axioms_on_random_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for case in 0..200 {
        let a = random_series(&mut rng, true);
        let b = random_series(&mut rng, true);
        let c = random_series(&mut rng, true);
        // commutativity
        assert_eq!(a.mul(&b), b.mul(&a), "case {case}");
        assert_eq!(a.add(&b), b.add(&a), "case {case}");
        // associativity (compare through the common precision)
        let left = a.mul(&b).mul(&c);
        let right = a.mul(&b.mul(&c));
        let cut = left
            .truncation_order()
            .min(right.truncation_order());
        assert!(
            left.truncate_to(&cut).sub(&right.truncate_to(&cut)).is_zero(),
            "associativity case {case}"
        );
        // distributivity
        let left = a.mul(&b.add(&c));
        let right = a.mul(&b).add(&a.mul(&c));
        let cut = left.truncation_order().min(right.truncation_order());
        assert!(
            left.truncate_to(&cut).sub(&right.truncate_to(&cut)).is_zero(),
            "distributivity case {case}"
        );
    }
}

#[test]
fn inverse_multiplies_to_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(402);
    let mut done = 0;
    while done < 60 {
        let s = random_series(&mut rng, true);
        let inv = match s.inv() {
            Ok(i) => i,
            Err(_) => continue,
        };
        let prod = s.mul(&inv);
        let one = S::one_to(&rational(1, 1));
        // the product is 1 through its full tracked precision
        let diff = prod.sub(&one.truncate_to(&prod.truncation_order()));
        let residue = diff.truncate_to(&prod.truncation_order());
        assert!(
            residue.is_zero(),
            "s * s^-1 != 1 for {s:?}"
        );
        done += 1;
    }
}

#[test]
fn rescale_commutes_with_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(403);
    for _ in 0..60 {
        let a = random_series(&mut rng, false);
        let b = random_series(&mut rng, false);
        for k in [2u32, 3, 5] {
            let left = a.mul(&b).rescale(k);
            let right = a.rescale(k).mul(&b.rescale(k));
            assert_eq!(left, right);
        }
    }
}

#[test]
fn truncation_tracking_is_pessimistic() {
    // products never claim more precision than either operand supports
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..100 {
        let a = random_series(&mut rng, true);
        let b = random_series(&mut rng, true);
        let p = a.mul(&b);
        let pa = a.truncation_order() + b.valuation().unwrap_or_else(|| a.truncation_order());
        let claimed = p.truncation_order();
        assert!(claimed <= pa + rational(1, 1));
    }
}
