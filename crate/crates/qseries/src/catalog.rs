//! The identity catalog: every formally-checkable relation between the
//! catalog series, verified as an exact residual through a requested order.
//!
//! Each runner returns left-minus-right; the verifier reports the first
//! nonzero residual coefficient on failure.  Metadata (id, reference tag,
//! description) lives in the golden data file and is joined here by id.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use exactalg::identities::rational_function_mobius_residual;
use exactalg::mobius::MobiusMap;
use exactalg::quadext::QuadExt;
use exactalg::ring::Ring;
use exactalg::unipoly::UniPoly;
use goldendata::{golden, RationalFunctionData};

use crate::builders as b;
use crate::series::{rational, PuiseuxSeries};
use crate::QSeriesError;

type RatSeries = PuiseuxSeries<BigRational>;
type QuadSeries = PuiseuxSeries<QuadExt>;

/// A residual from one identity check.
pub enum Residual {
    Rational(RatSeries),
    Quad(QuadSeries),
    Poly(UniPoly<QuadExt>),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Rational(s) => s.is_zero(),
            Residual::Quad(s) => s.is_zero(),
            Residual::Poly(p) => p.is_zero(),
        }
    }

    pub fn first_bad(&self) -> Option<(String, String)> {
        match self {
            Residual::Rational(s) => s
                .first_nonzero()
                .map(|(e, c)| (format_rational(&e), format_rational(&c))),
            Residual::Quad(s) => s
                .first_nonzero()
                .map(|(e, c)| (format_rational(&e), c.to_string())),
            Residual::Poly(p) => p
                .coeffs()
                .iter()
                .enumerate()
                .find(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k.to_string(), c.to_string())),
        }
    }

    /// Order through which the residual is certified, when it is a series.
    pub fn certified_order(&self) -> Option<BigRational> {
        match self {
            Residual::Rational(s) => Some(s.truncation_order()),
            Residual::Quad(s) => Some(s.truncation_order()),
            Residual::Poly(_) => None,
        }
    }
}

fn format_rational(r: &BigRational) -> String {
    exactalg::serial::rational_to_string(r)
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityOutcome {
    pub id: String,
    pub reference: String,
    pub description: String,
    pub status: String,
    pub order_checked: String,
    pub low_order: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_bad_exponent: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_bad_coefficient: Option<String>,
}

pub fn identity_ids() -> Vec<String> {
    golden().identities.iter().map(|m| m.id.clone()).collect()
}

fn ratio(n: i64, d: i64) -> BigRational {
    rational(n, d)
}

fn constant(c: i64, order: &BigRational) -> RatSeries {
    PuiseuxSeries::constant_to(ratio(c, 1), order)
}

/// Polynomial with integer coefficients list applied to a series.
fn poly_at(coeffs: &[i64], s: &RatSeries) -> RatSeries {
    s.apply_int_poly(coeffs)
}

/// Denominator polynomial of a golden rational-function table, expanded.
fn denominator_poly(data: &RationalFunctionData) -> UniPoly<BigInt> {
    let mut out = UniPoly::one();
    for (coeffs, e) in &data.denominator_factors {
        out = out.mul(&UniPoly::from_i64_slice(coeffs).pow(*e));
    }
    out
}

fn numerator_poly(data: &RationalFunctionData) -> UniPoly<BigInt> {
    UniPoly::from_i64_slice(&data.numerator).pow(data.numerator_power)
}

/// Residual builder for one identity id at the given order.
pub fn residual_for(id: &str, order: &BigRational) -> Result<Residual, QSeriesError> {
    let o = order.clone();
    let pad = |extra: i64| &o + ratio(extra, 1);
    let r = match id {
        "I2.11" => {
            let lhs = b::phi(1, false, &o).pow(2)?.add(&b::phi(1, true, &o).pow(2)?);
            let rhs = b::phi(2, false, &o).pow(2)?.scale(&ratio(2, 1));
            Residual::Rational(lhs.sub(&rhs))
        }
        "I2.12" => {
            let lhs = b::phi(1, false, &o).pow(4)?.sub(&b::phi(1, true, &o).pow(4)?);
            let rhs = b::psi(2, &o)
                .pow(4)?
                .mul_qpow(&ratio(1, 1))
                .scale(&ratio(16, 1));
            Residual::Rational(lhs.sub(&rhs))
        }
        "I2.13" => {
            let lhs = b::phi(1, false, &o).mul(&b::psi(2, &o));
            let rhs = b::psi(1, &o).pow(2)?;
            Residual::Rational(lhs.sub(&rhs))
        }
        "I2.14" => {
            let lhs = b::phi(1, true, &o)
                .add(&b::phi(2, false, &o))
                .mul(&b::psi(1, &o));
            let f35 = b::theta_f_sum(1, &ratio(3, 1), 1, &ratio(5, 1), &o);
            let rhs = f35.pow(2)?.scale(&ratio(2, 1));
            Residual::Rational(lhs.sub(&rhs))
        }
        "I2.15" => {
            let lhs = b::phi(1, true, &o)
                .sub(&b::phi(2, false, &o))
                .mul(&b::psi(1, &o));
            let f17 = b::theta_f_sum(1, &ratio(1, 1), 1, &ratio(7, 1), &o);
            let rhs = f17
                .pow(2)?
                .mul_qpow(&ratio(1, 1))
                .scale(&ratio(-2, 1));
            Residual::Rational(lhs.sub(&rhs))
        }
        "I2.16" => {
            let lhs = b::phi(1, false, &o).mul(&b::phi(1, true, &o));
            let rhs = b::phi(2, true, &o).pow(2)?;
            Residual::Rational(lhs.sub(&rhs))
        }
        "I2.17" => {
            let lhs = b::phi(1, false, &o).add(&b::phi(1, true, &o));
            let rhs = b::phi(4, false, &o).scale(&ratio(2, 1));
            Residual::Rational(lhs.sub(&rhs))
        }
        "I2.18" => {
            let lhs = b::phi(1, false, &o).pow(2)?.sub(&b::phi(1, true, &o).pow(2)?);
            let rhs = b::psi(4, &o)
                .pow(2)?
                .mul_qpow(&ratio(1, 1))
                .scale(&ratio(8, 1));
            Residual::Rational(lhs.sub(&rhs))
        }
        "EULER" => {
            let lhs = b::euler_pentagonal_sum(&o);
            let rhs = b::euler_product(&ratio(1, 1), 1, &o);
            Residual::Rational(lhs.sub(&rhs))
        }
        "JTP35" => {
            let lhs = b::theta_f_sum(-1, &ratio(3, 1), -1, &ratio(5, 1), &o);
            let rhs = b::theta_f_product(-1, &ratio(3, 1), -1, &ratio(5, 1), &o);
            Residual::Rational(lhs.sub(&rhs))
        }
        "JTP17" => {
            let lhs = b::theta_f_sum(-1, &ratio(1, 1), -1, &ratio(7, 1), &o);
            let rhs = b::theta_f_product(-1, &ratio(1, 1), -1, &ratio(7, 1), &o);
            Residual::Rational(lhs.sub(&rhs))
        }
        "P1a" => {
            let u4_1 = b::u_even_power(1, 4, &o);
            let u4_2 = b::u_even_power(2, 4, &o);
            let u2_2 = b::u_even_power(2, 2, &o);
            let lhs = u4_1.mul(&u4_2.add(&constant(1, &o)));
            Residual::Rational(lhs.sub(&u2_2.scale(&ratio(2, 1))))
        }
        "P1b" => {
            let x = b::v_series(1, &o);
            let y = b::v_series(2, &o);
            let lhs = x.pow(2)?.mul(&y).add(&x.pow(2)?).add(&y.pow(2)?);
            Residual::Rational(lhs.sub(&y))
        }
        "I3.2" => {
            let u4 = b::u_even_power(1, 4, &o);
            let v = b::v_series(1, &o);
            let v2 = v.pow(2)?;
            let lhs = u4.mul(&v2.add(&constant(1, &o)).pow(2)?);
            let rhs = v
                .mul(&v2.sub(&constant(1, &o)))
                .scale(&ratio(4, 1));
            Residual::Rational(lhs.add(&rhs))
        }
        "P2" => {
            let x = b::v_series(1, &o).pow(2)?;
            let y = b::v_series(2, &o).pow(2)?;
            let coeff = poly_at(&[1, -4, 1], &x); // x² - 4x + 1
            let lhs = y.pow(2)?.sub(&coeff.mul(&y)).add(&x.pow(2)?);
            Residual::Rational(lhs)
        }
        "P5" => {
            let v = b::v_series(1, &o);
            let p8 = b::p_weber(8, &o);
            let lhs = p8.mul(&constant(1, &o).sub(&v.pow(2)?));
            Residual::Rational(lhs.sub(&v.scale(&ratio(2, 1))))
        }
        "P6" => {
            let p1 = b::p_weber(1, &o);
            let p2 = b::p_weber(2, &o);
            let lhs = p1
                .pow(2)?
                .mul(&p2.pow(2)?)
                .add(&p1.pow(2)?)
                .sub(&p2.scale(&ratio(2, 1)));
            Residual::Rational(lhs)
        }
        "P7a" => {
            let x = b::b_weber(1, &o);
            let y = b::b_weber(2, &o);
            let lhs = x
                .pow(2)?
                .mul(&y.pow(2)?)
                .add(&y.pow(2)?.scale(&ratio(4, 1)))
                .sub(&x.scale(&ratio(16, 1)));
            Residual::Rational(lhs)
        }
        "P7b" => {
            let x = b::b_weber(1, &o);
            let z = b::b_weber(4, &o);
            let lhs = x.add(&constant(2, &o)).pow(4)?.mul(&z.pow(4)?);
            let rhs = x
                .pow(3)?
                .add(&x.scale(&ratio(4, 1)))
                .scale(&ratio(256, 1));
            Residual::Rational(lhs.sub(&rhs))
        }
        "P8" => {
            let v = b::v_series(1, &o);
            let b4 = b::b_weber(4, &o);
            let v2 = v.pow(2)?;
            let lhs = v2.add(&constant(1, &o)).pow(2)?.mul(&b4.pow(2)?);
            let rhs = poly_at(&[1, -6, 1], &v2).scale(&ratio(4, 1));
            Residual::Rational(lhs.sub(&rhs))
        }
        "WEBER" => {
            let b4 = b::b_weber(4, &o);
            let p4 = b::p_weber(4, &o);
            let lhs = b4.pow(4)?.add(&p4.pow(4)?.scale(&ratio(16, 1)));
            Residual::Rational(lhs.sub(&constant(16, &o)))
        }
        "I5.3" => {
            let lhs = b::j_series(&o);
            let rhs = b::j_classical(&o);
            Residual::Rational(lhs.sub(&rhs))
        }
        "I5.4" => {
            let a4 = b::alpha4(&pad(2));
            let b4 = b::b_weber(1, &pad(2)).pow(4)?;
            let lhs = a4.scale(&ratio(16, 1)).add(&b4.scale(&ratio(16, 1)));
            Residual::Rational(lhs.sub(&a4.mul(&b4)).truncate_to(&o))
        }
        "I5.5" => {
            let j4 = b::j_series(&(&o / ratio(4, 1) + ratio(2, 1))).rescale(4);
            let v2 = b::v_series(1, &pad(8)).pow(2)?;
            let data = golden().rational_function("j4");
            let mut den: Option<RatSeries> = None;
            for (coeffs, e) in &data.denominator_factors {
                let f = poly_at(coeffs, &v2).pow(*e as i64)?;
                den = Some(match den {
                    None => f,
                    Some(d) => d.mul(&f),
                });
            }
            let lhs = j4.mul(&den.unwrap());
            let rhs = poly_at(&data.numerator, &v2).pow(data.numerator_power as i64)?;
            Residual::Rational(lhs.sub(&rhs).truncate_to(&o))
        }
        "I5.7" => {
            let j = b::j_series(&pad(4));
            let v2 = b::v_series(1, &pad(8)).pow(2)?;
            let data = golden().rational_function("j2");
            let mut den: Option<RatSeries> = None;
            for (coeffs, e) in &data.denominator_factors {
                let f = poly_at(coeffs, &v2).pow(*e as i64)?;
                den = Some(match den {
                    None => f,
                    Some(d) => d.mul(&f),
                });
            }
            let lhs = j.mul(&den.unwrap());
            let rhs = poly_at(&data.numerator, &v2).pow(data.numerator_power as i64)?;
            Residual::Rational(lhs.sub(&rhs).truncate_to(&o))
        }
        "I5.9" => {
            let v = b::v_series(1, &pad(8));
            let lhs_factor = b::eta_quotient(&[(ratio(2, 1), 2), (ratio(8, 1), 4)], &pad(8));
            let rhs = b::eta_quotient(&[(ratio(1, 1), 4), (ratio(4, 1), 2)], &pad(8));
            let v2 = v.pow(2)?;
            let lhs = v.pow(-2)?.add(&v2).sub(&constant(6, &pad(8))).mul(&lhs_factor);
            Residual::Rational(lhs.sub(&rhs).truncate_to(&o))
        }
        "JZ" => {
            let v = b::v_series(1, &pad(24));
            let z = v.sub(&v.inv()?);
            let j = b::j_series(&pad(24));
            let data = golden().rational_function("jz");
            let mut den: Option<RatSeries> = None;
            for (coeffs, e) in &data.denominator_factors {
                let f = poly_at(coeffs, &z).pow(*e as i64)?;
                den = Some(match den {
                    None => f,
                    Some(d) => d.mul(&f),
                });
            }
            let lhs = j.mul(&den.unwrap());
            let rhs = poly_at(&data.numerator, &z).pow(data.numerator_power as i64)?;
            Residual::Rational(lhs.sub(&rhs).truncate_to(&o))
        }
        "VTHETA" => {
            let v = b::v_series(1, &o);
            let lhs = v.mul(&b::theta_reduced(1, 1, 8, &o));
            let rhs = b::theta_reduced(3, 1, 8, &o);
            Residual::Rational(lhs.sub(&rhs))
        }
        "VPROD" => {
            let v8 = b::v_series_with(1, &o, b::kronecker8);
            let v2 = b::v_series_with(1, &o, b::kronecker2);
            Residual::Rational(v8.sub(&v2))
        }
        "UPHI" => {
            let u = b::u_series(1, &o);
            let phi = b::phi(1, false, &o).map(|c| QuadExt::from_rational(c.clone()));
            let psi = b::psi(1, &o).map(|c| QuadExt::from_rational(c.clone()));
            let lhs = u.mul(&phi);
            let rhs = psi
                .mul_qpow(&ratio(1, 8))
                .scale(&QuadExt::sqrt2());
            Residual::Quad(lhs.sub(&rhs))
        }
        "J22" => {
            let j2 = golden().rational_function("j2");
            let j22 = golden().rational_function("j22");
            let residual = rational_function_mobius_residual(
                &numerator_poly(j2),
                &denominator_poly(j2),
                &numerator_poly(j22),
                &denominator_poly(j22),
                &MobiusMap::t_map(),
            )
            .map_err(|e| QSeriesError::Internal(e.to_string()))?;
            Residual::Poly(residual)
        }
        other => return Err(QSeriesError::UnknownIdentity(other.to_string())),
    };
    Ok(r)
}

/// Verify one identity; order is the exponent through which the residual
/// must vanish.
pub fn verify_identity(id: &str, order: &BigRational) -> Result<IdentityOutcome, QSeriesError> {
    let meta = golden()
        .identity(id)
        .ok_or_else(|| QSeriesError::UnknownIdentity(id.to_string()))?;
    let residual = residual_for(id, order)?;
    let passed = residual.is_zero();
    let order_checked = residual
        .certified_order()
        .map(|o| format_rational(&o))
        .unwrap_or_else(|| "exact".to_string());
    let low_order = order < &ratio(10, 1);
    let (first_bad_exponent, first_bad_coefficient) = match residual.first_bad() {
        Some((e, c)) => (Some(e), Some(c)),
        None => (None, None),
    };
    Ok(IdentityOutcome {
        id: meta.id.clone(),
        reference: meta.reference.clone(),
        description: meta.description.clone(),
        status: if passed { "pass" } else { "fail" }.to_string(),
        order_checked,
        low_order,
        first_bad_exponent,
        first_bad_coefficient,
    })
}

/// Verify the whole catalog, sorted by id.
pub fn verify_all(order: &BigRational) -> Result<Vec<IdentityOutcome>, QSeriesError> {
    let mut ids = identity_ids();
    ids.sort();
    ids.iter().map(|id| verify_identity(id, order)).collect()
}

/// Sanity marker used by the CLI for the low-order warning.
pub fn is_low_order(order: &BigRational) -> bool {
    order < &ratio(10, 1)
}

/// Convert an `--order` string ("50" or "101/2") to a rational.
pub fn parse_order(text: &str) -> Result<BigRational, QSeriesError> {
    exactalg::serial::rational_from_string(text)
        .map_err(|e| QSeriesError::Internal(e.to_string()))
        .and_then(|r| {
            if r.numer().to_i64().is_some() && r > BigRational::from_integer(BigInt::from(0)) {
                Ok(r)
            } else {
                Err(QSeriesError::Internal(format!("bad order {text}")))
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: i64) -> BigRational {
        ratio(n, 1)
    }

    #[test]
    fn catalog_ids_all_have_runners() {
        for id in identity_ids() {
            let r = residual_for(&id, &ord(12));
            assert!(r.is_ok(), "{id} has no runner");
        }
    }

    #[test]
    fn all_identities_pass_at_order_twenty() {
        for outcome in verify_all(&ord(20)).unwrap() {
            assert_eq!(outcome.status, "pass", "{} failed: {:?}", outcome.id, outcome.first_bad_exponent);
        }
    }

    #[test]
    fn mutated_identity_fails_with_constant_residual() {
        // right side of the first square identity scaled by 3/2: residual
        // starts with the constant term -1
        let o = ord(20);
        let lhs = b::phi(1, false, &o).pow(2).unwrap().add(&b::phi(1, true, &o).pow(2).unwrap());
        let rhs = b::phi(2, false, &o).pow(2).unwrap().scale(&ratio(3, 1));
        let res = lhs.sub(&rhs);
        let (e, c) = res.first_nonzero().unwrap();
        assert_eq!(e, ord(0));
        assert_eq!(c, ratio(-1, 1));
    }

    #[test]
    fn every_single_coefficient_mutation_fails() {
        // perturbing any one series coefficient of the I2.13 left side makes
        // the residual nonzero
        let o = ord(15);
        let lhs = b::phi(1, false, &o).mul(&b::psi(2, &o));
        let rhs = b::psi(1, &o).pow(2).unwrap();
        assert!(lhs.sub(&rhs).is_zero());
        let window = lhs.coeff_window().to_vec();
        for k in 0..window.len() {
            let mut mutated = window.clone();
            mutated[k] = &mutated[k] + ratio(1, 1);
            let m = PuiseuxSeries::from_window(
                lhs.exponent_denominator(),
                lhs.min_exponent_numerator(),
                mutated,
            );
            assert!(!m.sub(&rhs).is_zero(), "mutation at {k} not caught");
        }
    }

    #[test]
    fn unknown_identity_is_an_error() {
        assert!(verify_identity("NOPE", &ord(10)).is_err());
    }

    #[test]
    fn low_order_flagging() {
        let out = verify_identity("I2.11", &ord(3)).unwrap();
        assert!(out.low_order);
        assert_eq!(out.status, "pass");
    }
}
