//! JSON serialization of polynomials: arrays of decimal coefficient strings
//! in ascending degree; Q(√2) coefficients as {"a": "...", "b": "..."}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};
use std::str::FromStr;

use crate::bipoly::BiPoly;
use crate::error::{ExactAlgError, Result};
use crate::quadext::QuadExt;
use crate::unipoly::UniPoly;

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_string(s: &str) -> Result<BigRational> {
    let parse_int =
        |t: &str| BigInt::from_str(t).map_err(|e| ExactAlgError::Parse(format!("{t}: {e}")));
    match s.split_once('/') {
        Some((n, d)) => Ok(BigRational::new(parse_int(n)?, parse_int(d)?)),
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

pub fn int_poly_to_json(p: &UniPoly<BigInt>) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

pub fn int_poly_from_json(v: &Value) -> Result<UniPoly<BigInt>> {
    let arr = v
        .as_array()
        .ok_or_else(|| ExactAlgError::Parse("expected array".into()))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for c in arr {
        let s = c
            .as_str()
            .ok_or_else(|| ExactAlgError::Parse("expected string coefficient".into()))?;
        coeffs.push(BigInt::from_str(s).map_err(|e| ExactAlgError::Parse(e.to_string()))?);
    }
    Ok(UniPoly::new(coeffs))
}

pub fn rat_poly_to_json(p: &UniPoly<BigRational>) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(rational_to_string(c)))
            .collect(),
    )
}

pub fn rat_poly_from_json(v: &Value) -> Result<UniPoly<BigRational>> {
    let arr = v
        .as_array()
        .ok_or_else(|| ExactAlgError::Parse("expected array".into()))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for c in arr {
        let s = c
            .as_str()
            .ok_or_else(|| ExactAlgError::Parse("expected string coefficient".into()))?;
        coeffs.push(rational_from_string(s)?);
    }
    Ok(UniPoly::new(coeffs))
}

pub fn quadext_to_json(c: &QuadExt) -> Value {
    json!({ "a": rational_to_string(&c.a), "b": rational_to_string(&c.b) })
}

pub fn quadext_poly_to_json(p: &UniPoly<QuadExt>) -> Value {
    Value::Array(p.coeffs().iter().map(quadext_to_json).collect())
}

pub fn int_bipoly_to_json(p: &BiPoly<BigInt>) -> Value {
    Value::Array(p.rows().iter().map(int_poly_to_json).collect())
}

/// Canonical byte representation used by golden comparisons.
pub fn canonical_string(p: &UniPoly<BigInt>) -> String {
    serde_json::to_string(&int_poly_to_json(p)).expect("serializing a JSON array cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_round_trip() {
        let p = UniPoly::<BigInt>::from_i64_slice(&[3, 0, -17, 1]);
        let v = int_poly_to_json(&p);
        assert_eq!(int_poly_from_json(&v).unwrap(), p);
        assert_eq!(canonical_string(&p), r#"["3","0","-17","1"]"#);
    }

    #[test]
    fn rational_strings() {
        let r = BigRational::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(rational_to_string(&r), "-3/2");
        assert_eq!(rational_from_string("-3/2").unwrap(), r);
        assert_eq!(
            rational_from_string("42").unwrap(),
            BigRational::from_integer(BigInt::from(42))
        );
        assert!(rational_from_string("x").is_err());
    }

    #[test]
    fn quadext_shape() {
        let c = QuadExt::from_ints(-1, 1);
        assert_eq!(
            serde_json::to_string(&quadext_to_json(&c)).unwrap(),
            r#"{"a":"-1","b":"1"}"#
        );
    }
}
