//! JSON form of a series: {"D": int, "min": int, "order": "p/q",
//! "coeffs": [rational strings]}.

use num_rational::BigRational;
use serde_json::{json, Value};

use exactalg::serial::{rational_from_string, rational_to_string};

use crate::series::PuiseuxSeries;
use crate::QSeriesError;

pub fn series_to_json(s: &PuiseuxSeries<BigRational>) -> Value {
    json!({
        "D": s.exponent_denominator(),
        "min": s.min_exponent_numerator(),
        "order": rational_to_string(&s.truncation_order()),
        "coeffs": s.coeff_window().iter().map(rational_to_string).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(v: &Value) -> Result<PuiseuxSeries<BigRational>, QSeriesError> {
    let bad = |m: &str| QSeriesError::Internal(format!("malformed series JSON: {m}"));
    let d = v["D"].as_i64().ok_or_else(|| bad("D"))?;
    let min = v["min"].as_i64().ok_or_else(|| bad("min"))?;
    let coeffs = v["coeffs"]
        .as_array()
        .ok_or_else(|| bad("coeffs"))?
        .iter()
        .map(|c| {
            c.as_str()
                .ok_or_else(|| bad("coefficient"))
                .and_then(|s| rational_from_string(s).map_err(|e| bad(&e.to_string())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PuiseuxSeries::from_window(d, min, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational;

    #[test]
    fn round_trip() {
        let s = PuiseuxSeries::from_window(
            2,
            -1,
            vec![rational(1, 1), rational(-3, 2), rational(0, 1)],
        );
        let v = series_to_json(&s);
        assert_eq!(v["order"], "1");
        let back = series_from_json(&v).unwrap();
        assert_eq!(back, s);
    }
}
