//! JSON form of elements and orbit reports.

use serde_json::{json, Value};

use crate::context::{PadicElem, UnramifiedContext};
use crate::frobenius::Orbit;

pub fn elem_to_json(ctx: &UnramifiedContext, x: &PadicElem) -> Value {
    json!({
        "m": ctx.residue_degree(),
        "P": ctx.precision(),
        "coeffs": x.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

pub fn orbit_to_json(ctx: &UnramifiedContext, orbit: &Orbit) -> Value {
    json!({
        "period": orbit.period,
        "points": orbit.points.iter().map(|p| elem_to_json(ctx, p)).collect::<Vec<_>>(),
        "newton_valuations": orbit.newton_valuations,
    })
}

pub fn orbits_to_json(ctx: &UnramifiedContext, orbits: &[Orbit]) -> Value {
    Value::Array(orbits.iter().map(|o| orbit_to_json(ctx, o)).collect())
}
