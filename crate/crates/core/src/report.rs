//! JSON reports written by the command-line tool.
//!
//! Rationals are rendered as `"p/q"` strings so they survive a round trip
//! exactly. Floats are rounded to 12 significant digits.

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::diffchar::{DC21Cochain, DiffCharacter, GaugeCochain};
use crate::linalg::AbelianGroupPresentation;
use crate::rational::{Phase, Q};

pub const SCHEMA: &str = "dc21/1";

/// Rounds to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// A float as a JSON value, `null` when not finite.
pub fn float_value(x: f64) -> Value {
    serde_json::Number::from_f64(round_sig(x)).map_or(Value::Null, Value::Number)
}

/// `"p/q"` in lowest terms, with `q = 1` for integers.
pub fn q_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn q_value(x: &Q) -> Value {
    Value::String(q_string(x))
}

pub fn qs_value(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(q_value).collect())
}

pub fn ser_q<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q_string(x))
}

pub fn ser_qs<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(q_string))
}

pub fn ser_f12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    float_value(*x).serialize(s)
}

pub fn phases_value(xs: &[Phase]) -> Value {
    Value::Array(xs.iter().map(|p| q_value(&p.lift())).collect())
}

pub fn cocycle_value(x: &DC21Cochain) -> Value {
    json!({
        "c": x.c, "h": qs_value(&x.h), "omega": qs_value(&x.omega),
        "b": x.b, "f": qs_value(&x.f), "alpha": qs_value(&x.alpha),
    })
}

pub fn gauge_value(g: &GaugeCochain) -> Value {
    json!({ "a": g.a, "t": qs_value(&g.t) })
}

pub fn character_value(ch: &DiffCharacter) -> Value {
    json!({
        "omega": qs_value(&ch.theta.omega),
        "alpha": qs_value(&ch.theta.alpha),
        "psi": phases_value(&ch.psi),
    })
}

pub fn presentation_value(p: &AbelianGroupPresentation) -> Value {
    json!({
        "group": p.to_string(),
        "divisible_rank": p.divisible_rank,
        "free_rank": p.free_rank,
        "invariant_factors": p.invariant_factors.iter().map(|d| *d as i64).collect::<Vec<_>>(),
    })
}

/// Top-level envelope shared by every subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    pub ok: bool,
    pub result: Value,
}

impl Report {
    pub fn new(command: &str, seed: u64, ok: bool, result: Value) -> Self {
        Report { schema: SCHEMA, command: command.to_string(), seed, ok, result: round_floats(result) }
    }

    pub fn error(command: &str, seed: u64, err: &crate::Error) -> Self {
        Report::new(command, seed, false, json!({ "error": err.code(), "message": err.to_string() }))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Rounds every float in a JSON tree to 12 significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => float_value(n.as_f64().unwrap_or(f64::NAN)),
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}
