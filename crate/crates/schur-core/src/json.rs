//! JSON serialization for algebra elements.
//!
//! ```json
//! {
//!   "field": "rational",
//!   "n": 2,
//!   "r": 2,
//!   "terms": [
//!     { "bottom": [1, 2], "coeff": "3/2", "top": [1, 1] }
//!   ]
//! }
//! ```
//!
//! `field` is either the string `"rational"` or an object `{"gf": p}`.
//! Coefficients are decimal strings (`"a"` or `"a/b"`), so arbitrarily
//! large values survive the trip.  Terms are listed in canonical symbol
//! order and keys are emitted alphabetically, so serialization is
//! deterministic: equal elements produce byte-identical JSON.

use crate::context::{AlgebraContext, DescribeField};
use crate::element::AlgebraElement;
use crate::field::{CoeffField, FieldDescriptor};
use crate::symbol::canonicalize_pair;
use crate::SchurError;
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Value};
use weyl_core::IntTuple;

fn field_to_value(d: &FieldDescriptor) -> Value {
    match d {
        FieldDescriptor::Rational => Value::String("rational".to_string()),
        FieldDescriptor::Gf(p) => json!({ "gf": p }),
    }
}

fn field_from_value(v: &Value) -> Result<FieldDescriptor, SchurError> {
    match v {
        Value::String(s) if s == "rational" => Ok(FieldDescriptor::Rational),
        Value::Object(map) => {
            if let Some(p) = map.get("gf").and_then(Value::as_u64) {
                if map.len() == 1 {
                    return Ok(FieldDescriptor::Gf(p));
                }
            }
            Err(SchurError::Json(format!(
                "unrecognized field descriptor {v}"
            )))
        }
        other => Err(SchurError::Json(format!(
            "unrecognized field descriptor {other}"
        ))),
    }
}

/// Serializes an element to a [`serde_json::Value`] with the layout above.
pub fn to_json<F>(e: &AlgebraElement<F>) -> Value
where
    F: CoeffField,
    F::Config: DescribeField,
{
    let ctx = e.ctx();
    let terms: Vec<Value> = e
        .terms()
        .map(|(sym, coeff)| {
            json!({
                "bottom": sym.bottom(),
                "coeff": coeff.coeff_string(),
                "top": sym.top(),
            })
        })
        .collect();
    json!({
        "field": field_to_value(&ctx.descriptor()),
        "n": ctx.n(),
        "r": ctx.r(),
        "terms": terms,
    })
}

/// Serializes an element to a compact JSON string.
pub fn to_json_string<F>(e: &AlgebraElement<F>) -> String
where
    F: CoeffField,
    F::Config: DescribeField,
{
    to_json(e).to_string()
}

fn expect_object(v: &Value) -> Result<&Map<String, Value>, SchurError> {
    v.as_object()
        .ok_or_else(|| SchurError::Json("expected a JSON object".to_string()))
}

fn get<'a>(map: &'a Map<String, Value>, key: &str) -> Result<&'a Value, SchurError> {
    map.get(key)
        .ok_or_else(|| SchurError::Json(format!("missing key \"{key}\"")))
}

fn int_tuple(v: &Value, key: &str) -> Result<IntTuple, SchurError> {
    let arr = v
        .as_array()
        .ok_or_else(|| SchurError::Json(format!("\"{key}\" must be an array of integers")))?;
    arr.iter()
        .map(|x| {
            x.as_i64()
                .ok_or_else(|| SchurError::Json(format!("\"{key}\" must be an array of integers")))
        })
        .collect()
}

fn coeff_from_string<F: CoeffField>(s: &str, cfg: &F::Config) -> Result<F, SchurError> {
    let bad = || SchurError::InvalidCoefficient(format!("cannot read coefficient \"{s}\""));
    let (num_text, den_text) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let numerator: BigInt = num_text.trim().parse().map_err(|_| bad())?;
    let denominator: BigUint = match den_text {
        Some(t) => t.trim().parse().map_err(|_| bad())?,
        None => BigUint::from(1u32),
    };
    if denominator == BigUint::from(0u32) {
        return Err(bad());
    }
    F::from_fraction(cfg, &numerator, &denominator)
}

/// Reads `(n, r, field)` out of serialized element JSON without committing
/// to a coefficient type, so a caller can build the matching context first.
pub fn peek_context(text: &str) -> Result<(i64, usize, FieldDescriptor), SchurError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| SchurError::Json(e.to_string()))?;
    let map = expect_object(&value)?;
    let n = get(map, "n")?
        .as_i64()
        .ok_or_else(|| SchurError::Json("\"n\" must be an integer".to_string()))?;
    let r = get(map, "r")?
        .as_u64()
        .ok_or_else(|| SchurError::Json("\"r\" must be a positive integer".to_string()))?;
    let field = field_from_value(get(map, "field")?)?;
    Ok((n, r as usize, field))
}

/// Deserializes an element, checking that the embedded `n`, `r`, and
/// `field` agree with `ctx`.  Pairs are canonicalized on input.
pub fn from_json<F>(text: &str, ctx: &AlgebraContext<F>) -> Result<AlgebraElement<F>, SchurError>
where
    F: CoeffField,
    F::Config: DescribeField,
{
    let value: Value =
        serde_json::from_str(text).map_err(|e| SchurError::Json(e.to_string()))?;
    let map = expect_object(&value)?;
    let (n, r, field) = peek_context(text)?;
    if n != ctx.n() || r != ctx.r() || field != ctx.descriptor() {
        return Err(SchurError::ContextMismatch(format!(
            "serialized element has n={n}, r={r}, field={field}, \
             but the context is n={}, r={}, field={}",
            ctx.n(),
            ctx.r(),
            ctx.descriptor()
        )));
    }
    let terms = get(map, "terms")?
        .as_array()
        .ok_or_else(|| SchurError::Json("\"terms\" must be an array".to_string()))?;
    let mut out = AlgebraElement::zero(ctx);
    for term in terms {
        let term = expect_object(term)?;
        let top = int_tuple(get(term, "top")?, "top")?;
        let bottom = int_tuple(get(term, "bottom")?, "bottom")?;
        if top.len() != ctx.r() || bottom.len() != ctx.r() {
            return Err(SchurError::Json(format!(
                "tuple of length {} where r = {}",
                top.len().max(bottom.len()),
                ctx.r()
            )));
        }
        let coeff_text = get(term, "coeff")?
            .as_str()
            .ok_or_else(|| SchurError::Json("\"coeff\" must be a string".to_string()))?;
        let coeff = coeff_from_string::<F>(coeff_text, ctx.field())?;
        let (sym, _) = canonicalize_pair(&top, &bottom, ctx.n())?;
        out.add_term(sym, coeff);
    }
    Ok(out)
}
