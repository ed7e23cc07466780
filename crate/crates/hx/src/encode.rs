//! JSON encodings shared by all reports.

use std::str::FromStr;

use hx_core::{ElemId, Element, GroupTable, IBig, LaurentPoly};
use serde_json::{Number, Value};

pub fn int(c: &IBig) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integer literal"))
}

/// `[[exponent, coefficient], ...]` by increasing exponent.
pub fn poly(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| Value::Array(vec![e.into(), int(c)])).collect())
}

pub fn word(w: &Element) -> Value {
    Value::Array(w.letters().map(Value::from).collect())
}

pub fn elem(table: &GroupTable, id: ElemId) -> Value {
    word(table.element(id))
}
