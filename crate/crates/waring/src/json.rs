//! Exact JSON encodings for forms, certificates and reports.
//!
//! Coefficients travel as decimal-free strings ("3", "-5/7") so that
//! nothing is ever rounded; floating-point input is rejected, not
//! approximated. Cyclotomic coefficients are objects carrying their
//! order and power-basis coordinates.

use crate::binomial::BinomialWitness;
use crate::cover::CoverReport;
use crate::error::{Error, Result};
use crate::field::{CyclotomicField, CyclotomicNumber, Field, Rational, Rationals};
use crate::forms::BinaryForm;
use crate::sylvester::RankCertificate;
use serde_json::{json, Value};
use std::str::FromStr;

fn parse_error(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Strictly string-encoded rationals: "p" or "p/q".
pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Rational::from_str(s),
        _ => Err(parse_error(format!(
            "expected an exact rational string like \"-3/4\", got {v}"
        ))),
    }
}

pub fn cyclotomic_elem_to_json(field: &CyclotomicField, c: &CyclotomicNumber) -> Value {
    json!({
        "order": field.order(),
        "coeffs": c.coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
    })
}

/// Accepts either the canonical {"order", "coeffs"} object or a bare
/// rational string standing for a constant.
pub fn cyclotomic_elem_from_json(field: &CyclotomicField, v: &Value) -> Result<CyclotomicNumber> {
    match v {
        Value::String(_) => Ok(field.from_rational(&rational_from_json(v)?)),
        Value::Object(map) => {
            let order = map
                .get("order")
                .and_then(Value::as_u64)
                .ok_or_else(|| parse_error("cyclotomic element needs an integer \"order\""))?;
            if order != field.order() {
                return Err(parse_error(format!(
                    "element written in order {order} cannot live in the cyclotomic field of order {}",
                    field.order()
                )));
            }
            let coeffs = map
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| parse_error("cyclotomic element needs a \"coeffs\" array"))?;
            let parsed: Vec<Rational> = coeffs.iter().map(rational_from_json).collect::<Result<_>>()?;
            Ok(field.element(parsed))
        }
        _ => Err(parse_error(format!(
            "expected a cyclotomic element object or rational string, got {v}"
        ))),
    }
}

pub fn rational_form_to_json(f: &BinaryForm<Rationals>) -> Value {
    json!({
        "degree": f.degree(),
        "field": "rational",
        "coeffs": f.coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
    })
}

pub fn cyclotomic_form_to_json(f: &BinaryForm<CyclotomicField>) -> Value {
    let field = f.field();
    json!({
        "degree": f.degree(),
        "field": {"cyclotomic": field.order()},
        "coeffs": f.coeffs().iter().map(|c| cyclotomic_elem_to_json(field, c)).collect::<Vec<_>>(),
    })
}

/// A form read back from JSON, over whichever field it declared.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedForm {
    Rational(BinaryForm<Rationals>),
    Cyclotomic(BinaryForm<CyclotomicField>),
}

impl ParsedForm {
    pub fn degree(&self) -> usize {
        match self {
            ParsedForm::Rational(f) => f.degree(),
            ParsedForm::Cyclotomic(f) => f.degree(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ParsedForm::Rational(f) => rational_form_to_json(f),
            ParsedForm::Cyclotomic(f) => cyclotomic_form_to_json(f),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            ParsedForm::Rational(f) => f.to_string(),
            ParsedForm::Cyclotomic(f) => f.to_string(),
        }
    }
}

/// Parses a form straight from JSON text.
pub fn form_from_str(text: &str) -> Result<ParsedForm> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("form is not valid JSON: {e}")))?;
    form_from_json(&v)
}

pub fn form_from_json(v: &Value) -> Result<ParsedForm> {
    let map = v
        .as_object()
        .ok_or_else(|| parse_error("a form is a JSON object with degree, field and coeffs"))?;
    let degree = map
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_error("form needs an integer \"degree\""))? as usize;
    let coeffs = map
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_error("form needs a \"coeffs\" array"))?;
    let field_desc = map
        .get("field")
        .ok_or_else(|| parse_error("form needs a \"field\" (\"rational\" or {\"cyclotomic\": n})"))?;
    match field_desc {
        Value::String(s) if s == "rational" => {
            let parsed: Vec<Rational> = coeffs.iter().map(rational_from_json).collect::<Result<_>>()?;
            Ok(ParsedForm::Rational(BinaryForm::new(Rationals, degree, parsed)?))
        }
        Value::Object(m) => {
            let order = m
                .get("cyclotomic")
                .and_then(Value::as_u64)
                .ok_or_else(|| parse_error("field object must look like {\"cyclotomic\": n}"))?;
            let field = CyclotomicField::new(order)?;
            let parsed: Vec<CyclotomicNumber> = coeffs
                .iter()
                .map(|c| cyclotomic_elem_from_json(&field, c))
                .collect::<Result<_>>()?;
            Ok(ParsedForm::Cyclotomic(BinaryForm::new(field, degree, parsed)?))
        }
        other => Err(parse_error(format!(
            "unknown field descriptor {other}; use \"rational\" or {{\"cyclotomic\": n}}"
        ))),
    }
}

fn certificate_json<F, G, H>(cert: &RankCertificate<F>, form_json: G, elem_json: H) -> Value
where
    F: Field,
    G: Fn(&BinaryForm<F>) -> Value,
    H: Fn(&F::Elem) -> Value,
{
    json!({
        "rank": cert.rank,
        "witness": form_json(&cert.witness),
        "witness_degree": cert.witness_degree,
        "witness_square_free": cert.witness_square_free,
        "branch": cert.branch.as_str(),
        "pencil_parameter": cert.pencil_parameter.as_ref().map(elem_json).unwrap_or(Value::Null),
    })
}

pub fn rational_certificate_to_json(cert: &RankCertificate<Rationals>) -> Value {
    certificate_json(cert, rational_form_to_json, rational_to_json)
}

pub fn cyclotomic_certificate_to_json(cert: &RankCertificate<CyclotomicField>) -> Value {
    let field = cert.witness.field().clone();
    certificate_json(cert, cyclotomic_form_to_json, |e| {
        cyclotomic_elem_to_json(&field, e)
    })
}

pub fn binomial_witness_to_json(w: &BinomialWitness) -> Value {
    json!({
        "g1": rational_form_to_json(&w.g1),
        "case": w.case.as_str(),
        "square_free": w.square_free,
    })
}

pub fn cover_report_to_json(r: &CoverReport) -> Value {
    json!({
        "d": r.d,
        "triple_count": r.triple_count,
        "orbit_count": r.orbit_count,
        "orbit_sizes": r.orbit_sizes,
        "image_size": r.image_size,
        "forms": r.forms.iter().map(cyclotomic_form_to_json).collect::<Vec<_>>(),
        "partitions_equal": r.partitions_equal,
        "transversality_all": r.transversality_all,
    })
}
