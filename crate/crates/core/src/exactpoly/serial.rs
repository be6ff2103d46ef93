//! JSON encoding: `{basis, coeffs: [[num, den], ...]}` for univariate and
//! `{terms: [[i, j, num, den], ...]}` (sorted by `(i, j)`) for bivariate.
//! Integers that fit in `i64` are emitted as JSON numbers, larger ones as
//! decimal strings.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};

use super::basis::BasisTag;
use crate::error::{Error, Result};
use crate::{QBiPoly, QPoly, Rational, ZBiPoly, ZPoly};

fn int_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(small) => json!(small),
        None => Value::String(v.to_string()),
    }
}

fn json_int(v: &Value) -> Result<BigInt> {
    let bad = || Error::Parse { line: 0, msg: format!("expected integer, found {v}") };
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(bad),
        Value::String(s) => s.parse().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

fn rational_pair(r: &Rational) -> Value {
    json!([int_json(r.numer()), int_json(r.denom())])
}

pub fn rational_json(r: &Rational) -> Value {
    if r.denom().is_one() {
        int_json(r.numer())
    } else {
        Value::String(r.to_string())
    }
}

pub fn coeffs_json(basis: BasisTag, coeffs: &[Rational]) -> Value {
    json!({
        "basis": basis,
        "coeffs": coeffs.iter().map(rational_pair).collect::<Vec<_>>(),
    })
}

pub fn qpoly_json(p: &QPoly) -> Value {
    coeffs_json(BasisTag::Power, p.coeffs())
}

pub fn zpoly_json(p: &ZPoly) -> Value {
    qpoly_json(&p.map(|c| Rational::from_integer(c.clone())))
}

pub fn qbipoly_json(p: &QBiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|((i, j), c)| json!([i, j, int_json(c.numer()), int_json(c.denom())]))
        .collect();
    json!({ "terms": terms })
}

pub fn zbipoly_json(p: &ZBiPoly) -> Value {
    qbipoly_json(&p.map(|c| Rational::from_integer(c.clone())))
}

/// Decodes the univariate encoding, returning the basis tag and coefficients.
pub fn coeffs_from_json(v: &Value) -> Result<(BasisTag, Vec<Rational>)> {
    let err = |msg: &str| Error::Parse { line: 0, msg: msg.to_string() };
    let basis: BasisTag = serde_json::from_value(v.get("basis").cloned().ok_or_else(|| err("missing basis"))?)
        .map_err(|e| err(&e.to_string()))?;
    let arr = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| err("missing coeffs"))?;
    let coeffs = arr
        .iter()
        .map(|pair| {
            let pair = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| err("coefficient must be [num, den]"))?;
            let den = json_int(&pair[1])?;
            if den == BigInt::from(0) {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(json_int(&pair[0])?, den))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((basis, coeffs))
}

pub fn qbipoly_from_json(v: &Value) -> Result<QBiPoly> {
    let err = |msg: &str| Error::Parse { line: 0, msg: msg.to_string() };
    let arr = v.get("terms").and_then(Value::as_array).ok_or_else(|| err("missing terms"))?;
    let mut out = QBiPoly::zero();
    for t in arr {
        let t = t.as_array().filter(|t| t.len() == 4).ok_or_else(|| err("term must be [i, j, num, den]"))?;
        let exp = |v: &Value| v.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| err("bad exponent"));
        let den = json_int(&t[3])?;
        if den == BigInt::from(0) {
            return Err(Error::DivisionByZero);
        }
        out.add_term(exp(&t[0])?, exp(&t[1])?, Rational::new(json_int(&t[2])?, den));
    }
    Ok(out)
}
