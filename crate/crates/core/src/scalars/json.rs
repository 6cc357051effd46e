//! Canonical JSON interchange form.
//!
//! A tower element is `{"terms":[{"ys":[..],"num":[[exp,reN,reD,imN,imD],..],"den":[..]}]}`
//! with terms ordered by their index lists and polynomial terms by exponent.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Number, Value};

use super::gaussian::GaussianRational;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::tower::{indices_mask, TowerElem};
use crate::error::{Error, Result};

fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

fn parse_big(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("bad integer {n}: {e}"))),
        _ => Err(Error::Parse(format!("expected integer, got {v}"))),
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| {
                json!([
                    e,
                    big(c.re.numer()),
                    big(c.re.denom()),
                    big(c.im.numer()),
                    big(c.im.denom())
                ])
            })
            .collect(),
    )
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("polynomial must be an array".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let t = t
            .as_array()
            .filter(|t| t.len() == 5)
            .ok_or_else(|| Error::Parse(format!("bad polynomial term {t}")))?;
        let e = t[0]
            .as_i64()
            .and_then(|e| i32::try_from(e).ok())
            .ok_or_else(|| Error::Parse(format!("bad exponent {}", t[0])))?;
        let frac = |n: &Value, d: &Value| -> Result<BigRational> {
            let d = parse_big(d)?;
            if d == BigInt::from(0) {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(parse_big(n)?, d))
        };
        terms.push((
            e,
            GaussianRational::new(frac(&t[1], &t[2])?, frac(&t[3], &t[4])?),
        ));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn ratfunc_to_json(c: &RatFunc) -> Value {
    json!({"num": poly_to_json(c.num()), "den": poly_to_json(c.den())})
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc> {
    let num = poly_from_json(
        v.get("num")
            .ok_or_else(|| Error::Parse("missing num".into()))?,
    )?;
    let den = poly_from_json(
        v.get("den")
            .ok_or_else(|| Error::Parse("missing den".into()))?,
    )?;
    RatFunc::new(num, den)
}

pub fn tower_to_json(a: &TowerElem) -> Value {
    let terms: Vec<Value> = a
        .sorted_terms()
        .into_iter()
        .map(
            |(ys, c)| json!({"ys": ys, "num": poly_to_json(c.num()), "den": poly_to_json(c.den())}),
        )
        .collect();
    json!({ "terms": terms })
}

pub fn tower_from_json(v: &Value) -> Result<TowerElem> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing terms array".into()))?;
    let mut out = TowerElem::zero();
    for t in terms {
        let ys: Vec<u32> = t
            .get("ys")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing ys".into()))?
            .iter()
            .map(|k| {
                k.as_u64()
                    .map(|k| k as u32)
                    .ok_or_else(|| Error::Parse(format!("bad index {k}")))
            })
            .collect::<Result<_>>()?;
        let c = ratfunc_from_json(t)?;
        out.add_assign_ref(&TowerElem::monomial(indices_mask(&ys)?, c));
    }
    Ok(out)
}

/// Compact canonical serialization.
pub fn tower_to_string(a: &TowerElem) -> String {
    tower_to_json(a).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::tower::alpha_coeff;

    #[test]
    fn roundtrip_and_layout() {
        let a = &alpha_coeff(3).unwrap() + &TowerElem::from_int(2);
        let s = tower_to_string(&a);
        assert!(
            s.starts_with("{\"terms\":[{\"ys\":[],\"num\":[[0,2,1,0,1]],\"den\":[[0,1,1,0,1]]}")
        );
        let back = tower_from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, a);
        assert_eq!(tower_to_string(&back), s);
    }

    #[test]
    fn zero_serializes_to_empty_terms() {
        assert_eq!(tower_to_string(&TowerElem::zero()), "{\"terms\":[]}");
    }
}
