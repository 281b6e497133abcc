//! Bit-exact JSON encoding of distributions and cones.
//!
//! Rationals travel as `[numerator, denominator]` integer pairs and integers
//! as arbitrary-precision JSON numbers, so a round trip through text
//! reproduces the value exactly — the counterexample machinery depends on
//! denominators like 10^720 surviving serialization.

use crate::ball::ComplexPoint;
use crate::cone::Cone;
use crate::distribution::{Distribution, MultiIndex, PiecewisePolyDensity, PointMassTerm};
use crate::error::{Error, Result};
use crate::exact::ExactComplex;
use crate::poly::Poly;
use rug::{Integer, Rational};
use serde_json::{json, Map, Number, Value};
use std::str::FromStr;

fn int_value(n: &Integer) -> Value {
    // arbitrary_precision keeps every digit
    Value::Number(Number::from_str(&n.to_string()).expect("integer is a valid JSON number"))
}

fn rational_value(q: &Rational) -> Value {
    Value::Array(vec![int_value(q.numer()), int_value(q.denom())])
}

fn parse_integer(v: &Value) -> Result<Integer> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(Error::Json(format!("expected an integer, got {v}"))),
    };
    Integer::from_str(&text).map_err(|_| Error::Json(format!("not an integer: {text}")))
}

fn parse_rational(v: &Value) -> Result<Rational> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("expected [num, den], got {v}")))?;
    if arr.len() != 2 {
        return Err(Error::Json(format!(
            "rational pair must have 2 entries, got {}",
            arr.len()
        )));
    }
    let num = parse_integer(&arr[0])?;
    let den = parse_integer(&arr[1])?;
    if den == 0 {
        return Err(Error::Json("zero denominator".into()));
    }
    Ok(Rational::from((num, den)))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| Error::Json(format!("missing field \"{name}\"")))
}

fn coeff_value(c: &ExactComplex) -> Value {
    Value::Array(vec![
        int_value(c.re.numer()),
        int_value(c.re.denom()),
        int_value(c.im.numer()),
        int_value(c.im.denom()),
    ])
}

fn parse_coeff(v: &Value) -> Result<ExactComplex> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("expected a coefficient array, got {v}")))?;
    match arr.len() {
        // real rational shorthand
        2 => Ok(ExactComplex::new(parse_rational(v)?, Rational::new())),
        4 => {
            let re_n = parse_integer(&arr[0])?;
            let re_d = parse_integer(&arr[1])?;
            let im_n = parse_integer(&arr[2])?;
            let im_d = parse_integer(&arr[3])?;
            if re_d == 0 || im_d == 0 {
                return Err(Error::Json("zero denominator".into()));
            }
            Ok(ExactComplex::new(
                Rational::from((re_n, re_d)),
                Rational::from((im_n, im_d)),
            ))
        }
        n => Err(Error::Json(format!(
            "coefficient must have 2 or 4 entries, got {n}"
        ))),
    }
}

fn poly_value(p: &Poly) -> Value {
    Value::Array(
        p.0.iter()
            .map(|c| {
                if c.im == 0 {
                    rational_value(&c.re)
                } else {
                    coeff_value(c)
                }
            })
            .collect(),
    )
}

fn parse_poly(v: &Value) -> Result<Poly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Json(format!("expected a coefficient list, got {v}")))?;
    let coeffs = arr.iter().map(parse_coeff).collect::<Result<Vec<_>>>()?;
    Ok(Poly(coeffs).trimmed())
}

pub fn distribution_to_json(f: &Distribution) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .map(|t| {
            json!({
                "coeff": coeff_value(&t.coeff),
                "location": t.location.iter().map(rational_value).collect::<Vec<_>>(),
                "deriv": t.deriv.entries(),
            })
        })
        .collect();
    let mut obj = json!({
        "dimension": f.dimension(),
        "terms": terms,
    });
    if let Some(density) = f.density() {
        obj["density"] = json!({
            "breakpoints": density.breakpoints().iter().map(rational_value).collect::<Vec<_>>(),
            "pieces": density.pieces().iter().map(poly_value).collect::<Vec<_>>(),
        });
    }
    obj
}

pub fn distribution_from_json(v: &Value) -> Result<Distribution> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("distribution must be a JSON object".into()))?;
    let dimension = field(obj, "dimension")?
        .as_u64()
        .ok_or_else(|| Error::Json("dimension must be a positive integer".into()))?
        as usize;
    if dimension == 0 {
        return Err(Error::Json("dimension must be at least 1".into()));
    }

    let mut terms = Vec::new();
    if let Some(list) = obj.get("terms") {
        let list = list
            .as_array()
            .ok_or_else(|| Error::Json("terms must be an array".into()))?;
        for t in list {
            let t = t
                .as_object()
                .ok_or_else(|| Error::Json("each term must be an object".into()))?;
            let coeff = parse_coeff(field(t, "coeff")?)?;
            let location = field(t, "location")?
                .as_array()
                .ok_or_else(|| Error::Json("location must be an array".into()))?
                .iter()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            let deriv_raw = field(t, "deriv")?
                .as_array()
                .ok_or_else(|| Error::Json("deriv must be an array".into()))?;
            let mut deriv = Vec::with_capacity(deriv_raw.len());
            for k in deriv_raw {
                let k = k
                    .as_u64()
                    .ok_or_else(|| Error::Json("deriv entries must be nonnegative".into()))?;
                deriv.push(u32::try_from(k).map_err(|_| Error::Json("deriv entry too large".into()))?);
            }
            if location.len() != dimension || deriv.len() != dimension {
                return Err(Error::Json(format!(
                    "term arity disagrees with dimension {dimension}"
                )));
            }
            terms.push(PointMassTerm {
                coeff,
                location,
                deriv: MultiIndex::new(deriv),
            });
        }
    }

    let density = match obj.get("density") {
        None | Some(Value::Null) => None,
        Some(dv) => {
            if dimension != 1 {
                return Err(Error::Json("densities are only supported in dimension 1".into()));
            }
            let d = dv
                .as_object()
                .ok_or_else(|| Error::Json("density must be an object".into()))?;
            let breakpoints = field(d, "breakpoints")?
                .as_array()
                .ok_or_else(|| Error::Json("breakpoints must be an array".into()))?
                .iter()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            let pieces = field(d, "pieces")?
                .as_array()
                .ok_or_else(|| Error::Json("pieces must be an array".into()))?
                .iter()
                .map(parse_poly)
                .collect::<Result<Vec<_>>>()?;
            Some(PiecewisePolyDensity::new(breakpoints, pieces)?)
        }
    };

    Ok(Distribution::assemble(dimension, terms, density))
}

pub fn distribution_to_string(f: &Distribution) -> String {
    serde_json::to_string_pretty(&distribution_to_json(f)).expect("serialization cannot fail")
}

pub fn distribution_from_str(text: &str) -> Result<Distribution> {
    let v: Value = serde_json::from_str(text)?;
    distribution_from_json(&v)
}

pub fn cone_to_json(c: &Cone) -> Value {
    match c {
        Cone::FullSpace { dim } => json!({"kind": "full", "dimension": dim}),
        Cone::Orthant { dim } => json!({"kind": "orthant", "dimension": dim}),
        Cone::LightCone { spatial_dim, speed } => json!({
            "kind": "lightcone",
            "dimension": spatial_dim + 1,
            "speed": rational_value(speed),
        }),
        Cone::Polyhedral { dim, generators } => json!({
            "kind": "polyhedral",
            "dimension": dim,
            "generators": generators
                .iter()
                .map(|g| g.iter().map(rational_value).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }),
    }
}

pub fn cone_from_json(v: &Value) -> Result<Cone> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Json("cone must be a JSON object".into()))?;
    let kind = field(obj, "kind")?
        .as_str()
        .ok_or_else(|| Error::Json("kind must be a string".into()))?;
    let dimension = field(obj, "dimension")?
        .as_u64()
        .ok_or_else(|| Error::Json("dimension must be a positive integer".into()))?
        as usize;
    match kind {
        "full" => Ok(Cone::full(dimension)),
        "orthant" => Ok(Cone::orthant(dimension)),
        "lightcone" => {
            if dimension < 2 {
                return Err(Error::Json(
                    "a light cone needs ambient dimension at least 2".into(),
                ));
            }
            let speed = match obj.get("speed") {
                Some(sv) => parse_rational(sv)?,
                None => Rational::from(1),
            };
            Cone::light_cone(dimension - 1, speed)
        }
        "polyhedral" => {
            let generators = field(obj, "generators")?
                .as_array()
                .ok_or_else(|| Error::Json("generators must be an array".into()))?
                .iter()
                .map(|g| {
                    g.as_array()
                        .ok_or_else(|| Error::Json("each generator must be an array".into()))?
                        .iter()
                        .map(parse_rational)
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Cone::polyhedral(dimension, generators)
        }
        other => Err(Error::Json(format!("unknown cone kind \"{other}\""))),
    }
}

pub fn cone_from_str(text: &str) -> Result<Cone> {
    let v: Value = serde_json::from_str(text)?;
    cone_from_json(&v)
}

/// Sample points as arrays of `[re, im]` coordinate pairs:
/// `[[[0.5, -1.0], [2.0, 0.0]], ...]`.
pub fn parse_samples(v: &Value, prec: u32) -> Result<Vec<ComplexPoint>> {
    let list = v
        .as_array()
        .ok_or_else(|| Error::Json("samples must be an array of points".into()))?;
    let mut out = Vec::with_capacity(list.len());
    for p in list {
        let coords = p
            .as_array()
            .ok_or_else(|| Error::Json("each point must be an array of [re, im] pairs".into()))?;
        let mut pairs = Vec::with_capacity(coords.len());
        for c in coords {
            let pair = c
                .as_array()
                .ok_or_else(|| Error::Json("each coordinate must be [re, im]".into()))?;
            if pair.len() != 2 {
                return Err(Error::Json("each coordinate must have exactly 2 entries".into()));
            }
            let re = pair[0]
                .as_f64()
                .ok_or_else(|| Error::Json("coordinate parts must be numbers".into()))?;
            let im = pair[1]
                .as_f64()
                .ok_or_else(|| Error::Json("coordinate parts must be numbers".into()))?;
            pairs.push((re, im));
        }
        out.push(ComplexPoint::from_f64_pairs(&pairs, prec)?);
    }
    Ok(out)
}
