//! Cochain files:
//! `{"degree": n, "module": <module spec>, "entries": [{"args": [..], "value": [..]}]}`.
//! Omitted entries are zero. `args` holds element indices or element names.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::group::{Elem, Group};
use crate::module::{build_gmodule, ModuleSpec};

fn prefixed(prefix: &str, e: Error) -> Error {
    match e {
        Error::Field { field, message } => Error::field(format!("{prefix}.{field}"), message),
        other => Error::field(prefix, other.to_string()),
    }
}

fn parse_arg(g: &Group, v: &Value, field: &str) -> Result<Elem> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_u64()
                .filter(|&i| (i as usize) < g.order())
                .ok_or_else(|| Error::field(field, format!("{n} is not an element index of {}", g.label())))?;
            Ok(i as Elem)
        }
        Value::String(s) => g.parse_element(s).map_err(|e| Error::field(field, e.to_string())),
        _ => Err(Error::field(field, "expected an element index or name")),
    }
}

/// Reads a cochain over `group`, returning it with its module spec.
pub fn cochain_from_json(v: &Value, group: &Arc<Group>) -> Result<(ModuleSpec, Cochain)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::field("cochain", "expected a JSON object"))?;
    let degree = obj
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::field("degree", "expected a non-negative integer"))? as usize;
    let spec_json = obj
        .get("module")
        .ok_or_else(|| Error::field("module", "missing"))?;
    let spec = ModuleSpec::from_json(spec_json).map_err(|e| prefixed("module", e))?;
    let module = build_gmodule(&spec, group).map_err(|e| prefixed("module", e))?;
    let mut c = Cochain::zero(&module, degree);
    let entries = match obj.get("entries") {
        None => return Ok((spec, c)),
        Some(Value::Array(a)) => a,
        Some(_) => return Err(Error::field("entries", "expected an array")),
    };
    for (i, e) in entries.iter().enumerate() {
        let af = format!("entries[{i}].args");
        let vf = format!("entries[{i}].value");
        let args = e
            .get("args")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::field(&af, "expected an array"))?;
        if args.len() != degree {
            return Err(Error::field(&af, format!("expected {degree} elements, got {}", args.len())));
        }
        let args = args
            .iter()
            .map(|a| parse_arg(group, a, &af))
            .collect::<Result<Vec<_>>>()?;
        let value = e
            .get("value")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::field(&vf, "expected an array of integers"))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| Error::field(&vf, "expected integers")))
            .collect::<Result<Vec<_>>>()?;
        if value.len() != module.rank() {
            return Err(Error::field(
                &vf,
                format!("expected {} coordinates, got {}", module.rank(), value.len()),
            ));
        }
        c.set(&args, &value).map_err(|e| Error::field(&vf, e.to_string()))?;
    }
    Ok((spec, c))
}

/// Writes the nonzero entries in lexicographic order of `args`.
pub fn cochain_to_json(c: &Cochain, spec: &ModuleSpec) -> Value {
    let entries: Vec<Value> = c
        .entries()
        .into_iter()
        .map(|(args, value)| json!({"args": args, "value": value}))
        .collect();
    json!({"degree": c.degree(), "module": spec.to_json(), "entries": entries})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn c2() -> Arc<Group> {
        Arc::new(build_group(&GroupSpec::Cyclic(2)).unwrap())
    }

    #[test]
    fn round_trip() {
        let g = c2();
        let v = json!({"degree": 1, "module": {"kind": "trivial-int"},
                       "entries": [{"args": ["g"], "value": [1]}]});
        let (spec, c) = cochain_from_json(&v, &g).unwrap();
        assert_eq!(c.value(&[1]), &[1]);
        assert_eq!(c.value(&[0]), &[0]);
        let out = cochain_to_json(&c, &spec);
        assert_eq!(out["entries"], json!([{"args": [1], "value": [1]}]));
        assert_eq!(cochain_from_json(&out, &g).unwrap().1, c);
    }

    #[test]
    fn errors_name_the_field() {
        let g = c2();
        let cases = [
            (json!({"module": {"kind": "trivial-int"}}), "degree"),
            (json!({"degree": 1}), "module"),
            (json!({"degree": 1, "module": {"kind": "trivial-int"},
                    "entries": [{"args": [5], "value": [1]}]}), "entries[0].args"),
            (json!({"degree": 1, "module": {"kind": "trivial-int"},
                    "entries": [{"args": [0], "value": [1, 2]}]}), "entries[0].value"),
            (json!({"degree": 1, "module": {"kind": "trivial-int"},
                    "entries": [{"args": [0, 1], "value": [1]}]}), "entries[0].args"),
        ];
        for (v, field) in cases {
            match cochain_from_json(&v, &g) {
                Err(Error::Field { field: f, .. }) => assert_eq!(f, field),
                other => panic!("{v}: {other:?}"),
            }
        }
        match cochain_from_json(&json!({"degree": 0, "module": {"kind": "bogus"}}), &g) {
            Err(Error::Field { field, .. }) => assert!(field.starts_with("module"), "{field}"),
            other => panic!("{other:?}"),
        }
    }
}
