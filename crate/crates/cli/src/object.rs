//! Command-line syntax for objects of the 2-rig.
//!
//! Accepted forms: `x`, `x^m`, `0`, `unit`, `Lambda^k` (or `Λ^k`),
//! `Sym^k`, a JSON map `{"[2,1]": 3}`, a single pair `[[2,1], 1]`, or a list
//! of pairs `[[[2,1], 1], [[1], 2]]`.

use serde_json::Value;
use two_rig_lab::rig::RigObject;
use two_rig_lab::{Error, Partition, Result};

fn power(text: &str, prefixes: &[&str]) -> Option<Result<usize>> {
    prefixes.iter().find_map(|p| {
        text.strip_prefix(p).map(|rest| {
            rest.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad exponent in {text:?}")))
        })
    })
}

fn partition_from_json(v: &Value) -> Result<Partition> {
    let parts = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected a partition, got {v}")))?
        .iter()
        .map(|p| {
            p.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("bad part {p}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn pair_from_json(v: &Value) -> Result<Option<(Partition, u64)>> {
    let Some([p, m]) = v.as_array().map(Vec::as_slice) else {
        return Ok(None);
    };
    if !p.is_array() || !m.is_u64() {
        return Ok(None);
    }
    Ok(Some((partition_from_json(p)?, m.as_u64().expect("checked"))))
}

pub fn parse_object(text: &str, degree_bound: usize) -> Result<RigObject> {
    let t = text.trim();
    match t {
        "x" => return Ok(RigObject::generator()),
        "0" => return Ok(RigObject::zero()),
        "unit" | "1" => return Ok(RigObject::unit()),
        _ => {}
    }
    if let Some(m) = power(t, &["x^"]) {
        return RigObject::tensor_power_of_generator(m?, degree_bound);
    }
    if let Some(k) = power(t, &["Lambda^", "Λ^"]) {
        return Ok(RigObject::exterior_generator(k?));
    }
    if let Some(k) = power(t, &["Sym^"]) {
        return Ok(RigObject::simple(Partition::row(k?)));
    }
    let v: Value = serde_json::from_str(t)
        .map_err(|e| Error::Parse(format!("unrecognized object {t:?}: {e}")))?;
    if v.is_object() {
        return serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()));
    }
    if let Some(pair) = pair_from_json(&v)? {
        return Ok(RigObject::from_multiplicities([pair]));
    }
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("unrecognized object {t:?}")))?;
    let pairs = items
        .iter()
        .map(|item| {
            pair_from_json(item)?
                .ok_or_else(|| Error::Parse(format!("expected [partition, multiplicity], got {item}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RigObject::from_multiplicities(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn all_forms() {
        assert_eq!(parse_object("x", 8).unwrap(), RigObject::generator());
        assert_eq!(parse_object("0", 8).unwrap(), RigObject::zero());
        assert_eq!(parse_object("unit", 8).unwrap(), RigObject::unit());
        assert_eq!(
            parse_object("x^2", 8).unwrap(),
            RigObject::from_multiplicities([(p(&[2]), 1), (p(&[1, 1]), 1)])
        );
        assert_eq!(parse_object("Lambda^3", 8).unwrap(), RigObject::exterior_generator(3));
        assert_eq!(parse_object("Λ^2", 8).unwrap(), RigObject::exterior_generator(2));
        assert_eq!(parse_object("Sym^2", 8).unwrap(), RigObject::simple(p(&[2])));
        let expect = RigObject::from_multiplicities([(p(&[2, 1]), 1)]);
        assert_eq!(parse_object("[[2,1],1]", 8).unwrap(), expect);
        assert_eq!(parse_object(r#"{"[2,1]": 1}"#, 8).unwrap(), expect);
        assert_eq!(
            parse_object("[[[2,1],1],[[1],2]]", 8).unwrap(),
            RigObject::from_multiplicities([(p(&[2, 1]), 1), (p(&[1]), 2)])
        );
        assert_eq!(
            parse_object("[[1],2]", 8).unwrap(),
            RigObject::from_multiplicities([(p(&[1]), 2)])
        );
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["y", "x^a", "[[1,2],1]", r#"{"[1,2]": 1}"#, "[1,2,3]"] {
            assert!(parse_object(bad, 8).is_err(), "{bad}");
        }
    }
}
