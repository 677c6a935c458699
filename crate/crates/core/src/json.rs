//! JSON formats for elements, algebras and reports.
//!
//! Readers walk the document by hand so every error names the offending
//! field by its path, e.g. `terms[2].coeff`.

use serde_json::{json, Map, Value};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::intertwiner::{coefficient_of, IntertwinerSpace};
use crate::level::LevelMatrix;
use crate::normalizer::{LevelCheck, NormalizerReport, TraceReport, TraceRow};
use crate::scalar::{format_scalar, parse_scalar, Scalar};
use crate::subalgebra::{CommutantReport, CornerSumAlgebra, GeneratedAlgebra, Subalgebra};
use crate::word::{check_n, Monomial, Word};

fn join(path: &str, field: &str) -> String {
    if path.is_empty() {
        field.to_string()
    } else {
        format!("{path}.{field}")
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| {
        Error::format(
            if path.is_empty() { "<root>" } else { path },
            "expected an object",
        )
    })
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, name: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| Error::format(join(path, name), "missing field"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::format(path, "expected an array"))
}

fn uint(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::format(path, "expected a non-negative integer"))
}

fn int(v: &Value, path: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| Error::format(path, "expected an integer"))
}

fn boolean(v: &Value, path: &str) -> Result<bool> {
    v.as_bool()
        .ok_or_else(|| Error::format(path, "expected a boolean"))
}

fn scalar(v: &Value, path: &str) -> Result<Scalar> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::format(path, "expected a rational string"))?;
    parse_scalar(s).map_err(|e| match e {
        Error::Format { message, .. } => Error::format(path, message),
        other => other,
    })
}

fn word(v: &Value, path: &str, n: u8) -> Result<Word> {
    let letters = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let p = format!("{path}[{i}]");
            let l = uint(l, &p)?;
            if l == 0 || l > n as usize {
                return Err(Error::format(p, format!("letter {l} outside 1..={n}")));
            }
            Ok(l)
        })
        .collect::<Result<Vec<_>>>()?;
    Word::new(letters, n)
}

fn ambient(obj: &Map<String, Value>, path: &str) -> Result<usize> {
    let p = join(path, "n");
    let n = uint(field(obj, path, "n")?, &p)?;
    check_n(n).map_err(|e| Error::format(p, e.to_string()))?;
    Ok(n)
}

pub fn element_to_json(x: &Element) -> Value {
    let terms: Vec<Value> = x
        .monomials()
        .map(|m| {
            json!({
                "coeff": format_scalar(&m.coeff),
                "mu": m.mu.letters(),
                "nu": m.nu.letters(),
            })
        })
        .collect();
    json!({ "n": x.n(), "terms": terms })
}

fn element_at(v: &Value, path: &str) -> Result<Element> {
    let obj = object(v, path)?;
    let n = ambient(obj, path)?;
    let terms_path = join(path, "terms");
    let monos = array(field(obj, path, "terms")?, &terms_path)?
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let p = format!("{terms_path}[{i}]");
            let t = object(t, &p)?;
            Ok(Monomial::new(
                scalar(field(t, &p, "coeff")?, &join(&p, "coeff"))?,
                word(field(t, &p, "mu")?, &join(&p, "mu"), n as u8)?,
                word(field(t, &p, "nu")?, &join(&p, "nu"), n as u8)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Element::from_monomials(n, monos)
}

pub fn element_from_json(v: &Value) -> Result<Element> {
    element_at(v, "")
}

fn elements_at(v: &Value, path: &str) -> Result<Vec<Element>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| element_at(x, &format!("{path}[{i}]")))
        .collect()
}

pub fn algebra_to_json(a: &CornerSumAlgebra) -> Value {
    json!({
        "n": a.n(),
        "level": a.level(),
        "projections": a.projections().iter().map(element_to_json).collect::<Vec<_>>(),
    })
}

fn algebra_at(v: &Value, path: &str) -> Result<CornerSumAlgebra> {
    let obj = object(v, path)?;
    let n = ambient(obj, path)?;
    let level = uint(field(obj, path, "level")?, &join(path, "level"))?;
    let pp = join(path, "projections");
    let projections = elements_at(field(obj, path, "projections")?, &pp)?;
    if let Some(i) = projections.iter().position(|e| e.n() != n) {
        return Err(Error::format(format!("{pp}[{i}].n"), "differs from the algebra's n"));
    }
    CornerSumAlgebra::with_level(projections, level)
}

pub fn algebra_from_json(v: &Value) -> Result<CornerSumAlgebra> {
    algebra_at(v, "")
}

fn subalgebra_to_json(a: &Subalgebra) -> Value {
    match a {
        Subalgebra::CornerSum(c) => algebra_to_json(c),
        Subalgebra::Generated(g) => json!({
            "n": g.n(),
            "generators": g.generators().iter().map(element_to_json).collect::<Vec<_>>(),
        }),
    }
}

fn subalgebra_at(v: &Value, path: &str) -> Result<Subalgebra> {
    let obj = object(v, path)?;
    if obj.contains_key("generators") {
        let n = ambient(obj, path)?;
        let gens = elements_at(&obj["generators"], &join(path, "generators"))?;
        return Ok(GeneratedAlgebra::new(n, gens)?.into());
    }
    Ok(algebra_at(v, path)?.into())
}

pub fn commutant_report_to_json(r: &CommutantReport) -> Value {
    json!({
        "algebra": subalgebra_to_json(&r.algebra),
        "level": r.level,
        "window": r.window,
        "requested_window": r.requested_window,
        "cutoff": r.cutoff,
        "degrees": r.degrees(),
        "dimensions": r.dimensions(),
        "bases": r.spaces.iter()
            .map(|s| s.commutant_elements().iter().map(element_to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn window_value(v: &Value, path: &str) -> Result<u32> {
    u32::try_from(uint(v, path)?).map_err(|_| Error::format(path, "window too large"))
}

pub fn commutant_report_from_json(v: &Value) -> Result<CommutantReport> {
    let obj = object(v, "")?;
    let algebra = subalgebra_at(field(obj, "", "algebra")?, "algebra")?;
    let level = uint(field(obj, "", "level")?, "level")?;
    let window = window_value(field(obj, "", "window")?, "window")?;
    let requested_window = window_value(field(obj, "", "requested_window")?, "requested_window")?;
    let cutoff = match field(obj, "", "cutoff")? {
        Value::Null => None,
        c => Some(window_value(c, "cutoff")?),
    };
    let degrees = array(field(obj, "", "degrees")?, "degrees")?
        .iter()
        .enumerate()
        .map(|(i, d)| int(d, &format!("degrees[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let bases = array(field(obj, "", "bases")?, "bases")?;
    if bases.len() != degrees.len() {
        return Err(Error::format("bases", "length differs from degrees"));
    }
    let dims = array(field(obj, "", "dimensions")?, "dimensions")?;
    if dims.len() != degrees.len() {
        return Err(Error::format("dimensions", "length differs from degrees"));
    }
    let generators = algebra.generators_at(level)?;
    let spaces = degrees
        .iter()
        .zip(bases)
        .enumerate()
        .map(|(i, (&k, b))| {
            let p = format!("bases[{i}]");
            let lifts = elements_at(b, &p)?;
            if uint(&dims[i], &format!("dimensions[{i}]"))? != lifts.len() {
                return Err(Error::format(format!("dimensions[{i}]"), "differs from the basis size"));
            }
            let basis = lifts
                .iter()
                .enumerate()
                .map(|(j, x)| {
                    LevelMatrix::from_element(&coefficient_of(x, k), 0, level)
                        .map_err(|e| Error::format(format!("{p}[{j}]"), e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(IntertwinerSpace {
                generators: generators.clone(),
                k,
                level,
                basis,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CommutantReport {
        algebra,
        level,
        window,
        requested_window,
        cutoff,
        spaces,
    })
}

pub fn trace_report_to_json(t: &TraceReport) -> Value {
    Value::Array(
        t.rows
            .iter()
            .map(|r| {
                json!({
                    "index": r.index,
                    "trace": format_scalar(&r.trace),
                    "conjugated_trace": format_scalar(&r.conjugated_trace),
                })
            })
            .collect(),
    )
}

fn trace_report_at(v: &Value, path: &str) -> Result<TraceReport> {
    let rows = array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let p = format!("{path}[{i}]");
            let o = object(r, &p)?;
            Ok(TraceRow {
                index: uint(field(o, &p, "index")?, &join(&p, "index"))?,
                trace: scalar(field(o, &p, "trace")?, &join(&p, "trace"))?,
                conjugated_trace: scalar(
                    field(o, &p, "conjugated_trace")?,
                    &join(&p, "conjugated_trace"),
                )?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TraceReport { rows })
}

pub fn normalizer_report_to_json(r: &NormalizerReport) -> Value {
    json!({
        "unitary": element_to_json(&r.unitary),
        "algebra": algebra_to_json(&r.algebra),
        "is_unitary": r.is_unitary,
        "levels": r.levels.iter()
            .map(|l| json!({ "level": l.level, "forward": l.forward, "backward": l.backward }))
            .collect::<Vec<_>>(),
        "exact": r.exact,
        "exactness_bound": r.exactness_bound,
        "block_degrees": r.block_degrees,
        "trace_table": trace_report_to_json(&r.trace_table),
        "passed": r.passed(),
    })
}

pub fn normalizer_report_from_json(v: &Value) -> Result<NormalizerReport> {
    let obj = object(v, "")?;
    let levels = array(field(obj, "", "levels")?, "levels")?
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let p = format!("levels[{i}]");
            let o = object(l, &p)?;
            Ok(LevelCheck {
                level: uint(field(o, &p, "level")?, &join(&p, "level"))?,
                forward: boolean(field(o, &p, "forward")?, &join(&p, "forward"))?,
                backward: boolean(field(o, &p, "backward")?, &join(&p, "backward"))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let block_degrees = array(field(obj, "", "block_degrees")?, "block_degrees")?
        .iter()
        .enumerate()
        .map(|(i, d)| match d {
            Value::Null => Ok(None),
            d => int(d, &format!("block_degrees[{i}]")).map(Some),
        })
        .collect::<Result<Vec<_>>>()?;
    let exactness_bound = match field(obj, "", "exactness_bound")? {
        Value::Null => None,
        b => Some(uint(b, "exactness_bound")?),
    };
    Ok(NormalizerReport {
        unitary: element_at(field(obj, "", "unitary")?, "unitary")?,
        algebra: algebra_at(field(obj, "", "algebra")?, "algebra")?,
        is_unitary: boolean(field(obj, "", "is_unitary")?, "is_unitary")?,
        levels,
        block_degrees,
        exactness_bound,
        exact: boolean(field(obj, "", "exact")?, "exact")?,
        trace_table: trace_report_at(field(obj, "", "trace_table")?, "trace_table")?,
    })
}

/// Any of the saved formats, told apart by their keys.
#[derive(Clone, Debug)]
pub enum Document {
    Element(Element),
    Algebra(CornerSumAlgebra),
    Commutant(CommutantReport),
    Normalizer(NormalizerReport),
}

impl Document {
    pub fn to_json(&self) -> Value {
        match self {
            Document::Element(x) => element_to_json(x),
            Document::Algebra(a) => algebra_to_json(a),
            Document::Commutant(r) => commutant_report_to_json(r),
            Document::Normalizer(r) => normalizer_report_to_json(r),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = object(v, "")?;
        if obj.contains_key("terms") {
            element_from_json(v).map(Document::Element)
        } else if obj.contains_key("projections") {
            algebra_from_json(v).map(Document::Algebra)
        } else if obj.contains_key("bases") {
            commutant_report_from_json(v).map(Document::Commutant)
        } else if obj.contains_key("unitary") {
            normalizer_report_from_json(v).map(Document::Normalizer)
        } else {
            Err(Error::format("<root>", "unrecognised document"))
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| Error::format("<root>", e.to_string()))?;
        Self::from_json(&v)
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("values serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalizer::{build_example_2_2, check_normalizer};
    use crate::subalgebra::relative_commutant_on;

    fn field_of(e: Error) -> String {
        match e {
            Error::Format { field, .. } => field,
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn element_format() {
        let x = Element::matrix_unit(
            2,
            &Word::new([1, 2], 2).unwrap(),
            &Word::new([2], 2).unwrap(),
        )
        .unwrap()
        .scale(&crate::scalar::ratio(-2, 4));
        let v = element_to_json(&x);
        assert_eq!(
            v,
            json!({"n": 2, "terms": [{"coeff": "-1/2", "mu": [1, 2], "nu": [2]}]})
        );
        assert_eq!(element_from_json(&v).unwrap(), x);
    }

    #[test]
    fn reads_unreduced_and_reordered() {
        let v = json!({"n": 2, "terms": [
            {"coeff": "2/4", "mu": [2], "nu": [2]},
            {"coeff": "1/2", "mu": [1], "nu": [1]},
        ]});
        let x = element_from_json(&v).unwrap();
        assert_eq!(x, Element::one(2).unwrap().scale(&crate::scalar::ratio(1, 2)));
    }

    #[test]
    fn errors_name_fields() {
        let bad = |v: Value| field_of(element_from_json(&v).unwrap_err());
        assert_eq!(bad(json!({"terms": []})), "n");
        assert_eq!(
            bad(json!({"n": 2, "terms": [{"coeff": "3/0", "mu": [], "nu": []}]})),
            "terms[0].coeff"
        );
        assert_eq!(
            bad(json!({"n": 2, "terms": [{"coeff": "1", "mu": [3], "nu": []}]})),
            "terms[0].mu[0]"
        );
        assert_eq!(bad(json!({"n": 2, "terms": [{"coeff": "1", "mu": []}]})), "terms[0].nu");
        assert_eq!(bad(json!([])), "<root>");
        assert_eq!(field_of(Document::parse("{").unwrap_err()), "<root>");
    }

    #[test]
    fn algebra_round_trip() {
        let ex = build_example_2_2();
        let v = algebra_to_json(&ex.algebra);
        assert_eq!(algebra_from_json(&v).unwrap(), ex.algebra);
        let mut broken = v.clone();
        broken["projections"][1]["terms"][0]["coeff"] = json!("x");
        assert_eq!(field_of(algebra_from_json(&broken).unwrap_err()), "projections[1].terms[0].coeff");
    }

    #[test]
    fn commutant_round_trip() {
        let ex = build_example_2_2();
        let r = relative_commutant_on(&ex.algebra.clone().into(), 3, 1).unwrap();
        let back = commutant_report_from_json(&commutant_report_to_json(&r)).unwrap();
        assert_eq!(back.dimensions(), r.dimensions());
        assert_eq!(back.degrees(), r.degrees());
        assert_eq!(back.commutant_basis(0), r.commutant_basis(0));
        assert_eq!(back.window, 3);
    }

    #[test]
    fn normalizer_round_trip() {
        let ex = build_example_2_2();
        let r = check_normalizer(&ex.u, &ex.algebra, 4).unwrap();
        let doc = Document::Normalizer(r.clone());
        let back = match Document::parse(&doc.render()).unwrap() {
            Document::Normalizer(b) => b,
            other => panic!("wrong document {other:?}"),
        };
        assert_eq!(back.unitary, r.unitary);
        assert_eq!(back.levels, r.levels);
        assert_eq!(back.block_degrees, r.block_degrees);
        assert_eq!(back.trace_table, r.trace_table);
        assert_eq!(back.exact, r.exact);
    }
}
