//! The on-disk document format: one JSON object per system, every number a
//! canonical `p/q` string so files are exact and diffable.
//!
//! Serialization is canonical — fixed key order, sorted roots, no optional
//! whitespace — so parse followed by serialize is the identity on anything
//! this module emitted. The parser is strict in return: unknown keys,
//! unreduced fractions, asymmetric gram matrices, or a missing zero root are
//! errors, never silently repaired.

use std::fmt::Write as _;

use serde_json::Value;

use crate::axioms::AxiomReport;
use crate::classify::IsoWitness;
use crate::error::Error;
use crate::exactlin::{GramForm, Vector};
use crate::rational::Rational;
use crate::system::RootSupersystem;
use crate::Result;

fn malformed(why: impl Into<String>) -> Error {
    Error::MalformedDocument(why.into())
}

// ---------------------------------------------------------------------------
// Emission.

fn push_json_string(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
}

fn push_vector(out: &mut String, v: &Vector) {
    out.push('[');
    for (i, c) in v.coords().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        push_json_string(out, &c.to_string());
    }
    out.push(']');
}

/// The canonical document for a system. Roots appear in their stored sorted
/// order, so emitting the same system always yields the same bytes.
pub fn to_json(s: &RootSupersystem) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\"dim\":{},\"basis\":[", s.dim());
    for i in 0..s.dim() {
        if i > 0 {
            out.push(',');
        }
        push_json_string(&mut out, &format!("e{}", i + 1));
    }
    out.push_str("],\"gram\":[");
    for (i, row) in s.form().entries().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        for (j, entry) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            push_json_string(&mut out, &entry.to_string());
        }
        out.push(']');
    }
    out.push_str("],\"roots\":[");
    for (i, root) in s.roots().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        push_vector(&mut out, root);
    }
    out.push(']');
    if let Some(label) = s.label() {
        out.push_str(",\"label\":");
        push_json_string(&mut out, &label.to_string());
    }
    out.push_str("}\n");
    out
}

// ---------------------------------------------------------------------------
// Parsing.

fn as_object<'a>(value: &'a Value, what: &str) -> Result<&'a serde_json::Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| malformed(format!("{what} must be an object")))
}

fn as_array<'a>(value: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    value
        .as_array()
        .ok_or_else(|| malformed(format!("{what} must be an array")))
}

fn as_str<'a>(value: &'a Value, what: &str) -> Result<&'a str> {
    value
        .as_str()
        .ok_or_else(|| malformed(format!("{what} must be a string")))
}

fn rational_field(value: &Value, what: &str) -> Result<Rational> {
    as_str(value, what)?.parse()
}

fn vector_field(value: &Value, dim: usize, what: &str) -> Result<Vector> {
    let entries = as_array(value, what)?;
    if entries.len() != dim {
        return Err(malformed(format!(
            "{what} has {} coordinates, expected {dim}",
            entries.len()
        )));
    }
    let coords = entries
        .iter()
        .map(|e| rational_field(e, what))
        .collect::<Result<Vec<Rational>>>()?;
    Ok(Vector::new(coords))
}

/// Strict parse of a canonical document. The resulting system is
/// well-formed (symmetric form, consistent dimensions, distinct roots, zero
/// present) but not yet verified against any axiom set.
pub fn from_json(text: &str) -> Result<RootSupersystem> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let object = as_object(&value, "document")?;
    for key in object.keys() {
        if !matches!(key.as_str(), "dim" | "basis" | "gram" | "roots" | "label") {
            return Err(malformed(format!("unknown key {key:?}")));
        }
    }
    let dim = object
        .get("dim")
        .ok_or_else(|| malformed("missing key \"dim\""))?
        .as_u64()
        .ok_or_else(|| malformed("\"dim\" must be a nonnegative integer"))? as usize;
    let basis = as_array(
        object
            .get("basis")
            .ok_or_else(|| malformed("missing key \"basis\""))?,
        "\"basis\"",
    )?;
    if basis.len() != dim {
        return Err(malformed(format!(
            "\"basis\" names {} vectors, expected {dim}",
            basis.len()
        )));
    }
    for name in basis {
        as_str(name, "a basis name")?;
    }
    let gram_rows = as_array(
        object
            .get("gram")
            .ok_or_else(|| malformed("missing key \"gram\""))?,
        "\"gram\"",
    )?;
    if gram_rows.len() != dim {
        return Err(malformed(format!(
            "\"gram\" has {} rows, expected {dim}",
            gram_rows.len()
        )));
    }
    let mut gram = Vec::with_capacity(dim);
    for row in gram_rows {
        let entries = as_array(row, "a gram row")?;
        if entries.len() != dim {
            return Err(malformed(format!(
                "gram row has {} entries, expected {dim}",
                entries.len()
            )));
        }
        gram.push(
            entries
                .iter()
                .map(|e| rational_field(e, "a gram entry"))
                .collect::<Result<Vec<Rational>>>()?,
        );
    }
    let root_rows = as_array(
        object
            .get("roots")
            .ok_or_else(|| malformed("missing key \"roots\""))?,
        "\"roots\"",
    )?;
    let roots = root_rows
        .iter()
        .map(|r| vector_field(r, dim, "a root"))
        .collect::<Result<Vec<Vector>>>()?;
    if !roots.iter().any(|r| r.is_zero()) {
        return Err(Error::MissingZeroRoot);
    }
    let system = RootSupersystem::new(GramForm::new(gram)?, roots)?;
    match object.get("label") {
        None => Ok(system),
        Some(value) => {
            let label = as_str(value, "\"label\"")?.parse()?;
            Ok(system.with_label(label))
        }
    }
}

// ---------------------------------------------------------------------------
// Reports and witnesses.

/// Axiom report as JSON: overall verdict plus one entry per check, each with
/// its first failing witness roots (empty when the check passes).
pub fn report_to_json(report: &AxiomReport) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"verdict\":\"{}\",\"checks\":[",
        if report.verdict { "pass" } else { "fail" }
    );
    for (i, check) in report.checks.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"id\":\"{}\",\"pass\":{},\"witness\":[",
            check.id.as_str(),
            check.pass
        );
        for (j, v) in check.witness.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            push_vector(&mut out, v);
        }
        out.push_str("]}");
    }
    out.push_str("]}\n");
    out
}

/// Isomorphism witness as JSON: the matrix row by row and the form scalar
/// under the key `"r"`.
pub fn witness_to_json(witness: &IsoWitness) -> String {
    let mut out = String::from("{\"matrix\":[");
    for (i, row) in witness.matrix.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        for (j, entry) in row.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            push_json_string(&mut out, &entry.to_string());
        }
        out.push(']');
    }
    out.push_str("],\"r\":");
    push_json_string(&mut out, &witness.scalar.to_string());
    out.push_str("}\n");
    out
}

/// Strict parse of a witness document.
pub fn witness_from_json(text: &str) -> Result<IsoWitness> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    let object = as_object(&value, "witness")?;
    for key in object.keys() {
        if !matches!(key.as_str(), "matrix" | "r") {
            return Err(malformed(format!("unknown key {key:?}")));
        }
    }
    let rows = as_array(
        object
            .get("matrix")
            .ok_or_else(|| malformed("missing key \"matrix\""))?,
        "\"matrix\"",
    )?;
    let matrix = rows
        .iter()
        .map(|row| {
            as_array(row, "a matrix row")?
                .iter()
                .map(|e| rational_field(e, "a matrix entry"))
                .collect::<Result<Vec<Rational>>>()
        })
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    let scalar = rational_field(
        object
            .get("r")
            .ok_or_else(|| malformed("missing key \"r\""))?,
        "\"r\"",
    )?;
    Ok(IsoWitness { matrix, scalar })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms;
    use crate::catalog::{construct, TypeLabel};

    #[test]
    fn serialize_parse_serialize_is_byte_identical() {
        for text in ["A_2", "BC_2", "Adot(0,3)", "B(2,1)", "D(2,1,-1/2)"] {
            let label: TypeLabel = text.parse().unwrap();
            let system = construct(&label).unwrap();
            let first = to_json(&system);
            let reparsed = from_json(&first).unwrap();
            assert_eq!(to_json(&reparsed), first, "{text}");
            assert_eq!(reparsed.label(), Some(&label));
        }
    }

    #[test]
    fn document_shape_is_stable() {
        let system = construct(&TypeLabel::A(1)).unwrap().unlabeled();
        assert_eq!(
            to_json(&system),
            "{\"dim\":1,\"basis\":[\"e1\"],\"gram\":[[\"2/1\"]],\
             \"roots\":[[\"-1/1\"],[\"0/1\"],[\"1/1\"]]}\n"
        );
    }

    #[test]
    fn parser_rejects_sloppy_documents() {
        let good = to_json(&construct(&TypeLabel::A(1)).unwrap());
        assert!(from_json(&good).is_ok());
        let unreduced = good.replace("\"2/1\"", "\"4/2\"");
        assert!(matches!(
            from_json(&unreduced),
            Err(Error::ParseRational(_))
        ));
        let unknown = good.replace("\"dim\"", "\"rank\"");
        assert!(from_json(&unknown).is_err());
        let no_zero = good.replace("[\"0/1\"],", "");
        assert!(matches!(from_json(&no_zero), Err(Error::MissingZeroRoot)));
        let asymmetric = "{\"dim\":2,\"basis\":[\"e1\",\"e2\"],\
             \"gram\":[[\"1/1\",\"1/1\"],[\"0/1\",\"1/1\"]],\
             \"roots\":[[\"0/1\",\"0/1\"]]}";
        assert!(matches!(
            from_json(asymmetric),
            Err(Error::AsymmetricForm { .. })
        ));
    }

    #[test]
    fn axiom_report_includes_every_check_id() {
        let system = construct(&TypeLabel::BC(1)).unwrap();
        let report = axioms::verify_t(&system);
        let json = report_to_json(&report);
        assert!(json.contains("\"verdict\":\"pass\""));
        assert!(json.contains("\"id\":\"zero-root\""));
        assert!(json.ends_with("]}\n"));
    }

    #[test]
    fn witness_round_trips() {
        let witness = IsoWitness {
            matrix: vec![
                vec![Rational::one(), Rational::zero()],
                vec![Rational::zero(), Rational::ratio(-1, 2)],
            ],
            scalar: Rational::from_integer(-1),
        };
        let json = witness_to_json(&witness);
        assert_eq!(witness_from_json(&json).unwrap(), witness);
        assert!(json.contains("\"r\":\"-1/1\""));
    }
}
