//! The `eqcx-v1` JSON interchange format.
//!
//! ```json
//! {
//!   "format": "eqcx-v1",
//!   "name": "kirby",
//!   "mode": "lambda",
//!   "ranks": [1, 1, 2, 1, 1],
//!   "boundaries": [[[[-1, 1]]], [[[0, 0], [1, 1]]], [[[1, 1]], [[0, 0]]], [[[-1, 1]]]],
//!   "aux": { "square_form": [[0, 1], [1, 0]] },
//!   "metadata": { "claims_closed_4_manifold": true }
//! }
//! ```
//!
//! `boundaries[n - 1]` lists the rows of `d_n`; an entry `[a, b]` is `a + b*tau`.
//! In `"delta"` mode the document carries `delta` (vertex count, ordered faces
//! and involution permutations) instead of `ranks` and `boundaries`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::{AuxData, ComplexError, DeltaComplex, EquivariantComplex, LambdaMatrix, LambdaScalar};

pub const FORMAT_TAG: &str = "eqcx-v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    /// Malformed JSON or a schema mismatch; `pointer` locates the offending value.
    #[error("parse error at `{pointer}`: {message}")]
    Parse { pointer: String, message: String },
    #[error("unsupported format tag `{0}`, expected `eqcx-v1`")]
    WrongFormat(String),
    #[error("invalid complex: {0}")]
    Complex(#[from] ComplexError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Lambda,
    Delta,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default)]
    pub claims_closed_4_manifold: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format: String,
    pub name: String,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranks: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundaries: Option<Vec<Vec<Vec<LambdaScalar>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<DeltaComplex>,
    #[serde(default, skip_serializing_if = "AuxData::is_empty")]
    pub aux: AuxData,
    #[serde(default)]
    pub metadata: Metadata,
}

fn parse_error(pointer: impl Into<String>, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        pointer: pointer.into(),
        message: message.into(),
    }
}

fn json_pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

impl Document {
    pub fn from_complex(c: &EquivariantComplex) -> Self {
        let (mode, ranks, boundaries, delta) = match c.delta() {
            Some(d) => (Mode::Delta, None, None, Some(d.clone())),
            None => (
                Mode::Lambda,
                Some(c.ranks().to_vec()),
                Some(c.boundaries().iter().map(LambdaMatrix::to_rows).collect()),
                None,
            ),
        };
        Document {
            format: FORMAT_TAG.to_string(),
            name: c.name.clone(),
            mode,
            ranks,
            boundaries,
            delta,
            aux: c.aux.clone(),
            metadata: Metadata {
                claims_closed_4_manifold: c.claims_closed_4_manifold,
                note: c.note.clone(),
            },
        }
    }

    /// Builds the complex. Shapes are checked here; the chain-complex
    /// conditions are left to [`EquivariantComplex::validate`].
    pub fn into_complex(self) -> Result<EquivariantComplex, FormatError> {
        if self.format != FORMAT_TAG {
            return Err(FormatError::WrongFormat(self.format));
        }
        let c = match self.mode {
            Mode::Lambda => {
                if self.delta.is_some() {
                    return Err(parse_error("/delta", "not allowed in lambda mode"));
                }
                let ranks = self.ranks.ok_or_else(|| parse_error("/ranks", "required in lambda mode"))?;
                let rows = self
                    .boundaries
                    .ok_or_else(|| parse_error("/boundaries", "required in lambda mode"))?;
                if ranks.is_empty() {
                    return Err(parse_error("/ranks", "at least one degree is required"));
                }
                if rows.len() != ranks.len() - 1 {
                    return Err(parse_error(
                        "/boundaries",
                        format!("expected {} matrices, found {}", ranks.len() - 1, rows.len()),
                    ));
                }
                let mut bds = Vec::with_capacity(rows.len());
                for (k, m) in rows.into_iter().enumerate() {
                    if m.len() != ranks[k] {
                        return Err(parse_error(
                            format!("/boundaries/{k}"),
                            format!("expected {} rows, found {}", ranks[k], m.len()),
                        ));
                    }
                    if let Some(i) = m.iter().position(|r| r.len() != ranks[k + 1]) {
                        return Err(parse_error(
                            format!("/boundaries/{k}/{i}"),
                            format!("expected {} entries, found {}", ranks[k + 1], m[i].len()),
                        ));
                    }
                    bds.push(LambdaMatrix::from_rows(ranks[k + 1], m));
                }
                EquivariantComplex::from_lambda(self.name, ranks, bds)
            }
            Mode::Delta => {
                if self.ranks.is_some() || self.boundaries.is_some() {
                    return Err(parse_error("/ranks", "ranks and boundaries are derived in delta mode"));
                }
                let delta = self.delta.ok_or_else(|| parse_error("/delta", "required in delta mode"))?;
                EquivariantComplex::from_delta(self.name, delta)?
            }
        };
        let c = c.with_aux(self.aux).claiming_manifold(self.metadata.claims_closed_4_manifold);
        Ok(match self.metadata.note {
            Some(n) => c.with_note(n),
            None => c,
        })
    }
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer = json_pointer(e.path());
        parse_error(pointer, e.into_inner().to_string())
    })
}

pub fn load(text: &str) -> Result<EquivariantComplex, FormatError> {
    parse_document(text)?.into_complex()
}

/// Pretty JSON with short object-free arrays kept on one line.
pub fn export(c: &EquivariantComplex) -> String {
    let v = serde_json::to_value(Document::from_complex(c)).expect("documents always serialize");
    let mut out = String::new();
    write_compact(&mut out, &v, 0);
    out
}

/// One-line form of an object-free value.
fn inline(v: &serde_json::Value) -> Option<String> {
    use serde_json::Value;
    match v {
        Value::Object(_) => None,
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        other => Some(other.to_string()),
    }
}

fn write_compact(out: &mut String, v: &serde_json::Value, indent: usize) {
    use serde_json::Value;
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(_) if inline(v).is_some_and(|s| s.len() <= 72) => out.push_str(&inline(v).unwrap()),
        // long object-free arrays: pack the item forms into lines
        Value::Array(items) if items.iter().all(|x| inline(x).is_some_and(|s| s.len() <= 72)) => {
            out.push_str("[\n");
            let mut line = String::new();
            for (i, x) in items.iter().enumerate() {
                let mut item = inline(x).unwrap();
                if i + 1 < items.len() {
                    item.push(',');
                }
                if !line.is_empty() && pad.len() + line.len() + 1 + item.len() > 80 {
                    out.push_str(&pad);
                    out.push_str(&line);
                    out.push('\n');
                    line.clear();
                }
                if !line.is_empty() {
                    line.push(' ');
                }
                line.push_str(&item);
            }
            out.push_str(&pad);
            out.push_str(&line);
            out.push('\n');
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_compact(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_compact(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KIRBY: &str = r#"{
      "format": "eqcx-v1",
      "name": "kirby",
      "mode": "lambda",
      "ranks": [1, 1, 2, 1, 1],
      "boundaries": [[[[-1, 1]]], [[[0, 0], [1, 1]]], [[[1, 1]], [[0, 0]]], [[[-1, 1]]]],
      "aux": { "square_form": [[0, 1], [1, 0]] },
      "metadata": { "claims_closed_4_manifold": true }
    }"#;

    #[test]
    fn doc_example_loads() {
        let c = load(KIRBY).unwrap();
        assert!(c.validate().is_valid());
        assert_eq!(c.ranks(), &[1, 1, 2, 1, 1]);
        assert!(c.claims_closed_4_manifold);
    }

    #[test]
    fn errors_carry_a_pointer() {
        let bad = KIRBY.replace("[[[[-1, 1]]]", "[[[[-1, \"x\"]]]");
        match parse_document(&bad) {
            Err(FormatError::Parse { pointer, .. }) => assert_eq!(pointer, "/boundaries/0/0/0/1"),
            other => panic!("{other:?}"),
        }
        let short = KIRBY.replace("[[[0, 0], [1, 1]]]", "[[[0, 0]]]");
        match load(&short) {
            Err(FormatError::Parse { pointer, .. }) => assert_eq!(pointer, "/boundaries/1/0"),
            other => panic!("{other:?}"),
        }
        let unknown = KIRBY.replace("\"aux\"", "\"extra\": 1, \"aux\"");
        assert!(matches!(parse_document(&unknown), Err(FormatError::Parse { .. })));
        let tag = KIRBY.replace("eqcx-v1", "eqcx-v0");
        assert_eq!(load(&tag), Err(FormatError::WrongFormat("eqcx-v0".into())));
    }
}
