//! The group file format: UTF-8, one JSON object per line, with fields
//! id, kind, degree, generators, field{p,k,modulus}, dim, tags.
//!
//! Permutation generators are image arrays over 0..degree-1. Matrix
//! generators are row-major entry matrices; entries are field elements
//! encoded as integers below p^k (base-p digits give the polynomial
//! coefficients). Vectors are row vectors acted on the right.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use gfmatrix::{FieldSpec, Mat, MatrixGroup};
use permcore::{PermGroup, Permutation};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FieldDesc {
    pub p: u64,
    pub k: usize,
    pub modulus: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GroupRecord {
    pub id: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDesc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub generators: serde_json::Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate id {id}")]
    DuplicateId { line: usize, id: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// A record together with the group it builds.
#[derive(Debug)]
pub enum BuiltGroup {
    Perm(PermGroup),
    Matrix(MatrixGroup),
}

#[derive(Debug)]
pub struct CatalogEntry {
    pub record: GroupRecord,
    pub group: BuiltGroup,
}

impl CatalogEntry {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.record.tags.iter().any(|t| t == tag)
    }

    /// The block decomposition from a `blocks=d1,d2` tag, if present.
    pub fn blocks(&self) -> Option<Vec<usize>> {
        self.record.tags.iter().find_map(|t| {
            t.strip_prefix("blocks=").map(|s| {
                s.split(',')
                    .filter_map(|x| x.parse().ok())
                    .collect::<Vec<usize>>()
            })
        })
    }
}

fn build_record(record: GroupRecord) -> Result<CatalogEntry, String> {
    match record.kind.as_str() {
        "perm" => {
            let degree = record.degree.ok_or("perm record needs a degree")?;
            let raw: Vec<Vec<u32>> = serde_json::from_value(record.generators.clone())
                .map_err(|e| format!("bad perm generators: {e}"))?;
            let mut gens = Vec::with_capacity(raw.len());
            for images in raw {
                if images.len() != degree {
                    return Err(format!(
                        "generator of length {} in a degree-{degree} record",
                        images.len()
                    ));
                }
                gens.push(Permutation::from_images(images).map_err(|e| e.to_string())?);
            }
            let group = PermGroup::new(degree, gens).map_err(|e| e.to_string())?;
            Ok(CatalogEntry {
                record,
                group: BuiltGroup::Perm(group),
            })
        }
        "matrix" => {
            let fd = record.field.clone().ok_or("matrix record needs a field")?;
            let dim = record.dim.ok_or("matrix record needs a dim")?;
            let field = Arc::new(
                FieldSpec::new(fd.p, fd.k, fd.modulus.clone()).map_err(|e| e.to_string())?,
            );
            let raw: Vec<Vec<Vec<u64>>> = serde_json::from_value(record.generators.clone())
                .map_err(|e| format!("bad matrix generators: {e}"))?;
            let mut gens = Vec::with_capacity(raw.len());
            for rows in raw {
                if rows.len() != dim {
                    return Err(format!("generator with {} rows in a dim-{dim} record", rows.len()));
                }
                gens.push(Mat::from_rows(&rows).map_err(|e| e.to_string())?);
            }
            let group = MatrixGroup::new(field, dim, gens).map_err(|e| e.to_string())?;
            Ok(CatalogEntry {
                record,
                group: BuiltGroup::Matrix(group),
            })
        }
        other => Err(format!("unknown kind {other:?}")),
    }
}

/// Parses a catalog from JSONL text. Any malformed line aborts the run with
/// its line number.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, IngestError> {
    let mut entries = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let record: GroupRecord =
            serde_json::from_str(trimmed).map_err(|e| IngestError::Parse {
                line: lineno,
                message: e.to_string(),
            })?;
        if !seen.insert(record.id.clone()) {
            return Err(IngestError::DuplicateId {
                line: lineno,
                id: record.id,
            });
        }
        let entry = build_record(record).map_err(|message| IngestError::Parse {
            line: lineno,
            message,
        })?;
        entries.push(entry);
    }
    Ok(entries)
}

pub fn ingest(path: &str) -> Result<Vec<CatalogEntry>, IngestError> {
    let text = std::fs::read_to_string(path).map_err(|source| IngestError::Io {
        path: path.to_string(),
        source,
    })?;
    parse_catalog(&text)
}

/// Serializes records back to JSONL, one object per line, in order.
pub fn emit_catalog(records: &[GroupRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("serializable"));
        out.push('\n');
    }
    out
}

/// Record constructors used by the builtin catalog.

pub fn perm_record(id: &str, group: &PermGroup, tags: &[&str]) -> GroupRecord {
    let gens: Vec<Vec<u32>> = group
        .generators()
        .iter()
        .map(|g| g.images().to_vec())
        .collect();
    GroupRecord {
        id: id.into(),
        kind: "perm".into(),
        degree: Some(group.degree()),
        field: None,
        dim: None,
        generators: serde_json::json!(gens),
        tags: tags.iter().map(|s| s.to_string()).collect(),
    }
}

pub fn matrix_record(id: &str, group: &MatrixGroup, tags: &[&str]) -> GroupRecord {
    let dim = group.dim;
    let gens: Vec<Vec<Vec<u64>>> = group
        .generators()
        .iter()
        .map(|m| {
            (0..dim)
                .map(|i| (0..dim).map(|j| m.at(i, j)).collect())
                .collect()
        })
        .collect();
    GroupRecord {
        id: id.into(),
        kind: "matrix".into(),
        degree: None,
        field: Some(FieldDesc {
            p: group.field.characteristic(),
            k: group.field.extension_degree(),
            modulus: group.field.modulus().to_vec(),
        }),
        dim: Some(dim),
        generators: serde_json::json!(gens),
        tags: tags.iter().map(|s| s.to_string()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_perm_record() {
        let text = r#"{"id":"s4","kind":"perm","degree":4,"generators":[[1,0,2,3],[1,2,3,0]]}"#;
        let entries = parse_catalog(text).unwrap();
        assert_eq!(entries.len(), 1);
        match &entries[0].group {
            BuiltGroup::Perm(g) => assert_eq!(g.order(), 24),
            _ => panic!("expected perm"),
        }
    }

    #[test]
    fn parse_matrix_record() {
        let text = r#"{"id":"gl22","kind":"matrix","field":{"p":2,"k":1,"modulus":[0,1]},"dim":2,"generators":[[[1,1],[0,1]],[[0,1],[1,0]]]}"#;
        let entries = parse_catalog(text).unwrap();
        match &entries[0].group {
            BuiltGroup::Matrix(g) => assert_eq!(g.order().unwrap(), 6),
            _ => panic!("expected matrix"),
        }
    }

    #[test]
    fn non_bijective_images_rejected_with_line() {
        let text = "\n".to_string()
            + r#"{"id":"bad","kind":"perm","degree":3,"generators":[[0,0,1]]}"#;
        let err = parse_catalog(&text).unwrap_err();
        match err {
            IngestError::Parse { line, .. } => assert_eq!(line, 2),
            _ => panic!("expected parse error"),
        }
    }

    #[test]
    fn duplicate_id_rejected() {
        let text = r#"{"id":"x","kind":"perm","degree":2,"generators":[[1,0]]}
{"id":"x","kind":"perm","degree":2,"generators":[[0,1]]}"#;
        assert!(matches!(
            parse_catalog(text),
            Err(IngestError::DuplicateId { line: 2, .. })
        ));
    }

    #[test]
    fn roundtrip_is_stable() {
        let text = r#"{"id":"s3","kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]],"tags":["solvable-expected"]}"#;
        let entries = parse_catalog(text).unwrap();
        let emitted = emit_catalog(&[entries[0].record.clone()]);
        let again = parse_catalog(&emitted).unwrap();
        assert_eq!(again[0].record, entries[0].record);
        // emission is idempotent byte-for-byte
        assert_eq!(emit_catalog(&[again[0].record.clone()]), emitted);
    }
}
