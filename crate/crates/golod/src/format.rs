//! Facet-list files.
//!
//! Text form:
//!
//! ```text
//! # names: A B C D
//! m=4
//! 1 2 3
//! 3 4
//! ```
//!
//! The first non-comment line declares the vertex count; each further line
//! is one facet. `#` starts a comment. A comment of the form `# names: ...`
//! attaches display names to vertices `1..=m` in order.
//!
//! JSON form: `{"m": 4, "facets": [[1, 2, 3], [3, 4]], "names": [...]}` with
//! `names` optional.

use std::fmt::Write as _;

use golod_core::{Error as CoreError, Simplex, SimplicialComplex, Vertex};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("invalid JSON complex: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid complex: {0}")]
    Complex(#[from] CoreError),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

/// A parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub complex: SimplicialComplex,
    /// Display names of vertices `1..=m`.
    pub names: Option<Vec<String>>,
}

impl ComplexFile {
    pub fn new(complex: SimplicialComplex) -> Self {
        ComplexFile {
            complex,
            names: None,
        }
    }

    /// Display name of `v`, falling back to the number.
    pub fn name(&self, v: Vertex) -> String {
        self.names
            .as_ref()
            .and_then(|n| n.get((v as usize).checked_sub(1)?))
            .cloned()
            .unwrap_or_else(|| v.to_string())
    }

    /// `{a, b, ...}` with display names.
    pub fn set(&self, vs: &[Vertex]) -> String {
        let names: Vec<String> = vs.iter().map(|&v| self.name(v)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonComplex {
    m: usize,
    facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

/// Parses either form, choosing JSON when the input starts with `{`.
pub fn parse(input: &str) -> Result<ComplexFile, ParseError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_text(input: &str) -> Result<ComplexFile, ParseError> {
    let mut m: Option<(usize, usize)> = None;
    let mut names: Option<(usize, Vec<String>)> = None;
    let mut facets: Vec<(usize, Vec<Vertex>)> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c)),
            None => (raw, None),
        };
        if let Some(list) = comment.and_then(|c| c.trim_start().strip_prefix("names:")) {
            if names.is_some() {
                return Err(at(line, "vertex names given twice"));
            }
            names = Some((line, list.split_whitespace().map(String::from).collect()));
        }
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let Some((declared, _)) = m else {
            let count = body
                .strip_prefix("m")
                .and_then(|r| r.trim_start().strip_prefix('='))
                .ok_or_else(|| at(line, format!("expected `m=<count>`, found {body:?}")))?;
            let count = count
                .trim()
                .parse()
                .map_err(|_| at(line, format!("invalid vertex count {:?}", count.trim())))?;
            m = Some((count, line));
            continue;
        };
        let mut facet = Vec::new();
        for tok in body.split_whitespace() {
            let v: Vertex = tok
                .parse()
                .map_err(|_| at(line, format!("invalid vertex label {tok:?}")))?;
            if v == 0 || v as usize > declared {
                return Err(at(line, format!("vertex {v} is outside 1..={declared}")));
            }
            if facet.contains(&v) {
                return Err(at(line, format!("vertex {v} repeated in facet")));
            }
            facet.push(v);
        }
        facets.push((line, facet));
    }
    let Some((m, m_line)) = m else {
        return Err(at(input.lines().count().max(1), "missing `m=<count>` line"));
    };
    if let Some((line, n)) = &names {
        if n.len() != m {
            return Err(at(
                *line,
                format!("{} names given for {m} vertices", n.len()),
            ));
        }
    }
    let complex = SimplicialComplex::from_facets(m, facets.iter().map(|(_, f)| f.clone()))
        .map_err(|e| match e {
            CoreError::GhostVertex(v) => at(m_line, format!("vertex {v} lies in no facet")),
            CoreError::TooManyVertices(_) => at(m_line, e.to_string()),
            e => ParseError::Complex(e),
        })?;
    Ok(ComplexFile {
        complex,
        names: names.map(|(_, n)| n),
    })
}

pub fn parse_json(input: &str) -> Result<ComplexFile, ParseError> {
    let j: JsonComplex = serde_json::from_str(input)?;
    if let Some(n) = &j.names {
        if n.len() != j.m {
            return Err(at(
                1,
                format!("{} names given for {} vertices", n.len(), j.m),
            ));
        }
    }
    let complex = SimplicialComplex::from_facets(j.m, j.facets)?;
    Ok(ComplexFile {
        complex,
        names: j.names,
    })
}

/// Canonical text form: sorted facets, one per line.
pub fn emit_text(file: &ComplexFile, header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        for l in h.lines() {
            writeln!(out, "# {l}").unwrap();
        }
    }
    if let Some(n) = &file.names {
        writeln!(out, "# names: {}", n.join(" ")).unwrap();
    }
    writeln!(out, "m={}", file.complex.num_vertices()).unwrap();
    for f in file.complex.facets() {
        let vs: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", vs.join(" ")).unwrap();
    }
    out
}

pub fn emit_json(file: &ComplexFile) -> String {
    let j = JsonComplex {
        m: file.complex.num_vertices(),
        facets: file
            .complex
            .facets()
            .into_iter()
            .map(Simplex::into_vec)
            .collect(),
        names: file.names.clone(),
    };
    serde_json::to_string(&j).expect("serializable")
}
