//! Facet-list text formats and the embedded seed database.
//!
//! Line format: an optional `dim=<d>` header (or a first line holding a
//! single integer), then one facet per line as space-separated vertex ids.
//! `#` starts a comment. Bracket format: concatenated `[<digits>]` groups,
//! one single-digit label per vertex.

mod seeds;

use std::fmt::Write as _;

use thiserror::Error;

use crate::incidence::{IncidenceError, VertexFacetIncidence};

pub use seeds::{export_seeds, load_seed, seed_database, seed_file_name, seed_names, SeedEntry};

pub const DEFAULT_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid polytope: {0}")]
    Validation(#[from] IncidenceError),
    #[error("unknown seed {0:?}")]
    UnknownSeed(String),
    #[error("cannot build seed {name}: {message}")]
    Build { name: String, message: String },
    #[error("bracket format needs at most 10 vertices, got {0}")]
    TooManyVertices(usize),
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses the line format, or the bracket format when the first data line
/// starts with `[`.
pub fn parse_facet_list(text: &str) -> Result<VertexFacetIncidence, IoError> {
    let mut dim = None;
    let mut facets = Vec::new();
    let mut first = true;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if first && line.starts_with('[') {
            let rest: Vec<&str> = text.lines().skip(idx).map(strip_comment).collect();
            return parse_bracket_with_dim(&rest.join("\n"), dim.unwrap_or(DEFAULT_DIM), lineno);
        }
        if let Some(v) = line.strip_prefix("dim=") {
            if !first {
                return Err(syntax(lineno, "dim header after facet data"));
            }
            let d = v
                .trim()
                .parse()
                .map_err(|_| syntax(lineno, format!("bad dimension {v:?}")))?;
            dim = Some(d);
            first = false;
            continue;
        }
        let ids = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| syntax(lineno, format!("bad vertex id {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if first && dim.is_none() && ids.len() == 1 {
            dim = Some(ids[0]);
            first = false;
            continue;
        }
        first = false;
        facets.push(ids);
    }
    let dim = dim.unwrap_or(DEFAULT_DIM);
    Ok(VertexFacetIncidence::new(dim, facets)?)
}

/// Parses the bracket format of a 4-polytope. Whitespace, including line
/// breaks, is ignored.
pub fn parse_bracket_format(text: &str) -> Result<VertexFacetIncidence, IoError> {
    parse_bracket_with_dim(text, DEFAULT_DIM, 1)
}

fn parse_bracket_with_dim(
    text: &str,
    dim: usize,
    first_line: usize,
) -> Result<VertexFacetIncidence, IoError> {
    let mut facets = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut line = first_line;
    for c in text.chars() {
        match c {
            '\n' => line += 1,
            c if c.is_whitespace() => {}
            '[' => {
                if current.is_some() {
                    return Err(syntax(line, "nested '['"));
                }
                current = Some(Vec::new());
            }
            ']' => match current.take() {
                Some(f) if !f.is_empty() => facets.push(f),
                Some(_) => return Err(syntax(line, "empty facet")),
                None => return Err(syntax(line, "unbalanced ']'")),
            },
            c => {
                let d = c
                    .to_digit(10)
                    .ok_or_else(|| syntax(line, format!("non-digit label {c:?}")))?;
                match current.as_mut() {
                    Some(f) => f.push(d as usize),
                    None => return Err(syntax(line, format!("label {c:?} outside brackets"))),
                }
            }
        }
    }
    if current.is_some() {
        return Err(syntax(line, "unterminated '['"));
    }
    Ok(VertexFacetIncidence::new(dim, facets)?)
}

/// Line format with a `dim=` header and facets in stored order.
pub fn serialize_facet_list(p: &VertexFacetIncidence) -> String {
    let mut s = format!("dim={}\n", p.dim());
    for f in p.facets() {
        let line: Vec<String> = f.iter().map(usize::to_string).collect();
        writeln!(s, "{}", line.join(" ")).unwrap();
    }
    s
}

/// Bracket format with labels in descending order inside each facet.
pub fn serialize_bracket(p: &VertexFacetIncidence) -> Result<String, IoError> {
    if p.num_vertices() > 10 {
        return Err(IoError::TooManyVertices(p.num_vertices()));
    }
    let mut s = String::new();
    for f in p.facets() {
        s.push('[');
        for v in f.iter().rev() {
            s.push(char::from_digit(*v as u32, 10).unwrap());
        }
        s.push(']');
    }
    Ok(s)
}
