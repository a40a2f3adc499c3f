//! On-disk formats: edge-list graph files and contraction-certificate
//! files. Both are plain text, `#` starts a comment, and blank lines are
//! skipped.
//!
//! Graph file: first data line `n m`, then m lines `u v` with 0-based
//! vertex ids below n. Certificate file: one `keep drop` pair per line,
//! applied in order.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use twinwidth::sequence::{ContractionSequence, ContractionStep};
use twinwidth::trigraph::{Trigraph, VertexId};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}:{line}: {reason}")]
    Parse {
        path: String,
        line: usize,
        reason: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn parse_err(path: &str, line: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse {
        path: path.to_string(),
        line,
        reason: reason.into(),
    }
}

/// Data lines with their 1-based line numbers, comments and blanks removed.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

pub fn parse_graph(text: &str, path: &str) -> Result<Trigraph, FormatError> {
    let mut lines = data_lines(text);
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "missing `n m` header"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(path, header_no, "bad vertex count"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(path, header_no, "bad edge count"))?;
    if parts.next().is_some() {
        return Err(parse_err(path, header_no, "header must be exactly `n m`"));
    }
    let mut g = Trigraph::with_vertex_count(n);
    let mut seen = 0;
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let u: VertexId = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(path, line_no, "bad endpoint"))?;
        let v: VertexId = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(path, line_no, "bad endpoint"))?;
        if parts.next().is_some() {
            return Err(parse_err(path, line_no, "edge line must be exactly `u v`"));
        }
        g.add_black_edge(u, v)
            .map_err(|e| parse_err(path, line_no, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(
            path,
            1,
            format!("header declares {m} edges but {seen} were listed"),
        ));
    }
    Ok(g)
}

/// Canonical text form: `n m` header, then sorted `u v` lines with u < v.
pub fn format_graph(g: &Trigraph) -> String {
    let n = g.vertices().last().map_or(g.vertex_count(), |max| {
        (max as usize + 1).max(g.vertex_count())
    });
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", n, g.edge_count());
    for (u, v, _) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_certificate(text: &str, path: &str) -> Result<ContractionSequence, FormatError> {
    let mut seq = ContractionSequence::default();
    for (line_no, line) in data_lines(text) {
        let mut parts = line.split_whitespace();
        let keep: VertexId = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(path, line_no, "bad keep vertex"))?;
        let drop: VertexId = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(path, line_no, "bad drop vertex"))?;
        if parts.next().is_some() {
            return Err(parse_err(
                path,
                line_no,
                "step line must be exactly `keep drop`",
            ));
        }
        seq.push(ContractionStep::new(keep, drop));
    }
    Ok(seq)
}

pub fn format_certificate(seq: &ContractionSequence) -> String {
    let mut out = String::new();
    for step in seq.iter() {
        let _ = writeln!(out, "{} {}", step.keep, step.drop);
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Trigraph, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&text, &path.display().to_string())
}

pub fn read_certificate(path: &Path) -> Result<ContractionSequence, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_certificate(&text, &path.display().to_string())
}

pub fn write_text(path: &Path, text: &str) -> Result<(), FormatError> {
    std::fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use twinwidth::generators::gnp;

    #[test]
    fn graph_round_trip() {
        let g = gnp(12, 0.4, 5).unwrap();
        let text = format_graph(&g);
        let back = parse_graph(&text, "mem").unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn comments_and_blanks_are_tolerated() {
        let text = "# a graph\n3 2\n\n0 1 # spine\n1 2\n";
        let g = parse_graph(text, "mem").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn bad_inputs_carry_line_context() {
        let err = parse_graph("2 1\n0 5\n", "g.el").unwrap_err();
        assert!(err.to_string().contains("g.el:2"), "{err}");
        let err = parse_graph("2 2\n0 1\n", "g.el").unwrap_err();
        assert!(err.to_string().contains("declares 2"), "{err}");
        let err = parse_graph("", "g.el").unwrap_err();
        assert!(err.to_string().contains("header"), "{err}");
    }

    #[test]
    fn certificate_round_trip() {
        let seq =
            ContractionSequence::new(vec![ContractionStep::new(0, 3), ContractionStep::new(1, 0)]);
        let text = format_certificate(&seq);
        assert_eq!(text, "0 3\n1 0\n");
        assert_eq!(parse_certificate(&text, "mem").unwrap(), seq);
    }
}
