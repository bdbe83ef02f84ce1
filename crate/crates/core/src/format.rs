//! The plain-text quiver file format.
//!
//! ```text
//! # comments start with '#'
//! n 2
//! edge 1 2 2 2
//! arrow 1 2
//! ```
//!
//! `n` must be the first non-comment line. `edge i j b_ij b_ji` declares a
//! valued edge and `arrow i j` orients the edge `{i, j}` as `i → j`.

use std::str::FromStr;

use thiserror::Error;

use crate::cartan::{EdgeSpec, GraphError, ValuedGraph, Vertex};
use crate::error::ErrorCode;
use crate::quiver::{Orientation, OrientationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `n <count>` line")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

impl ErrorCode for FormatError {
    fn code(&self) -> &'static str {
        match self {
            FormatError::Syntax { .. } => "Syntax",
            FormatError::MissingHeader => "MissingHeader",
            FormatError::Graph(e) => e.code(),
            FormatError::Orientation(e) => e.code(),
        }
    }
}

/// A parsed quiver file: a validated valued graph plus the raw arrow lines,
/// which are only validated when an orientation is asked for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverFile {
    pub graph: ValuedGraph,
    pub arrows: Vec<(Vertex, Vertex)>,
}

impl QuiverFile {
    pub fn orientation(&self) -> Result<Orientation, OrientationError> {
        Orientation::new(&self.graph, &self.arrows)
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn numbers<T: FromStr>(
    line: usize,
    fields: &[&str],
    expected: usize,
) -> Result<Vec<T>, FormatError> {
    if fields.len() != expected {
        return Err(syntax(
            line,
            format!("expected {expected} numbers, found {}", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<T>()
                .map_err(|_| syntax(line, format!("not a nonnegative integer: `{f}`")))
        })
        .collect()
}

impl FromStr for QuiverFile {
    type Err = FormatError;

    fn from_str(text: &str) -> Result<Self, FormatError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut arrows = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (keyword, rest) = fields.split_first().expect("nonempty line");
            match (*keyword, n) {
                ("n", None) => n = Some(numbers::<usize>(line_no, rest, 1)?[0]),
                ("n", Some(_)) => return Err(syntax(line_no, "duplicate `n` line")),
                (_, None) => return Err(FormatError::MissingHeader),
                ("edge", Some(_)) => {
                    let v = numbers::<u32>(line_no, rest, 4)?;
                    edges.push(EdgeSpec::new(v[0] as Vertex, v[1] as Vertex, v[2], v[3]));
                }
                ("arrow", Some(_)) => {
                    let v = numbers::<usize>(line_no, rest, 2)?;
                    arrows.push((v[0], v[1]));
                }
                (other, Some(_)) => {
                    return Err(syntax(line_no, format!("unknown keyword `{other}`")))
                }
            }
        }
        let n = n.ok_or(FormatError::MissingHeader)?;
        let graph = ValuedGraph::new(n, &edges)?;
        Ok(QuiverFile { graph, arrows })
    }
}

/// Renders a graph and orientation back into the file format.
pub fn render(graph: &ValuedGraph, orientation: Option<&Orientation>) -> String {
    let mut out = format!("n {}\n", graph.rank());
    for &(i, j) in graph.edges() {
        out.push_str(&format!(
            "edge {i} {j} {} {}\n",
            graph.valuation(i, j),
            graph.valuation(j, i)
        ));
    }
    if let Some(o) = orientation {
        for &(s, t) in o.arrows() {
            out.push_str(&format!("arrow {s} {t}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_kronecker() {
        let text = "# Kronecker\nn 2\nedge 1 2 2 2  # double edge\narrow 1 2\n";
        let q: QuiverFile = text.parse().unwrap();
        assert_eq!(q.graph.rank(), 2);
        assert_eq!(q.graph.valuation(1, 2), 2);
        assert!(q.orientation().unwrap().is_sink(2));
        assert_eq!(
            render(&q.graph, Some(&q.orientation().unwrap())),
            "n 2\nedge 1 2 2 2\narrow 1 2\n"
        );
    }

    #[test]
    fn reports_errors() {
        assert_eq!(
            "edge 1 2 1 1".parse::<QuiverFile>().unwrap_err(),
            FormatError::MissingHeader
        );
        assert_eq!(
            "".parse::<QuiverFile>().unwrap_err(),
            FormatError::MissingHeader
        );
        assert!(matches!(
            "n 2\nedge 1 2 x 1".parse::<QuiverFile>(),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            "n 2\nedge 1 2 1".parse::<QuiverFile>(),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            "n 2\nvertex 1".parse::<QuiverFile>(),
            Err(FormatError::Syntax { line: 2, .. })
        ));
        let err = "n 2\nedge 1 2 2 0".parse::<QuiverFile>().unwrap_err();
        assert_eq!(err.code(), "AsymmetricZero");
        let q: QuiverFile = "n 3\nedge 1 2 1 1\nedge 2 3 1 1\narrow 1 2"
            .parse()
            .unwrap();
        assert_eq!(q.orientation().unwrap_err().code(), "UnorientedEdge");
    }
}
