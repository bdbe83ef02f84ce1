//! Valued graphs, symmetrizers and generalized Cartan matrices.
//!
//! Vertices are numbered `1..=n` throughout the public API.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::error::{ErrorCode, Overflow};
use crate::matrix::IntMatrix;

/// A vertex of a valued graph, numbered from 1.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a valued graph needs at least two vertices, got {n}")]
    RankOne { n: usize },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {vertex}")]
    LoopEdge { vertex: Vertex },
    #[error("edge {{{i},{j}}} listed more than once")]
    DuplicateEdge { i: Vertex, j: Vertex },
    #[error("edge {{{i},{j}}} has zero valuation in both directions")]
    ZeroEdge { i: Vertex, j: Vertex },
    #[error("edge {{{i},{j}}} has exactly one zero valuation")]
    AsymmetricZero { i: Vertex, j: Vertex },
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("no symmetrizer: d_i b_ij = d_j b_ji fails on edge {{{i},{j}}}")]
    NoSymmetrizer { i: Vertex, j: Vertex },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

impl ErrorCode for GraphError {
    fn code(&self) -> &'static str {
        match self {
            GraphError::RankOne { .. } => "RankOne",
            GraphError::VertexOutOfRange { .. } => "VertexOutOfRange",
            GraphError::LoopEdge { .. } => "LoopEdge",
            GraphError::DuplicateEdge { .. } => "DuplicateEdge",
            GraphError::ZeroEdge { .. } => "ZeroEdge",
            GraphError::AsymmetricZero { .. } => "AsymmetricZero",
            GraphError::Disconnected => "Disconnected",
            GraphError::NoSymmetrizer { .. } => "NoSymmetrizer",
            GraphError::Overflow(_) => "Overflow",
        }
    }
}

/// One edge `{i, j}` with its two valuations `b_ij` and `b_ji`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSpec {
    pub i: Vertex,
    pub j: Vertex,
    pub b_ij: u32,
    pub b_ji: u32,
}

impl EdgeSpec {
    pub fn new(i: Vertex, j: Vertex, b_ij: u32, b_ji: u32) -> Self {
        EdgeSpec { i, j, b_ij, b_ji }
    }

    /// An edge with valuation 1 in both directions.
    pub fn simple(i: Vertex, j: Vertex) -> Self {
        EdgeSpec::new(i, j, 1, 1)
    }
}

/// Positive integers `d_1..d_n`, gcd 1, with `d_i b_ij = d_j b_ji`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Symmetrizer(Vec<u64>);

impl Symmetrizer {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, v: Vertex) -> u64 {
        self.0[v - 1]
    }
}

impl fmt::Display for Symmetrizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A connected valued graph `(Γ, b)` admitting a symmetrizer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedGraph {
    n: usize,
    /// `b[(i-1) * n + (j-1)] = b_ij`.
    valuation: Vec<u32>,
    /// Undirected edges `(i, j)` with `i < j`, sorted.
    edges: Vec<(Vertex, Vertex)>,
    symmetrizer: Symmetrizer,
}

impl ValuedGraph {
    /// Validates raw edge data and builds the graph.
    pub fn new(n: usize, edges: &[EdgeSpec]) -> Result<Self, GraphError> {
        if n <= 1 {
            return Err(GraphError::RankOne { n });
        }
        let mut valuation = vec![0u32; n * n];
        let mut edge_list = Vec::with_capacity(edges.len());
        for e in edges {
            for v in [e.i, e.j] {
                if v == 0 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if e.i == e.j {
                return Err(GraphError::LoopEdge { vertex: e.i });
            }
            let (lo, hi) = (e.i.min(e.j), e.i.max(e.j));
            if edge_list.contains(&(lo, hi)) {
                return Err(GraphError::DuplicateEdge { i: lo, j: hi });
            }
            match (e.b_ij, e.b_ji) {
                (0, 0) => return Err(GraphError::ZeroEdge { i: e.i, j: e.j }),
                (0, _) | (_, 0) => return Err(GraphError::AsymmetricZero { i: e.i, j: e.j }),
                _ => {}
            }
            valuation[(e.i - 1) * n + (e.j - 1)] = e.b_ij;
            valuation[(e.j - 1) * n + (e.i - 1)] = e.b_ji;
            edge_list.push((lo, hi));
        }
        edge_list.sort_unstable();
        if !is_connected(n, &edge_list) {
            return Err(GraphError::Disconnected);
        }
        let symmetrizer = compute_symmetrizer(n, &valuation)?;
        Ok(ValuedGraph {
            n,
            valuation,
            edges: edge_list,
            symmetrizer,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// `b_ij`; zero when `i` and `j` are not adjacent.
    pub fn valuation(&self, i: Vertex, j: Vertex) -> u32 {
        self.valuation[(i - 1) * self.n + (j - 1)]
    }

    /// Sorted undirected edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn adjacent(&self, i: Vertex, j: Vertex) -> bool {
        i != j && self.valuation(i, j) != 0
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(move |&u| self.adjacent(v, u))
    }

    pub fn symmetrizer(&self) -> &Symmetrizer {
        &self.symmetrizer
    }

    /// `a_ii = 2`, `a_ij = -b_ij`.
    pub fn cartan_matrix(&self) -> CartanMatrix {
        let n = self.n;
        let mut a = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = if i == j {
                    2
                } else {
                    -i64::from(self.valuation[i * n + j])
                };
            }
        }
        CartanMatrix { matrix: a }
    }

    /// Finite (Dynkin) type iff `D·A` is positive definite, where
    /// `D = diag(d_i)`; decided on leading principal minors.
    pub fn is_finite_type(&self) -> Result<bool, Overflow> {
        let a = self.cartan_matrix();
        let mut sym = IntMatrix::zero(self.n);
        for i in 0..self.n {
            let d = i64::try_from(self.symmetrizer.0[i]).map_err(|_| Overflow)?;
            for j in 0..self.n {
                sym[(i, j)] = d.checked_mul(a.matrix[(i, j)]).ok_or(Overflow)?;
            }
        }
        debug_assert!(sym.is_symmetric());
        Ok(sym.leading_minors()?.iter().all(|&m| m > 0))
    }
}

fn is_connected(n: usize, edges: &[(Vertex, Vertex)]) -> bool {
    let mut seen = vec![false; n + 1];
    let mut queue = VecDeque::from([1]);
    seen[1] = true;
    while let Some(v) = queue.pop_front() {
        for &(a, b) in edges {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                queue.push_back(other);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// Spanning-tree propagation of `d_j = d_i b_ij / b_ji` over the rationals,
/// followed by clearing denominators and dividing out the gcd. Every
/// non-tree edge is then checked for consistency.
///
/// `valuation` is the row-major `n × n` table of `b_ij`; the graph must be
/// connected with a symmetric zero pattern.
#[allow(clippy::needless_range_loop)]
pub fn compute_symmetrizer(n: usize, valuation: &[u32]) -> Result<Symmetrizer, GraphError> {
    let b = |i: usize, j: usize| u128::from(valuation[i * n + j]);
    // (numerator, denominator), both reduced.
    let mut ratio: Vec<Option<(u128, u128)>> = vec![None; n];
    ratio[0] = Some((1, 1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (num, den) = ratio[i].expect("queued vertices have a ratio");
        for j in 0..n {
            if i == j || b(i, j) == 0 || ratio[j].is_some() {
                continue;
            }
            let p = num.checked_mul(b(i, j)).ok_or(Overflow)?;
            let q = den.checked_mul(b(j, i)).ok_or(Overflow)?;
            let g = p.gcd(&q);
            ratio[j] = Some((p / g, q / g));
            queue.push_back(j);
        }
    }
    let ratio: Vec<(u128, u128)> = ratio
        .into_iter()
        .map(|r| r.ok_or(GraphError::Disconnected))
        .collect::<Result<_, _>>()?;
    let lcm = ratio.iter().fold(1u128, |acc, &(_, den)| acc.lcm(&den));
    let mut d: Vec<u128> = ratio.iter().map(|&(num, den)| num * (lcm / den)).collect();
    let g = d.iter().fold(0u128, |acc, &x| acc.gcd(&x));
    for x in &mut d {
        *x /= g;
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = d[i].checked_mul(b(i, j)).ok_or(Overflow)?;
            let rhs = d[j].checked_mul(b(j, i)).ok_or(Overflow)?;
            if lhs != rhs {
                return Err(GraphError::NoSymmetrizer {
                    i: i.min(j) + 1,
                    j: i.max(j) + 1,
                });
            }
        }
    }
    let d = d
        .into_iter()
        .map(|x| u64::try_from(x).map_err(|_| GraphError::Overflow(Overflow)))
        .collect::<Result<_, _>>()?;
    Ok(Symmetrizer(d))
}

/// An indecomposable symmetrizable generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    matrix: IntMatrix,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.dim()
    }

    /// `a_ij` for 1-based vertices.
    pub fn entry(&self, i: Vertex, j: Vertex) -> i64 {
        self.matrix[(i - 1, j - 1)]
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.matrix
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank2(b12: u32, b21: u32) -> Result<ValuedGraph, GraphError> {
        ValuedGraph::new(2, &[EdgeSpec::new(1, 2, b12, b21)])
    }

    #[test]
    fn validates_small_graphs() {
        assert!(rank2(1, 1).is_ok());
        assert_eq!(rank2(2, 1).unwrap().symmetrizer().values(), &[1, 2]);
        assert_eq!(
            rank2(2, 0).unwrap_err(),
            GraphError::AsymmetricZero { i: 1, j: 2 }
        );
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert_eq!(
            ValuedGraph::new(1, &[]).unwrap_err(),
            GraphError::RankOne { n: 1 }
        );
        assert_eq!(
            ValuedGraph::new(3, &[EdgeSpec::simple(1, 2)]).unwrap_err(),
            GraphError::Disconnected
        );
        assert_eq!(
            ValuedGraph::new(2, &[EdgeSpec::simple(2, 2)]).unwrap_err(),
            GraphError::LoopEdge { vertex: 2 }
        );
        assert_eq!(
            ValuedGraph::new(2, &[EdgeSpec::simple(1, 2), EdgeSpec::simple(2, 1)]).unwrap_err(),
            GraphError::DuplicateEdge { i: 1, j: 2 }
        );
        assert_eq!(
            ValuedGraph::new(2, &[EdgeSpec::simple(1, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, n: 2 }
        );
        // Triangle whose ratios around the cycle multiply to 2.
        let bad = ValuedGraph::new(
            3,
            &[
                EdgeSpec::new(1, 2, 2, 1),
                EdgeSpec::simple(2, 3),
                EdgeSpec::simple(1, 3),
            ],
        );
        assert!(matches!(bad, Err(GraphError::NoSymmetrizer { .. })));
    }

    #[test]
    fn symmetrizers() {
        assert_eq!(rank2(1, 1).unwrap().symmetrizer().values(), &[1, 1]);
        assert_eq!(rank2(2, 1).unwrap().symmetrizer().values(), &[1, 2]);
        assert_eq!(rank2(3, 1).unwrap().symmetrizer().values(), &[1, 3]);
        assert_eq!(rank2(2, 3).unwrap().symmetrizer().values(), &[3, 2]);
        // C~2: 1 =(2,1)= 2 =(1,2)= 3
        let g =
            ValuedGraph::new(3, &[EdgeSpec::new(1, 2, 2, 1), EdgeSpec::new(2, 3, 1, 2)]).unwrap();
        assert_eq!(g.symmetrizer().values(), &[1, 2, 1]);
    }

    #[test]
    fn cartan_matrices() {
        let a2 = rank2(1, 1).unwrap().cartan_matrix();
        assert_eq!(
            a2.as_matrix(),
            &IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]])
        );
        let kronecker = rank2(2, 2).unwrap().cartan_matrix();
        assert_eq!(
            kronecker.as_matrix(),
            &IntMatrix::from_rows(&[vec![2, -2], vec![-2, 2]])
        );
        let b2 = rank2(2, 1).unwrap().cartan_matrix();
        assert_eq!(
            b2.as_matrix(),
            &IntMatrix::from_rows(&[vec![2, -2], vec![-1, 2]])
        );
        assert_eq!(b2.entry(1, 2), -2);
    }

    #[test]
    fn finite_type() {
        assert!(rank2(1, 1).unwrap().is_finite_type().unwrap());
        assert!(!rank2(2, 2).unwrap().is_finite_type().unwrap());
        assert!(rank2(2, 1).unwrap().is_finite_type().unwrap());
        assert!(rank2(3, 1).unwrap().is_finite_type().unwrap());
        assert!(!rank2(4, 1).unwrap().is_finite_type().unwrap());
    }
}
