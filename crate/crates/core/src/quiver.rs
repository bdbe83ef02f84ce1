//! Acyclic orientations of a valued graph, sink reflections, the vertex
//! poset with its filters and hulls, and the translation quiver
//! `ℕ(Γ, Λ^op)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::cartan::{ValuedGraph, Vertex};
use crate::error::ErrorCode;
use crate::weyl::check_permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("edge {{{i},{j}}} has no arrow")]
    UnorientedEdge { i: Vertex, j: Vertex },
    #[error("arrow {i}->{j} is not an edge of the graph")]
    UnknownEdge { i: Vertex, j: Vertex },
    #[error("edge {{{i},{j}}} is oriented more than once")]
    DuplicateArrow { i: Vertex, j: Vertex },
    #[error("orientation has an oriented cycle")]
    OrientedCycle,
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex set is not a filter")]
    NotAFilter,
    #[error("not a permutation of 1..={n}")]
    NotPermutation { n: usize },
}

impl ErrorCode for OrientationError {
    fn code(&self) -> &'static str {
        match self {
            OrientationError::UnorientedEdge { .. } => "UnorientedEdge",
            OrientationError::UnknownEdge { .. } => "UnknownEdge",
            OrientationError::DuplicateArrow { .. } => "DuplicateArrow",
            OrientationError::OrientedCycle => "OrientedCycle",
            OrientationError::VertexOutOfRange { .. } => "VertexOutOfRange",
            OrientationError::NotAFilter => "NotAFilter",
            OrientationError::NotPermutation { .. } => "NotPermutation",
        }
    }
}

/// An acyclic orientation `Λ` of a graph: one arrow per edge.
///
/// Only the underlying graph of the valued graph is kept; the valuation
/// plays no role in orientations, sinks or filters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    n: usize,
    /// `(tail, head)` for each edge, in the graph's sorted edge order.
    arrows: Vec<(Vertex, Vertex)>,
}

impl Orientation {
    /// Builds an orientation from arrows `i → j`, one per edge of `graph`.
    pub fn new(graph: &ValuedGraph, arrows: &[(Vertex, Vertex)]) -> Result<Self, OrientationError> {
        let n = graph.rank();
        let mut oriented: Vec<Option<(Vertex, Vertex)>> = vec![None; graph.edges().len()];
        for &(i, j) in arrows {
            for v in [i, j] {
                if v == 0 || v > n {
                    return Err(OrientationError::VertexOutOfRange { vertex: v, n });
                }
            }
            let key = (i.min(j), i.max(j));
            let slot = graph
                .edges()
                .binary_search(&key)
                .map_err(|_| OrientationError::UnknownEdge { i, j })?;
            if oriented[slot].is_some() {
                return Err(OrientationError::DuplicateArrow { i: key.0, j: key.1 });
            }
            oriented[slot] = Some((i, j));
        }
        let arrows = oriented
            .into_iter()
            .zip(graph.edges())
            .map(|(a, &(i, j))| a.ok_or(OrientationError::UnorientedEdge { i, j }))
            .collect::<Result<Vec<_>, _>>()?;
        let o = Orientation { n, arrows };
        if o.has_cycle() {
            return Err(OrientationError::OrientedCycle);
        }
        Ok(o)
    }

    /// The unique orientation making `v_1, …, v_n` a complete admissible
    /// sequence: each edge `{v_i, v_j}` with `i < j` points `v_j → v_i`.
    pub fn from_coxeter_order(
        graph: &ValuedGraph,
        perm: &[Vertex],
    ) -> Result<Self, OrientationError> {
        let n = graph.rank();
        check_permutation(perm, n).map_err(|_| OrientationError::NotPermutation { n })?;
        let mut position = vec![0; n + 1];
        for (k, &v) in perm.iter().enumerate() {
            position[v] = k;
        }
        let arrows: Vec<(Vertex, Vertex)> = graph
            .edges()
            .iter()
            .map(|&(i, j)| {
                if position[i] < position[j] {
                    (j, i)
                } else {
                    (i, j)
                }
            })
            .collect();
        Ok(Orientation { n, arrows })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// Arrows `(tail, head)` in sorted edge order.
    pub fn arrows(&self) -> &[(Vertex, Vertex)] {
        &self.arrows
    }

    pub fn adjacent(&self, i: Vertex, j: Vertex) -> bool {
        self.arrows
            .iter()
            .any(|&(s, t)| (s == i && t == j) || (s == j && t == i))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.arrows.iter().filter_map(move |&(s, t)| {
            if s == v {
                Some(t)
            } else if t == v {
                Some(s)
            } else {
                None
            }
        })
    }

    /// Heads of arrows starting at `v`.
    pub fn successors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.arrows
            .iter()
            .filter_map(move |&(s, t)| (s == v).then_some(t))
    }

    /// Tails of arrows ending at `v`.
    pub fn predecessors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.arrows
            .iter()
            .filter_map(move |&(s, t)| (t == v).then_some(s))
    }

    /// No arrow starts at `x`.
    pub fn is_sink(&self, x: Vertex) -> bool {
        self.successors(x).next().is_none()
    }

    /// No arrow ends at `x`.
    pub fn is_source(&self, x: Vertex) -> bool {
        self.predecessors(x).next().is_none()
    }

    pub fn sinks(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|&x| self.is_sink(x))
    }

    /// `σ_x Λ`: reverses every arrow at `x`. At a sink or a source this is
    /// always acyclic; elsewhere the result is re-checked.
    pub fn reflect(&self, x: Vertex) -> Result<Orientation, OrientationError> {
        if x == 0 || x > self.n {
            return Err(OrientationError::VertexOutOfRange {
                vertex: x,
                n: self.n,
            });
        }
        let flipped = self.flip(x);
        if !(self.is_sink(x) || self.is_source(x)) && flipped.has_cycle() {
            return Err(OrientationError::OrientedCycle);
        }
        Ok(flipped)
    }

    /// Reflection with no acyclicity check; callers guarantee `x` is a sink
    /// or a source.
    pub(crate) fn flip(&self, x: Vertex) -> Orientation {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == x || t == x { (t, s) } else { (s, t) })
            .collect();
        Orientation { n: self.n, arrows }
    }

    fn has_cycle(&self) -> bool {
        self.topological_order().is_none()
    }

    /// Vertices ordered so that every arrow goes from an earlier to a later
    /// vertex, choosing the least available index at each step.
    pub fn topological_order(&self) -> Option<Vec<Vertex>> {
        let mut indegree = vec![0usize; self.n + 1];
        for &(_, t) in &self.arrows {
            indegree[t] += 1;
        }
        let mut ready: BTreeSet<Vertex> = self.vertices().filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for t in self.successors(v) {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready.insert(t);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    /// The path order on vertices: `x ≤ y` iff there is a path `x → ⋯ → y`.
    pub fn poset(&self) -> VertexPoset {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for x in 1..=n {
            let mut queue = VecDeque::from([x]);
            leq[(x - 1) * n + (x - 1)] = true;
            while let Some(v) = queue.pop_front() {
                for t in self.successors(v) {
                    let slot = &mut leq[(x - 1) * n + (t - 1)];
                    if !*slot {
                        *slot = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        VertexPoset { n, leq }
    }

    /// `⟨X⟩`, the upward closure of `X` in the path order.
    pub fn filter_generated<I: IntoIterator<Item = Vertex>>(&self, generators: I) -> Filter {
        let mut set = BTreeSet::new();
        let mut queue: VecDeque<Vertex> = generators.into_iter().collect();
        while let Some(v) = queue.pop_front() {
            if set.insert(v) {
                queue.extend(self.successors(v));
            }
        }
        Filter(set)
    }

    pub fn is_filter(&self, set: &BTreeSet<Vertex>) -> bool {
        set.iter()
            .all(|&v| self.successors(v).all(|t| set.contains(&t)))
    }

    /// `H_Λ(F)`: the smallest filter containing `F` and every vertex outside
    /// `F` joined by an edge to a vertex of `F`.
    pub fn hull(&self, filter: &Filter) -> Result<Filter, OrientationError> {
        if !self.is_filter(&filter.0) {
            return Err(OrientationError::NotAFilter);
        }
        let grown = filter
            .0
            .iter()
            .flat_map(|&v| std::iter::once(v).chain(self.neighbors(v)));
        Ok(self.filter_generated(grown.collect::<Vec<_>>()))
    }

    /// Whether `to` can be reached from `from` in `ℕ(Γ, Λ^op)`.
    ///
    /// Each arrow `u → v` of `Λ` contributes `(m, v) → (m, u)` and
    /// `(m, u) → (m + 1, v)`. Levels never decrease, so the search is
    /// confined to levels `≤ to.level`.
    pub fn tq_reachable(&self, from: TqVertex, to: TqVertex) -> bool {
        if from.level > to.level {
            return false;
        }
        let width = self.n;
        let levels = to.level - from.level + 1;
        let index = |q: TqVertex| (q.level - from.level) * width + (q.vertex - 1);
        let mut seen = vec![false; levels * width];
        let mut queue = VecDeque::from([from]);
        seen[index(from)] = true;
        while let Some(q) = queue.pop_front() {
            if q == to {
                return true;
            }
            for next in self.tq_successors(q) {
                if next.level <= to.level && !seen[index(next)] {
                    seen[index(next)] = true;
                    queue.push_back(next);
                }
            }
        }
        false
    }

    /// Immediate successors of `q` in `ℕ(Γ, Λ^op)`.
    pub fn tq_successors(&self, q: TqVertex) -> Vec<TqVertex> {
        let same_level = self
            .predecessors(q.vertex)
            .map(|u| TqVertex::new(q.level, u));
        let next_level = self
            .successors(q.vertex)
            .map(|v| TqVertex::new(q.level + 1, v));
        same_level.chain(next_level).collect()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, t)) in self.arrows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "arrow {s} {t}")?;
        }
        Ok(())
    }
}

/// `(Γ_0, ≤)` with `x ≤ y` iff a directed path runs from `x` to `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPoset {
    n: usize,
    leq: Vec<bool>,
}

impl VertexPoset {
    pub fn leq(&self, x: Vertex, y: Vertex) -> bool {
        self.leq[(x - 1) * self.n + (y - 1)]
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `⟨X⟩` computed from the order relation.
    pub fn filter_generated<I: IntoIterator<Item = Vertex>>(&self, generators: I) -> Filter {
        let gens: Vec<Vertex> = generators.into_iter().collect();
        Filter(
            (1..=self.n)
                .filter(|&y| gens.iter().any(|&x| self.leq(x, y)))
                .collect(),
        )
    }
}

/// An up-closed set of vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter(BTreeSet<Vertex>);

impl Filter {
    /// Checks that `set` is up-closed under `o`'s path order.
    pub fn new(o: &Orientation, set: BTreeSet<Vertex>) -> Result<Self, OrientationError> {
        if o.is_filter(&set) {
            Ok(Filter(set))
        } else {
            Err(OrientationError::NotAFilter)
        }
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Filter) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn into_set(self) -> BTreeSet<Vertex> {
        self.0
    }
}

/// A vertex `(level, vertex)` of `ℕ(Γ, Λ^op)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TqVertex {
    pub level: usize,
    pub vertex: Vertex,
}

impl TqVertex {
    pub fn new(level: usize, vertex: Vertex) -> Self {
        TqVertex { level, vertex }
    }
}

impl fmt::Display for TqVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.vertex)
    }
}
