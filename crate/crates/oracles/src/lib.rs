//! Brute-force reference implementations for cross-checking `valquiver`.
//!
//! Everything here is exponential in the input size and meant for
//! desk-scale inputs only. None of it calls the algorithms it checks.
//! Lengths come from breadth-first search over the Cayley graph, and
//! sequence equivalence from closing under commutation moves.

pub mod catalog;

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use valquiver::{AdmissibleSequence, CartanMatrix, IntMatrix, Orientation, RootVector, Vertex};

/// Whether the breadth-first search closed up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    Finite { order: usize },
    Truncated,
}

/// Exact lengths of every element reached by the search.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    pub lengths: HashMap<IntMatrix, usize>,
    pub closure: Closure,
}

impl CayleyTable {
    pub fn length_of(&self, m: &IntMatrix) -> Option<usize> {
        self.lengths.get(m).copied()
    }

    pub fn max_length(&self) -> usize {
        self.lengths.values().copied().max().unwrap_or(0)
    }

    /// Largest length up to which the table is complete. Levels are always
    /// finished whole, so this is the largest recorded length.
    pub fn complete_radius(&self) -> usize {
        self.max_length()
    }
}

/// `σ_i` built straight from the Cartan entries.
pub fn reflection_matrix(a: &CartanMatrix, i: Vertex) -> IntMatrix {
    let n = a.rank();
    let mut m = IntMatrix::identity(n);
    for j in 1..=n {
        m[(i - 1, j - 1)] -= a.entry(i, j);
    }
    m
}

/// BFS from the identity over right multiplication by simple reflections,
/// exploring at most `cap` elements. Levels are finished whole, so every
/// recorded length is exact.
pub fn bfs_lengths(a: &CartanMatrix, cap: usize) -> CayleyTable {
    bfs(a, |size, _| size > cap)
}

/// Every element of length at most `radius`, with its length.
pub fn bfs_ball(a: &CartanMatrix, radius: usize) -> CayleyTable {
    bfs(a, |_, depth| depth >= radius)
}

fn bfs(a: &CartanMatrix, stop: impl Fn(usize, usize) -> bool) -> CayleyTable {
    let n = a.rank();
    let gens: Vec<IntMatrix> = (1..=n).map(|i| reflection_matrix(a, i)).collect();
    let mut lengths = HashMap::new();
    let identity = IntMatrix::identity(n);
    lengths.insert(identity.clone(), 0);
    let mut frontier = vec![identity];
    let mut depth = 0;
    while !frontier.is_empty() {
        if stop(lengths.len(), depth) {
            return CayleyTable {
                lengths,
                closure: Closure::Truncated,
            };
        }
        let mut next = Vec::new();
        for m in &frontier {
            for g in &gens {
                let Ok(p) = m.checked_mul(g) else {
                    return CayleyTable {
                        lengths,
                        closure: Closure::Truncated,
                    };
                };
                if !lengths.contains_key(&p) {
                    lengths.insert(p.clone(), depth + 1);
                    next.push(p);
                }
            }
        }
        depth += 1;
        frontier = next;
    }
    let order = lengths.len();
    CayleyTable {
        lengths,
        closure: Closure::Finite { order },
    }
}

/// The group closed within `cap` elements, or `None`.
pub fn bfs_closure(a: &CartanMatrix, cap: usize) -> Option<CayleyTable> {
    let table = bfs_lengths(a, cap);
    matches!(table.closure, Closure::Finite { .. }).then_some(table)
}

/// Element of a word computed by plain matrix products (`x_1` first).
pub fn word_matrix(a: &CartanMatrix, letters: &[Vertex]) -> IntMatrix {
    letters
        .iter()
        .fold(IntMatrix::identity(a.rank()), |acc, &x| {
            reflection_matrix(a, x)
                .checked_mul(&acc)
                .expect("oracle inputs stay small")
        })
}

/// Every admissible sequence of length at most `max_len`, depth first,
/// branching on the sinks of the running orientation.
pub fn enumerate_admissible(base: &Arc<Orientation>, max_len: usize) -> Vec<AdmissibleSequence> {
    fn go(
        base: &Arc<Orientation>,
        current: &Orientation,
        prefix: &mut Vec<Vertex>,
        max_len: usize,
        out: &mut Vec<AdmissibleSequence>,
    ) {
        out.push(
            AdmissibleSequence::new(Arc::clone(base), prefix.clone()).expect("built from sinks"),
        );
        if prefix.len() == max_len {
            return;
        }
        for x in current.sinks().collect::<Vec<_>>() {
            let next = current.reflect(x).expect("reflection at a sink");
            prefix.push(x);
            go(base, &next, prefix, max_len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(base, base, &mut Vec::new(), max_len, &mut out);
    out
}

/// The full `~`-class of `letters`: closure under swapping adjacent
/// letters that are not joined by an edge.
pub fn equivalence_closure(base: &Orientation, letters: &[Vertex]) -> BTreeSet<Vec<Vertex>> {
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut queue = VecDeque::from([letters.to_vec()]);
    seen.insert(letters.to_vec());
    while let Some(s) = queue.pop_front() {
        for i in 0..s.len().saturating_sub(1) {
            if s[i] != s[i + 1] && !base.adjacent(s[i], s[i + 1]) {
                let mut t = s.clone();
                t.swap(i, i + 1);
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
    }
    seen
}

/// Positive roots of a finite-type Cartan matrix: the orbit of the simple
/// roots under `W`, keeping the positive ones. `None` if the orbit exceeds
/// `cap` vectors.
pub fn positive_roots(a: &CartanMatrix, cap: usize) -> Option<BTreeSet<RootVector>> {
    let n = a.rank();
    let reflect = |i: Vertex, v: &[i64]| -> Vec<i64> {
        let pairing: i64 = (1..=n).map(|j| a.entry(i, j) * v[j - 1]).sum();
        let mut out = v.to_vec();
        out[i - 1] -= pairing;
        out
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for v in 1..=n {
        let e = RootVector::simple(n, v).coords().to_vec();
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        if seen.len() > cap {
            return None;
        }
        for i in 1..=n {
            let w = reflect(i, &v);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Some(
        seen.into_iter()
            .filter(|v| v.iter().all(|&x| x >= 0))
            .map(RootVector::new)
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use valquiver::{EdgeSpec, ValuedGraph};

    fn rank2(b12: u32, b21: u32) -> CartanMatrix {
        ValuedGraph::new(2, &[EdgeSpec::new(1, 2, b12, b21)])
            .unwrap()
            .cartan_matrix()
    }

    fn oriented(n: usize, edges: &[EdgeSpec], arrows: &[(Vertex, Vertex)]) -> Arc<Orientation> {
        let g = ValuedGraph::new(n, edges).unwrap();
        Arc::new(Orientation::new(&g, arrows).unwrap())
    }

    #[test]
    fn dihedral_orders() {
        let a2 = bfs_lengths(&rank2(1, 1), 1000);
        assert_eq!(a2.closure, Closure::Finite { order: 6 });
        assert_eq!(a2.max_length(), 3);
        let b2 = bfs_lengths(&rank2(2, 1), 1000);
        assert_eq!(b2.closure, Closure::Finite { order: 8 });
        assert_eq!(b2.max_length(), 4);
        let g2 = bfs_lengths(&rank2(3, 1), 1000);
        assert_eq!(g2.closure, Closure::Finite { order: 12 });
        assert_eq!(bfs_lengths(&rank2(2, 2), 100).closure, Closure::Truncated);
        assert!(bfs_closure(&rank2(2, 2), 100).is_none());
    }

    #[test]
    fn truncated_tables_keep_exact_lengths() {
        let t = bfs_lengths(&rank2(2, 2), 20);
        // Infinite dihedral: two elements of each positive length.
        for len in 1..=t.complete_radius() {
            assert_eq!(t.lengths.values().filter(|&&l| l == len).count(), 2);
        }
    }

    #[test]
    fn admissible_enumeration() {
        let k = oriented(2, &[EdgeSpec::new(1, 2, 2, 2)], &[(1, 2)]);
        let all: Vec<Vec<Vertex>> = enumerate_admissible(&k, 2)
            .iter()
            .map(|s| s.letters().to_vec())
            .collect();
        assert_eq!(all, vec![vec![], vec![2], vec![2, 1]]);

        let source2 = oriented(
            3,
            &[EdgeSpec::simple(1, 2), EdgeSpec::simple(2, 3)],
            &[(2, 1), (2, 3)],
        );
        let all: Vec<Vec<Vertex>> = enumerate_admissible(&source2, 1)
            .iter()
            .map(|s| s.letters().to_vec())
            .collect();
        assert_eq!(all, vec![vec![], vec![1], vec![3]]);
        assert_eq!(enumerate_admissible(&source2, 0).len(), 1);
    }

    #[test]
    fn closures() {
        let source2 = oriented(
            3,
            &[EdgeSpec::simple(1, 2), EdgeSpec::simple(2, 3)],
            &[(2, 1), (2, 3)],
        );
        assert_eq!(
            equivalence_closure(&source2, &[1, 3]),
            BTreeSet::from([vec![1, 3], vec![3, 1]])
        );
        let k = oriented(2, &[EdgeSpec::new(1, 2, 2, 2)], &[(1, 2)]);
        assert_eq!(
            equivalence_closure(&k, &[2, 1]),
            BTreeSet::from([vec![2, 1]])
        );
        assert_eq!(equivalence_closure(&k, &[]), BTreeSet::from([vec![]]));
    }

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(&rank2(1, 1), 1000).unwrap().len(), 3);
        assert_eq!(positive_roots(&rank2(2, 1), 1000).unwrap().len(), 4);
        assert_eq!(positive_roots(&rank2(3, 1), 1000).unwrap().len(), 6);
        assert!(positive_roots(&rank2(2, 2), 1000).is_none());
    }

    #[test]
    fn balls() {
        let t = bfs_ball(&rank2(2, 2), 5);
        assert_eq!(t.closure, Closure::Truncated);
        assert_eq!(t.lengths.len(), 11);
        assert_eq!(
            bfs_ball(&rank2(1, 1), 10).closure,
            Closure::Finite { order: 6 }
        );
    }
}
