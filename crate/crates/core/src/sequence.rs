//! (+)-admissible sequences on an acyclic orientation.
//!
//! A sequence `x_1, …, x_s` is admissible on `Λ` when `x_1` is a sink of `Λ`
//! and each `x_{k+1}` is a sink of `σ_{x_k} ⋯ σ_{x_1} Λ`. Two admissible
//! sequences on the same base are equivalent exactly when their
//! multiplicity vectors agree, and `S ⪯ T` exactly when `m_S ≤ m_T`
//! pointwise, so the lattice operations reduce to pointwise `min`/`max`
//! followed by materializing a representative in canonical form.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::cartan::Vertex;
use crate::error::ErrorCode;
use crate::quiver::{Filter, Orientation};
use crate::weyl::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("letter {vertex} at position {position} is not a sink")]
    NotASink { position: usize, vertex: Vertex },
    #[error("letter {vertex} at position {position} is outside 1..={n}")]
    VertexOutOfRange {
        position: usize,
        vertex: Vertex,
        n: usize,
    },
    #[error("sequences live on different base orientations")]
    DifferentBase,
    #[error("operation needs a nonempty sequence")]
    EmptySequence,
    #[error("no sink available while building block {block}")]
    Stuck { block: usize },
    #[error("principal sequence needs r >= 1 and a vertex in 1..={n}")]
    InvalidPrincipalId { n: usize },
}

impl ErrorCode for SequenceError {
    fn code(&self) -> &'static str {
        match self {
            SequenceError::NotASink { .. } => "NotASink",
            SequenceError::VertexOutOfRange { .. } => "VertexOutOfRange",
            SequenceError::DifferentBase => "DifferentBase",
            SequenceError::EmptySequence => "EmptySequence",
            SequenceError::Stuck { .. } => "Stuck",
            SequenceError::InvalidPrincipalId { .. } => "InvalidPrincipalId",
        }
    }
}

/// Occurrence counts `m_S(v)` for `v = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicityVector(Vec<u32>);

impl MultiplicityVector {
    pub fn new(counts: Vec<u32>) -> Self {
        MultiplicityVector(counts)
    }

    pub fn zero(n: usize) -> Self {
        MultiplicityVector(vec![0; n])
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.0[v - 1]
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    /// `Σ m(v)`, the length of any sequence with these multiplicities.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    /// Largest multiplicity, the size of the canonical form.
    pub fn max_count(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn support(&self) -> BTreeSet<Vertex> {
        self.at_least(1)
    }

    /// `{v : m(v) ≥ k}`.
    pub fn at_least(&self, k: u32) -> BTreeSet<Vertex> {
        self.0
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= k)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Pointwise `≤`.
    pub fn leq(&self, other: &MultiplicityVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn pointwise_min(&self, other: &MultiplicityVector) -> MultiplicityVector {
        MultiplicityVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn pointwise_max(&self, other: &MultiplicityVector) -> MultiplicityVector {
        MultiplicityVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Names the principal sequence `S_{r,x}`: size `r`, last block supported
/// on the principal filter `⟨x⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrincipalSequenceId {
    pub r: usize,
    pub x: Vertex,
}

impl PrincipalSequenceId {
    pub fn new(r: usize, x: Vertex) -> Self {
        PrincipalSequenceId { r, x }
    }
}

impl fmt::Display for PrincipalSequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.r, self.x)
    }
}

/// Canonical form `S_1 ⋯ S_r`: blocks of distinct vertices with nested
/// supports `Supp S_i = {v : m(v) ≥ i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    blocks: Vec<Vec<Vertex>>,
}

impl CanonicalForm {
    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn supports(&self) -> Vec<BTreeSet<Vertex>> {
        self.blocks
            .iter()
            .map(|b| b.iter().copied().collect())
            .collect()
    }

    pub fn letters(&self) -> Vec<Vertex> {
        self.blocks.concat()
    }
}

/// Blocks separated by `|`, e.g. `2 1 | 2`.
impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", blocks.join(" | "))
    }
}

/// A validated (+)-admissible sequence together with its base orientation.
#[derive(Debug, Clone)]
pub struct AdmissibleSequence {
    base: Arc<Orientation>,
    letters: Vec<Vertex>,
}

impl PartialEq for AdmissibleSequence {
    /// Letter-for-letter equality on the same base; use
    /// [`AdmissibleSequence::is_equivalent`] for `~`.
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters && same_base(&self.base, &other.base)
    }
}

impl Eq for AdmissibleSequence {}

fn same_base(a: &Arc<Orientation>, b: &Arc<Orientation>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl AdmissibleSequence {
    /// Validates `letters` against `base`; reports the first offending
    /// position (1-based).
    pub fn new(
        base: impl Into<Arc<Orientation>>,
        letters: Vec<Vertex>,
    ) -> Result<Self, SequenceError> {
        let base = base.into();
        walk(&base, &letters)?;
        Ok(AdmissibleSequence { base, letters })
    }

    pub fn empty(base: impl Into<Arc<Orientation>>) -> Self {
        AdmissibleSequence {
            base: base.into(),
            letters: Vec::new(),
        }
    }

    pub fn base(&self) -> &Orientation {
        &self.base
    }

    pub fn shared_base(&self) -> &Arc<Orientation> {
        &self.base
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `Λ^S = σ_{x_s} ⋯ σ_{x_1} Λ`.
    pub fn final_orientation(&self) -> Orientation {
        walk(&self.base, &self.letters).expect("validated at construction")
    }

    pub fn multiplicity(&self) -> MultiplicityVector {
        let mut counts = vec![0u32; self.base.rank()];
        for &x in &self.letters {
            counts[x - 1] += 1;
        }
        MultiplicityVector(counts)
    }

    pub fn support(&self) -> BTreeSet<Vertex> {
        self.letters.iter().copied().collect()
    }

    /// `w(S)`, with `x_1` acting first.
    pub fn word(&self) -> Word {
        Word::new(self.letters.clone())
    }

    fn check_base(&self, other: &AdmissibleSequence) -> Result<(), SequenceError> {
        if same_base(&self.base, &other.base) {
            Ok(())
        } else {
            Err(SequenceError::DifferentBase)
        }
    }

    /// `S ~ T`.
    pub fn is_equivalent(&self, other: &AdmissibleSequence) -> Result<bool, SequenceError> {
        self.check_base(other)?;
        Ok(self.multiplicity() == other.multiplicity())
    }

    /// `S ⪯ T`, with `self` as `S`.
    pub fn is_subsequence(&self, other: &AdmissibleSequence) -> Result<bool, SequenceError> {
        self.check_base(other)?;
        Ok(self.multiplicity().leq(&other.multiplicity()))
    }

    /// `ST`, validating `tail` on `Λ^S`.
    pub fn concat(&self, tail: &[Vertex]) -> Result<AdmissibleSequence, SequenceError> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(tail);
        AdmissibleSequence::new(Arc::clone(&self.base), letters)
    }

    /// `S^m`, the concatenation of `m` copies of `S`.
    pub fn repeat(&self, m: usize) -> Result<AdmissibleSequence, SequenceError> {
        AdmissibleSequence::new(Arc::clone(&self.base), self.letters.repeat(m))
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm, SequenceError> {
        if self.is_empty() {
            return Err(SequenceError::EmptySequence);
        }
        let m = self.multiplicity();
        let supports: Vec<_> = (1..=m.max_count()).map(|i| m.at_least(i)).collect();
        let blocks = materialize_blocks(&self.base, &supports)?;
        let form = CanonicalForm { blocks };
        debug_assert_eq!(
            AdmissibleSequence::new(Arc::clone(&self.base), form.letters())
                .map(|s| s.multiplicity()),
            Ok(m)
        );
        Ok(form)
    }

    /// The canonical representative of the class with multiplicities `m`.
    pub fn from_multiplicity(
        base: impl Into<Arc<Orientation>>,
        m: &MultiplicityVector,
    ) -> Result<AdmissibleSequence, SequenceError> {
        let supports: Vec<_> = (1..=m.max_count()).map(|i| m.at_least(i)).collect();
        AdmissibleSequence::from_block_supports(base, &supports)
    }

    /// Builds blocks with the given supports front to back, ordering each
    /// block by repeatedly taking the least-indexed sink.
    pub fn from_block_supports(
        base: impl Into<Arc<Orientation>>,
        supports: &[BTreeSet<Vertex>],
    ) -> Result<AdmissibleSequence, SequenceError> {
        let base = base.into();
        let letters = materialize_blocks(&base, supports)?.concat();
        AdmissibleSequence::new(base, letters)
    }

    /// `S ∧ T`: pointwise minimum of multiplicities.
    pub fn meet(&self, other: &AdmissibleSequence) -> Result<AdmissibleSequence, SequenceError> {
        self.check_base(other)?;
        let m = self.multiplicity().pointwise_min(&other.multiplicity());
        AdmissibleSequence::from_multiplicity(Arc::clone(&self.base), &m)
    }

    /// `S ∨ T`: pointwise maximum of multiplicities.
    pub fn join(&self, other: &AdmissibleSequence) -> Result<AdmissibleSequence, SequenceError> {
        self.check_base(other)?;
        let m = self.multiplicity().pointwise_max(&other.multiplicity());
        AdmissibleSequence::from_multiplicity(Arc::clone(&self.base), &m)
    }

    /// `S ∧ T` from canonical forms: block supports `Supp S_i ∩ Supp T_i`,
    /// cut at the first empty intersection.
    pub fn meet_blockwise(
        &self,
        other: &AdmissibleSequence,
    ) -> Result<AdmissibleSequence, SequenceError> {
        self.check_base(other)?;
        if self.is_empty() || other.is_empty() {
            return Ok(AdmissibleSequence::empty(Arc::clone(&self.base)));
        }
        let s = self.canonical_form()?.supports();
        let t = other.canonical_form()?.supports();
        let supports: Vec<BTreeSet<Vertex>> = s
            .iter()
            .zip(&t)
            .map(|(a, b)| a.intersection(b).copied().collect::<BTreeSet<_>>())
            .take_while(|r| !r.is_empty())
            .collect();
        AdmissibleSequence::from_block_supports(Arc::clone(&self.base), &supports)
    }

    /// `S ∨ T` from canonical forms: block supports `Supp S_i ∪ Supp T_i`,
    /// then the remaining blocks of the longer form.
    pub fn join_blockwise(
        &self,
        other: &AdmissibleSequence,
    ) -> Result<AdmissibleSequence, SequenceError> {
        self.check_base(other)?;
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let s = self.canonical_form()?.supports();
        let t = other.canonical_form()?.supports();
        let (short, long) = if s.len() <= t.len() {
            (&s, &t)
        } else {
            (&t, &s)
        };
        let supports: Vec<BTreeSet<Vertex>> = long
            .iter()
            .enumerate()
            .map(|(i, l)| match short.get(i) {
                Some(sh) => sh.union(l).copied().collect(),
                None => l.clone(),
            })
            .collect();
        AdmissibleSequence::from_block_supports(Arc::clone(&self.base), &supports)
    }

    /// `S_{r,x}`: supports `T_r = ⟨x⟩`, `T_i = H_Λ(T_{i+1})`, materialized
    /// block by block.
    pub fn principal(
        base: impl Into<Arc<Orientation>>,
        id: PrincipalSequenceId,
    ) -> Result<AdmissibleSequence, SequenceError> {
        let base = base.into();
        let n = base.rank();
        if id.r == 0 || id.x == 0 || id.x > n {
            return Err(SequenceError::InvalidPrincipalId { n });
        }
        let mut supports = vec![base.filter_generated([id.x])];
        for _ in 1..id.r {
            let last = supports.last().expect("nonempty");
            let hull = base.hull(last).expect("hulls of filters are filters");
            supports.push(hull);
        }
        supports.reverse();
        let supports: Vec<_> = supports.into_iter().map(Filter::into_set).collect();
        AdmissibleSequence::from_block_supports(base, &supports)
    }

    /// A complete sequence: every vertex once, least-indexed sink first.
    pub fn complete(base: impl Into<Arc<Orientation>>) -> AdmissibleSequence {
        let base = base.into();
        let all: BTreeSet<Vertex> = base.vertices().collect();
        AdmissibleSequence::from_block_supports(base, &[all])
            .expect("an acyclic orientation always has a sink")
    }

    /// `Some((r, x))` when `S ~ S_{r,x}`: the canonical supports satisfy the
    /// hull recursion and the last one is a principal filter.
    pub fn principal_id(&self) -> Result<Option<PrincipalSequenceId>, SequenceError> {
        let supports = self.canonical_form()?.supports();
        let r = supports.len();
        let last = &supports[r - 1];
        let Some(x) = last
            .iter()
            .copied()
            .find(|&x| self.base.filter_generated([x]).vertices() == last)
        else {
            return Ok(None);
        };
        for i in (0..r - 1).rev() {
            let inner = Filter::new(&self.base, supports[i + 1].clone());
            let Ok(inner) = inner else {
                return Ok(None);
            };
            let hull = self.base.hull(&inner).expect("checked filter");
            if hull.vertices() != &supports[i] {
                return Ok(None);
            }
        }
        Ok(Some(PrincipalSequenceId::new(r, x)))
    }

    pub fn is_principal(&self) -> Result<bool, SequenceError> {
        Ok(self.principal_id()?.is_some())
    }
}

impl fmt::Display for AdmissibleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Reflects through `letters`, checking each is a sink when reached.
fn walk(base: &Orientation, letters: &[Vertex]) -> Result<Orientation, SequenceError> {
    let n = base.rank();
    let mut current = base.clone();
    for (k, &x) in letters.iter().enumerate() {
        if x == 0 || x > n {
            return Err(SequenceError::VertexOutOfRange {
                position: k + 1,
                vertex: x,
                n,
            });
        }
        if !current.is_sink(x) {
            return Err(SequenceError::NotASink {
                position: k + 1,
                vertex: x,
            });
        }
        current = current.flip(x);
    }
    Ok(current)
}

fn materialize_blocks(
    base: &Orientation,
    supports: &[BTreeSet<Vertex>],
) -> Result<Vec<Vec<Vertex>>, SequenceError> {
    let mut current = base.clone();
    let mut blocks = Vec::with_capacity(supports.len());
    for (k, support) in supports.iter().enumerate() {
        let mut remaining = support.clone();
        let mut block = Vec::with_capacity(support.len());
        while !remaining.is_empty() {
            let x = remaining
                .iter()
                .copied()
                .find(|&v| current.is_sink(v))
                .ok_or(SequenceError::Stuck { block: k + 1 })?;
            remaining.remove(&x);
            current = current.flip(x);
            block.push(x);
        }
        blocks.push(block);
    }
    Ok(blocks)
}
