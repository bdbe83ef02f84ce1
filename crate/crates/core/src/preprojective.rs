//! Indecomposable preprojective representations seen through their
//! dimension vectors.
//!
//! An indecomposable preprojective is named by the principal sequence
//! `S_{r,x}` that is its shortest annihilating sequence. Its dimension
//! vector is `σ_{x_1} ⋯ σ_{x_{s-1}}(e_{x_s})` for `S_{r,x} = x_1, …, x_s`,
//! and a principal sequence names a module exactly when every partial
//! product in that expression stays positive.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::cartan::{ValuedGraph, Vertex};
use crate::error::ErrorCode;
use crate::quiver::{Orientation, TqVertex};
use crate::sequence::{AdmissibleSequence, MultiplicityVector, PrincipalSequenceId, SequenceError};
use crate::weyl::{RootVector, WeylError, WeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreprojectiveError {
    #[error("operation needs a nonempty sequence")]
    EmptySequence,
    #[error("S_{{{r},{x}}} does not name a preprojective: its trace leaves the positive roots at position {position}")]
    NotPreprojective {
        r: usize,
        x: Vertex,
        position: usize,
    },
    #[error("dimension-vector trace left the positive roots at position {position}")]
    InconsistentTrace { position: usize },
    #[error("sequence and component live on different base orientations")]
    DifferentBase,
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

impl ErrorCode for PreprojectiveError {
    fn code(&self) -> &'static str {
        match self {
            PreprojectiveError::EmptySequence => "EmptySequence",
            PreprojectiveError::NotPreprojective { .. } => "NotPreprojective",
            PreprojectiveError::InconsistentTrace { .. } => "InconsistentTrace",
            PreprojectiveError::DifferentBase => "DifferentBase",
            PreprojectiveError::Sequence(e) => e.code(),
            PreprojectiveError::Weyl(e) => e.code(),
        }
    }
}

/// One vector of a [`PositivityTrace`] together with the reflection that
/// produced it. The first step carries `x_s`, the vertex of the starting
/// simple root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub reflection: Vertex,
    pub vector: RootVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Positive,
    /// `σ_{x_position}` produced a non-positive vector, so the module
    /// vanishes there.
    HitZero {
        position: usize,
    },
}

/// `v_s = e_{x_s}`, `v_i = σ_{x_i}(v_{i+1})`, stopping at the first
/// non-positive vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositivityTrace {
    pub steps: Vec<TraceStep>,
    pub verdict: Verdict,
}

impl PositivityTrace {
    /// The final vector when the verdict is positive.
    pub fn dim(&self) -> Option<&RootVector> {
        match self.verdict {
            Verdict::Positive => self.steps.last().map(|s| &s.vector),
            Verdict::HitZero { .. } => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.verdict == Verdict::Positive
    }
}

/// An indecomposable preprojective, by name and dimension vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreprojectiveClass {
    pub id: PrincipalSequenceId,
    pub dim: RootVector,
    sequence: AdmissibleSequence,
}

impl PreprojectiveClass {
    /// `S_{r,x}`, the shortest sequence annihilating this class.
    pub fn sequence(&self) -> &AdmissibleSequence {
        &self.sequence
    }

    /// Position `(r - 1, x)` in `ℕ(Γ, Λ^op)`.
    pub fn tq_vertex(&self) -> TqVertex {
        TqVertex::new(self.id.r - 1, self.id.x)
    }
}

/// `r x : dim d1 … dn`
impl fmt::Display for PreprojectiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} : dim {}", self.id.r, self.id.x, self.dim)
    }
}

/// `σ_{x_1} ⋯ σ_{x_{s-1}}(e_{x_s})`, tracking positivity at each step.
pub fn dim_of_sequence(
    weyl: &WeylGroup,
    sequence: &AdmissibleSequence,
) -> Result<PositivityTrace, PreprojectiveError> {
    let letters = sequence.letters();
    let (&last, rest) = letters
        .split_last()
        .ok_or(PreprojectiveError::EmptySequence)?;
    let mut v = RootVector::simple(weyl.rank(), last);
    let mut steps = vec![TraceStep {
        reflection: last,
        vector: v.clone(),
    }];
    for (i, &x) in rest.iter().enumerate().rev() {
        v = weyl.reflect(x, &v)?;
        steps.push(TraceStep {
            reflection: x,
            vector: v.clone(),
        });
        if !v.is_positive() {
            return Ok(PositivityTrace {
                steps,
                verdict: Verdict::HitZero { position: i + 1 },
            });
        }
    }
    Ok(PositivityTrace {
        steps,
        verdict: Verdict::Positive,
    })
}

/// The preprojective component of a valued quiver `(Γ, Λ)`, at the level of
/// names and dimension vectors.
#[derive(Debug, Clone)]
pub struct PreprojectiveComponent {
    weyl: WeylGroup,
    base: Arc<Orientation>,
}

impl PreprojectiveComponent {
    pub fn new(graph: &ValuedGraph, base: impl Into<Arc<Orientation>>) -> Self {
        PreprojectiveComponent {
            weyl: WeylGroup::new(graph.cartan_matrix()),
            base: base.into(),
        }
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn base(&self) -> &Arc<Orientation> {
        &self.base
    }

    fn check_base(&self, sequence: &AdmissibleSequence) -> Result<(), PreprojectiveError> {
        let same =
            Arc::ptr_eq(&self.base, sequence.shared_base()) || *self.base == *sequence.base();
        if same {
            Ok(())
        } else {
            Err(PreprojectiveError::DifferentBase)
        }
    }

    pub fn principal_sequence(
        &self,
        id: PrincipalSequenceId,
    ) -> Result<AdmissibleSequence, PreprojectiveError> {
        Ok(AdmissibleSequence::principal(Arc::clone(&self.base), id)?)
    }

    pub fn dim_of_sequence(
        &self,
        sequence: &AdmissibleSequence,
    ) -> Result<PositivityTrace, PreprojectiveError> {
        self.check_base(sequence)?;
        dim_of_sequence(&self.weyl, sequence)
    }

    /// The class named `(r, x)`. Fails with `NotPreprojective` when
    /// `S_{r,x}` lies beyond the preprojective component, which only
    /// happens for finite-type graphs.
    pub fn class_of(
        &self,
        id: PrincipalSequenceId,
    ) -> Result<PreprojectiveClass, PreprojectiveError> {
        let sequence = self.principal_sequence(id)?;
        let trace = dim_of_sequence(&self.weyl, &sequence)?;
        match trace.verdict {
            Verdict::Positive => Ok(PreprojectiveClass {
                id,
                dim: trace.steps.last().expect("nonempty trace").vector.clone(),
                sequence,
            }),
            Verdict::HitZero { position } => Err(PreprojectiveError::NotPreprojective {
                r: id.r,
                x: id.x,
                position,
            }),
        }
    }

    pub fn shortest_annihilating(&self, class: &PreprojectiveClass) -> AdmissibleSequence {
        class.sequence.clone()
    }

    /// `S` annihilates the class iff `S_{r,x} ⪯ S`.
    pub fn annihilates(
        &self,
        sequence: &AdmissibleSequence,
        class: &PreprojectiveClass,
    ) -> Result<bool, PreprojectiveError> {
        self.check_base(sequence)?;
        Ok(class.sequence.is_subsequence(sequence)?)
    }

    /// Annihilation decided by pushing the dimension vector through the
    /// reflection functors: `F⁺_x` kills the module exactly when it is the
    /// simple at the sink `x`, and otherwise acts on dimensions by `σ_x`.
    pub fn annihilates_by_trace(
        &self,
        sequence: &AdmissibleSequence,
        class: &PreprojectiveClass,
    ) -> Result<bool, PreprojectiveError> {
        self.check_base(sequence)?;
        let n = self.weyl.rank();
        let mut v = class.dim.clone();
        for (k, &x) in sequence.letters().iter().enumerate() {
            if v == RootVector::simple(n, x) {
                return Ok(true);
            }
            v = self.weyl.reflect(x, &v)?;
            if !v.is_positive() {
                return Err(PreprojectiveError::InconsistentTrace { position: k + 1 });
            }
        }
        Ok(false)
    }

    /// Whether `S ~ S_M` for some preprojective `M`, decided as
    /// reducedness of `w(S)`.
    pub fn realizable(&self, sequence: &AdmissibleSequence) -> Result<bool, PreprojectiveError> {
        self.check_base(sequence)?;
        Ok(self.weyl.is_reduced(&sequence.word())?)
    }

    /// Looks for indecomposable classes whose principal sequences join to
    /// `S`. Every class with `S_{r,x} ⪯ S` is a candidate, and the join of
    /// all candidates is the largest such join, so it is enough to compare
    /// that one join with `S`.
    pub fn realizability_witness(
        &self,
        sequence: &AdmissibleSequence,
    ) -> Result<Option<Vec<PrincipalSequenceId>>, PreprojectiveError> {
        self.check_base(sequence)?;
        let target = sequence.multiplicity();
        let mut joined = MultiplicityVector::zero(self.weyl.rank());
        let mut witnesses = Vec::new();
        for r in 1..=target.max_count() as usize {
            for x in self.base.vertices() {
                let id = PrincipalSequenceId::new(r, x);
                let principal = self.principal_sequence(id)?;
                let m = principal.multiplicity();
                if !m.leq(&target) {
                    continue;
                }
                if dim_of_sequence(&self.weyl, &principal)?.is_positive() {
                    joined = joined.pointwise_max(&m);
                    witnesses.push(id);
                }
            }
        }
        Ok((joined == target).then_some(witnesses))
    }

    /// `[M] ≼ [N]` iff `S_M ⪯ S_N`.
    pub fn preproj_leq(
        &self,
        lower: &PreprojectiveClass,
        upper: &PreprojectiveClass,
    ) -> Result<bool, PreprojectiveError> {
        self.check_base(&lower.sequence)?;
        self.check_base(&upper.sequence)?;
        Ok(lower.sequence.is_subsequence(&upper.sequence)?)
    }

    /// The same order read off `ℕ(Γ, Λ^op)` under `(r, x) ↦ (r - 1, x)`.
    pub fn tq_leq(&self, lower: &PreprojectiveClass, upper: &PreprojectiveClass) -> bool {
        self.base.tq_reachable(lower.tq_vertex(), upper.tq_vertex())
    }

    /// Vertex order used inside one level of `ℕ(Γ, Λ^op)`: a vertex comes
    /// after every head of an arrow leaving it, ties broken by least index.
    pub fn level_order(&self) -> Vec<Vertex> {
        let n = self.base.rank();
        let mut placed = vec![false; n + 1];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = self
                .base
                .vertices()
                .find(|&v| !placed[v] && self.base.successors(v).all(|t| placed[t]))
                .expect("acyclic orientation");
            placed[next] = true;
            order.push(next);
        }
        order
    }

    /// Every class `(r, x)` with `r ≤ max_r`, level by level in
    /// translation-quiver order. Names beyond the preprojective component
    /// (finite type only) are skipped.
    pub fn enumerate_classes(
        &self,
        max_r: usize,
    ) -> Result<Vec<PreprojectiveClass>, PreprojectiveError> {
        let order = self.level_order();
        let mut classes = Vec::new();
        for r in 1..=max_r {
            for &x in &order {
                match self.class_of(PrincipalSequenceId::new(r, x)) {
                    Ok(c) => classes.push(c),
                    Err(PreprojectiveError::NotPreprojective { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(classes)
    }
}
