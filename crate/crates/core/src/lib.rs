//! Valued quivers, (+)-admissible sequences, Weyl groups of symmetrizable
//! generalized Cartan matrices, and preprojective representations at the
//! level of dimension vectors.
//!
//! Vertices are numbered `1..=n` everywhere. A sequence or word
//! `x_1, …, x_s` acts as `σ_{x_s} ⋯ σ_{x_1}`: `x_1` is applied first.

pub mod cartan;
pub mod error;
pub mod format;
pub mod matrix;
pub mod preprojective;
pub mod quiver;
pub mod sequence;
pub mod weyl;

pub use cartan::{CartanMatrix, EdgeSpec, GraphError, Symmetrizer, ValuedGraph, Vertex};
pub use error::{ErrorCode, Overflow};
pub use format::{FormatError, QuiverFile};
pub use matrix::IntMatrix;
pub use preprojective::{
    dim_of_sequence, PositivityTrace, PreprojectiveClass, PreprojectiveComponent,
    PreprojectiveError, TraceStep, Verdict,
};
pub use quiver::{Filter, Orientation, OrientationError, TqVertex, VertexPoset};
pub use sequence::{
    AdmissibleSequence, CanonicalForm, MultiplicityVector, PrincipalSequenceId, SequenceError,
};
pub use weyl::{RootVector, Sign, WeylElement, WeylError, WeylGroup, Word};
