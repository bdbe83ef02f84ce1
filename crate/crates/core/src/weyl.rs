//! The Weyl group of a generalized Cartan matrix acting on the root lattice.
//!
//! A word `x_1, …, x_s` denotes the element `σ_{x_s} ⋯ σ_{x_1}` acting on
//! column vectors, so `x_1` is applied first. Every function in this module
//! uses that convention.

use std::fmt;

use thiserror::Error;

use crate::cartan::{CartanMatrix, Vertex};
use crate::error::{ErrorCode, Overflow};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vector has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("image of a simple root has mixed signs")]
    MixedSignRoot,
    #[error("length computation did not finish within {cap} steps")]
    CapExceeded { cap: usize },
    #[error("matrix is not a product of simple reflections")]
    NotAWeylElement,
    #[error("not a permutation of 1..={n}")]
    NotPermutation { n: usize },
}

impl ErrorCode for WeylError {
    fn code(&self) -> &'static str {
        match self {
            WeylError::Overflow(_) => "Overflow",
            WeylError::VertexOutOfRange { .. } => "VertexOutOfRange",
            WeylError::DimensionMismatch { .. } => "DimensionMismatch",
            WeylError::MixedSignRoot => "MixedSignRoot",
            WeylError::CapExceeded { .. } => "CapExceeded",
            WeylError::NotAWeylElement => "NotAWeylElement",
            WeylError::NotPermutation { .. } => "NotPermutation",
        }
    }
}

/// Sign pattern of an integer vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Zero,
    Positive,
    Negative,
    Mixed,
}

/// Coordinates over the simple roots `e_1..e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        RootVector(vec![0; n])
    }

    /// The simple root `e_v`.
    pub fn simple(n: usize, v: Vertex) -> Self {
        let mut coords = vec![0; n];
        coords[v - 1] = 1;
        RootVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Coordinate at vertex `v`.
    pub fn at(&self, v: Vertex) -> i64 {
        self.0[v - 1]
    }

    pub fn sign(&self) -> Sign {
        let pos = self.0.iter().any(|&x| x > 0);
        let neg = self.0.iter().any(|&x| x < 0);
        match (pos, neg) {
            (false, false) => Sign::Zero,
            (true, false) => Sign::Positive,
            (false, true) => Sign::Negative,
            (true, true) => Sign::Mixed,
        }
    }

    /// Nonzero with all coordinates `≥ 0`.
    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    /// Nonzero with all coordinates `≤ 0`.
    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A word `x_1, …, x_s` in the simple reflections; `x_1` acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Vertex>);

impl Word {
    pub fn new(letters: Vec<Vertex>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word of the inverse element.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<Vertex>> for Word {
    fn from(letters: Vec<Vertex>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An element of `W(A)`, stored as its matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(IntMatrix);

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement(IntMatrix::identity(n))
    }

    /// Wraps a raw matrix. Nothing checks that it lies in the group; the
    /// length routines report `NotAWeylElement` or `CapExceeded` if not.
    pub fn from_matrix(matrix: IntMatrix) -> Self {
        WeylElement(matrix)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// `self · rhs`, i.e. `rhs` acts first.
    pub fn compose(&self, rhs: &WeylElement) -> Result<WeylElement, Overflow> {
        Ok(WeylElement(self.0.checked_mul(&rhs.0)?))
    }

    pub fn pow(&self, exp: u32) -> Result<WeylElement, Overflow> {
        Ok(WeylElement(self.0.checked_pow(exp)?))
    }

    pub fn apply(&self, v: &RootVector) -> Result<RootVector, Overflow> {
        Ok(RootVector(self.0.checked_apply(&v.0)?))
    }

    /// Image of the simple root `e_v`: column `v` of the matrix.
    pub fn image_of_simple(&self, v: Vertex) -> RootVector {
        RootVector(self.0.column(v - 1))
    }

    /// Matrix inverse, computed from the adjugate rather than from a word.
    pub fn inverse(&self) -> Result<WeylElement, WeylError> {
        match self.0.unimodular_inverse()? {
            Some(inv) => Ok(WeylElement(inv)),
            None => Err(WeylError::NotAWeylElement),
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `W(A)` for a fixed Cartan matrix, with its simple reflections cached.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    cartan: CartanMatrix,
    simple: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn new(cartan: CartanMatrix) -> Self {
        let n = cartan.rank();
        let simple = (1..=n)
            .map(|i| {
                let mut m = IntMatrix::identity(n);
                for j in 1..=n {
                    m[(i - 1, j - 1)] = i64::from(i == j) - cartan.entry(i, j);
                }
                WeylElement(m)
            })
            .collect();
        WeylGroup { cartan, simple }
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), WeylError> {
        let n = self.rank();
        if v == 0 || v > n {
            return Err(WeylError::VertexOutOfRange { vertex: v, n });
        }
        Ok(())
    }

    /// `σ_i` as a matrix: identity except row `i`, which is `δ_ij - a_ij`.
    pub fn simple_reflection(&self, i: Vertex) -> Result<&WeylElement, WeylError> {
        self.check_vertex(i)?;
        Ok(&self.simple[i - 1])
    }

    /// `σ_i(v) = v - (Σ_j a_ij v_j) e_i`.
    pub fn reflect(&self, i: Vertex, v: &RootVector) -> Result<RootVector, WeylError> {
        self.check_vertex(i)?;
        let n = self.rank();
        if v.dim() != n {
            return Err(WeylError::DimensionMismatch {
                expected: n,
                got: v.dim(),
            });
        }
        let pairing = (1..=n).try_fold(0i64, |acc, j| {
            self.cartan
                .entry(i, j)
                .checked_mul(v.at(j))
                .and_then(|p| acc.checked_add(p))
                .ok_or(Overflow)
        })?;
        let mut out = v.clone();
        out.0[i - 1] = out.0[i - 1].checked_sub(pairing).ok_or(Overflow)?;
        Ok(out)
    }

    /// `σ_{x_s} ⋯ σ_{x_1}`; the empty word gives the identity.
    pub fn element_of(&self, word: &Word) -> Result<WeylElement, WeylError> {
        let mut acc = WeylElement::identity(self.rank());
        for &x in word.letters() {
            acc = self.simple_reflection(x)?.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Whether `ℓ(w) = |w|`.
    ///
    /// Walks the word from its last letter, keeping `P = σ_{x_s} ⋯ σ_{x_{j+1}}`;
    /// the word is reduced iff every `P(e_{x_j})` is positive.
    pub fn is_reduced(&self, word: &Word) -> Result<bool, WeylError> {
        let mut prefix = WeylElement::identity(self.rank());
        for &x in word.letters().iter().rev() {
            self.check_vertex(x)?;
            match prefix.image_of_simple(x).sign() {
                Sign::Positive => {}
                Sign::Negative => return Ok(false),
                Sign::Mixed | Sign::Zero => return Err(WeylError::MixedSignRoot),
            }
            prefix = prefix.compose(&self.simple[x - 1])?;
        }
        Ok(true)
    }

    /// Default step cap for [`WeylGroup::length`] on an element built from a
    /// word of the given length: `10·n·(len + 1)`.
    pub fn default_length_cap(&self, word_len: usize) -> usize {
        10 * self.rank() * (word_len + 1)
    }

    /// `ℓ(e)` by right descents: while `e ≠ 1`, take the least `i` with
    /// `e(e_i) < 0` and replace `e` by `e·σ_i`.
    pub fn length(&self, element: &WeylElement, cap: usize) -> Result<usize, WeylError> {
        self.descent_word(element, cap).map(|w| w.len())
    }

    /// A reduced word for `element`, read off the descent algorithm.
    pub fn reduced_word(&self, element: &WeylElement, cap: usize) -> Result<Word, WeylError> {
        self.descent_word(element, cap)
    }

    fn descent_word(&self, element: &WeylElement, cap: usize) -> Result<Word, WeylError> {
        let n = self.rank();
        if element.matrix().dim() != n {
            return Err(WeylError::DimensionMismatch {
                expected: n,
                got: element.matrix().dim(),
            });
        }
        let mut current = element.clone();
        let mut letters = Vec::new();
        while !current.is_identity() {
            if letters.len() >= cap {
                return Err(WeylError::CapExceeded { cap });
            }
            let mut descent = None;
            for i in 1..=n {
                match current.image_of_simple(i).sign() {
                    Sign::Negative => {
                        descent = Some(i);
                        break;
                    }
                    Sign::Positive => {}
                    Sign::Mixed | Sign::Zero => return Err(WeylError::MixedSignRoot),
                }
            }
            let i = descent.ok_or(WeylError::NotAWeylElement)?;
            current = current.compose(&self.simple[i - 1])?;
            letters.push(i);
        }
        // e·σ_{i_1}⋯σ_{i_k} = 1, so e = σ_{i_k}⋯σ_{i_1} and i_1 acts first.
        Ok(Word(letters))
    }

    /// `c = σ_{v_n} ⋯ σ_{v_1}` for a permutation `v_1, …, v_n`.
    pub fn coxeter_element(&self, perm: &[Vertex]) -> Result<WeylElement, WeylError> {
        check_permutation(perm, self.rank())?;
        self.element_of(&Word(perm.to_vec()))
    }

    /// `[ℓ(c¹), …, ℓ(c^max_m)]`, each with step cap `max_m·n + 1`.
    pub fn coxeter_power_lengths(
        &self,
        perm: &[Vertex],
        max_m: u32,
    ) -> Result<Vec<usize>, WeylError> {
        let c = self.coxeter_element(perm)?;
        let cap = max_m as usize * self.rank() + 1;
        let mut power = WeylElement::identity(self.rank());
        let mut lengths = Vec::with_capacity(max_m as usize);
        for _ in 0..max_m {
            power = c.compose(&power)?;
            lengths.push(self.length(&power, cap)?);
        }
        Ok(lengths)
    }

    /// Order of `element`, if it is at most `max`.
    pub fn order(&self, element: &WeylElement, max: u32) -> Result<Option<u32>, WeylError> {
        let mut power = element.clone();
        for k in 1..=max {
            if power.is_identity() {
                return Ok(Some(k));
            }
            power = element.compose(&power)?;
        }
        Ok(None)
    }
}

pub(crate) fn check_permutation(perm: &[Vertex], n: usize) -> Result<(), WeylError> {
    let mut seen = vec![false; n + 1];
    if perm.len() != n {
        return Err(WeylError::NotPermutation { n });
    }
    for &v in perm {
        if v == 0 || v > n || seen[v] {
            return Err(WeylError::NotPermutation { n });
        }
        seen[v] = true;
    }
    Ok(())
}
