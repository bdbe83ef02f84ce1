//! Small dense square matrices over `i64` with overflow-checked arithmetic.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::Overflow;

/// A dense `n × n` integer matrix, stored row-major.
///
/// Indices are 0-based here; the vertex-facing APIs translate from 1-based
/// vertex numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix rows must be square");
            entries.extend_from_slice(row);
        }
        IntMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(k, &x)| x == i64::from(k / self.n == k % self.n))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, Overflow> {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let prod = a.checked_mul(rhs[(k, j)]).ok_or(Overflow)?;
                    out[(i, j)] = out[(i, j)].checked_add(prod).ok_or(Overflow)?;
                }
            }
        }
        Ok(out)
    }

    pub fn checked_apply(&self, v: &[i64]) -> Result<Vec<i64>, Overflow> {
        assert_eq!(self.n, v.len(), "dimension mismatch");
        (0..self.n)
            .map(|i| {
                v.iter().enumerate().try_fold(0i64, |acc, (j, &x)| {
                    self[(i, j)]
                        .checked_mul(x)
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Overflow)
                })
            })
            .collect()
    }

    pub fn checked_pow(&self, exp: u32) -> Result<IntMatrix, Overflow> {
        let mut acc = Self::identity(self.n);
        for _ in 0..exp {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Determinants of the leading principal minors, computed with the
    /// fraction-free Bareiss elimination in `i128`.
    ///
    /// The `k`-th entry is the determinant of the top-left `(k+1) × (k+1)`
    /// block. Elimination stops at the first zero pivot and reports the
    /// remaining minors only up to that point, plus the zero.
    pub fn leading_minors(&self) -> Result<Vec<i128>, Overflow> {
        let n = self.n;
        let mut m: Vec<Vec<i128>> = self
            .rows()
            .map(|r| r.iter().map(|&x| i128::from(x)).collect())
            .collect();
        let mut minors = Vec::with_capacity(n);
        let mut prev = 1i128;
        for k in 0..n {
            let pivot = m[k][k];
            minors.push(pivot);
            if pivot == 0 {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j]
                        .checked_mul(pivot)
                        .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                        .ok_or(Overflow)?;
                    m[i][j] = num / prev;
                }
            }
            prev = pivot;
        }
        Ok(minors)
    }

    /// Exact determinant via Bareiss elimination with row pivoting.
    pub fn determinant(&self) -> Result<i128, Overflow> {
        let n = self.n;
        if n == 0 {
            return Ok(1);
        }
        let mut m: Vec<Vec<i128>> = self
            .rows()
            .map(|r| r.iter().map(|&x| i128::from(x)).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                match (k + 1..n).find(|&i| m[i][k] != 0) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            let pivot = m[k][k];
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j]
                        .checked_mul(pivot)
                        .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                        .ok_or(Overflow)?;
                    m[i][j] = num / prev;
                }
            }
            prev = pivot;
        }
        Ok(sign * m[n - 1][n - 1])
    }

    /// Inverse of a unimodular matrix (determinant ±1), via the adjugate.
    ///
    /// Returns `None` when the determinant is not ±1.
    pub fn unimodular_inverse(&self) -> Result<Option<IntMatrix>, Overflow> {
        let n = self.n;
        let det = self.determinant()?;
        if det != 1 && det != -1 {
            return Ok(None);
        }
        let mut inv = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let cofactor = self.minor_matrix(j, i).determinant()?;
                let signed = if (i + j) % 2 == 0 {
                    cofactor
                } else {
                    -cofactor
                };
                inv[(i, j)] = i64::try_from(signed * det).map_err(|_| Overflow)?;
            }
        }
        Ok(Some(inv))
    }

    fn minor_matrix(&self, row: usize, col: usize) -> IntMatrix {
        let rows: Vec<Vec<i64>> = (0..self.n)
            .filter(|&i| i != row)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| j != col)
                    .map(|j| self[(i, j)])
                    .collect()
            })
            .collect();
        IntMatrix::from_rows(&rows)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.entries[i * self.n + j]
    }
}

/// Row-major, one row per line, space-separated.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
