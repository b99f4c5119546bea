//! Gaussian elimination over an exact field.
//!
//! Pivots are the first nonzero entry of a column scanning downward. Over
//! ℚ(i)(b) "nonzero" means nonzero as a rational function, so results are
//! generic in `b`.

use std::fmt;

use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    /// All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(Self { rows: n, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = F::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: F) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, x)| !a.is_zero() && !x.is_zero())
                    .fold(F::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(found) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, found);
            let inv = m.get(pivot_row, col).checked_inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(pivot_row, c).clone();
                if !v.is_zero() {
                    m.set(pivot_row, c, v * inv.clone());
                }
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let p = m.get(pivot_row, c).clone();
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c).clone() - factor.clone() * p;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> Self {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of the right null space. Each free variable is set to 1 in turn
    /// (the others 0) and the pivot variables are read off the RREF.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// True when `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[F]) -> Result<bool, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut rows = self.row_vectors();
        let before = self.rank();
        rows.push(v.to_vec());
        Ok(Matrix::from_rows(self.cols, rows)?.rank() == before)
    }
}

/// Rank of the stacked vectors. All must have length `dim`.
pub fn span_rank<F: Field>(dim: usize, vectors: &[Vec<F>]) -> Result<usize, LinalgError> {
    Ok(Matrix::from_rows(dim, vectors.to_vec())?.rank())
}

/// Whether two lists of vectors span the same subspace:
/// `rank(a) = rank(b) = rank(a ∪ b)`.
pub fn span_equal<F: Field>(a: &[Vec<F>], b: &[Vec<F>]) -> Result<bool, LinalgError> {
    let Some(dim) = a.iter().chain(b).map(Vec::len).next() else {
        return Ok(true);
    };
    let ra = span_rank(dim, a)?;
    let rb = span_rank(dim, b)?;
    if ra != rb {
        return Ok(false);
    }
    let both: Vec<Vec<F>> = a.iter().chain(b).cloned().collect();
    Ok(span_rank(dim, &both)? == ra)
}

/// A basis of the span in reduced echelon form: each vector has a leading 1
/// in a column where all the others vanish.
pub fn echelon_basis<F: Field>(dim: usize, vectors: &[Vec<F>]) -> Result<Vec<Vec<F>>, LinalgError> {
    let (r, pivots) = Matrix::from_rows(dim, vectors.to_vec())?.rref_with_pivots();
    Ok((0..pivots.len()).map(|i| r.row(i).to_vec()).collect())
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;
    use num_traits::Zero;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    fn m(rows: Vec<Vec<Scalar>>) -> Matrix<Scalar> {
        let cols = rows[0].len();
        Matrix::from_rows(cols, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        assert_eq!(
            m(vec![vec![s(2), s(0)], vec![s(0), s(0)]]).rref(),
            m(vec![vec![s(1), s(0)], vec![s(0), s(0)]])
        );
        assert_eq!(Matrix::<Scalar>::identity(3).rref(), Matrix::identity(3));
        let b = Scalar::b();
        let x = m(vec![vec![b.clone(), s(1)], vec![b.clone() * b.clone(), b.clone()]]);
        let inv_b = b.checked_inv().unwrap();
        assert_eq!(x.rref(), m(vec![vec![s(1), inv_b], vec![s(0), s(0)]]));
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::<Scalar>::zeros(2, 4).kernel_basis();
        assert_eq!(k.len(), 4);
        for (i, v) in k.iter().enumerate() {
            assert_eq!(v, &(0..4).map(|j| s((i == j) as i64)).collect::<Vec<_>>());
        }
        assert!(Matrix::<Scalar>::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let b = Scalar::b();
        let x = m(vec![
            vec![s(1), b.clone(), s(0), Scalar::i()],
            vec![b.clone(), b.clone() * b.clone(), s(1), s(0)],
        ]);
        let k = x.kernel_basis();
        assert_eq!(k.len() + x.rank(), 4);
        for v in &k {
            assert!(x.mul_vec(v).unwrap().iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn span_examples() {
        let e1 = vec![s(1), s(0)];
        let e2 = vec![s(0), s(1)];
        let two_e1 = vec![s(2), s(0)];
        assert!(span_equal(std::slice::from_ref(&e1), &[two_e1]).unwrap());
        assert!(!span_equal(std::slice::from_ref(&e1), &[e2]).unwrap());
        assert!(matches!(
            span_equal(&[e1], &[vec![s(1)]]),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn row_space_membership() {
        let x = m(vec![vec![s(1), s(1), s(0)]]);
        assert!(x.row_space_contains(&[s(3), s(3), s(0)]).unwrap());
        assert!(!x.row_space_contains(&[s(0), s(1), s(0)]).unwrap());
    }

    #[test]
    fn constructor_checks_length() {
        assert!(Matrix::<Scalar>::new(2, 2, vec![s(1)]).is_err());
    }
}
