//! Dense exact-rational linear algebra: just enough for affine dependence
//! computations. All elimination is fraction-exact; no pivoting heuristics
//! beyond "first nonzero" are needed for correctness.

use crate::rational::Rational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduced row echelon form. Returns the pivot column indices in
    /// increasing order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).recip();
            for c in col..self.cols {
                let v = self.at(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c) - &factor * self.at(row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Rank by forward elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0usize;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            for r in rank + 1..m.rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col) / m.at(rank, col);
                for c in col..m.cols {
                    let v = m.at(r, c) - &factor * m.at(rank, c);
                    m.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Canonical nullspace basis read off the RREF: one vector per free
    /// column, ordered by free column index. The vector for free column f has
    /// entry 1 at position f and zeros beyond it, so its last nonzero
    /// coordinate is always +1.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                if p < f {
                    v[p] = -m.at(row, f).clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant of a square matrix by fraction-exact elimination.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.at(r, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            det *= m.at(col, col);
            for r in col + 1..n {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col) / m.at(col, col);
                for c in col..n {
                    let v = m.at(r, c) - &factor * m.at(col, c);
                    m.set(r, c, v);
                }
            }
        }
        det
    }
}

/// (dim+1) x n matrix whose columns are the given points homogenized with a
/// trailing 1. Its nullspace is exactly the space of affine dependences.
pub fn homogeneous_matrix(points: &[&[Rational]], dim: usize) -> Matrix {
    let n = points.len();
    let mut m = Matrix::zero(dim + 1, n);
    for (j, p) in points.iter().enumerate() {
        assert_eq!(p.len(), dim, "point arity mismatch");
        for (i, x) in p.iter().enumerate() {
            m.set(i, j, x.clone());
        }
        m.set(dim, j, Rational::one());
    }
    m
}

/// True iff the points are affinely independent (each point adds a dimension
/// to the affine hull).
pub fn affinely_independent(points: &[&[Rational]], dim: usize) -> bool {
    if points.len() > dim + 1 {
        return false;
    }
    homogeneous_matrix(points, dim).rank() == points.len()
}
