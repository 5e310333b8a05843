//! Dense matrices over the rationals, just enough for kernels and ranks.
//!
//! Every structure constant in the oracle is 0 or 1, so dimensions do not
//! depend on the characteristic of the (algebraically closed) ground field;
//! working over `Q` is exact and suffices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let r = rows.len();
        let data: Vec<Q> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols, "ragged rows");
        Self { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                let f = m.get(r, col);
                if r != row && !f.is_zero() {
                    for c in col..m.cols {
                        let v = m.get(r, c) - f * m.get(row, c);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, as the columns of the returned matrix.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, Q::one());
            for (i, &p) in pivots.iter().enumerate() {
                k.set(p, j, -r.get(i, f));
            }
        }
        k
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self.get(r, j)).collect()
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Q {
        Q::from_integer(v)
    }

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(0), q(1), q(1)]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.cols(), 1);
        let prod = &m * &k;
        assert!(prod.entries().iter().all(Q::is_zero));
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(2, 3).kernel().cols(), 3);
    }

    #[test]
    fn hstack_rank() {
        let a = Matrix::from_rows(vec![vec![q(1)], vec![q(0)]]);
        let b = Matrix::from_rows(vec![vec![q(0)], vec![q(1)]]);
        assert_eq!(a.hstack(&b).rank(), 2);
        assert_eq!(a.hstack(&a).rank(), 1);
    }
}
