//! Dense exact linear algebra over the rationals: rank and null spaces.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rational;

/// Row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|r| self.row(r)))
            .finish()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: alloc::vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Self {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Sub-matrix of the given row range and column range.
    pub fn block(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Self {
        let width = cols.len();
        let data = rows
            .flat_map(|r| self.row(r)[cols.clone()].iter().cloned())
            .collect::<Vec<_>>();
        Self {
            rows: data.len() / width.max(1),
            cols: width,
            data,
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).recip();
            for k in c..m.cols {
                let v = m.get(lead, k) * &inv;
                m.set(lead, k, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for k in c..m.cols {
                    let v = m.get(r, k) - &factor * m.get(lead, k);
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Exact rank by fraction-free (Bareiss) elimination after clearing
    /// denominators row by row.
    pub fn rank(&self) -> usize {
        let cols = self.cols;
        let mut a: Vec<BigInt> = Vec::with_capacity(self.data.len());
        for r in 0..self.rows {
            let row = self.row(r);
            let scale = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            a.extend(row.iter().map(|x| x.numer() * (&scale / x.denom())));
        }
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| !a[r * cols + c].is_zero()) else {
                continue;
            };
            if p != rank {
                for k in 0..cols {
                    a.swap(p * cols + k, rank * cols + k);
                }
            }
            let pivot = a[rank * cols + c].clone();
            for r in rank + 1..self.rows {
                let lead = core::mem::take(&mut a[r * cols + c]);
                for k in c + 1..cols {
                    let v = &pivot * &a[r * cols + k] - &lead * &a[rank * cols + k];
                    a[r * cols + k] = v / &prev;
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Basis of `{x | M x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = alloc::vec![Rational::zero(); self.cols];
            v[free] = One::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Rank of a list of vectors of a common length.
pub fn rank_of_rows(rows: &[Vec<Rational>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(rows.to_vec(), cols).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
            cols,
        )
    }

    #[test]
    fn rank_and_nullity() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::zeros(3, 4).nullspace().len(), 4);
    }

    #[test]
    fn wide_and_tall() {
        let wide = m(&[&[0, 0, 4]]);
        assert_eq!(wide.rank(), 1);
        assert_eq!(wide.nullspace().len(), 2);
        assert_eq!(wide.transpose().rank(), 1);
    }

    #[test]
    fn blocks() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(a.block(0..2, 1..3), m(&[&[2, 3], &[5, 6]]));
    }
}
