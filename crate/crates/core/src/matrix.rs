//! Dense exact-rational matrices: just enough linear algebra for character
//! maps, annihilator subspaces and abelianization bookkeeping.

use num_traits::{One, Zero};

use crate::num::{canonical_sign, rat_vec_to_primitive, Int, Rat};
use crate::{Error, Result};

/// Row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn new(data: Vec<Vec<Rat>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        for r in &data {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![Rat::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i][i] = Rat::one();
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<Int>]) -> Self {
        let data: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        let cols = data.first().map_or(0, Vec::len);
        Self {
            rows: data.len(),
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

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i]
    }

    pub fn apply(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok(self
            .data
            .iter()
            .map(|r| crate::num::dot_rat(r, x))
            .collect())
    }

    /// Row vector times matrix: `v * M`, with `v.len() == rows`.
    pub fn row_vec_times(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let mut out = vec![Rat::zero(); self.cols];
        for (vi, row) in v.iter().zip(&self.data) {
            if vi.is_zero() {
                continue;
            }
            for (o, m) in out.iter_mut().zip(row) {
                *o += vi * m;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self.data[i][k] * &other.data[k][j];
                    out.data[i][j] += add;
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].clone();
            for j in c..self.cols {
                let v = &self.data[r][j] / &inv;
                self.data[r][j] = v;
            }
            for i in 0..self.rows {
                if i != r && !self.data[i][c].is_zero() {
                    let f = self.data[i][c].clone();
                    for j in c..self.cols {
                        let sub = &f * &self.data[r][j];
                        self.data[i][j] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of `{x : Mx = 0}` as primitive integer vectors with canonical
    /// sign, in deterministic order.
    pub fn null_space(&self) -> Vec<Vec<Int>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut x = vec![Rat::zero(); self.cols];
            x[free] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -m.data[r][free].clone();
            }
            let v = rat_vec_to_primitive(&x).expect("free column gives nonzero vector");
            basis.push(canonical_sign(&v));
        }
        basis
    }

    /// Solves `Mx = b` exactly. Returns `None` when inconsistent; when the
    /// system is underdetermined the free variables are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = self.clone();
        aug.cols += 1;
        for (row, bi) in aug.data.iter_mut().zip(b) {
            row.push(bi.clone());
        }
        let pivots = aug.rref();
        // A pivot in the appended column means the system is inconsistent.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.data[r][self.cols].clone();
        }
        Some(x)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j][i] = self.data[i][j].clone();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use num_traits::Zero;

    #[test]
    fn null_space_of_projection() {
        // x + y = 0 in dim 3 -> basis {(1,-1,0),(0,0,1)}
        let m = RatMatrix::new(vec![vec![rat(1, 1), rat(1, 1), rat(0, 1)]]).unwrap();
        let b = m.null_space();
        assert_eq!(b.len(), 2);
        for v in &b {
            assert!((&v[0] + &v[1]).is_zero() || (v[0].is_zero() && v[1].is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = RatMatrix::new(vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(2, 1)],
            vec![rat(1, 1), rat(2, 1)],
        ])
        .unwrap();
        let x = m.solve(&[rat(3, 1), rat(4, 1), rat(7, 1)]).unwrap();
        assert_eq!(x, vec![rat(3, 1), rat(2, 1)]);
        assert!(m.solve(&[rat(3, 1), rat(4, 1), rat(6, 1)]).is_none());
    }

    #[test]
    fn rank_counts_pivots() {
        let m = RatMatrix::new(vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(2, 1), rat(4, 1)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
    }
}
