//! Dense exact linear algebra over the scalar field.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                if !self.get(i, k).is_zero() && !other.get(k, j).is_zero() {
                    acc += &(self.get(i, k) * other.get(k, j));
                }
            }
            acc
        })
    }

    /// Apply to a coefficient column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() {
                        acc += &(self.get(i, j) * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; acts on tensor-product index (i1*other.rows + i2).
    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (i1, i2) = (i / other.rows, i % other.rows);
                let (j1, j2) = (j / other.cols, j % other.cols);
                self.get(i1, j1) * other.get(i2, j2)
            },
        )
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..m.cols {
            let pivot = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(r, j) - &(m.get(row, j) * &factor);
                        m.set(r, j, v);
                    }
                }
            }
            rank += 1;
            row += 1;
            if row == m.rows {
                break;
            }
        }
        rank
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m.get(r, col).is_zero())
                .ok_or_else(|| Error::Singular(format!("no pivot in column {col}")))?;
            m.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let pinv = m.get(col, col).inv().expect("nonzero pivot");
            for j in 0..n {
                let a = m.get(col, j) * &pinv;
                m.set(col, j, a);
                let b = inv.get(col, j) * &pinv;
                inv.set(col, j, b);
            }
            for r in 0..n {
                if r != col && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..n {
                        let a = m.get(r, j) - &(m.get(col, j) * &factor);
                        m.set(r, j, a);
                        let b = inv.get(r, j) - &(inv.get(col, j) * &factor);
                        inv.set(r, j, b);
                    }
                }
            }
        }
        Ok(inv)
    }

    /// Exact solve of `self * x = b`; returns None when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let n = self.cols;
        let mut m = self.clone();
        let mut rhs = b.to_vec();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut row = 0usize;
        for col in 0..n {
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            rhs.swap(row, p);
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for j in 0..n {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            rhs[row] = &rhs[row] * &inv;
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..n {
                        let v = m.get(r, j) - &(m.get(row, j) * &factor);
                        m.set(r, j, v);
                    }
                    rhs[r] = &rhs[r] - &(&rhs[row] * &factor);
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == m.rows {
                break;
            }
        }
        for r in row..m.rows {
            if !rhs[r].is_zero() {
                return None;
            }
        }
        let mut x = vec![Scalar::zero(); n];
        for (r, c) in pivots {
            x[c] = rhs[r].clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Dense multi-leg coefficient tensor; used for elements of iterated tensor
/// products such as B⊗B⊗V.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    pub shape: Vec<usize>,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zero(shape: Vec<usize>) -> Self {
        let len = shape.iter().product();
        Tensor {
            shape,
            data: vec![Scalar::zero(); len],
        }
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut flat = 0usize;
        for (i, &d) in idx.iter().zip(&self.shape) {
            debug_assert!(*i < d);
            flat = flat * d + i;
        }
        flat
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.flat_index(idx)]
    }

    pub fn add_at(&mut self, idx: &[usize], v: &Scalar) {
        let f = self.flat_index(idx);
        self.data[f] += v;
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let f = self.flat_index(idx);
        self.data[f] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape, other.shape);
        Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    /// Iterate over all multi-indices of the shape.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        index_iter(self.shape.clone())
    }
}

pub fn index_iter(shape: Vec<usize>) -> impl Iterator<Item = Vec<usize>> {
    let total: usize = shape.iter().product();
    (0..total).map(move |mut flat| {
        let mut idx = vec![0usize; shape.len()];
        for k in (0..shape.len()).rev() {
            idx[k] = flat % shape[k];
            flat /= shape[k];
        }
        idx
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2)],
            vec![s(3), s(5)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.mul(&m), Matrix::identity(2));
    }

    #[test]
    fn singular_detected() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(2)],
            vec![s(2), s(4)],
        ])
        .unwrap();
        assert!(m.inverse().is_err());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_consistency() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(0)],
            vec![s(0), s(1)],
            vec![s(1), s(1)],
        ])
        .unwrap();
        assert_eq!(m.solve(&[s(2), s(3), s(5)]), Some(vec![s(2), s(3)]));
        assert_eq!(m.solve(&[s(2), s(3), s(6)]), None);
    }

    #[test]
    fn kron_indexing() {
        let a = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(1), s(0)]]).unwrap();
        let id = Matrix::identity(2);
        let k = a.kron(&id);
        // (swap ⊗ id)(e_1⊗e_0) = e_0⊗e_0
        assert_eq!(k.get(0, 2), &s(1));
    }
}
