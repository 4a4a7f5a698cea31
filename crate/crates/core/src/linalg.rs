//! Dense rational matrices and bilinear structure tensors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// A dense `rows × cols` rational matrix, row-major.
///
/// As a linear map it sends `x ∈ Q^cols` to `Mx ∈ Q^rows`; as a bilinear form
/// it pairs `e_a` (row) with `f_b` (column) to `M[a][b]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Shorthand for small integer matrices in builtin models.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Q::from_int(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(self.cols, other.rows));
        }
        let mut r = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        r.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(r)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(self.rows * self.cols, other.rows * other.cols));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&Q::from_int(-1)))
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !x[j].is_zero())
                    .map(|j| self.get(i, j) * &x[j])
                    .sum()
            })
            .collect()
    }

    /// `xᵀ M y`.
    pub fn bilinear(&self, x: &[Q], y: &[Q]) -> Q {
        let my = self.apply(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    pub fn rank(&self) -> usize {
        row_reduce(self.clone()).1.len()
    }

    /// A matrix `L` with `L·self = I` when `self` has full column rank.
    pub fn left_inverse(&self) -> Result<Matrix> {
        // (MᵀM)⁻¹Mᵀ
        let mt = self.transpose();
        let gram = mt.mul(self)?;
        let inv = gram.inverse().map_err(|_| Error::Invalid("columns are linearly dependent".into()))?;
        inv.mul(&mt)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(self.rows, self.cols));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Q::one());
        }
        let (red, pivots) = row_reduce(aug);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::DivisionByZero);
        }
        Ok(Matrix::from_fn(n, n, |i, j| red.get(i, n + j).clone()))
    }
}

/// Reduced row echelon form and the pivot columns.
fn row_reduce(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        for j in 0..m.cols {
            m.data.swap(row * m.cols + j, p * m.cols + j);
        }
        let inv = m.get(row, col).recip().expect("nonzero pivot");
        for j in 0..m.cols {
            let v = m.get(row, j) * &inv;
            m.set(row, j, v);
        }
        for r in 0..m.rows {
            if r == row || m.get(r, col).is_zero() {
                continue;
            }
            let f = m.get(r, col).clone();
            for j in 0..m.cols {
                let v = m.get(r, j) - &(&f * m.get(row, j));
                m.set(r, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Q>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// A bilinear map `U × V → W` given by `e_a ⋆ f_b = Σ_c T[a][b][c] g_c`.
///
/// Kept dense for lookups, with the nonzero entries cached for contractions.
#[derive(Clone, PartialEq, Eq)]
pub struct Bilinear {
    left: usize,
    right: usize,
    out: usize,
    dense: Vec<Q>,
    nonzero: Vec<(usize, usize, usize, Q)>,
}

impl Bilinear {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Bilinear {
            left,
            right,
            out,
            dense: vec![Q::zero(); left * right * out],
            nonzero: Vec::new(),
        }
    }

    pub fn from_fn(
        left: usize,
        right: usize,
        out: usize,
        mut f: impl FnMut(usize, usize, usize) -> Q,
    ) -> Self {
        let mut t = Bilinear::zero(left, right, out);
        for a in 0..left {
            for b in 0..right {
                for c in 0..out {
                    let v = f(a, b, c);
                    if !v.is_zero() {
                        t.dense[(a * right + b) * out + c] = v;
                    }
                }
            }
        }
        t.reindex();
        t
    }

    /// Builds from sparse `(a, b, c, value)` entries; repeated keys add up.
    pub fn from_entries(
        left: usize,
        right: usize,
        out: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Q)>,
    ) -> Self {
        let mut t = Bilinear::zero(left, right, out);
        for (a, b, c, v) in entries {
            assert!(a < left && b < right && c < out, "tensor index out of range");
            t.dense[(a * right + b) * out + c] += &v;
        }
        t.reindex();
        t
    }

    /// Action tensor from one `dim × dim` matrix per left basis element:
    /// `e_a ⋆ f_b = Σ_c M_a[c][b] f_c`.
    pub fn from_action_matrices(mats: &[Matrix]) -> Result<Self> {
        let left = mats.len();
        let dim = mats.first().map(Matrix::rows).unwrap_or(0);
        for m in mats {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Invalid("action matrices must be square and equal-sized".into()));
            }
        }
        Ok(Bilinear::from_fn(left, dim, dim, |a, b, c| mats[a].get(c, b).clone()))
    }

    fn reindex(&mut self) {
        self.nonzero.clear();
        for a in 0..self.left {
            for b in 0..self.right {
                for c in 0..self.out {
                    let v = &self.dense[(a * self.right + b) * self.out + c];
                    if !v.is_zero() {
                        self.nonzero.push((a, b, c, v.clone()));
                    }
                }
            }
        }
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Q {
        &self.dense[(a * self.right + b) * self.out + c]
    }

    pub fn nonzero(&self) -> &[(usize, usize, usize, Q)] {
        &self.nonzero
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero.is_empty()
    }

    /// `x ⋆ y` for coordinate vectors.
    pub fn apply(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut r = vec![Q::zero(); self.out];
        for (a, b, c, v) in &self.nonzero {
            if x[*a].is_zero() || y[*b].is_zero() {
                continue;
            }
            r[*c] += &(&(v * &x[*a]) * &y[*b]);
        }
        r
    }

    /// `e_a ⋆ f_b` as a vector.
    pub fn basis_product(&self, a: usize, b: usize) -> Vec<Q> {
        (0..self.out).map(|c| self.get(a, b, c).clone()).collect()
    }

    /// The matrix of `e_a ⋆ (·)` acting on the right factor.
    pub fn left_matrix(&self, a: usize) -> Matrix {
        Matrix::from_fn(self.out, self.right, |c, b| self.get(a, b, c).clone())
    }

    /// Nested `[a][b][c]` arrays, for serialization.
    pub fn to_nested(&self) -> Vec<Vec<Vec<Q>>> {
        (0..self.left)
            .map(|a| (0..self.right).map(|b| self.basis_product(a, b)).collect())
            .collect()
    }

    pub fn from_nested(nested: &[Vec<Vec<Q>>]) -> Result<Self> {
        let left = nested.len();
        let right = nested.first().map(Vec::len).unwrap_or(0);
        let out = nested
            .first()
            .and_then(|r| r.first())
            .map(Vec::len)
            .unwrap_or(0);
        for row in nested {
            if row.len() != right || row.iter().any(|v| v.len() != out) {
                return Err(Error::Invalid("ragged structure tensor".into()));
            }
        }
        Ok(Bilinear::from_fn(left, right, out, |a, b, c| nested[a][b][c].clone()))
    }

    /// A copy with one entry replaced, used to build deliberately broken data.
    pub fn with_entry(&self, a: usize, b: usize, c: usize, v: Q) -> Self {
        let mut t = self.clone();
        t.dense[(a * self.right + b) * self.out + c] = v;
        t.reindex();
        t
    }
}

impl fmt::Debug for Bilinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bilinear[{}x{}->{}]{:?}", self.left, self.right, self.out, self.nonzero)
    }
}

/// Coordinates of a vector.
pub fn basis_vector(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

pub fn vec_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Q], c: &Q) -> Vec<Q> {
    a.iter().map(|x| x * c).collect()
}

pub fn vec_is_zero(a: &[Q]) -> bool {
    a.iter().all(Q::is_zero)
}
