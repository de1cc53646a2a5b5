//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Every linear map in the crate (multiplications, comultiplications,
//! antipodes, twist maps, partial representations) is a [`Matrix`] acting on
//! column vectors. Tensor products use the row-major convention: the basis
//! vector `e_i ⊗ e_j` of `k^m ⊗ k^n` has index `i * n + j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A vector in `k^n`.
pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

/// Kronecker product of two vectors.
pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    let field = a.first().or(b.first()).map(Scalar::field);
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(if x.is_zero() || y.is_zero() {
                field.unwrap().zero()
            } else {
                x * y
            });
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vector>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: r,
            cols,
            field,
            data,
        }
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
            cols,
        )
    }

    /// Builds a matrix from its columns (each of length `rows`).
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    /// A single-row matrix.
    pub fn row_vector(field: FieldSpec, v: Vector) -> Self {
        let n = v.len();
        Self::from_rows(field, vec![v], n)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Nonzero entries of column `j` as `(row, value)` pairs.
    pub fn column_entries(&self, j: usize) -> Vec<(usize, Scalar)> {
        (0..self.rows)
            .filter_map(|i| {
                let v = self.get(i, j);
                (!v.is_zero()).then(|| (i, v.clone()))
            })
            .collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    fn check_shape(&self, other: &Matrix, what: &str) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch(format!("{what}: field mismatch")));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_shape(other, "mul")?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product for shapes already known to agree.
    pub fn compose(&self, other: &Matrix) -> Matrix {
        self.mul(other).expect("compose: shape mismatch")
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_shape(other, "add")?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("add: shapes differ".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: vec_add(&self.data, &other.data),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: vec_scale(c, &self.data),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "apply: vector length");
        let mut out = zero_vec(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.rows, "apply_left: vector length");
        let mut out = zero_vec(self.field, self.cols);
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                axpy(&mut out, x, self.row(i));
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_shape(other, "vstack")?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack: column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        Ok(self.transpose().vstack(&other.transpose())?.transpose())
    }

    /// Kronecker product `a ⊗ b` with the row-major index convention.
    pub fn tensor(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "tensor: field mismatch");
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * cols + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form, pivot columns and rank.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j);
                if !v.is_zero() {
                    let nv = v * &inv;
                    m.set(r, j, nv);
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..m.cols)
                .filter_map(|j| {
                    let v = m.get(r, j);
                    (!v.is_zero()).then(|| (j, v.clone()))
                })
                .collect();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let idx = i * m.cols + j;
                    m.data[idx] = &m.data[idx] - &(&f * v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: pivots.len(),
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null space `{x : Mx = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = zero_vec(self.field, self.cols);
            v[f] = self.field.one();
            for (r, &p) in pivots.iter().enumerate() {
                let a = matrix.get(r, f);
                if !a.is_zero() {
                    v[p] = -a;
                }
            }
            basis.push(v);
        }
        Subspace::span(self.field, self.cols, basis)
    }

    /// A particular solution `X` of `self · X = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row counts differ");
        let aug = self.hstack(rhs).expect("solve: field mismatch");
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.field, self.cols, rhs.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, matrix.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn solve_vec(&self, rhs: &[Scalar]) -> Option<Vector> {
        let b = Matrix::from_columns(self.field, self.rows, &[rhs.to_vec()]);
        self.solve(&b).map(|x| x.column(0))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Self::identity(self.field, self.rows);
        let x = self.solve(&id)?;
        (self.compose(&x) == id).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Column space as a subspace of `k^rows`.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.field, self.rows, self.transpose().row_vectors())
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Self::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.compose(self);
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Kronecker product, `a ⊗ b`.
pub fn tensor_matrix(a: &Matrix, b: &Matrix) -> Matrix {
    a.tensor(b)
}

/// Reduced row echelon form of `m` with pivots and rank.
pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}

/// A linear subspace of `k^n`, stored canonically as an RREF basis with no
/// zero rows. Two subspaces are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(field, 0, n),
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(field, n),
        }
    }

    pub fn span(field: FieldSpec, n: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, n);
        }
        let m = Matrix::from_rows(field, vectors, n);
        let Rref { matrix, rank, .. } = m.rref();
        let rows = matrix.row_vectors().into_iter().take(rank).collect();
        Subspace {
            ambient_dim: n,
            basis: Matrix::from_rows(field, rows, n),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                (0..self.ambient_dim)
                    .find(|&c| !self.basis.get(r, c).is_zero())
                    .expect("no zero rows")
            })
            .collect()
    }

    /// Coordinates of `v` in the RREF basis, when `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let coords: Vector = self.pivots().iter().map(|&p| v[p].clone()).collect();
        let back = self.basis.apply_left(&coords);
        (back.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Ok(Subspace::span(self.field(), self.ambient_dim, vs))
    }

    /// Intersection, via the kernel of the stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let field = self.field();
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(field, self.ambient_dim));
        }
        let stacked = self
            .basis
            .vstack(&other.basis.scale(&field.from_i64(-1)))?
            .transpose();
        let k = stacked.kernel();
        let vs = k
            .basis_vectors()
            .into_iter()
            .map(|coeffs| self.basis.apply_left(&coeffs[..self.dim()]))
            .collect();
        Ok(Subspace::span(field, self.ambient_dim, vs))
    }

    /// Matrix of a projection `k^n → k^n / self`, in coordinates given by
    /// the non-pivot positions.
    pub fn quotient_projection(&self) -> Matrix {
        let field = self.field();
        let pivots = self.pivots();
        let free: Vec<usize> = (0..self.ambient_dim).filter(|c| !pivots.contains(c)).collect();
        let mut q = Matrix::zeros(field, free.len(), self.ambient_dim);
        for (r, &f) in free.iter().enumerate() {
            q.set(r, f, field.one());
        }
        // v ↦ v - Σ v[p_i] b_i, read off on free coordinates
        for (i, &p) in pivots.iter().enumerate() {
            for (r, &f) in free.iter().enumerate() {
                let b = self.basis.get(i, f);
                if !b.is_zero() {
                    q.set(r, p, -b);
                }
            }
        }
        q
    }

    /// `{x : map(x) ∈ target}`.
    pub fn preimage(map: &Matrix, target: &Subspace) -> Result<Subspace> {
        if map.rows() != target.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "preimage: map has {} rows, target lives in k^{}",
                map.rows(),
                target.ambient_dim
            )));
        }
        Ok(target.quotient_projection().compose(map).kernel())
    }

    /// Image of the subspace under a linear map.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        let vs = self.basis_vectors().iter().map(|v| map.apply(v)).collect();
        Subspace::span(self.field(), map.rows(), vs)
    }

    /// `self ⊗ other` inside `k^{m·n}`.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let mut vs = Vec::with_capacity(self.dim() * other.dim());
        for a in self.basis_vectors() {
            for b in other.basis_vectors() {
                vs.push(kron_vec(&a, &b));
            }
        }
        Subspace::span(self.field(), self.ambient_dim * other.ambient_dim, vs)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in k^{}) ", self.dim(), self.ambient_dim)?;
        fmt::Debug::fmt(&self.basis, f)
    }
}

pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn preimage(map: &Matrix, target: &Subspace) -> Result<Subspace> {
    Subspace::preimage(map, target)
}

pub fn solve(m: &Matrix, rhs: &Matrix) -> Option<Matrix> {
    m.solve(rhs)
}

/// A vector in `k^{d_1} ⊗ ... ⊗ k^{d_r}` with its factor dimensions, used to
/// evaluate Sweedler-style composites one tensor factor at a time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    pub dims: Vec<usize>,
    pub data: Vector,
}

impl Tensor {
    pub fn new(dims: Vec<usize>, data: Vector) -> Self {
        assert_eq!(dims.iter().product::<usize>(), data.len(), "tensor size");
        Tensor { dims, data }
    }

    pub fn basis(field: FieldSpec, dims: &[usize], idx: &[usize]) -> Self {
        let n = dims.iter().product();
        let flat = flatten(dims, idx);
        Tensor {
            dims: dims.to_vec(),
            data: unit_vec(field, n, flat),
        }
    }

    pub fn from_vector(v: Vector) -> Self {
        Tensor {
            dims: vec![v.len()],
            data: v,
        }
    }

    pub fn otimes(&self, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend(&other.dims);
        Tensor {
            dims,
            data: kron_vec(&self.data, &other.data),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    fn field(&self) -> FieldSpec {
        self.data[0].field()
    }

    /// Applies `m` to the factors `start..start+len` (whose dimensions must
    /// multiply to `m.cols()`), replacing them by factors of dimensions
    /// `out_dims` (multiplying to `m.rows()`).
    pub fn apply(&self, start: usize, len: usize, m: &Matrix, out_dims: &[usize]) -> Tensor {
        let block: usize = self.dims[start..start + len].iter().product();
        assert_eq!(block, m.cols(), "tensor apply: block size");
        assert_eq!(out_dims.iter().product::<usize>(), m.rows(), "tensor apply: output dims");
        let left: usize = self.dims[..start].iter().product();
        let right: usize = self.dims[start + len..].iter().product();
        let mut dims = self.dims[..start].to_vec();
        dims.extend(out_dims);
        dims.extend(&self.dims[start + len..]);
        let field = self.field();
        let mut data = zero_vec(field, left * m.rows() * right);
        let columns: Vec<Vec<(usize, Scalar)>> = (0..m.cols()).map(|j| m.column_entries(j)).collect();
        for l in 0..left {
            for b in 0..block {
                for r in 0..right {
                    let x = &self.data[(l * block + b) * right + r];
                    if x.is_zero() {
                        continue;
                    }
                    for (i, c) in &columns[b] {
                        let idx = (l * m.rows() + i) * right + r;
                        data[idx] = &data[idx] + &(c * x);
                    }
                }
            }
        }
        Tensor { dims, data }
    }

    /// Applies `m` to a single factor.
    pub fn apply1(&self, at: usize, m: &Matrix) -> Tensor {
        self.apply(at, 1, m, &[m.rows()])
    }

    /// Reorders factors: factor `k` of the result is factor `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len(), "permutation length");
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut data = zero_vec(self.field(), self.data.len());
        let mut idx = vec![0; self.dims.len()];
        for (flat, x) in self.data.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            unflatten(&self.dims, flat, &mut idx);
            let new_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            data[flatten(&new_dims, &new_idx)] = x.clone();
        }
        Tensor {
            dims: new_dims,
            data,
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "tensor add dims");
        Tensor {
            dims: self.dims.clone(),
            data: vec_add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "tensor sub dims");
        Tensor {
            dims: self.dims.clone(),
            data: vec_sub(&self.data, &other.data),
        }
    }

    /// Merges all factors into one.
    pub fn flat(self) -> Vector {
        self.data
    }
}

pub fn flatten(dims: &[usize], idx: &[usize]) -> usize {
    dims.iter().zip(idx).fold(0, |acc, (d, i)| acc * d + i)
}

pub fn unflatten(dims: &[usize], mut flat: usize, out: &mut [usize]) {
    for k in (0..dims.len()).rev() {
        out[k] = flat % dims[k];
        flat /= dims[k];
    }
}

/// The linear map of a composite built with [`Tensor`] operations, assembled
/// column by column from basis inputs.
pub fn map_from_fn(
    field: FieldSpec,
    in_dims: &[usize],
    out_len: usize,
    f: impl Fn(Tensor) -> Tensor,
) -> Matrix {
    let n: usize = in_dims.iter().product();
    let mut cols = Vec::with_capacity(n);
    let mut idx = vec![0; in_dims.len()];
    for flat in 0..n {
        unflatten(in_dims, flat, &mut idx);
        let out = f(Tensor::basis(field, in_dims, &idx));
        assert_eq!(out.data.len(), out_len, "map_from_fn: output length");
        cols.push(out.data);
    }
    Matrix::from_columns(field, out_len, &cols)
}

/// Matrix of [`Tensor::permute`] on a tensor with factor sizes `dims`:
/// factor `k` of the output is factor `perm[k]` of the input.
pub fn perm_matrix(field: FieldSpec, dims: &[usize], perm: &[usize]) -> Matrix {
    let n: usize = dims.iter().product();
    let new_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Matrix::zeros(field, n, n);
    let mut idx = vec![0; dims.len()];
    for flat in 0..n {
        unflatten(dims, flat, &mut idx);
        let new_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        m.set(flatten(&new_dims, &new_idx), flat, field.one());
    }
    m
}

/// Kronecker product of several matrices, first factor slowest.
pub fn kron_all(field: FieldSpec, ms: &[&Matrix]) -> Matrix {
    ms.iter()
        .fold(Matrix::identity(field, 1), |acc, m| acc.tensor(m))
}

/// Permutation matrix of the tensor flip `k^a ⊗ k^b → k^b ⊗ k^a`.
pub fn flip_matrix(field: FieldSpec, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(field, a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            m.set(j * a + i, i * b + j, field.one());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(q(), 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);

        let z = Matrix::zeros(q(), 2, 4);
        assert_eq!(z.rref().rank, 0);
        assert!(z.rref().matrix.is_zero());

        let m = Matrix::from_i64(q(), &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(q(), 3).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(q(), 2, 3).kernel(), Subspace::full(q(), 3));
        let f2 = FieldSpec::prime(2).unwrap();
        let k = Matrix::from_i64(f2, &[&[1, 1]]).kernel();
        assert_eq!(k, Subspace::span(f2, 2, vec![vec![f2.one(), f2.one()]]));
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = vec![q().one(), q().zero()];
        let e12 = vec![q().one(), q().one()];
        let a = Subspace::span(q(), 2, vec![e1]);
        let b = Subspace::span(q(), 2, vec![e12]);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        assert_eq!(a.sum(&Subspace::zero(q(), 2)).unwrap(), a);
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(q(), 2));
        assert!(a.sum(&Subspace::zero(q(), 3)).is_err());
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(q(), 2);
        let b = Matrix::from_i64(q(), &[&[5], &[7]]);
        assert_eq!(id.solve(&b).unwrap(), b);
        assert!(Matrix::zeros(q(), 2, 2).solve(&b).is_none());
        let m = Matrix::from_i64(q(), &[&[1, 1], &[0, 1]]);
        let x = m.solve(&Matrix::from_i64(q(), &[&[3], &[1]])).unwrap();
        assert_eq!(x, Matrix::from_i64(q(), &[&[2], &[1]]));
    }

    #[test]
    fn tensor_examples() {
        let i2 = Matrix::identity(q(), 2);
        assert_eq!(i2.tensor(&i2), Matrix::identity(q(), 4));
        let a = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_i64(q(), &[&[0, 5], &[6, 7]]);
        let ab = a.tensor(&b);
        // (a⊗b)[(i,k),(j,l)] = a[i,j] b[k,l]
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(ab.get(i * 2 + k, j * 2 + l), &(a.get(i, j) * b.get(k, l)));
                    }
                }
            }
        }
        let x = vec![q().from_i64(1), q().from_i64(-2)];
        let y = vec![q().from_i64(3), q().from_i64(5)];
        assert_eq!(ab.apply(&kron_vec(&x, &y)), kron_vec(&a.apply(&x), &b.apply(&y)));
    }

    #[test]
    fn preimage_examples() {
        let m = Matrix::from_i64(q(), &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(Subspace::preimage(&m, &Subspace::full(q(), 2)).unwrap(), Subspace::full(q(), 3));
        assert_eq!(Subspace::preimage(&m, &Subspace::zero(q(), 2)).unwrap(), m.kernel());
        assert!(Subspace::preimage(&m, &Subspace::zero(q(), 3)).is_err());
    }

    #[test]
    fn tensor_apply_and_permute() {
        let f = q();
        let t = Tensor::basis(f, &[2, 3], &[1, 2]);
        let flipped = t.permute(&[1, 0]);
        assert_eq!(flipped, Tensor::basis(f, &[3, 2], &[2, 1]));
        assert_eq!(flip_matrix(f, 2, 3).apply(&t.data), flipped.data);
        let m = Matrix::from_i64(f, &[&[1, 1, 1]]);
        let s = t.apply1(1, &m);
        assert_eq!(s, Tensor::basis(f, &[2, 1], &[1, 0]));
    }
}
