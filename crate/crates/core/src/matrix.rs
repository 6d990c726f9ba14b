//! Dense exact matrices and a sparse row eliminator.
//!
//! The dense type is the workhorse for action matrices and intertwiners;
//! rank, solving and kernels all route through the sparse eliminator so
//! the big, very sparse systems that arise from module axioms and bar
//! complexes stay cheap.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::scalar::{FieldSpec, Scalar};
use crate::Result;

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Dense matrix over one exact field, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "entry over {} in a {} matrix",
                        s.field(),
                        field
                    )));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut m = Matrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Column vector from a dense coefficient list.
    pub fn column(field: FieldSpec, v: &[Scalar]) -> Self {
        Matrix::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.sub(b);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.neg();
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(s);
        }
        out
    }

    /// Product, skipping zero entries of the left factor; the action
    /// matrices in this crate are close to permutations so this matters.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Matrix applied to a dense vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![self.field.zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() || v[k].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[k]));
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Kronecker product, left factor major: entry
    /// ((i*b.rows + r), (j*b.cols + c)) = a[i,j] * b[r,c].
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "kronecker over {} and {}",
                self.field, other.field
            )));
        }
        let mut out = Matrix::zero(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for r in 0..other.rows {
                    for c in 0..other.cols {
                        let b = other.get(r, c);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * other.rows + r, j * other.cols + c, a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn row_sparse(&self, i: usize) -> SparseVec {
        let mut out = Vec::new();
        for j in 0..self.cols {
            let v = self.get(i, j);
            if !v.is_zero() {
                out.push((j, v.clone()));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut elim = Eliminator::new(self.field, self.cols);
        for i in 0..self.rows {
            elim.add_row(self.row_sparse(i));
        }
        elim.rank()
    }

    /// Exact solve A x = b (b may have several columns). Returns the
    /// particular solution together with a kernel basis, or None when the
    /// system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<LinearSolution>> {
        if self.field != b.field {
            return Err(Error::FieldMismatch("solve over mixed fields".into()));
        }
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "A has {} rows, b has {}",
                self.rows, b.rows
            )));
        }
        let n = self.cols;
        let mut elim = Eliminator::new(self.field, n + b.cols);
        for i in 0..self.rows {
            let mut row = self.row_sparse(i);
            for t in 0..b.cols {
                let v = b.get(i, t);
                if !v.is_zero() {
                    row.push((n + t, v.clone()));
                }
            }
            elim.add_row(row);
        }
        if elim.pivots.keys().any(|&c| c >= n) {
            return Ok(None);
        }
        let mut particular = Matrix::zero(self.field, n, b.cols);
        for (&pc, row) in elim.pivots.iter() {
            for &(c, ref v) in row.iter() {
                if c >= n {
                    particular.set(pc, c - n, v.clone());
                }
            }
        }
        let kernel = elim
            .kernel_basis_within(n)
            .into_iter()
            .map(|v| Matrix::column(self.field, &v))
            .collect();
        Ok(Some(LinearSolution { particular, kernel }))
    }

    /// Basis of the null space as column vectors.
    pub fn kernel(&self) -> Vec<Matrix> {
        let mut elim = Eliminator::new(self.field, self.cols);
        for i in 0..self.rows {
            elim.add_row(self.row_sparse(i));
        }
        elim.kernel_basis_within(self.cols)
            .into_iter()
            .map(|v| Matrix::column(self.field, &v))
            .collect()
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Result<Option<Matrix>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of non-square".into()));
        }
        let sol = self.solve(&Matrix::identity(self.field, self.rows))?;
        Ok(match sol {
            Some(s) if s.kernel.is_empty() => Some(s.particular),
            _ => None,
        })
    }
}

/// Particular solution plus kernel basis of an exact linear system.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub particular: Matrix,
    pub kernel: Vec<Matrix>,
}

/// Incremental sparse Gauss-Jordan eliminator. Pivot rows are kept fully
/// reduced against each other, so kernels and solutions read off directly.
pub struct Eliminator {
    field: FieldSpec,
    ncols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

fn sparse_get(row: &SparseVec, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |e| e.0)
        .ok()
        .map(|i| &row[i].1)
}

/// r -= c * p, both sorted sparse rows.
fn sparse_axpy(r: &SparseVec, c: &Scalar, p: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        if j >= p.len() || (i < r.len() && r[i].0 < p[j].0) {
            out.push(r[i].clone());
            i += 1;
        } else if i >= r.len() || p[j].0 < r[i].0 {
            let v = c.mul(&p[j].1).neg();
            if !v.is_zero() {
                out.push((p[j].0, v));
            }
            j += 1;
        } else {
            let v = r[i].1.sub(&c.mul(&p[j].1));
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Eliminator {
    pub fn new(field: FieldSpec, ncols: usize) -> Self {
        Eliminator {
            field,
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces a row against the current pivots without inserting it.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        loop {
            let hit = row
                .iter()
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            match hit {
                None => return row,
                Some((c, v)) => {
                    row = sparse_axpy(&row, &v, &self.pivots[&c]);
                }
            }
        }
    }

    /// Inserts a row; returns true when it was independent of the span.
    pub fn add_row(&mut self, row: SparseVec) -> bool {
        let row = self.reduce(row);
        let Some((lead, lv)) = row.first().cloned() else {
            return false;
        };
        let inv = lv.inv().expect("nonzero lead");
        let normalized: SparseVec = row.iter().map(|(c, v)| (*c, v.mul(&inv))).collect();
        // keep earlier pivot rows reduced at the new pivot column
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        for pc in cols {
            let coeff = sparse_get(&self.pivots[&pc], lead).cloned();
            if let Some(coeff) = coeff {
                let updated = sparse_axpy(&self.pivots[&pc], &coeff, &normalized);
                self.pivots.insert(pc, updated);
            }
        }
        self.pivots.insert(lead, normalized);
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, row: SparseVec) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Kernel basis of the system restricted to the first `n` columns;
    /// pivots in columns >= n (e.g. appended right-hand sides) are an error
    /// for this use and must be checked by the caller beforehand.
    fn kernel_basis_within(&self, n: usize) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for j in 0..n {
            if self.pivots.contains_key(&j) {
                continue;
            }
            let mut v = vec![self.field.zero(); n];
            v[j] = self.field.one();
            for (&pc, row) in self.pivots.iter() {
                if pc >= n {
                    continue;
                }
                if let Some(e) = sparse_get(row, j) {
                    v[pc] = e.neg();
                }
            }
            out.push(v);
        }
        out
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.kernel_basis_within(self.ncols)
    }
}

/// Rank of a sparse row iterator without materializing a dense matrix.
pub fn sparse_rank(
    field: FieldSpec,
    ncols: usize,
    rows: impl IntoIterator<Item = SparseVec>,
) -> usize {
    let mut elim = Eliminator::new(field, ncols);
    for r in rows {
        elim.add_row(r);
    }
    elim.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn qm(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            Q,
            rows.iter()
                .map(|r| r.iter().map(|&v| Q.from_i64(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(Matrix::zero(Q, 3, 3).rank(), 0);
        assert_eq!(Matrix::identity(Q, 5).rank(), 5);
        assert_eq!(qm(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn solve_identity_and_zero() {
        let b = qm(&[&[3], &[-2]]);
        let sol = Matrix::identity(Q, 2).solve(&b).unwrap().unwrap();
        assert_eq!(sol.particular, b);
        assert!(sol.kernel.is_empty());

        let z = Matrix::zero(Q, 2, 2);
        let sol = z.solve(&Matrix::zero(Q, 2, 1)).unwrap().unwrap();
        assert!(sol.particular.is_zero());
        assert_eq!(sol.kernel.len(), 2);
    }

    #[test]
    fn solve_rank_deficient() {
        let a = qm(&[&[1, 1], &[1, 1]]);
        let b = qm(&[&[1], &[1]]);
        let sol = a.solve(&b).unwrap().unwrap();
        // any particular solution must actually solve the system
        assert_eq!(a.mul(&sol.particular), b);
        assert_eq!(sol.kernel.len(), 1);
        for k in &sol.kernel {
            assert!(a.mul(k).is_zero());
        }
        // inconsistent right-hand side
        let bad = qm(&[&[1], &[2]]);
        assert!(a.solve(&bad).unwrap().is_none());
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        use rand_core::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let rows = 1 + (rng.next_u32() % 4) as usize;
            let cols = 1 + (rng.next_u32() % 4) as usize;
            let m = Matrix::from_fn(Q, rows, cols, |_, _| {
                Q.from_i64((rng.next_u32() % 5) as i64 - 2)
            });
            assert_eq!(m.rank() + m.kernel().len(), cols);
        }
    }

    #[test]
    fn kronecker_identity_and_entries() {
        let i2 = Matrix::identity(Q, 2);
        let i3 = Matrix::identity(Q, 3);
        assert_eq!(i2.kronecker(&i3).unwrap(), Matrix::identity(Q, 6));

        let a = qm(&[&[1, 2], &[3, 4]]);
        let b = qm(&[&[0, 5], &[6, 7]]);
        let k = a.kronecker(&b).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for r in 0..2 {
                    for c in 0..2 {
                        assert_eq!(
                            k.get(i * 2 + r, j * 2 + c),
                            &a.get(i, j).mul(b.get(r, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_rank_is_multiplicative() {
        use rand_core::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..25 {
            let a = Matrix::from_fn(Q, 2, 2, |_, _| Q.from_i64((rng.next_u32() % 3) as i64 - 1));
            let b = Matrix::from_fn(Q, 2, 2, |_, _| Q.from_i64((rng.next_u32() % 3) as i64 - 1));
            let k = a.kronecker(&b).unwrap();
            assert_eq!(k.rank(), a.rank() * b.rank());
        }
    }

    #[test]
    fn kronecker_is_associative() {
        use rand_core::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut mk = |r: usize, c: usize| {
            Matrix::from_fn(Q, r, c, |_, _| Q.from_i64((rng.next_u32() % 5) as i64 - 2))
        };
        let a = mk(2, 3);
        let b = mk(1, 2);
        let c = mk(2, 2);
        let left = a.kronecker(&b).unwrap().kronecker(&c).unwrap();
        let right = a.kronecker(&b.kronecker(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn inverse_round_trip() {
        let a = qm(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap().unwrap();
        assert!(a.mul(&inv).is_identity());
        let singular = qm(&[&[1, 1], &[1, 1]]);
        assert!(singular.inverse().unwrap().is_none());
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = Matrix::identity(Q, 2);
        let b = Matrix::identity(FieldSpec::Prime(5), 2);
        assert!(matches!(a.kronecker(&b), Err(Error::FieldMismatch(_))));
    }
}
