//! Dense exact linear algebra over the rationals: reduced row echelon form,
//! rank, kernel, row space, subspace intersection, and affine solving.
//!
//! Everything is deterministic: pivot rows are chosen by smallest bit
//! length (then lowest index), echelon bases are fully reduced with unit
//! pivots, so equal subspaces have equal bases.

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            // Smallest-bit-length pivot limits coefficient blowup and is
            // deterministic (ties broken by lowest row index).
            let mut best: Option<(u64, usize)> = None;
            for i in r..self.rows {
                let e = &self[(i, col)];
                if !e.is_zero() {
                    let bits = e.bit_len();
                    if best.map_or(true, |(b, _)| bits < b) {
                        best = Some((bits, i));
                    }
                }
            }
            let Some((_, pivot_row)) = best else { continue };
            self.swap_rows(r, pivot_row);
            let inv = self[(r, col)].recip();
            self.scale_row(r, &inv);
            for i in 0..self.rows {
                if i != r && !self[(i, col)].is_zero() {
                    let factor = self[(i, col)].clone();
                    self.sub_scaled_row(i, r, &factor, col);
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, f: &Rat) {
        for j in 0..self.cols {
            if !self[(i, j)].is_zero() {
                let v = &self[(i, j)] * f;
                self[(i, j)] = v;
            }
        }
    }

    /// row[i] -= f * row[src], starting at `from` (earlier columns already 0).
    fn sub_scaled_row(&mut self, i: usize, src: usize, f: &Rat, from: usize) {
        for j in from..self.cols {
            if !self[(src, j)].is_zero() {
                let v = &self[(i, j)] - &(f * &self[(src, j)]);
                self[(i, j)] = v;
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A linear subspace of ℚ^ambient, stored as a canonical reduced-echelon
/// basis so that equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rat>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace::from_spanning(ambient_dim, (0..ambient_dim).map(|i| unit(ambient_dim, i)))
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning<I: IntoIterator<Item = Vec<Rat>>>(ambient_dim: usize, vecs: I) -> Self {
        let rows: Vec<Vec<Rat>> = vecs.into_iter().collect();
        for v in &rows {
            assert_eq!(v.len(), ambient_dim, "vector length != ambient dimension");
        }
        if rows.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        let mut m = Matrix::from_rows(rows);
        m.reduce();
        let basis = (0..m.rows())
            .map(|i| m.row(i).to_vec())
            .filter(|r| r.iter().any(|e| !e.is_zero()))
            .collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        // Reduce v against the echelon basis.
        let mut v = v.to_vec();
        for b in &self.basis {
            let lead = b.iter().position(|e| !e.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = v[lead].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        v.iter().all(Rat::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        Ok(Subspace::from_spanning(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    /// Exact subspace intersection.  A vector lies in both spaces iff it is
    /// `aᵀA = bᵀB` for coefficient vectors `(a, b)` in the kernel of the
    /// map `(a, b) ↦ aᵀA - bᵀB`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        let k1 = self.dim();
        let k2 = other.dim();
        if k1 == 0 || k2 == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // Columns are the coefficient unknowns (a, b); rows the ambient coords.
        let mut m = Matrix::zero(self.ambient_dim, k1 + k2);
        for (j, b) in self.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                m[(i, j)] = b[i].clone();
            }
        }
        for (j, b) in other.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                m[(i, k1 + j)] = -&b[i];
            }
        }
        let ker = rref(&m).kernel;
        let vecs = ker.basis().iter().map(|coeffs| {
            let mut v = vec![Rat::zero(); self.ambient_dim];
            for (j, b) in self.basis.iter().enumerate() {
                if !coeffs[j].is_zero() {
                    for i in 0..self.ambient_dim {
                        v[i] += &coeffs[j] * &b[i];
                    }
                }
            }
            v
        });
        Ok(Subspace::from_spanning(self.ambient_dim, vecs))
    }
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Result of a reduced-row-echelon computation.
pub struct Rref {
    pub rank: usize,
    pub row_space: Subspace,
    pub kernel: Subspace,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form with exact kernel and row space.
///
/// `rank + kernel.dim() == m.cols()`, and `m · v = 0` exactly for every
/// kernel basis vector.
pub fn rref(m: &Matrix) -> Rref {
    let mut work = m.clone();
    let pivots = work.reduce();
    let rank = pivots.len();
    let row_space = Subspace {
        ambient_dim: m.cols(),
        basis: (0..rank).map(|i| work.row(i).to_vec()).collect(),
    };
    // Kernel: one basis vector per free column.
    let mut kernel_basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    for free in 0..m.cols() {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); m.cols()];
        v[free] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&work[(r, free)];
        }
        kernel_basis.push(v);
    }
    let kernel = Subspace::from_spanning(m.cols(), kernel_basis);
    Rref { rank, row_space, kernel, pivots }
}

/// Result of solving `coeff · x = rhs`.
pub struct AffineSolution {
    pub particular: Option<Vec<Rat>>,
    pub kernel: Subspace,
    pub rank: usize,
    pub augmented_rank: usize,
}

impl AffineSolution {
    pub fn solvable(&self) -> bool {
        self.particular.is_some()
    }
}

/// Solves the affine system exactly.  When unsolvable, the rank pair
/// `rank(coeff|rhs) > rank(coeff)` certifies it.
pub fn solve_affine(coeff: &Matrix, rhs: &[Rat]) -> AffineSolution {
    assert_eq!(coeff.rows(), rhs.len(), "rhs length != row count");
    let mut aug = Matrix::zero(coeff.rows(), coeff.cols() + 1);
    for i in 0..coeff.rows() {
        for j in 0..coeff.cols() {
            aug[(i, j)] = coeff[(i, j)].clone();
        }
        aug[(i, coeff.cols())] = rhs[i].clone();
    }
    let pivots = aug.reduce();
    let augmented_rank = pivots.len();
    let solvable = pivots.last().map_or(true, |&c| c < coeff.cols());
    let rank = if solvable { augmented_rank } else { augmented_rank - 1 };

    let kernel = rref(coeff).kernel;
    let particular = if solvable {
        let mut x = vec![Rat::zero(); coeff.cols()];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[(r, coeff.cols())].clone();
        }
        Some(x)
    } else {
        None
    };
    AffineSolution { particular, kernel, rank, augmented_rank }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(2);
        let out = rref(&m);
        assert_eq!(out.rank, 2);
        assert_eq!(out.kernel.dim(), 0);
    }

    #[test]
    fn rref_proportional_rows() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let out = rref(&m);
        assert_eq!(out.rank, 1);
        assert_eq!(out.kernel.dim(), 1);
        // Canonical kernel basis for x + 2y = 0, normalized on the free column.
        let k = &out.kernel.basis()[0];
        assert!(out.kernel.contains(&[r(-2), r(1)]));
        assert_eq!(m.mul_vec(k), vec![Rat::zero(); 2]);
    }

    #[test]
    fn rref_rank_kernel_sum() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let out = rref(&m);
        assert_eq!(out.rank + out.kernel.dim(), m.cols());
        for v in out.kernel.basis() {
            assert_eq!(m.mul_vec(v), vec![Rat::zero(); 3]);
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = Matrix::from_i64(&[&[1, 2, 3, 0], &[0, 1, 1, 1], &[1, 3, 4, 1]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rref_deterministic() {
        let m = Matrix::from_i64(&[&[2, 4, 1], &[3, 1, 0], &[5, 5, 1]]);
        let a = rref(&m);
        let b = rref(&m);
        assert_eq!(a.pivots, b.pivots);
        assert_eq!(a.row_space, b.row_space);
        assert_eq!(a.kernel, b.kernel);
    }

    #[test]
    fn intersect_coordinate_planes() {
        // span{e1,e2} ∩ span{e2,e3} = span{e2} in ℚ³.
        let s1 = Subspace::from_spanning(3, vec![vec![r(1), r(0), r(0)], vec![r(0), r(1), r(0)]]);
        let s2 = Subspace::from_spanning(3, vec![vec![r(0), r(1), r(0)], vec![r(0), r(0), r(1)]]);
        let i = s1.intersect(&s2).unwrap();
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[r(0), r(1), r(0)]));
    }

    #[test]
    fn intersect_idempotent() {
        let s = Subspace::from_spanning(3, vec![vec![r(1), r(2), r(3)], vec![r(0), r(1), r(1)]]);
        let i = s.intersect(&s).unwrap();
        assert_eq!(i, s);
    }

    #[test]
    fn intersect_dimension_mismatch() {
        let s1 = Subspace::zero(2);
        let s2 = Subspace::zero(3);
        assert!(matches!(s1.intersect(&s2), Err(Error::AmbientMismatch(2, 3))));
    }

    #[test]
    fn solve_affine_identity() {
        let sol = solve_affine(&Matrix::identity(2), &[r(1), r(2)]);
        assert_eq!(sol.particular, Some(vec![r(1), r(2)]));
        assert_eq!(sol.kernel.dim(), 0);
    }

    #[test]
    fn solve_affine_underdetermined() {
        let sol = solve_affine(&Matrix::from_i64(&[&[1, 1]]), &[r(0)]);
        assert_eq!(sol.particular, Some(vec![r(0), r(0)]));
        assert_eq!(sol.kernel.dim(), 1);
    }

    #[test]
    fn solve_affine_inconsistent_certificate() {
        let m = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        let sol = solve_affine(&m, &[r(1), r(3)]);
        assert!(!sol.solvable());
        assert!(sol.augmented_rank > sol.rank);
    }

    #[test]
    fn empty_matrix_rank_zero() {
        let m = Matrix::zero(0, 0);
        assert_eq!(rref(&m).rank, 0);
    }
}
