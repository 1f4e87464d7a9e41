//! Dense exact vectors, matrices and Gaussian elimination.
//!
//! All entries live in an exact [`Scalar`]; there is no pivoting for
//! numerical stability because there is no rounding. Pivot choice is the
//! first nonzero entry in row-major order, which keeps every routine
//! deterministic.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<T> {
    entries: Vec<T>,
}

impl<T: Scalar> Vector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Vector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector {
            entries: vec![T::zero(); dim],
        }
    }

    /// Standard basis vector e_i.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dim {dim}");
        let mut v = Self::zeros(dim);
        v[i] = T::one();
        v
    }

    pub fn ones(dim: usize) -> Self {
        Vector {
            entries: vec![T::one(); dim],
        }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector {
            entries: entries.iter().map(|&n| T::from_int(n)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.entries.iter()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &Self) -> T {
        assert_eq!(
            self.dim(),
            other.dim(),
            "dot of mismatched dims {} vs {}",
            self.dim(),
            other.dim()
        );
        let mut acc = T::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc += a.clone() * b.clone();
        }
        acc
    }

    pub fn scale(&self, k: &T) -> Self {
        Vector {
            entries: self.entries.iter().map(|x| x.clone() * k.clone()).collect(),
        }
    }

    pub fn max_abs(&self) -> T {
        let mut m = T::zero();
        for x in &self.entries {
            let a = x.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    /// True when `other` is a strictly positive scalar multiple of `self`.
    pub fn is_positive_multiple_of(&self, other: &Self) -> bool {
        if self.dim() != other.dim() || self.is_zero() || other.is_zero() {
            return false;
        }
        // Locate a nonzero coordinate of `other` to fix the ratio.
        let i = other.entries.iter().position(|x| !x.is_zero()).unwrap();
        if self[i].is_zero() {
            return false;
        }
        let ratio = self[i].clone() / other[i].clone();
        if !ratio.is_positive() {
            return false;
        }
        *self == other.scale(&ratio)
    }

    /// Canonical representative of the ray through this vector: scaled so
    /// the first nonzero entry is ±1 with positive leading sign preserved.
    /// Zero vectors are returned unchanged.
    pub fn ray_canonical(&self) -> Self {
        match self.entries.iter().find(|x| !x.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let k = T::one() / lead.abs();
                self.scale(&k)
            }
        }
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.entries[i]
    }
}

impl<T> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.entries[i]
    }
}

impl<T: Scalar> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, rhs: &Vector<T>) -> Vector<T> {
        assert_eq!(self.dim(), rhs.dim(), "add of mismatched dims");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: &Vector<T>) -> Vector<T> {
        assert_eq!(self.dim(), rhs.dim(), "sub of mismatched dims");
        Vector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        Vector {
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }
}

impl<T: Scalar> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Row-major dense matrix. A matrix may have zero rows (an empty constraint
/// system) but its column count is always explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "matrix data length {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vector<T>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.dim(), cols, "row width mismatch");
            data.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_int_rows(rows: &[&[i64]], cols: usize) -> Self {
        let vecs: Vec<Vector<T>> = rows.iter().map(|r| Vector::from_ints(r)).collect();
        Self::from_rows(&vecs, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vector<T> {
        assert!(i < self.rows);
        Vector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn row_slice(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = Vector<T>> + '_ {
        (0..self.rows).map(|i| self.row(i))
    }

    pub fn push_row(&mut self, row: &Vector<T>) {
        assert_eq!(row.dim(), self.cols, "row width mismatch");
        self.data.extend(row.iter().cloned());
        self.rows += 1;
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &Vector<T>) -> Vector<T> {
        assert_eq!(
            v.dim(),
            self.cols,
            "apply of mismatched dims {} vs {}",
            v.dim(),
            self.cols
        );
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = T::zero();
            for (a, b) in self.row_slice(i).iter().zip(v.iter()) {
                acc += a.clone() * b.clone();
            }
            out.push(acc);
        }
        Vector::new(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.clone().echelonize().0
    }

    /// In-place forward elimination to row echelon form. Returns the rank
    /// and the pivot column indices in order.
    fn echelonize(mut self) -> (usize, Vec<usize>, Matrix<T>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = T::one() / self[(r, c)].clone();
            for j in c..self.cols {
                let x = self[(r, j)].clone() * inv.clone();
                self[(r, j)] = x;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let delta = factor.clone() * self[(r, j)].clone();
                        let x = self[(i, j)].clone() - delta;
                        self[(i, j)] = x;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (r, pivots, self)
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

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul<&Vector<T>> for &Matrix<T> {
    type Output = Vector<T>;
    fn mul(self, v: &Vector<T>) -> Vector<T> {
        self.apply(v)
    }
}

/// Outcome of solving A x = b exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve<T> {
    /// No solution.
    Inconsistent,
    /// Exactly one solution.
    Unique(Vector<T>),
    /// Affine family: one particular solution plus a nullspace basis.
    Underdetermined {
        particular: Vector<T>,
        nullspace: Vec<Vector<T>>,
    },
}

/// Solve A x = b by Gauss-Jordan elimination on [A | b].
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &Vector<T>) -> Solve<T> {
    assert_eq!(a.rows(), b.dim(), "solve: rhs length mismatch");
    let mut aug = Matrix::zeros(a.rows(), a.cols() + 1);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, a.cols())] = b[i].clone();
    }
    let (_, pivots, red) = aug.echelonize();
    // A pivot in the rhs column means 0 = 1 somewhere.
    if pivots.contains(&a.cols()) {
        return Solve::Inconsistent;
    }
    let mut particular = Vector::zeros(a.cols());
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = red[(r, a.cols())].clone();
    }
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Solve::Unique(particular);
    }
    let mut nullspace = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = Vector::zeros(a.cols());
        v[f] = T::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -red[(r, f)].clone();
        }
        nullspace.push(v);
    }
    Solve::Underdetermined {
        particular,
        nullspace,
    }
}

/// Basis of the nullspace of A.
pub fn nullspace<T: Scalar>(a: &Matrix<T>) -> Vec<Vector<T>> {
    match solve(a, &Vector::zeros(a.rows())) {
        Solve::Unique(_) => Vec::new(),
        Solve::Underdetermined { nullspace, .. } => nullspace,
        Solve::Inconsistent => unreachable!("homogeneous system is always consistent"),
    }
}

/// Rank of the matrix whose rows are the given vectors.
pub fn rank_of_rows<T: Scalar>(rows: &[Vector<T>], cols: usize) -> usize {
    Matrix::from_rows(rows, cols).rank()
}

/// Canonical (reduced row echelon) basis of the row space of the given
/// vectors. Deterministic: a pure function of the spanned subspace.
pub fn row_basis<T: Scalar>(rows: &[Vector<T>], cols: usize) -> Vec<Vector<T>> {
    let (rank, _, red) = Matrix::from_rows(rows, cols).echelonize();
    (0..rank).map(|r| red.row(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::{One, Signed, Zero};

    type V = Vector<Rat>;
    type M = Matrix<Rat>;

    #[test]
    fn matrix_shape_is_checked() {
        assert!(M::new(2, 2, vec![Rat::zero(); 3]).is_err());
        assert!(M::new(2, 2, vec![Rat::zero(); 4]).is_ok());
    }

    #[test]
    fn rank_and_apply() {
        let m = M::from_int_rows(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]], 3);
        assert_eq!(m.rank(), 2);
        let v = m.apply(&V::from_ints(&[1, 2, 3]));
        assert_eq!(v, V::from_ints(&[4, 5, 9]));
    }

    #[test]
    fn solve_unique() {
        let m = M::from_int_rows(&[&[2, 1], &[1, -1]], 2);
        let b = V::from_ints(&[5, 1]);
        assert_eq!(solve(&m, &b), Solve::Unique(V::from_ints(&[2, 1])));
    }

    #[test]
    fn solve_inconsistent() {
        let m = M::from_int_rows(&[&[1, 1], &[2, 2]], 2);
        let b = V::from_ints(&[1, 3]);
        assert_eq!(solve(&m, &b), Solve::Inconsistent);
    }

    #[test]
    fn solve_underdetermined_reconstructs() {
        let m = M::from_int_rows(&[&[1, 1, 1]], 3);
        let b = V::from_ints(&[6]);
        match solve(&m, &b) {
            Solve::Underdetermined {
                particular,
                nullspace,
            } => {
                assert_eq!(m.apply(&particular), b);
                assert_eq!(nullspace.len(), 2);
                for n in &nullspace {
                    assert!(m.apply(n).is_zero());
                }
            }
            other => panic!("expected underdetermined, got {other:?}"),
        }
    }

    #[test]
    fn ray_canonical_and_multiples() {
        let v = V::from_ints(&[0, 2, -4]);
        assert_eq!(v.ray_canonical(), V::new(vec![
            Rat::zero(),
            Rat::one(),
            -Rat::two(),
        ]));
        let w = V::from_ints(&[0, 3, -6]);
        assert!(w.is_positive_multiple_of(&v));
        let neg = V::from_ints(&[0, -3, 6]);
        assert!(!neg.is_positive_multiple_of(&v));
    }
}
