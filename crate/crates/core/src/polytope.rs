//! Polytopes given by equalities and inequalities, with exact feasibility,
//! membership and vertex enumeration.
//!
//! Vertex enumeration homogenizes the system into a cone one dimension up
//! and reads vertices off the extreme rays with positive last coordinate.
//! Rays with last coordinate zero are recession directions, so the same
//! pass decides boundedness; an unbounded feasible region is an error,
//! never a partial list.

use crate::cone::extreme_rays;
use crate::error::{Error, Result};
use crate::linalg::{rank_of_rows, Matrix, Vector};
use crate::lp::{lp_solve, LpOutcome, LpProblem};
use crate::scalar::Scalar;

/// {x : a_eq·x = b_eq, a_ge·x ≥ b_ge}
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope<T> {
    dim: usize,
    a_eq: Matrix<T>,
    b_eq: Vector<T>,
    a_ge: Matrix<T>,
    b_ge: Vector<T>,
}

impl<T: Scalar> Polytope<T> {
    pub fn new(
        dim: usize,
        a_eq: Matrix<T>,
        b_eq: Vector<T>,
        a_ge: Matrix<T>,
        b_ge: Vector<T>,
    ) -> Result<Self> {
        if a_eq.cols() != dim || a_ge.cols() != dim {
            return Err(Error::shape(format!(
                "constraint width {}/{} does not match dim {dim}",
                a_eq.cols(),
                a_ge.cols()
            )));
        }
        if a_eq.rows() != b_eq.dim() || a_ge.rows() != b_ge.dim() {
            return Err(Error::shape(
                "constraint matrix and rhs row counts differ".to_string(),
            ));
        }
        Ok(Polytope {
            dim,
            a_eq,
            b_eq,
            a_ge,
            b_ge,
        })
    }

    /// Polytope with inequality constraints only.
    pub fn from_inequalities(dim: usize, a_ge: Matrix<T>, b_ge: Vector<T>) -> Result<Self> {
        Self::new(dim, Matrix::zeros(0, dim), Vector::zeros(0), a_ge, b_ge)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> (&Matrix<T>, &Vector<T>) {
        (&self.a_eq, &self.b_eq)
    }

    pub fn inequalities(&self) -> (&Matrix<T>, &Vector<T>) {
        (&self.a_ge, &self.b_ge)
    }

    pub fn add_eq(&mut self, row: Vector<T>, rhs: T) -> Result<()> {
        if row.dim() != self.dim {
            return Err(Error::shape("equality row width mismatch"));
        }
        self.a_eq.push_row(&row);
        let mut b = self.b_eq.clone().into_entries();
        b.push(rhs);
        self.b_eq = Vector::new(b);
        Ok(())
    }

    pub fn add_ge(&mut self, row: Vector<T>, rhs: T) -> Result<()> {
        if row.dim() != self.dim {
            return Err(Error::shape("inequality row width mismatch"));
        }
        self.a_ge.push_row(&row);
        let mut b = self.b_ge.clone().into_entries();
        b.push(rhs);
        self.b_ge = Vector::new(b);
        Ok(())
    }

    pub fn contains(&self, x: &Vector<T>) -> bool {
        assert_eq!(x.dim(), self.dim, "membership query dim mismatch");
        let eq = self.a_eq.apply(x);
        for i in 0..eq.dim() {
            if eq[i] != self.b_eq[i] {
                return false;
            }
        }
        let ge = self.a_ge.apply(x);
        for i in 0..ge.dim() {
            if ge[i] < self.b_ge[i] {
                return false;
            }
        }
        true
    }

    /// Some feasible point, or None when the region is empty.
    pub fn feasible_point(&self) -> Option<Vector<T>> {
        let mut p = LpProblem::feasibility(self.dim);
        for r in 0..self.a_eq.rows() {
            p.add_eq(self.a_eq.row(r), self.b_eq[r].clone())
                .expect("validated shape");
        }
        for r in 0..self.a_ge.rows() {
            p.add_ge(self.a_ge.row(r), self.b_ge[r].clone())
                .expect("validated shape");
        }
        match lp_solve(&p) {
            LpOutcome::Optimal { point, .. } => Some(point),
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded { .. } => unreachable!("zero objective is bounded"),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_point().is_none()
    }

    /// Homogenization rows over (x, t): inequalities become [a | −b],
    /// equalities contribute both signs, plus t ≥ 0.
    fn homogenization_rows(&self) -> Vec<Vector<T>> {
        let lift = |row: &Vector<T>, rhs: &T| -> Vector<T> {
            let mut entries = row.as_slice().to_vec();
            entries.push(-rhs.clone());
            Vector::new(entries)
        };
        let mut rows = Vec::new();
        for r in 0..self.a_ge.rows() {
            rows.push(lift(&self.a_ge.row(r), &self.b_ge[r]));
        }
        for r in 0..self.a_eq.rows() {
            let up = lift(&self.a_eq.row(r), &self.b_eq[r]);
            rows.push(-&up);
            rows.push(up);
        }
        let mut t_axis = Vector::zeros(self.dim + 1);
        t_axis[self.dim] = T::one();
        rows.push(t_axis);
        rows
    }

    /// Exact vertex set, sorted lexicographically. Errors with
    /// [`Error::Unbounded`] when the region is feasible but unbounded.
    /// An empty region yields an empty list.
    pub fn vertices(&self) -> Result<Vec<Vector<T>>> {
        let span = extreme_rays(self.dim + 1, &self.homogenization_rows());
        let mut verts = Vec::new();
        let mut has_recession_ray = false;
        for r in &span.rays {
            let t = r[self.dim].clone();
            if t.is_positive() {
                let scaled = r.scale(&(T::one() / t));
                verts.push(Vector::new(scaled.as_slice()[..self.dim].to_vec()));
            } else {
                has_recession_ray = true;
            }
        }
        if verts.is_empty() {
            return Ok(Vec::new());
        }
        if has_recession_ray || !span.lineality.is_empty() {
            return Err(Error::Unbounded);
        }
        verts.sort();
        debug_assert!(verts.iter().all(|v| self.contains(v)));
        Ok(verts)
    }

    /// Is `x` a vertex: feasible with d linearly independent active
    /// constraints.
    pub fn is_vertex(&self, x: &Vector<T>) -> bool {
        if !self.contains(x) {
            return false;
        }
        let mut active: Vec<Vector<T>> = self.a_eq.row_iter().collect();
        for r in 0..self.a_ge.rows() {
            if self.a_ge.row(r).dot(x) == self.b_ge[r] {
                active.push(self.a_ge.row(r));
            }
        }
        if active.is_empty() {
            return self.dim == 0;
        }
        rank_of_rows(&active, self.dim) == self.dim
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::{One, Signed, Zero};

    type V = Vector<Rat>;
    type M = Matrix<Rat>;

    /// 0 ≤ x_i ≤ 1 in the given dimension.
    fn unit_box(dim: usize) -> Polytope<Rat> {
        let mut a = M::zeros(0, dim);
        let mut b = Vec::new();
        for i in 0..dim {
            a.push_row(&V::basis(dim, i));
            b.push(Rat::zero());
            a.push_row(&-&V::basis(dim, i));
            b.push(-Rat::one());
        }
        Polytope::from_inequalities(dim, a, V::new(b)).unwrap()
    }

    #[test]
    fn unit_square_vertices() {
        let verts = unit_box(2).vertices().unwrap();
        assert_eq!(
            verts,
            vec![
                V::from_ints(&[0, 0]),
                V::from_ints(&[0, 1]),
                V::from_ints(&[1, 0]),
                V::from_ints(&[1, 1]),
            ]
        );
    }

    #[test]
    fn simplex_vertices() {
        // x ≥ 0, x1 + x2 = 1
        let mut p = unit_box(2);
        p.add_eq(V::from_ints(&[1, 1]), Rat::one()).unwrap();
        let verts = p.vertices().unwrap();
        assert_eq!(verts, vec![V::from_ints(&[0, 1]), V::from_ints(&[1, 0])]);
    }

    #[test]
    fn cube_has_eight_binary_vertices() {
        let verts = unit_box(3).vertices().unwrap();
        assert_eq!(verts.len(), 8);
        for v in &verts {
            for i in 0..3 {
                assert!(v[i].is_zero() || v[i].is_one());
            }
        }
    }

    #[test]
    fn unbounded_region_is_an_error() {
        // x ≥ 0 in the plane: feasible but unbounded.
        let mut a = M::zeros(0, 2);
        a.push_row(&V::basis(2, 0));
        a.push_row(&V::basis(2, 1));
        let p =
            Polytope::from_inequalities(2, a, V::zeros(2)).unwrap();
        assert!(matches!(p.vertices(), Err(Error::Unbounded)));
    }

    #[test]
    fn empty_region_yields_no_vertices() {
        let mut p = unit_box(1);
        p.add_eq(V::from_ints(&[1]), Rat::two()).unwrap();
        assert!(p.is_empty());
        assert_eq!(p.vertices().unwrap(), Vec::<V>::new());
    }

    #[test]
    fn vertices_satisfy_vertex_test() {
        let p = unit_box(2);
        for v in p.vertices().unwrap() {
            assert!(p.is_vertex(&v));
        }
        assert!(!p.is_vertex(&V::new(vec![Rat::half(), Rat::half()])));
        assert!(!p.is_vertex(&V::new(vec![Rat::half(), Rat::one()])));
    }
}
