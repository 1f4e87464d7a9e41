//! The order unit space model and pointwise region classification.
//!
//! A space is a validated pair (state matrix `F`, unit `e`): every row is
//! normalized so `f_i(e) = 1`, the rows have full column rank (the cone
//! `V⁺ = {v : Fv ≥ 0}` is proper), and no row is a convex combination of
//! the others. Under those invariants the state space is exactly the
//! convex hull of the rows, so the order unit norm has the closed form
//! `‖v‖ = max_i |f_i(v)|` and every "there is a state such that ..."
//! condition is decidable by a row scan or a small LP.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::lp::{lp_solve, LpOutcome, LpProblem};
use crate::polytope::Polytope;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderUnitSpace<T> {
    states: Matrix<T>,
    unit: Vector<T>,
}

/// Exact classification of one vector against the positive cone, the order
/// interval `[0, e]`, the canopy (positive, norm one), the periphery (both
/// `v` and `e − v` in the canopy) and the cone boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionReport<T> {
    pub in_positive_cone: bool,
    pub in_order_interval: bool,
    pub norm: T,
    pub in_canopy: bool,
    pub in_periphery: bool,
    pub on_cone_boundary: bool,
    /// Lowest row index with f_i(v) = 0, when one exists.
    pub zero_state_index: Option<usize>,
    /// Lowest row index with f_j(v) = 1, when one exists.
    pub unit_state_index: Option<usize>,
}

impl<T: Scalar> OrderUnitSpace<T> {
    /// Validate and normalize a candidate state matrix and unit.
    ///
    /// Rows are scaled so that each evaluates the unit to 1; a row with a
    /// non-positive value at the unit means the unit is not interior and is
    /// an error. Rows that are convex combinations of the others are
    /// removed. Rank below the dimension leaves the cone improper and is an
    /// error.
    pub fn new(states: Matrix<T>, unit: Vector<T>) -> Result<Self> {
        let d = unit.dim();
        if d == 0 {
            return Err(Error::shape("dimension must be at least 1"));
        }
        if states.rows() == 0 {
            return Err(Error::shape("at least one state row is required"));
        }
        if states.cols() != d {
            return Err(Error::shape(format!(
                "state matrix has {} columns, unit has dim {d}",
                states.cols()
            )));
        }
        // Normalize rows at the unit.
        let mut rows: Vec<Vector<T>> = Vec::with_capacity(states.rows());
        for i in 0..states.rows() {
            let row = states.row(i);
            let at_unit = row.dot(&unit);
            if !at_unit.is_positive() {
                return Err(Error::UnitNotInterior {
                    row: i,
                    value: at_unit.to_string(),
                });
            }
            rows.push(row.scale(&(T::one() / at_unit)));
        }
        // Drop rows lying in the convex hull of the others. With all rows
        // normalized at the unit, nonnegative combinations are convex
        // combinations, so the survivors are exactly the extreme states.
        let mut k = 0;
        while k < rows.len() {
            if rows.len() > 1 && in_convex_hull_of_others(&rows, k) {
                rows.remove(k);
            } else {
                k += 1;
            }
        }
        let states = Matrix::from_rows(&rows, d);
        let rank = states.rank();
        if rank < d {
            return Err(Error::ConeNotProper { rank, dim: d });
        }
        Ok(OrderUnitSpace { states, unit })
    }

    pub fn dim(&self) -> usize {
        self.unit.dim()
    }

    pub fn state_count(&self) -> usize {
        self.states.rows()
    }

    pub fn states(&self) -> &Matrix<T> {
        &self.states
    }

    pub fn state(&self, i: usize) -> Vector<T> {
        self.states.row(i)
    }

    pub fn unit(&self) -> &Vector<T> {
        &self.unit
    }

    /// All state evaluations F·v.
    pub fn evaluate(&self, v: &Vector<T>) -> Vector<T> {
        self.states.apply(v)
    }

    /// Order unit norm: max_i |f_i(v)|, which equals
    /// inf{α ≥ 0 : αe ± v ∈ V⁺} because the state space is conv(rows).
    pub fn norm(&self, v: &Vector<T>) -> T {
        self.evaluate(v).max_abs()
    }

    pub fn is_positive(&self, v: &Vector<T>) -> bool {
        self.evaluate(v).iter().all(|x| !x.is_negative())
    }

    /// 0 ≤ v ≤ e in the cone order.
    pub fn in_order_interval(&self, v: &Vector<T>) -> bool {
        self.is_positive(v) && self.is_positive(&(&self.unit - v))
    }

    pub fn classify(&self, v: &Vector<T>) -> RegionReport<T> {
        assert_eq!(v.dim(), self.dim(), "classify: dim mismatch");
        let values = self.evaluate(v);
        let in_positive_cone = values.iter().all(|x| !x.is_negative());
        let norm = values.max_abs();
        let gap = self.evaluate(&(&self.unit - v));
        let in_order_interval = in_positive_cone && gap.iter().all(|x| !x.is_negative());
        let zero_state_index = (0..values.dim()).find(|&i| values[i].is_zero());
        let unit_state_index = (0..values.dim()).find(|&i| values[i].is_one());
        let in_canopy = in_positive_cone && norm.is_one();
        let on_cone_boundary = in_positive_cone && zero_state_index.is_some();
        // v and e − v both positive with norm one: equivalently v ∈ [0, e]
        // with a vanishing state and a state attaining one.
        let in_periphery =
            in_order_interval && zero_state_index.is_some() && unit_state_index.is_some();
        RegionReport {
            in_positive_cone,
            in_order_interval,
            norm,
            in_canopy,
            in_periphery,
            on_cone_boundary,
            zero_state_index,
            unit_state_index,
        }
    }

    pub fn is_peripheral(&self, v: &Vector<T>) -> bool {
        self.classify(v).in_periphery
    }

    pub fn in_canopy(&self, v: &Vector<T>) -> bool {
        let values = self.evaluate(v);
        values.iter().all(|x| !x.is_negative()) && values.max_abs().is_one()
    }

    /// The order interval [0, e] as a polytope {Fv ≥ 0, F(e−v) ≥ 0}.
    pub fn order_interval_polytope(&self) -> Polytope<T> {
        let d = self.dim();
        let m = self.state_count();
        let mut a = Matrix::zeros(0, d);
        let mut b = Vec::with_capacity(2 * m);
        for i in 0..m {
            a.push_row(&self.state(i));
            b.push(T::zero());
        }
        for i in 0..m {
            a.push_row(&-&self.state(i));
            b.push(-T::one());
        }
        Polytope::from_inequalities(d, a, Vector::new(b)).expect("consistent shapes")
    }

    /// Is there a state f (a convex combination of the rows) with
    /// f(v_t) = target_t for every listed condition? Returns the state
    /// as a functional when one exists.
    pub fn state_satisfying(&self, conditions: &[(&Vector<T>, T)]) -> Option<Vector<T>> {
        let m = self.state_count();
        let mut p = LpProblem::feasibility(m);
        p.all_nonnegative();
        p.add_eq(Vector::ones(m), T::one()).expect("shape");
        for (v, target) in conditions {
            let evals = self.evaluate(v);
            p.add_eq(evals, target.clone()).expect("shape");
        }
        match lp_solve(&p) {
            LpOutcome::Optimal { point, .. } => Some(self.states.transpose().apply(&point)),
            _ => None,
        }
    }

    /// Norm via the defining LP inf{α : αe ± v ∈ V⁺}. Used as the
    /// independent cross-check of [`Self::norm`].
    pub fn norm_by_lp(&self, v: &Vector<T>) -> T {
        let values = self.evaluate(v);
        let mut p = LpProblem::minimize(Vector::new(vec![T::one()]));
        p.set_lower(0, T::zero()).expect("shape");
        for i in 0..self.state_count() {
            // α·f_i(e) ± f_i(v) ≥ 0 with f_i(e) = 1.
            p.add_ge(Vector::new(vec![T::one()]), -values[i].clone())
                .expect("shape");
            p.add_ge(Vector::new(vec![T::one()]), values[i].clone())
                .expect("shape");
        }
        match lp_solve(&p) {
            LpOutcome::Optimal { value, .. } => value,
            other => unreachable!("norm LP is feasible and bounded: {other:?}"),
        }
    }
}

fn in_convex_hull_of_others<T: Scalar>(rows: &[Vector<T>], k: usize) -> bool {
    let others: Vec<&Vector<T>> = rows
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, r)| r)
        .collect();
    let n = others.len();
    let dim = rows[k].dim();
    let mut p = LpProblem::feasibility(n);
    p.all_nonnegative();
    p.add_eq(Vector::ones(n), T::one()).expect("shape");
    for c in 0..dim {
        let row = Vector::new(others.iter().map(|r| r[c].clone()).collect());
        p.add_eq(row, rows[k][c].clone()).expect("shape");
    }
    lp_solve(&p).is_feasible()
}

/// Convenience constructor mirroring the validation contract of
/// [`OrderUnitSpace::new`].
pub fn make_space<T: Scalar>(states: Matrix<T>, unit: Vector<T>) -> Result<OrderUnitSpace<T>> {
    OrderUnitSpace::new(states, unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::linf_space;
    use crate::{Rat, RatMatrix, RatVector};
    use num_traits::{One, Signed, Zero};

    fn rv(entries: &[i64]) -> RatVector {
        RatVector::from_ints(entries)
    }

    #[test]
    fn identity_states_make_coordinate_spaces() {
        let s = make_space(RatMatrix::identity(2), rv(&[1, 1])).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.state_count(), 2);
        let s3 = make_space(RatMatrix::identity(3), rv(&[1, 1, 1])).unwrap();
        assert_eq!(s3.state_count(), 3);
    }

    #[test]
    fn unit_must_be_interior() {
        let states = RatMatrix::from_int_rows(&[&[1, 0], &[-1, 0]], 2);
        let err = make_space(states, rv(&[1, 0])).unwrap_err();
        assert!(matches!(err, Error::UnitNotInterior { row: 1, .. }));
    }

    #[test]
    fn rank_deficient_states_are_rejected() {
        let states = RatMatrix::from_int_rows(&[&[1, 0], &[2, 0]], 2);
        let err = make_space(states, rv(&[1, 1])).unwrap_err();
        assert!(matches!(err, Error::ConeNotProper { rank: 1, dim: 2 }));
    }

    #[test]
    fn rows_are_normalized_and_deduplicated() {
        // Second row is twice the first; third is a genuine second state.
        let states = RatMatrix::from_int_rows(&[&[1, 0], &[2, 0], &[0, 3]], 2);
        let s = make_space(states, rv(&[1, 1])).unwrap();
        assert_eq!(s.state_count(), 2);
        for i in 0..2 {
            assert!(s.state(i).dot(s.unit()).is_one());
        }
    }

    #[test]
    fn redundant_interior_row_is_removed() {
        // (1, 1)/2 is the midpoint of the two coordinate states.
        let states = RatMatrix::from_int_rows(&[&[1, 0], &[0, 1], &[1, 1]], 2);
        let s = make_space(states, rv(&[1, 1])).unwrap();
        assert_eq!(s.state_count(), 2);
    }

    #[test]
    fn norm_is_max_absolute_state_value() {
        let s = linf_space::<Rat>(2).unwrap();
        assert_eq!(s.norm(&rv(&[3, -2])), Rat::from_int(3));
        assert_eq!(s.norm(s.unit()), Rat::one());
        assert!(s.norm(&rv(&[0, 0])).is_zero());

        let s3 = linf_space::<Rat>(3).unwrap();
        // e − 3(e − (1,0,0)) = (1, −2, −2)
        assert_eq!(s3.norm(&rv(&[1, -2, -2])), Rat::two());
    }

    #[test]
    fn norm_agrees_with_lp_route() {
        let s = make_space(
            RatMatrix::from_int_rows(&[&[2, 1], &[1, 3], &[-1, 9]], 2),
            rv(&[1, 1]),
        )
        .unwrap();
        for v in [rv(&[1, 2]), rv(&[-3, 5]), rv(&[0, 0]), rv(&[7, -7])] {
            assert_eq!(s.norm(&v), s.norm_by_lp(&v), "at {v}");
        }
    }

    #[test]
    fn classify_periphery_in_linf3() {
        let s = linf_space::<Rat>(3).unwrap();
        let v = RatVector::new(vec![Rat::zero(), Rat::half(), Rat::one()]);
        let r = s.classify(&v);
        assert!(r.in_periphery);
        assert!(r.in_canopy && r.on_cone_boundary);
        assert_eq!(r.zero_state_index, Some(0));
        assert_eq!(r.unit_state_index, Some(2));
    }

    #[test]
    fn classify_interior_point() {
        let s = linf_space::<Rat>(3).unwrap();
        let v = RatVector::new(vec![Rat::half(); 3]);
        let r = s.classify(&v);
        assert!(!r.in_canopy && r.in_order_interval);
        assert_eq!(r.norm, Rat::half());
        assert!(!r.in_periphery && !r.on_cone_boundary);
    }

    #[test]
    fn unit_is_canopy_but_not_periphery() {
        let s = linf_space::<Rat>(2).unwrap();
        let r = s.classify(&rv(&[1, 1]));
        assert!(r.in_canopy);
        assert!(!r.in_periphery);
        assert_eq!(r.zero_state_index, None);
    }

    #[test]
    fn state_satisfying_interpolates() {
        let s = linf_space::<Rat>(3).unwrap();
        let u = rv(&[1, 0, 0]);
        let f = s.state_satisfying(&[(&u, Rat::one())]).unwrap();
        assert!(f.dot(&u).is_one());
        assert!(f.dot(s.unit()).is_one());
        assert!(s
            .state_satisfying(&[(&u, Rat::one()), (&u, Rat::zero())])
            .is_none());
    }
}
