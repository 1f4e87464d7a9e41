//! Exact linear programming by the two-phase simplex method.
//!
//! The pivot rule is Bland's anti-cycling rule with lowest-index
//! tie-breaking throughout, so solving the same problem twice yields the
//! identical status, optimum and witness. No tolerances appear anywhere:
//! a status of `Optimal` or `Infeasible` is an exact statement.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// min/max c·x subject to
///   a_eq · x  = b_eq,
///   a_ge · x ≥ b_ge,
///   x_j ≥ lower[j] where a lower bound is present (x_j free otherwise).
#[derive(Debug, Clone)]
pub struct LpProblem<T> {
    sense: Sense,
    objective: Vector<T>,
    a_eq: Matrix<T>,
    b_eq: Vector<T>,
    a_ge: Matrix<T>,
    b_ge: Vector<T>,
    lower: Vec<Option<T>>,
}

impl<T: Scalar> LpProblem<T> {
    /// New problem over `objective.dim()` free variables with no constraints.
    pub fn new(sense: Sense, objective: Vector<T>) -> Self {
        let n = objective.dim();
        LpProblem {
            sense,
            objective,
            a_eq: Matrix::zeros(0, n),
            b_eq: Vector::zeros(0),
            a_ge: Matrix::zeros(0, n),
            b_ge: Vector::zeros(0),
            lower: vec![None; n],
        }
    }

    pub fn minimize(objective: Vector<T>) -> Self {
        Self::new(Sense::Min, objective)
    }

    pub fn maximize(objective: Vector<T>) -> Self {
        Self::new(Sense::Max, objective)
    }

    /// Feasibility problem: zero objective over `n` free variables.
    pub fn feasibility(n: usize) -> Self {
        Self::minimize(Vector::zeros(n))
    }

    pub fn num_vars(&self) -> usize {
        self.objective.dim()
    }

    pub fn add_eq(&mut self, row: Vector<T>, rhs: T) -> Result<&mut Self> {
        if row.dim() != self.num_vars() {
            return Err(Error::shape(format!(
                "equality row has dim {}, expected {}",
                row.dim(),
                self.num_vars()
            )));
        }
        self.a_eq.push_row(&row);
        let mut b = self.b_eq.clone().into_entries();
        b.push(rhs);
        self.b_eq = Vector::new(b);
        Ok(self)
    }

    pub fn add_ge(&mut self, row: Vector<T>, rhs: T) -> Result<&mut Self> {
        if row.dim() != self.num_vars() {
            return Err(Error::shape(format!(
                "inequality row has dim {}, expected {}",
                row.dim(),
                self.num_vars()
            )));
        }
        self.a_ge.push_row(&row);
        let mut b = self.b_ge.clone().into_entries();
        b.push(rhs);
        self.b_ge = Vector::new(b);
        Ok(self)
    }

    /// a·x ≤ rhs, stored as −a·x ≥ −rhs.
    pub fn add_le(&mut self, row: Vector<T>, rhs: T) -> Result<&mut Self> {
        self.add_ge(-&row, -rhs)
    }

    pub fn set_lower(&mut self, var: usize, bound: T) -> Result<&mut Self> {
        if var >= self.num_vars() {
            return Err(Error::shape(format!(
                "variable {var} out of range (n = {})",
                self.num_vars()
            )));
        }
        self.lower[var] = Some(bound);
        Ok(self)
    }

    /// Give every variable the lower bound 0.
    pub fn all_nonnegative(&mut self) -> &mut Self {
        for b in &mut self.lower {
            *b = Some(T::zero());
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<T> {
    /// `point` is feasible and attains `value`.
    Optimal { value: T, point: Vector<T> },
    /// `ray` is a feasible direction along which the objective improves
    /// without bound.
    Unbounded { ray: Vector<T> },
    Infeasible,
}

impl<T: Scalar> LpOutcome<T> {
    pub fn optimal(&self) -> Option<(&T, &Vector<T>)> {
        match self {
            LpOutcome::Optimal { value, point } => Some((value, point)),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

/// How an original variable maps into standard-form columns.
#[derive(Debug, Clone)]
enum VarMap<T> {
    /// x_j = lower + z_col
    Shifted { col: usize, lower: T },
    /// x_j = z_pos − z_neg
    Split { pos: usize, neg: usize },
}

/// Dense simplex tableau over standard form  min c·z, A z = b, z ≥ 0.
struct Tableau<T> {
    /// rows[r] has `ncols` coefficient entries followed by the rhs.
    rows: Vec<Vec<T>>,
    ncols: usize,
    basis: Vec<usize>,
}

impl<T: Scalar> Tableau<T> {
    fn rhs(&self, r: usize) -> &T {
        &self.rows[r][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = T::one() / self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            for j in 0..=self.ncols {
                let delta = factor.clone() * self.rows[r][j].clone();
                let x = self.rows[i][j].clone() - delta;
                self.rows[i][j] = x;
            }
        }
        self.basis[r] = c;
    }

    /// Reduced cost of column c for cost vector `cost`.
    fn reduced_cost(&self, cost: &[T], c: usize) -> T {
        let mut acc = cost[c].clone();
        for (r, row) in self.rows.iter().enumerate() {
            if !row[c].is_zero() {
                acc = acc - cost[self.basis[r]].clone() * row[c].clone();
            }
        }
        acc
    }

    fn objective_value(&self, cost: &[T]) -> T {
        let mut acc = T::zero();
        for (r, _) in self.rows.iter().enumerate() {
            acc += cost[self.basis[r]].clone() * self.rhs(r).clone();
        }
        acc
    }

    /// Run simplex iterations with Bland's rule. `eligible` limits the
    /// columns allowed to enter. Returns the entering column when the
    /// problem is unbounded in that direction, or None at optimality.
    fn bland_iterate(&mut self, cost: &[T], eligible: &[bool]) -> Option<usize> {
        loop {
            let mut entering = None;
            for c in 0..self.ncols {
                if eligible[c] && self.reduced_cost(cost, c).is_negative() {
                    entering = Some(c);
                    break;
                }
            }
            let Some(c) = entering else {
                return None;
            };
            // Ratio test: smallest rhs/coeff over positive coefficients,
            // ties broken by the smallest basic variable index.
            let mut best: Option<(T, usize, usize)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][c].is_positive() {
                    let ratio = self.rhs(r).clone() / self.rows[r][c].clone();
                    let replace = match &best {
                        None => true,
                        Some((t, var, _)) => {
                            ratio < *t || (ratio == *t && self.basis[r] < *var)
                        }
                    };
                    if replace {
                        best = Some((ratio, self.basis[r], r));
                    }
                }
            }
            match best {
                Some((_, _, r)) => self.pivot(r, c),
                None => return Some(c),
            }
        }
    }
}

/// Solve the problem exactly. See [`LpOutcome`] for the contract.
pub fn lp_solve<T: Scalar>(problem: &LpProblem<T>) -> LpOutcome<T> {
    let n = problem.num_vars();

    // Standard-form columns for the original variables.
    let mut var_map = Vec::with_capacity(n);
    let mut ncols = 0;
    for j in 0..n {
        match &problem.lower[j] {
            Some(l) => {
                var_map.push(VarMap::Shifted {
                    col: ncols,
                    lower: l.clone(),
                });
                ncols += 1;
            }
            None => {
                var_map.push(VarMap::Split {
                    pos: ncols,
                    neg: ncols + 1,
                });
                ncols += 2;
            }
        }
    }
    let slack_start = ncols;
    ncols += problem.a_ge.rows();

    let nrows = problem.a_eq.rows() + problem.a_ge.rows();

    // Internal sense is minimization.
    let mut cost = vec![T::zero(); ncols];
    for j in 0..n {
        let c = match problem.sense {
            Sense::Min => problem.objective[j].clone(),
            Sense::Max => -problem.objective[j].clone(),
        };
        match &var_map[j] {
            VarMap::Shifted { col, .. } => cost[*col] = c,
            VarMap::Split { pos, neg } => {
                cost[*pos] = c.clone();
                cost[*neg] = -c;
            }
        }
    }
    // Objective offset contributed by the lower-bound shifts.
    let mut offset = T::zero();
    for j in 0..n {
        if let VarMap::Shifted { lower, .. } = &var_map[j] {
            let c = match problem.sense {
                Sense::Min => problem.objective[j].clone(),
                Sense::Max => -problem.objective[j].clone(),
            };
            offset += c * lower.clone();
        }
    }

    // Assemble rows: first equalities, then inequalities with slack
    // (a·x − s = b).
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(nrows);
    let emit_row = |coeffs: &Vector<T>, rhs: &T, slack: Option<usize>| -> Vec<T> {
        let mut row = vec![T::zero(); ncols + 1];
        let mut shifted_rhs = rhs.clone();
        for j in 0..n {
            let a = coeffs[j].clone();
            if a.is_zero() {
                continue;
            }
            match &var_map[j] {
                VarMap::Shifted { col, lower } => {
                    row[*col] = a.clone();
                    shifted_rhs = shifted_rhs - a * lower.clone();
                }
                VarMap::Split { pos, neg } => {
                    row[*pos] = a.clone();
                    row[*neg] = -a;
                }
            }
        }
        if let Some(s) = slack {
            row[s] = -T::one();
        }
        row[ncols] = shifted_rhs;
        row
    };
    for r in 0..problem.a_eq.rows() {
        rows.push(emit_row(&problem.a_eq.row(r), &problem.b_eq[r], None));
    }
    for r in 0..problem.a_ge.rows() {
        rows.push(emit_row(
            &problem.a_ge.row(r),
            &problem.b_ge[r],
            Some(slack_start + r),
        ));
    }

    // Phase 1: artificial variable per row, minimize their sum.
    let art_start = ncols;
    let total = ncols + rows.len();
    let mut tab_rows = Vec::with_capacity(rows.len());
    for (r, mut row) in rows.into_iter().enumerate() {
        if row[ncols].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        let rhs = row.pop().expect("row has rhs");
        row.resize(total, T::zero());
        row[art_start + r] = T::one();
        row.push(rhs);
        tab_rows.push(row);
    }
    let mut tab = Tableau {
        basis: (art_start..total).collect(),
        rows: tab_rows,
        ncols: total,
    };
    let mut phase1_cost = vec![T::zero(); total];
    for c in art_start..total {
        phase1_cost[c] = T::one();
    }
    let eligible = vec![true; total];
    let unbounded = tab.bland_iterate(&phase1_cost, &eligible);
    debug_assert!(unbounded.is_none(), "phase 1 objective is bounded below");
    if !tab.objective_value(&phase1_cost).is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining artificials out of the basis; rows that cannot be
    // pivoted are redundant and get dropped.
    let mut r = 0;
    while r < tab.rows.len() {
        if tab.basis[r] >= art_start {
            match (0..art_start).find(|&c| !tab.rows[r][c].is_zero()) {
                Some(c) => tab.pivot(r, c),
                None => {
                    tab.rows.remove(r);
                    tab.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // Phase 2 over the original columns only.
    let mut phase2_cost = cost.clone();
    phase2_cost.resize(total, T::zero());
    let mut eligible = vec![true; total];
    for e in eligible.iter_mut().skip(art_start) {
        *e = false;
    }
    if let Some(entering) = tab.bland_iterate(&phase2_cost, &eligible) {
        // Feasible improving ray in standard coordinates.
        let mut dir = vec![T::zero(); ncols];
        dir[entering] = T::one();
        for (r, row) in tab.rows.iter().enumerate() {
            if tab.basis[r] < ncols {
                dir[tab.basis[r]] = -row[entering].clone();
            }
        }
        let mut ray = Vector::zeros(n);
        for j in 0..n {
            ray[j] = match &var_map[j] {
                VarMap::Shifted { col, .. } => dir[*col].clone(),
                VarMap::Split { pos, neg } => dir[*pos].clone() - dir[*neg].clone(),
            };
        }
        return LpOutcome::Unbounded { ray };
    }

    // Optimal: read the standard solution back into original variables.
    let mut z = vec![T::zero(); total];
    for (r, &b) in tab.basis.iter().enumerate() {
        z[b] = tab.rhs(r).clone();
    }
    let mut point = Vector::zeros(n);
    for j in 0..n {
        point[j] = match &var_map[j] {
            VarMap::Shifted { col, lower } => lower.clone() + z[*col].clone(),
            VarMap::Split { pos, neg } => z[*pos].clone() - z[*neg].clone(),
        };
    }
    let internal = tab.objective_value(&phase2_cost) + offset;
    let value = match problem.sense {
        Sense::Min => internal,
        Sense::Max => -internal,
    };
    debug_assert_eq!(problem.objective.dot(&point), value);
    LpOutcome::Optimal { value, point }
}
