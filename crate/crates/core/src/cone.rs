//! Polyhedral cone representations and exact conversion between them.
//!
//! A cone arrives either as a generator list (V-representation) or as a
//! system of homogeneous inequalities (H-representation). Conversion runs
//! the double description method: halfspaces are inserted one at a time
//! against a (lineality basis, ray list) pair, and after every insertion
//! rays that are positive combinations of the others are eliminated by
//! exact LP. Output generators are canonically scaled and sorted, so the
//! conversion is a pure function of the input set.

use crate::error::{Error, Result};
use crate::linalg::{row_basis, Matrix, Vector};
use crate::lp::{lp_solve, LpProblem};
use crate::scalar::Scalar;

/// Cone as the set of nonnegative combinations of finitely many generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeVRep<T> {
    dim: usize,
    generators: Vec<Vector<T>>,
}

/// Cone as {x : row·x ≥ 0 for every row}. Zero rows are rejected; an empty
/// row list describes the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeHRep<T> {
    dim: usize,
    rows: Vec<Vector<T>>,
}

impl<T: Scalar> ConeVRep<T> {
    pub fn new(dim: usize, generators: Vec<Vector<T>>) -> Result<Self> {
        for (k, g) in generators.iter().enumerate() {
            if g.dim() != dim {
                return Err(Error::shape(format!(
                    "generator {k} has dim {}, expected {dim}",
                    g.dim()
                )));
            }
            if g.is_zero() {
                return Err(Error::ZeroVector(format!("generator {k}")));
            }
        }
        Ok(ConeVRep { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vector<T>] {
        &self.generators
    }

    /// Exact membership: is x a nonnegative combination of the generators?
    pub fn contains(&self, x: &Vector<T>) -> bool {
        assert_eq!(x.dim(), self.dim, "membership query dim mismatch");
        if x.is_zero() {
            return true;
        }
        if self.generators.is_empty() {
            return false;
        }
        let m = self.generators.len();
        let mut p = LpProblem::feasibility(m);
        p.all_nonnegative();
        for i in 0..self.dim {
            let row = Vector::new(
                self.generators.iter().map(|g| g[i].clone()).collect(),
            );
            p.add_eq(row, x[i].clone()).expect("row dims consistent");
        }
        lp_solve(&p).is_feasible()
    }
}

impl<T: Scalar> ConeHRep<T> {
    pub fn new(dim: usize, rows: Vec<Vector<T>>) -> Result<Self> {
        for (k, r) in rows.iter().enumerate() {
            if r.dim() != dim {
                return Err(Error::shape(format!(
                    "row {k} has dim {}, expected {dim}",
                    r.dim()
                )));
            }
            if r.is_zero() {
                return Err(Error::ZeroVector(format!("inequality row {k}")));
            }
        }
        Ok(ConeHRep { dim, rows })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vector<T>] {
        &self.rows
    }

    pub fn contains(&self, x: &Vector<T>) -> bool {
        assert_eq!(x.dim(), self.dim, "membership query dim mismatch");
        self.rows.iter().all(|r| !r.dot(x).is_negative())
    }
}

/// Generators of a cone split into a lineality basis and proper rays:
/// the cone is span(lineality) + cone(rays).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaySpan<T> {
    pub lineality: Vec<Vector<T>>,
    pub rays: Vec<Vector<T>>,
}

impl<T: Scalar> RaySpan<T> {
    fn whole_space(dim: usize) -> Self {
        RaySpan {
            lineality: (0..dim).map(|i| Vector::basis(dim, i)).collect(),
            rays: Vec::new(),
        }
    }

    /// All generators, lineality contributing both signs.
    pub fn generators(&self) -> Vec<Vector<T>> {
        let mut out = Vec::with_capacity(self.rays.len() + 2 * self.lineality.len());
        for l in &self.lineality {
            out.push(l.clone());
            out.push(-l);
        }
        out.extend(self.rays.iter().cloned());
        out
    }
}

/// Is `target` in span(lineality) + cone(rays \ {skip})?
fn ray_redundant<T: Scalar>(
    dim: usize,
    lineality: &[Vector<T>],
    rays: &[Vector<T>],
    skip: usize,
) -> bool {
    let others: Vec<&Vector<T>> = rays
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != skip)
        .map(|(_, r)| r)
        .collect();
    let nvars = lineality.len() + others.len();
    if nvars == 0 {
        return rays[skip].is_zero();
    }
    let mut p = LpProblem::feasibility(nvars);
    for k in lineality.len()..nvars {
        p.set_lower(k, T::zero()).expect("index in range");
    }
    for i in 0..dim {
        let mut row = Vec::with_capacity(nvars);
        for l in lineality {
            row.push(l[i].clone());
        }
        for r in &others {
            row.push(r[i].clone());
        }
        p.add_eq(Vector::new(row), rays[skip][i].clone())
            .expect("row dims consistent");
    }
    lp_solve(&p).is_feasible()
}

/// Canonicalize, deduplicate and LP-reduce a ray list modulo lineality.
fn reduce_rays<T: Scalar>(dim: usize, lineality: &[Vector<T>], rays: Vec<Vector<T>>) -> Vec<Vector<T>> {
    let mut canon: Vec<Vector<T>> = Vec::new();
    for r in rays {
        if r.is_zero() {
            continue;
        }
        let c = r.ray_canonical();
        if !canon.contains(&c) {
            canon.push(c);
        }
    }
    let mut k = 0;
    while k < canon.len() {
        if ray_redundant(dim, lineality, &canon, k) {
            canon.remove(k);
        } else {
            k += 1;
        }
    }
    canon
}

/// Intersect span(lineality) + cone(rays) with the halfspace {x : h·x ≥ 0}.
fn insert_halfspace<T: Scalar>(dim: usize, state: RaySpan<T>, h: &Vector<T>) -> RaySpan<T> {
    let RaySpan { lineality, rays } = state;

    // If some lineality vector leaves the hyperplane, it turns into a ray
    // and everything else is projected onto {h = 0} along it.
    if let Some(p) = lineality.iter().position(|l| !h.dot(l).is_zero()) {
        let mut pivot = lineality[p].clone();
        if h.dot(&pivot).is_negative() {
            pivot = -&pivot;
        }
        let hp = h.dot(&pivot);
        let project = |v: &Vector<T>| -> Vector<T> {
            let t = h.dot(v) / hp.clone();
            v - &pivot.scale(&t)
        };
        let new_lineality: Vec<Vector<T>> = lineality
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != p)
            .map(|(_, l)| project(l))
            .collect();
        let mut new_rays: Vec<Vector<T>> = rays.iter().map(|r| project(r)).collect();
        new_rays.push(pivot);
        let new_lineality = row_basis(&new_lineality, dim);
        let new_rays = reduce_rays(dim, &new_lineality, new_rays);
        return RaySpan {
            lineality: new_lineality,
            rays: new_rays,
        };
    }

    // Lineality already lies in {h = 0}: split rays by sign and combine
    // opposite pairs on the hyperplane.
    let mut pos = Vec::new();
    let mut zero = Vec::new();
    let mut neg = Vec::new();
    for r in rays {
        let s = h.dot(&r);
        if s.is_positive() {
            pos.push(r);
        } else if s.is_zero() {
            zero.push(r);
        } else {
            neg.push(r);
        }
    }
    let mut new_rays = Vec::with_capacity(pos.len() + zero.len() + pos.len() * neg.len());
    for p in &pos {
        for n in &neg {
            let hp = h.dot(p);
            let hn = -h.dot(n);
            let combo = &n.scale(&hp) + &p.scale(&hn);
            new_rays.push(combo);
        }
    }
    new_rays.extend(pos);
    new_rays.extend(zero);
    let new_rays = reduce_rays(dim, &lineality, new_rays);
    RaySpan {
        lineality,
        rays: new_rays,
    }
}

/// Generators of the cone {x : row·x ≥ 0 for all rows}, as lineality + rays.
pub fn extreme_rays<T: Scalar>(dim: usize, halfspaces: &[Vector<T>]) -> RaySpan<T> {
    let mut state = RaySpan::whole_space(dim);
    for h in halfspaces {
        assert_eq!(h.dim(), dim, "halfspace dim mismatch");
        state = insert_halfspace(dim, state, h);
    }
    state.rays.sort();
    state
}

/// Convert a generated cone to inequality form. The resulting system
/// describes exactly the nonnegative hull of the generators, with
/// redundant rows removed.
pub fn dual_description<T: Scalar>(cone: &ConeVRep<T>) -> Result<ConeHRep<T>> {
    if cone.generators().is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let dim = cone.dim();
    // The valid inequalities a·x ≥ 0 on cone(G) are exactly the members of
    // the dual cone {a : a·g ≥ 0 for all g}, so rows = generators of the
    // dual, with lineality contributing equality pairs.
    let dual = extreme_rays(dim, cone.generators());
    let mut rows = dual.generators();
    // Pairs ±l are mutually irreducible, but a uniform final pass keeps the
    // output irredundant whatever the shape of the dual.
    rows = final_irredundant(dim, rows);
    rows.sort();
    ConeHRep::new(dim, rows)
}

/// Convert an inequality cone to generator form.
pub fn vrep<T: Scalar>(cone: &ConeHRep<T>) -> ConeVRep<T> {
    let span = extreme_rays(cone.dim(), cone.rows());
    let mut gens = span.generators();
    gens = final_irredundant(cone.dim(), gens);
    gens.sort();
    ConeVRep::new(cone.dim(), gens).expect("extreme rays are nonzero")
}

/// Drop generators that are nonnegative combinations of the others.
fn final_irredundant<T: Scalar>(dim: usize, mut gens: Vec<Vector<T>>) -> Vec<Vector<T>> {
    let mut canon: Vec<Vector<T>> = Vec::new();
    for g in gens.drain(..) {
        let c = g.ray_canonical();
        if !c.is_zero() && !canon.contains(&c) {
            canon.push(c);
        }
    }
    let mut k = 0;
    while k < canon.len() {
        if ray_redundant(dim, &[], &canon, k) {
            canon.remove(k);
        } else {
            k += 1;
        }
    }
    canon
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_traits::{One, Signed, Zero};

    type V = Vector<Rat>;

    fn vrep_of(dim: usize, gens: &[&[i64]]) -> ConeVRep<Rat> {
        ConeVRep::new(dim, gens.iter().map(|g| V::from_ints(g)).collect()).unwrap()
    }

    #[test]
    fn quadrant_is_self_dual() {
        let c = vrep_of(2, &[&[1, 0], &[0, 1]]);
        let h = dual_description(&c).unwrap();
        let mut rows = h.rows().to_vec();
        rows.sort();
        assert_eq!(rows, vec![V::from_ints(&[0, 1]), V::from_ints(&[1, 0])]);
    }

    #[test]
    fn redundant_generator_is_dropped() {
        // (1,1) is inside the quadrant spanned by the axes.
        let c = vrep_of(2, &[&[1, 1], &[1, 0], &[0, 1]]);
        let h = dual_description(&c).unwrap();
        let mut rows = h.rows().to_vec();
        rows.sort();
        assert_eq!(rows, vec![V::from_ints(&[0, 1]), V::from_ints(&[1, 0])]);
    }

    #[test]
    fn octant_with_interior_generator() {
        let c = vrep_of(3, &[&[1, 1, 1], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let h = dual_description(&c).unwrap();
        let mut rows = h.rows().to_vec();
        rows.sort();
        assert_eq!(
            rows,
            vec![
                V::from_ints(&[0, 0, 1]),
                V::from_ints(&[0, 1, 0]),
                V::from_ints(&[1, 0, 0]),
            ]
        );
    }

    #[test]
    fn degenerate_flat_cone() {
        // A single generator: the cone is a ray, cut out by one strict-side
        // inequality and an equality pair.
        let c = vrep_of(2, &[&[1, 1]]);
        let h = dual_description(&c).unwrap();
        for x in [V::from_ints(&[2, 2]), V::from_ints(&[0, 0])] {
            assert!(h.contains(&x));
        }
        for x in [
            V::from_ints(&[-1, -1]),
            V::from_ints(&[1, 0]),
            V::from_ints(&[2, 1]),
        ] {
            assert!(!h.contains(&x), "{x} should be outside");
        }
    }

    #[test]
    fn whole_plane_needs_no_rows() {
        let c = vrep_of(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let h = dual_description(&c).unwrap();
        assert!(h.rows().is_empty());
        assert!(h.contains(&V::from_ints(&[-7, 3])));
    }

    #[test]
    fn empty_generator_list_is_an_error() {
        let c = ConeVRep::<Rat>::new(2, vec![]).unwrap();
        assert!(matches!(dual_description(&c), Err(Error::EmptyGenerators)));
    }

    #[test]
    fn zero_generator_is_a_construction_error() {
        assert!(matches!(
            ConeVRep::<Rat>::new(2, vec![V::zeros(2)]),
            Err(Error::ZeroVector(_))
        ));
    }

    #[test]
    fn redualization_preserves_membership() {
        let c = vrep_of(3, &[&[1, 2, 0], &[0, 1, 1], &[1, 0, 3], &[2, 2, 1]]);
        let h = dual_description(&c).unwrap();
        let v2 = vrep(&h);
        let h2 = dual_description(&v2).unwrap();
        assert_eq!(h.rows(), h2.rows());
        // Spot membership agreement between the three forms.
        let probes = [
            V::from_ints(&[1, 1, 1]),
            V::from_ints(&[-1, 0, 0]),
            V::from_ints(&[3, 2, 4]),
            V::from_ints(&[0, 0, 1]),
            V::from_ints(&[5, -1, 2]),
        ];
        for x in &probes {
            assert_eq!(c.contains(x), h.contains(x), "disagree at {x}");
            assert_eq!(v2.contains(x), h.contains(x), "disagree at {x}");
        }
    }
}
