//! Exact-arithmetic toolkit for finite-dimensional order unit spaces with
//! polyhedral positive cones.
//!
//! A space is presented by a state matrix `F` and an order unit `e` with
//! `F·e = 1`: the positive cone is `{v : Fv ≥ 0}` and the order unit norm
//! is the exact maximum `max_i |f_i(v)|`. On top of that sit:
//!
//! * region classification — order interval, canopy (positive, norm one),
//!   periphery (both `v` and `e − v` in the canopy), cone boundary — with
//!   certificates;
//! * ∞-orthogonality (`‖x + ky‖ = max{‖x‖, ‖ky‖}` for every real `k`),
//!   decided exactly by piecewise-linear breakpoint analysis;
//! * line analysis through the unit and the peripheral projection;
//! * skeleton verification and the generation of a space from a valid
//!   skeleton;
//! * constructions: coordinate max-norm spaces, max direct sums, and the
//!   ⊕₁ adjunction of a polyhedrally-normed space;
//! * axis-plane decomposition `v = λe + μw` with `w` peripheral, and
//!   verification/search of max-norm coordinate embeddings.
//!
//! Everything is generic over an exact ordered [`scalar::Scalar`]; the
//! aliases below fix the default arbitrary-precision rational
//! instantiation. There is no floating point anywhere: every predicate the
//! library reports (a norm equals one, a state vanishes) is an exact
//! statement about rationals.

pub mod cone;
pub mod construct;
pub mod embed;
pub mod error;
pub mod io;
pub mod line;
pub mod linalg;
pub mod lp;
pub mod orthogonality;
pub mod periphery;
pub mod polytope;
pub mod scalar;
pub mod skeleton;
pub mod space;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default exact scalar: arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
/// Machine-word rational for small exhaustive grids. Arithmetic stays
/// exact while it fits; debug builds abort on overflow.
pub type Rat64 = num_rational::Rational64;

pub type RatVector = linalg::Vector<Rat>;
pub type RatMatrix = linalg::Matrix<Rat>;
// Space alias added with the space module.
