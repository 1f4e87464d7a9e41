//! Scalar abstraction for exact ordered arithmetic.
//!
//! Every algorithm in this crate is generic over a [`Scalar`]: a totally
//! ordered field with exact arithmetic. Equality tests like "this norm is
//! exactly 1" are meaningful under these bounds, which is why the trait
//! requires `Ord` rather than `PartialOrd` — IEEE floats are excluded by
//! construction. `num_rational::Ratio` over any big-enough integer type
//! satisfies the bounds; [`crate::Rat`] is the default instantiation.

use std::fmt;

use num_traits::{FromPrimitive, NumAssign, Signed};

pub trait Scalar:
    Clone + Ord + NumAssign + Signed + FromPrimitive + fmt::Debug + fmt::Display
{
    /// Lossless conversion from a small integer constant.
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer constant must be representable")
    }

    /// p/q as a scalar. Panics on q = 0.
    fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::from_int(p) / Self::from_int(q)
    }

    fn two() -> Self {
        Self::from_int(2)
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }
}

impl<T> Scalar for T where
    T: Clone + Ord + NumAssign + Signed + FromPrimitive + fmt::Debug + fmt::Display
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, Rat64};

    #[test]
    fn rational_instantiations_reduce_to_lowest_terms() {
        let a = Rat::ratio(2, 4);
        assert_eq!(a, Rat::ratio(1, 2));
        assert_eq!(a.to_string(), "1/2");

        let b = Rat64::ratio(-3, -6);
        assert_eq!(b, Rat64::ratio(1, 2));
    }

    #[test]
    fn exact_addition_reduces() {
        // (a/b)+(c/d) reduces correctly for magnitudes beyond machine words.
        let big = Rat::ratio(1, 3) + Rat::ratio(1, 6);
        assert_eq!(big, Rat::half());

        let huge = Rat::from_int(i64::MAX) + Rat::from_int(i64::MAX);
        assert_eq!(huge, Rat::from_int(i64::MAX) * Rat::two());
    }
}
