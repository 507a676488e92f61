//! Scalar abstractions shared by the verifier and the feasibility solver.
//!
//! Rank arithmetic only ever needs addition, subtraction, negation, halving
//! and an order; the linear solver needs an ordered field. Both are expressed
//! as traits so the same code runs over [`ExactReal`], exact rationals and
//! (for quick, uncertified screening) `f64`.

use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, Zero};

use crate::exactnum::ExactReal;

/// Values that can serve as ranks and thresholds.
pub trait RankScalar:
    Clone + Debug + PartialOrd + Zero + FromPrimitive + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self>
{
    fn halve(&self) -> Self;
}

impl RankScalar for ExactReal {
    fn halve(&self) -> Self {
        self.half()
    }
}

impl RankScalar for BigRational {
    fn halve(&self) -> Self {
        self / BigRational::from_integer(2.into())
    }
}

impl RankScalar for f64 {
    fn halve(&self) -> Self {
        self / 2.0
    }
}

impl RankScalar for f32 {
    fn halve(&self) -> Self {
        self / 2.0
    }
}

/// An ordered field, as needed by the simplex engine.
pub trait OrderedField: Num + Signed + Clone + PartialOrd + Debug {}

impl<T: Num + Signed + Clone + PartialOrd + Debug> OrderedField for T {}
