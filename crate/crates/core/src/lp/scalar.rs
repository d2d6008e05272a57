//! Arithmetic abstraction for the simplex solver: the pivoting logic is
//! written once and instantiated with either exact rationals (tolerance-free,
//! bit-reproducible) or floats (fast, with numeric tolerances).

use num::{BigRational, Signed, Zero};

/// Scalar arithmetic used by the solver.
///
/// For the exact implementation every tolerance parameter is ignored and
/// comparisons are against zero itself; for floats the given epsilons apply.
pub trait LpScalar: Clone + PartialOrd + std::fmt::Debug + Send + Sync + 'static {
    /// True when comparisons are exact and tolerances collapse to zero.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i32(v: i32) -> Self;
    /// Embeds an objective weight.  The exact mode embeds the float's binary
    /// value without any rounding, so both modes optimize the same objective.
    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;
    /// Faithful rational view of the value (exact clone, or the float's
    /// binary value embedded without rounding).
    fn to_rational(&self) -> BigRational;

    fn is_zero(&self) -> bool;
    /// `self > eps` (float) / `self > 0` (exact).
    fn gt_eps(&self, eps: f64) -> bool;
    /// `self < -eps` (float) / `self < 0` (exact).
    fn lt_neg_eps(&self, eps: f64) -> bool;

    fn neg(&self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn div_ref(&self, o: &Self) -> Self;
    fn add_assign_ref(&mut self, o: &Self);
    fn sub_assign_ref(&mut self, o: &Self);
}

impl LpScalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i32(v: i32) -> Self {
        v as f64
    }
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn to_rational(&self) -> BigRational {
        BigRational::from_float(*self).expect("finite value")
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn gt_eps(&self, eps: f64) -> bool {
        *self > eps
    }
    fn lt_neg_eps(&self, eps: f64) -> bool {
        *self < -eps
    }

    fn neg(&self) -> Self {
        -*self
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
}

impl LpScalar for BigRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as num::One>::one()
    }
    fn from_i32(v: i32) -> Self {
        BigRational::from_integer(v.into())
    }
    fn from_f64(v: f64) -> Self {
        BigRational::from_float(v).expect("objective weights must be finite")
    }
    fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn gt_eps(&self, _eps: f64) -> bool {
        self.is_positive()
    }
    fn lt_neg_eps(&self, _eps: f64) -> bool {
        self.is_negative()
    }

    fn neg(&self) -> Self {
        -self
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
}
