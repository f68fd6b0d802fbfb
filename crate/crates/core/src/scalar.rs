//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating point type the solvers are generic over (`f64` or `f32`).
///
/// Besides the arithmetic bounds, each implementation pins the two
/// absolute tolerances used throughout the crate: one for comparisons
/// against economic thresholds (vote shares, IC slack) and a finer one for
/// fixed-point residuals and probability normalisation.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Tolerance for threshold comparisons (ties, IC slack, vote shares).
    const THRESHOLD_TOL: f64;
    /// Tolerance for residuals, probability sums and boundary membership.
    const FINE_TOL: f64;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn threshold_tol() -> Self {
        Self::lit(Self::THRESHOLD_TOL)
    }

    #[inline]
    fn fine_tol() -> Self {
        Self::lit(Self::FINE_TOL)
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    /// Lossy conversion used for diagnostics and error payloads.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const THRESHOLD_TOL: f64 = 1e-9;
    const FINE_TOL: f64 = 1e-12;
}

impl Scalar for f32 {
    const THRESHOLD_TOL: f64 = 1e-4;
    const FINE_TOL: f64 = 1e-6;
}

/// Max-shifted `log Σ p_k exp(x_k)`; entries with zero weight are skipped.
pub fn log_mean_exp<T: Scalar>(probs: &[T], xs: &[T]) -> T {
    debug_assert_eq!(probs.len(), xs.len());
    let max = probs
        .iter()
        .zip(xs)
        .filter(|(p, _)| **p > T::zero())
        .map(|(_, x)| *x)
        .fold(T::neg_infinity(), T::max);
    if max == T::neg_infinity() || !max.is_finite() {
        return max;
    }
    let acc: T = probs
        .iter()
        .zip(xs)
        .filter(|(p, _)| **p > T::zero())
        .map(|(p, x)| *p * (*x - max).exp())
        .sum();
    max + acc.ln()
}

/// Logistic function evaluated without overflow for either sign.
#[inline]
pub fn logistic<T: Scalar>(z: T) -> T {
    if z >= T::zero() {
        T::one() / (T::one() + (-z).exp())
    } else {
        let e = z.exp();
        e / (T::one() + e)
    }
}

/// `true` when `|a - b| <= tol`.
#[inline]
pub fn approx_eq<T: Scalar>(a: T, b: T, tol: T) -> bool {
    (a - b).abs() <= tol
}
