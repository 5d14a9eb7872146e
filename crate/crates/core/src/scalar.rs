//! Real scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point type usable as the real part of a complex amplitude.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Default absolute tolerance for rank, orthogonality and normalization tests.
    fn default_tol() -> Self;

    /// Converts an `f64` literal, panicking only if the conversion is not representable.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in target float type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn default_tol() -> Self {
        1e-8
    }
}

impl Real for f32 {
    fn default_tol() -> Self {
        1e-4
    }
}
