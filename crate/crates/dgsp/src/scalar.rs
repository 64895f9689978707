use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar type the whole crate is generic over.
///
/// Implemented for `f32` and `f64`; all internal constants go through
/// `FromPrimitive` so the numerics are written once.
pub trait Real:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lossy conversion from `f64`, for tolerances and literals.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    fn from_usize_(x: usize) -> Self {
        Self::from_usize(x).expect("usize representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
