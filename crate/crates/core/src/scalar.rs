//! Scalar abstraction for the real field underlying all complex arithmetic.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real scalar type the whole crate is generic over.
///
/// `f64` is the intended precision for production use; `f32` compiles and
/// works for exploratory runs but cannot reach the documented tolerances.
/// Tolerances supplied as `f64` constants are floored at a small multiple of
/// `T::epsilon()` wherever an absolute threshold would be unreachable in the
/// narrower type (see [`Scalar::tolerance`]).
pub trait Scalar:
    Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Sum<Self>
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` constant into `Self`.
    fn real(value: f64) -> Self {
        Self::from_f64(value).expect("finite f64 constant must convert")
    }

    /// An absolute tolerance floored at `32 * epsilon` of the scalar type.
    fn tolerance(value: f64) -> Self {
        Self::real(value).max(Self::epsilon() * Self::real(32.0))
    }

    /// Lossy view as `f64`, used for diagnostics only.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + NumAssign
        + FromPrimitive
        + ToPrimitive
        + Sum<T>
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
