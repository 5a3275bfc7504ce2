//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the kernels are generic over.
///
/// Implemented for `f32` and `f64`. Accuracy targets quoted in the docs refer to
/// `f64`; `f32` instantiations are accurate to a few ulps of single precision.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal into the scalar type.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    /// Converts a term index or count into the scalar type.
    #[inline]
    fn count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// Lossy conversion used for diagnostics and error payloads.
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// `true` when the value is an exact integer.
    #[inline]
    fn is_integer(self) -> bool {
        self.is_finite() && self == self.round()
    }

    /// `true` when the value is an exact non-positive integer (a Gamma pole).
    #[inline]
    fn is_nonpositive_integer(self) -> bool {
        self <= Self::zero() && self.is_integer()
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Builds a purely real complex number.
#[inline]
pub(crate) fn re<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// `true` when both components are finite.
#[inline]
pub(crate) fn is_finite_c<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
