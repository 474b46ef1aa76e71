//! Scalar abstraction over the element type of tensors.
//!
//! All numeric code is generic over [`Scalar`] so the same graph and model
//! code runs in double precision (gradient checks, oracles) and single
//! precision (training). Concrete aliases live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::Float;

/// Element type tag, used by serialized formats to record precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    F32,
    F64,
}

impl ScalarKind {
    pub fn code(self) -> u8 {
        match self {
            ScalarKind::F32 => 0,
            ScalarKind::F64 => 1,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        match code {
            0 => Some(ScalarKind::F32),
            1 => Some(ScalarKind::F64),
            _ => None,
        }
    }
}

/// Floating-point element type usable in tensors and the autodiff graph.
pub trait Scalar:
    Float
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    const KIND: ScalarKind;

    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
}

impl Scalar for f32 {
    const KIND: ScalarKind = ScalarKind::F32;

    #[inline(always)]
    fn from_f64(x: f64) -> Self {
        x as f32
    }

    #[inline(always)]
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    const KIND: ScalarKind = ScalarKind::F64;

    #[inline(always)]
    fn from_f64(x: f64) -> Self {
        x
    }

    #[inline(always)]
    fn to_f64(self) -> f64 {
        self
    }
}
