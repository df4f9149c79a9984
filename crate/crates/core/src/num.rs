//! Scalar trait for transform coefficients.

use std::fmt::Debug;

use num_traits::{PrimInt, Signed};

/// Signed primitive integer usable as a sample/coefficient scalar.
///
/// The lifting steps only need addition, subtraction and arithmetic right
/// shifts, so any signed machine integer works. Callers must pick a width
/// with headroom above the input bit depth (at least `bit_width + 2 + levels`
/// bits); the reference path does not model overflow — that is the datapath
/// simulator's job.
pub trait SampleInt: PrimInt + Signed + Debug + Send + Sync + 'static {}

impl<T: PrimInt + Signed + Debug + Send + Sync + 'static> SampleInt for T {}
