//! Validated signal container.

use num_traits::NumCast;
use thiserror::Error;

use crate::num::SampleInt;

/// Sample encoding declared for a [`Signal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Signedness {
    /// Samples in `[0, 2^bit_width - 1]`.
    #[default]
    Unsigned,
    /// Samples in `[-2^(bit_width-1), 2^(bit_width-1) - 1]`.
    TwosComplement,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignalError {
    #[error("empty signal")]
    Empty,
    #[error("bit width {0} out of range (1..=62)")]
    BadBitWidth(u8),
    #[error("sample {value} at index {index} does not fit {bit_width}-bit {signedness:?}")]
    SampleOutOfRange {
        index: usize,
        value: i64,
        bit_width: u8,
        signedness: Signedness,
    },
}

/// A finite sequence of integer samples with a declared bit depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signal<T = crate::Sample> {
    samples: Vec<T>,
    bit_width: u8,
    signedness: Signedness,
}

impl<T: SampleInt> Signal<T> {
    /// Validates every sample against the declared width and signedness.
    pub fn new(samples: Vec<T>, bit_width: u8, signedness: Signedness) -> Result<Self, SignalError> {
        if samples.is_empty() {
            return Err(SignalError::Empty);
        }
        if bit_width == 0 || bit_width > 62 {
            return Err(SignalError::BadBitWidth(bit_width));
        }
        let (lo, hi) = sample_range(bit_width, signedness);
        for (index, s) in samples.iter().enumerate() {
            let value = s.to_i64().expect("sample fits i64");
            if value < lo || value > hi {
                return Err(SignalError::SampleOutOfRange {
                    index,
                    value,
                    bit_width,
                    signedness,
                });
            }
        }
        Ok(Self {
            samples,
            bit_width,
            signedness,
        })
    }

    /// 8-bit unsigned signal, the paper-typical input.
    pub fn unsigned8(samples: Vec<T>) -> Result<Self, SignalError> {
        Self::new(samples, 8, Signedness::Unsigned)
    }

    /// Wraps arbitrary samples, inferring the smallest describing width.
    pub fn infer(samples: Vec<T>) -> Result<Self, SignalError> {
        if samples.is_empty() {
            return Err(SignalError::Empty);
        }
        let min = samples.iter().map(|s| s.to_i64().unwrap()).min().unwrap();
        let max = samples.iter().map(|s| s.to_i64().unwrap()).max().unwrap();
        if min >= 0 {
            let mut w = 8u8;
            while max > (1i64 << w) - 1 {
                w += 1;
            }
            Self::new(samples, w, Signedness::Unsigned)
        } else {
            let mut w = 8u8;
            while max > (1i64 << (w - 1)) - 1 || min < -(1i64 << (w - 1)) {
                w += 1;
            }
            Self::new(samples, w, Signedness::TwosComplement)
        }
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<T> {
        self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn bit_width(&self) -> u8 {
        self.bit_width
    }

    pub fn signedness(&self) -> Signedness {
        self.signedness
    }

    /// Samples widened to i64, as the datapath simulator consumes them.
    pub fn to_i64(&self) -> Vec<i64> {
        self.samples
            .iter()
            .map(|s| s.to_i64().expect("sample fits i64"))
            .collect()
    }

    /// Converts the scalar type, e.g. `Signal<i32>` to `Signal<i64>`.
    pub fn cast<U: SampleInt>(&self) -> Signal<U> {
        Signal {
            samples: self
                .samples
                .iter()
                .map(|s| <U as NumCast>::from(*s).expect("widening cast"))
                .collect(),
            bit_width: self.bit_width,
            signedness: self.signedness,
        }
    }
}

fn sample_range(bit_width: u8, signedness: Signedness) -> (i64, i64) {
    match signedness {
        Signedness::Unsigned => (0, (1i64 << bit_width) - 1),
        Signedness::TwosComplement => (-(1i64 << (bit_width - 1)), (1i64 << (bit_width - 1)) - 1),
    }
}
