//! Integer (5,3) lifting steps for a single decomposition level.
//!
//! A signal is split into even- and odd-indexed streams, the odd stream is
//! predicted from its even neighbours and the even stream is updated from the
//! resulting details:
//!
//! ```text
//! detail[n] = odd[n]  - floor((even[n] + even[n+1]) / 2)
//! approx[n] = even[n] + floor((detail[n] + detail[n-1]) / 4)
//! ```
//!
//! The inverse runs the same steps with flipped signs in reverse order, so
//! reconstruction is bit-exact for any deterministic rounding rule applied
//! identically in both directions. Missing neighbours at the signal edges are
//! supplied by symmetric mirroring: `even[E] -> even[E-1]`,
//! `detail[-1] -> detail[0]`, `detail[O] -> detail[O-1]`.
//!
//! All arithmetic is plain integer add/subtract/shift — no multipliers.

use thiserror::Error;

use crate::num::SampleInt;

/// How division by a power of two rounds.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum RoundingMode {
    /// Floor division: identical to an arithmetic right shift.
    #[default]
    FloorShift,
    /// Negative dividends truncate toward zero: a one-bit correction is added
    /// before the arithmetic shift, matching the hardware divider stage.
    HardwareCorrected,
}

/// Boundary extension rule for missing neighbours at the signal edges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum BoundaryRule {
    /// Reflect at the ends: `even[E] -> even[E-1]`, `d[-1] -> d[0]`,
    /// `d[O] -> d[O-1]`. Preserves perfect reconstruction with no extra
    /// storage.
    #[default]
    SymmetricMirror,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiftError {
    #[error("empty signal")]
    EmptySignal,
    #[error("signal too short to decompose (len {0}, need at least 2)")]
    TooShort(usize),
    #[error("parity length mismatch (even {even}, odd/detail {other})")]
    ParityLengthMismatch { even: usize, other: usize },
    #[error("inconsistent subband lengths (approx {approx}, detail {detail}, declared length {declared})")]
    InconsistentLengths {
        approx: usize,
        detail: usize,
        declared: usize,
    },
}

/// Approximation and detail sequences for one decomposition level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubbandPair<T> {
    pub approx: Vec<T>,
    pub detail: Vec<T>,
    pub original_length: usize,
}

impl<T: SampleInt> SubbandPair<T> {
    /// Builds a pair, checking `len(approx) = ceil(N/2)` and
    /// `len(detail) = floor(N/2)`.
    pub fn new(approx: Vec<T>, detail: Vec<T>) -> Result<Self, LiftError> {
        let original_length = approx.len() + detail.len();
        if approx.len() != detail.len() && approx.len() != detail.len() + 1 || detail.is_empty() {
            return Err(LiftError::InconsistentLengths {
                approx: approx.len(),
                detail: detail.len(),
                declared: original_length,
            });
        }
        Ok(Self {
            approx,
            detail,
            original_length,
        })
    }
}

/// Floor or hardware-corrected division of `v` by `2^k`.
///
/// `FloorShift` is exactly an arithmetic right shift. `HardwareCorrected`
/// adds `2^k - 1` to negative dividends first, so they truncate toward zero.
pub fn floor_div_pow2<T: SampleInt>(v: T, k: u32, mode: RoundingMode) -> T {
    match mode {
        RoundingMode::FloorShift => v.signed_shr(k),
        RoundingMode::HardwareCorrected => {
            if v < T::zero() {
                let bias = (T::one() << k as usize) - T::one();
                (v + bias).signed_shr(k)
            } else {
                v.signed_shr(k)
            }
        }
    }
}

/// Separates a signal into even- and odd-indexed subsequences.
pub fn split<T: SampleInt>(x: &[T]) -> Result<(Vec<T>, Vec<T>), LiftError> {
    if x.is_empty() {
        return Err(LiftError::EmptySignal);
    }
    let even = x.iter().copied().step_by(2).collect();
    let odd = x.iter().copied().skip(1).step_by(2).collect();
    Ok((even, odd))
}

/// Interleaves even and odd subsequences back into one signal.
pub fn merge<T: SampleInt>(even: &[T], odd: &[T]) -> Result<Vec<T>, LiftError> {
    if even.len() != odd.len() && even.len() != odd.len() + 1 {
        return Err(LiftError::ParityLengthMismatch {
            even: even.len(),
            other: odd.len(),
        });
    }
    let mut x = Vec::with_capacity(even.len() + odd.len());
    for n in 0..even.len() {
        x.push(even[n]);
        if n < odd.len() {
            x.push(odd[n]);
        }
    }
    Ok(x)
}

fn check_pair_lengths<T>(even: &[T], other: &[T]) -> Result<(), LiftError> {
    if other.is_empty() || (even.len() != other.len() && even.len() != other.len() + 1) {
        return Err(LiftError::ParityLengthMismatch {
            even: even.len(),
            other: other.len(),
        });
    }
    Ok(())
}

/// Detail coefficients: each odd sample minus the average of its even
/// neighbours.
pub fn predict_forward<T: SampleInt>(
    even: &[T],
    odd: &[T],
    mode: RoundingMode,
    boundary: BoundaryRule,
) -> Result<Vec<T>, LiftError> {
    check_pair_lengths(even, odd)?;
    let BoundaryRule::SymmetricMirror = boundary;
    Ok((0..odd.len())
        .map(|n| {
            let right = if n + 1 < even.len() {
                even[n + 1]
            } else {
                even[even.len() - 1] // mirror
            };
            odd[n] - floor_div_pow2(even[n] + right, 1, mode)
        })
        .collect())
}

/// Approximation coefficients: each even sample plus a quarter of the
/// neighbouring detail sum.
pub fn update_forward<T: SampleInt>(
    even: &[T],
    detail: &[T],
    mode: RoundingMode,
    boundary: BoundaryRule,
) -> Result<Vec<T>, LiftError> {
    check_pair_lengths(even, detail)?;
    let BoundaryRule::SymmetricMirror = boundary;
    Ok((0..even.len())
        .map(|n| {
            let cur = if n < detail.len() {
                detail[n]
            } else {
                detail[detail.len() - 1] // mirror
            };
            let prev = if n == 0 { detail[0] } else { detail[n - 1] };
            even[n] + floor_div_pow2(cur + prev, 2, mode)
        })
        .collect())
}

/// Exact inverse of [`update_forward`] at matched settings.
pub fn update_inverse<T: SampleInt>(
    approx: &[T],
    detail: &[T],
    mode: RoundingMode,
    boundary: BoundaryRule,
) -> Result<Vec<T>, LiftError> {
    check_pair_lengths(approx, detail)?;
    let BoundaryRule::SymmetricMirror = boundary;
    Ok((0..approx.len())
        .map(|n| {
            let cur = if n < detail.len() {
                detail[n]
            } else {
                detail[detail.len() - 1]
            };
            let prev = if n == 0 { detail[0] } else { detail[n - 1] };
            approx[n] - floor_div_pow2(cur + prev, 2, mode)
        })
        .collect())
}

/// Exact inverse of [`predict_forward`] at matched settings.
pub fn predict_inverse<T: SampleInt>(
    even: &[T],
    detail: &[T],
    mode: RoundingMode,
    boundary: BoundaryRule,
) -> Result<Vec<T>, LiftError> {
    check_pair_lengths(even, detail)?;
    let BoundaryRule::SymmetricMirror = boundary;
    Ok((0..detail.len())
        .map(|n| {
            let right = if n + 1 < even.len() {
                even[n + 1]
            } else {
                even[even.len() - 1]
            };
            detail[n] + floor_div_pow2(even[n] + right, 1, mode)
        })
        .collect())
}

/// One forward decomposition level: split, predict, update.
pub fn forward_1d<T: SampleInt>(
    x: &[T],
    mode: RoundingMode,
    boundary: BoundaryRule,
) -> Result<SubbandPair<T>, LiftError> {
    if x.len() < 2 {
        return Err(LiftError::TooShort(x.len()));
    }
    let (even, odd) = split(x)?;
    let detail = predict_forward(&even, &odd, mode, boundary)?;
    let approx = update_forward(&even, &detail, mode, boundary)?;
    SubbandPair::new(approx, detail)
}

/// One inverse decomposition level; bit-exact inverse of [`forward_1d`] when
/// run with the same mode and boundary rule.
pub fn inverse_1d<T: SampleInt>(
    sb: &SubbandPair<T>,
    mode: RoundingMode,
    boundary: BoundaryRule,
) -> Result<Vec<T>, LiftError> {
    if sb.approx.len() + sb.detail.len() != sb.original_length {
        return Err(LiftError::InconsistentLengths {
            approx: sb.approx.len(),
            detail: sb.detail.len(),
            declared: sb.original_length,
        });
    }
    let even = update_inverse(&sb.approx, &sb.detail, mode, boundary)?;
    let odd = predict_inverse(&even, &sb.detail, mode, boundary)?;
    merge(&even, &odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FLOOR: RoundingMode = RoundingMode::FloorShift;
    const HW: RoundingMode = RoundingMode::HardwareCorrected;
    const MIRROR: BoundaryRule = BoundaryRule::SymmetricMirror;

    #[test]
    fn split_by_index_parity() {
        assert_eq!(
            split(&[1, 3, 2, 0]).unwrap(),
            (vec![1, 2], vec![3, 0]),
        );
        assert_eq!(split(&[7]).unwrap(), (vec![7], vec![]));
        assert_eq!(
            split(&[10, 12, 14, 16, 18]).unwrap(),
            (vec![10, 14, 18], vec![12, 16]),
        );
        assert_eq!(split::<i32>(&[]), Err(LiftError::EmptySignal));
    }

    #[test]
    fn merge_is_split_inverse() {
        assert_eq!(merge(&[1, 2], &[3, 0]).unwrap(), vec![1, 3, 2, 0]);
        assert_eq!(
            merge(&[10, 14, 18], &[12, 16]).unwrap(),
            vec![10, 12, 14, 16, 18],
        );
        assert!(matches!(
            merge(&[1], &[2, 3, 4]),
            Err(LiftError::ParityLengthMismatch { .. })
        ));
    }

    #[test]
    fn floor_div_pow2_modes() {
        assert_eq!(floor_div_pow2(-1, 2, FLOOR), -1);
        assert_eq!(floor_div_pow2(-1, 2, HW), 0);
        assert_eq!(floor_div_pow2(510, 2, FLOOR), 127);
        assert_eq!(floor_div_pow2(510, 2, HW), 127);
        // shift equivalence in floor mode
        for v in -100i64..=100 {
            for k in 1..=2u32 {
                assert_eq!(floor_div_pow2(v, k, FLOOR), v >> k);
                let trunc = v / (1 << k);
                assert_eq!(floor_div_pow2(v, k, HW), trunc);
            }
        }
    }

    #[test]
    fn predict_hand_examples() {
        assert_eq!(
            predict_forward(&[1, 2], &[3, 0], FLOOR, MIRROR).unwrap(),
            vec![2, -2],
        );
        // constant signal predicted exactly
        assert_eq!(
            predict_forward(&[5, 5, 5], &[5, 5], FLOOR, MIRROR).unwrap(),
            vec![0, 0],
        );
        // linear ramp: interior predictions exact, last entry mirrored
        assert_eq!(
            predict_forward(&[10, 14, 18, 22], &[12, 16, 20, 24], FLOOR, MIRROR).unwrap(),
            vec![0, 0, 0, 2],
        );
        assert!(matches!(
            predict_forward(&[1, 2, 3], &[1], FLOOR, MIRROR),
            Err(LiftError::ParityLengthMismatch { .. })
        ));
    }

    #[test]
    fn update_hand_examples() {
        assert_eq!(
            update_forward(&[1, 2], &[2, -2], FLOOR, MIRROR).unwrap(),
            vec![2, 2],
        );
        assert_eq!(
            update_forward(&[7, 7, 7], &[0, 0], FLOOR, MIRROR).unwrap(),
            vec![7, 7, 7],
        );
        assert_eq!(
            update_forward(&[10, 14, 18, 22], &[0, 0, 0, 2], FLOOR, MIRROR).unwrap(),
            vec![10, 14, 18, 22],
        );
    }

    #[test]
    fn forward_1d_hand_examples() {
        let sb = forward_1d(&[1, 3, 2, 0], FLOOR, MIRROR).unwrap();
        assert_eq!(sb.approx, vec![2, 2]);
        assert_eq!(sb.detail, vec![2, -2]);
        assert_eq!(sb.original_length, 4);

        let sb = forward_1d(&[9i32; 7], FLOOR, MIRROR).unwrap();
        assert_eq!(sb.approx, vec![9; 4]);
        assert_eq!(sb.detail, vec![0; 3]);

        let sb = forward_1d(&[10, 12, 14, 16, 18, 20, 22, 24], FLOOR, MIRROR).unwrap();
        assert_eq!(sb.approx, vec![10, 14, 18, 22]);
        assert_eq!(sb.detail, vec![0, 0, 0, 2]);

        assert_eq!(forward_1d(&[5], FLOOR, MIRROR), Err(LiftError::TooShort(1)));
    }

    #[test]
    fn step_inverses_hand_examples() {
        assert_eq!(
            update_inverse(&[2, 2], &[2, -2], FLOOR, MIRROR).unwrap(),
            vec![1, 2],
        );
        assert_eq!(
            update_inverse(&[7, 7, 7], &[0, 0], FLOOR, MIRROR).unwrap(),
            vec![7, 7, 7],
        );
        assert_eq!(
            predict_inverse(&[1, 2], &[2, -2], FLOOR, MIRROR).unwrap(),
            vec![3, 0],
        );
        assert_eq!(
            predict_inverse(&[4, 4, 4], &[0, 0], FLOOR, MIRROR).unwrap(),
            vec![4, 4],
        );
    }

    #[test]
    fn inverse_1d_hand_examples() {
        let sb = SubbandPair::new(vec![2, 2], vec![2, -2]).unwrap();
        assert_eq!(inverse_1d(&sb, FLOOR, MIRROR).unwrap(), vec![1, 3, 2, 0]);

        let sb = SubbandPair::new(vec![6, 6, 6], vec![0, 0]).unwrap();
        assert_eq!(inverse_1d(&sb, FLOOR, MIRROR).unwrap(), vec![6, 6, 6, 6, 6]);
    }

    #[test]
    fn roundtrip_exhaustive_small() {
        // all signals of length <= 5 with values 0..=7, both modes
        for len in 2usize..=5 {
            let cases = 8u32.pow(len as u32);
            for code in 0..cases {
                let mut c = code;
                let x: Vec<i64> = (0..len)
                    .map(|_| {
                        let v = (c % 8) as i64;
                        c /= 8;
                        v
                    })
                    .collect();
                for mode in [FLOOR, HW] {
                    let sb = forward_1d(&x, mode, MIRROR).unwrap();
                    assert_eq!(
                        sb.approx.len() + sb.detail.len(),
                        x.len(),
                        "size preservation"
                    );
                    let back = inverse_1d(&sb, mode, MIRROR).unwrap();
                    assert_eq!(back, x, "mode {mode:?} len {len}");
                }
            }
        }
    }

    #[test]
    fn detail_range_fits_9_signed_bits_for_8bit_input() {
        // spot window check; the exhaustive 256^3 sweep lives in range_analysis
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for a in [0i64, 1, 127, 128, 254, 255] {
            for b in [0i64, 1, 127, 128, 254, 255] {
                for c in [0i64, 1, 127, 128, 254, 255] {
                    let d = b - floor_div_pow2(a + c, 1, FLOOR);
                    lo = lo.min(d);
                    hi = hi.max(d);
                }
            }
        }
        assert!(lo >= -255 && hi <= 255);
    }
}
