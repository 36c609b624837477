//! Working-precision scalar abstraction.
//!
//! The production path is generic over the binary floating-point format so
//! the same code runs in double precision (the default) and in single
//! precision, where certification limits are reachable at desk scale. All
//! error bounds are expressed as multiples of the format's unit roundoff.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// IEEE binary floating-point format used by the certified kernels.
pub trait Real:
    Copy
    + PartialOrd
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Unit roundoff `u` of round-to-nearest arithmetic.
    const UNIT_ROUNDOFF: f64;
    const ZERO: Self;
    const ONE: Self;
    const NAME: &'static str;

    fn sqrt(self) -> Self;
    fn abs(self) -> Self;
    fn is_finite(self) -> bool;
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;

    /// Exponent `e` with `self = m * 2^e` and `1/2 <= |m| < 1` (frexp).
    /// Returns `None` for zero and non-finite values.
    fn exponent(self) -> Option<i32>;

    /// Multiplies by `2^k`. Exact unless the result leaves the normal range.
    fn scale_pow2(self, k: i32) -> Self;
}

macro_rules! impl_real {
    ($t:ty, $bits:ty, $mant:expr, $bias:expr, $u:expr, $name:expr) => {
        impl Real for $t {
            const UNIT_ROUNDOFF: f64 = $u;
            const ZERO: Self = 0.0;
            const ONE: Self = 1.0;
            const NAME: &'static str = $name;

            #[inline]
            fn sqrt(self) -> Self {
                <$t>::sqrt(self)
            }
            #[inline]
            fn abs(self) -> Self {
                <$t>::abs(self)
            }
            #[inline]
            fn is_finite(self) -> bool {
                <$t>::is_finite(self)
            }
            #[inline]
            fn from_f64(v: f64) -> Self {
                v as $t
            }
            #[inline]
            fn to_f64(self) -> f64 {
                self as f64
            }

            fn exponent(self) -> Option<i32> {
                if self == 0.0 || !self.is_finite() {
                    return None;
                }
                let bits = self.to_bits();
                let exp_mask: $bits = ((1 as $bits) << (<$bits>::BITS - 1 - $mant)) - 1;
                let biased = ((bits >> $mant) & exp_mask) as i32;
                if biased == 0 {
                    // subnormal: renormalize through an exact scaling
                    let scaled = self.scale_pow2($mant + 1);
                    return scaled.exponent().map(|e| e - ($mant + 1));
                }
                Some(biased - $bias + 1)
            }

            #[inline]
            fn scale_pow2(self, k: i32) -> Self {
                // 2^k is built in at most three exactly representable steps
                let max_step = $bias - 1;
                let mut v = self;
                let mut rest = k;
                while rest != 0 {
                    let step = rest.clamp(-max_step, max_step);
                    v *= <$t>::from_bits(((step + $bias) as $bits) << $mant);
                    rest -= step;
                }
                v
            }
        }
    };
}

impl_real!(f64, u64, 52, 1023, 1.0 / 9_007_199_254_740_992.0, "double");
impl_real!(f32, u32, 23, 127, 1.0 / 16_777_216.0, "single");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_roundoff_values() {
        assert_eq!(f64::UNIT_ROUNDOFF, 2f64.powi(-53));
        assert_eq!(f32::UNIT_ROUNDOFF, 2f64.powi(-24));
    }

    #[test]
    fn exponent_matches_frexp() {
        assert_eq!(1.0f64.exponent(), Some(1));
        assert_eq!(0.5f64.exponent(), Some(0));
        assert_eq!(0.75f64.exponent(), Some(0));
        assert_eq!((-3.0f64).exponent(), Some(2));
        assert_eq!(0.0f64.exponent(), None);
        assert_eq!(f64::NAN.exponent(), None);
        assert_eq!(5.0f32.exponent(), Some(3));
        let tiny = f64::from_bits(1);
        assert_eq!(tiny.exponent(), Some(-1073));
        assert_eq!(f32::from_bits(1).exponent(), Some(-148));
    }

    #[test]
    fn scaling_is_exact() {
        let x = 0.123_456_789_f64;
        for k in -900..900 {
            assert_eq!(x.scale_pow2(k).scale_pow2(-k), x);
        }
        assert_eq!(1.0f64.scale_pow2(-1074), f64::from_bits(1));
        assert_eq!(3.0f32.scale_pow2(-2), 0.75);
    }
}
