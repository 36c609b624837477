//! Angles as direction/turn-count triples.
//!
//! An [`AngleTriple`] `[x, y, sigma]` stands for the angle
//! `atan2(y, x) + 2*pi*sigma`. Addition multiplies the directions as complex
//! numbers and counts wraps past the negative x-axis exactly, by comparing
//! half-plane signs, so arbitrarily long sums never call a trigonometric
//! function and never lose whole turns.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::float::Real;

/// Half-plane classification of a nonzero point.
///
/// `Positive` covers `y > 0` together with the negative x-axis, `Negative`
/// covers `y < 0` together with the positive x-axis. The two sets partition
/// the punctured plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointSign {
    Positive,
    Negative,
}

impl PointSign {
    #[inline]
    pub fn value(self) -> i64 {
        match self {
            PointSign::Positive => 1,
            PointSign::Negative => -1,
        }
    }

    #[inline]
    pub(crate) fn of<F: Real>(x: F, y: F) -> Option<PointSign> {
        if y > F::ZERO || (y == F::ZERO && x < F::ZERO) {
            Some(PointSign::Positive)
        } else if y < F::ZERO || (y == F::ZERO && x > F::ZERO) {
            Some(PointSign::Negative)
        } else {
            None
        }
    }
}

impl std::ops::Neg for PointSign {
    type Output = PointSign;

    fn neg(self) -> PointSign {
        match self {
            PointSign::Positive => PointSign::Negative,
            PointSign::Negative => PointSign::Positive,
        }
    }
}

/// Sign of the point `(x, y)`; fails at the origin.
pub fn point_sign<F: Real>(x: F, y: F) -> Result<PointSign> {
    PointSign::of(x, y).ok_or(Error::DegenerateOrigin)
}

/// Wrap counter for the sum of two angles.
///
/// `first` and `second` are the signs of the operands, `sum` the sign of
/// their product direction. Returns `+1` for a counter-clockwise crossing of
/// the negative x-axis, `-1` for a clockwise one and `0` otherwise.
#[inline]
pub fn cross_detect(first: PointSign, second: PointSign, sum: PointSign) -> i64 {
    let s = first.value();
    if s * second.value() > 0 && s * sum.value() < 0 {
        s
    } else {
        0
    }
}

/// Angle `atan2(y, x) + 2*pi*sigma` with the direction kept unevaluated.
#[derive(Clone, Copy, PartialEq)]
pub struct AngleTriple<F: Real = f64> {
    x: F,
    y: F,
    sigma: i64,
}

impl<F: Real> fmt::Debug for AngleTriple<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}, {}]", self.x.to_f64(), self.y.to_f64(), self.sigma)
    }
}

impl<F: Real> AngleTriple<F> {
    /// The zero angle `[1, 0, 0]`.
    pub const IDENTITY: Self = AngleTriple {
        x: F::ONE,
        y: F::ZERO,
        sigma: 0,
    };

    pub fn new(x: F, y: F, sigma: i64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite()) || (x == F::ZERO && y == F::ZERO) {
            return Err(Error::InvalidTriple {
                x: x.to_f64(),
                y: y.to_f64(),
            });
        }
        Ok(AngleTriple { x, y, sigma })
    }

    /// Caller guarantees a finite nonzero direction.
    #[inline]
    pub(crate) fn from_parts(x: F, y: F, sigma: i64) -> Self {
        debug_assert!(x != F::ZERO || y != F::ZERO);
        AngleTriple { x, y, sigma }
    }

    #[inline]
    pub fn x(&self) -> F {
        self.x
    }

    #[inline]
    pub fn y(&self) -> F {
        self.y
    }

    #[inline]
    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    #[inline]
    pub fn sign(&self) -> PointSign {
        // the invariant excludes the origin
        PointSign::of(self.x, self.y).unwrap_or(PointSign::Negative)
    }

    /// Floating-point length of the direction.
    pub fn radius(&self) -> F {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    /// The represented angle in radians, evaluated in double precision.
    pub fn angle(&self) -> f64 {
        self.y.to_f64().atan2(self.x.to_f64()) + 2.0 * PI * self.sigma as f64
    }

    /// Same angle, direction rescaled by a power of two into radius `(1/2, 1]`.
    pub fn normalize(&self) -> Result<Self> {
        let (x, y) = normalize_direction(self.x, self.y)?;
        Ok(AngleTriple {
            x,
            y,
            sigma: self.sigma,
        })
    }

    /// `[x, -y, -sigma]`, the negated angle. Exact.
    #[inline]
    pub fn conj(&self) -> Self {
        AngleTriple {
            x: self.x,
            y: -self.y,
            sigma: -self.sigma,
        }
    }

    /// Angle sum. The result is normalized.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let x = self.x * other.x - self.y * other.y;
        let y = self.x * other.y + self.y * other.x;
        let sum_sign = PointSign::of(x, y).ok_or(Error::DegenerateSum)?;
        let sigma =
            self.sigma + other.sigma + cross_detect(self.sign(), other.sign(), sum_sign);
        let (x, y) = normalize_direction(x, y)?;
        Ok(AngleTriple { x, y, sigma })
    }

    /// Angle difference, `self + other.conj()`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.conj())
    }

    /// `w`-fold sum by left-to-right repeated addition; `w < 0` sums the
    /// conjugate `|w|` times and `w = 0` gives the identity.
    pub fn scalar_mul(&self, w: i64) -> Result<Self> {
        if w == 0 {
            return Ok(Self::IDENTITY);
        }
        let base = if w > 0 { *self } else { self.conj() }.normalize()?;
        let mut acc = base;
        for _ in 1..w.unsigned_abs() {
            acc = acc.add(&base)?;
        }
        Ok(acc)
    }
}

impl<F: Real> Default for AngleTriple<F> {
    fn default() -> Self {
        Self::IDENTITY
    }
}

/// Rescales `(x, y)` by one power of two so that `1/2 < |(x, y)| <= 1`.
///
/// The scaling is exact; if it would push a component out of the normal
/// range (losing bits) an [`Error::ExponentRange`] is returned instead.
pub(crate) fn normalize_direction<F: Real>(x: F, y: F) -> Result<(F, F)> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::InvalidTriple {
            x: x.to_f64(),
            y: y.to_f64(),
        });
    }
    let e = match (x.exponent(), y.exponent()) {
        (Some(a), Some(b)) => a.max(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => {
            return Err(Error::InvalidTriple {
                x: x.to_f64(),
                y: y.to_f64(),
            })
        }
    };
    // max(|x|, |y|) lands in [1/2, 1), hence the radius in [1/2, sqrt 2)
    let mut shift = -e;
    let sx = x.scale_pow2(shift);
    let sy = y.scale_pow2(shift);
    let r2 = sx * sx + sy * sy;
    let quarter = F::from_f64(0.25);
    if r2 > F::ONE {
        shift -= 1;
    } else if r2 <= quarter {
        shift += 1;
    }
    let nx = x.scale_pow2(shift);
    let ny = y.scale_pow2(shift);
    if nx.scale_pow2(-shift) != x || ny.scale_pow2(-shift) != y {
        return Err(Error::ExponentRange {
            x: x.to_f64(),
            y: y.to_f64(),
        });
    }
    Ok((nx, ny))
}
