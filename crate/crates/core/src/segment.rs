//! The angle contributed by one pair of straight segments.
//!
//! For segments `[p, p']` and `[q, q']` the four connecting vectors
//! `alpha = q - p`, `beta = q - p'`, `gamma = q' - p'` and `omega = q' - p`
//! are normalized and combined into two directions `(x1, y1)` and `(x2, y2)`
//! whose angle difference is the pair's share of `2*pi*L`. The difference is
//! formed as one triple product, so the whole contribution comes back as a
//! single [`AngleTriple`] together with an a-posteriori bound on its
//! rounding error.

use crate::budget::pair_error_bound;
use crate::error::{Error, Result};
use crate::float::Real;
use crate::triple::{cross_detect, AngleTriple, PointSign};
use crate::vec3::Vec3;

/// Angle of one segment pair and its rounding-error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentPairAngle<F: Real = f64> {
    /// Normalized triple holding the pair angle.
    pub triple: AngleTriple<F>,
    /// Sign of the triple's direction.
    pub sign: PointSign,
    /// Error bound in units of `u`.
    pub err_bound: f64,
    /// Floating-point radii `R`, `R'` of the two intermediate directions.
    pub radii: [f64; 2],
}

impl<F: Real> SegmentPairAngle<F> {
    pub fn angle(&self) -> f64 {
        self.triple.angle()
    }
}

/// Computes the pair angle of `[p, p_next]` against `[q, q_next]`.
///
/// Fails with [`Error::DegenerateSegments`] when an endpoint of one segment
/// coincides with an endpoint of the other, and with
/// [`Error::IntersectionDetected`] when an intermediate direction vanishes,
/// which for exact inputs happens only if the segments intersect.
pub fn build_angle<F: Real>(
    p: Vec3<F>,
    p_next: Vec3<F>,
    q: Vec3<F>,
    q_next: Vec3<F>,
) -> Result<SegmentPairAngle<F>> {
    let alpha = q - p;
    let beta = q - p_next;
    let gamma = q_next - p_next;
    let omega = q_next - p;

    let la = alpha.norm();
    let lb = beta.norm();
    let lg = gamma.norm();
    let lw = omega.norm();
    if la == F::ZERO || lb == F::ZERO || lg == F::ZERO || lw == F::ZERO {
        return Err(Error::DegenerateSegments);
    }
    let alpha = alpha / la;
    let beta = beta / lb;
    let gamma = gamma / lg;
    let omega = omega / lw;

    let t1 = alpha + gamma;
    let t2 = alpha.cross(gamma);
    let t3 = F::ONE + alpha.dot(gamma);
    let x1 = t3 + beta.dot(t1);
    let y1 = beta.dot(t2);
    let x2 = t3 + omega.dot(t1);
    let y2 = omega.dot(t2);

    if (x1 == F::ZERO && y1 == F::ZERO) || (x2 == F::ZERO && y2 == F::ZERO) {
        return Err(Error::IntersectionDetected);
    }

    // conj(x1, y1) * (x2, y2)
    let x = x1 * x2 + y1 * y2;
    let y = x1 * y2 - y1 * x2;
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::InvalidTriple {
            x: x.to_f64(),
            y: y.to_f64(),
        });
    }
    let sign = PointSign::of(x, y).ok_or(Error::IntersectionDetected)?;
    // In exact arithmetic y1 and y2 have opposite signs and the turn count
    // only depends on y1. Rounding can give both the same sign when they are
    // tiny; the count is then taken from the rounded operands themselves.
    let sigma = if y1 * y2 > F::ZERO {
        let first = PointSign::of(x1, -y1).ok_or(Error::IntersectionDetected)?;
        let second = PointSign::of(x2, y2).ok_or(Error::IntersectionDetected)?;
        cross_detect(first, second, sign)
    } else {
        match sign {
            PointSign::Positive if y1 > F::ZERO => -1,
            PointSign::Negative if y1 < F::ZERO => 1,
            _ => 0,
        }
    };

    let r1 = (x1 * x1 + y1 * y1).sqrt().to_f64();
    let r2 = (x2 * x2 + y2 * y2).sqrt().to_f64();
    let triple = AngleTriple::from_parts(x, y, sigma).normalize()?;

    Ok(SegmentPairAngle {
        triple,
        sign,
        err_bound: pair_error_bound(r1, r2),
        radii: [r1, r2],
    })
}

/// True when both segments are no longer than the shortest endpoint-to-endpoint
/// distance between them. Such pairs have a fixed a-priori error bound.
pub fn a_priori_ok<F: Real>(p: Vec3<F>, p_next: Vec3<F>, q: Vec3<F>, q_next: Vec3<F>) -> bool {
    let c = [(q - p), (q - p_next), (q_next - p), (q_next - p_next)]
        .into_iter()
        .map(|v| v.norm())
        .fold(F::from_f64(f64::INFINITY), |m, d| if d < m { d } else { m });
    (p - p_next).norm() <= c && (q - q_next).norm() <= c
}
