//! Extended-precision pair angles from the half solid angle of a triangle.
//!
//! For vectors `a, b, c` from a common apex, half the signed solid angle of
//! the triangle they span is
//! `atan2(a . (b x c), |a||b||c| + (b.c)|a| + (c.a)|b| + (a.b)|c|)`.
//! The angle of segment pair `[p, p'] x [q, q']` is the difference of two
//! such terms over the quadrilateral `q - p, q - p', q' - p', q' - p`.

use crate::error::{Error, Result};
use crate::linking::PolygonalCurve;
use crate::vec3::Point3;

use super::dd::Dd;

#[derive(Clone, Copy)]
struct DdVec([Dd; 3]);

impl DdVec {
    fn between(from: Point3, to: Point3) -> DdVec {
        DdVec([
            Dd::diff(to.x, from.x),
            Dd::diff(to.y, from.y),
            Dd::diff(to.z, from.z),
        ])
    }

    fn dot(&self, o: &DdVec) -> Dd {
        self.0[0] * o.0[0] + self.0[1] * o.0[1] + self.0[2] * o.0[2]
    }

    fn cross(&self, o: &DdVec) -> DdVec {
        let [a, b, c] = self.0;
        let [d, e, f] = o.0;
        DdVec([b * f - c * e, c * d - a * f, a * e - b * d])
    }

    fn norm(&self) -> Dd {
        self.dot(self).sqrt()
    }
}

/// Half the signed solid angle subtended by the triangle `a, b, c`.
fn half_solid_angle(a: &DdVec, b: &DdVec, c: &DdVec) -> Dd {
    let (la, lb, lc) = (a.norm(), b.norm(), c.norm());
    let num = a.dot(&b.cross(c));
    let den = la * lb * lc + b.dot(c) * la + c.dot(a) * lb + a.dot(b) * lc;
    Dd::atan2(num, den)
}

/// Reference angle of the segment pair `[p, p_next] x [q, q_next]`, radians.
///
/// Summed over all pairs of two closed polygons this is `2*pi` times their
/// linking number.
pub fn pair_angle(p: Point3, p_next: Point3, q: Point3, q_next: Point3) -> Result<Dd> {
    if [p, p_next].iter().any(|a| *a == q || *a == q_next) {
        return Err(Error::DegenerateSegments);
    }
    let alpha = DdVec::between(p, q);
    let beta = DdVec::between(p_next, q);
    let gamma = DdVec::between(p_next, q_next);
    let omega = DdVec::between(p, q_next);
    Ok(half_solid_angle(&alpha, &beta, &gamma) - half_solid_angle(&alpha, &omega, &gamma))
}

/// `atan2(y, x) + 2*pi*sigma` evaluated in double-double.
pub fn triple_angle(x: f64, y: f64, sigma: i64) -> Dd {
    Dd::atan2(Dd::from(y), Dd::from(x)) + Dd::TAU.mul_f64(sigma as f64)
}

/// Linking number as a real: the pair-angle sum divided by `2*pi`.
pub fn linking_by_quadrature(p: &PolygonalCurve, q: &PolygonalCurve) -> Result<Dd> {
    let mut total = Dd::ZERO;
    for i in 0..p.len() {
        let (a, b) = p.segment(i);
        for j in 0..q.len() {
            let (c, d) = q.segment(j);
            total = total + pair_angle(a, b, c, d)?;
        }
    }
    Ok(total / Dd::TAU)
}

/// Writhe as a real, over unordered pairs of segments that share no vertex.
pub fn writhe_by_quadrature(p: &PolygonalCurve) -> Result<Dd> {
    let n = p.len();
    let mut total = Dd::ZERO;
    for i in 0..n {
        let (a, b) = p.segment(i);
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (c, d) = p.segment(j);
            total = total + pair_angle(a, b, c, d)?;
        }
    }
    Ok(total.mul_f64(2.0) / Dd::TAU)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perpendicular_unit_segments() {
        // reversing one segment negates the angle, swapping the pair keeps it
        let p = Point3::new(-1.0, 0.0, 0.0);
        let pn = Point3::new(1.0, 0.0, 0.0);
        let q = Point3::new(0.0, -1.0, 1.0);
        let qn = Point3::new(0.0, 1.0, 1.0);
        let a = pair_angle(p, pn, q, qn).unwrap();
        let b = pair_angle(pn, p, q, qn).unwrap();
        let c = pair_angle(q, qn, p, pn).unwrap();
        assert!((a + b).abs().hi < 1e-30);
        assert!((a - c).abs().hi < 1e-30);
        assert!(a.hi.abs() > 0.1);
    }

    #[test]
    fn infinite_lines_limit() {
        // long perpendicular segments at distance 1 approach half a turn
        let l = 1e8;
        let a = pair_angle(
            Point3::new(-l, 0.0, 0.0),
            Point3::new(l, 0.0, 0.0),
            Point3::new(0.0, -l, 1.0),
            Point3::new(0.0, l, 1.0),
        )
        .unwrap();
        assert!((a.abs().hi - std::f64::consts::PI).abs() < 1e-6);
    }

    #[test]
    fn triple_angle_turns() {
        let t = triple_angle(-1.0, 0.0, 1);
        assert!((t - Dd::PI.mul_f64(3.0)).abs().hi < 1e-30);
    }
}
