//! Linking number by counting signed crossings in a planar projection.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linking::PolygonalCurve;
use crate::vec3::Point3;

/// Directions tried before giving up.
pub const MAX_ATTEMPTS: usize = 100;
/// Relative size below which projected distances and determinants count as
/// degenerate.
pub const GENERICITY_TOL: f64 = 1e-12;

/// Signed crossing sums of one projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingCount {
    /// Crossings where the first curve passes over the second.
    pub first_over: i64,
    /// Crossings where the second curve passes over the first.
    pub second_over: i64,
}

struct Frame {
    dir: Point3,
    e1: Point3,
    e2: Point3,
}

impl Frame {
    /// Orthonormal `e1, e2` with `e1 x e2 = dir`.
    fn new(dir: Point3) -> Option<Frame> {
        let n = dir.norm();
        if !(n.is_finite() && n > 0.0) {
            return None;
        }
        let dir = dir / n;
        let axis = if dir.x.abs() <= dir.y.abs() && dir.x.abs() <= dir.z.abs() {
            Point3::new(1.0, 0.0, 0.0)
        } else if dir.y.abs() <= dir.z.abs() {
            Point3::new(0.0, 1.0, 0.0)
        } else {
            Point3::new(0.0, 0.0, 1.0)
        };
        let e1 = dir.cross(axis);
        let e1 = e1 / e1.norm();
        let e2 = dir.cross(e1);
        Some(Frame { dir, e1, e2 })
    }

    fn project(&self, v: Point3) -> [f64; 2] {
        [v.dot(self.e1), v.dot(self.e2)]
    }
}

fn cross2(a: [f64; 2], b: [f64; 2]) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn sub2(a: [f64; 2], b: [f64; 2]) -> [f64; 2] {
    [a[0] - b[0], a[1] - b[1]]
}

fn norm2(a: [f64; 2]) -> f64 {
    a[0].hypot(a[1])
}

fn point_segment_2d(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let d = sub2(b, a);
    let l2 = d[0] * d[0] + d[1] * d[1];
    let t = if l2 > 0.0 {
        ((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / l2
    } else {
        0.0
    };
    let t = t.clamp(0.0, 1.0);
    norm2(sub2(p, [a[0] + t * d[0], a[1] + t * d[1]]))
}

/// Counts crossings of the projections along `dir`, or `None` when the
/// projection is not generic.
///
/// A crossing is positive when `(over x under) . dir > 0`, with "over"
/// meaning the larger coordinate along `dir`.
pub fn crossing_count(p: &PolygonalCurve, q: &PolygonalCurve, dir: Point3) -> Option<CrossingCount> {
    let frame = Frame::new(dir)?;
    let pp: Vec<[f64; 2]> = p.vertices().iter().map(|&v| frame.project(v)).collect();
    let qq: Vec<[f64; 2]> = q.vertices().iter().map(|&v| frame.project(v)).collect();
    let scale = pp
        .iter()
        .chain(&qq)
        .flat_map(|v| [v[0].abs(), v[1].abs()])
        .fold(f64::MIN_POSITIVE, f64::max);
    let tol = GENERICITY_TOL * scale;
    let (n, m) = (pp.len(), qq.len());

    let mut count = CrossingCount {
        first_over: 0,
        second_over: 0,
    };
    for i in 0..n {
        let (a, b) = (pp[i], pp[(i + 1) % n]);
        let d1 = sub2(b, a);
        for j in 0..m {
            let (c, d) = (qq[j], qq[(j + 1) % m]);
            if norm2(sub2(a, c)) < tol {
                return None;
            }
            let d2 = sub2(d, c);
            let den = cross2(d1, d2);
            if den.abs() < tol * scale {
                let near = point_segment_2d(a, c, d) < tol
                    || point_segment_2d(b, c, d) < tol
                    || point_segment_2d(c, a, b) < tol
                    || point_segment_2d(d, a, b) < tol;
                if near {
                    return None;
                }
                continue;
            }
            let ca = sub2(c, a);
            let s = cross2(ca, d2) / den;
            let t = cross2(ca, d1) / den;
            let es = tol / norm2(d1);
            let et = tol / norm2(d2);
            let s_in = s > -es && s < 1.0 + es;
            let t_in = t > -et && t < 1.0 + et;
            if !(s_in && t_in) {
                continue;
            }
            if s < es || s > 1.0 - es || t < et || t > 1.0 - et {
                return None;
            }
            let (p0, p1) = p.segment(i);
            let (q0, q1) = q.segment(j);
            let hp = (p0 + (p1 - p0).scale(s)).dot(frame.dir);
            let hq = (q0 + (q1 - q0).scale(t)).dot(frame.dir);
            if (hp - hq).abs() < tol {
                return None;
            }
            // cross(over, under) is den when p is over and -den otherwise
            let sign = den.signum() as i64;
            if hp > hq {
                count.first_over += sign;
            } else {
                count.second_over -= sign;
            }
        }
    }
    Some(count)
}

/// Linking number from the crossings where `p` passes over `q`.
///
/// Starts with `dir` and retries with pseudo-random directions while the
/// projection is degenerate or the two crossing sums disagree.
pub fn linking_by_projection(p: &PolygonalCurve, q: &PolygonalCurve, dir: Point3) -> Result<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1ead);
    let mut d = dir;
    for _ in 0..MAX_ATTEMPTS {
        if let Some(c) = crossing_count(p, q, d) {
            if c.first_over == c.second_over {
                return Ok(c.first_over);
            }
        }
        d = random_direction(&mut rng);
    }
    Err(Error::NonGenericDirection {
        attempts: MAX_ATTEMPTS,
    })
}

/// A fixed direction unlikely to be degenerate for hand-made inputs.
pub fn default_direction() -> Point3 {
    Point3::new(std::f64::consts::FRAC_1_PI, 0.577_215_664_901_532_9, 0.751_879_699_248_120_3)
}

/// Uniform direction on the unit sphere.
pub fn random_direction(rng: &mut impl Rng) -> Point3 {
    loop {
        let v = Point3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle(n: usize, f: impl Fn(f64) -> [f64; 3]) -> PolygonalCurve {
        let pts: Vec<[f64; 3]> = (0..n)
            .map(|k| f(2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect();
        PolygonalCurve::from_coords(&pts).unwrap()
    }

    #[test]
    fn separated_circles() {
        let p = circle(16, |t| [t.cos(), t.sin(), 0.0]);
        let q = circle(16, |t| [5.0 + t.cos(), t.sin(), 0.0]);
        assert_eq!(linking_by_projection(&p, &q, default_direction()).unwrap(), 0);
    }

    #[test]
    fn linked_circles_reverse_and_swap() {
        let p = circle(24, |t| [t.cos(), t.sin(), 0.0]);
        let q = circle(24, |t| [1.0 + t.cos(), 0.0, t.sin()]);
        let l = linking_by_projection(&p, &q, default_direction()).unwrap();
        assert_eq!(l.abs(), 1);
        assert_eq!(linking_by_projection(&q, &p, default_direction()).unwrap(), l);
        assert_eq!(linking_by_projection(&p.reversed(), &q, default_direction()).unwrap(), -l);
    }

    #[test]
    fn axis_direction_is_retried() {
        // looking straight down z puts q's projection on a line through p
        let p = circle(12, |t| [t.cos(), t.sin(), 0.0]);
        let q = circle(12, |t| [1.0 + t.cos(), 0.0, t.sin()]);
        assert!(crossing_count(&p, &q, Point3::new(0.0, 0.0, 1.0)).is_none());
        assert_eq!(linking_by_projection(&p, &q, Point3::new(0.0, 0.0, 1.0)).unwrap().abs(), 1);
    }

    #[test]
    fn frame_is_right_handed() {
        let f = Frame::new(Point3::new(0.3, -0.2, 0.9)).unwrap();
        let c = f.e1.cross(f.e2);
        assert!((c - f.dir).norm() < 1e-15);
    }
}
