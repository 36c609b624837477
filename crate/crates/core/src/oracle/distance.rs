//! Euclidean distances between segments and polygons.

use crate::linking::PolygonalCurve;
use crate::vec3::Point3;

/// Shortest distance between segments `[p1, q1]` and `[p2, q2]`.
pub fn segment_distance(p1: Point3, q1: Point3, p2: Point3, q2: Point3) -> f64 {
    let d1 = q1 - p1;
    let d2 = q2 - p2;
    let r = p1 - p2;
    let a = d1.dot(d1);
    let e = d2.dot(d2);
    let f = d2.dot(r);
    let clamp = |x: f64| x.clamp(0.0, 1.0);

    let (s, t) = if a == 0.0 && e == 0.0 {
        (0.0, 0.0)
    } else if a == 0.0 {
        (0.0, clamp(f / e))
    } else {
        let c = d1.dot(r);
        if e == 0.0 {
            (clamp(-c / a), 0.0)
        } else {
            let b = d1.dot(d2);
            let denom = a * e - b * b;
            let mut s = if denom > 0.0 { clamp((b * f - c * e) / denom) } else { 0.0 };
            let mut t = (b * s + f) / e;
            if t < 0.0 {
                t = 0.0;
                s = clamp(-c / a);
            } else if t > 1.0 {
                t = 1.0;
                s = clamp((b - c) / a);
            }
            (s, t)
        }
    };
    let c1 = Point3::new(p1.x + s * d1.x, p1.y + s * d1.y, p1.z + s * d1.z);
    let c2 = Point3::new(p2.x + t * d2.x, p2.y + t * d2.y, p2.z + t * d2.z);
    (c1 - c2).norm()
}

/// Shortest distance between two closed polygons.
pub fn min_distance(p: &PolygonalCurve, q: &PolygonalCurve) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..p.len() {
        let (a, b) = p.segment(i);
        for j in 0..q.len() {
            let (c, d) = q.segment(j);
            best = best.min(segment_distance(a, b, c, d));
        }
    }
    best
}

/// Shortest distance between segments of one polygon that share no vertex.
pub fn min_self_distance(p: &PolygonalCurve) -> f64 {
    let n = p.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let (a, b) = p.segment(i);
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (c, d) = p.segment(j);
            best = best.min(segment_distance(a, b, c, d));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64, z: f64) -> Point3 {
        Point3::new(x, y, z)
    }

    #[test]
    fn skew_segments() {
        let d = segment_distance(pt(-1.0, 0.0, 0.0), pt(1.0, 0.0, 0.0), pt(0.0, -1.0, 2.0), pt(0.0, 1.0, 2.0));
        assert!((d - 2.0).abs() < 1e-15);
    }

    #[test]
    fn endpoint_cases() {
        let d = segment_distance(pt(0.0, 0.0, 0.0), pt(1.0, 0.0, 0.0), pt(3.0, 4.0, 0.0), pt(5.0, 4.0, 0.0));
        assert!((d - (4.0f64 * 4.0 + 2.0 * 2.0).sqrt()).abs() < 1e-15);
        let d = segment_distance(pt(0.0, 0.0, 0.0), pt(0.0, 0.0, 0.0), pt(1.0, -1.0, 0.0), pt(1.0, 1.0, 0.0));
        assert!((d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parallel_and_crossing() {
        let d = segment_distance(pt(0.0, 0.0, 0.0), pt(2.0, 0.0, 0.0), pt(1.0, 1.0, 0.0), pt(3.0, 1.0, 0.0));
        assert!((d - 1.0).abs() < 1e-15);
        let d = segment_distance(pt(-1.0, 0.0, 0.0), pt(1.0, 0.0, 0.0), pt(0.0, -1.0, 0.0), pt(0.0, 1.0, 0.0));
        assert_eq!(d, 0.0);
    }
}
