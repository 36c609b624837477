#![allow(dead_code)]

//! Shared helpers: random inputs and double-double references for the
//! individual rounding-error constants.

use certilink::oracle::Dd;
use certilink::{AngleTriple, Point3};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const U: f64 = 1.0 / 9_007_199_254_740_992.0;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn point_in_cube(rng: &mut impl Rng, half: f64) -> Point3 {
    Point3::new(
        rng.gen_range(-half..half),
        rng.gen_range(-half..half),
        rng.gen_range(-half..half),
    )
}

pub fn unit_vector(rng: &mut impl Rng) -> Point3 {
    loop {
        let v = point_in_cube(rng, 1.0);
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

/// A segment pair with log-uniform lengths in `[1e-3, 2]` and start points
/// in `[-1, 1]^3`. Most draws are short relative to their separation and
/// satisfy the a-priori length condition.
pub fn random_segment_pair(rng: &mut impl Rng) -> (Point3, Point3, Point3, Point3) {
    let (p, pn) = random_segment(rng);
    let (q, qn) = random_segment(rng);
    (p, pn, q, qn)
}

fn random_segment(rng: &mut impl Rng) -> (Point3, Point3) {
    let p = point_in_cube(rng, 1.0);
    let len = 10f64.powf(rng.gen_range(-3.0..0.3));
    (p, p + unit_vector(rng).scale(len))
}

/// Four uniform points in `[-1, 1]^3`: long segments that often pass close
/// to each other, so the intermediate radii get small.
pub fn long_segment_pair(rng: &mut impl Rng) -> (Point3, Point3, Point3, Point3) {
    let [p, pn, q, qn] = std::array::from_fn(|_| point_in_cube(rng, 1.0));
    (p, pn, q, qn)
}

/// Alternates the short and the long generator.
pub fn mixed_segment_pair(rng: &mut impl Rng) -> (Point3, Point3, Point3, Point3) {
    if rng.gen_bool(0.5) {
        random_segment_pair(rng)
    } else {
        long_segment_pair(rng)
    }
}

/// Random triple with radius in `(1/2, 1]` and `sigma` in `-3..=3`.
pub fn random_triple(rng: &mut impl Rng) -> AngleTriple {
    loop {
        let x = rng.gen_range(-1.0..1.0);
        let y = rng.gen_range(-1.0..1.0);
        let r2: f64 = x * x + y * y;
        if r2 > 0.25 && r2 <= 1.0 {
            return AngleTriple::new(x, y, rng.gen_range(-3..=3)).unwrap();
        }
    }
}

/// Exact angle of a double-precision triple.
pub fn dd_angle(t: &AngleTriple) -> Dd {
    certilink::oracle::triple_angle(t.x(), t.y(), t.sigma())
}

pub type DdVec = [Dd; 3];

pub fn dd_diff(a: Point3, b: Point3) -> DdVec {
    [Dd::diff(a.x, b.x), Dd::diff(a.y, b.y), Dd::diff(a.z, b.z)]
}

pub fn dd_of(v: Point3) -> DdVec {
    [Dd::from(v.x), Dd::from(v.y), Dd::from(v.z)]
}

pub fn dd_dot(a: &DdVec, b: &DdVec) -> Dd {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn dd_cross(a: &DdVec, b: &DdVec) -> DdVec {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn dd_unit(a: &DdVec) -> DdVec {
    let n = dd_dot(a, a).sqrt();
    [a[0] / n, a[1] / n, a[2] / n]
}

/// Floating-point normalization exactly as the pair kernel performs it.
pub fn fl_unit(v: Point3) -> Point3 {
    v / v.norm()
}

/// Largest relative component error of `fl_unit(v)`, in units of `u`.
pub fn normalized_component_error(v: Point3) -> f64 {
    let exact = dd_unit(&dd_of(v));
    let got = fl_unit(v);
    [got.x, got.y, got.z]
        .iter()
        .zip(exact.iter())
        .filter(|(_, e)| e.hi != 0.0)
        .map(|(g, e)| ((Dd::from(*g) - *e) / *e).abs().hi / U)
        .fold(0.0, f64::max)
}

/// Error of the dot product of two normalized differences, in `u`.
pub fn unit_dot_error(p: Point3, q: Point3, r: Point3, s: Point3) -> f64 {
    let exact = dd_dot(&dd_unit(&dd_diff(p, q)), &dd_unit(&dd_diff(r, s)));
    let got = fl_unit(p - q).dot(fl_unit(r - s));
    (Dd::from(got) - exact).abs().hi / U
}

/// Error of `1 + d1 + d2 + d3` over three normalized differences, in `u`.
pub fn four_term_error(pts: [Point3; 6]) -> f64 {
    let ea = dd_unit(&dd_diff(pts[0], pts[1]));
    let eb = dd_unit(&dd_diff(pts[2], pts[3]));
    let ec = dd_unit(&dd_diff(pts[4], pts[5]));
    let exact = Dd::ONE + dd_dot(&ea, &eb) + dd_dot(&eb, &ec) + dd_dot(&ea, &ec);
    let a = fl_unit(pts[0] - pts[1]);
    let b = fl_unit(pts[2] - pts[3]);
    let c = fl_unit(pts[4] - pts[5]);
    let got = 1.0 + a.dot(b) + b.dot(c) + a.dot(c);
    (Dd::from(got) - exact).abs().hi / U
}

/// Error of `a . (b x c)` over three normalized differences, in `u`.
pub fn triple_product_error(pts: [Point3; 6]) -> f64 {
    let ea = dd_unit(&dd_diff(pts[0], pts[1]));
    let eb = dd_unit(&dd_diff(pts[2], pts[3]));
    let ec = dd_unit(&dd_diff(pts[4], pts[5]));
    let exact = dd_dot(&ea, &dd_cross(&eb, &ec));
    let a = fl_unit(pts[0] - pts[1]);
    let b = fl_unit(pts[2] - pts[3]);
    let c = fl_unit(pts[4] - pts[5]);
    let got = a.dot(b.cross(c));
    (Dd::from(got) - exact).abs().hi / U
}

pub fn six_points(rng: &mut impl Rng) -> [Point3; 6] {
    std::array::from_fn(|_| point_in_cube(rng, 1.0))
}
