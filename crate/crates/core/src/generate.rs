//! Standard test links and random closed curves.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linking::PolygonalCurve;
use crate::oracle;
use crate::vec3::Point3;

/// Smallest allowed distance between the two components of a random link.
pub const RANDOM_MIN_SEPARATION: f64 = 1e-2;
/// Largest trigonometric degree of a random curve.
pub const RANDOM_MAX_DEGREE: usize = 5;

fn sample(n: usize, f: impl Fn(f64) -> [f64; 3]) -> PolygonalCurve {
    let pts: Vec<Point3> = (0..n)
        .map(|k| Point3::from(f(2.0 * PI * k as f64 / n as f64)))
        .collect();
    PolygonalCurve::new(pts).expect("sampled curve has distinct consecutive vertices")
}

fn check_segments(n: usize) {
    assert!(n >= 3, "a closed polygon needs at least 3 segments, got {n}");
}

/// Unit circle in the xy-plane and unit circle in the xz-plane through its
/// centre, oriented so the linking number is `+1`.
pub fn hopf(n: usize) -> (PolygonalCurve, PolygonalCurve) {
    check_segments(n);
    (
        sample(n, |t| [t.cos(), t.sin(), 0.0]),
        sample(n, |t| [1.0 + t.cos(), 0.0, -t.sin()]),
    )
}

/// Two unit circles in the xy-plane with centres 5 apart.
pub fn unlink(n: usize) -> (PolygonalCurve, PolygonalCurve) {
    check_segments(n);
    (
        sample(n, |t| [t.cos(), t.sin(), 0.0]),
        sample(n, |t| [5.0 + t.cos(), t.sin(), 0.0]),
    )
}

/// The two components of the torus link `T(2, 2k)` on the torus with major
/// radius 2 and minor radius 1, each sampled at `n` points. Linking number `k`.
pub fn torus_link(k: u32, n: usize) -> (PolygonalCurve, PolygonalCurve) {
    check_segments(n);
    let component = |phase: f64| {
        sample(n, move |t| {
            let psi = -(k as f64) * t + phase;
            let rad = 2.0 + psi.cos();
            [rad * t.cos(), rad * t.sin(), psi.sin()]
        })
    };
    (component(0.0), component(PI))
}

/// Trefoil knot `(sin t + 2 sin 2t, cos t - 2 cos 2t, -sin 3t)` at `n` points.
pub fn trefoil(n: usize) -> PolygonalCurve {
    check_segments(n);
    sample(n, |t| {
        [
            t.sin() + 2.0 * (2.0 * t).sin(),
            t.cos() - 2.0 * (2.0 * t).cos(),
            -(3.0 * t).sin(),
        ]
    })
}

/// Mirror image through the xy-plane.
pub fn mirror(c: &PolygonalCurve) -> PolygonalCurve {
    c.map(|v| Point3::new(v.x, v.y, -v.z))
        .expect("mirroring keeps vertices distinct")
}

/// Regular planar `n`-gon of radius 1 in the plane `z = 0`.
pub fn regular_polygon(n: usize) -> PolygonalCurve {
    check_segments(n);
    sample(n, |t| [t.cos(), t.sin(), 0.0])
}

fn random_curve(rng: &mut ChaCha8Rng, n: usize, centre: [f64; 3]) -> Option<PolygonalCurve> {
    let degree = rng.gen_range(1..=RANDOM_MAX_DEGREE);
    let mut coeffs = Vec::with_capacity(degree);
    for d in 1..=degree {
        let mut c = [[0.0; 3]; 2];
        for row in c.iter_mut() {
            for v in row.iter_mut() {
                *v = rng.gen_range(-1.0..1.0) / d as f64;
            }
        }
        coeffs.push(c);
    }
    let pts: Vec<Point3> = (0..n)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / n as f64;
            let mut p = centre;
            for (d, [a, b]) in coeffs.iter().enumerate() {
                let (s, c) = ((d + 1) as f64 * t).sin_cos();
                for i in 0..3 {
                    p[i] += a[i] * c + b[i] * s;
                }
            }
            Point3::from(p)
        })
        .collect();
    PolygonalCurve::new(pts).ok()
}

/// Two random trigonometric-polynomial curves of degree at most 5, sampled
/// at `n` points each. Draws are repeated until the components stay
/// `RANDOM_MIN_SEPARATION` apart. Deterministic in `seed`.
pub fn random_link(seed: u64, n: usize) -> (PolygonalCurve, PolygonalCurve) {
    check_segments(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let offset = [
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        ];
        let (Some(p), Some(q)) = (
            random_curve(&mut rng, n, [0.0; 3]),
            random_curve(&mut rng, n, offset),
        ) else {
            continue;
        };
        if oracle::min_distance(&p, &q) >= RANDOM_MIN_SEPARATION {
            return (p, q);
        }
    }
}
