//! Direct numerical integration of the Gauss integrand over one segment pair.
//!
//! Nested adaptive Gauss-Kronrod (7, 15) in double precision. Slow and only
//! as accurate as the requested tolerance; it shares nothing with the
//! closed-form references and serves to cross-check them.

use crate::vec3::Point3;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod estimate on `[a, b]` and its difference from the
/// embedded 7-point Gauss rule.
fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for k in 0..7 {
        let dx = h * XGK[k];
        let s = f(c - dx) + f(c + dx);
        kronrod += WGK[k] * s;
        if k % 2 == 1 {
            gauss += WG[k / 2] * s;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive integral of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn recurse(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (v, err) = gk15(f, a, b);
        if err <= tol || depth == 0 {
            return v;
        }
        let m = 0.5 * (a + b);
        recurse(f, a, m, 0.5 * tol, depth - 1) + recurse(f, m, b, 0.5 * tol, depth - 1)
    }
    recurse(&mut f, a, b, tol, 40)
}

/// Angle of segment pair `[p, p_next] x [q, q_next]` as
/// `1/2 * integral over [0,1]^2 of (P - Q) . (dP x dQ) / |P - Q|^3`,
/// i.e. `2*pi` times the pair's Gauss linking contribution.
pub fn gauss_pair_integral(p: Point3, p_next: Point3, q: Point3, q_next: Point3, tol: f64) -> f64 {
    let dp = p_next - p;
    let dq = q_next - q;
    let n = dp.cross(dq);
    let inner = |s: f64| {
        let ps = Point3::new(p.x + s * dp.x, p.y + s * dp.y, p.z + s * dp.z);
        integrate(
            |t: f64| {
                let qt = Point3::new(q.x + t * dq.x, q.y + t * dq.y, q.z + t * dq.z);
                let r = ps - qt;
                let d = r.norm();
                r.dot(n) / (d * d * d)
            },
            0.0,
            1.0,
            0.1 * tol,
        )
    };
    0.5 * integrate(inner, 0.0, 1.0, tol)
}
