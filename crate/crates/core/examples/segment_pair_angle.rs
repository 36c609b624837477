//! One segment pair: its angle, the radii and the a-posteriori bound.

use certilink::{a_priori_ok, build_angle, oracle, Point3};

fn main() -> certilink::Result<()> {
    let p = Point3::new(0.0, 0.0, 0.0);
    let pn = Point3::new(1.0, 0.0, 0.0);
    let q = Point3::new(0.3, -0.4, 0.25);
    let qn = Point3::new(0.3, 0.6, 0.25);

    let a = build_angle(p, pn, q, qn)?;
    let reference = oracle::pair_angle(p, pn, q, qn)?;
    println!("angle       {:.17}", a.angle());
    println!("reference   {}", reference);
    println!("radii       {:?}", a.radii);
    println!("bound       {:.3} u", a.err_bound);
    println!("a-priori ok {}", a_priori_ok(p, pn, q, qn));

    // closing the gap over a crossing drives the angle towards -pi
    for h in [1e-2, 1e-5, 1e-8, 1e-11] {
        let lift = Point3::new(0.0, 0.0, h - 0.25);
        let a = build_angle(p, pn, q + lift, qn + lift)?;
        println!("gap {h:.0e}: angle {:+.15}, bound {:.3e} u", a.angle(), a.err_bound);
    }
    Ok(())
}
