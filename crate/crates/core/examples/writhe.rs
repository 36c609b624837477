//! Writhe of a trefoil, its mirror image and a flat polygon.

use std::f64::consts::TAU;

use certilink::{generate, oracle, writhe};

fn main() -> certilink::Result<()> {
    let t = generate::trefoil(96);
    for (name, curve) in [
        ("trefoil", t.clone()),
        ("mirror", generate::mirror(&t)),
        ("flat 96-gon", generate::regular_polygon(96)),
    ] {
        let r = writhe(&curve)?;
        let abs = r.result.err_bound_u * r.unit_roundoff() / TAU;
        println!("{name:<12} W = {:+.15} +/- {abs:.1e}", r.result.value);
    }
    let quad = oracle::writhe_by_quadrature(&t)?;
    println!("extended-precision trefoil: {quad}");
    Ok(())
}
