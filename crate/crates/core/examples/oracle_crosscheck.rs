//! Random links checked against the crossing count and the
//! extended-precision sum.

use certilink::{generate, linking_number, oracle};

fn main() -> certilink::Result<()> {
    let mut agree = 0;
    for seed in 0..50 {
        let (p, q) = generate::random_link(seed, 32);
        let r = linking_number(&p, &q)?;
        let proj = oracle::linking_by_projection(&p, &q, oracle::default_direction())?;
        let quad = oracle::linking_by_quadrature(&p, &q)?;
        if r.result.certified && r.result.value == proj && quad.round() == proj as f64 {
            agree += 1;
        } else {
            println!("seed {seed}: L = {} ({}), projection {proj}, quadrature {quad}", r.result.value, r.result.certified);
        }
        if seed < 5 {
            println!("seed {seed}: L = {proj}, quadrature {quad}, distance {:.3}", oracle::min_distance(&p, &q));
        }
    }
    println!("{agree} of 50 links agree");
    Ok(())
}
