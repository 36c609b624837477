//! Adding angles as triples keeps whole turns exact.

use std::f64::consts::TAU;

use certilink::AngleTriple;

fn main() -> certilink::Result<()> {
    // a seventh of a turn, added 7000 times
    let step = AngleTriple::new((TAU / 7.0).cos(), (TAU / 7.0).sin(), 0)?;
    let mut acc = AngleTriple::IDENTITY;
    for _ in 0..7000 {
        acc = acc.add(&step)?;
    }
    println!("after 7000 steps: {acc:?}");
    println!("turns = {}, leftover angle = {:.3e} rad", acc.sigma(), acc.y().atan2(acc.x()));

    let back = acc.sub(&step.scalar_mul(7000)?)?;
    println!("minus 7000 * step: {back:?} (angle {:.3e})", back.angle());
    Ok(())
}
