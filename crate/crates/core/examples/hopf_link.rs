//! Certified linking number of the Hopf link at growing resolution.

use certilink::{generate, linking_number};

fn main() -> certilink::Result<()> {
    for n in [16, 64, 256, 1024] {
        let (p, q) = generate::hopf(n);
        let r = linking_number(&p, &q)?;
        println!(
            "N = {n:>4}: L = {} certified={} bound {:.3e} u residual {:.2e}",
            r.result.value, r.result.certified, r.result.err_bound_u, r.residual_angle
        );
    }
    Ok(())
}
