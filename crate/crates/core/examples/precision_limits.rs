//! Where certification runs out in single precision, and how far double
//! precision goes.

use certilink::budget::integer_limit;
use certilink::{bench, LinkOptions, Precision};

fn main() -> certilink::Result<()> {
    for precision in [Precision::Single, Precision::Double] {
        let options = LinkOptions {
            precision,
            parallel: true,
            ..Default::default()
        };
        let max = if precision == Precision::Single { 2048 } else { 4096 };
        println!("{precision:?}: limit {} u", integer_limit(precision.unit_roundoff()));
        let rows = bench::sweep(64, max, &options)?;
        for r in &rows {
            println!("  N = {:>4}: L = {} bound {:.3e} u certified={}", r.n, r.value, r.bound_u, r.certified);
        }
        println!("  budget per pair: {:.2} u", bench::budget_slope(&rows));
    }
    Ok(())
}
