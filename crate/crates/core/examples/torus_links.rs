//! T(2, 2k) torus links, sequential and on the thread pool.

use std::time::Instant;

use certilink::{generate, linking_number_with, oracle, LinkOptions};

fn main() -> certilink::Result<()> {
    let n = 512;
    for k in 1..=8 {
        let (p, q) = generate::torus_link(k, n);
        for parallel in [false, true] {
            let options = LinkOptions {
                parallel,
                ..Default::default()
            };
            let start = Instant::now();
            let r = linking_number_with(&p, &q, &options)?;
            println!(
                "T(2,{:>2}) parallel={parallel:<5} L = {} certified={} in {:.1} ms",
                2 * k,
                r.result.value,
                r.result.certified,
                start.elapsed().as_secs_f64() * 1e3
            );
        }
        let crossings = oracle::linking_by_projection(&p, &q, oracle::default_direction())?;
        println!("         crossing count gives {crossings}");
    }
    Ok(())
}
