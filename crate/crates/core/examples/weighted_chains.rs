//! Linking numbers of integer-weighted edge chains.

use certilink::{chain_linking, generate, Chain, Edge, LinkOptions};

fn main() -> certilink::Result<()> {
    let (p, q) = generate::hopf(64);
    let options = LinkOptions::default();
    let a = Chain::from_curve(&p);
    let b = Chain::from_curve(&q);
    for (wa, wb) in [(1, 1), (2, 1), (-1, 3), (2, -2)] {
        let r = chain_linking(&a.scaled(wa), &b.scaled(wb), &options)?;
        println!("weights ({wa:>2}, {wb:>2}): L = {:>2}, bound {:.3e} u", r.result.value, r.result.err_bound_u);
    }

    // a chain that is not a cycle is rejected
    let open = Chain::new(p.vertices().to_vec(), vec![Edge::new(0, 1, 1), Edge::new(1, 2, 1)])?;
    println!("open chain boundary: {:?}", open.boundary());
    if let Err(e) = chain_linking(&open, &b, &options) {
        println!("open chain: {e}");
    }
    Ok(())
}
