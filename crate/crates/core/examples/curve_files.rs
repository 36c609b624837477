//! Writing and reading the JSON curve and chain formats.

use certilink::io::{ChainFile, CurveFile};
use certilink::{chain_linking, generate, linking_number, LinkOptions};

fn main() -> certilink::Result<()> {
    let dir = std::env::temp_dir();
    let (p, q) = generate::torus_link(2, 24);

    let path = dir.join("certilink-example-curves.json");
    CurveFile::new().with("a", &p).with("b", &q).save(&path)?;
    let file = CurveFile::load(&path)?;
    let names: Vec<&str> = file.names().collect();
    let r = linking_number(&file.curve("a")?, &file.curve("b")?)?;
    println!("{}: curves {names:?}, L = {}", path.display(), r.result.value);

    let mut points: Vec<[f64; 3]> = p.vertices().iter().map(|v| [v.x, v.y, v.z]).collect();
    let offset = points.len();
    points.extend(q.vertices().iter().map(|v| [v.x, v.y, v.z]));
    let mut chains = ChainFile::new(points);
    let n = p.len();
    let edges = |base: usize, w: i64| -> Vec<certilink::Edge> {
        (0..n).map(|i| certilink::Edge::new(base + i, base + (i + 1) % n, w)).collect()
    };
    chains.push_edges("a", &edges(0, 3));
    chains.push_edges("b", &edges(offset, 1));
    let path = dir.join("certilink-example-chains.json");
    chains.save(&path)?;
    let loaded = ChainFile::load(&path)?;
    let r = chain_linking(&loaded.chain("a")?, &loaded.chain("b")?, &LinkOptions::default())?;
    println!("{}: weighted L = {}", path.display(), r.result.value);
    Ok(())
}
