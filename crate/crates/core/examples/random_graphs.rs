//! Sample random graphs, inspect their components and round-trip them
//! through graph6.
//!
//! ```text
//! cargo run --example random_graphs
//! ```

use lincol::graph::{component_diameters, sample_gnp, sample_two_round, RoundSplit};
use lincol::graph6::{encode_graph6, parse_graph6};
use lincol::{Graph, Seed};

fn main() -> lincol::Result<()> {
    let g = sample_gnp(1000, 1.5 / 1000.0, Seed(7))?;
    let comps = component_diameters(&g);
    let (giant, diam) = comps.iter().max_by_key(|(c, _)| c.len()).unwrap();
    println!(
        "G(1000, 1.5/n): {} edges, {} components, largest has {} vertices and diameter {diam}",
        g.edge_count(),
        comps.len(),
        giant.len()
    );

    // the same G(n, p) exposed in two rounds
    let two = sample_two_round(200, 0.3, Seed(7), RoundSplit::Symmetric)?;
    println!(
        "two rounds: p1 = {:.4}, p2 = {:.4}, p = {:.4}; edges {} + {} -> {}",
        two.p1,
        two.p2,
        two.p(),
        two.g1.edge_count(),
        two.g2.edge_count(),
        two.union.edge_count()
    );

    let c5 = Graph::cycle(5);
    let text = encode_graph6(&c5);
    assert_eq!(parse_graph6(&text)?, c5);
    println!("C5 in graph6: {text}");
    Ok(())
}
