//! Rotation-extension search: Hamilton paths in dense random graphs, the
//! effect of sprinkling, and long paths in sparse ones.
//!
//! ```text
//! cargo run --example long_paths
//! ```

use lincol::certificate::{posa_hamilton_path, posa_search, PosaParams};
use lincol::graph::{components, sample_gnp};
use lincol::Seed;

fn main() -> lincol::Result<()> {
    let params = PosaParams {
        seed: Seed(1),
        ..PosaParams::default()
    };

    let g = sample_gnp(300, 0.05, Seed(2))?;
    let all: Vec<usize> = (0..300).collect();
    match posa_hamilton_path(&g, &all, &[], &params) {
        Some(p) => println!("G(300, 0.05): Hamilton path found, starts {:?}", &p.vertices()[..5]),
        None => println!("G(300, 0.05): no Hamilton path found"),
    }

    // too sparse on its own; a second round of edges supplies boosters
    let g1 = sample_gnp(300, 0.012, Seed(3))?;
    let g2 = sample_gnp(300, 0.02, Seed(4))?;
    let sprinkle: Vec<(usize, usize)> = g2.edges().collect();
    let alone = posa_search(&g1, &all, &[], &params);
    let with = posa_search(&g1, &all, &sprinkle, &params);
    println!(
        "sparse: {} vertices alone; with sprinkling {} vertices, {} of {} extra edges exposed, {} boosters",
        alone.path.len(),
        with.path.len(),
        with.exposed,
        sprinkle.len(),
        with.boosters
    );

    let n = 10_000;
    let g = sample_gnp(n, 2.0 / n as f64, Seed(5))?;
    let giant = components(&g).into_iter().max_by_key(Vec::len).unwrap();
    let out = posa_search(&g, &giant, &[], &params);
    println!(
        "G(10^4, 2/n): giant component {} vertices, longest path found {} edges",
        giant.len(),
        out.path_edges()
    );
    Ok(())
}
