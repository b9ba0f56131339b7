//! Build a set-pairing from a colouring, peel it to its pair-closed core and
//! check the core for expansion.
//!
//! ```text
//! cargo run --example peeling
//! ```

use lincol::certificate::{build_set_pairing, core_threshold, is_good, peel_core, GoodnessParams, SetPairing};
use lincol::experiments::balanced_colouring;
use lincol::graph::sample_gnp;
use lincol::Seed;

fn main() -> lincol::Result<()> {
    let (n, p) = (400, 0.2);
    let g = sample_gnp(n, p, Seed(3))?;

    let phi = balanced_colouring(n, 150, Seed(4))?;
    let sp = build_set_pairing(&phi);
    let k = core_threshold(sp.len(), p);
    let out = peel_core(&g, &sp, k)?;
    println!(
        "{} classes -> |S| = {}, k = {k}, removed {} pairs, core has {} vertices",
        phi.class_count(),
        sp.len(),
        out.removed,
        out.core.len()
    );

    // a sparser graph and a random perfect pairing lose more
    let g = sample_gnp(n, 0.02, Seed(5))?;
    let all: Vec<usize> = (0..n).collect();
    let sp = SetPairing::random_perfect(&all, Seed(6))?;
    let out = peel_core(&g, &sp, 3)?;
    println!(
        "G(400, 0.02), k = 3: removed {} pairs, core {}",
        out.removed,
        out.core.len()
    );

    let report = is_good(&g, out.core.vertices(), &GoodnessParams::default())?;
    println!(
        "core connected: {}, expands: {} ({} subsets checked, bound {})",
        report.connected, report.expansion_ok, report.subsets_checked, report.max_subset
    );
    if let Some(x) = report.violating_set {
        println!("non-expanding set: {x:?}");
    }
    Ok(())
}
