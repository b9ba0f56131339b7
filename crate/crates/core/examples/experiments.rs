//! Run the seeded harnesses and write their rows as CSV.
//!
//! ```text
//! cargo run --example experiments -- /tmp/rows
//! ```

use std::path::PathBuf;

use lincol::experiments::{
    run_dense_experiment, run_sparse_experiment, run_supercritical_probe, write_csv, ExperimentConfig, Regime,
};
use lincol::Seed;

fn main() -> lincol::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);

    let mut dense = ExperimentConfig::new(Regime::Dense, 100, 50.0, 20, Seed(1));
    dense.classes = 50;
    let rows = run_dense_experiment(&dense)?;
    let ok = rows.iter().filter(|r| r.success == Some(true)).count();
    println!("dense: {ok} of {} colourings certified not linear", rows.len());
    write_csv(&rows, &dir.join("dense.csv"))?;

    let sparse = ExperimentConfig::new(Regime::Sparse, 10_000, 0.8, 10, Seed(2));
    let rows = run_sparse_experiment(&sparse)?;
    for r in rows.iter().take(3) {
        println!(
            "sparse trial {}: max diameter {:?}, bound {:?}, small components {:?}, checks {:?}",
            r.trial, r.max_diameter, r.diameter_bound, r.small_components, r.checks_passed
        );
    }
    write_csv(&rows, &dir.join("sparse.csv"))?;

    let sup = ExperimentConfig::new(Regime::Supercritical, 10_000, 2.0, 5, Seed(3));
    let rows = run_supercritical_probe(&sup)?;
    for r in &rows {
        println!(
            "supercritical trial {}: path of {:?} edges, bound {:?}",
            r.trial, r.longest_path, r.path_bound
        );
    }
    write_csv(&rows, &dir.join("supercritical.csv"))?;
    println!("CSV written to {}", dir.display());
    Ok(())
}
