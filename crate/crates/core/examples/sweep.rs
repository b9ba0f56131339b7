//! Compare the chromatic, linear and centred chromatic numbers over every
//! connected graph on up to six vertices.
//!
//! ```text
//! cargo run --example sweep
//! ```

use lincol::experiments::{connected_graphs, run_conjecture_sweep};
use lincol::graph6::encode_graph6;

fn main() -> lincol::Result<()> {
    let mut corpus = String::new();
    for n in 1..=6 {
        let graphs = connected_graphs(n)?;
        println!("n = {n}: {} connected graphs", graphs.len());
        for g in &graphs {
            corpus.push_str(&encode_graph6(g));
            corpus.push('\n');
        }
    }
    let report = run_conjecture_sweep(corpus.as_bytes())?;
    println!("{} graphs, {} violations", report.graphs, report.violations.len());
    if let Some((ratio, witness)) = &report.max_ratio {
        println!("largest chi_cen / chi_lin = {ratio:.3}, first attained by {witness}");
    }
    let strict = report.rows.iter().filter(|r| r.chi_lin < r.chi_cen).count();
    println!("graphs with chi_lin < chi_cen: {strict}");
    Ok(())
}
