//! Exact chromatic, linear chromatic and centred chromatic numbers of a few
//! small graphs.
//!
//! ```text
//! cargo run --example exact_values
//! ```

use lincol::chromatic::{
    chromatic_number, linear_chromatic_number, linear_lower_bound_from_diameter, path_centred_value, tree_depth,
};
use lincol::Graph;

fn main() -> lincol::Result<()> {
    let graphs = [
        ("P8", Graph::path(8)),
        ("C4", Graph::cycle(4)),
        ("C7", Graph::cycle(7)),
        ("K4", Graph::complete(4)),
        ("star with 6 leaves", Graph::star(6)),
    ];
    println!("{:<20} {:>4} {:>6} {:>6} {:>6}", "graph", "chi", "lin", "cen", "diam");
    for (name, g) in &graphs {
        println!(
            "{name:<20} {:>4} {:>6} {:>6} {:>6}",
            chromatic_number(g)?,
            linear_chromatic_number(g)?,
            tree_depth(g)?,
            linear_lower_bound_from_diameter(g),
        );
    }
    // paths have a closed form
    for k in [1u64, 2, 3, 7, 8, 1000, 1 << 20] {
        println!("P_{k}: {}", path_centred_value(k)?);
    }
    Ok(())
}
