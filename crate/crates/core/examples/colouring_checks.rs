//! Check colourings for properness, linearity and centredness, and print the
//! witness when a check fails.
//!
//! ```text
//! cargo run --example colouring_checks
//! ```

use lincol::chromatic::{find_path_without_centre, has_centre, is_centred, is_proper, Colouring};
use lincol::Graph;

fn main() -> lincol::Result<()> {
    let p4 = Graph::path(4);
    // 0-1-2-3 coloured a b a b: proper, but the whole path has no centre
    let phi: Colouring = "0,1,0,1".parse()?;
    println!("proper: {}", is_proper(&p4, &phi)?);
    match find_path_without_centre(&p4, &phi)? {
        Some(path) => println!("not linear, bad path: {path}"),
        None => println!("linear"),
    }

    let psi: Colouring = "1,0,2,1".parse()?;
    println!(
        "centre of the whole path under {psi}: {:?}",
        has_centre(&psi, &[0, 1, 2, 3])?
    );
    println!("linear: {}", find_path_without_centre(&p4, &psi)?.is_none());
    match is_centred(&p4, &psi)? {
        Some(set) => println!("not centred, connected set without centre: {set:?}"),
        None => println!("centred"),
    }

    let c4 = Graph::cycle(4);
    let phi: Colouring = "0,1,2,0".parse()?;
    println!("C4 with {phi}: uncentred set {:?}", is_centred(&c4, &phi)?);
    Ok(())
}
