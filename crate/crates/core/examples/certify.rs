//! Certify that a colouring of a random graph is not linear, then check the
//! certificate independently.
//!
//! ```text
//! cargo run --example certify
//! ```

use lincol::certificate::{certify_not_linear, check_certificate, BadPathCertificate, CertifyInput, CertifyOptions};
use lincol::chromatic::Colouring;
use lincol::experiments::balanced_colouring;
use lincol::graph::{sample_two_round, RoundSplit};
use lincol::{Graph, Seed};

fn main() -> lincol::Result<()> {
    // a fixed graph: C4 with opposite vertices sharing a colour
    let c4 = Graph::cycle(4);
    let phi = Colouring::new(vec![1, 2, 1, 2]);
    let opts = CertifyOptions {
        k_override: Some(1),
        ..CertifyOptions::default()
    };
    let done = certify_not_linear(CertifyInput::Plain(&c4), &phi, &opts).expect("C4 certifies");
    println!("C4: {}", done.certificate);

    // G(200, 1/2) in two rounds, coloured with 100 balanced classes
    let sample = sample_two_round(200, 0.5, Seed(11), RoundSplit::Symmetric)?;
    let phi = balanced_colouring(200, 100, Seed(12))?;
    match certify_not_linear(
        CertifyInput::TwoRound(&sample),
        &phi,
        &CertifyOptions::with_seed(Seed(13)),
    ) {
        Ok(done) => {
            let cert = &done.certificate;
            println!(
                "G(200, 1/2): bad path on {} vertices, k = {}, {} pairs peeled, good core: {}",
                cert.path.len(),
                cert.params.k,
                done.removed,
                done.goodness.is_good()
            );
            // the certificate survives a text round trip and re-checks
            let line = cert.to_string();
            let parsed: BadPathCertificate = line.parse()?;
            match check_certificate(&sample.union, &phi, &parsed, &done.pairing) {
                Ok(()) => println!("certificate verified"),
                Err(v) => println!("certificate rejected: {v}"),
            }
        }
        Err(reason) => println!("no certificate: {reason}"),
    }
    Ok(())
}
