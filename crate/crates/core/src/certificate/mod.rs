//! Certificates that a colouring is not linear.
//!
//! The pipeline pairs up each colour class, peels the pairing down to a
//! pair-closed core of high minimum degree, and then looks for a Hamilton
//! path of the core. Such a path meets every colour class an even number of
//! times, so no vertex on it has a unique colour: the path is bad and the
//! colouring is not linear.
//!
//! [`check_certificate`] re-checks a certificate from scratch and does not
//! rely on anything the pipeline computed.

mod goodness;
mod pairing;
mod peel;
mod posa;
mod verify;

pub use goodness::{is_good, ExpansionMode, Fraction, GoodnessParams, GoodnessReport};
pub use pairing::{build_set_pairing, SetPairing};
pub use peel::{core_threshold, peel_core, peel_core_with, CoreThreshold, PeelOutcome};
pub use posa::{posa_hamilton_path, posa_search, BoosterPolicy, PosaOutcome, PosaParams};
pub use verify::{check_certificate, verify_certificate, Violation};

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;

use crate::chromatic::{Colouring, PathWitness};
use crate::graph::{is_connected_subset, TwoRoundSample};
use crate::{Error, Graph, Seed};

/// Input graph of the pipeline.
#[derive(Clone, Copy, Debug)]
pub enum CertifyInput<'a> {
    /// One round: peeling uses the edge density of the graph as `p`, and
    /// there is nothing to sprinkle.
    Plain(&'a Graph),
    /// Peeling and the search run on the first round; second-round edges
    /// inside the core are sprinkled.
    TwoRound(&'a TwoRoundSample),
}

impl<'a> CertifyInput<'a> {
    fn first(&self) -> &'a Graph {
        match self {
            CertifyInput::Plain(g) => g,
            CertifyInput::TwoRound(s) => &s.g1,
        }
    }

    fn p1(&self) -> f64 {
        match self {
            CertifyInput::Plain(g) => g.density(),
            CertifyInput::TwoRound(s) => s.p1,
        }
    }

    /// The graph a certificate path lives in.
    pub fn host(&self) -> &'a Graph {
        match self {
            CertifyInput::Plain(g) => g,
            CertifyInput::TwoRound(s) => &s.union,
        }
    }
}

impl<'a> From<&'a Graph> for CertifyInput<'a> {
    fn from(g: &'a Graph) -> Self {
        CertifyInput::Plain(g)
    }
}

impl<'a> From<&'a TwoRoundSample> for CertifyInput<'a> {
    fn from(s: &'a TwoRoundSample) -> Self {
        CertifyInput::TwoRound(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct CertifyOptions {
    /// Peeling threshold; defaults to `max(1, ceil(|S| p1 / 3))`.
    pub k_override: Option<usize>,
    /// Recompute the threshold as the set shrinks (ignored with an override).
    pub shrinking_threshold: bool,
    pub goodness: GoodnessParams,
    pub posa: PosaParams,
}

impl CertifyOptions {
    pub fn with_seed(seed: Seed) -> Self {
        CertifyOptions {
            posa: PosaParams {
                seed,
                ..PosaParams::default()
            },
            ..CertifyOptions::default()
        }
    }
}

/// Parameters echoed in a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertParams {
    pub k: usize,
    /// Sprinkle edges exposed by the search.
    pub exposed: usize,
    pub sprinkle_total: usize,
    pub boosters: usize,
    pub seed: Seed,
}

/// A centre-free path together with the sub-pairing it covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadPathCertificate {
    pub path: PathWitness,
    pub sub_pairing: SetPairing,
    pub params: CertParams,
}

/// One line: `path=0 1 2 3;pairs=0-2 1-3;k=1;exposed=0/0;boosters=0;seed=7`.
impl fmt::Display for BadPathCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        write!(
            f,
            "path={};pairs={};k={};exposed={}/{};boosters={};seed={}",
            self.path, self.sub_pairing, p.k, p.exposed, p.sprinkle_total, p.boosters, p.seed
        )
    }
}

impl FromStr for BadPathCertificate {
    type Err = Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        let mut fields = std::collections::HashMap::new();
        for part in s.trim().split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::param(format!("certificate field {part:?} has no '='")))?;
            if fields.insert(key.trim(), value.trim()).is_some() {
                return Err(Error::param(format!("certificate field {key:?} repeated")));
            }
        }
        let get = |key: &str| {
            fields
                .get(key)
                .copied()
                .ok_or_else(|| Error::param(format!("certificate field {key:?} missing")))
        };
        let num = |key: &str, text: &str| {
            text.parse::<usize>()
                .map_err(|_| Error::param(format!("certificate field {key:?}: bad number {text:?}")))
        };
        let (exposed, total) = get("exposed")?
            .split_once('/')
            .ok_or_else(|| Error::param("certificate field \"exposed\" must be a/b"))?;
        Ok(BadPathCertificate {
            path: get("path")?.parse()?,
            sub_pairing: get("pairs")?.parse()?,
            params: CertParams {
                k: num("k", get("k")?)?,
                exposed: num("exposed", exposed)?,
                sprinkle_total: num("exposed", total)?,
                boosters: num("boosters", get("boosters")?)?,
                seed: get("seed")?
                    .parse()
                    .map_err(|_| Error::param("certificate field \"seed\": bad number"))?,
            },
        })
    }
}

/// A successful pipeline run.
#[derive(Clone, Debug, PartialEq)]
pub struct Certified {
    pub certificate: BadPathCertificate,
    /// The full pairing built from the colouring.
    pub pairing: SetPairing,
    /// Pairs removed by peeling.
    pub removed: usize,
    pub goodness: GoodnessReport,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum FailureReason {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("every colour class is a singleton; nothing to pair")]
    EmptyPairing,
    #[error("peeling at k = {k} removed all {removed} pairs")]
    CoreEmpty {
        pairing_size: usize,
        k: usize,
        removed: usize,
    },
    #[error("no Hamilton path on a core of {core_size} vertices (longest found {best_path} vertices)")]
    NoHamiltonPath {
        pairing_size: usize,
        k: usize,
        removed: usize,
        core_size: usize,
        best_path: usize,
        exposed: usize,
        goodness: Box<GoodnessReport>,
    },
}

impl FailureReason {
    pub fn tag(&self) -> &'static str {
        match self {
            FailureReason::BadInput(_) => "bad-input",
            FailureReason::EmptyPairing => "empty-pairing",
            FailureReason::CoreEmpty { .. } => "core-empty",
            FailureReason::NoHamiltonPath { .. } => "no-hamilton-path",
        }
    }
}

/// Runs the pipeline on `phi`. The certificate path lies in
/// `input.host()` and always passes [`check_certificate`].
pub fn certify_not_linear(
    input: CertifyInput<'_>,
    phi: &Colouring,
    opts: &CertifyOptions,
) -> Result<Certified, FailureReason> {
    let g1 = input.first();
    if phi.len() != g1.n() {
        return Err(FailureReason::BadInput(format!(
            "colouring has {} entries for a graph on {} vertices",
            phi.len(),
            g1.n()
        )));
    }
    let pairing = build_set_pairing(phi);
    if pairing.is_empty() {
        return Err(FailureReason::EmptyPairing);
    }

    let p1 = input.p1();
    let threshold = match (opts.k_override, opts.shrinking_threshold) {
        (Some(k), _) => CoreThreshold::Fixed(k),
        (None, false) => CoreThreshold::Fixed(core_threshold(pairing.len(), p1)),
        (None, true) => CoreThreshold::Shrinking { p: p1 },
    };
    let k = match threshold {
        CoreThreshold::Fixed(k) => k,
        CoreThreshold::Shrinking { p } => core_threshold(pairing.len(), p),
    };
    let peeled = peel_core_with(g1, &pairing, threshold).map_err(|e| FailureReason::BadInput(e.to_string()))?;
    if peeled.core.is_empty() {
        return Err(FailureReason::CoreEmpty {
            pairing_size: pairing.len(),
            k,
            removed: peeled.removed,
        });
    }
    let core = peeled.core.vertices();

    let goodness = is_good(
        g1,
        core,
        &GoodnessParams {
            seed: opts.posa.seed.derive(2),
            ..opts.goodness
        },
    )
    .map_err(|e| FailureReason::BadInput(e.to_string()))?;

    let mut sprinkle: Vec<(usize, usize)> = match input {
        CertifyInput::Plain(_) => Vec::new(),
        CertifyInput::TwoRound(s) => {
            let mut inside = vec![false; s.g2.n()];
            core.iter().for_each(|&v| inside[v] = true);
            s.g2.edges()
                .filter(|&(a, b)| inside[a] && inside[b] && !g1.has_edge(a, b))
                .collect()
        }
    };
    sprinkle.shuffle(&mut opts.posa.seed.derive(1).rng());

    let fail = |best_path, exposed, goodness: &GoodnessReport| FailureReason::NoHamiltonPath {
        pairing_size: pairing.len(),
        k,
        removed: peeled.removed,
        core_size: core.len(),
        best_path,
        exposed,
        goodness: Box::new(goodness.clone()),
    };
    if !is_connected_subset(input.host(), core) {
        return Err(fail(0, 0, &goodness));
    }
    let found = posa_search(g1, core, &sprinkle, &opts.posa);
    if !found.hamiltonian {
        return Err(fail(found.path.len(), found.exposed, &goodness));
    }
    let certificate = BadPathCertificate {
        path: PathWitness(found.path),
        sub_pairing: peeled.core.clone(),
        params: CertParams {
            k,
            exposed: found.exposed,
            sprinkle_total: sprinkle.len(),
            boosters: found.boosters,
            seed: opts.posa.seed,
        },
    };
    Ok(Certified {
        certificate,
        pairing,
        removed: peeled.removed,
        goodness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{sample_two_round, RoundSplit};

    fn k_override(k: usize) -> CertifyOptions {
        CertifyOptions {
            k_override: Some(k),
            ..CertifyOptions::default()
        }
    }

    #[test]
    fn four_cycle() {
        let g = Graph::cycle(4);
        let phi = Colouring::new(vec![1, 2, 1, 2]);
        let out = certify_not_linear((&g).into(), &phi, &k_override(1)).unwrap();
        let cert = &out.certificate;
        assert_eq!(cert.path.len(), 4);
        assert_eq!(cert.sub_pairing.pairs(), &[(0, 2), (1, 3)]);
        assert!(verify_certificate(&g, &phi, cert, &out.pairing));
    }

    #[test]
    fn all_distinct_colours() {
        let g = Graph::complete(5);
        let phi = Colouring::new(vec![0, 1, 2, 3, 4]);
        assert_eq!(
            certify_not_linear((&g).into(), &phi, &CertifyOptions::default()),
            Err(FailureReason::EmptyPairing)
        );
    }

    #[test]
    fn complete_six_with_three_classes() {
        let g = Graph::complete(6);
        let phi = Colouring::new(vec![0, 1, 2, 0, 1, 2]);
        let out = certify_not_linear((&g).into(), &phi, &CertifyOptions::default()).unwrap();
        assert_eq!(out.certificate.path.len(), 6);
        assert!(verify_certificate(&g, &phi, &out.certificate, &out.pairing));
    }

    #[test]
    fn core_empty_and_bad_input() {
        let g = Graph::empty(4);
        let phi = Colouring::new(vec![0, 0, 1, 1]);
        assert!(matches!(
            certify_not_linear((&g).into(), &phi, &CertifyOptions::default()),
            Err(FailureReason::CoreEmpty { removed: 2, .. })
        ));
        let short = Colouring::new(vec![0, 0]);
        let err = certify_not_linear((&g).into(), &short, &CertifyOptions::default()).unwrap_err();
        assert_eq!(err.tag(), "bad-input");
    }

    #[test]
    fn disconnected_core_has_no_path() {
        // two disjoint 4-cycles, each coloured so the pairing is inside it
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap();
        let phi = Colouring::new(vec![0, 1, 0, 1, 2, 3, 2, 3]);
        let err = certify_not_linear((&g).into(), &phi, &k_override(1)).unwrap_err();
        assert_eq!(err.tag(), "no-hamilton-path");
    }

    #[test]
    fn two_round_certificates_verify() {
        for t in 0..10 {
            let sample = sample_two_round(60, 0.3, Seed(t), RoundSplit::Symmetric).unwrap();
            let phi = Colouring::new((0..60).map(|v| v % 30).collect());
            let out = certify_not_linear((&sample).into(), &phi, &CertifyOptions::with_seed(Seed(t))).unwrap();
            assert!(verify_certificate(&sample.union, &phi, &out.certificate, &out.pairing));
        }
    }

    #[test]
    fn certificate_text_round_trip() {
        let g = Graph::cycle(4);
        let phi = Colouring::new(vec![1, 2, 1, 2]);
        let cert = certify_not_linear((&g).into(), &phi, &k_override(1))
            .unwrap()
            .certificate;
        let line = cert.to_string();
        assert!(!line.contains('\n'));
        assert_eq!(line.parse::<BadPathCertificate>().unwrap(), cert);
        assert!("path=0 1;pairs=0-1".parse::<BadPathCertificate>().is_err());
        assert!("path=0 1;path=0 1".parse::<BadPathCertificate>().is_err());
    }
}
