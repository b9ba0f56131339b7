//! Stand-alone certificate checker. It reads the graph, colouring and
//! pairings directly and shares no logic with the pipeline.

use std::collections::{HashMap, HashSet};
use std::fmt;

use super::{BadPathCertificate, SetPairing};
use crate::chromatic::Colouring;
use crate::Graph;

/// First failed check, in the order they are run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ColouringLength {
        colours: usize,
        n: usize,
    },
    EmptyPath,
    VertexOutOfRange(usize),
    RepeatedVertex(usize),
    NonEdge(usize, usize),
    /// An original pair with exactly one end on the path.
    SplitPair(usize, usize),
    NotSubPairing(usize, usize),
    VertexSetMismatch,
    PairNotMonochromatic(usize, usize),
    /// A vertex whose colour is unique on the path.
    Centre(usize),
}

impl Violation {
    pub fn tag(&self) -> &'static str {
        match self {
            Violation::ColouringLength { .. } => "colouring-length",
            Violation::EmptyPath => "empty-path",
            Violation::VertexOutOfRange(_) => "vertex-out-of-range",
            Violation::RepeatedVertex(_) => "repeated-vertex",
            Violation::NonEdge(..) => "non-edge",
            Violation::SplitPair(..) => "split-pair",
            Violation::NotSubPairing(..) => "not-sub-pairing",
            Violation::VertexSetMismatch => "vertex-set-mismatch",
            Violation::PairNotMonochromatic(..) => "pair-not-monochromatic",
            Violation::Centre(_) => "centre",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColouringLength { colours, n } => {
                write!(f, "{}: {colours} colours for {n} vertices", self.tag())
            }
            Violation::VertexOutOfRange(v) | Violation::RepeatedVertex(v) | Violation::Centre(v) => {
                write!(f, "{}: {v}", self.tag())
            }
            Violation::NonEdge(a, b)
            | Violation::SplitPair(a, b)
            | Violation::NotSubPairing(a, b)
            | Violation::PairNotMonochromatic(a, b) => write!(f, "{}: {a}-{b}", self.tag()),
            Violation::EmptyPath | Violation::VertexSetMismatch => f.write_str(self.tag()),
        }
    }
}

/// Checks that `cert.path` is a simple path of `g`, that its sub-pairing is
/// part of `original` and covers exactly the path, that every pair of
/// `original` is fully on or fully off the path, that every pair is
/// monochromatic, and that no colour occurs exactly once on the path.
pub fn check_certificate(
    g: &Graph,
    phi: &Colouring,
    cert: &BadPathCertificate,
    original: &SetPairing,
) -> Result<(), Violation> {
    let n = g.n();
    if phi.len() != n {
        return Err(Violation::ColouringLength { colours: phi.len(), n });
    }
    let path = cert.path.vertices();
    if path.is_empty() {
        return Err(Violation::EmptyPath);
    }
    let mut on_path = HashSet::with_capacity(path.len());
    for &v in path {
        if v >= n {
            return Err(Violation::VertexOutOfRange(v));
        }
        if !on_path.insert(v) {
            return Err(Violation::RepeatedVertex(v));
        }
    }
    for w in path.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Violation::NonEdge(w[0], w[1]));
        }
    }
    for &(a, b) in original.pairs() {
        if on_path.contains(&a) != on_path.contains(&b) {
            return Err(Violation::SplitPair(a, b));
        }
    }
    let original_pairs: HashSet<(usize, usize)> = original.pairs().iter().copied().collect();
    let mut covered = HashSet::new();
    for &(a, b) in cert.sub_pairing.pairs() {
        if !original_pairs.contains(&(a, b)) {
            return Err(Violation::NotSubPairing(a, b));
        }
        covered.insert(a);
        covered.insert(b);
    }
    if covered != on_path {
        return Err(Violation::VertexSetMismatch);
    }
    for &(a, b) in cert.sub_pairing.pairs() {
        if phi.colour(a) != phi.colour(b) {
            return Err(Violation::PairNotMonochromatic(a, b));
        }
    }
    let mut count: HashMap<u32, usize> = HashMap::new();
    for &v in path {
        *count.entry(phi.colour(v)).or_default() += 1;
    }
    if let Some(&v) = path.iter().filter(|&&v| count[&phi.colour(v)] == 1).min() {
        return Err(Violation::Centre(v));
    }
    Ok(())
}

pub fn verify_certificate(g: &Graph, phi: &Colouring, cert: &BadPathCertificate, original: &SetPairing) -> bool {
    check_certificate(g, phi, cert, original).is_ok()
}
