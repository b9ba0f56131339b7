use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;

use crate::chromatic::Colouring;
use crate::{Error, Result, Seed};

/// An even vertex set `S` split into disjoint unordered pairs.
///
/// Pairs are stored as `(a, b)` with `a < b`, sorted. The vertex list is
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SetPairing {
    vertices: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl SetPairing {
    /// Builds a pairing, rejecting loops and vertices used twice.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let mut vertices: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::param(format!("vertex {} appears in two pairs", w[0])));
        }
        Ok(SetPairing { vertices, pairs })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `|S|`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `partner[v]` for every `v < n`; `None` off `S`.
    pub fn partners(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for &(a, b) in &self.pairs {
            out[a] = Some(b);
            out[b] = Some(a);
        }
        out
    }

    /// `(S', P') ⊆ (S, P)`: every pair of `self` is a pair of `other`.
    pub fn is_subpairing_of(&self, other: &SetPairing) -> bool {
        self.pairs.iter().all(|p| other.pairs.binary_search(p).is_ok())
    }

    /// Uniformly random perfect pairing of `vertices` (which must have even
    /// length).
    pub fn random_perfect(vertices: &[usize], seed: Seed) -> Result<Self> {
        if vertices.len() % 2 == 1 {
            return Err(Error::param("perfect pairing of an odd vertex set"));
        }
        let mut vs = vertices.to_vec();
        vs.shuffle(&mut seed.rng());
        SetPairing::new(vs.chunks(2).map(|c| (c[0], c[1])))
    }
}

/// Pairs as `a-b`, space separated.
impl fmt::Display for SetPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for SetPairing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let pairs = s
            .split_whitespace()
            .map(|t| {
                let (a, b) = t
                    .split_once('-')
                    .ok_or_else(|| Error::param(format!("bad pair {t:?}")))?;
                let parse = |x: &str| x.parse::<usize>().map_err(|_| Error::param(format!("bad pair {t:?}")));
                let (a, b) = (parse(a)?, parse(b)?);
                if a == b {
                    return Err(Error::param(format!("pair {t:?} repeats a vertex")));
                }
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        SetPairing::new(pairs)
    }
}

/// Pairs up each colour class: an odd class loses its smallest vertex, the
/// rest are paired consecutively in increasing order.
pub fn build_set_pairing(phi: &Colouring) -> SetPairing {
    let mut pairs = Vec::new();
    for class in phi.classes().into_values() {
        let kept = &class[class.len() % 2..];
        pairs.extend(kept.chunks(2).map(|c| (c[0], c[1])));
    }
    SetPairing::new(pairs).expect("colour classes are disjoint")
}
