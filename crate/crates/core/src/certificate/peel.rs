use std::collections::BTreeSet;

use super::SetPairing;
use crate::{Error, Graph, Result};

/// Degree threshold for pair-closed peeling.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoreThreshold {
    /// Remove vertices of degree `< k`.
    Fixed(usize),
    /// Recompute `k = max(1, ceil(|S_i| p / 3))` against the shrinking set.
    /// An alternative reading of the peeling rule; not used by default.
    Shrinking { p: f64 },
}

/// Result of peeling: the core and the number of peeling steps `T` (each
/// step removes one pair).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelOutcome {
    pub core: SetPairing,
    pub removed: usize,
}

/// `max(1, ceil(|S| p / 3))`.
pub fn core_threshold(set_size: usize, p: f64) -> usize {
    ((set_size as f64 * p / 3.0).ceil() as usize).max(1)
}

/// The `k`-core of a set-pairing: while `G[S_i]` has a vertex of degree
/// below `k`, remove the smallest such vertex together with its partner.
///
/// The result is the unique maximal pair-closed subset whose induced
/// subgraph has minimum degree at least `k` (possibly empty).
pub fn peel_core(g: &Graph, sp: &SetPairing, k: usize) -> Result<PeelOutcome> {
    peel_core_with(g, sp, CoreThreshold::Fixed(k))
}

pub fn peel_core_with(g: &Graph, sp: &SetPairing, threshold: CoreThreshold) -> Result<PeelOutcome> {
    let n = g.n();
    if let Some(&v) = sp.vertices().iter().find(|&&v| v >= n) {
        return Err(Error::param(format!("pairing vertex {v} outside the graph")));
    }
    let partner = sp.partners(n);
    let mut inside = vec![false; n];
    sp.vertices().iter().for_each(|&v| inside[v] = true);
    let mut degree = vec![0usize; n];
    for &v in sp.vertices() {
        degree[v] = g.neighbours(v).iter().filter(|&&u| inside[u as usize]).count();
    }
    let mut size = sp.len();
    let k_for = |size: usize| match threshold {
        CoreThreshold::Fixed(k) => k,
        CoreThreshold::Shrinking { p } => core_threshold(size, p),
    };

    let mut k = k_for(size);
    let mut low: BTreeSet<usize> = sp.vertices().iter().copied().filter(|&v| degree[v] < k).collect();
    let mut removed = 0;
    while let Some(v) = low.pop_first() {
        let w = partner[v].expect("vertex of S has a partner");
        for x in [v, w] {
            inside[x] = false;
            low.remove(&x);
        }
        for x in [v, w] {
            for &u in g.neighbours(x) {
                let u = u as usize;
                if inside[u] {
                    degree[u] -= 1;
                    if degree[u] < k {
                        low.insert(u);
                    }
                }
            }
        }
        size -= 2;
        removed += 1;
        if let CoreThreshold::Shrinking { .. } = threshold {
            let next = k_for(size);
            if next != k {
                k = next;
                low = sp
                    .vertices()
                    .iter()
                    .copied()
                    .filter(|&x| inside[x] && degree[x] < k)
                    .collect();
            }
        }
    }
    let core = SetPairing::new(sp.pairs().iter().copied().filter(|&(a, _)| inside[a]))?;
    Ok(PeelOutcome { core, removed })
}
