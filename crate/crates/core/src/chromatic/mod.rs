//! Colourings, centres, and the proper / linear / centred verifiers.
//!
//! A *centre* of a vertex set is a vertex whose colour occurs exactly once
//! in the set. A colouring is *linear* if the vertex set of every path
//! subgraph has a centre, and *centred* if the vertex set of every connected
//! subgraph has one. All verifiers return a witness rather than a bare
//! boolean.
//!
//! The exhaustive routines work one connected component at a time on `u64`
//! masks. Their [`Limits`] caps apply to the largest component, and going
//! over a cap is an [`Error::SizeGuard`], never a silent exponential run.

mod exact;

pub use exact::{
    chromatic_number, chromatic_number_with, linear_chromatic_number, linear_chromatic_number_with, tree_depth,
    tree_depth_with,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::bitset::bits;
use crate::graph::{component_diameters, components, induced_subgraph};
use crate::{Error, Graph, Result};

/// Per-vertex colour ids. Ids need not be contiguous.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring(Vec<u32>);

impl Colouring {
    pub fn new(colours: Vec<u32>) -> Self {
        Colouring(colours)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of distinct colour ids used.
    pub fn class_count(&self) -> usize {
        self.classes().len()
    }

    /// Colour classes keyed by colour id, each in increasing vertex order.
    pub fn classes(&self) -> BTreeMap<u32, Vec<usize>> {
        let mut out: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, &c) in self.0.iter().enumerate() {
            out.entry(c).or_default().push(v);
        }
        out
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::param(format!(
                "colouring has {} entries for a graph on {} vertices",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

impl From<Vec<u32>> for Colouring {
    fn from(v: Vec<u32>) -> Self {
        Colouring(v)
    }
}

/// Comma-separated colour ids, e.g. `0,1,0,2`.
impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Colouring {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Colouring(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::param(format!("bad colour id {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Colouring)
    }
}

/// An ordered vertex sequence, meant to be a simple path of its host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWitness(pub Vec<usize>);

impl PathWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether the sequence is non-empty, repeats no vertex, and joins
    /// consecutive vertices by edges of `g`.
    pub fn is_simple_path_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for &v in &self.0 {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        !self.0.is_empty() && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Whitespace-separated vertex indices.
impl fmt::Display for PathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for PathWitness {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::param(format!("bad vertex {t:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(PathWitness)
    }
}

/// Size caps for the exhaustive routines (per connected component).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub path_search: usize,
    pub centred: usize,
    pub chromatic: usize,
    pub linear: usize,
    pub tree_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            path_search: 20,
            centred: 16,
            chromatic: 16,
            linear: 11,
            tree_depth: 22,
        }
    }
}

/// Hard ceiling for the subset DP tables (`u32` endpoint masks, `2^k` entries).
const PATH_TABLE_MAX: usize = 26;

pub(crate) fn guard(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeGuard { what, size, cap })
    } else {
        Ok(())
    }
}

/// A connected component relabelled to `0..k` with mask adjacency.
pub(crate) struct Local {
    pub map: Vec<usize>,
    pub adj: Vec<u64>,
}

impl Local {
    pub fn k(&self) -> usize {
        self.map.len()
    }

    pub fn full(&self) -> u64 {
        if self.k() == 64 {
            u64::MAX
        } else {
            (1u64 << self.k()) - 1
        }
    }
}

/// Components of `g` as [`Local`]s, after checking every one against `cap`.
pub(crate) fn locals(g: &Graph, what: &'static str, cap: usize) -> Result<Vec<Local>> {
    let comps = components(g);
    let largest = comps.iter().map(Vec::len).max().unwrap_or(0);
    guard(what, largest, cap.min(64))?;
    Ok(comps
        .into_iter()
        .map(|c| {
            let (h, map) = induced_subgraph(g, &c).expect("component vertices are valid");
            Local { map, adj: h.masks() }
        })
        .collect())
}

/// For each local vertex, the mask of *other* vertices with the same colour.
/// A set `m` is centre-free iff `m & same[v] != 0` for every `v` in `m`.
pub(crate) fn same_colour_masks(local: &Local, colour: impl Fn(usize) -> u32) -> Vec<u64> {
    let mut by_colour: HashMap<u32, u64> = HashMap::new();
    for i in 0..local.k() {
        *by_colour.entry(colour(local.map[i])).or_default() |= 1 << i;
    }
    (0..local.k())
        .map(|i| by_colour[&colour(local.map[i])] & !(1 << i))
        .collect()
}

#[inline]
pub(crate) fn centre_free(mask: u64, same: &[u64]) -> bool {
    mask != 0 && bits(mask).all(|v| mask & same[v] != 0)
}

/// `ends[m]` = endpoints of Hamilton paths of `G[m]`. Non-zero exactly when
/// some path subgraph has vertex set `m`.
pub(crate) fn path_endpoint_table(adj: &[u64]) -> Vec<u32> {
    let k = adj.len();
    assert!(k <= PATH_TABLE_MAX);
    let mut ends = vec![0u32; 1 << k];
    for v in 0..k {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..(1usize << k) {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let reach = bits(e as u64).fold(0u64, |acc, u| acc | adj[u]) & !(mask as u64);
        for w in bits(reach) {
            ends[mask | 1 << w] |= 1 << w;
        }
    }
    ends
}

/// Recovers a Hamilton path of `G[mask]` from the endpoint table.
pub(crate) fn path_from_table(adj: &[u64], ends: &[u32], mask: u64) -> Vec<usize> {
    let mut path = Vec::new();
    let mut m = mask;
    let mut last = ends[m as usize].trailing_zeros() as usize;
    loop {
        path.push(last);
        m &= !(1 << last);
        if m == 0 {
            break;
        }
        last = bits(ends[m as usize] as u64 & adj[last])
            .next()
            .expect("endpoint table is consistent");
    }
    path.reverse();
    path
}

/// Whether no edge is monochromatic.
pub fn is_proper(g: &Graph, phi: &Colouring) -> Result<bool> {
    phi.check_len(g)?;
    Ok(g.edges().all(|(u, v)| phi.colour(u) != phi.colour(v)))
}

/// The smallest vertex of `s` whose colour is unique within `s`.
pub fn has_centre(phi: &Colouring, s: &[usize]) -> Result<Option<usize>> {
    if s.is_empty() {
        return Err(Error::param("centre of an empty vertex set"));
    }
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for &v in s {
        if v >= phi.len() {
            return Err(Error::param(format!("vertex {v} has no colour")));
        }
        *counts.entry(phi.colour(v)).or_default() += 1;
    }
    Ok(s.iter().copied().filter(|&v| counts[&phi.colour(v)] == 1).min())
}

/// Finds a path subgraph whose vertex set has no centre, or `None` when
/// `phi` is a linear colouring.
///
/// Paths are "subgraphs that are paths", not only induced paths, so a
/// vertex set qualifies exactly when its induced subgraph has a Hamilton
/// path. The search fills a table over vertex subsets of each component
/// recording the possible Hamilton path endpoints. It then reports the
/// first centre-free set in increasing mask order, with a path through it.
pub fn find_path_without_centre(g: &Graph, phi: &Colouring) -> Result<Option<PathWitness>> {
    find_path_without_centre_with(g, phi, &Limits::default())
}

pub fn find_path_without_centre_with(g: &Graph, phi: &Colouring, limits: &Limits) -> Result<Option<PathWitness>> {
    phi.check_len(g)?;
    for local in locals(g, "path search", limits.path_search.min(PATH_TABLE_MAX))? {
        if local.k() < 2 {
            continue;
        }
        let same = same_colour_masks(&local, |v| phi.colour(v));
        let ends = path_endpoint_table(&local.adj);
        let bad =
            (1..ends.len() as u64).find(|&m| ends[m as usize] != 0 && m.count_ones() >= 2 && centre_free(m, &same));
        if let Some(m) = bad {
            let path = path_from_table(&local.adj, &ends, m);
            return Ok(Some(PathWitness(path.into_iter().map(|i| local.map[i]).collect())));
        }
    }
    Ok(None)
}

/// Whether `phi` is a linear colouring of `g`.
pub fn is_linear(g: &Graph, phi: &Colouring) -> Result<bool> {
    Ok(find_path_without_centre(g, phi)?.is_none())
}

/// Enumerates every connected vertex set of a component exactly once, from
/// its minimum vertex, by exclusive-neighbourhood growth.
pub(crate) fn for_each_connected_set(adj: &[u64], mut visit: impl FnMut(u64)) {
    fn grow(adj: &[u64], above: u64, sub: u64, mut ext: u64, closed: u64, visit: &mut impl FnMut(u64)) {
        visit(sub);
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let fresh = adj[w] & !closed & above;
            grow(adj, above, sub | 1 << w, ext | fresh, closed | adj[w] | 1 << w, visit);
        }
    }
    for v in 0..adj.len() {
        let above = if v == 63 { 0 } else { !0u64 << (v + 1) };
        grow(adj, above, 1 << v, adj[v] & above, adj[v] | 1 << v, &mut visit);
    }
}

/// `None` if `phi` is centred; otherwise a centre-free connected vertex set
/// of minimum size (ties broken by the sorted vertex list).
pub fn is_centred(g: &Graph, phi: &Colouring) -> Result<Option<Vec<usize>>> {
    is_centred_with(g, phi, &Limits::default())
}

pub fn is_centred_with(g: &Graph, phi: &Colouring, limits: &Limits) -> Result<Option<Vec<usize>>> {
    phi.check_len(g)?;
    let mut best: Option<Vec<usize>> = None;
    for local in locals(g, "centred check", limits.centred)? {
        let same = same_colour_masks(&local, |v| phi.colour(v));
        let mut local_best: Option<(u32, Vec<usize>)> = None;
        for_each_connected_set(&local.adj, |m| {
            if !centre_free(m, &same) {
                return;
            }
            let size = m.count_ones();
            if local_best.as_ref().is_some_and(|(s, _)| *s < size) {
                return;
            }
            let mut vs: Vec<usize> = bits(m).map(|i| local.map[i]).collect();
            vs.sort_unstable();
            let better = match &local_best {
                None => true,
                Some((s, cur)) => size < *s || vs < *cur,
            };
            if better {
                local_best = Some((size, vs));
            }
        });
        if let Some((_, vs)) = local_best {
            let better = match &best {
                None => true,
                Some(cur) => (vs.len(), &vs) < (cur.len(), cur),
            };
            if better {
                best = Some(vs);
            }
        }
    }
    Ok(best)
}

/// `floor(log2 k) + 1`: the centred (and linear) chromatic number of the
/// path on `k` vertices.
pub fn path_centred_value(k: u64) -> Result<u32> {
    if k == 0 {
        return Err(Error::param("path on zero vertices"));
    }
    Ok(64 - k.leading_zeros())
}

/// `max_C floor(log2(diam(C) + 1)) + 1` over components `C`.
///
/// A shortest path realising the diameter has `diam + 1` vertices and is a
/// path subgraph, so this is a lower bound on the linear chromatic number.
/// Returns 0 for the graph on no vertices.
pub fn linear_lower_bound_from_diameter(g: &Graph) -> u32 {
    component_diameters(g)
        .iter()
        .map(|(_, d)| path_centred_value(*d as u64 + 1).expect("k >= 1"))
        .max()
        .unwrap_or(0)
}

/// The weaker real-valued bound `max_C log2(diam(C))`, over components with
/// at least one edge; 0 when there are none.
pub fn log2_diameter_bound(g: &Graph) -> f64 {
    component_diameters(g)
        .iter()
        .filter(|(_, d)| *d >= 1)
        .map(|(_, d)| (*d as f64).log2())
        .fold(0.0, f64::max)
}
