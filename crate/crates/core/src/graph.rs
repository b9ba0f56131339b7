//! Simple undirected graphs on `0..n`, random sampling and structural queries.
//!
//! A [`Graph`] always keeps sorted neighbour lists. When the edge density is
//! at least 1% (or `n <= 64`) it also keeps one bitset row per vertex, which
//! makes adjacency tests and neighbourhood unions cheap for the dense
//! regime. Sparse graphs skip the rows so that `G(10^5, c/n)` fits in memory.
//!
//! Vertices are 0-based. Wherever a rule says "smallest vertex", it means
//! the smallest index.

use rand::Rng as _;

use crate::bitset::BitSet;
use crate::{Error, Result, Seed};

/// Undirected simple graph: symmetric, loop-free, neighbours `< n`.
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: usize,
    nbrs: Vec<Vec<u32>>,
    rows: Option<Vec<BitSet>>,
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph::from_lists(n, vec![Vec::new(); n])
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are parameter errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::param(format!("loop at vertex {u}")));
            }
            lists[u].push(v as u32);
            lists[v].push(u as u32);
        }
        Ok(Graph::from_lists(n, lists))
    }

    pub fn complete(n: usize) -> Graph {
        let lists = (0..n)
            .map(|v| (0..n as u32).filter(|&u| u as usize != v).collect())
            .collect();
        Graph::from_lists(n, lists)
    }

    /// Path `0 - 1 - ... - (k-1)`.
    pub fn path(k: usize) -> Graph {
        Graph::from_edges(k, (1..k).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Cycle `0 - 1 - ... - (k-1) - 0`; `k >= 3`.
    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).expect("valid cycle")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    fn from_lists(n: usize, mut lists: Vec<Vec<u32>>) -> Graph {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        let edges = lists.iter().map(Vec::len).sum::<usize>() / 2;
        let rows = if n <= 64 || edges * 100 >= pairs(n) {
            Some(
                lists
                    .iter()
                    .map(|l| {
                        let mut row = BitSet::new(n);
                        l.iter().for_each(|&u| {
                            row.insert(u as usize);
                        });
                        row
                    })
                    .collect(),
            )
        } else {
            None
        };
        let g = Graph {
            n,
            edges,
            nbrs: lists,
            rows,
        };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Symmetry, no loops, neighbour indices in range.
    pub fn check_invariants(&self) -> Result<()> {
        for (v, l) in self.nbrs.iter().enumerate() {
            for &u in l {
                let u = u as usize;
                if u >= self.n {
                    return Err(Error::Contract(format!("neighbour {u} of {v} out of range")));
                }
                if u == v {
                    return Err(Error::Contract(format!("loop at {v}")));
                }
                if self.nbrs[u].binary_search(&(v as u32)).is_err() {
                    return Err(Error::Contract(format!("edge {v}-{u} not symmetric")));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Whether the bitset rows are present.
    pub fn is_dense(&self) -> bool {
        self.rows.is_some()
    }

    /// Fraction of the `C(n, 2)` pairs that are edges (0 when `n < 2`).
    pub fn density(&self) -> f64 {
        let p = pairs(self.n);
        if p == 0 {
            0.0
        } else {
            self.edges as f64 / p as f64
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        match &self.rows {
            Some(rows) => rows[u].contains(v),
            None => self.nbrs[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.nbrs[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// Bitset row of `v`, if the graph is stored densely.
    pub fn row(&self, v: usize) -> Option<&BitSet> {
        self.rows.as_ref().map(|r| &r[v])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbrs.iter().enumerate().flat_map(|(u, l)| {
            l.iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Adjacency rows as `u64` masks. Only for graphs with at most 64 vertices.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask view needs n <= 64, got {}", self.n);
        self.nbrs
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &u| m | 1 << u))
            .collect()
    }

    /// Edge union of two graphs on the same vertex set.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::param(format!(
                "union of graphs with {} and {} vertices",
                self.n, other.n
            )));
        }
        let lists = self
            .nbrs
            .iter()
            .zip(&other.nbrs)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        Ok(Graph::from_lists(self.n, lists))
    }

    /// Number of edges of `G[s]`.
    pub fn induced_edge_count(&self, s: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        s.iter().for_each(|&v| inside[v] = true);
        s.iter()
            .map(|&v| {
                self.nbrs[v]
                    .iter()
                    .filter(|&&u| inside[u as usize] && (u as usize) > v)
                    .count()
            })
            .sum()
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::param(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// Samples `G(n, p)`: each of the `C(n, 2)` pairs independently with
/// probability `p`, driven only by `seed`.
///
/// Uses geometric skipping (Batagelj–Brandes), so the cost is `O(n + m)`.
pub fn sample_gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    check_probability(p)?;
    if p == 0.0 || n < 2 {
        return Ok(Graph::empty(n));
    }
    if p == 1.0 {
        return Ok(Graph::complete(n));
    }
    let mut rng = seed.rng();
    let log_q = (1.0 - p).ln();
    let mut lists = vec![Vec::new(); n];
    let (mut v, mut w) = (1usize, -1i64);
    while v < n {
        let r: f64 = rng.random();
        w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
        while w >= v as i64 && v < n {
            w -= v as i64;
            v += 1;
        }
        if v < n {
            lists[v].push(w as u32);
            lists[w as usize].push(v as u32);
        }
    }
    Ok(Graph::from_lists(n, lists))
}

/// How to split `p` between the two exposure rounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RoundSplit {
    /// `p1 = p2 = 1 - sqrt(1 - p)`.
    Symmetric,
    /// Fixed first-round probability; `p2 = (p - p1) / (1 - p1)`.
    /// `FirstRound(p / 2)` is the `omega / 2n` choice for `p = omega / n`.
    FirstRound(f64),
}

/// `G(n, p)` exposed in two independent rounds.
#[derive(Clone, Debug)]
pub struct TwoRoundSample {
    pub g1: Graph,
    pub g2: Graph,
    pub union: Graph,
    pub p1: f64,
    pub p2: f64,
}

impl TwoRoundSample {
    /// `p1 + p2 - p1 p2`.
    pub fn p(&self) -> f64 {
        self.p1 + self.p2 - self.p1 * self.p2
    }
}

/// Samples `G(n, p)` as the union of `G(n, p1)` and `G(n, p2)` with
/// `p = p1 + p2 - p1 p2`. The rounds draw from `seed.derive(1)` and
/// `seed.derive(2)`.
pub fn sample_two_round(n: usize, p: f64, seed: Seed, split: RoundSplit) -> Result<TwoRoundSample> {
    check_probability(p)?;
    let p1 = match split {
        RoundSplit::Symmetric => 1.0 - (1.0 - p).sqrt(),
        RoundSplit::FirstRound(p1) => {
            if !(0.0..=p).contains(&p1) {
                return Err(Error::param(format!("first-round probability {p1} outside [0, {p}]")));
            }
            p1
        }
    };
    let p2 = if p1 >= 1.0 {
        0.0
    } else {
        ((p - p1) / (1.0 - p1)).clamp(0.0, 1.0)
    };
    let g1 = sample_gnp(n, p1, seed.derive(1))?;
    let g2 = sample_gnp(n, p2, seed.derive(2))?;
    let union = g1.union(&g2)?;
    Ok(TwoRoundSample { g1, g2, union, p1, p2 })
}

/// Connected components: each sorted, listed by smallest member.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &u in g.neighbours(v) {
                let u = u as usize;
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Whether `G[s]` is connected. The empty set counts as connected.
pub fn is_connected_subset(g: &Graph, s: &[usize]) -> bool {
    if s.is_empty() {
        return true;
    }
    let mut inside = vec![false; g.n()];
    s.iter().for_each(|&v| inside[v] = true);
    let mut stack = vec![s[0]];
    inside[s[0]] = false;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbours(v) {
            let u = u as usize;
            if inside[u] {
                inside[u] = false;
                reached += 1;
                stack.push(u);
            }
        }
    }
    reached == s.len()
}

/// Scratch space for repeated BFS over vertex subsets of one graph.
pub(crate) struct BfsScratch {
    local: Vec<u32>,
    dist: Vec<u32>,
    queue: Vec<u32>,
}

impl BfsScratch {
    pub(crate) fn new(n: usize) -> Self {
        BfsScratch {
            local: vec![u32::MAX; n],
            dist: Vec::new(),
            queue: Vec::new(),
        }
    }

    /// Eccentricity-max over `comp`, distances measured inside `G[comp]`.
    pub(crate) fn diameter(&mut self, g: &Graph, comp: &[usize]) -> Result<usize> {
        if comp.is_empty() {
            return Err(Error::Contract("diameter of an empty vertex set".into()));
        }
        for (i, &v) in comp.iter().enumerate() {
            if v >= g.n() {
                self.reset(comp);
                return Err(Error::param(format!("vertex {v} out of range")));
            }
            self.local[v] = i as u32;
        }
        let k = comp.len();
        let mut best = 0u32;
        let mut result = Ok(());
        for src in 0..k {
            self.dist.clear();
            self.dist.resize(k, u32::MAX);
            self.queue.clear();
            self.dist[src] = 0;
            self.queue.push(src as u32);
            let mut head = 0;
            while head < self.queue.len() {
                let x = self.queue[head] as usize;
                head += 1;
                let dx = self.dist[x];
                for &u in g.neighbours(comp[x]) {
                    let lu = self.local[u as usize];
                    if lu != u32::MAX && self.dist[lu as usize] == u32::MAX {
                        self.dist[lu as usize] = dx + 1;
                        self.queue.push(lu);
                    }
                }
            }
            if self.queue.len() != k {
                result = Err(Error::Contract(format!("vertex set of size {k} is not connected")));
                break;
            }
            best = best.max(self.dist[*self.queue.last().unwrap() as usize]);
        }
        self.reset(comp);
        result.map(|_| best as usize)
    }

    fn reset(&mut self, comp: &[usize]) {
        for &v in comp {
            if v < self.local.len() {
                self.local[v] = u32::MAX;
            }
        }
    }
}

/// Longest shortest-path distance (in edges) between vertices of `comp`,
/// measured inside `G[comp]`. Errors if `G[comp]` is not connected.
pub fn diameter(g: &Graph, comp: &[usize]) -> Result<usize> {
    BfsScratch::new(g.n()).diameter(g, comp)
}

/// Every component paired with its diameter, sharing one BFS scratch.
pub fn component_diameters(g: &Graph) -> Vec<(Vec<usize>, usize)> {
    let mut scratch = BfsScratch::new(g.n());
    components(g)
        .into_iter()
        .map(|c| {
            let d = scratch.diameter(g, &c).expect("components are connected");
            (c, d)
        })
        .collect()
}

/// `G[s]` relabelled to `0..|s|` in the order of `s`, plus the map back
/// (`map[i]` is the original index of new vertex `i`).
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
    // a small set in a large graph gets a map instead of an O(n) table
    let small = s.len() * 16 < g.n();
    let mut table = if small { Vec::new() } else { vec![u32::MAX; g.n()] };
    let mut map = std::collections::HashMap::new();
    for (i, &v) in s.iter().enumerate() {
        if v >= g.n() {
            return Err(Error::param(format!("vertex {v} out of range 0..{}", g.n())));
        }
        let fresh = if small {
            map.insert(v, i as u32).is_none()
        } else {
            std::mem::replace(&mut table[v], i as u32) == u32::MAX
        };
        if !fresh {
            return Err(Error::param(format!("vertex {v} listed twice")));
        }
    }
    let local = |u: usize| {
        if small {
            map.get(&u).copied()
        } else {
            Some(table[u]).filter(|&x| x != u32::MAX)
        }
    };
    let lists = s
        .iter()
        .map(|&v| g.neighbours(v).iter().filter_map(|&u| local(u as usize)).collect())
        .collect();
    Ok((Graph::from_lists(s.len(), lists), s.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_extremes() {
        let g = sample_gnp(5, 0.0, Seed(3)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 0));
        let g = sample_gnp(5, 1.0, Seed(3)).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(sample_gnp(5, 1.5, Seed(3)).is_err());
        assert!(sample_gnp(5, -0.1, Seed(3)).is_err());
    }

    #[test]
    fn gnp_edge_count_within_four_sigma() {
        let g = sample_gnp(1000, 0.01, Seed(42)).unwrap();
        let mean = 499_500.0 * 0.01;
        let sd = (499_500.0 * 0.01 * 0.99f64).sqrt();
        assert!((g.edge_count() as f64 - mean).abs() <= 4.0 * sd, "{}", g.edge_count());
    }

    #[test]
    fn gnp_deterministic() {
        let a = sample_gnp(300, 0.05, Seed(11)).unwrap();
        let b = sample_gnp(300, 0.05, Seed(11)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_gnp(300, 0.05, Seed(12)).unwrap());
    }

    #[test]
    fn sparse_graphs_skip_rows() {
        let g = sample_gnp(5000, 1.0 / 5000.0, Seed(1)).unwrap();
        assert!(!g.is_dense());
        g.check_invariants().unwrap();
        let g = sample_gnp(200, 0.3, Seed(1)).unwrap();
        assert!(g.is_dense());
    }

    #[test]
    fn two_round_extremes() {
        let t = sample_two_round(10, 0.0, Seed(1), RoundSplit::Symmetric).unwrap();
        assert_eq!(t.g1.edge_count() + t.g2.edge_count() + t.union.edge_count(), 0);
        let t = sample_two_round(10, 1.0, Seed(1), RoundSplit::Symmetric).unwrap();
        assert_eq!(t.p1, 1.0);
        assert_eq!(t.union, Graph::complete(10));
        assert!(sample_two_round(10, 2.0, Seed(1), RoundSplit::Symmetric).is_err());
    }

    #[test]
    fn two_round_split_solves_union_probability() {
        for p in [0.01, 0.3, 0.5, 0.99] {
            for split in [RoundSplit::Symmetric, RoundSplit::FirstRound(p / 2.0)] {
                let t = sample_two_round(4, p, Seed(0), split).unwrap();
                assert!((t.p() - p).abs() < 1e-12);
            }
        }
        assert!(sample_two_round(4, 0.3, Seed(0), RoundSplit::FirstRound(0.4)).is_err());
    }

    #[test]
    fn union_is_edge_union() {
        let t = sample_two_round(60, 0.2, Seed(5), RoundSplit::Symmetric).unwrap();
        for u in 0..60 {
            for v in 0..60 {
                assert_eq!(t.union.has_edge(u, v), t.g1.has_edge(u, v) || t.g2.has_edge(u, v));
            }
        }
    }

    #[test]
    fn components_examples() {
        assert_eq!(components(&Graph::empty(3)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(components(&Graph::complete(4)), vec![vec![0, 1, 2, 3]]);
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(components(&g), vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&Graph::path(5), &[0, 1, 2, 3, 4]).unwrap(), 4);
        assert_eq!(diameter(&Graph::complete(4), &[0, 1, 2, 3]).unwrap(), 1);
        assert_eq!(diameter(&Graph::cycle(6), &[0, 1, 2, 3, 4, 5]).unwrap(), 3);
        for k in 2..=10 {
            let all: Vec<_> = (0..k).collect();
            assert_eq!(diameter(&Graph::path(k), &all).unwrap(), k - 1);
        }
        assert!(matches!(diameter(&Graph::path(5), &[0, 2]), Err(Error::Contract(_))));
        assert!(diameter(&Graph::path(5), &[]).is_err());
    }

    #[test]
    fn induced_examples() {
        let (h, map) = induced_subgraph(&Graph::complete(5), &[0, 1, 2]).unwrap();
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (h, _) = induced_subgraph(&Graph::path(4), &[]).unwrap();
        assert_eq!(h.n(), 0);
        let (h, _) = induced_subgraph(&Graph::cycle(5), &[0, 1, 2]).unwrap();
        assert_eq!(h, Graph::path(3));
        assert!(induced_subgraph(&Graph::cycle(5), &[7]).is_err());
        assert!(induced_subgraph(&Graph::cycle(5), &[1, 1]).is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}
