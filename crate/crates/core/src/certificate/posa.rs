//! Pósa rotation-extension search for Hamilton paths of `G[s]`, with
//! optional sprinkling of extra edges.
//!
//! Each start takes the deepest branch of a depth-first search tree as its
//! path and grows it greedily from both ends. When both ends are stuck, it
//! runs a *phase*: the head stays fixed and a breadth-first pass over
//! rotations builds the set of reachable tail endpoints. A rotation by an edge `tail - p[i]` reverses the segment after
//! `p[i]`. Any rotated path whose tail has an off-path neighbour extends.
//! So does one whose tail sees the head, because the path then closes into
//! a cycle that can be opened at any vertex with an off-path neighbour.
//!
//! If no phase succeeds, sprinkle edges are exposed one at a time and added
//! to the working graph. An exposed edge that joins a reachable endpoint to
//! an off-path vertex or to the anchor is a *booster*: it lengthens the
//! longest path at once. When the budget runs out the search restarts from
//! a fresh random vertex, keeping the edges already exposed.

use std::collections::VecDeque;

use rand::Rng as _;

use crate::chromatic::PathWitness;
use crate::graph::is_connected_subset;
use crate::{Graph, Seed};

/// Which exposed sprinkle edges count as boosters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BoosterPolicy {
    /// An edge is a booster if one end is any endpoint in the rotation
    /// closures of the last phases.
    #[default]
    RotationClosure,
    /// Only the two ends of the current path qualify.
    PathEnds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PosaParams {
    pub max_rotations_per_phase: usize,
    pub max_restarts: usize,
    pub booster_policy: BoosterPolicy,
    pub seed: Seed,
}

impl Default for PosaParams {
    fn default() -> Self {
        PosaParams {
            max_rotations_per_phase: 256,
            max_restarts: 8,
            booster_policy: BoosterPolicy::RotationClosure,
            seed: Seed(0),
        }
    }
}

/// Everything the search produced, including the best path when it is not
/// Hamiltonian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosaOutcome {
    /// Longest path found, in original vertex indices.
    pub path: Vec<usize>,
    pub hamiltonian: bool,
    /// Sprinkle edges exposed (a prefix of the given order).
    pub exposed: usize,
    pub boosters: usize,
    pub rotations: usize,
    pub restarts: usize,
}

impl PosaOutcome {
    /// Edge count of the best path.
    pub fn path_edges(&self) -> usize {
        self.path.len().saturating_sub(1)
    }
}

const NONE: u32 = u32::MAX;

enum Phase {
    Extended(Vec<u32>),
    Stuck,
}

struct Search<'a> {
    adj: Vec<Vec<u32>>,
    sprinkle: &'a [(u32, u32)],
    exposed: usize,
    on_path: Vec<bool>,
    params: PosaParams,
    rotations: usize,
    boosters: usize,
}

impl Search<'_> {
    fn m(&self) -> usize {
        self.adj.len()
    }

    fn set_path(&mut self, path: &[u32]) {
        self.on_path.iter_mut().for_each(|b| *b = false);
        path.iter().for_each(|&v| self.on_path[v as usize] = true);
    }

    fn off_path_count(&self, v: u32) -> usize {
        self.adj[v as usize]
            .iter()
            .filter(|&&u| !self.on_path[u as usize])
            .count()
    }

    /// Greedy extension at the tail, preferring the off-path neighbour with
    /// the fewest off-path neighbours of its own, but taking a dead end only
    /// when nothing else is available.
    fn extend_tail(&mut self, path: &mut Vec<u32>) -> bool {
        let mut grew = false;
        loop {
            let tail = *path.last().unwrap();
            let next = self.adj[tail as usize]
                .iter()
                .copied()
                .filter(|&u| !self.on_path[u as usize])
                .min_by_key(|&u| {
                    let c = self.off_path_count(u);
                    (c == 0, c, u)
                });
            match next {
                Some(u) => {
                    self.on_path[u as usize] = true;
                    path.push(u);
                    grew = true;
                }
                None => return grew,
            }
        }
    }

    /// Root-to-deepest branch of a depth-first search tree of the component
    /// of `root`.
    fn dfs_branch(&self, root: u32) -> Vec<u32> {
        let m = self.m();
        let mut parent = vec![NONE; m];
        let mut depth = vec![0u32; m];
        let mut seen = vec![false; m];
        let mut stack = vec![(root, 0usize)];
        seen[root as usize] = true;
        let mut deepest = root;
        while let Some(top) = stack.last_mut() {
            let (v, next) = (top.0, &mut top.1);
            match self.adj[v as usize][*next..].iter().position(|&u| !seen[u as usize]) {
                Some(off) => {
                    let u = self.adj[v as usize][*next + off];
                    *next += off + 1;
                    seen[u as usize] = true;
                    parent[u as usize] = v;
                    depth[u as usize] = depth[v as usize] + 1;
                    if depth[u as usize] > depth[deepest as usize] {
                        deepest = u;
                    }
                    stack.push((u, 0));
                }
                None => {
                    stack.pop();
                }
            }
        }
        let mut path = vec![deepest];
        while parent[*path.last().unwrap() as usize] != NONE {
            path.push(parent[*path.last().unwrap() as usize]);
        }
        path
    }

    fn extend_both(&mut self, path: &mut Vec<u32>) {
        self.extend_tail(path);
        path.reverse();
        self.extend_tail(path);
    }

    /// If the tail is adjacent to the head, the path closes into a cycle;
    /// open it next to a vertex with an off-path neighbour.
    fn open_cycle(&self, path: &[u32]) -> Option<Vec<u32>> {
        let (head, tail) = (path[0], *path.last().unwrap());
        if path.len() < 3 || !self.adj[tail as usize].contains(&head) {
            return None;
        }
        let (i, w) = path.iter().enumerate().find_map(|(i, &v)| {
            self.adj[v as usize]
                .iter()
                .find(|&&u| !self.on_path[u as usize])
                .map(|&w| (i, w))
        })?;
        let mut out = Vec::with_capacity(path.len() + 1);
        out.push(w);
        out.extend_from_slice(&path[i..]);
        out.extend_from_slice(&path[..i]);
        Some(out)
    }

    fn try_extend(&self, path: &[u32]) -> Option<Vec<u32>> {
        let tail = *path.last().unwrap();
        if let Some(&u) = self.adj[tail as usize].iter().find(|&&u| !self.on_path[u as usize]) {
            let mut out = path.to_vec();
            out.push(u);
            return Some(out);
        }
        self.open_cycle(path)
    }

    /// Breadth-first rotation closure with the head fixed.
    fn phase(&mut self, path: &[u32], closure: &mut Vec<Vec<u32>>) -> Phase {
        closure.clear();
        let m = self.m();
        let mut seen_tail = vec![false; m];
        let mut pos = vec![NONE; m];
        seen_tail[*path.last().unwrap() as usize] = true;
        let mut queue = VecDeque::from([path.to_vec()]);
        let mut budget = self.params.max_rotations_per_phase;
        while let Some(p) = queue.pop_front() {
            if let Some(longer) = self.try_extend(&p) {
                return Phase::Extended(longer);
            }
            for (i, &v) in p.iter().enumerate() {
                pos[v as usize] = i as u32;
            }
            let len = p.len();
            let tail = p[len - 1];
            for &u in &self.adj[tail as usize] {
                let i = pos[u as usize] as usize;
                if i + 2 >= len {
                    continue;
                }
                let new_tail = p[i + 1];
                if std::mem::replace(&mut seen_tail[new_tail as usize], true) {
                    continue;
                }
                if budget == 0 {
                    break;
                }
                budget -= 1;
                self.rotations += 1;
                let mut q = p.clone();
                q[i + 1..].reverse();
                queue.push_back(q);
            }
            closure.push(p);
        }
        closure.extend(queue);
        Phase::Stuck
    }

    /// Path lengthened by exposed edge `(a, b)`, if it is a booster for the
    /// stored closures (each a list of paths sharing one head).
    fn booster(&self, a: u32, b: u32, closures: &[&[Vec<u32>]]) -> Option<Vec<u32>> {
        for closure in closures {
            let candidates: &[Vec<u32>] = match self.params.booster_policy {
                BoosterPolicy::RotationClosure => closure,
                BoosterPolicy::PathEnds => &closure[..closure.len().min(1)],
            };
            for p in candidates {
                let (head, tail) = (p[0], *p.last().unwrap());
                for (x, y) in [(a, b), (b, a)] {
                    if x != tail {
                        continue;
                    }
                    if !self.on_path[y as usize] {
                        let mut out = p.clone();
                        out.push(y);
                        return Some(out);
                    }
                    if y == head {
                        if let Some(out) = self.open_cycle(p) {
                            return Some(out);
                        }
                    }
                }
            }
        }
        None
    }

    fn expose_next(&mut self) -> Option<(u32, u32)> {
        let &(a, b) = self.sprinkle.get(self.exposed)?;
        self.exposed += 1;
        if !self.adj[a as usize].contains(&b) {
            self.adj[a as usize].push(b);
            self.adj[b as usize].push(a);
        }
        Some((a, b))
    }

    fn run(&mut self, rng: &mut crate::seed::Rng) -> (Vec<u32>, usize) {
        let m = self.m();
        let mut best: Vec<u32> = Vec::new();
        let mut restarts = 0;
        let (mut front, mut back) = (Vec::new(), Vec::new());
        'restart: loop {
            let mut path = self.dfs_branch(rng.random_range(0..m as u32));
            self.set_path(&path);
            loop {
                self.extend_both(&mut path);
                if path.len() == m {
                    return (path, restarts);
                }
                if let Phase::Extended(p) = self.phase(&path, &mut front) {
                    path = p;
                    self.set_path(&path);
                    continue;
                }
                path.reverse();
                if let Phase::Extended(p) = self.phase(&path, &mut back) {
                    path = p;
                    self.set_path(&path);
                    continue;
                }
                if let Some((a, b)) = self.expose_next() {
                    if let Some(p) = self.booster(a, b, &[&front, &back]) {
                        self.boosters += 1;
                        path = p;
                        self.set_path(&path);
                    }
                    continue;
                }
                if path.len() > best.len() {
                    best = path;
                }
                if restarts == self.params.max_restarts {
                    break 'restart;
                }
                restarts += 1;
                continue 'restart;
            }
        }
        (best, restarts)
    }
}

/// Runs the rotation-extension search on `G[s]` plus the sprinkle edges,
/// which are exposed in the given order. Sprinkle edges with an end outside
/// `s` are ignored. Always returns the longest path found.
pub fn posa_search(g: &Graph, s: &[usize], sprinkle: &[(usize, usize)], params: &PosaParams) -> PosaOutcome {
    let empty = PosaOutcome {
        path: Vec::new(),
        hamiltonian: s.is_empty(),
        exposed: 0,
        boosters: 0,
        rotations: 0,
        restarts: 0,
    };
    if s.is_empty() {
        return empty;
    }
    let mut local = vec![NONE; g.n()];
    for (i, &v) in s.iter().enumerate() {
        local[v] = i as u32;
    }
    let adj: Vec<Vec<u32>> = s
        .iter()
        .map(|&v| {
            g.neighbours(v)
                .iter()
                .map(|&u| local[u as usize])
                .filter(|&lu| lu != NONE)
                .collect()
        })
        .collect();
    let sprinkle_local: Vec<(u32, u32)> = sprinkle
        .iter()
        .filter_map(|&(a, b)| {
            let (la, lb) = (*local.get(a)?, *local.get(b)?);
            (la != NONE && lb != NONE && la != lb).then_some((la, lb))
        })
        .collect();
    let mut search = Search {
        on_path: vec![false; s.len()],
        adj,
        sprinkle: &sprinkle_local,
        exposed: 0,
        params: *params,
        rotations: 0,
        boosters: 0,
    };
    let mut rng = params.seed.rng();
    let (path, restarts) = search.run(&mut rng);
    // exposed counts positions in the filtered list; map back to a prefix
    // length of the caller's list
    let exposed = if search.exposed == 0 {
        0
    } else {
        let last = sprinkle_local[search.exposed - 1];
        let mut seen = 0;
        sprinkle
            .iter()
            .position(|&(a, b)| {
                let hit =
                    local.get(a).is_some_and(|&x| x != NONE) && local.get(b).is_some_and(|&x| x != NONE) && a != b;
                if hit {
                    seen += 1;
                }
                hit && seen == search.exposed && (local[a], local[b]) == last
            })
            .map_or(sprinkle.len(), |i| i + 1)
    };
    PosaOutcome {
        hamiltonian: path.len() == s.len(),
        path: path.into_iter().map(|i| s[i as usize]).collect(),
        exposed,
        boosters: search.boosters,
        rotations: search.rotations,
        restarts,
    }
}

/// A Hamilton path of `G[s]` plus sprinkle edges, or `None` when the search
/// gives up. Returns `None` at once if `G[s]` with every sprinkle edge added
/// is disconnected.
pub fn posa_hamilton_path(
    g: &Graph,
    s: &[usize],
    sprinkle: &[(usize, usize)],
    params: &PosaParams,
) -> Option<PathWitness> {
    if s.is_empty() {
        return None;
    }
    let connected = if sprinkle.is_empty() {
        is_connected_subset(g, s)
    } else {
        let extra = Graph::from_edges(
            g.n(),
            sprinkle
                .iter()
                .copied()
                .filter(|&(a, b)| a != b && a < g.n() && b < g.n()),
        );
        match extra.and_then(|e| g.union(&e)) {
            Ok(u) => is_connected_subset(&u, s),
            Err(_) => false,
        }
    };
    if !connected {
        return None;
    }
    let out = posa_search(g, s, sprinkle, params);
    out.hamiltonian.then_some(PathWitness(out.path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::sample_gnp;

    fn all(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    fn uses_allowed_edges(g: &Graph, path: &[usize], extra: &[(usize, usize)]) -> bool {
        path.windows(2).all(|w| {
            g.has_edge(w[0], w[1])
                || extra
                    .iter()
                    .any(|&(a, b)| (a, b) == (w[0], w[1]) || (b, a) == (w[0], w[1]))
        })
    }

    #[test]
    fn complete_graph() {
        let p = posa_hamilton_path(&Graph::complete(5), &all(5), &[], &PosaParams::default()).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.is_simple_path_in(&Graph::complete(5)));
    }

    #[test]
    fn path_graph_has_unique_hamilton_path() {
        let g = Graph::path(6);
        for seed in 0..10 {
            let params = PosaParams {
                seed: Seed(seed),
                ..PosaParams::default()
            };
            let mut p = posa_hamilton_path(&g, &all(6), &[], &params).unwrap().0;
            if p[0] != 0 {
                p.reverse();
            }
            assert_eq!(p, all(6));
        }
    }

    #[test]
    fn disconnected_has_none() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert!(posa_hamilton_path(&g, &all(6), &[], &PosaParams::default()).is_none());
        // a sprinkle edge can join the pieces
        let p = posa_hamilton_path(&g, &all(6), &[(2, 3)], &PosaParams::default()).unwrap();
        assert!(uses_allowed_edges(&g, &p.0, &[(2, 3)]));
    }

    #[test]
    fn rotations_are_needed_on_lollipop() {
        // triangle 0-1-2 with tail 2-3-4-5; starting at 0 or 1 greedy gets stuck
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        for seed in 0..20 {
            let params = PosaParams {
                seed: Seed(seed),
                ..PosaParams::default()
            };
            let p = posa_hamilton_path(&g, &all(6), &[], &params).unwrap();
            assert!(p.is_simple_path_in(&g));
        }
    }

    #[test]
    fn dense_random_graphs_are_traced() {
        for seed in 0..20 {
            let g = sample_gnp(120, 0.1, Seed(seed)).unwrap();
            let params = PosaParams {
                seed: Seed(seed),
                ..PosaParams::default()
            };
            let p = posa_hamilton_path(&g, &all(120), &[], &params).expect("G(120, 0.1) is traceable");
            assert!(p.is_simple_path_in(&g));
            assert_eq!(p.len(), 120);
        }
    }

    #[test]
    fn sprinkling_completes_sparse_cores() {
        // G1 too sparse to be traceable on its own, G2 supplies boosters
        let mut hits = 0;
        for seed in 0..10 {
            let g1 = sample_gnp(80, 0.03, Seed(seed)).unwrap();
            let g2 = sample_gnp(80, 0.08, Seed(1000 + seed)).unwrap();
            let sprinkle: Vec<_> = g2.edges().collect();
            let params = PosaParams {
                seed: Seed(seed),
                ..PosaParams::default()
            };
            let out = posa_search(&g1, &all(80), &sprinkle, &params);
            assert!(uses_allowed_edges(&g1, &out.path, &sprinkle[..out.exposed]));
            let set: std::collections::HashSet<_> = out.path.iter().collect();
            assert_eq!(set.len(), out.path.len());
            if out.hamiltonian {
                hits += 1;
            }
        }
        assert!(hits >= 8, "{hits}");
    }

    #[test]
    fn best_path_reported_without_hamiltonicity() {
        let g = Graph::star(5);
        let out = posa_search(&g, &all(6), &[], &PosaParams::default());
        assert!(!out.hamiltonian);
        assert_eq!(out.path_edges(), 2);
    }
}
