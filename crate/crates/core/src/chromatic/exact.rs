//! Exact chromatic, linear chromatic and tree-depth (= centred chromatic)
//! numbers for small graphs. All three are maxima over components, so each
//! solver runs per component.

use std::collections::HashMap;

use super::{locals, path_centred_value, path_endpoint_table, Limits, Local};
use crate::bitset::bits;
use crate::graph::diameter;
use crate::{Graph, Result};

/// Exact `χ(G)`; 0 for the graph on no vertices.
pub fn chromatic_number(g: &Graph) -> Result<u32> {
    chromatic_number_with(g, &Limits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<u32> {
    Ok(locals(g, "chromatic number", limits.chromatic)?
        .iter()
        .map(local_chromatic)
        .max()
        .unwrap_or(0))
}

/// Exact linear chromatic number; 0 for the graph on no vertices.
pub fn linear_chromatic_number(g: &Graph) -> Result<u32> {
    linear_chromatic_number_with(g, &Limits::default())
}

pub fn linear_chromatic_number_with(g: &Graph, limits: &Limits) -> Result<u32> {
    Ok(locals(g, "linear chromatic number", limits.linear)?
        .iter()
        .map(local_linear)
        .max()
        .unwrap_or(0))
}

/// Exact tree-depth, which equals the centred chromatic number; 0 for the
/// graph on no vertices.
pub fn tree_depth(g: &Graph) -> Result<u32> {
    tree_depth_with(g, &Limits::default())
}

pub fn tree_depth_with(g: &Graph, limits: &Limits) -> Result<u32> {
    Ok(locals(g, "tree-depth", limits.tree_depth)?
        .iter()
        .map(|l| TreeDepth::new(&l.adj).solve(l.full()))
        .max()
        .unwrap_or(0))
}

/// Vertices in breadth-first order from a maximum-degree vertex, so that
/// every prefix of a connected component is connected.
fn search_order(adj: &[u64]) -> Vec<usize> {
    let k = adj.len();
    if k == 0 {
        return Vec::new();
    }
    let start = (0..k)
        .max_by_key(|&v| (adj[v].count_ones(), std::cmp::Reverse(v)))
        .unwrap();
    let mut order = vec![start];
    let mut seen = 1u64 << start;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let mut next: Vec<usize> = bits(adj[v] & !seen).collect();
        next.sort_by_key(|&u| std::cmp::Reverse(adj[u].count_ones()));
        for u in next {
            seen |= 1 << u;
            order.push(u);
        }
    }
    order.extend((0..k).filter(|&v| seen >> v & 1 == 0));
    order
}

fn relabel(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| bits(adj[v]).fold(0u64, |m, u| m | 1 << pos[u]))
        .collect()
}

fn max_clique(adj: &[u64]) -> u32 {
    fn expand(adj: &[u64], size: u32, mut cand: u64, best: &mut u32) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(adj, size + 1, cand & adj[v], best);
        }
    }
    let mut best = 0;
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    expand(adj, 0, all, &mut best);
    best
}

fn greedy_colour_count(adj: &[u64]) -> u32 {
    let mut classes: Vec<u64> = Vec::new();
    for (v, &nb) in adj.iter().enumerate() {
        match classes.iter_mut().find(|c| **c & nb == 0) {
            Some(c) => *c |= 1 << v,
            None => classes.push(1 << v),
        }
    }
    classes.len() as u32
}

fn k_colourable(adj: &[u64], k: u32) -> bool {
    fn go(adj: &[u64], v: usize, classes: &mut Vec<u64>, k: u32) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..classes.len() {
            if classes[c] & adj[v] == 0 {
                classes[c] |= 1 << v;
                if go(adj, v + 1, classes, k) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        if (classes.len() as u32) < k {
            classes.push(1 << v);
            if go(adj, v + 1, classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    go(adj, 0, &mut Vec::new(), k)
}

fn local_chromatic(local: &Local) -> u32 {
    let adj = relabel(&local.adj, &search_order(&local.adj));
    let upper = greedy_colour_count(&adj);
    let mut k = max_clique(&adj).max(1);
    while k < upper && !k_colourable(&adj, k) {
        k += 1;
    }
    k.min(upper)
}

/// Backtracking over colour assignments in search order. When vertex `i`
/// receives its colour, every path vertex set whose largest vertex is `i`
/// is fully coloured and must have a centre.
struct LinearSearch {
    /// Path vertex sets of size >= 2, bucketed by their largest vertex.
    by_last: Vec<Vec<u64>>,
    colour: Vec<usize>,
    classes: Vec<u64>,
}

impl LinearSearch {
    fn new(adj: &[u64]) -> Self {
        let k = adj.len();
        let ends = path_endpoint_table(adj);
        let mut by_last = vec![Vec::new(); k];
        for (m, &e) in ends.iter().enumerate() {
            if e != 0 && (m as u64).count_ones() >= 2 {
                by_last[63 - (m as u64).leading_zeros() as usize].push(m as u64);
            }
        }
        LinearSearch {
            by_last,
            colour: vec![0; k],
            classes: Vec::new(),
        }
    }

    fn consistent(&self, i: usize) -> bool {
        self.by_last[i]
            .iter()
            .all(|&m| bits(m).any(|v| m & self.classes[self.colour[v]] & !(1 << v) == 0))
    }

    fn colourable(&mut self, k: usize) -> bool {
        self.classes.clear();
        self.go(0, k)
    }

    fn go(&mut self, i: usize, k: usize) -> bool {
        if i == self.colour.len() {
            return true;
        }
        let open = self.classes.len();
        for c in 0..=open.min(k - 1) {
            if c == open {
                self.classes.push(0);
            }
            self.classes[c] |= 1 << i;
            self.colour[i] = c;
            if self.consistent(i) && self.go(i + 1, k) {
                return true;
            }
            self.classes[c] &= !(1 << i);
            if c == open {
                self.classes.pop();
            }
        }
        false
    }
}

fn local_linear(local: &Local) -> u32 {
    let k = local.k();
    if k <= 1 {
        return k as u32;
    }
    let adj = relabel(&local.adj, &search_order(&local.adj));
    let upper = TreeDepth::new(&adj).solve(local.full());
    let diam_bound = {
        let g = Graph::from_edges(
            k,
            (0..k).flat_map(|v| bits(adj[v]).filter(move |&u| u > v).map(move |u| (v, u))),
        )
        .expect("valid local graph");
        let all: Vec<usize> = (0..k).collect();
        path_centred_value(diameter(&g, &all).expect("component") as u64 + 1).expect("k >= 1")
    };
    let mut lower = diam_bound.max(local_chromatic(&Local {
        map: local.map.clone(),
        adj: adj.clone(),
    }));
    if lower >= upper {
        return upper;
    }
    let mut search = LinearSearch::new(&adj);
    while lower < upper {
        if search.colourable(lower as usize) {
            return lower;
        }
        lower += 1;
    }
    upper
}

/// Memoised tree-depth over vertex masks: the maximum over components, and
/// for a connected set, one plus the minimum over deleted vertices.
struct TreeDepth<'a> {
    adj: &'a [u64],
    memo: HashMap<u64, u32>,
}

impl<'a> TreeDepth<'a> {
    fn new(adj: &'a [u64]) -> Self {
        TreeDepth {
            adj,
            memo: HashMap::new(),
        }
    }

    fn component_of(&self, mask: u64, start: usize) -> u64 {
        let mut reach = 1u64 << start;
        let mut frontier = reach;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |m, v| m | self.adj[v]) & mask & !reach;
            reach |= next;
            frontier = next;
        }
        reach
    }

    fn solve(&mut self, mask: u64) -> u32 {
        let mut rest = mask;
        let mut best = 0;
        while rest != 0 {
            let comp = self.component_of(mask, rest.trailing_zeros() as usize);
            rest &= !comp;
            best = best.max(self.connected(comp));
        }
        best
    }

    fn connected(&mut self, mask: u64) -> u32 {
        let size = mask.count_ones();
        if size <= 2 {
            return size;
        }
        if let Some(&d) = self.memo.get(&mask) {
            return d;
        }
        let is_clique = bits(mask).all(|v| (self.adj[v] | 1 << v) & mask == mask);
        let d = if is_clique {
            size
        } else {
            // 2 is the floor for a connected set of 3 or more vertices
            let mut best = size;
            for v in bits(mask) {
                let sub = self.solve(mask & !(1 << v));
                best = best.min(1 + sub);
                if best == 2 {
                    break;
                }
            }
            best
        };
        self.memo.insert(mask, d);
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{induced_subgraph, sample_gnp};
    use crate::Seed;

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::path(6)).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn linear_examples() {
        assert_eq!(linear_chromatic_number(&Graph::path(8)).unwrap(), 4);
        assert_eq!(linear_chromatic_number(&Graph::complete(4)).unwrap(), 4);
        assert_eq!(linear_chromatic_number(&Graph::cycle(4)).unwrap(), 3);
        assert_eq!(linear_chromatic_number(&Graph::empty(2)).unwrap(), 1);
    }

    #[test]
    fn tree_depth_examples() {
        assert_eq!(tree_depth(&Graph::path(8)).unwrap(), 4);
        assert_eq!(tree_depth(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(tree_depth(&Graph::cycle(4)).unwrap(), 3);
        assert_eq!(tree_depth(&Graph::star(6)).unwrap(), 2);
        assert_eq!(tree_depth(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn size_guards() {
        assert!(linear_chromatic_number(&Graph::path(12)).is_err());
        assert!(tree_depth(&Graph::path(23)).is_err());
        let limits = Limits {
            linear: 12,
            ..Limits::default()
        };
        assert_eq!(linear_chromatic_number_with(&Graph::path(12), &limits).unwrap(), 4);
    }

    #[test]
    fn sandwich_on_random_graphs() {
        for t in 0..60 {
            let g = sample_gnp(8, 0.45, Seed(t)).unwrap();
            let chi = chromatic_number(&g).unwrap();
            let lin = linear_chromatic_number(&g).unwrap();
            let cen = tree_depth(&g).unwrap();
            assert!(chi <= lin && lin <= cen, "{chi} {lin} {cen}");
        }
    }

    #[test]
    fn tree_depth_larger_components() {
        // P_k for k up to 22 stays within the cap
        assert_eq!(tree_depth(&Graph::path(22)).unwrap(), 5);
        let (g, _) = induced_subgraph(&Graph::complete(12), &(0..12).collect::<Vec<_>>()).unwrap();
        assert_eq!(tree_depth(&g).unwrap(), 12);
    }
}
