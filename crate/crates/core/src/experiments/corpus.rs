//! Exhaustive corpora of small graphs, one representative per isomorphism
//! class.

use std::collections::BTreeSet;

use crate::bitset::bits;
use crate::{Error, Graph, Result};

/// Largest `n` accepted by [`all_graphs`] and [`connected_graphs`].
pub const CORPUS_MAX_N: usize = 8;

/// Calls `visit` with every ordering that lists the classes in turn, each
/// class permuted arbitrarily.
fn permutations_within(classes: &[Vec<usize>], mut visit: impl FnMut(&[usize])) {
    fn go(
        classes: &[Vec<usize>],
        placed: usize,
        order: &mut Vec<usize>,
        used: &mut u64,
        visit: &mut impl FnMut(&[usize]),
    ) {
        let Some(class) = classes.first() else {
            visit(order);
            return;
        };
        if placed == class.len() {
            return go(&classes[1..], 0, order, used, visit);
        }
        for &v in class {
            if *used >> v & 1 == 0 {
                *used |= 1 << v;
                order.push(v);
                go(classes, placed + 1, order, used, visit);
                order.pop();
                *used &= !(1 << v);
            }
        }
    }
    go(classes, 0, &mut Vec::new(), &mut 0, &mut visit);
}

/// Largest upper-triangle code over relabellings that list vertices by
/// decreasing degree. Two graphs get the same code iff they are isomorphic.
fn canonical_code(adj: &[u64]) -> u64 {
    let n = adj.len();
    let mut by_degree: Vec<Vec<usize>> = Vec::new();
    let mut degrees: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees.dedup();
    for d in degrees {
        by_degree.push((0..n).filter(|&v| adj[v].count_ones() == d).collect());
    }
    let mut best = 0;
    permutations_within(&by_degree, |order| {
        let mut code = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                code = code << 1 | (adj[order[i]] >> order[j] & 1);
            }
        }
        best = best.max(code);
    });
    best
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * n.saturating_sub(1) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("decoded edges are valid")
}

fn guard(n: usize) -> Result<()> {
    if n > CORPUS_MAX_N {
        return Err(Error::SizeGuard {
            what: "graph corpus",
            size: n,
            cap: CORPUS_MAX_N,
        });
    }
    Ok(())
}

/// One graph per isomorphism class on `n` vertices, in a fixed order.
///
/// Built by adding a vertex with every possible neighbourhood to each class
/// on `n - 1` vertices, since deleting any vertex leaves such a graph.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    guard(n)?;
    let mut codes: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let g = decode(m - 1, code);
            let base = if m == 1 { Vec::new() } else { g.masks() };
            for nbhd in 0..1u64 << (m - 1) {
                let mut adj = base.clone();
                for u in bits(nbhd) {
                    adj[u] |= 1 << (m - 1);
                }
                adj.push(nbhd);
                next.insert(canonical_code(&adj));
            }
        }
        codes = next;
    }
    Ok(codes.into_iter().rev().map(|c| decode(n, c)).collect())
}

/// One connected graph per isomorphism class on `n >= 1` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?
        .into_iter()
        .filter(|g| g.n() > 0 && crate::graph::components(g).len() == 1)
        .collect())
}
