//! Brute-force reference implementations. They are deliberately naive and
//! share no code with the library beyond the `Graph` type.

#![allow(dead_code)]

use std::collections::HashMap;

use lincol::certificate::SetPairing;
use lincol::chromatic::Colouring;
use lincol::Graph;
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_colouring(rng: &mut impl Rng, n: usize, colours: u32) -> Colouring {
    Colouring::new((0..n).map(|_| rng.random_range(0..colours)).collect())
}

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbours(u).contains(&(v as u32))
}

/// Some colour occurs exactly once among `vs`.
pub fn naive_has_centre(phi: &Colouring, vs: &[usize]) -> bool {
    let mut count: HashMap<u32, usize> = HashMap::new();
    for &v in vs {
        *count.entry(phi.colour(v)).or_default() += 1;
    }
    count.values().any(|&c| c == 1)
}

/// Depth-first enumeration of every simple path; returns the first whose
/// vertex set has no centre.
pub fn naive_bad_path(g: &Graph, phi: &Colouring) -> Option<Vec<usize>> {
    fn go(g: &Graph, phi: &Colouring, path: &mut Vec<usize>, on: &mut Vec<bool>) -> bool {
        if !naive_has_centre(phi, path) {
            return true;
        }
        let last = *path.last().unwrap();
        for u in 0..g.n() {
            if !on[u] && adjacent(g, last, u) {
                on[u] = true;
                path.push(u);
                if go(g, phi, path, on) {
                    return true;
                }
                path.pop();
                on[u] = false;
            }
        }
        false
    }
    for start in 0..g.n() {
        let mut path = vec![start];
        let mut on = vec![false; g.n()];
        on[start] = true;
        if go(g, phi, &mut path, &mut on) {
            return Some(path);
        }
    }
    None
}

fn mask_connected(g: &Graph, mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in 0..g.n() {
            if mask >> u & 1 == 1 && seen >> u & 1 == 0 && adjacent(g, v, u) {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen == mask
}

fn mask_vertices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Some connected vertex set has no centre.
pub fn naive_uncentred_set(g: &Graph, phi: &Colouring) -> Option<Vec<usize>> {
    (1u32..1 << g.n())
        .filter(|&m| mask_connected(g, m))
        .map(mask_vertices)
        .find(|vs| !naive_has_centre(phi, vs))
}

fn colourings(n: usize, k: u32, mut visit: impl FnMut(&Colouring) -> bool) -> bool {
    let mut c = vec![0u32; n];
    loop {
        if visit(&Colouring::new(c.clone())) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn naive_chromatic(g: &Graph) -> u32 {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n as u32)
        .find(|&k| colourings(n, k, |phi| g.edges().all(|(u, v)| phi.colour(u) != phi.colour(v))))
        .unwrap()
}

/// Smallest `k` admitting a colouring under which every path has a centre.
/// Exponential in `n`; meant for `n <= 6`.
pub fn naive_linear_chromatic(g: &Graph) -> u32 {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n as u32)
        .find(|&k| colourings(n, k, |phi| naive_bad_path(g, phi).is_none()))
        .unwrap()
}

/// Tree-depth as the minimum, over all vertex orders, of the height of the
/// forest that roots each component at its earliest vertex and recurses.
pub fn naive_tree_depth(g: &Graph) -> u32 {
    fn height(g: &Graph, mask: u32, order: &[usize]) -> u32 {
        let mut rest = mask;
        let mut best = 0;
        while rest != 0 {
            // component of the lowest remaining vertex
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u32 << start;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in 0..g.n() {
                    if mask >> u & 1 == 1 && comp >> u & 1 == 0 && adjacent(g, v, u) {
                        comp |= 1 << u;
                        stack.push(u);
                    }
                }
            }
            rest &= !comp;
            let root = *order.iter().find(|&&v| comp >> v & 1 == 1).unwrap();
            best = best.max(1 + height(g, comp & !(1 << root), order));
        }
        best
    }
    fn permute(k: usize, order: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if k == order.len() {
            visit(order);
            return;
        }
        for i in k..order.len() {
            order.swap(k, i);
            permute(k + 1, order, visit);
            order.swap(k, i);
        }
    }
    let n = g.n();
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut best = n as u32;
    permute(0, &mut (0..n).collect(), &mut |order| {
        best = best.min(height(g, full, order));
    });
    best
}

fn min_degree_ok(g: &Graph, vs: &[usize], k: usize) -> bool {
    vs.iter()
        .all(|&v| vs.iter().filter(|&&u| adjacent(g, v, u)).count() >= k)
}

/// Largest pair-closed subset of `sp` with induced minimum degree `>= k`,
/// by trying every subset of pairs. Also asserts it contains every other
/// valid subset, which makes it the unique maximal one.
pub fn brute_core(g: &Graph, sp: &SetPairing, k: usize) -> Vec<(usize, usize)> {
    let pairs = sp.pairs();
    let mut valid = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let vs: Vec<usize> = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
        if min_degree_ok(g, &vs, k) {
            valid.push(mask);
        }
    }
    let union = valid.iter().fold(0u32, |acc, &m| acc | m);
    assert!(valid.contains(&union), "valid pair-closed sets are closed under union");
    (0..pairs.len())
        .filter(|&i| union >> i & 1 == 1)
        .map(|i| pairs[i])
        .collect()
}

/// Peeling that removes a uniformly random low-degree vertex (with its
/// partner) at each step.
pub fn peel_random_order(g: &Graph, sp: &SetPairing, k: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut alive: Vec<(usize, usize)> = sp.pairs().to_vec();
    loop {
        let vs: Vec<usize> = alive.iter().flat_map(|&(a, b)| [a, b]).collect();
        let low: Vec<usize> = vs
            .iter()
            .copied()
            .filter(|&v| vs.iter().filter(|&&u| adjacent(g, v, u)).count() < k)
            .collect();
        let Some(&v) = low.choose(rng) else {
            return alive;
        };
        alive.retain(|&(a, b)| a != v && b != v);
    }
}

/// A random pairing of a random even subset of `0..n`.
pub fn random_pairing(rng: &mut impl Rng, n: usize, max_pairs: usize) -> SetPairing {
    let mut vs: Vec<usize> = (0..n).collect();
    rand::seq::SliceRandom::shuffle(vs.as_mut_slice(), rng);
    let pairs = rng.random_range(0..=max_pairs.min(n / 2));
    SetPairing::new((0..pairs).map(|i| (vs[2 * i], vs[2 * i + 1]))).unwrap()
}

/// `path` is a simple path of `g` (or of `g` plus `extra` edges).
pub fn is_simple_path(g: &Graph, path: &[usize], extra: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    path.windows(2).all(|w| {
        adjacent(g, w[0], w[1])
            || extra
                .iter()
                .any(|&(a, b)| (a, b) == (w[0], w[1]) || (b, a) == (w[0], w[1]))
    })
}

/// Independent reading of a bad-path certificate: `path` is a simple path of
/// `g`, its vertex set is exactly the union of `pairs`, each pair is
/// monochromatic and a pair of `original`, and the set has no centre.
pub fn naive_certificate_ok(
    g: &Graph,
    phi: &Colouring,
    path: &[usize],
    pairs: &[(usize, usize)],
    original: &[(usize, usize)],
) -> bool {
    if path.is_empty() || !is_simple_path(g, path, &[]) || naive_has_centre(phi, path) {
        return false;
    }
    let mut from_pairs: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut on_path = path.to_vec();
    from_pairs.sort_unstable();
    on_path.sort_unstable();
    from_pairs == on_path
        && pairs.iter().all(|&(a, b)| {
            phi.colour(a) == phi.colour(b) && original.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
        })
}

/// Components as sorted vertex lists; those with at most `max_size`
/// vertices carry their diameter, found by a BFS from every vertex.
pub fn naive_components(g: &Graph, max_size: usize) -> Vec<(Vec<usize>, Option<usize>)> {
    let bfs = |s: usize| {
        let mut dist: HashMap<usize, usize> = HashMap::from([(s, 0)]);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for &u in g.neighbours(v) {
                dist.entry(u as usize).or_insert_with(|| {
                    queue.push_back(u as usize);
                    d + 1
                });
            }
        }
        dist
    };
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        let mut comp: Vec<usize> = bfs(s).into_keys().collect();
        comp.sort_unstable();
        for &v in &comp {
            seen[v] = true;
        }
        let diam =
            (comp.len() <= max_size).then(|| comp.iter().map(|&v| *bfs(v).values().max().unwrap()).max().unwrap());
        out.push((comp, diam));
    }
    out
}
