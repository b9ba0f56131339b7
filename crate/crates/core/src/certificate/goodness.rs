use std::fmt;

use rand::seq::index::sample;

use crate::bitset::BitSet;
use crate::graph::{induced_subgraph, is_connected_subset};
use crate::{Error, Graph, Result, Seed};

/// Non-negative rational `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::param("fraction with zero denominator"));
        }
        Ok(Fraction { num, den })
    }

    /// `floor(self * x)`.
    pub fn floor_of(self, x: usize) -> usize {
        (x as u128 * self.num as u128 / self.den as u128) as usize
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionMode {
    /// Every subset up to the size bound. Only allowed when the bound is at
    /// most 3 or the set has at most 20 vertices.
    Exact,
    /// All singletons and pairs, plus `sample_budget` random subsets of each
    /// larger admissible size.
    Sampled,
}

/// Parameters of the goodness check. Defaults: subsets up to `|V|/45`,
/// expansion factor 2, sampled mode with 64 samples per size.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GoodnessParams {
    pub fraction: Fraction,
    pub factor: usize,
    pub mode: ExpansionMode,
    pub sample_budget: usize,
    pub seed: Seed,
}

impl Default for GoodnessParams {
    fn default() -> Self {
        GoodnessParams {
            fraction: Fraction { num: 1, den: 45 },
            factor: 2,
            mode: ExpansionMode::Sampled,
            sample_budget: 64,
            seed: Seed(0),
        }
    }
}

/// Outcome of [`is_good`].
#[derive(Clone, Debug, PartialEq)]
pub struct GoodnessReport {
    pub connected: bool,
    pub expansion_mode: ExpansionMode,
    pub expansion_ok: bool,
    pub fraction: Fraction,
    /// `floor(fraction * |s|)`, the largest subset size examined.
    pub max_subset: usize,
    pub subsets_checked: u64,
    /// A non-empty `X` within the size bound with `|N(X) \ X| <= factor |X|`.
    pub violating_set: Option<Vec<usize>>,
}

impl GoodnessReport {
    pub fn is_good(&self) -> bool {
        self.connected && self.expansion_ok
    }
}

const EXACT_SET_CAP: usize = 20;
const EXACT_SIZE_CAP: usize = 3;

struct Expansion {
    rows: Vec<BitSet>,
    factor: usize,
}

impl Expansion {
    fn expands(&self, xs: &[usize]) -> bool {
        let mut nb = BitSet::new(self.rows.len());
        for &x in xs {
            nb.union_with(&self.rows[x]);
        }
        for &x in xs {
            nb.remove(x);
        }
        nb.count() > self.factor * xs.len()
    }
}

/// Visits all `r`-subsets of `0..m` in lexicographic order until `f`
/// returns `false`. Returns the number visited.
fn for_each_combination(m: usize, r: usize, mut f: impl FnMut(&[usize]) -> bool) -> u64 {
    if r > m {
        return 0;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    let mut count = 0;
    loop {
        count += 1;
        if !f(&idx) {
            return count;
        }
        let Some(i) = (0..r).rev().find(|&i| idx[i] != i + m - r) else {
            return count;
        };
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Whether `G[s]` is connected and every non-empty `X ⊆ s` with
/// `|X| <= floor(fraction |s|)` has `|N(X) \ X| > factor |X|` inside `G[s]`.
pub fn is_good(g: &Graph, s: &[usize], params: &GoodnessParams) -> Result<GoodnessReport> {
    if s.is_empty() {
        return Err(Error::param("goodness of an empty vertex set"));
    }
    let (h, map) = induced_subgraph(g, s)?;
    let m = h.n();
    let max_subset = params.fraction.floor_of(m);
    if params.mode == ExpansionMode::Exact && max_subset > EXACT_SIZE_CAP && m > EXACT_SET_CAP {
        return Err(Error::SizeGuard {
            what: "exact expansion check",
            size: m,
            cap: EXACT_SET_CAP,
        });
    }
    let connected = is_connected_subset(g, s);
    let expansion = Expansion {
        rows: (0..m)
            .map(|v| {
                let mut row = BitSet::new(m);
                h.neighbours(v).iter().for_each(|&u| {
                    row.insert(u as usize);
                });
                row
            })
            .collect(),
        factor: params.factor,
    };

    let mut violating: Option<Vec<usize>> = None;
    let mut checked = 0u64;
    let exhaustive_up_to = match params.mode {
        ExpansionMode::Exact => max_subset,
        ExpansionMode::Sampled => max_subset.min(2),
    };
    for r in 1..=exhaustive_up_to {
        checked += for_each_combination(m, r, |xs| {
            if expansion.expands(xs) {
                true
            } else {
                violating = Some(xs.to_vec());
                false
            }
        });
        if violating.is_some() {
            break;
        }
    }
    if violating.is_none() && params.mode == ExpansionMode::Sampled {
        let mut rng = params.seed.rng();
        'sizes: for r in 3..=max_subset {
            for _ in 0..params.sample_budget {
                let xs = sample(&mut rng, m, r).into_vec();
                checked += 1;
                if !expansion.expands(&xs) {
                    violating = Some(xs);
                    break 'sizes;
                }
            }
        }
    }

    let violating_set = violating.map(|xs| {
        let mut vs: Vec<usize> = xs.into_iter().map(|i| map[i]).collect();
        vs.sort_unstable();
        vs
    });
    Ok(GoodnessReport {
        connected,
        expansion_mode: params.mode,
        expansion_ok: violating_set.is_none(),
        fraction: params.fraction,
        max_subset,
        subsets_checked: checked,
        violating_set,
    })
}
