//! Seeded Monte Carlo harnesses and the small-graph sweep.
//!
//! Trial `i` draws everything from `cfg.seed.derive(i)`, so each trial is
//! independent of the others and of scheduling. Trials may run on a rayon
//! pool; rows always come back in trial order.

mod corpus;
mod csv_io;

pub use corpus::{all_graphs, connected_graphs, CORPUS_MAX_N};
pub use csv_io::{read_csv, read_csv_from, write_csv, write_csv_to, CSV_FIELDS};

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate::{
    certify_not_linear, check_certificate, posa_search, CertifyInput, CertifyOptions, FailureReason, PosaParams,
};
use crate::chromatic::{chromatic_number, linear_chromatic_number, path_centred_value, tree_depth, Colouring};
use crate::graph::{component_diameters, induced_subgraph, sample_gnp, sample_two_round, RoundSplit};
use crate::graph6::{encode_graph6, read_graph6_lines};
use crate::{Error, Graph, Result, Seed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Dense,
    Sparse,
    Supercritical,
    Conjecture,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Dense => "dense",
            Regime::Sparse => "sparse",
            Regime::Supercritical => "supercritical",
            Regime::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Regime {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(Regime::Dense),
            "sparse" => Ok(Regime::Sparse),
            "supercritical" => Ok(Regime::Supercritical),
            "conjecture" => Ok(Regime::Conjecture),
            _ => Err(Error::param(format!("unknown regime {s:?}"))),
        }
    }
}

/// How the dense harness colours each sample.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum ColouringPolicy {
    /// Random equipartition into `classes` classes.
    #[default]
    BalancedRandom,
    /// First-fit proper colouring in vertex order; ignores `classes`.
    Greedy,
    /// The same colouring in every trial.
    Explicit(Colouring),
}

impl ColouringPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            ColouringPolicy::BalancedRandom => "balanced-random",
            ColouringPolicy::Greedy => "greedy",
            ColouringPolicy::Explicit(_) => "explicit",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub regime: Regime,
    pub n: usize,
    /// `omega` for the dense regime, `c` for the sparse and supercritical ones.
    pub density: f64,
    pub colouring_policy: ColouringPolicy,
    pub classes: usize,
    pub trials: usize,
    pub seed: Seed,
    pub output_path: Option<PathBuf>,
    /// Split of `p` between the two rounds in the dense regime.
    pub split: RoundSplit,
    pub k_override: Option<usize>,
    pub posa: PosaParams,
    /// Components up to this size get exact chromatic values in the sparse
    /// regime.
    pub exact_component_cap: usize,
    pub parallel: bool,
    /// Fill `wall_time_ms`. Off by default because it breaks byte-identical
    /// output.
    pub record_timing: bool,
}

impl ExperimentConfig {
    pub fn new(regime: Regime, n: usize, density: f64, trials: usize, seed: Seed) -> Self {
        ExperimentConfig {
            regime,
            n,
            density,
            colouring_policy: ColouringPolicy::BalancedRandom,
            classes: n / 2,
            trials,
            seed,
            output_path: None,
            split: RoundSplit::Symmetric,
            k_override: None,
            posa: PosaParams::default(),
            exact_component_cap: 11,
            parallel: true,
            record_timing: false,
        }
    }

    fn validate(&self, regime: Regime) -> Result<()> {
        if self.regime != regime {
            return Err(Error::param(format!(
                "{} harness given a {} config",
                regime, self.regime
            )));
        }
        if !(self.density.is_finite() && self.density > 0.0) {
            return Err(Error::param(format!(
                "density parameter {} must be positive",
                self.density
            )));
        }
        match regime {
            Regime::Dense if self.density > self.n as f64 => {
                Err(Error::param(format!("omega = {} exceeds n = {}", self.density, self.n)))
            }
            Regime::Dense if self.classes == 0 && self.colouring_policy == ColouringPolicy::BalancedRandom => {
                Err(Error::param("balanced colouring needs at least one class"))
            }
            Regime::Sparse if self.density > 1.0 => Err(Error::param(format!(
                "sparse regime needs c <= 1, got {}",
                self.density
            ))),
            Regime::Supercritical if self.density <= 1.0 => Err(Error::param(format!(
                "supercritical regime needs c > 1, got {}",
                self.density
            ))),
            _ => Ok(()),
        }
    }

    fn p(&self) -> f64 {
        (self.density / self.n as f64).min(1.0)
    }
}

/// One CSV row. Fields that do not apply to the regime are empty.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct TrialRow {
    pub trial: usize,
    pub seed: u64,
    pub regime: String,
    pub n: usize,
    pub density: f64,
    // dense
    pub success: Option<bool>,
    pub failure: Option<String>,
    pub classes: Option<usize>,
    pub pairing_size: Option<usize>,
    pub k: Option<usize>,
    pub removed: Option<usize>,
    pub core_size: Option<usize>,
    pub connected: Option<bool>,
    pub expansion_ok: Option<bool>,
    pub exposed: Option<usize>,
    pub boosters: Option<usize>,
    pub verified: Option<bool>,
    pub certificate: Option<String>,
    // sparse and supercritical
    pub components: Option<usize>,
    pub largest_component: Option<usize>,
    pub max_diameter: Option<usize>,
    pub diameter_bound: Option<u32>,
    pub small_components: Option<usize>,
    pub checks_passed: Option<bool>,
    pub longest_path: Option<usize>,
    pub path_bound: Option<u32>,
    // conjecture sweep
    pub graph6: Option<String>,
    pub chi: Option<u32>,
    pub chi_lin: Option<u32>,
    pub chi_cen: Option<u32>,
    pub error: Option<String>,
    pub wall_time_ms: Option<u64>,
}

impl TrialRow {
    fn base(cfg: &ExperimentConfig, trial: usize, seed: Seed) -> Self {
        TrialRow {
            trial,
            seed: seed.0,
            regime: cfg.regime.name().to_string(),
            n: cfg.n,
            density: cfg.density,
            ..TrialRow::default()
        }
    }
}

fn run_trials(cfg: &ExperimentConfig, trial: impl Fn(usize, Seed) -> Result<TrialRow> + Sync) -> Result<Vec<TrialRow>> {
    let timed = |i: usize| {
        let start = Instant::now();
        let mut row = trial(i, cfg.seed.derive(i as u64))?;
        if cfg.record_timing {
            row.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
        Ok(row)
    };
    let rows: Result<Vec<TrialRow>> = if cfg.parallel {
        (0..cfg.trials).into_par_iter().map(timed).collect()
    } else {
        (0..cfg.trials).map(timed).collect()
    };
    let rows = rows?;
    if let Some(path) = &cfg.output_path {
        write_csv(&rows, path)?;
    }
    Ok(rows)
}

/// Random equipartition of `0..n` into `classes` colours.
pub fn balanced_colouring(n: usize, classes: usize, seed: Seed) -> Result<Colouring> {
    if classes == 0 && n > 0 {
        return Err(Error::param("balanced colouring needs at least one class"));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut seed.rng());
    let mut colours = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        colours[v] = (i % classes) as u32;
    }
    Ok(Colouring::new(colours))
}

/// First-fit proper colouring in vertex order.
pub fn greedy_colouring(g: &Graph) -> Colouring {
    let mut colours = vec![u32::MAX; g.n()];
    let mut taken = Vec::new();
    for v in 0..g.n() {
        taken.clear();
        taken.extend(
            g.neighbours(v)
                .iter()
                .map(|&u| colours[u as usize])
                .filter(|&c| c != u32::MAX),
        );
        taken.sort_unstable();
        taken.dedup();
        colours[v] = (0u32..).find(|c| taken.binary_search(c).is_err()).unwrap();
    }
    Colouring::new(colours)
}

/// Dense regime: `G(n, omega / n)` in two rounds, a colouring per the
/// policy, then the certificate pipeline. Successful certificates are
/// re-checked; a certificate that fails the check is a contract error.
pub fn run_dense_experiment(cfg: &ExperimentConfig) -> Result<Vec<TrialRow>> {
    cfg.validate(Regime::Dense)?;
    if let ColouringPolicy::Explicit(phi) = &cfg.colouring_policy {
        if phi.len() != cfg.n {
            return Err(Error::param(format!(
                "explicit colouring has {} entries for n = {}",
                phi.len(),
                cfg.n
            )));
        }
    }
    run_trials(cfg, |i, seed| {
        let sample = sample_two_round(cfg.n, cfg.p(), seed, cfg.split)?;
        let phi = match &cfg.colouring_policy {
            ColouringPolicy::BalancedRandom => balanced_colouring(cfg.n, cfg.classes, seed.derive(3))?,
            ColouringPolicy::Greedy => greedy_colouring(&sample.union),
            ColouringPolicy::Explicit(phi) => phi.clone(),
        };
        let opts = CertifyOptions {
            k_override: cfg.k_override,
            posa: PosaParams {
                seed: seed.derive(4),
                ..cfg.posa
            },
            ..CertifyOptions::default()
        };
        let mut row = TrialRow {
            classes: Some(phi.class_count()),
            ..TrialRow::base(cfg, i, seed)
        };
        match certify_not_linear(CertifyInput::TwoRound(&sample), &phi, &opts) {
            Ok(done) => {
                if let Err(v) = check_certificate(&sample.union, &phi, &done.certificate, &done.pairing) {
                    return Err(Error::Contract(format!(
                        "trial {i}: pipeline certificate rejected: {v}"
                    )));
                }
                row.success = Some(true);
                row.pairing_size = Some(done.pairing.len());
                row.k = Some(done.certificate.params.k);
                row.removed = Some(done.removed);
                row.core_size = Some(done.certificate.sub_pairing.len());
                row.connected = Some(done.goodness.connected);
                row.expansion_ok = Some(done.goodness.expansion_ok);
                row.exposed = Some(done.certificate.params.exposed);
                row.boosters = Some(done.certificate.params.boosters);
                row.verified = Some(true);
                row.certificate = Some(done.certificate.to_string());
            }
            Err(reason) => {
                row.success = Some(false);
                row.failure = Some(reason.tag().to_string());
                match reason {
                    FailureReason::CoreEmpty {
                        pairing_size,
                        k,
                        removed,
                    } => {
                        row.pairing_size = Some(pairing_size);
                        row.k = Some(k);
                        row.removed = Some(removed);
                        row.core_size = Some(0);
                    }
                    FailureReason::NoHamiltonPath {
                        pairing_size,
                        k,
                        removed,
                        core_size,
                        exposed,
                        goodness,
                        ..
                    } => {
                        row.pairing_size = Some(pairing_size);
                        row.k = Some(k);
                        row.removed = Some(removed);
                        row.core_size = Some(core_size);
                        row.connected = Some(goodness.connected);
                        row.expansion_ok = Some(goodness.expansion_ok);
                        row.exposed = Some(exposed);
                    }
                    FailureReason::EmptyPairing => row.pairing_size = Some(0),
                    FailureReason::BadInput(msg) => return Err(Error::param(msg)),
                }
            }
        }
        Ok(row)
    })
}

/// Exact values for one small component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SmallValues {
    chi: u32,
    chi_lin: u32,
    chi_cen: u32,
}

fn small_values(h: &Graph) -> Result<SmallValues> {
    Ok(SmallValues {
        chi: chromatic_number(h)?,
        chi_lin: linear_chromatic_number(h)?,
        chi_cen: tree_depth(h)?,
    })
}

fn chain_holds(v: SmallValues) -> bool {
    v.chi <= v.chi_lin && v.chi_lin <= v.chi_cen && v.chi_cen <= 2 * v.chi_lin
}

/// Sparse regime: `G(n, c / n)` with `c <= 1`. Records component statistics
/// and the diameter lower bound. Components with at most
/// `exact_component_cap` vertices also get exact values, and the row's
/// `checks_passed` says whether every one of them satisfied
/// `chi <= chi_lin <= chi_cen <= 2 chi_lin` and `chi_lin >= floor(log2(diam + 1)) + 1`.
pub fn run_sparse_experiment(cfg: &ExperimentConfig) -> Result<Vec<TrialRow>> {
    cfg.validate(Regime::Sparse)?;
    run_trials(cfg, |i, seed| {
        let g = sample_gnp(cfg.n, cfg.p(), seed)?;
        let comps = component_diameters(&g);
        let mut row = TrialRow::base(cfg, i, seed);
        row.components = Some(comps.len());
        row.largest_component = Some(comps.iter().map(|(c, _)| c.len()).max().unwrap_or(0));
        let max_diameter = comps.iter().map(|&(_, d)| d).max().unwrap_or(0);
        row.max_diameter = Some(max_diameter);
        row.diameter_bound = Some(if comps.is_empty() {
            0
        } else {
            path_centred_value(max_diameter as u64 + 1)?
        });

        // many small components repeat exactly, so memoise on their encoding
        let mut memo: HashMap<String, SmallValues> = HashMap::new();
        let mut small = 0;
        let mut ok = true;
        let mut max_lin = 0;
        for (comp, d) in comps.iter().filter(|(c, _)| c.len() <= cfg.exact_component_cap) {
            let (h, _) = induced_subgraph(&g, comp)?;
            let key = encode_graph6(&h);
            let v = match memo.get(&key) {
                Some(&v) => v,
                None => {
                    let v = small_values(&h)?;
                    memo.insert(key, v);
                    v
                }
            };
            small += 1;
            max_lin = max_lin.max(v.chi_lin);
            ok &= chain_holds(v) && v.chi_lin >= path_centred_value(*d as u64 + 1)?;
        }
        row.small_components = Some(small);
        row.checks_passed = Some(ok);
        row.chi_lin = Some(max_lin);
        Ok(row)
    })
}

/// Supercritical probe: `G(n, c / n)` with `c > 1`. Runs the rotation
/// search on the largest component and records the longest path found, in
/// edges, and the implied bound `chi_lin >= floor(log2(L + 1)) + 1`.
pub fn run_supercritical_probe(cfg: &ExperimentConfig) -> Result<Vec<TrialRow>> {
    cfg.validate(Regime::Supercritical)?;
    run_trials(cfg, |i, seed| {
        let g = sample_gnp(cfg.n, cfg.p(), seed)?;
        let comps = crate::graph::components(&g);
        let mut row = TrialRow::base(cfg, i, seed);
        row.components = Some(comps.len());
        let largest = comps.iter().max_by_key(|c| c.len()).cloned().unwrap_or_default();
        row.largest_component = Some(largest.len());
        let params = PosaParams {
            seed: seed.derive(4),
            ..cfg.posa
        };
        let found = posa_search(&g, &largest, &[], &params);
        let l = found.path_edges();
        row.longest_path = Some(l);
        row.path_bound = Some(if found.path.is_empty() {
            0
        } else {
            path_centred_value(l as u64 + 1)?
        });
        Ok(row)
    })
}

/// Dispatches on `cfg.regime`. The conjecture regime sweeps the connected
/// graphs on `cfg.n` vertices.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<TrialRow>> {
    match cfg.regime {
        Regime::Dense => run_dense_experiment(cfg),
        Regime::Sparse => run_sparse_experiment(cfg),
        Regime::Supercritical => run_supercritical_probe(cfg),
        Regime::Conjecture => {
            let graphs = connected_graphs(cfg.n)?;
            let lines: Vec<String> = graphs.iter().map(encode_graph6).collect();
            let report = run_conjecture_sweep(lines.join("\n").as_bytes())?;
            if let Some(path) = &cfg.output_path {
                write_csv(&report.rows, path)?;
            }
            Ok(report.rows)
        }
    }
}

/// A graph where `chi <= chi_lin <= chi_cen <= 2 chi_lin` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepViolation {
    pub line: usize,
    pub graph6: String,
    pub chi: u32,
    pub chi_lin: u32,
    pub chi_cen: u32,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SweepReport {
    pub rows: Vec<TrialRow>,
    pub graphs: usize,
    pub errors: usize,
    pub violations: Vec<SweepViolation>,
    /// Largest `chi_cen / chi_lin` seen and the first graph attaining it.
    pub max_ratio: Option<(f64, String)>,
    /// Set when a graph with `chi_cen > 2 chi_lin` stopped the sweep.
    pub halted: bool,
}

/// Exact `chi`, `chi_lin` and `chi_cen` for every graph6 line of `corpus`.
/// Malformed lines and graphs over the size guards become error rows. A
/// graph with `chi_cen > 2 chi_lin` stops the sweep.
pub fn run_conjecture_sweep(corpus: impl BufRead) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for item in read_graph6_lines(corpus) {
        let (line, text, parsed) = item;
        let mut row = TrialRow {
            trial: report.rows.len(),
            regime: Regime::Conjecture.name().to_string(),
            graph6: Some(text.clone()),
            ..TrialRow::default()
        };
        let values = parsed.and_then(|g| {
            row.n = g.n();
            small_values(&g)
        });
        match values {
            Err(e) => {
                report.errors += 1;
                row.error = Some(e.to_string());
            }
            Ok(v) => {
                report.graphs += 1;
                row.chi = Some(v.chi);
                row.chi_lin = Some(v.chi_lin);
                row.chi_cen = Some(v.chi_cen);
                row.checks_passed = Some(chain_holds(v));
                if v.chi_lin > 0 {
                    let ratio = v.chi_cen as f64 / v.chi_lin as f64;
                    if report.max_ratio.as_ref().is_none_or(|(r, _)| ratio > *r) {
                        report.max_ratio = Some((ratio, text.clone()));
                    }
                }
                if !chain_holds(v) {
                    report.violations.push(SweepViolation {
                        line,
                        graph6: text,
                        chi: v.chi,
                        chi_lin: v.chi_lin,
                        chi_cen: v.chi_cen,
                    });
                    if v.chi_cen > 2 * v.chi_lin {
                        report.rows.push(row);
                        report.halted = true;
                        return Ok(report);
                    }
                }
            }
        }
        report.rows.push(row);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(trials: usize) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::new(Regime::Dense, 40, 20.0, trials, Seed(5));
        cfg.classes = 20;
        cfg
    }

    #[test]
    fn zero_trials() {
        assert!(run_dense_experiment(&dense(0)).unwrap().is_empty());
        let sparse = ExperimentConfig::new(Regime::Sparse, 100, 0.5, 0, Seed(1));
        assert!(run_sparse_experiment(&sparse).unwrap().is_empty());
        let sup = ExperimentConfig::new(Regime::Supercritical, 100, 2.0, 0, Seed(1));
        assert!(run_supercritical_probe(&sup).unwrap().is_empty());
    }

    #[test]
    fn config_validation() {
        let mut cfg = dense(1);
        cfg.density = 41.0;
        assert!(run_dense_experiment(&cfg).is_err());
        let cfg = ExperimentConfig::new(Regime::Sparse, 100, 1.5, 1, Seed(1));
        assert!(run_sparse_experiment(&cfg).is_err());
        let cfg = ExperimentConfig::new(Regime::Supercritical, 100, 1.0, 1, Seed(1));
        assert!(run_supercritical_probe(&cfg).is_err());
        assert!(run_sparse_experiment(&dense(1)).is_err());
    }

    #[test]
    fn dense_rows_are_deterministic_and_verified() {
        let mut cfg = dense(8);
        let a = run_dense_experiment(&cfg).unwrap();
        cfg.parallel = false;
        let b = run_dense_experiment(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.success == Some(true) && r.verified == Some(true)));
        assert!(a.iter().enumerate().all(|(i, r)| r.trial == i));
    }

    #[test]
    fn greedy_and_explicit_policies() {
        let mut cfg = dense(3);
        cfg.colouring_policy = ColouringPolicy::Greedy;
        assert_eq!(run_dense_experiment(&cfg).unwrap().len(), 3);
        cfg.colouring_policy = ColouringPolicy::Explicit(Colouring::new((0..40).map(|v| v % 20).collect()));
        assert_eq!(run_dense_experiment(&cfg).unwrap().len(), 3);
        cfg.colouring_policy = ColouringPolicy::Explicit(Colouring::new(vec![0; 3]));
        assert!(run_dense_experiment(&cfg).is_err());
    }

    #[test]
    fn greedy_colouring_is_proper() {
        let g = sample_gnp(50, 0.2, Seed(2)).unwrap();
        let phi = greedy_colouring(&g);
        assert!(crate::chromatic::is_proper(&g, &phi).unwrap());
    }

    #[test]
    fn balanced_colouring_classes() {
        let phi = balanced_colouring(10, 3, Seed(1)).unwrap();
        let sizes: Vec<usize> = phi.classes().values().map(Vec::len).collect();
        assert_eq!(sizes, vec![4, 3, 3]);
    }

    #[test]
    fn sparse_checks_pass() {
        let cfg = ExperimentConfig::new(Regime::Sparse, 2000, 0.8, 4, Seed(9));
        for row in run_sparse_experiment(&cfg).unwrap() {
            assert_eq!(row.checks_passed, Some(true));
            assert!(row.chi_lin.unwrap() >= 1);
        }
    }

    #[test]
    fn sweep_on_a_path() {
        let report = run_conjecture_sweep(encode_graph6(&Graph::path(8)).as_bytes()).unwrap();
        assert_eq!(report.graphs, 1);
        let row = &report.rows[0];
        assert_eq!((row.chi, row.chi_lin, row.chi_cen), (Some(2), Some(4), Some(4)));
        assert_eq!(report.max_ratio.as_ref().unwrap().0, 1.0);
    }

    #[test]
    fn sweep_keeps_going_after_a_bad_line() {
        let report = run_conjecture_sweep("Bw\nnot graph6 !\nA_\n".as_bytes()).unwrap();
        assert_eq!(report.graphs, 2);
        assert_eq!(report.errors, 1);
        assert_eq!(report.rows.len(), 3);
        assert!(report.rows[1].error.is_some());
        let empty = run_conjecture_sweep("".as_bytes()).unwrap();
        assert_eq!(empty, SweepReport::default());
    }
}
