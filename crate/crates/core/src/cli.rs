//! The `lincol` command line.
//!
//! Exit codes: 0 on success, 1 when a verification or certification comes
//! out negative, 2 on usage errors, refused sizes and other failures.
//! Results go to standard output, diagnostics to standard error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::certificate::{
    build_set_pairing, certify_not_linear, check_certificate, BadPathCertificate, CertifyInput, CertifyOptions,
};
use crate::chromatic::{
    chromatic_number, find_path_without_centre, is_centred, is_proper, linear_chromatic_number, tree_depth, Colouring,
};
use crate::experiments::{
    balanced_colouring, connected_graphs, run_conjecture_sweep, run_experiment, write_csv_to, ExperimentConfig, Regime,
};
use crate::graph::{sample_gnp, sample_two_round, RoundSplit};
use crate::graph6::{encode_graph6, parse_graph6};
use crate::{Error, Graph, Seed};

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(name = "lincol", version, about = "Linear and centred colourings of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// A graph given inline or as the first non-blank line of a file (`-` for
/// standard input).
#[derive(Args, Debug, Clone, PartialEq)]
pub struct GraphArg {
    /// Graph in graph6 format.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    pub graph6: Option<String>,
    /// File holding the graph in graph6 format, or `-`.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColouringKind {
    Proper,
    Linear,
    Centred,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    Dense,
    Sparse,
    Supercritical,
    Conjecture,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Self {
        match r {
            RegimeArg::Dense => Regime::Dense,
            RegimeArg::Sparse => Regime::Sparse,
            RegimeArg::Supercritical => Regime::Supercritical,
            RegimeArg::Conjecture => Regime::Conjecture,
        }
    }
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Command {
    /// Sample G(n, p) and print it in graph6 format.
    Gen {
        #[arg(long)]
        n: usize,
        /// Edge probability; exactly one of --p, --omega, --c.
        #[arg(long, required_unless_present_any = ["omega", "c"], conflicts_with_all = ["omega", "c"])]
        p: Option<f64>,
        /// Sets p = omega / n.
        #[arg(long, conflicts_with = "c")]
        omega: Option<f64>,
        /// Sets p = c / n.
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        seed: u64,
    },
    /// Chromatic number.
    Chi(GraphArg),
    /// Linear chromatic number.
    ChiLin(GraphArg),
    /// Centred chromatic number (tree-depth).
    ChiCen(GraphArg),
    /// Check a colouring; prints a witness when the check fails.
    VerifyColouring {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated colour per vertex.
        #[arg(long)]
        colours: String,
        #[arg(long, value_enum, default_value_t = ColouringKind::Linear)]
        kind: ColouringKind,
    },
    /// Certify that a colouring is not linear.
    ///
    /// With --graph6 or --input the graph is used as given and the certificate
    /// is printed. With --n and --omega a two-round sample is drawn and
    /// coloured (balanced over --classes unless --colours is given); the
    /// output is then the graph, the colouring and the certificate, one per
    /// line.
    Certify {
        #[arg(long, conflicts_with_all = ["input", "n"])]
        graph6: Option<String>,
        #[arg(long, conflicts_with = "n")]
        input: Option<PathBuf>,
        #[arg(long, requires = "omega")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        omega: Option<f64>,
        #[arg(long, conflicts_with = "colours", requires = "n")]
        classes: Option<usize>,
        #[arg(long, required_unless_present = "n")]
        colours: Option<String>,
        /// Peeling threshold instead of the default.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        seed: u64,
    },
    /// Re-check a certificate against a graph and colouring.
    VerifyCert {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        colours: String,
        /// The certificate line.
        #[arg(long, required_unless_present = "cert_file", conflicts_with = "cert_file")]
        cert: Option<String>,
        #[arg(long)]
        cert_file: Option<PathBuf>,
    },
    /// Run a seeded experiment and write CSV.
    Experiment {
        #[arg(long, value_enum)]
        regime: RegimeArg,
        #[arg(long)]
        n: usize,
        /// Density for the dense regime (p = omega / n).
        #[arg(long, conflicts_with = "c")]
        omega: Option<f64>,
        /// Density for the sparse and supercritical regimes (p = c / n).
        #[arg(long)]
        c: Option<f64>,
        /// Colour classes for the dense regime; defaults to n / 2.
        #[arg(long)]
        classes: Option<usize>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        k: Option<usize>,
        /// CSV destination; standard output when absent.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Run trials one after another.
        #[arg(long)]
        sequential: bool,
        /// Fill the wall_time_ms column.
        #[arg(long)]
        timing: bool,
    },
    /// Compute chi, chi_lin and chi_cen over a graph6 corpus.
    Sweep {
        /// graph6 file, one graph per line, or `-`.
        #[arg(long, required_unless_present = "connected", conflicts_with = "connected")]
        input: Option<PathBuf>,
        /// Use every connected graph on 1..=N vertices.
        #[arg(long)]
        connected: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn push(out: &mut Vec<String>, flag: &str, value: impl ToString) {
    out.push(format!("--{flag}"));
    out.push(value.to_string());
}

fn push_opt(out: &mut Vec<String>, flag: &str, value: &Option<impl ToString>) {
    if let Some(v) = value {
        push(out, flag, v.to_string());
    }
}

fn push_path(out: &mut Vec<String>, flag: &str, value: &Option<PathBuf>) {
    if let Some(v) = value {
        push(out, flag, v.display());
    }
}

fn push_graph(out: &mut Vec<String>, g: &GraphArg) {
    push_opt(out, "graph6", &g.graph6);
    push_path(out, "input", &g.input);
}

impl Command {
    /// Canonical argument list; parsing it gives back `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self {
            Command::Gen { n, p, omega, c, seed } => {
                out.push("gen".into());
                push(&mut out, "n", n);
                push_opt(&mut out, "p", p);
                push_opt(&mut out, "omega", omega);
                push_opt(&mut out, "c", c);
                push(&mut out, "seed", seed);
            }
            Command::Chi(g) | Command::ChiLin(g) | Command::ChiCen(g) => {
                out.push(self.verb().into());
                push_graph(&mut out, g);
            }
            Command::VerifyColouring { graph, colours, kind } => {
                out.push("verify-colouring".into());
                push_graph(&mut out, graph);
                push(&mut out, "colours", colours);
                push(&mut out, "kind", kind.to_possible_value().unwrap().get_name());
            }
            Command::Certify {
                graph6,
                input,
                n,
                omega,
                classes,
                colours,
                k,
                seed,
            } => {
                out.push("certify".into());
                push_opt(&mut out, "graph6", graph6);
                push_path(&mut out, "input", input);
                push_opt(&mut out, "n", n);
                push_opt(&mut out, "omega", omega);
                push_opt(&mut out, "classes", classes);
                push_opt(&mut out, "colours", colours);
                push_opt(&mut out, "k", k);
                push(&mut out, "seed", seed);
            }
            Command::VerifyCert {
                graph,
                colours,
                cert,
                cert_file,
            } => {
                out.push("verify-cert".into());
                push_graph(&mut out, graph);
                push(&mut out, "colours", colours);
                push_opt(&mut out, "cert", cert);
                push_path(&mut out, "cert-file", cert_file);
            }
            Command::Experiment {
                regime,
                n,
                omega,
                c,
                classes,
                trials,
                seed,
                k,
                output,
                sequential,
                timing,
            } => {
                out.push("experiment".into());
                push(&mut out, "regime", regime.to_possible_value().unwrap().get_name());
                push(&mut out, "n", n);
                push_opt(&mut out, "omega", omega);
                push_opt(&mut out, "c", c);
                push_opt(&mut out, "classes", classes);
                push(&mut out, "trials", trials);
                push(&mut out, "seed", seed);
                push_opt(&mut out, "k", k);
                push_path(&mut out, "output", output);
                if *sequential {
                    out.push("--sequential".into());
                }
                if *timing {
                    out.push("--timing".into());
                }
            }
            Command::Sweep {
                input,
                connected,
                output,
            } => {
                out.push("sweep".into());
                push_path(&mut out, "input", input);
                push_opt(&mut out, "connected", connected);
                push_path(&mut out, "output", output);
            }
        }
        out
    }

    pub fn verb(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Chi(_) => "chi",
            Command::ChiLin(_) => "chi-lin",
            Command::ChiCen(_) => "chi-cen",
            Command::VerifyColouring { .. } => "verify-colouring",
            Command::Certify { .. } => "certify",
            Command::VerifyCert { .. } => "verify-cert",
            Command::Experiment { .. } => "experiment",
            Command::Sweep { .. } => "sweep",
        }
    }
}

/// Parses `argv` without the program name.
pub fn parse_args<I, T>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let full = std::iter::once(OsString::from("lincol")).chain(argv.into_iter().map(Into::into));
    Cli::try_parse_from(full).map(|cli| cli.command)
}

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A check came out negative.
    Negative,
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn open_input(path: &Path) -> crate::Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path).map_err(io_err(path))?)))
    }
}

fn read_first_line(path: &Path) -> crate::Result<String> {
    let mut text = String::new();
    open_input(path)?.read_to_string(&mut text).map_err(io_err(path))?;
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .map(str::to_string)
        .ok_or_else(|| Error::param(format!("{} holds no graph", path.display())))
}

fn load_graph(graph6: &Option<String>, input: &Option<PathBuf>) -> crate::Result<Graph> {
    match (graph6, input) {
        (Some(text), _) => parse_graph6(text),
        (None, Some(path)) => parse_graph6(&read_first_line(path)?),
        (None, None) => Err(Error::param("no graph given; use --graph6 or --input")),
    }
}

fn load_colouring(text: &str, g: &Graph) -> crate::Result<Colouring> {
    let phi: Colouring = text.parse()?;
    if phi.len() != g.n() {
        return Err(Error::param(format!(
            "--colours has {} entries for a graph on {} vertices",
            phi.len(),
            g.n()
        )));
    }
    Ok(phi)
}

fn write_csv_out(
    rows: &[crate::experiments::TrialRow],
    output: &Option<PathBuf>,
    out: &mut dyn Write,
) -> crate::Result<()> {
    match output {
        Some(path) => crate::experiments::write_csv(rows, path),
        None => write_csv_to(rows, out),
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn dispatch(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> crate::Result<Status> {
    let stdout = |e: io::Error| Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    match cmd {
        Command::Gen { n, p, omega, c, seed } => {
            let p = match (p, omega, c) {
                (Some(p), _, _) => *p,
                (_, Some(w), _) => w / *n as f64,
                (_, _, Some(c)) => c / *n as f64,
                _ => return Err(Error::param("one of --p, --omega, --c is required")),
            };
            let g = sample_gnp(*n, p, Seed(*seed))?;
            writeln!(out, "{}", encode_graph6(&g)).map_err(stdout)?;
        }
        Command::Chi(g) | Command::ChiLin(g) | Command::ChiCen(g) => {
            let graph = load_graph(&g.graph6, &g.input)?;
            let value = match cmd {
                Command::Chi(_) => chromatic_number(&graph)?,
                Command::ChiLin(_) => linear_chromatic_number(&graph)?,
                _ => tree_depth(&graph)?,
            };
            writeln!(out, "{value}").map_err(stdout)?;
        }
        Command::VerifyColouring { graph, colours, kind } => {
            let g = load_graph(&graph.graph6, &graph.input)?;
            let phi = load_colouring(colours, &g)?;
            let failure = match kind {
                ColouringKind::Proper => (!is_proper(&g, &phi)?).then(|| {
                    let (u, v) = g
                        .edges()
                        .find(|&(u, v)| phi.colour(u) == phi.colour(v))
                        .expect("an improper colouring has a monochromatic edge");
                    format!("monochromatic edge {u}-{v}")
                }),
                ColouringKind::Linear => {
                    find_path_without_centre(&g, &phi)?.map(|p| format!("path without centre {p}"))
                }
                ColouringKind::Centred => is_centred(&g, &phi)?.map(|s| {
                    let list: Vec<String> = s.iter().map(usize::to_string).collect();
                    format!("connected set without centre {}", list.join(" "))
                }),
            };
            return Ok(match failure {
                None => {
                    writeln!(out, "yes").map_err(stdout)?;
                    Status::Ok
                }
                Some(why) => {
                    writeln!(out, "no: {why}").map_err(stdout)?;
                    Status::Negative
                }
            });
        }
        Command::Certify {
            graph6,
            input,
            n,
            omega,
            classes,
            colours,
            k,
            seed,
        } => {
            let opts = CertifyOptions {
                k_override: *k,
                ..CertifyOptions::with_seed(Seed(*seed))
            };
            let (result, preamble) = match (n, omega) {
                (Some(n), Some(omega)) => {
                    if *omega <= 0.0 || *omega > *n as f64 {
                        return Err(Error::param(format!("--omega must lie in (0, {n}]")));
                    }
                    let sample = sample_two_round(*n, omega / *n as f64, Seed(*seed), RoundSplit::Symmetric)?;
                    let phi = match colours {
                        Some(text) => load_colouring(text, &sample.union)?,
                        None => balanced_colouring(*n, classes.unwrap_or(n / 2).max(1), Seed(*seed).derive(3))?,
                    };
                    let preamble = format!("{}\n{}\n", encode_graph6(&sample.union), phi);
                    (
                        certify_not_linear(CertifyInput::TwoRound(&sample), &phi, &opts),
                        preamble,
                    )
                }
                _ => {
                    let g = load_graph(graph6, input)?;
                    let text = colours
                        .as_deref()
                        .ok_or_else(|| Error::param("--colours is required"))?;
                    let phi = load_colouring(text, &g)?;
                    (certify_not_linear(CertifyInput::Plain(&g), &phi, &opts), String::new())
                }
            };
            write!(out, "{preamble}").map_err(stdout)?;
            return Ok(match result {
                Ok(done) => {
                    writeln!(out, "{}", done.certificate).map_err(stdout)?;
                    Status::Ok
                }
                Err(reason) => {
                    writeln!(out, "{}", reason.tag()).map_err(stdout)?;
                    writeln!(err, "certification failed: {reason}").ok();
                    Status::Negative
                }
            });
        }
        Command::VerifyCert {
            graph,
            colours,
            cert,
            cert_file,
        } => {
            let g = load_graph(&graph.graph6, &graph.input)?;
            let phi = load_colouring(colours, &g)?;
            let line = match (cert, cert_file) {
                (Some(line), _) => line.clone(),
                (None, Some(path)) => read_first_line(path)?,
                (None, None) => return Err(Error::param("no certificate given; use --cert or --cert-file")),
            };
            let cert: BadPathCertificate = line.parse()?;
            let original = build_set_pairing(&phi);
            return Ok(match check_certificate(&g, &phi, &cert, &original) {
                Ok(()) => {
                    writeln!(out, "ok").map_err(stdout)?;
                    Status::Ok
                }
                Err(v) => {
                    writeln!(out, "{v}").map_err(stdout)?;
                    Status::Negative
                }
            });
        }
        Command::Experiment {
            regime,
            n,
            omega,
            c,
            classes,
            trials,
            seed,
            k,
            output,
            sequential,
            timing,
        } => {
            let regime = Regime::from(*regime);
            let density = match regime {
                Regime::Dense => omega.ok_or_else(|| Error::param("--omega is required for the dense regime"))?,
                Regime::Sparse | Regime::Supercritical => {
                    c.ok_or_else(|| Error::param(format!("--c is required for the {regime} regime")))?
                }
                Regime::Conjecture => 1.0,
            };
            let mut cfg = ExperimentConfig::new(regime, *n, density, *trials, Seed(*seed));
            if let Some(classes) = classes {
                cfg.classes = *classes;
            }
            cfg.k_override = *k;
            cfg.parallel = !sequential;
            cfg.record_timing = *timing;
            let rows = run_experiment(&cfg)?;
            write_csv_out(&rows, output, out)?;
        }
        Command::Sweep {
            input,
            connected,
            output,
        } => {
            let report = match (input, connected) {
                (Some(path), _) => run_conjecture_sweep(open_input(path)?)?,
                (None, Some(max_n)) => {
                    let mut lines = String::new();
                    for m in 1..=*max_n {
                        for g in connected_graphs(m)? {
                            lines.push_str(&encode_graph6(&g));
                            lines.push('\n');
                        }
                    }
                    run_conjecture_sweep(lines.as_bytes())?
                }
                (None, None) => return Err(Error::param("no corpus given; use --input or --connected")),
            };
            write_csv_out(&report.rows, output, out)?;
            writeln!(
                err,
                "graphs: {}, errors: {}, violations: {}",
                report.graphs,
                report.errors,
                report.violations.len()
            )
            .ok();
            if let Some((ratio, witness)) = &report.max_ratio {
                writeln!(err, "max chi_cen/chi_lin: {ratio} ({witness})").ok();
            }
            for v in &report.violations {
                writeln!(
                    err,
                    "VIOLATION line {}: {} chi={} chi_lin={} chi_cen={}",
                    v.line, v.graph6, v.chi, v.chi_lin, v.chi_cen
                )
                .ok();
            }
            if report.halted {
                writeln!(err, "sweep halted: chi_cen > 2 chi_lin").ok();
            }
            if !report.violations.is_empty() {
                return Ok(Status::Negative);
            }
        }
    }
    Ok(Status::Ok)
}

/// Parses and runs `argv` (without the program name); returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cmd = match parse_args(argv) {
        Ok(cmd) => cmd,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render();
            if e.use_stderr() {
                write!(err, "{}", text.ansi()).ok();
            } else {
                write!(out, "{}", text.ansi()).ok();
            }
            return code;
        }
    };
    match dispatch(&cmd, out, err) {
        Ok(Status::Ok) => 0,
        Ok(Status::Negative) => 1,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            2
        }
    }
}

/// Entry point of the binary.
pub fn main() -> ExitCode {
    let (stdout, stderr) = (io::stdout(), io::stderr());
    let code = run(std::env::args_os().skip(1), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
