//! Command-line front end: compute t_k values and profiles, run verification
//! campaigns and sharpness suites, replay the structural claims on maximum
//! trees, and generate graphs in graph6 form.
//!
//! Exit status: 0 on success with zero violations, 1 when any theorem
//! violation or claim failure is found, 2 on usage or input errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kended::enumerate::{enumerate_labeled_connected_with_limit, random_connected};
use kended::harness::{
    all_theorems, sharpness_suite, verify_corpus, CampaignParams, TheoremId, VerificationReport,
};
use kended::solver::TREE_ENUM_GUARD;
use kended::transforms::{proof_replay_with_limit, ReplayReport};
use kended::{build_family, parse_graph6, t_k_exact, t_profile, write_graph6, Family, Graph};

#[derive(Parser)]
#[command(
    name = "kended",
    version,
    about = "k-ended tree solvers and theorem verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute t_k, the order of a largest k-ended tree.
    Tk {
        #[command(flatten)]
        source: SourceArgs,
        /// Number of allowed leaves (k = 1 means circumference).
        #[arg(long)]
        k: usize,
    },
    /// Compute the profile [t_1, ..., t_kmax].
    Profile {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        kmax: usize,
    },
    /// Evaluate theorem predicates over a corpus and report violations.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 3)]
        lmax: usize,
        /// Comma-separated theorem ids (prop1, prop2, thm1..thm3, cor1..cor20).
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        /// Worker threads; the report is identical for any value.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the extremal families for exact sharpness equalities.
    Sharpness {
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 3)]
        lmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Replay the maximum-tree claims (leaf count, leaf independence,
    /// tailing orders) for a (k, lambda) binding.
    Replay {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit graphs as graph6 lines.
    Gen {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Graph input. Precedence when several are given:
/// --graph6 > --corpus > --family > --enumerate.
#[derive(Args)]
struct SourceArgs {
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    /// Newline-delimited graph6 corpus file.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Family name: g1, g2, g3, krr, complete, complete-bipartite, path,
    /// cycle, star, random.
    #[arg(long)]
    family: Option<String>,
    /// Family parameter k (g1, g2, g3).
    #[arg(long)]
    fk: Option<usize>,
    /// Family parameter lambda (g1, g2).
    #[arg(long)]
    flambda: Option<usize>,
    /// Family order parameter (complete, path, cycle, star, random).
    #[arg(long)]
    fq: Option<usize>,
    /// Bipartite side sizes (complete-bipartite, krr).
    #[arg(long)]
    fr: Option<usize>,
    #[arg(long)]
    fs: Option<usize>,
    /// Edge probability for --family random.
    #[arg(long)]
    fp: Option<f64>,
    /// Seed for --family random.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// All labeled connected graphs on this many vertices.
    #[arg(long)]
    enumerate: Option<usize>,
}

struct CliError(String);

impl From<kended::Error> for CliError {
    fn from(e: kended::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::fmt::Error> for CliError {
    fn from(e: std::fmt::Error) -> Self {
        CliError(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

impl SourceArgs {
    fn load(&self, enumerate_limit: usize) -> CliResult<(Vec<Graph>, String)> {
        if let Some(s) = &self.graph6 {
            let g = parse_graph6(s.as_bytes())?;
            return Ok((vec![g], format!("graph6 {s}")));
        }
        if let Some(path) = &self.corpus {
            let data =
                std::fs::read(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
            let graphs = kended::graph6::parse_graph6_lines(&data)
                .map_err(|(line, e)| CliError(format!("{}:{line}: {e}", path.display())))?;
            return Ok((graphs, format!("corpus {}", path.display())));
        }
        if let Some(name) = &self.family {
            let g = self.build_named_family(name)?;
            return Ok((vec![g], format!("family {name}")));
        }
        if let Some(n) = self.enumerate {
            let graphs: Vec<Graph> =
                enumerate_labeled_connected_with_limit(n, enumerate_limit)?.collect();
            return Ok((
                graphs,
                format!("all labeled connected graphs on {n} vertices"),
            ));
        }
        Err(CliError(
            "no graph source: pass --graph6, --corpus, --family or --enumerate".into(),
        ))
    }

    fn build_named_family(&self, name: &str) -> CliResult<Graph> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| CliError(format!("--family {name} requires {what}")))
        };
        let spec = match name {
            "g1" => Family::G1 {
                k: need(self.fk, "--fk")?,
                lambda: need(self.flambda, "--flambda")?,
            },
            "g2" => Family::G2 {
                k: need(self.fk, "--fk")?,
                lambda: need(self.flambda, "--flambda")?,
            },
            "g3" => Family::G3 {
                k: need(self.fk, "--fk")?,
            },
            "krr" => Family::Krr(need(self.fr, "--fr")?),
            "complete" => Family::Complete(need(self.fq, "--fq")?),
            "complete-bipartite" => {
                Family::CompleteBipartite(need(self.fr, "--fr")?, need(self.fs, "--fs")?)
            }
            "path" => Family::Path(need(self.fq, "--fq")?),
            "cycle" => Family::Cycle(need(self.fq, "--fq")?),
            "star" => Family::Star(need(self.fq, "--fq")?),
            "random" => {
                let n = need(self.fq, "--fq")?;
                let p = self
                    .fp
                    .ok_or_else(|| CliError("--family random requires --fp".into()))?;
                return Ok(random_connected(n, p, self.seed)?);
            }
            other => return Err(CliError(format!("unknown family '{other}'"))),
        };
        Ok(build_family(&spec)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn max_n_guard() -> usize {
    std::env::var("KENDED_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(TREE_ENUM_GUARD)
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Tk { source, k } => {
            let (graphs, _) = source.load(max_n_guard())?;
            let mut out = String::new();
            for g in &graphs {
                let r = t_k_exact(g, k)?;
                if graphs.len() == 1 {
                    writeln!(out, "{}", r.order)?;
                } else {
                    writeln!(out, "{}\t{}", write_graph6(g)?, r.order)?;
                }
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Profile { source, kmax } => {
            let (graphs, _) = source.load(max_n_guard())?;
            let mut out = String::new();
            for g in &graphs {
                let orders: Vec<usize> = t_profile(g, kmax)?.iter().map(|r| r.order).collect();
                if graphs.len() == 1 {
                    writeln!(out, "{orders:?}")?;
                } else {
                    writeln!(out, "{}\t{orders:?}", write_graph6(g)?)?;
                }
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            source,
            kmax,
            lmax,
            theorems,
            jobs,
            format,
            output,
        } => {
            let guard = max_n_guard();
            let (graphs, desc) = source.load(guard)?;
            let mut params = CampaignParams::new(kmax, lmax);
            params.jobs = jobs.max(1);
            params.max_tree_enum = guard;
            if !theorems.is_empty() {
                params.theorems = parse_theorem_set(&theorems)?;
            }
            let report = verify_corpus(&graphs, &desc, &params)?;
            emit(&render_report(&report, format), output.as_deref())?;
            Ok(exit_for(&report))
        }
        Command::Sharpness {
            kmax,
            lmax,
            format,
            output,
        } => {
            let report = sharpness_suite(1..=kmax, 1..=lmax)?;
            emit(&render_report(&report, format), output.as_deref())?;
            Ok(exit_for(&report))
        }
        Command::Replay {
            source,
            k,
            lambda,
            format,
        } => {
            let (graphs, _) = source.load(max_n_guard())?;
            let mut failed = false;
            let mut out = String::new();
            for g in &graphs {
                let report = proof_replay_with_limit(g, k, lambda, max_n_guard())?;
                failed |= !report.failures.is_empty();
                render_replay(&mut out, g, &report, format)?;
            }
            print!("{out}");
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Gen { source, output } => {
            let (graphs, _) = source.load(max_n_guard())?;
            let mut out = String::new();
            for g in &graphs {
                writeln!(out, "{}", write_graph6(g)?)?;
            }
            emit(&out, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_theorem_set(items: &[String]) -> CliResult<BTreeSet<TheoremId>> {
    let mut set = BTreeSet::new();
    for item in items {
        let item = item.trim();
        if item == "all" {
            return Ok(all_theorems());
        }
        set.insert(item.parse::<TheoremId>()?);
    }
    Ok(set)
}

fn exit_for(report: &VerificationReport) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(text: &str, output: Option<&std::path::Path>) -> CliResult<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Renders a report. JSON uses the stable field order
/// {corpus, instances, violations, sharpness, elapsed_ms}; the text form
/// carries the same data plus run statistics.
fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "corpus:      {}", report.corpus);
            let _ = writeln!(
                s,
                "graphs:      {} checked, {} skipped (disconnected)",
                report.stats.graphs_checked, report.stats.skipped_disconnected
            );
            let _ = writeln!(
                s,
                "instances:   {} evaluated, {} non-vacuous",
                report.instances, report.stats.non_vacuous
            );
            let _ = writeln!(
                s,
                "violations:  {}{}",
                report.stats.violations_total,
                if report.stats.violations_total as usize > report.violations.len() {
                    format!(" ({} recorded)", report.violations.len())
                } else {
                    String::new()
                }
            );
            for v in &report.violations {
                let _ = writeln!(
                    s,
                    "  {} {} k={} lambda={:?} m={:?}: t_k={} t_k1={} sigma_m={} n={}",
                    v.graph6,
                    v.theorem,
                    v.k,
                    v.lambda,
                    v.m,
                    v.t_k,
                    v.t_k1,
                    v.sigma_m.map_or("-".to_string(), |s| s.to_string()),
                    v.n
                );
            }
            let confirmed = report.sharpness.iter().filter(|e| e.holds).count();
            let _ = writeln!(
                s,
                "sharpness:   {} confirmed, {} failed",
                confirmed,
                report.sharpness.len() - confirmed
            );
            for e in report.sharpness.iter().filter(|e| !e.holds) {
                let _ = writeln!(
                    s,
                    "  FAILED {} k={} lambda={} m={:?}: {}",
                    e.family, e.k, e.lambda, e.m, e.detail
                );
            }
            let _ = writeln!(s, "elapsed_ms:  {}", report.elapsed_ms);
            s
        }
    }
}

fn render_replay(
    out: &mut String,
    g: &Graph,
    report: &ReplayReport,
    format: Format,
) -> CliResult<()> {
    let g6 = write_graph6(g)?;
    match format {
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::json!({
                    "graph6": g6,
                    "k": report.k,
                    "lambda": report.lambda,
                    "t_k": report.t_k,
                    "t_k1": report.t_k1,
                    "precondition_held": report.precondition_held,
                    "trees_checked": report.trees_checked,
                    "claim1_ok": report.claim1_ok,
                    "claim2_ok": report.claim2_ok,
                    "claim3_ok": report.claim3_ok,
                    "failures": report.failures.len(),
                })
            )?;
        }
        Format::Text => {
            if !report.precondition_held {
                writeln!(
                    out,
                    "{g6}: precondition not held (t_{} = {} > t_{} - lambda = {})",
                    report.k,
                    report.t_k,
                    report.k + 1,
                    report.t_k1 as i64 - report.lambda as i64
                )?;
            } else {
                writeln!(
                    out,
                    "{g6}: {} maximum {}-ended trees checked, claims 1-3 {}",
                    report.trees_checked,
                    report.k + 1,
                    if report.failures.is_empty() {
                        "ok"
                    } else {
                        "FAILED"
                    }
                )?;
                for f in &report.failures {
                    writeln!(out, "  claim {}: {} [{:?}]", f.claim, f.detail, f.tree)?;
                }
            }
        }
    }
    Ok(())
}
