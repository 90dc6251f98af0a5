//! `oramsey`: ordered Ramsey search kernels on the command line.
//!
//! Every subcommand prints one JSON report to stdout (keys sorted, stable
//! across runs given the same inputs, seed and budget) and exits with
//! 0 for a definitive result, 2 when a budget ran out before the search
//! space was exhausted, and 1 for usage or input errors.

mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use oramsey_core::bounds::{blowup_construction, check_chain_inequality, eval_bound, BoundFormula};
use oramsey_core::exact::{
    export_cnf, find_avoiding_coloring, ordered_ramsey_number, AvoidanceInstance, RamseyNumber,
};
use oramsey_core::extractors::{
    chain_extract_recursive, erdos_szekeres_extract, pipeline_path_vs_clique, q_ramsey_extract,
    remark_pipeline, sample_clique_pair, ChainThresholds, CliquePairOutcome, PipelineOutcome,
    PipelineParams, QExtractParams, RemarkParams,
};
use oramsey_core::finders::{find_ordered_embedding, SearchBudget, SearchOutcome};
use oramsey_core::tournament::{find_directed_path_power, parse_trn, reduce_tournament};
use oramsey_core::verify;
use oramsey_core::{EdgeColoring, Host, OrderedGraph, Pattern};

use report::{to_value, Report, Verdict};

#[derive(Parser)]
#[command(
    name = "oramsey",
    about = "Ordered Ramsey searches: pattern finders, proof-following extractors, \
             exact small-case engines, bound evaluators and the tournament reduction",
    version
)]
struct Cli {
    /// RNG seed; overrides the RAMSEY_SEED environment variable.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for the parallel block/class searches.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Include wall-clock timing in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search-node budget; exhaustion exits with code 2.
    #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
    budget: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget,
            deterministic: true,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Search for an ordered pattern in a .og graph or .ocg coloring host.
    Find {
        #[arg(long)]
        host: PathBuf,
        /// Color class to search when the host is a coloring.
        #[arg(long)]
        color: Option<usize>,
        /// Pattern: clique:s | mpath:n | ppow:n:t | q:m:t:s.
        #[arg(long)]
        pattern: String,
        /// Return any witness instead of the lexicographically first.
        #[arg(long)]
        any_witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Proof-following extractors.
    #[command(subcommand)]
    Extract(ExtractCommand),
    /// Exhaustive small-case engines.
    #[command(subcommand)]
    Exact(ExactCommand),
    /// Export an avoidance instance as DIMACS CNF.
    Cnf {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        #[arg(long)]
        n: usize,
        /// Write the DIMACS text here (path reported in JSON).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print raw DIMACS instead of a JSON report.
        #[arg(long)]
        raw: bool,
    },
    /// Evaluate a bound formula in exact integer arithmetic.
    Bound {
        /// thm11 | thm12 | thm13 | gjs | remark | lemma33 | lemma32 |
        /// lemma35 | lemma37 | thm41 | chain-inequality
        id: String,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long, default_value_t = 1)]
        eps_num: u32,
        #[arg(long, default_value_t = 1)]
        eps_den: u32,
        /// Report the decimal digit count instead of the full value.
        #[arg(long)]
        digits: bool,
    },
    /// Blow-up construction: blocks inherit base colors.
    Construct {
        /// Base coloring (.ocg).
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        block_size: usize,
        #[arg(long)]
        intra_color: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the raw .ocg text instead of a JSON report.
        #[arg(long)]
        raw: bool,
    },
    /// Tournament reduction and directed path-power search.
    #[command(subcommand)]
    Tournament(TournamentCommand),
    /// Run the acceptance suite (all criteria, or one with --criterion).
    Selftest {
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ExtractCommand {
    /// Red clique or blue monotone path from a 2-coloring.
    Es {
        #[arg(long)]
        host: PathBuf,
        /// Red clique size.
        #[arg(long)]
        s: usize,
        /// Blue monotone path length.
        #[arg(long)]
        n: usize,
    },
    /// Red or blue q-graph by the halving recursion.
    Qgraph {
        #[arg(long)]
        host: PathBuf,
        /// Red q-graph block count.
        #[arg(long)]
        l: usize,
        /// Blue q-graph block count.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 1.0)]
        epsilon: f64,
        /// End-block size; derived from the KST bound when omitted.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = 3)]
        l0: usize,
        /// Override the lambda derived from epsilon.
        #[arg(long)]
        lambda: Option<f64>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Chain of the given length by the recursive strategy.
    Chain {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Target chain length.
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 2)]
        a_min: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Full path-power-versus-clique pipeline.
    Pipeline {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        /// Target path-power length.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        block_size: usize,
        #[arg(long, default_value_t = 2)]
        a_min: usize,
        #[arg(long, default_value_t = 10)]
        retries: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Simplified pipeline over window cliques (no B-blocks).
    Remark {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        /// Part size of each window clique.
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 10)]
        retries: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Randomized clique pair across two vertex sets.
    Cliquepair {
        #[arg(long)]
        host: PathBuf,
        /// First side: "a..b" or "v1,v2,...".
        #[arg(long)]
        v1: String,
        #[arg(long)]
        v2: String,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 2)]
        s: usize,
        #[arg(long, default_value_t = 20)]
        retries: u32,
    },
}

#[derive(Subcommand)]
enum ExactCommand {
    /// Smallest N forcing a red or blue copy, scanned up to --n-max.
    RamseyNumber {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Search one avoiding coloring of K_N.
    Avoid {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum TournamentCommand {
    /// Encode an r-colored tournament as a 2r-colored ordered coloring.
    Reduce {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        raw: bool,
    },
    /// Longest monochromatic directed path power over all classes.
    Find {
        #[arg(long)]
        host: PathBuf,
        /// Path power.
        #[arg(long)]
        t: usize,
        /// Stop at the first class achieving this length.
        #[arg(long, default_value_t = usize::MAX)]
        target: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed.unwrap_or_else(|| {
        std::env::var("RAMSEY_SEED")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(0)
    });
    if cli.jobs > 0 {
        // A global pool; jobs = 1 keeps the parallel contracts sequential.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match dispatch(cli.command, seed, cli.timing) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("oramsey: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

enum HostFile {
    Graph(OrderedGraph),
    Coloring(EdgeColoring),
}

fn load_host(path: &PathBuf) -> Result<(HostFile, String)> {
    let text = read_input(path)?;
    let keyword = text.split_whitespace().next().unwrap_or("");
    let host = match keyword {
        "og" => HostFile::Graph(OrderedGraph::parse_og(&text)?),
        "ocg" => HostFile::Coloring(EdgeColoring::parse_ocg(&text)?),
        other => bail!(
            "{}: unknown host keyword `{other}` (expected og or ocg)",
            path.display()
        ),
    };
    Ok((host, text))
}

fn load_graph(path: &PathBuf) -> Result<(OrderedGraph, String)> {
    match load_host(path)? {
        (HostFile::Graph(g), text) => Ok((g, text)),
        (HostFile::Coloring(_), _) => bail!("{}: expected a .og graph host", path.display()),
    }
}

fn load_coloring(path: &PathBuf) -> Result<(EdgeColoring, String)> {
    match load_host(path)? {
        (HostFile::Coloring(c), text) => Ok((c, text)),
        (HostFile::Graph(_), _) => bail!("{}: expected a .ocg coloring host", path.display()),
    }
}

/// Parses "a..b" (half-open) or a comma-separated vertex list.
fn parse_vertex_set(spec: &str) -> Result<Vec<usize>> {
    if let Some((a, b)) = spec.split_once("..") {
        let a: usize = a.trim().parse().context("range start")?;
        let b: usize = b.trim().parse().context("range end")?;
        if a >= b {
            bail!("empty vertex range `{spec}`");
        }
        return Ok((a..b).collect());
    }
    let mut out: Vec<usize> = spec
        .split(',')
        .map(|f| f.trim().parse().with_context(|| format!("vertex `{f}`")))
        .collect::<Result<_>>()?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn dispatch(command: Command, seed: u64, timing: bool) -> Result<i32> {
    match command {
        Command::Find {
            host,
            color,
            pattern,
            any_witness,
            budget,
        } => {
            let pattern = Pattern::parse(&pattern)?;
            let (hostfile, text) = load_host(&host)?;
            let mut rep = Report::new("find", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            rep.set("pattern", json!(pattern.to_string()));
            let budget = SearchBudget {
                max_nodes: budget.budget,
                deterministic: !any_witness,
            };
            let run = match &hostfile {
                HostFile::Graph(g) => {
                    find_ordered_embedding(Host::Graph(g), color, &pattern, &budget)?
                }
                HostFile::Coloring(c) => {
                    find_ordered_embedding(Host::Coloring(c), color, &pattern, &budget)?
                }
            };
            rep.stats(&run.stats);
            let verdict = match run.outcome {
                SearchOutcome::Found(w) => {
                    rep.outcome("witness");
                    rep.set("witness", to_value(&w));
                    Verdict::Definitive
                }
                SearchOutcome::Absent => {
                    rep.outcome("none");
                    Verdict::Definitive
                }
                SearchOutcome::Indeterminate => {
                    rep.outcome("indeterminate");
                    Verdict::Indeterminate
                }
            };
            Ok(rep.finish(verdict))
        }
        Command::Extract(cmd) => extract(cmd, seed, timing),
        Command::Exact(cmd) => exact(cmd, seed, timing),
        Command::Cnf {
            red,
            blue,
            n,
            out,
            raw,
        } => {
            let inst = AvoidanceInstance::new(n, Pattern::parse(&red)?, Pattern::parse(&blue)?)?;
            let cnf = export_cnf(&inst)?;
            let dimacs = cnf.to_dimacs();
            if raw {
                print!("{dimacs}");
                return Ok(0);
            }
            let mut rep = Report::new("cnf", seed, timing);
            rep.set("n_vars", json!(cnf.n_vars));
            rep.set("n_clauses", json!(cnf.clauses.len()));
            if let Some(path) = out {
                fs::write(&path, &dimacs)
                    .with_context(|| format!("writing {}", path.display()))?;
                rep.set("out", json!(path.display().to_string()));
            } else {
                rep.set("dimacs", json!(dimacs));
            }
            rep.outcome("witness");
            Ok(rep.finish(Verdict::Definitive))
        }
        Command::Bound {
            id,
            s,
            t,
            n,
            l,
            c,
            d,
            r,
            eps_num,
            eps_den,
            digits,
        } => {
            let mut rep = Report::new("bound", seed, timing);
            rep.set("id", json!(id));
            if id == "chain-inequality" {
                let result =
                    check_chain_inequality(need(s, "--s")?, need(t, "--t")?, need(l, "--l")?)?;
                rep.outcome("value");
                rep.set("holds", json!(result.holds));
                rep.set("lhs", json!(result.lhs.to_string()));
                rep.set("rhs", json!(result.rhs.to_string()));
                return Ok(rep.finish(Verdict::Definitive));
            }
            let formula = match id.as_str() {
                "thm11" => BoundFormula::Thm11 {
                    c: need(c, "--c")?,
                    eps_num,
                    eps_den,
                    n: need(n, "--n")?,
                },
                "thm12" => BoundFormula::Thm12 {
                    c: need(c, "--c")? as u32,
                    t: need(t, "--t")? as u32,
                    n: need(n, "--n")?,
                },
                "thm13" | "thm13_internal" => BoundFormula::Thm13Internal {
                    s: need(s, "--s")?,
                    t: need(t, "--t")?,
                    n: need(n, "--n")?,
                },
                "gjs" | "gjs_prior" => BoundFormula::GjsPrior {
                    s: need(s, "--s")?,
                    t: need(t, "--t")?,
                    n: need(n, "--n")?,
                },
                "remark" => BoundFormula::Remark {
                    s: need(s, "--s")?,
                    t: need(t, "--t")?,
                    n: need(n, "--n")?,
                },
                "lemma33" | "lemma33_threshold" => BoundFormula::Lemma33Threshold {
                    s: need(s, "--s")?,
                    t: need(t, "--t")?,
                },
                "lemma32" | "lemma32_threshold" => BoundFormula::Lemma32Threshold {
                    s: need(s, "--s")?,
                    t: need(t, "--t")?,
                },
                "lemma35" | "lemma35_threshold" => BoundFormula::Lemma35Threshold {
                    s: need(s, "--s")?,
                    t: need(t, "--t")?,
                },
                "lemma37" | "lemma37_threshold" => BoundFormula::Lemma37Threshold {
                    s: need(s, "--s")?,
                    t: need(t, "--t")?,
                },
                "thm41" => BoundFormula::Thm41 {
                    d: need(d, "--d")?,
                    c: need(c, "--c")? as u32,
                    r: need(r, "--r")?,
                    n: need(n, "--n")?,
                },
                other => bail!("unknown bound id `{other}`"),
            };
            let value = eval_bound(&formula)?;
            rep.outcome("value");
            rep.set("exact", json!(value.exact));
            if let Some(note) = &value.note {
                rep.set("note", json!(note));
            }
            if digits {
                rep.set("digits", json!(value.value.to_string().len()));
            } else {
                rep.set("value", json!(value.value.to_string()));
            }
            Ok(rep.finish(Verdict::Definitive))
        }
        Command::Construct {
            base,
            block_size,
            intra_color,
            out,
            raw,
        } => {
            let (coloring, text) = load_coloring(&base)?;
            let blown = blowup_construction(&coloring, block_size, intra_color)?;
            let ocg = blown.to_ocg_string();
            if raw {
                print!("{ocg}");
                return Ok(0);
            }
            let mut rep = Report::new("construct", seed, timing);
            rep.input("base", &base.display().to_string(), &text);
            rep.set("n_vertices", json!(blown.n_vertices()));
            if let Some(path) = out {
                fs::write(&path, &ocg).with_context(|| format!("writing {}", path.display()))?;
                rep.set("out", json!(path.display().to_string()));
            } else {
                rep.set("coloring", json!(ocg));
            }
            rep.outcome("witness");
            Ok(rep.finish(Verdict::Definitive))
        }
        Command::Tournament(cmd) => tournament(cmd, seed, timing),
        Command::Selftest { criterion } => {
            let outcomes = match criterion {
                Some(id) => vec![verify::run(id).ok_or_else(|| anyhow!("no criterion {id}"))?],
                None => verify::run_all(),
            };
            for o in &outcomes {
                eprintln!("{}", o.line());
            }
            let mut rep = Report::new("selftest", seed, timing);
            let all_pass = outcomes.iter().all(|o| o.pass);
            rep.set(
                "criteria",
                json!(outcomes
                    .iter()
                    .map(|o| json!({
                        "id": o.id,
                        "name": o.name,
                        "pass": o.pass,
                        "detail": o.detail,
                    }))
                    .collect::<Vec<_>>()),
            );
            rep.set("passed", json!(outcomes.iter().filter(|o| o.pass).count()));
            rep.set("failed", json!(outcomes.iter().filter(|o| !o.pass).count()));
            rep.outcome(if all_pass { "value" } else { "failure" });
            let code = rep.finish(Verdict::Definitive);
            Ok(if all_pass { code } else { 1 })
        }
    }
}

fn need<T>(opt: Option<T>, flag: &str) -> Result<T> {
    opt.ok_or_else(|| anyhow!("missing required parameter {flag}"))
}

fn extract(cmd: ExtractCommand, seed: u64, timing: bool) -> Result<i32> {
    match cmd {
        ExtractCommand::Es { host, s, n } => {
            let (c, text) = load_coloring(&host)?;
            let mut rep = Report::new("extract es", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            match erdos_szekeres_extract(&c, s, n) {
                Ok(w) => {
                    rep.outcome("witness");
                    rep.set("witness", to_value(&w));
                    Ok(rep.finish(Verdict::Definitive))
                }
                Err(e) => {
                    rep.outcome("failure");
                    rep.set("failure", json!(e.to_string()));
                    Ok(rep.finish(Verdict::Definitive))
                }
            }
        }
        ExtractCommand::Qgraph {
            host,
            l,
            n,
            t,
            epsilon,
            s,
            l0,
            lambda,
            budget,
        } => {
            let (c, text) = load_coloring(&host)?;
            let lam =
                lambda.unwrap_or_else(|| oramsey_core::extractors::lambda_from_epsilon(epsilon));
            let s =
                s.unwrap_or_else(|| oramsey_core::bounds::kst_min_part_size(t, lam).max(t + 1));
            let params = QExtractParams {
                epsilon,
                s,
                l0,
                lambda: lam,
            };
            let mut rep = Report::new("extract qgraph", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            rep.set("params", to_value(&params));
            match q_ramsey_extract(&c, l, n, t, &params, &budget.budget()) {
                Ok(w) => {
                    rep.outcome("witness");
                    rep.set("witness", to_value(&w));
                    Ok(rep.finish(Verdict::Definitive))
                }
                Err(e) => {
                    let indeterminate = matches!(
                        e,
                        oramsey_core::extractors::QExtractFailure::Indeterminate { .. }
                    );
                    rep.outcome(if indeterminate {
                        "indeterminate"
                    } else {
                        "failure"
                    });
                    rep.set("failure", to_value(&e));
                    Ok(rep.finish(if indeterminate {
                        Verdict::Indeterminate
                    } else {
                        Verdict::Definitive
                    }))
                }
            }
        }
        ExtractCommand::Chain {
            host,
            s,
            t,
            l,
            a_min,
            budget,
        } => {
            let (g, text) = load_graph(&host)?;
            let thresholds = ChainThresholds {
                a_min,
                budget: budget.budget(),
            };
            let mut rep = Report::new("extract chain", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            match chain_extract_recursive(&g, s, t, l, &thresholds) {
                Ok(chain) => {
                    rep.outcome("witness");
                    rep.set("chain", to_value(&chain));
                    rep.set("length", json!(chain.len()));
                    Ok(rep.finish(Verdict::Definitive))
                }
                Err(e) => {
                    rep.outcome("failure");
                    rep.set("failure", to_value(&e));
                    Ok(rep.finish(Verdict::Definitive))
                }
            }
        }
        ExtractCommand::Pipeline {
            host,
            s,
            t,
            n,
            block_size,
            a_min,
            retries,
            budget,
        } => {
            let (g, text) = load_graph(&host)?;
            let params = PipelineParams {
                s,
                t,
                n,
                block_size,
                a_min,
                budget: budget.budget(),
                seed,
                retries,
            };
            let mut rep = Report::new("extract pipeline", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            pipeline_report(rep, pipeline_path_vs_clique(&g, &params))
        }
        ExtractCommand::Remark {
            host,
            s,
            t,
            n,
            r,
            retries,
            budget,
        } => {
            let (g, text) = load_graph(&host)?;
            let params = RemarkParams {
                s,
                t,
                n,
                r,
                budget: budget.budget(),
                seed,
                retries,
            };
            let mut rep = Report::new("extract remark", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            pipeline_report(rep, remark_pipeline(&g, &params))
        }
        ExtractCommand::Cliquepair {
            host,
            v1,
            v2,
            t,
            s,
            retries,
        } => {
            let (g, text) = load_graph(&host)?;
            let v1 = parse_vertex_set(&v1)?;
            let v2 = parse_vertex_set(&v2)?;
            if v1.iter().any(|v| v2.contains(v)) {
                bail!("--v1 and --v2 must be disjoint");
            }
            let mut rep = Report::new("extract cliquepair", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            match sample_clique_pair(&g, &v1, &v2, t, s, seed, retries) {
                CliquePairOutcome::Found(pair) => {
                    rep.outcome("witness");
                    rep.set("pair", to_value(&pair));
                    Ok(rep.finish(Verdict::Definitive))
                }
                CliquePairOutcome::AbsentCertified { sampler_attempts } => {
                    rep.outcome("none");
                    rep.set("sampler_attempts", json!(sampler_attempts));
                    Ok(rep.finish(Verdict::Definitive))
                }
            }
        }
    }
}

fn pipeline_report(
    mut rep: Report,
    result: std::result::Result<PipelineOutcome, oramsey_core::extractors::PipelineFailure>,
) -> Result<i32> {
    use oramsey_core::extractors::PipelineFailure;
    match result {
        Ok(PipelineOutcome::PathPower(w)) => {
            rep.outcome("witness");
            rep.set("result_kind", json!("path_power"));
            rep.set("witness", to_value(&w));
            Ok(rep.finish(Verdict::Definitive))
        }
        Ok(PipelineOutcome::IndependentSet(w)) => {
            rep.outcome("witness");
            rep.set("result_kind", json!("independent_set"));
            rep.set("witness", to_value(&w));
            Ok(rep.finish(Verdict::Definitive))
        }
        Ok(PipelineOutcome::Contradiction(cert)) => {
            rep.outcome("certificate");
            rep.set("certificate", to_value(&cert));
            Ok(rep.finish(Verdict::Definitive))
        }
        Err(e) => {
            let indeterminate = matches!(
                &e,
                PipelineFailure::ChainSearch {
                    indeterminate: true,
                    ..
                } | PipelineFailure::WindowClique {
                    indeterminate: true,
                    ..
                }
            );
            rep.outcome(if indeterminate {
                "indeterminate"
            } else {
                "failure"
            });
            rep.set("failure", to_value(&e));
            Ok(rep.finish(if indeterminate {
                Verdict::Indeterminate
            } else {
                Verdict::Definitive
            }))
        }
    }
}

fn exact(cmd: ExactCommand, seed: u64, timing: bool) -> Result<i32> {
    match cmd {
        ExactCommand::RamseyNumber {
            red,
            blue,
            n_max,
            budget,
        } => {
            let red = Pattern::parse(&red)?;
            let blue = Pattern::parse(&blue)?;
            let mut rep = Report::new("exact ramsey-number", seed, timing);
            rep.set("red", json!(red.to_string()));
            rep.set("blue", json!(blue.to_string()));
            match ordered_ramsey_number(&red, &blue, n_max, &budget.budget())? {
                RamseyNumber::Exact { value, certificate } => {
                    rep.outcome("value");
                    rep.set("value", json!(value));
                    rep.set("value_kind", json!("exact"));
                    rep.set("certificate", json!(certificate.to_ocg_string()));
                    Ok(rep.finish(Verdict::Definitive))
                }
                RamseyNumber::AtLeast { bound, witness } => {
                    rep.outcome("value");
                    rep.set("value", json!(bound));
                    rep.set("value_kind", json!("at_least"));
                    rep.set("witness", json!(witness.to_ocg_string()));
                    Ok(rep.finish(Verdict::Definitive))
                }
                RamseyNumber::Indeterminate { at } => {
                    rep.outcome("indeterminate");
                    rep.set("undecided_at", json!(at));
                    Ok(rep.finish(Verdict::Indeterminate))
                }
            }
        }
        ExactCommand::Avoid {
            red,
            blue,
            n,
            budget,
        } => {
            let inst = AvoidanceInstance::new(n, Pattern::parse(&red)?, Pattern::parse(&blue)?)?;
            let mut rep = Report::new("exact avoid", seed, timing);
            rep.set("red", json!(inst.red.to_string()));
            rep.set("blue", json!(inst.blue.to_string()));
            rep.set("n", json!(n));
            let run = find_avoiding_coloring(&inst, &budget.budget());
            rep.stats(&run.stats);
            match run.outcome {
                SearchOutcome::Found(c) => {
                    rep.outcome("witness");
                    rep.set("coloring", json!(c.to_ocg_string()));
                    Ok(rep.finish(Verdict::Definitive))
                }
                SearchOutcome::Absent => {
                    rep.outcome("none");
                    Ok(rep.finish(Verdict::Definitive))
                }
                SearchOutcome::Indeterminate => {
                    rep.outcome("indeterminate");
                    Ok(rep.finish(Verdict::Indeterminate))
                }
            }
        }
    }
}

fn tournament(cmd: TournamentCommand, seed: u64, timing: bool) -> Result<i32> {
    match cmd {
        TournamentCommand::Reduce { host, out, raw } => {
            let text = read_input(&host)?;
            let (t, chi) = parse_trn(&text)?;
            let reduced = reduce_tournament(&t, &chi)?;
            let ocg = reduced.to_ocg_string();
            if raw {
                print!("{ocg}");
                return Ok(0);
            }
            let mut rep = Report::new("tournament reduce", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            rep.set("n_colors", json!(reduced.n_colors()));
            if let Some(path) = out {
                fs::write(&path, &ocg).with_context(|| format!("writing {}", path.display()))?;
                rep.set("out", json!(path.display().to_string()));
            } else {
                rep.set("coloring", json!(ocg));
            }
            rep.outcome("witness");
            Ok(rep.finish(Verdict::Definitive))
        }
        TournamentCommand::Find { host, t, target } => {
            let text = read_input(&host)?;
            let (tour, chi) = parse_trn(&text)?;
            let mut rep = Report::new("tournament find", seed, timing);
            rep.input("host", &host.display().to_string(), &text);
            let result = find_directed_path_power(&tour, &chi, t, target)?;
            rep.set("achieved", json!(result.achieved));
            rep.set("class", json!(result.class));
            rep.set("class_lengths", json!(result.class_lengths));
            match &result.witness {
                Some(w) => {
                    rep.outcome("witness");
                    rep.set("witness", to_value(w));
                }
                None => rep.outcome("none"),
            }
            Ok(rep.finish(Verdict::Definitive))
        }
    }
}
