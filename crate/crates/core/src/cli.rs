//! Command-line front end. The binary only forwards to [`run`].
//!
//! Exit codes: 0 when inclusion holds (or the word is a member), 1 when it
//! does not, 2 on usage, parse or internal errors, including disagreement
//! between algorithms in portfolio mode or with the oracle.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::automata::{align, Nfa};
use crate::cfg_inclusion::{cfginc_antichain, cfginc_word, ctx_order, myhill_order};
use crate::error::{Error, Result};
use crate::grammars::{cyk_member, to_cnf, Cfg, CnfGrammar};
use crate::ocn::{fainc_ocn_run, trace_member, Config, Ocn};
use crate::oracle::{oracle_bounded, oracle_nfa_inclusion, Language};
use crate::regular_inclusion::{fainc_antichain, fainc_antichain_dual, fainc_gfp, fainc_word, RunOptions, Verdict};
use crate::regular_orders::{OrderKind, Side};
use crate::symbol::{format_word, word, Word};

/// Summary of one decision run; the JSON output format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub verdict: bool,
    pub witness: Option<String>,
    pub algorithm: String,
    pub order: Option<String>,
    pub iterations: usize,
    pub max_frontier: usize,
    pub elapsed_ms: f64,
    /// Verdict of the reference oracle, when requested. `null` if inconclusive.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Option<bool>>,
    /// Individual runs in portfolio mode.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub runs: Vec<RunReport>,
}

impl RunReport {
    fn new(algorithm: &str, order: Option<&str>, v: &Verdict, elapsed_ms: f64) -> Self {
        RunReport {
            verdict: v.included,
            witness: v.witness.as_deref().map(format_word),
            algorithm: algorithm.to_owned(),
            order: order.map(str::to_owned),
            iterations: v.stats.iterations,
            max_frontier: v.stats.max_frontier,
            elapsed_ms,
            oracle: None,
            runs: Vec::new(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "langinc", version, about = "Language inclusion checks for automata, grammars and one-counter nets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check L(A1) ⊆ L(A2) for two automata.
    Nfa {
        a1: PathBuf,
        a2: PathBuf,
        /// Decision procedure.
        #[arg(long, value_enum, default_value_t = NfaAlgo::Antichain)]
        algo: NfaAlgo,
        /// Quasiorder for the word algorithms.
        #[arg(long, value_enum, default_value_t = NfaOrder::State)]
        order: NfaOrder,
        #[command(flatten)]
        common: Common,
    },
    /// Check L(G) ⊆ L(A) for a grammar and an automaton.
    Cfg {
        grammar: PathBuf,
        automaton: PathBuf,
        #[arg(long, value_enum, default_value_t = CfgAlgo::Antichain)]
        algo: CfgAlgo,
        /// Quasiorder for the word algorithm.
        #[arg(long, value_enum, default_value_t = CfgOrder::Ctx)]
        order: CfgOrder,
        #[command(flatten)]
        common: Common,
    },
    /// Check L(A) ⊆ T(q:n), the traces of a one-counter net from a configuration.
    Ocn {
        automaton: PathBuf,
        net: PathBuf,
        /// Initial configuration `<state>:<counter>`.
        config: String,
        #[command(flatten)]
        common: Common,
    },
    /// Membership of a word in an automaton (.nfa), grammar (.cfg) or net (.ocn).
    Member {
        file: PathBuf,
        /// Letters concatenated (`abc`) or tokens separated by commas (`foo,bar`); `""` is ε.
        word: String,
        /// Configuration for nets.
        #[arg(long)]
        config: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Keep every word of each iterate instead of its minor.
    #[arg(long)]
    no_prune: bool,
    /// Print a counterexample when inclusion fails.
    #[arg(long)]
    witness: bool,
    /// Print iteration statistics.
    #[arg(long)]
    stats: bool,
    /// Cross-check against the brute-force oracle.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run every applicable algorithm in parallel and require agreement.
    #[arg(long)]
    portfolio: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum NfaAlgo {
    Word,
    WordR,
    Antichain,
    AntichainDual,
    Gfp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum NfaOrder {
    State,
    Sim,
    Nerode,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CfgAlgo {
    Word,
    Antichain,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CfgOrder {
    Ctx,
    Myhill,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

impl From<NfaOrder> for OrderKind {
    fn from(o: NfaOrder) -> Self {
        match o {
            NfaOrder::State => OrderKind::State,
            NfaOrder::Sim => OrderKind::Sim,
            NfaOrder::Nerode => OrderKind::Nerode,
        }
    }
}

/// A named decision job over shared inputs.
type Job<'a> = (String, Option<String>, Box<dyn Fn() -> Result<Verdict> + Send + Sync + 'a>);

fn read(path: &Path) -> std::result::Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> Result<T>) -> std::result::Result<T, String> {
    parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn timed(job: &(dyn Fn() -> Result<Verdict> + Send + Sync)) -> Result<(Verdict, f64)> {
    let t = Instant::now();
    let v = job()?;
    Ok((v, t.elapsed().as_secs_f64() * 1e3))
}

/// Runs the jobs (all of them in parallel when `portfolio`, else only the first).
fn execute(jobs: Vec<Job<'_>>, portfolio: bool) -> std::result::Result<RunReport, String> {
    if !portfolio {
        let (name, order, job) = &jobs[0];
        let (v, ms) = timed(job.as_ref()).map_err(|e| e.to_string())?;
        return Ok(RunReport::new(name, order.as_deref(), &v, ms));
    }
    let t = Instant::now();
    let results: Vec<Result<(Verdict, f64)>> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|(_, _, job)| s.spawn(move || timed(job.as_ref()))).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err(Error::Invalid("run panicked".into())))).collect()
    });
    let mut runs = Vec::new();
    for ((name, order, _), r) in jobs.iter().zip(results) {
        let (v, ms) = r.map_err(|e| format!("{name}: {e}"))?;
        runs.push(RunReport::new(name, order.as_deref(), &v, ms));
    }
    let verdict = runs[0].verdict;
    if runs.iter().any(|r| r.verdict != verdict) {
        let dump = serde_json::to_string_pretty(&runs).unwrap_or_default();
        return Err(format!("portfolio disagreement:\n{dump}"));
    }
    let fastest = runs.iter().min_by(|a, b| a.elapsed_ms.total_cmp(&b.elapsed_ms)).unwrap();
    let mut report = fastest.clone();
    report.witness = runs.iter().find_map(|r| r.witness.clone());
    report.algorithm = "portfolio".into();
    report.order = None;
    report.elapsed_ms = t.elapsed().as_secs_f64() * 1e3;
    report.runs = runs;
    Ok(report)
}

fn nfa_jobs<'a>(a1: &'a Nfa, a2: &'a Nfa, algo: NfaAlgo, order: NfaOrder, prune: bool, all: bool) -> Vec<Job<'a>> {
    let mut jobs: Vec<Job<'a>> = Vec::new();
    let word_job = |side: Side, kind: OrderKind| -> Job<'a> {
        let name = if side == Side::Right { "word-r" } else { "word" };
        let f = move || {
            let qo = kind.build(a2, side);
            fainc_word(a1, |w| a2.member(w), &qo, prune)
        };
        (name.into(), Some(kind.to_string()), Box::new(f))
    };
    let push_algo = |jobs: &mut Vec<Job<'a>>, algo: NfaAlgo, kind: OrderKind| match algo {
        NfaAlgo::Word => jobs.push(word_job(Side::Left, kind)),
        NfaAlgo::WordR => jobs.push(word_job(Side::Right, kind)),
        NfaAlgo::Antichain => jobs.push(("antichain".into(), None, Box::new(move || fainc_antichain(a1, a2)))),
        NfaAlgo::AntichainDual => {
            jobs.push(("antichain-dual".into(), None, Box::new(move || fainc_antichain_dual(a1, a2))))
        }
        NfaAlgo::Gfp => jobs.push(("gfp".into(), None, Box::new(move || fainc_gfp(a1, a2)))),
    };
    if !all {
        push_algo(&mut jobs, algo, order.into());
    } else {
        for kind in OrderKind::ALL {
            push_algo(&mut jobs, NfaAlgo::Word, kind);
            push_algo(&mut jobs, NfaAlgo::WordR, kind);
        }
        for a in [NfaAlgo::Antichain, NfaAlgo::AntichainDual, NfaAlgo::Gfp] {
            push_algo(&mut jobs, a, OrderKind::State);
        }
    }
    jobs
}

fn cfg_jobs<'a>(g: &'a CnfGrammar, a: &'a Nfa, algo: CfgAlgo, order: CfgOrder, prune: bool, all: bool) -> Vec<Job<'a>> {
    let word_job = |order: CfgOrder| -> Job<'a> {
        let f = move || match order {
            CfgOrder::Ctx => cfginc_word(g, |w| a.member(w), &ctx_order(a), prune),
            CfgOrder::Myhill => cfginc_word(g, |w| a.member(w), &myhill_order(a), prune),
        };
        let name = match order {
            CfgOrder::Ctx => "ctx",
            CfgOrder::Myhill => "myhill",
        };
        ("word".into(), Some(name.into()), Box::new(f))
    };
    let antichain: Job<'a> = ("antichain".into(), None, Box::new(move || cfginc_antichain(g, a)));
    match (algo, all) {
        (_, true) => vec![word_job(CfgOrder::Ctx), word_job(CfgOrder::Myhill), antichain],
        (CfgAlgo::Word, false) => vec![word_job(order)],
        (CfgAlgo::Antichain, false) => vec![antichain],
    }
}

fn emit(out: &mut dyn Write, report: &RunReport, common: &Common) -> std::io::Result<()> {
    if common.format == Format::Json {
        return writeln!(out, "{}", serde_json::to_string(report).expect("report serializes"));
    }
    writeln!(out, "inclusion: {}", report.verdict)?;
    if common.witness {
        if let Some(w) = &report.witness {
            writeln!(out, "witness: {w}")?;
        }
    }
    if common.stats {
        writeln!(out, "algorithm: {}", report.algorithm)?;
        if let Some(o) = &report.order {
            writeln!(out, "order: {o}")?;
        }
        writeln!(out, "iterations: {}", report.iterations)?;
        writeln!(out, "max_frontier: {}", report.max_frontier)?;
        writeln!(out, "elapsed_ms: {:.3}", report.elapsed_ms)?;
        for r in &report.runs {
            writeln!(
                out,
                "  {} {}: {} ({} iterations)",
                r.algorithm,
                r.order.as_deref().unwrap_or("-"),
                r.verdict,
                r.iterations
            )?;
        }
    }
    if let Some(o) = report.oracle {
        let text = match o {
            Some(b) => b.to_string(),
            None => "inconclusive".into(),
        };
        writeln!(out, "oracle: {text}")?;
    }
    Ok(())
}

/// Compares an exact or bounded oracle verdict with the report.
fn check_oracle(
    report: &mut RunReport,
    exact: Option<bool>,
    bounded: Option<(bool, bool)>,
) -> std::result::Result<(), String> {
    let seen = match (exact, bounded) {
        (Some(b), _) => Some(b),
        (None, Some((b, inconclusive))) => (!inconclusive).then_some(b),
        (None, None) => None,
    };
    report.oracle = Some(seen);
    match seen {
        Some(b) if b != report.verdict => {
            Err(format!("oracle disagrees: oracle says {b}, algorithm says {}", report.verdict))
        }
        _ => Ok(()),
    }
}

/// Deferred oracle: an exact verdict, or a bounded one as `(included, inconclusive)`.
type OracleCheck<'a> = Box<dyn Fn() -> (Option<bool>, Option<(bool, bool)>) + 'a>;

fn decide(cmd: Cmd, out: &mut dyn Write) -> std::result::Result<i32, String> {
    let (mut report, common, oracle): (RunReport, Common, OracleCheck<'_>) = match cmd {
        Cmd::Nfa { a1, a2, algo, order, common } => {
            let (a1, a2) = align(&load(&a1, Nfa::parse)?, &load(&a2, Nfa::parse)?);
            let jobs = nfa_jobs(&a1, &a2, algo, order, !common.no_prune, common.portfolio);
            let report = execute(jobs, common.portfolio)?;
            (report, common, Box::new(move || (Some(oracle_nfa_inclusion(&a1, &a2).0), None)))
        }
        Cmd::Cfg { grammar, automaton, algo, order, common } => {
            let g = to_cnf(&load(&grammar, Cfg::parse)?);
            let a = load(&automaton, Nfa::parse)?.with_alphabet(&g.terminals());
            let report = execute(cfg_jobs(&g, &a, algo, order, !common.no_prune, common.portfolio), common.portfolio)?;
            let cfg = g.to_cfg();
            (
                report,
                common,
                Box::new(move || {
                    let b = oracle_bounded(Language::Cfg(&cfg), |w| a.member(w), 8);
                    (None, Some((b.included, b.inconclusive)))
                }),
            )
        }
        Cmd::Ocn { automaton, net, config, common } => {
            let a = load(&automaton, Nfa::parse)?;
            let o = load(&net, Ocn::parse)?;
            let c: Config = o.config(&config).map_err(|e| e.to_string())?;
            let opts = RunOptions { prune: !common.no_prune, ..Default::default() };
            let job: Job<'_> =
                ("word-r".into(), Some("ocn".into()), Box::new(|| Ok(fainc_ocn_run(&a, &o, c, &opts)?.verdict)));
            let report = execute(vec![job], false)?;
            (
                report,
                common,
                Box::new(move || {
                    let b = oracle_bounded(Language::Nfa(&a), |w| trace_member(&o, c, w), 8);
                    (None, Some((b.included, b.inconclusive)))
                }),
            )
        }
        Cmd::Member { file, word: w, config } => return member(&file, &word(&w), config.as_deref(), out),
    };
    if common.oracle {
        let (exact, bounded) = oracle();
        check_oracle(&mut report, exact, bounded)?;
    }
    emit(out, &report, &common).map_err(|e| e.to_string())?;
    Ok(if report.verdict { 0 } else { 1 })
}

fn member(file: &Path, w: &Word, config: Option<&str>, out: &mut dyn Write) -> std::result::Result<i32, String> {
    let ext = file.extension().and_then(|e| e.to_str()).unwrap_or("");
    let is_member = match ext {
        "nfa" => load(file, Nfa::parse)?.member(w),
        "cfg" => cyk_member(&to_cnf(&load(file, Cfg::parse)?), w),
        "ocn" => {
            let o = load(file, Ocn::parse)?;
            let c = o.config(config.ok_or("nets need --config <state>:<counter>")?).map_err(|e| e.to_string())?;
            trace_member(&o, c, w)
        }
        _ => return Err(format!("{}: expected a .nfa, .cfg or .ocn file", file.display())),
    };
    writeln!(out, "member: {is_member}").map_err(|e| e.to_string())?;
    Ok(if is_member { 0 } else { 1 })
}

/// Runs the command line `args` (including the program name), writing to the
/// given streams, and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match decide(cli.cmd, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}
