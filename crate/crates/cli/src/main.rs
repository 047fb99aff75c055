//! `netdiag`: build topologies, compute extra connectivity and diagnosability, and emit verification reports.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use netdiag_core::diagnosis::{conditional_diagnosability_exact, tc_upper_witness};
use netdiag_core::extra::{kappa_h, min_neighbor_3subgraph, KappaStatus};
use netdiag_core::topology::{build, Family, Topology, TopologySpec};
use netdiag_core::verify::formula::{formula_table, Params, Quantity};
use netdiag_core::verify::{
    check_common_neighbor_lemma, check_component_lemma, check_sufficient_conditions, reconcile, Mode, Subject,
    VerificationReport,
};
use netdiag_core::{Budget, Error, Graph};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "netdiag",
    version,
    about = "Interconnection-network extra connectivity and conditional diagnosability"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Exit 1 on any failed check, 3 on a budget-degraded result.
    #[arg(long, global = true)]
    strict: bool,
    /// Largest graph a constructor will build
    #[arg(long, global = true)]
    budget_order: Option<usize>,
    /// Largest subset size for brute-force cut search
    #[arg(long, global = true)]
    budget_subset: Option<usize>,
    /// Ceiling on max-flow calls in the kappa engine
    #[arg(long, global = true)]
    budget_flows: Option<u64>,
    /// Largest number of subsets an exhaustive check may visit
    #[arg(long, global = true)]
    budget_enumeration: Option<u64>,
    /// Wall-clock ceiling for the kappa engine
    #[arg(long, global = true, env = "NETDIAG_BUDGET_SECONDS")]
    budget_seconds: Option<f64>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the edge list of a topology.
    Gen { input: String },
    /// Order, degree, bipartiteness, short cycles, ell and min |N(T)|.
    Stats { input: String },
    /// h-extra connectivity with a verified witness cut.
    Kappa {
        input: String,
        #[arg(long, default_value_t = 2)]
        h: usize,
    },
    /// Conditional diagnosability: exhaustive value or an upper-bound witness pair.
    Diagnose {
        input: String,
        #[arg(value_enum)]
        which: DiagnoseKind,
        #[arg(long, default_value_t = 6)]
        cap: usize,
    },
    /// Structural hypotheses, lemma tables, or a full reconciliation against the formula table.
    Verify {
        input: String,
        #[arg(value_enum)]
        which: VerifyKind,
        #[arg(long, value_enum, default_value_t = ModeArg::Sampled)]
        mode: ModeArg,
        /// Samples per subset size in sampled mode.
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        /// Largest deleted set for component-lemma; defaults to the family's lemma bound.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Dump the closed-form table, optionally filtered and evaluated.
    Formula {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        quantity: Option<String>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DiagnoseKind {
    Exact,
    Witness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Conditions,
    ComponentLemma,
    CommonNeighbor,
    Reconcile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
    Cited,
}

enum Failure {
    Usage(String),
    Budget(String),
    Strict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget(m) => Failure::Budget(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parsed input: a built topology or a graph read from `file:<path>`.
enum Input {
    Topology(Box<Topology>),
    File(String, Graph),
}

impl Input {
    fn graph(&self) -> &Graph {
        match self {
            Input::Topology(t) => &t.graph,
            Input::File(_, g) => g,
        }
    }

    fn subject(&self) -> Subject {
        match self {
            Input::Topology(t) => Subject::Topology(t.spec.clone()),
            Input::File(id, _) => Subject::Graph(id.clone()),
        }
    }

    fn topology(&self, what: &str) -> CliResult<&Topology> {
        match self {
            Input::Topology(t) => Ok(t),
            Input::File(..) => Err(Failure::Usage(format!("{what} needs a topology spec, not a file"))),
        }
    }
}

fn load(input: &str, budget: &Budget) -> CliResult<Input> {
    if let Some(path) = input.strip_prefix("file:") {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
        return Ok(Input::File(input.to_string(), Graph::parse_edge_list(&text)?));
    }
    let spec: TopologySpec = input.parse()?;
    Ok(Input::Topology(Box::new(build(&spec, budget)?)))
}

fn budget_of(g: &Global) -> Budget {
    let mut b = Budget::default();
    if let Some(v) = g.budget_order {
        b.max_order = v;
    }
    if let Some(v) = g.budget_subset {
        b.max_subset_size = v;
    }
    if let Some(v) = g.budget_enumeration {
        b.max_enumeration = v;
    }
    b.max_flow_calls = g.budget_flows;
    b.max_seconds = g.budget_seconds;
    b
}

#[derive(Serialize)]
struct Stats {
    subject: String,
    order: usize,
    edges: usize,
    degree: Option<usize>,
    min_degree: usize,
    max_degree: usize,
    bipartite: bool,
    has_c3: bool,
    has_c4: bool,
    has_c5: bool,
    ell: Option<usize>,
    #[serde(rename = "min_NT")]
    min_nt: usize,
    kind: netdiag_core::graph::TripleKind,
    witness: Vec<String>,
}

fn stats(input: &Input) -> CliResult<Value> {
    let g = input.graph();
    let m = min_neighbor_3subgraph(g)?;
    let s = Stats {
        subject: input.subject().to_string(),
        order: g.vertex_count(),
        edges: g.edge_count(),
        degree: g.regular_degree(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        bipartite: g.is_bipartite(),
        has_c3: g.has_cycle_of_length(3)?,
        has_c4: g.has_cycle_of_length(4)?,
        has_c5: g.has_cycle_of_length(5)?,
        ell: g.ell().ok(),
        min_nt: m.t,
        kind: m.kind(),
        witness: m.witness.set.labels(g),
    };
    Ok(serde_json::to_value(s).expect("stats serialize"))
}

fn formula(family: Option<&str>, quantity: Option<&str>, n: Option<i64>, k: Option<i64>) -> CliResult<Value> {
    let wanted: Option<(Family, Params)> = family
        .map(|f| -> CliResult<(Family, Params)> {
            let p = Params { n: n.unwrap_or(0), k: k.unwrap_or(0) };
            Ok(match f.parse::<Family>()? {
                Family::Hypercube => (Family::KaryNcube, Params { k: 2, ..p }),
                fam => (fam, p),
            })
        })
        .transpose()?;
    let q: Option<Quantity> = quantity.map(str::parse).transpose()?;
    let rows: Vec<Value> = formula_table()
        .into_iter()
        .filter(|e| wanted.is_none_or(|(f, _)| e.family == f))
        .filter(|e| q.is_none_or(|q| e.quantity == q))
        .map(|e| {
            let mut v = serde_json::to_value(e).expect("entry serializes");
            if let (Some((_, p)), Some(_)) = (wanted, n) {
                let ok = (e.in_range)(p);
                v["in_range"] = json!(ok);
                v["value"] = if ok { json!((e.eval)(p)) } else { Value::Null };
            }
            v
        })
        .collect();
    Ok(Value::Array(rows))
}

fn mode_of(arg: ModeArg, seed: u64, trials: u64) -> Mode {
    match arg {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Sampled => Mode::Sampled { seed, trials },
        ModeArg::Cited => Mode::Cited,
    }
}

/// Result of a command: the JSON document, an optional CSV rendering, and any strict-mode verdict.
struct Output {
    value: Value,
    report: Option<VerificationReport>,
    failed: Option<String>,
    degraded: Option<String>,
}

impl Output {
    fn plain(value: Value) -> Self {
        Output { value, report: None, failed: None, degraded: None }
    }

    fn report(r: VerificationReport) -> Self {
        let failed = r.has_failures().then(|| {
            let names: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
            format!("failed checks: {}", names.join(", "))
        });
        let value = serde_json::to_value(&r).expect("report serializes");
        Output { value, report: Some(r), failed, degraded: None }
    }
}

fn run(cli: &Cli) -> CliResult<Option<Output>> {
    let budget = budget_of(&cli.global);
    Ok(Some(match &cli.command {
        Command::Gen { input } => {
            let input = load(input, &budget)?;
            emit_raw(&cli.global, &input.graph().to_edge_list())?;
            return Ok(None);
        }
        Command::Stats { input } => Output::plain(stats(&load(input, &budget)?)?),
        Command::Kappa { input, h } => {
            let input = load(input, &budget)?;
            let g = input.graph();
            let r = kappa_h(g, *h, &budget)?;
            let mut value = serde_json::to_value(r.report(g)).expect("kappa serializes");
            value["subject"] = json!(input.subject().to_string());
            let degraded = (r.status == KappaStatus::Bracket).then(|| "kappa search stopped at the budget".to_string());
            Output { value, report: None, failed: None, degraded }
        }
        Command::Diagnose { input, which, cap } => {
            let input = load(input, &budget)?;
            let g = input.graph();
            let mut value = match which {
                DiagnoseKind::Exact => {
                    let r = conditional_diagnosability_exact(g, *cap)?;
                    json!({
                        "value": r.value,
                        "at_least": r.at_least,
                        "cap": r.cap,
                        "conditional_sets": r.conditional_sets,
                        "counterexample": r.counterexample.as_ref().map(|(a, b)| [a.members().labels(g), b.members().labels(g)]),
                    })
                }
                DiagnoseKind::Witness => {
                    serde_json::to_value(tc_upper_witness(g)?.report(g)).expect("witness serializes")
                }
            };
            value["subject"] = json!(input.subject().to_string());
            Output::plain(value)
        }
        Command::Verify { input, which, mode, trials, bound } => {
            let input = load(input, &budget)?;
            let mode = mode_of(*mode, cli.global.seed, *trials);
            let subject = input.subject();
            let report = match which {
                VerifyKind::Conditions => check_sufficient_conditions(input.graph(), &subject, mode, &budget)?,
                VerifyKind::ComponentLemma => {
                    let bound = match bound {
                        Some(b) => *b,
                        None => subject
                            .spec()
                            .and_then(netdiag_core::verify::structure::component_lemma)
                            .map(|l| l.bound)
                            .ok_or_else(|| Failure::Usage("no default bound for this graph; pass --bound".into()))?,
                    };
                    check_component_lemma(input.graph(), &subject, bound, mode, &budget)?
                }
                VerifyKind::CommonNeighbor => check_common_neighbor_lemma(input.topology("common-neighbor")?, &budget)?,
                VerifyKind::Reconcile => reconcile(&input.topology("reconcile")?.spec, &budget)?,
            };
            Output::report(report)
        }
        Command::Formula { family, quantity, n, k } => {
            Output::plain(formula(family.as_deref(), quantity.as_deref(), *n, *k)?)
        }
    }))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_of(v: &Value) -> String {
    let quote = |s: String| {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s
        }
    };
    let rows: Vec<&serde_json::Map<String, Value>> = match v {
        Value::Array(a) => a.iter().filter_map(Value::as_object).collect(),
        Value::Object(o) => vec![o],
        _ => return scalar(v) + "\n",
    };
    let Some(first) = rows.first() else { return String::new() };
    let keys: Vec<&String> = first.keys().collect();
    let mut out = keys.iter().map(|k| quote(k.to_string())).collect::<Vec<_>>().join(",") + "\n";
    for r in rows {
        out += &keys.iter().map(|k| quote(r.get(*k).map(scalar).unwrap_or_default())).collect::<Vec<_>>().join(",");
        out.push('\n');
    }
    out
}

fn text_of(out: &Output) -> String {
    if let Some(r) = &out.report {
        let mut s = format!("{}\n", r.subject);
        for c in &r.checks {
            s += &format!("  {:<26} {}", c.name, c.status.as_str());
            if let Some(cex) = &c.counterexample {
                s += &format!("  counterexample: {}", cex.join(" "));
            }
            s.push('\n');
        }
        return s;
    }
    match &out.value {
        Value::Object(o) => o.iter().map(|(k, v)| format!("{k}: {}\n", scalar(v))).collect(),
        Value::Array(a) => a.iter().map(|v| format!("{v}\n")).collect(),
        v => format!("{}\n", scalar(v)),
    }
}

fn emit_raw(global: &Global, text: &str) -> CliResult<()> {
    match &global.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn render(global: &Global, out: &Output) -> CliResult<String> {
    Ok(match global.format {
        Format::Json => serde_json::to_string_pretty(&out.value).expect("json serializes") + "\n",
        Format::Csv => match &out.report {
            Some(r) => r.to_csv()?,
            None => csv_of(&out.value),
        },
        Format::Text => text_of(out),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("netdiag: {e}");
            return ExitCode::from(2);
        }
    }
    let result = run(&cli).and_then(|out| {
        let Some(out) = out else { return Ok(()) };
        emit_raw(&cli.global, &render(&cli.global, &out)?)?;
        if cli.global.strict {
            if let Some(f) = out.failed {
                return Err(Failure::Strict(f));
            }
            if let Some(d) = out.degraded {
                return Err(Failure::Budget(d));
            }
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Strict(m)) => {
            eprintln!("netdiag: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("netdiag: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("netdiag: {m}");
            ExitCode::from(3)
        }
    }
}
