//! Command-line front end for the `curvecount` checks.
//!
//! Every command produces a [`Report`]: the claims it checks, a summary
//! record, optional per-row records, free-form notes and the discrepancies
//! found. Exit status 0 means every check passed, 2 means a discrepancy was
//! found, 1 is reserved for usage and guard errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use curvecount::agraph::{self, AmbientContext, StableAGraph};
use curvecount::{comb, hankel, ledger, strata};
use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SEED_ENV: &str = "CURVECOUNT_SEED";

#[derive(Debug, Clone, Parser)]
#[command(name = "curvecount", version, about = "Exact checks for dimension counts of rational curves on hypersurfaces")]
pub struct RunConfig {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Stable A-graphs.
    #[command(subcommand)]
    Agraph(AgraphCommand),
    /// Codimension ledger and degree bound.
    #[command(subcommand)]
    Ledger(LedgerCommand),
    /// Hankel matrices and secant samples.
    #[command(subcommand)]
    Hankel(HankelCommand),
    /// Case margins of the multiplication-map strata.
    #[command(subcommand)]
    Strata(StrataCommand),
    /// Comb relabelling census.
    #[command(subcommand)]
    Comb(CombCommand),
}

#[derive(Debug, Clone, Subcommand)]
pub enum AgraphCommand {
    /// Nondegenerate basic graphs of degree `e` up to isomorphism.
    Enum {
        #[arg(long)]
        e: usize,
        #[arg(long, requires = "d")]
        n: Option<i64>,
        #[arg(long, requires = "n")]
        d: Option<i64>,
    },
    /// Expected dimension of a graph.
    Dim {
        #[command(flatten)]
        graph: GraphSpec,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
    },
    /// Check genus-0 and stability invariants.
    Validate {
        #[command(flatten)]
        graph: GraphSpec,
    },
}

#[derive(Debug, Clone, Args)]
pub struct GraphSpec {
    /// Graph text, e.g. "vertices: 0:0, 1:1, 2:1; edges: 0-1, 0-2; tails: 0@0".
    #[arg(long, conflicts_with = "shape", required_unless_present = "shape")]
    pub graph: Option<String>,
    #[arg(long, value_enum, requires = "e")]
    pub shape: Option<Shape>,
    /// Degree for `--shape`.
    #[arg(long)]
    pub e: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    /// One vertex of degree `e`, no tails.
    Tau0,
    /// One vertex of degree `e`, one tail.
    Tau1,
    /// Path of `e` lines, tail at an end.
    Chain,
    /// Degree-0 center with the tail and `e` lines.
    Comb,
}

#[derive(Debug, Clone, Subcommand)]
pub enum LedgerCommand {
    /// Codimension rows for one `(n, d)`.
    Compute {
        #[arg(long)]
        n: i64,
        /// Defaults to `n - 1`.
        #[arg(long)]
        d: Option<i64>,
        /// Defaults to `n`.
        #[arg(long)]
        emax: Option<i64>,
    },
    /// Degree bounds for a range of `n`.
    Sweep {
        #[arg(long)]
        n_from: i64,
        #[arg(long)]
        n_to: i64,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum HankelCommand {
    /// Sample secant points and compare `codim D(V)` with both candidate laws.
    Verify {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Rank and kernel of the Hankel matrix of one functional.
    Rank {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Comma-separated coefficients `c_0, ..., c_{a+b}`.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        c: Vec<i64>,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum StrataCommand {
    Audit {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
    },
    /// Audit every `4 <= n <= n_max`, `2 <= d < n`.
    Sweep {
        #[arg(long)]
        n_max: i64,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum CombCommand {
    Connect {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        k: u8,
        /// Work on symmetry orbits.
        #[arg(long)]
        reduced: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Discrepancy,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Discrepancy => 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub claims: Vec<String>,
    pub summary: Value,
    pub records: Vec<Value>,
    pub notes: Vec<String>,
    pub discrepancies: Vec<String>,
    pub status: Status,
}

impl Report {
    fn new(command: &str, claims: &[&str], summary: Value) -> Self {
        Self {
            command: command.to_string(),
            claims: claims.iter().map(|c| c.to_string()).collect(),
            summary,
            records: Vec::new(),
            notes: Vec::new(),
            discrepancies: Vec::new(),
            status: Status::Pass,
        }
    }

    fn flag(&mut self, discrepancy: String) {
        self.discrepancies.push(discrepancy);
        self.status = Status::Discrepancy;
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => render_text(self),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => render_csv(self),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] curvecount::Error),
    #[error("{0}")]
    Usage(String),
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match &cfg.command {
        Command::Agraph(cmd) => run_agraph(cmd),
        Command::Ledger(cmd) => run_ledger(cmd),
        Command::Hankel(cmd) => run_hankel(cmd, cfg.seed),
        Command::Strata(cmd) => run_strata(cmd),
        Command::Comb(cmd) => run_comb(cmd),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn object(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(m) => m,
        other => Map::from_iter([("value".to_string(), other)]),
    }
}

fn build_graph(spec: &GraphSpec) -> Result<(StableAGraph, Option<(Shape, usize)>), CliError> {
    if let Some(text) = &spec.graph {
        return Ok((text.parse()?, None));
    }
    let shape = spec.shape.ok_or_else(|| CliError::Usage("give --graph or --shape".to_string()))?;
    let e = spec.e.ok_or_else(|| CliError::Usage("--shape needs --e".to_string()))?;
    if e == 0 {
        return Err(CliError::Usage("--e must be positive".to_string()));
    }
    let g = match shape {
        Shape::Tau0 => StableAGraph::single_vertex(0, e as u32),
        Shape::Tau1 => StableAGraph::single_vertex(1, e as u32),
        Shape::Chain => StableAGraph::chain(e),
        Shape::Comb => StableAGraph::comb(e),
    };
    Ok((g, Some((shape, e))))
}

fn graph_summary(g: &StableAGraph) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("graph".into(), json!(g.to_string()));
    m.insert("total_degree".into(), json!(g.total_degree()));
    m.insert("vertices".into(), json!(g.vertices().len()));
    m.insert("edges".into(), json!(g.edges().len()));
    m.insert("tails".into(), json!(g.tails().len()));
    m.insert("flags".into(), json!(g.flag_count()));
    m
}

const CLAIM_DIM: &str = "expected dimension (n+1-d)*beta + #tails - #edges + dim X - 3";
const CLAIM_TAU0: &str = "curves of degree e on a general hypersurface of degree n-1 have pure dimension 2e+n-4";
const CLAIM_CHAIN_COMB: &str = "specializing a chain of e lines to a comb lowers the expected dimension by e-2";
const CLAIM_ENUM: &str = "nondegenerate basic graphs of degree e are rooted trees on e lines";
const CLAIM_STABLE: &str = "genus-0 stable graphs are trees whose degree-0 vertices carry at least 3 flags";

fn run_agraph(cmd: &AgraphCommand) -> Result<Report, CliError> {
    match cmd {
        AgraphCommand::Enum { e, n, d } => {
            let graphs = agraph::enumerate_nondegenerate_basic(*e)?;
            let ctx = match (n, d) {
                (Some(n), Some(d)) => Some(AmbientContext::new(*n, *d)?),
                _ => None,
            };
            let mut claims = vec![CLAIM_ENUM];
            if ctx.is_some() {
                claims.push(CLAIM_DIM);
            }
            let mut report = Report::new("agraph enum", &claims, json!({ "e": e, "count": graphs.len() }));
            for (i, g) in graphs.iter().enumerate() {
                let mut rec = Map::new();
                rec.insert("index".into(), json!(i));
                rec.insert("canonical_form".into(), json!(g.canonical_form()?));
                rec.extend(graph_summary(g));
                if let Some(ctx) = ctx {
                    rec.insert("expected_dim".into(), json!(agraph::expected_dim(g, ctx)?));
                }
                report.records.push(Value::Object(rec));
            }
            Ok(report)
        }
        AgraphCommand::Dim { graph, n, d } => {
            let (g, shape) = build_graph(graph)?;
            let ctx = AmbientContext::new(*n, *d)?;
            let dim = agraph::expected_dim(&g, ctx)?;
            let mut summary = graph_summary(&g);
            summary.insert("basic".into(), json!(g.is_basic()));
            summary.insert("nondegenerate".into(), json!(g.is_nondegenerate()));
            summary.insert("n".into(), json!(n));
            summary.insert("d".into(), json!(d));
            summary.insert("expected_dim".into(), json!(dim));
            let mut claims = vec![CLAIM_DIM];
            let mut flags = Vec::new();
            match shape {
                Some((Shape::Tau0, e)) if *d == n - 1 => {
                    claims.push(CLAIM_TAU0);
                    let stated = 2 * e as i64 + n - 4;
                    summary.insert("stated_dim".into(), json!(stated));
                    if stated != dim {
                        flags.push(format!("expected dimension {dim} differs from 2e+n-4 = {stated}"));
                    }
                }
                Some((Shape::Chain, e)) if e >= 2 => {
                    claims.push(CLAIM_CHAIN_COMB);
                    let c = agraph::chain_to_comb(&g)?;
                    let comb_dim = agraph::expected_dim(&c, ctx)?;
                    let drop = dim - comb_dim;
                    summary.insert("comb_graph".into(), json!(c.to_string()));
                    summary.insert("comb_expected_dim".into(), json!(comb_dim));
                    summary.insert("drop".into(), json!(drop));
                    summary.insert("stated_drop".into(), json!(e as i64 - 2));
                    if drop != e as i64 - 2 {
                        flags.push(format!("chain to comb lowers the expected dimension by {drop}, not e-2 = {}", e as i64 - 2));
                    }
                }
                _ => {}
            }
            let mut report = Report::new("agraph dim", &claims, Value::Object(summary));
            for f in flags {
                report.flag(f);
            }
            Ok(report)
        }
        AgraphCommand::Validate { graph } => {
            let (g, _) = build_graph(graph)?;
            let v = g.validate();
            let mut summary = graph_summary(&g);
            summary.insert("ok".into(), json!(v.is_ok()));
            summary.insert("violations".into(), json!(v.messages()));
            let mut report = Report::new("agraph validate", &[CLAIM_STABLE], Value::Object(summary));
            for m in v.messages() {
                report.flag(m);
            }
            Ok(report)
        }
    }
}

const CLAIM_LEDGER: &str =
    "codimension of the degree-e non-level locus is at least C(n+1,2) - 3(n-2) minus steps of at most 2n-(n-d+1)e";
const CLAIM_RESIDUAL: &str = "after telescoping the bound equals (n^2 - n - 4ne + 2e^2 + 2e + 8)/2";
const CLAIM_ROOT: &str = "the ledger stays positive for e < n - (1 + sqrt(n^2 - n - 15))/2";

fn bound_discrepancy(r: &ledger::BoundReport) -> Option<String> {
    (r.regime == ledger::Regime::Ledger && !r.agreement).then(|| {
        format!(
            "n = {}: residual scan gives max e = {}, closed form gives {}",
            r.n,
            r.max_e_quadratic.map_or("none".to_string(), |e| e.to_string()),
            match r.max_e_closed_form {
                ledger::ClosedFormBound::Value(e) => e.to_string(),
                ledger::ClosedFormBound::NoPositive => "none".to_string(),
                ledger::ClosedFormBound::IllDefined => "ill-defined".to_string(),
            }
        )
    })
}

fn run_ledger(cmd: &LedgerCommand) -> Result<Report, CliError> {
    match cmd {
        LedgerCommand::Compute { n, d, emax } => {
            let d = d.unwrap_or(n - 1);
            let table = ledger::CodimLedger::build(*n, d, emax.unwrap_or(*n))?;
            let mut summary = Map::new();
            summary.insert("n".into(), json!(n));
            summary.insert("d".into(), json!(d));
            summary.insert("base_hypothesis_met".into(), json!(table.base_hypothesis_met));
            summary.insert("pgl_dim_floor".into(), json!(table.pgl_dim_floor));
            summary.insert("bendbreak_threshold".into(), json!(table.bendbreak_threshold));
            summary.insert("first_exhausted".into(), json!(table.first_exhausted()));
            summary.insert("comparison".into(), to_value(&ledger::comparison_constants(*n, d)?));
            let bound = (*n >= 4).then(|| ledger::max_level_degree(*n)).transpose()?;
            if let Some(b) = &bound {
                summary.insert("bound".into(), to_value(b));
            }
            let mut report = Report::new("ledger compute", &[CLAIM_LEDGER, CLAIM_RESIDUAL, CLAIM_ROOT], Value::Object(summary));
            if !table.base_hypothesis_met {
                report
                    .notes
                    .push(format!("the base codimension is only established for 7 <= d = n - 1; rows use it for d = {d}"));
            }
            for row in &table.rows {
                let mut rec = object(to_value(row));
                rec.insert("n".into(), json!(n));
                rec.insert("d".into(), json!(d));
                report.records.push(Value::Object(rec));
            }
            if let Some(msg) = bound.as_ref().and_then(bound_discrepancy) {
                report.flag(msg);
            }
            Ok(report)
        }
        LedgerCommand::Sweep { n_from, n_to } => {
            let rows = ledger::sweep(*n_from, *n_to)?;
            let summary = json!({ "n_from": n_from, "n_to": n_to, "rows": rows.len() });
            let mut report = Report::new("ledger sweep", &[CLAIM_RESIDUAL, CLAIM_ROOT], summary);
            for r in &rows {
                report.records.push(to_value(r));
                if let Some(msg) = bound_discrepancy(r) {
                    report.flag(msg);
                }
                if r.regime == ledger::Regime::ConicArgument {
                    report.notes.push(format!("n = {}: low degrees are covered by the conic argument", r.n));
                }
            }
            Ok(report)
        }
    }
}

const CLAIM_LITERAL: &str = "a general point of the ell-secant variety has codim D(V) = min{a, b, ell}";
const CLAIM_SHIFTED: &str = "alternative law codim D(V) = min{a+1, b+1, ell}";
const CLAIM_KERNEL: &str = "every kernel vector f satisfies c(f g) = 0 for all forms g of degree b";

fn run_hankel(cmd: &HankelCommand, seed: u64) -> Result<Report, CliError> {
    match cmd {
        HankelCommand::Verify { a, b, ell, trials } => {
            let r = hankel::verify_lemma(*a, *b, *ell, *trials, seed)?;
            let mut summary = object(to_value(&r));
            summary.insert("uniform_codim".into(), json!(r.uniform_codim()));
            let mut report = Report::new("hankel verify", &[CLAIM_LITERAL, CLAIM_SHIFTED, CLAIM_KERNEL], Value::Object(summary));
            if !r.exact_regime {
                report.notes.push(format!(
                    "ell = {ell} exceeds max(a+1, b+1); secant samples can have lower rank than the general point"
                ));
            }
            if !r.matches_literal() {
                report.flag(format!(
                    "observed codim {:?} does not match min{{a, b, ell}} = {}",
                    r.observed_codims.keys().collect::<Vec<_>>(),
                    r.formula_min_abl
                ));
            }
            if !r.counterexamples.is_empty() {
                report.flag(format!(
                    "{} trials differ from min{{a+1, b+1, ell}} = {}",
                    r.counterexamples.len(),
                    r.formula_min_a1b1l
                ));
            }
            if r.kernel_failures > 0 {
                report.flag(format!("{} kernel vectors fail the multiplication check", r.kernel_failures));
            }
            Ok(report)
        }
        HankelCommand::Rank { a, b, c } => {
            let h = hankel::HankelInstance::new(*a, *b, c.iter().copied())?;
            let basis = h.dv_basis();
            let failures = basis.iter().filter(|f| !h.annihilates(f)).count();
            let summary = json!({
                "a": a,
                "b": b,
                "coefficients": c,
                "rank": h.codim_dv(),
                "kernel_dim": basis.len(),
                "kernel": basis
                    .iter()
                    .map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                    .collect::<Vec<_>>(),
                "kernel_failures": failures,
            });
            let mut report = Report::new("hankel rank", &[CLAIM_KERNEL], summary);
            if failures > 0 {
                report.flag(format!("{failures} kernel vectors fail the multiplication check"));
            }
            Ok(report)
        }
    }
}

const CLAIM_STRATA: &str = "the non-surjective locus of the multiplication map has codimension at least 2";

fn strata_flags(a: &strata::StrataAudit) -> Vec<String> {
    let mut out = Vec::new();
    if !a.pass {
        out.push(format!("(n, d) = ({}, {}): minimum margin {} is below 2", a.n, a.d, a.min_margin));
    }
    for f in a.factor_mismatches() {
        out.push(format!(
            "(n, d) = ({}, {}), ell = {}: factor sum {} differs from the stated {}",
            a.n, a.d, f.ell, f.shifted_sum, f.stated
        ));
    }
    out
}

fn run_strata(cmd: &StrataCommand) -> Result<Report, CliError> {
    match cmd {
        StrataCommand::Audit { n, d } => {
            let a = strata::audit(*n, *d)?;
            let summary = json!({
                "n": a.n,
                "d": a.d,
                "pass": a.pass,
                "min_margin": a.min_margin,
                "tight_cases": a.tight_cases,
                "margins": a.cases.iter().map(|c| c.margin).collect::<Vec<_>>(),
                "factor_sums": a.factor_sums,
            });
            let mut report = Report::new("strata audit", &[CLAIM_STRATA], summary);
            report.records = a
                .cases
                .iter()
                .map(|c| {
                    let mut rec = Map::new();
                    rec.insert("n".into(), json!(a.n));
                    rec.insert("d".into(), json!(a.d));
                    rec.extend(object(to_value(c)));
                    Value::Object(rec)
                })
                .collect();
            report.notes = a.notes.clone();
            for f in strata_flags(&a) {
                report.flag(f);
            }
            Ok(report)
        }
        StrataCommand::Sweep { n_max } => {
            let audits = strata::sweep(*n_max)?;
            let summary = json!({
                "n_max": n_max,
                "audits": audits.len(),
                "all_pass": audits.iter().all(|a| a.pass),
                "min_margin": audits.iter().map(|a| a.min_margin).min(),
            });
            let mut report = Report::new("strata sweep", &[CLAIM_STRATA], summary);
            for a in &audits {
                let mut rec = Map::new();
                rec.insert("n".into(), json!(a.n));
                rec.insert("d".into(), json!(a.d));
                for c in &a.cases {
                    rec.insert(format!("margin_{}", c.case), json!(c.margin));
                }
                rec.insert("min_margin".into(), json!(a.min_margin));
                rec.insert("tight_cases".into(), json!(a.tight_cases));
                rec.insert("pass".into(), json!(a.pass));
                report.records.push(Value::Object(rec));
                for f in strata_flags(a) {
                    report.flag(f);
                }
            }
            Ok(report)
        }
    }
}

const CLAIM_COMB: &str =
    "labellings of the comb teeth that are not all one line form a single class under subset relabelling";

fn run_comb(cmd: &CombCommand) -> Result<Report, CliError> {
    let CombCommand::Connect { e, k, reduced } = cmd;
    let r = if *reduced {
        comb::symmetry_reduced_connectivity(*e, *k)?
    } else {
        comb::connectivity(*e, *k)?
    };
    let mut report = Report::new("comb connect", &[CLAIM_COMB], to_value(&r));
    if r.pair_moves_preserve_counts == Some(true) {
        report
            .notes
            .push("k = 2: relabelling two teeth keeps the number of teeth on each line".to_string());
    }
    if r.degenerate_reached {
        report.flag("a move reached an all-equal labelling".to_string());
    }
    if !r.connected {
        report.flag(format!("{} components of sizes {:?}", r.component_count, r.component_sizes));
    }
    Ok(report)
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Flattens nested objects into `a.b` keys. Arrays of scalars are joined
/// with `;`, arrays of objects get an index segment.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        Value::Array(xs) => out.push((prefix.to_string(), xs.iter().map(scalar).collect::<Vec<_>>().join(";"))),
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn flat(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    flatten("", v, &mut out);
    out
}

fn render_text(r: &Report) -> String {
    let mut s = format!("# {}\n", r.command);
    for c in &r.claims {
        s.push_str(&format!("claim: {c}\n"));
    }
    for (k, v) in flat(&r.summary) {
        s.push_str(&format!("{k} = {v}\n"));
    }
    for (i, rec) in r.records.iter().enumerate() {
        s.push_str(&format!("\n[{i}]\n"));
        for (k, v) in flat(rec) {
            s.push_str(&format!("  {k} = {v}\n"));
        }
    }
    if !r.records.is_empty() {
        s.push('\n');
    }
    for n in &r.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    for d in &r.discrepancies {
        s.push_str(&format!("discrepancy: {d}\n"));
    }
    s.push_str(match r.status {
        Status::Pass => "status: pass\n",
        Status::Discrepancy => "status: discrepancy\n",
    });
    s
}

/// One row per record, or the summary alone when there are none. Columns
/// are the union of flattened keys in first-seen order.
fn render_csv(r: &Report) -> String {
    let rows: Vec<Vec<(String, String)>> = if r.records.is_empty() {
        vec![flat(&r.summary)]
    } else {
        r.records.iter().map(flat).collect()
    };
    let mut header: Vec<String> = Vec::new();
    for row in &rows {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory csv");
    for row in &rows {
        let cells = header.iter().map(|h| {
            row.iter()
                .find(|(k, _)| k == h)
                .map_or(String::new(), |(_, v)| v.clone())
        });
        w.write_record(cells).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("curvecount").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn discriminating_hankel_case_flags() {
        let cfg = parse(&["hankel", "verify", "--a", "1", "--b", "2", "--ell", "2", "--trials", "20", "--seed", "7"]);
        let r = run(&cfg).unwrap();
        assert_eq!(r.status, Status::Discrepancy);
        assert_eq!(r.summary["uniform_codim"], json!(2));
    }

    #[test]
    fn csv_flattens_nested_values() {
        let v = json!({ "a": { "b": 1, "c": [1, 2] }, "d": null });
        assert_eq!(
            flat(&v),
            vec![
                ("a.b".to_string(), "1".to_string()),
                ("a.c".to_string(), "1;2".to_string()),
                ("d".to_string(), String::new())
            ]
        );
    }

    #[test]
    fn stability_violation_is_reported() {
        let cfg = parse(&["agraph", "validate", "--graph", "vertices: 0:0; edges: ; tails: 0@0"]);
        let r = run(&cfg).unwrap();
        assert_eq!(r.status, Status::Discrepancy);
        assert!(r.discrepancies[0].starts_with("stability: beta-0 vertex with 1 flag"));
    }

    #[test]
    fn tau0_dimension_passes() {
        let r = run(&parse(&["agraph", "dim", "--shape", "tau0", "--e", "2", "--n", "5", "--d", "4"])).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.summary["expected_dim"], json!(5));
    }

    #[test]
    fn connected_comb_passes() {
        let r = run(&parse(&["comb", "connect", "--e", "3", "--k", "3"])).unwrap();
        assert_eq!(r.summary["connected"], json!(true));
        assert_eq!(r.status, Status::Pass);
    }
}
