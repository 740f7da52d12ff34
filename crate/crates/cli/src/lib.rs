//! The `listcrit` command line. Every command builds a JSON payload first;
//! the text output is rendered from that payload.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use listcrit::bounds::{
    best_known_bound, bound_from_theorem, main_theorem_closed_form, render_table_text,
    reproduce_table, z_upper, BoundResult, TableRow, Theorem,
};
use listcrit::gallai::{catalog_sidecar, enumerate_gallai_trees, export_catalog, CatalogSidecar};
use listcrit::lp::{optimize_quadruple, Optimization};
use listcrit::quadruple::{evaluate_family, Family, QuadrupleReport, TreeCatalog};
use listcrit::rational::{self, int, to_fraction_string};
use listcrit::reducibility::{
    audit_average_degree, audit_beta_lemma, audit_counting_identities, audit_kernel_magic,
    audit_q_lemma, check_alpha_bound, establish_irreducibility, is_fat, ATVerdict, AuditReport,
    IrreducibilityBasis, ListSizeAssignment,
};
use listcrit::{Error, Graph, Limits, Rational};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    /// 0 pass, 1 violation found, 2 usage, input or guard error.
    pub exit_code: u8,
    /// What the binary prints: the text rendering, or the JSON payload
    /// when `--json` was given.
    pub text: String,
    pub json: Option<Value>,
}

#[derive(Parser, Debug)]
#[command(name = "listcrit", version, about = "Average-degree bounds for list-critical graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lower bounds on average degree, one row per k.
    Table {
        #[arg(long, value_delimiter = ',', default_value = "4,5,6,7,8,9,10,15,20")]
        k: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// The bound a theorem gives for one family at one k.
    Bound {
        #[arg(long)]
        k: usize,
        /// Required unless the theorem is `closed-form`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        theorem: String,
        /// `z` for the parametric family, as a fraction.
        #[arg(long)]
        z: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Sufficient conditions and the exhaustive tree check over a k range.
    VerifyQuadruple {
        #[arg(long)]
        family: String,
        /// Inclusive, `A..B`.
        #[arg(long)]
        k_range: String,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long)]
        z: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Best quadruple for one k and theorem by linear programming.
    Optimize {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        json: bool,
    },
    /// Gallai trees with Δ <= k-1 up to a given order.
    EnumerateTrees {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_n: usize,
        /// Write one edge-list file per tree plus `catalog.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Runs every audit that applies to the graph.
    CheckGraph {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Option<String>,
        /// Take AT/OC-irreducibility as given instead of certifying it.
        #[arg(long)]
        assert_irreducible: bool,
        #[arg(long)]
        json: bool,
    },
    /// Alon–Tarsi check for a graph and list sizes.
    AtCheck {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Table { .. } => "table",
            Command::Bound { .. } => "bound",
            Command::VerifyQuadruple { .. } => "verify-quadruple",
            Command::Optimize { .. } => "optimize",
            Command::EnumerateTrees { .. } => "enumerate-trees",
            Command::CheckGraph { .. } => "check-graph",
            Command::AtCheck { .. } => "at-check",
        }
    }

    fn json(&self) -> bool {
        match self {
            Command::Table { json, .. }
            | Command::Bound { json, .. }
            | Command::VerifyQuadruple { json, .. }
            | Command::Optimize { json, .. }
            | Command::EnumerateTrees { json, .. }
            | Command::CheckGraph { json, .. }
            | Command::AtCheck { json, .. } => *json,
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// A finished command before rendering.
struct Outcome {
    exit_code: u8,
    payload: Value,
    text: String,
}

fn outcome<T: Serialize>(command: &str, exit_code: u8, body: &T, text: String) -> Result<Outcome, Error> {
    let payload = serde_json::to_value(Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        body,
    })?;
    Ok(Outcome {
        exit_code,
        payload,
        text,
    })
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandResult {
                exit_code: code,
                text: e.render().to_string(),
                json: None,
            };
        }
    };
    let name = cli.command.name();
    let as_json = cli.command.json();
    let result = match &cli.command {
        Command::Table { k, .. } => table(k),
        Command::Bound {
            k,
            family,
            theorem,
            z,
            ..
        } => bound(*k, family.as_deref(), theorem, z.as_deref()),
        Command::VerifyQuadruple {
            family,
            k_range,
            max_n,
            z,
            ..
        } => verify_quadruple(family, k_range, *max_n, z.as_deref()),
        Command::Optimize { k, theorem, .. } => optimize(*k, theorem),
        Command::EnumerateTrees { k, max_n, out, .. } => enumerate_trees(*k, *max_n, out.as_deref()),
        Command::CheckGraph {
            file,
            k,
            lambda,
            assert_irreducible,
            ..
        } => check_graph(file, *k, lambda.as_deref(), *assert_irreducible),
        Command::AtCheck { file, f, .. } => at_check(file, f),
    };
    match result {
        Ok(o) => CommandResult {
            exit_code: o.exit_code,
            text: if as_json {
                render_json(&o.payload)
            } else {
                o.text
            },
            json: Some(o.payload),
        },
        Err(e) => failure(name, &e, as_json),
    }
}

fn render_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize") + "\n"
}

fn failure(command: &str, e: &Error, as_json: bool) -> CommandResult {
    let kind = if e.is_guard() { "guard" } else { "input" };
    let payload = serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": { "kind": kind, "message": e.to_string() },
    });
    let text = if as_json {
        render_json(&payload)
    } else if e.is_guard() {
        format!("error: guard exceeded: {e}\n")
    } else {
        format!("error: {e}\n")
    };
    CommandResult {
        exit_code: 2,
        text,
        json: Some(payload),
    }
}

fn parse_family(s: &str) -> Result<Family, Error> {
    s.parse()
}

fn parse_fraction(s: Option<&str>) -> Result<Option<Rational>, Error> {
    s.map(rational::parse).transpose()
}

#[derive(Serialize)]
struct TablePayload {
    rows: Vec<TableRow>,
    note: &'static str,
}

fn table(ks: &[usize]) -> Result<Outcome, Error> {
    let rows = reproduce_table(ks)?;
    let text = render_table_text(&rows);
    outcome(
        "table",
        0,
        &TablePayload {
            rows,
            note: "KS and KR columns are historical values, not recomputed",
        },
        text,
    )
}

#[derive(Serialize)]
struct BoundPayload {
    family: Option<Family>,
    bound: BoundResult,
}

fn bound(k: usize, family: Option<&str>, theorem: &str, z: Option<&str>) -> Result<Outcome, Error> {
    let result = if theorem.eq_ignore_ascii_case("closed-form") {
        BoundPayload {
            family: None,
            bound: main_theorem_closed_form(k)?,
        }
    } else {
        let t: Theorem = theorem.parse()?;
        let family = family
            .ok_or_else(|| Error::Invalid("--family is required for this theorem".into()))?;
        let family = parse_family(family)?;
        let z = parse_fraction(z)?;
        let q = evaluate_family(family, k, z.as_ref())?;
        BoundPayload {
            family: Some(family),
            bound: bound_from_theorem(&q, t)?,
        }
    };
    let text = format!("{}\n", result.bound);
    outcome("bound", 0, &result, text)
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Invalid(format!("k range `{s}` is not of the form A..B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

#[derive(Serialize)]
struct VerifyPayload {
    family: Family,
    max_n: usize,
    reports: Vec<QuadrupleReport>,
    counterexamples: usize,
    pass: bool,
}

fn verify_quadruple(family: &str, range: &str, max_n: usize, z: Option<&str>) -> Result<Outcome, Error> {
    let family = parse_family(family)?;
    let (lo, hi) = parse_range(range)?;
    let z = parse_fraction(z)?;
    let r = family
        .r()
        .ok_or_else(|| Error::Invalid("custom quadruples cannot be verified by family".into()))?;
    let catalog = TreeCatalog::build(max_n, hi.max(4))?;
    let reports = (lo..=hi)
        .map(|k| {
            let q = evaluate_family(family, k, z.as_ref())?;
            QuadrupleReport::build(&q, r, &catalog)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let counterexamples = reports
        .iter()
        .filter(|r| r.tree_check.counterexample.is_some())
        .count();
    let pass = reports.iter().all(QuadrupleReport::pass);
    let body = VerifyPayload {
        family,
        max_n,
        reports,
        counterexamples,
        pass,
    };
    let mut text = String::new();
    for rep in &body.reports {
        let cond = match &rep.conditions {
            None => "conditions n/a".to_string(),
            Some(c) if c.pass => "conditions pass".to_string(),
            Some(c) => {
                let names: Vec<&str> = c.failures().map(|x| x.name.as_str()).collect();
                format!("conditions FAIL ({})", names.join(", "))
            }
        };
        let _ = writeln!(
            text,
            "{} k={}: {cond}; {} trees, {} tight{}",
            family.name(),
            rep.k,
            rep.tree_check.trees_checked,
            rep.tree_check.tight_count,
            match &rep.tree_check.counterexample {
                Some(w) => format!(
                    "; counterexample {} ({} > {})",
                    w.code,
                    to_fraction_string(&w.lhs),
                    to_fraction_string(&w.rhs)
                ),
                None => String::new(),
            }
        );
    }
    let _ = writeln!(text, "{counterexamples} counterexamples (trees up to {max_n} vertices)");
    outcome("verify-quadruple", if pass { 0 } else { 1 }, &body, text)
}

fn optimize(k: usize, theorem: &str) -> Result<Outcome, Error> {
    let t: Theorem = theorem.parse()?;
    let opt: Optimization = optimize_quadruple(k, t)?;
    let q = &opt.quadruple;
    let mut text = String::new();
    let _ = writeln!(text, "k = {k}, theorem {}, branch {:?}", opt.bound.theorem, opt.chosen);
    let _ = writeln!(
        text,
        "witness p = {}, h = {}, z = {}, f = {}",
        to_fraction_string(&q.p),
        to_fraction_string(&q.h),
        to_fraction_string(&q.z),
        to_fraction_string(&q.f)
    );
    let _ = writeln!(text, "bound     {}", opt.bound);
    let _ = writeln!(text, "reference {} ({})", opt.reference, opt.reference.theorem);
    if let Some(gap) = &opt.gap {
        let _ = writeln!(text, "gap       {}", to_fraction_string(gap));
    }
    outcome("optimize", 0, &opt, text)
}

#[derive(Serialize)]
struct TreesPayload {
    max_n: usize,
    out: Option<String>,
    catalog: CatalogSidecar,
}

fn enumerate_trees(k: usize, max_n: usize, out: Option<&Path>) -> Result<Outcome, Error> {
    let trees = enumerate_gallai_trees(max_n, k)?;
    let catalog = match out {
        Some(dir) => export_catalog(&trees, k, dir)?,
        None => catalog_sidecar(&trees, k)?,
    };
    let mut text = format!("{} Gallai trees with k = {k}, at most {max_n} vertices\n", trees.len());
    let _ = writeln!(text, "{:>6} {:>5} {:>5} {:>3} {:>4} {:>6}", "index", "order", "size", "q", "beta", "clique");
    for (e, t) in catalog.entries.iter().zip(&trees) {
        let _ = writeln!(
            text,
            "{:>6} {:>5} {:>5} {:>3} {:>4} {:>6}  {}",
            e.index,
            e.order,
            e.size,
            e.q,
            e.beta,
            if e.has_clique { "yes" } else { "no" },
            t.canonical_code()
        );
    }
    if let Some(dir) = out {
        let _ = writeln!(text, "wrote {} files and catalog.json to {}", trees.len(), dir.display());
    }
    let body = TreesPayload {
        max_n,
        out: out.map(|d| d.display().to_string()),
        catalog,
    };
    outcome("enumerate-trees", 0, &body, text)
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    Graph::parse_edge_list(&read(path)?)
}

#[derive(Serialize)]
struct GraphSummary {
    order: usize,
    size: usize,
    min_degree: Option<usize>,
    max_degree: usize,
}

impl GraphSummary {
    fn of(g: &Graph) -> Self {
        GraphSummary {
            order: g.order(),
            size: g.size(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
        }
    }
}

#[derive(Serialize)]
struct CheckPayload {
    graph: GraphSummary,
    k: usize,
    irreducibility: Option<IrreducibilityBasis>,
    audits: Vec<AuditReport>,
    skipped: Vec<String>,
    pass: bool,
}

/// `z` of the best registered quadruple when it is a valid `λ`, else 2.
fn default_lambda(k: usize) -> Rational {
    let z = best_known_bound(k)
        .ok()
        .and_then(|b| b.quadruple)
        .map(|q| q.z)
        .unwrap_or_else(|| int(2));
    if z >= int(2) && z <= z_upper(k) {
        z
    } else {
        int(2)
    }
}

fn check_graph(path: &Path, k: usize, lambda: Option<&str>, asserted: bool) -> Result<Outcome, Error> {
    let g = read_graph(path)?;
    if k < 3 {
        return Err(Error::KTooSmall { k, min: 3 });
    }
    let lambda = parse_fraction(lambda)?.unwrap_or_else(|| default_lambda(k));
    let limits = Limits::default();
    let delta = g.min_degree().unwrap_or(0);
    let exact = g.order() > 0 && delta + 1 == k;
    let mut audits = Vec::new();
    let mut skipped = Vec::new();

    let basis = if exact {
        Some(establish_irreducibility(&g, k, asserted, &limits)?)
    } else {
        skipped.push(format!("irreducibility: minimum degree {delta} is not k - 1"));
        None
    };
    if g.order() > 0 && delta + 1 >= k {
        audits.extend(audit_counting_identities(&g, k)?);
    } else {
        skipped.push("degree sums: minimum degree below k - 1".into());
    }
    if let Some(basis) = basis {
        audits.push(audit_kernel_magic(&g, k, basis)?);
        if k < 5 {
            skipped.push("q bounds: need k >= 5".into());
        } else if g.is_complete() {
            skipped.push("q bounds: complete graph".into());
        } else {
            audits.extend(audit_q_lemma(&g, k, basis)?);
        }
        audits.push(audit_beta_lemma(&g, k, &lambda, basis)?);
        if k >= 4 {
            audits.push(audit_average_degree(&g, k, basis)?);
        }
        // These audits speak only about irreducible graphs.
        if matches!(basis, IrreducibilityBasis::Refuted | IrreducibilityBasis::Unestablished) {
            for a in audits.iter_mut().filter(|a| !a.id.starts_with("degree-sum") && a.id != "high-low-cut") {
                a.applicable = false;
            }
            skipped.push("irreducibility-dependent audits: irreducibility not established".into());
        }
    } else {
        skipped.push("kernel, q, beta and average-degree audits: need minimum degree k - 1".into());
    }
    if g.order() > 0 && g.is_connected() {
        audits.extend(check_alpha_bound(&g)?);
    } else {
        skipped.push("alpha bounds: graph is not connected".into());
    }
    let pass = audits.iter().all(|a| a.pass || !a.applicable);
    let body = CheckPayload {
        graph: GraphSummary::of(&g),
        k,
        irreducibility: basis,
        audits,
        skipped,
        pass,
    };
    let mut text = format!(
        "graph: {} vertices, {} edges, k = {k}\n",
        body.graph.order, body.graph.size
    );
    if let Some(b) = body.irreducibility {
        let _ = writeln!(text, "irreducibility: {}", serde_json::to_value(b)?.as_str().unwrap_or(""));
    }
    for a in &body.audits {
        let _ = writeln!(text, "  {}", a.summary());
        if let Some(x) = &a.context.extraction {
            let found = match &x.reduction {
                Some(r) => format!("AT-reduction on {:?}", r.vertices),
                None => "no reduction found".into(),
            };
            let _ = writeln!(text, "    extraction ({}): {found}", x.rule);
        }
    }
    for s in &body.skipped {
        let _ = writeln!(text, "  skipped {s}");
    }
    let _ = writeln!(text, "{}", if pass { "all audits pass" } else { "violation found" });
    outcome("check-graph", if pass { 0 } else { 1 }, &body, text)
}

#[derive(Serialize)]
struct AtPayload {
    graph: GraphSummary,
    f: Vec<usize>,
    verdict: ATVerdict,
}

fn at_check(graph: &Path, f: &Path) -> Result<Outcome, Error> {
    let g = read_graph(graph)?;
    let f = ListSizeAssignment::parse(&read(f)?, g.order())?;
    let verdict = is_fat(&g, &f)?;
    let mut text = String::new();
    if verdict.is_at {
        let _ = writeln!(text, "f-AT: yes (witness orientation emitted)");
        if let Some((e, o)) = verdict.parity {
            let _ = writeln!(text, "even Eulerian subgraphs {e}, odd {o}");
        }
        for (t, h) in verdict.witness.iter().flatten() {
            let _ = writeln!(text, "{t} -> {h}");
        }
    } else {
        let _ = writeln!(
            text,
            "f-AT: no ({} out-degree sequences checked)",
            verdict.sequences_checked
        );
    }
    let body = AtPayload {
        graph: GraphSummary::of(&g),
        f: f.values().to_vec(),
        verdict,
    };
    outcome("at-check", 0, &body, text)
}
