//! Subcommands and their reports.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vfun_core::structure::{
    certified_fit, ci_ass, ci_v, components, disjoint_sum_vbound, edge_ideal, edge_v_asymptotic,
    graph_component_count, is_complete_intersection, v_function_certified, vertex_split,
    vertex_splittable_v,
};
use vfun_core::verify::{self, SuiteConfig, SuiteReport};
use vfun_core::{
    ass, ass_infty, ass_star, fit_linear, fixtures, oracle, v_local, v_number, v_product, v_sum,
    Graph, LinearFit, MonomialIdeal, MonomialPrime, PrimeSet, Ring, StabilityConfig, VTable,
    VValue,
};

use crate::parse::{self, IdealDocument, ParseError};
use crate::report::{Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "vfun",
    version,
    about = "Associated primes and v-numbers of monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Largest power computed.
    #[arg(long, global = true)]
    pub kmax: Option<usize>,

    /// Number of trailing powers that must agree before a tail is called stable.
    #[arg(long, global = true, default_value_t = 2)]
    pub window: usize,

    /// Prime as comma-separated variable names.
    #[arg(long, global = true)]
    pub prime: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for the random corpora of `verify`.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,

    /// Number of random cases per `verify` suite.
    #[arg(long, global = true)]
    pub cases: Option<usize>,

    /// Largest divisor count the oracle will enumerate.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_BUDGET)]
    pub oracle_budget: u128,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Report wall-clock time (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file; `-` or absent reads stdin.
    pub input: Option<PathBuf>,

    /// Read the input as an edge list and use its edge ideal.
    #[arg(long)]
    pub graph: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Associated primes of I.
    Ass(Input),
    /// Associated primes of I^k for k <= kmax and their union.
    AssStar(Input),
    /// Stable associated primes read off the tail of Ass(I^k).
    AssInfty(Input),
    /// v(I) and a prime attaining it.
    Vnum(Input),
    /// v_p(I) for the prime given with --prime.
    VnumLocal(Input),
    /// v(I^k) for k <= kmax with a fitted line.
    Vfunction(Input),
    /// Connected components of I.
    Components(Input),
    /// Edge ideal of a graph and its eventual v-function.
    EdgeIdeal(Input),
    /// Closed forms for monomial complete intersections.
    Ci(Input),
    /// Vertex splitting of I.
    Vsplit(Input),
    /// v((I+J)^k) from the parts; the input holds I and J separated by `;`.
    SumV(Input),
    /// v((IJ)^k) from the factors; the input holds I and J separated by `;`.
    ProductV(Input),
    /// Lower bound for v((I_1+...+I_t)^k) over disjoint parts.
    Bound(Input),
    /// Brute-force witnesses for Ass(I) and v(I).
    Oracle(Input),
    /// Randomized cross-checks of the closed forms.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Rerun a published fixture.
    Repro {
        #[arg(value_enum)]
        fixture: Fixture,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Product,
    Sum,
    Ci,
    Vsplit,
    Edge,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Fixture {
    C5,
    #[value(alias = "ex58")]
    Ex56,
    Ex59,
    Cor55,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Compute(#[from] vfun_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 1,
            CliError::Compute(_) => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A finished report and whether it found a discrepancy.
pub struct Outcome {
    pub report: Report,
    pub discrepancy: bool,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report,
            discrepancy: false,
        }
    }
}

/// Reads the named file or, for `None` and `-`, the given stdin text.
pub type Reader<'a> = dyn FnMut(Option<&PathBuf>) -> CliResult<String> + 'a;

enum Loaded {
    Ideals(IdealDocument),
    Graph(Graph, IdealDocument),
}

impl Loaded {
    fn doc(&self) -> &IdealDocument {
        match self {
            Loaded::Ideals(d) | Loaded::Graph(_, d) => d,
        }
    }

    fn echo(&self) -> Value {
        match self {
            Loaded::Ideals(d) => json!({
                "ring": d.ring.to_string(),
                "ring_inferred": d.ring_inferred,
                "ideals": d.ideals.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
            }),
            Loaded::Graph(g, d) => json!({
                "vertices": g.vertices(),
                "edges": g.edges().iter().map(|&(a, b)| [&g.vertices()[a], &g.vertices()[b]]).collect::<Vec<_>>(),
                "ring": d.ring.to_string(),
                "ideals": d.ideals.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
            }),
        }
    }
}

fn load(input: &Input, read: &mut Reader, force_graph: bool) -> CliResult<Loaded> {
    let text = read(input.input.as_ref())?;
    if input.graph || force_graph {
        let g = parse::parse_graph(&text)?;
        let i = edge_ideal(&g)?;
        let doc = IdealDocument {
            ring: i.ring().clone(),
            ideals: vec![i],
            ring_inferred: false,
        };
        Ok(Loaded::Graph(g, doc))
    } else {
        Ok(Loaded::Ideals(parse::parse_document(&text)?))
    }
}

fn single(loaded: &Loaded) -> CliResult<&MonomialIdeal> {
    match loaded.doc().ideals.as_slice() {
        [i] => Ok(i),
        other => Err(CliError::Usage(format!(
            "expected one ideal, found {}",
            other.len()
        ))),
    }
}

fn pair(loaded: &Loaded) -> CliResult<(&MonomialIdeal, &MonomialIdeal)> {
    match loaded.doc().ideals.as_slice() {
        [i, j] => Ok((i, j)),
        other => Err(CliError::Usage(format!(
            "expected two ideals separated by `;`, found {}",
            other.len()
        ))),
    }
}

fn prime_json(p: &MonomialPrime) -> Value {
    Value::String(p.to_string())
}

fn primes_json(s: &PrimeSet) -> Value {
    Value::Array(s.iter().map(prime_json).collect())
}

fn fit_json(fit: &Option<LinearFit>) -> Option<Value> {
    fit.as_ref().map(|f| {
        json!({
            "slope": f.slope,
            "intercept": f.intercept,
            "vstab": f.vstab,
            "certified": f.certified,
        })
    })
}

fn vvalue_row(k: usize, v: &VValue, certified: bool) -> Value {
    json!({ "k": k, "value": v.value, "prime": prime_json(&v.prime), "certified": certified })
}

fn table_rows(table: &VTable) -> Vec<Value> {
    table
        .per_k
        .iter()
        .map(|(&k, v)| vvalue_row(k, v, true))
        .collect()
}

fn parse_prime(ring: &Ring, spec: Option<&str>) -> CliResult<MonomialPrime> {
    let spec = spec.ok_or_else(|| CliError::Usage("--prime is required".into()))?;
    let names: Vec<&str> = spec
        .trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if let Some(bad) = names.iter().find(|n| ring.index_of(n).is_none()) {
        return Err(CliError::Usage(format!(
            "--prime: unknown variable `{bad}`"
        )));
    }
    MonomialPrime::from_names(ring, &names).map_err(|e| CliError::Usage(format!("--prime: {e}")))
}

impl Cli {
    fn k_max(&self, default: usize) -> CliResult<usize> {
        match self.kmax.unwrap_or(default) {
            0 => Err(CliError::Usage("--kmax must be at least 1".into())),
            k => Ok(k),
        }
    }

    fn stability(&self) -> CliResult<StabilityConfig> {
        let cfg = StabilityConfig {
            k_max: self.k_max(6)?,
            window: self.window,
        };
        cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(cfg)
    }
}

/// Runs the parsed command; `read` supplies input text.
pub fn execute(cli: &Cli, read: &mut Reader) -> CliResult<Outcome> {
    let start = Instant::now();
    let mut outcome = dispatch(cli, read)?;
    if cli.timing {
        outcome.report.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(outcome)
}

fn dispatch(cli: &Cli, read: &mut Reader) -> CliResult<Outcome> {
    match &cli.command {
        Command::Ass(input) => {
            let loaded = load(input, read, false)?;
            let i = single(&loaded)?;
            let a = ass(i)?;
            let mut r = Report::new("ass", loaded.echo());
            r.result = json!({ "primes": primes_json(&a), "count": a.len() });
            r.certified = true;
            Ok(Outcome::ok(r))
        }
        Command::AssStar(input) | Command::AssInfty(input) => {
            let loaded = load(input, read, false)?;
            let i = single(&loaded)?;
            let star = matches!(cli.command, Command::AssStar(_));
            let rep = if star {
                ass_star(i, cli.k_max(6)?)?
            } else {
                ass_infty(i, cli.stability()?)?
            };
            let mut r = Report::new(if star { "ass-star" } else { "ass-infty" }, loaded.echo());
            r.per_k = rep
                .per_k
                .iter()
                .map(|(&k, s)| json!({ "k": k, "primes": primes_json(s), "count": s.len(), "certified": true }))
                .collect();
            r.result = json!({
                "union": primes_json(&rep.union),
                "stable_set": primes_json(&rep.stable_set),
                "stable_from": rep.stable_from,
                "window": rep.window,
            });
            r.certified = rep.verified;
            Ok(Outcome::ok(r))
        }
        Command::Vnum(input) => {
            let loaded = load(input, read, false)?;
            let v = v_number(single(&loaded)?)?;
            let mut r = Report::new("vnum", loaded.echo());
            r.result = json!({ "value": v.value, "prime": prime_json(&v.prime) });
            r.certified = true;
            Ok(Outcome::ok(r))
        }
        Command::VnumLocal(input) => {
            let loaded = load(input, read, false)?;
            let i = single(&loaded)?;
            let p = parse_prime(i.ring(), cli.prime.as_deref())?;
            let v = v_local(i, &p)?;
            let mut r = Report::new("vnum-local", loaded.echo());
            r.result = json!({ "value": v, "prime": prime_json(&p) });
            r.certified = true;
            Ok(Outcome::ok(r))
        }
        Command::Vfunction(input) => {
            let loaded = load(input, read, false)?;
            let table = v_function_certified(single(&loaded)?, cli.k_max(6)?)?;
            let mut r = Report::new("vfunction", loaded.echo());
            r.result = json!({ "alpha": table.alpha, "values": table.values() });
            r.per_k = table_rows(&table);
            r.fit = fit_json(&table.fit);
            r.certified = table.fit.is_some_and(|f| f.certified);
            Ok(Outcome::ok(r))
        }
        Command::Components(input) => {
            let loaded = load(input, read, false)?;
            let parts = components(single(&loaded)?)?;
            let mut r = Report::new("components", loaded.echo());
            r.result = json!({
                "count": parts.len(),
                "components": parts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            r.certified = true;
            Ok(Outcome::ok(r))
        }
        Command::EdgeIdeal(input) => {
            let loaded = load(input, read, true)?;
            let Loaded::Graph(g, doc) = &loaded else {
                unreachable!("graph input forced")
            };
            let i = &doc.ideals[0];
            let c = graph_component_count(g)?;
            let (slope, intercept) = edge_v_asymptotic(g)?;
            let mut r = Report::new("edge-ideal", loaded.echo());
            r.result = json!({
                "ideal": i.to_string(),
                "components": c,
                "eventual": { "slope": slope, "intercept": intercept },
            });
            // the eventual line is a theorem; vstab is only observed
            r.certified = true;
            if let Some(k_max) = cli.kmax {
                let table = v_function_certified(i, k_max.max(1))?;
                r.per_k = table_rows(&table);
                r.fit = fit_json(&table.fit);
            }
            Ok(Outcome::ok(r))
        }
        Command::Ci(input) => {
            let loaded = load(input, read, false)?;
            let i = single(&loaded)?;
            if !is_complete_intersection(i) {
                return Err(vfun_core::Error::NotCompleteIntersection.into());
            }
            let primes = ci_ass(i)?;
            let mut r = Report::new("ci", loaded.echo());
            r.result = json!({ "primes": primes_json(&primes) });
            r.per_k = (1..=cli.k_max(6)?)
                .map(|k| Ok(json!({ "k": k, "value": ci_v(i, k)?, "certified": true })))
                .collect::<CliResult<_>>()?;
            r.fit = fit_json(&certified_fit(i)?);
            r.certified = true;
            Ok(Outcome::ok(r))
        }
        Command::Vsplit(input) => {
            let loaded = load(input, read, false)?;
            let i = single(&loaded)?;
            let tree = vertex_split(i);
            let mut r = Report::new("vsplit", loaded.echo());
            r.result = json!({
                "splittable": tree.is_some(),
                "equigenerated": i.is_equigenerated(),
                "tree": tree.as_ref().map(|t| t.render()),
            });
            if tree.is_some() && i.is_equigenerated() {
                r.per_k = (1..=cli.k_max(6)?)
                    .map(|k| Ok(json!({ "k": k, "value": vertex_splittable_v(i, k)?, "certified": true })))
                    .collect::<CliResult<_>>()?;
                r.fit = fit_json(&certified_fit(i)?);
            }
            r.certified = tree.is_some();
            Ok(Outcome::ok(r))
        }
        Command::SumV(input) | Command::ProductV(input) => {
            let loaded = load(input, read, false)?;
            let (i, j) = pair(&loaded)?;
            let sum = matches!(cli.command, Command::SumV(_));
            let mut per_k = std::collections::BTreeMap::new();
            for k in 1..=cli.k_max(6)? {
                let v = if sum {
                    v_sum(i, j, k)?
                } else {
                    v_product(i, j, k)?
                };
                per_k.insert(k, v);
            }
            let alpha = if sum { i.sum(j)? } else { i.product(j)? }.alpha()?;
            let table = fit_linear(VTable {
                alpha,
                per_k,
                fit: None,
            });
            let mut r = Report::new(if sum { "sum-v" } else { "product-v" }, loaded.echo());
            r.result = json!({ "alpha": table.alpha, "values": table.values() });
            r.per_k = table_rows(&table);
            r.fit = fit_json(&table.fit);
            r.certified = false;
            Ok(Outcome::ok(r))
        }
        Command::Bound(input) => {
            let loaded = load(input, read, false)?;
            let ideals = &loaded.doc().ideals;
            let k_max = cli.k_max(6)?;
            let mut r = Report::new("bound", loaded.echo());
            let mut parts = Value::Null;
            let mut certified = true;
            for k in 1..=k_max {
                let b = disjoint_sum_vbound(ideals, k, k_max, cli.window)?;
                certified &= b.equality_certified;
                parts = serde_json::to_value(&b.parts).expect("plain data");
                r.per_k.push(json!({
                    "k": k,
                    "bound": b.bound,
                    "equality_scope": b.equality_scope,
                    "hypothesis_certified": b.hypothesis_certified,
                    "certified": b.equality_certified,
                }));
            }
            r.result = json!({ "parts": parts });
            r.certified = certified;
            Ok(Outcome::ok(r))
        }
        Command::Oracle(input) => {
            let loaded = load(input, read, false)?;
            let i = single(&loaded)?;
            let witnesses = oracle::oracle_ass(i, cli.oracle_budget)?;
            let v = witnesses
                .iter()
                .map(|w| w.degree())
                .min()
                .expect("proper ideals have witnesses");
            let fast = ass(i)?;
            let slow: PrimeSet = witnesses.iter().map(|w| w.prime().clone()).collect();
            let mut r = Report::new("oracle", loaded.echo());
            r.result = json!({
                "witnesses": witnesses
                    .iter()
                    .map(|w| json!({
                        "prime": prime_json(w.prime()),
                        "witness": w.witness().display(i.ring()).to_string(),
                        "degree": w.degree(),
                    }))
                    .collect::<Vec<_>>(),
                "v": v,
                "agrees_with_ass": fast == slow,
            });
            r.certified = true;
            Ok(Outcome {
                report: r,
                discrepancy: fast != slow,
            })
        }
        Command::Verify { suite } => verify_cmd(cli, *suite),
        Command::Repro { fixture } => repro(cli, *fixture),
    }
}

fn suite_json(rep: &SuiteReport) -> Value {
    json!({
        "suite": rep.suite,
        "cases": rep.cases,
        "checks": rep.checks,
        "discrepancies": rep.discrepancies,
        "lower_bound_violations": rep.observations.iter().filter(|o| !o.respects_lower_bound()).count(),
    })
}

type SuiteFn = fn(&SuiteConfig) -> vfun_core::Result<SuiteReport>;

fn verify_cmd(cli: &Cli, suite: Suite) -> CliResult<Outcome> {
    let (run, cases, k_max): (SuiteFn, usize, usize) = match suite {
        Suite::Product => (verify::product_suite, 50, 3),
        Suite::Sum => (verify::sum_suite, 50, 3),
        Suite::Ci => (verify::ci_suite, 50, 4),
        Suite::Vsplit => (verify::vsplit_suite, 0, 4),
        Suite::Edge => (verify::edge_suite, 50, 3),
        Suite::Oracle => (verify::oracle_suite, 100, 1),
    };
    let cfg = SuiteConfig {
        seed: cli.seed,
        cases: cli.cases.unwrap_or(cases),
        k_max: cli.k_max(k_max)?,
        oracle_budget: cli.oracle_budget,
    };
    let rep = run(&cfg)?;
    let mut r = Report::new(
        "verify",
        json!({ "suite": rep.suite, "seed": cfg.seed, "kmax": cfg.k_max }),
    );
    r.result = suite_json(&rep);
    r.certified = rep.passed();
    Ok(Outcome {
        report: r,
        discrepancy: !rep.passed(),
    })
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    mismatches: &mut Vec<String>,
    what: &str,
    got: T,
    want: T,
) {
    if got != want {
        mismatches.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

fn repro(cli: &Cli, fixture: Fixture) -> CliResult<Outcome> {
    let mut bad = Vec::new();
    let mut r;
    match fixture {
        Fixture::C5 => {
            let i = fixtures::c5();
            let table = v_function_certified(&i, cli.k_max(5)?.max(3))?;
            for (&k, v) in &table.per_k {
                let want = if k == 1 { 2 } else { 2 * k as u64 - 1 };
                expect_eq(&mut bad, &format!("v(I^{k})"), v.value, want);
            }
            let fit = table.fit.map(|f| (f.slope, f.intercept, f.vstab));
            expect_eq(&mut bad, "fit", fit, Some((2, -1, 2)));
            r = Report::new(
                "repro c5",
                json!({ "ideals": [i.to_string()], "ring": i.ring().to_string() }),
            );
            r.result = json!({ "values": table.values() });
            r.per_k = table_rows(&table);
            r.fit = fit_json(&table.fit);
        }
        Fixture::Ex56 => {
            let (i1, i2) = fixtures::two_block_sum();
            let k_max = cli.k_max(4)?;
            let mut per_k = std::collections::BTreeMap::new();
            for k in 1..=k_max {
                let v = v_sum(&i1, &i2, k)?;
                if k >= 2 {
                    expect_eq(&mut bad, &format!("v_sum k={k}"), v.value, 2 * k as u64 + 3);
                }
                per_k.insert(k, v);
            }
            let direct = v_number(&i1.sum(&i2)?.power(2)?)?;
            expect_eq(
                &mut bad,
                "direct v((I1+I2)^2)",
                direct.value,
                per_k.get(&2).map_or(7, |v| v.value),
            );
            let table = fit_linear(VTable {
                alpha: i1.sum(&i2)?.alpha()?,
                per_k,
                fit: None,
            });
            r = Report::new(
                "repro ex56",
                json!({ "ring": i1.ring().to_string(), "ideals": [i1.to_string(), i2.to_string()] }),
            );
            r.result = json!({ "values": table.values(), "direct_k2": direct.value });
            r.per_k = table_rows(&table);
            r.fit = fit_json(&table.fit);
        }
        Fixture::Ex59 => {
            let i = fixtures::mixed_degree_splittable();
            let tree = vertex_split(&i);
            let split = tree.as_ref().and_then(|t| match t {
                vfun_core::SplitTree::Node {
                    var, left, right, ..
                } => Some((
                    i.ring().name(*var).to_string(),
                    left.ideal().to_string(),
                    right.ideal().to_string(),
                )),
                vfun_core::SplitTree::Leaf(_) => None,
            });
            expect_eq(
                &mut bad,
                "top split",
                split.clone(),
                Some(("x1".into(), "x1, x2, x3^2".into(), "x3^3".into())),
            );
            let table = v_function_certified(&i, cli.k_max(6)?.max(4))?;
            for (&k, v) in table.per_k.range(2..) {
                expect_eq(&mut bad, &format!("v(I^{k})"), v.value, 2 * k as u64);
            }
            r = Report::new(
                "repro ex59",
                json!({ "ideals": [i.to_string()], "ring": i.ring().to_string() }),
            );
            r.result = json!({
                "tree": tree.as_ref().map(|t| t.render()),
                "top_split": split.map(|(x, a, b)| json!({ "var": x, "left": a, "right": b })),
                "values": table.values(),
            });
            r.per_k = table_rows(&table);
            r.fit = fit_json(&table.fit);
        }
        Fixture::Cor55 => {
            let k_max = cli.k_max(6)?.max(3);
            let mut graphs = Vec::new();
            for g in fixtures::component_graphs() {
                let i = edge_ideal(&g)?;
                let c = graph_component_count(&g)?;
                let table = v_function_certified(&i, k_max)?;
                let fit = table.fit;
                let got = fit.map(|f| (f.slope, f.intercept));
                expect_eq(
                    &mut bad,
                    &format!("fit for c={c}"),
                    got,
                    Some((2, c as i64 - 2)),
                );
                if let Some(f) = fit {
                    if f.vstab > 4 {
                        bad.push(format!("vstab {} > 4 for c={c}", f.vstab));
                    }
                }
                graphs.push(json!({
                    "ideal": i.to_string(),
                    "components": c,
                    "values": table.values(),
                    "fit": fit_json(&fit),
                }));
            }
            r = Report::new("repro cor55", json!({ "graphs": graphs.len() }));
            r.result = json!({ "graphs": graphs });
        }
    }
    r.result["mismatches"] = json!(bad);
    r.result["matches"] = json!(bad.is_empty());
    r.certified = false;
    Ok(Outcome {
        report: r,
        discrepancy: !bad.is_empty(),
    })
}
