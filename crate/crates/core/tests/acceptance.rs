//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use vfun_core::structure::{edge_ideal, graph_component_count, vertex_split};
use vfun_core::verify::{self, SuiteConfig, SuiteReport, VObservation};
use vfun_core::{fixtures, v_function, v_number, v_sum, SplitTree, VTable};

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

#[derive(Default)]
struct Observed(Vec<VObservation>);

impl Observed {
    fn table(&mut self, t: &VTable) {
        for (&k, v) in &t.per_k {
            self.0.push(VObservation {
                alpha: t.alpha,
                k,
                value: v.value,
            });
        }
    }
}

fn c5(obs: &mut Observed) -> Outcome {
    let t = v_function(&fixtures::c5(), 5).unwrap();
    obs.table(&t);
    let values = t.values();
    let fit = t.fit.map(|f| (f.slope, f.intercept, f.vstab));
    if values == [2, 3, 5, 7, 9] && fit == Some((2, -1, 2)) {
        pass(format!("v = {values:?}, fit 2k-1 from k = 2"))
    } else {
        fail(format!("v = {values:?}, fit {fit:?}"))
    }
}

fn graphs(obs: &mut Observed) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for g in fixtures::component_graphs() {
        let c = graph_component_count(&g).unwrap() as i64;
        let t = v_function(&edge_ideal(&g).unwrap(), 6).unwrap();
        obs.table(&t);
        let fit = t.fit.map(|f| (f.slope, f.intercept, f.vstab));
        let good = matches!(fit, Some((2, b, s)) if b == c - 2 && s <= 4);
        ok &= good;
        notes.push(format!("c = {c}: v = {:?}, fit {fit:?}", t.values()));
    }
    Outcome {
        ok,
        detail: notes.join("; "),
    }
}

fn two_block(obs: &mut Observed) -> Outcome {
    let (i1, i2) = fixtures::two_block_sum();
    let mut values = Vec::new();
    for k in 2..=4 {
        let v = v_sum(&i1, &i2, k).unwrap().value;
        obs.0.push(VObservation {
            alpha: 2,
            k,
            value: v,
        });
        values.push(v);
    }
    let direct = v_number(&i1.sum(&i2).unwrap().power(2).unwrap())
        .unwrap()
        .value;
    obs.0.push(VObservation {
        alpha: 2,
        k: 2,
        value: direct,
    });
    if values == [7, 9, 11] && direct == values[0] {
        pass(format!("v_sum k=2..4 = {values:?}, direct k=2 = {direct}"))
    } else {
        fail(format!("v_sum k=2..4 = {values:?}, direct k=2 = {direct}"))
    }
}

fn mixed_degree(obs: &mut Observed) -> Outcome {
    let i = fixtures::mixed_degree_splittable();
    let split = match vertex_split(&i) {
        Some(SplitTree::Node {
            var, left, right, ..
        }) => Some((
            i.ring().name(var).to_string(),
            left.ideal().to_string(),
            right.ideal().to_string(),
        )),
        _ => None,
    };
    let expected = Some((
        "x1".to_string(),
        "x1, x2, x3^2".to_string(),
        "x3^3".to_string(),
    ));
    let t = v_function(&i, 6).unwrap();
    obs.table(&t);
    let tail: Vec<u64> = t.per_k.range(2..).map(|(_, v)| v.value).collect();
    let fit = t.fit.map(|f| (f.slope, f.intercept));
    if split == expected && tail == [4, 6, 8, 10, 12] && fit == Some((2, 0)) {
        pass(format!("split at x1, v k=2..6 = {tail:?}, fit 2k"))
    } else {
        fail(format!("split {split:?}, v k=2..6 = {tail:?}, fit {fit:?}"))
    }
}

fn suite(
    obs: &mut Observed,
    run: fn(&SuiteConfig) -> vfun_core::Result<SuiteReport>,
    cfg: SuiteConfig,
) -> Outcome {
    let rep = run(&cfg).unwrap();
    obs.0.extend(rep.observations.iter().copied());
    let line = format!(
        "{} cases, {} checks, {} discrepancies",
        rep.cases,
        rep.checks,
        rep.discrepancies.len()
    );
    if rep.passed() {
        pass(line)
    } else {
        fail(format!("{line}: {}", rep.discrepancies.join(" | ")))
    }
}

fn cfg(cases: usize, k_max: usize) -> SuiteConfig {
    SuiteConfig {
        seed: 7,
        cases,
        k_max,
        ..Default::default()
    }
}

fn main() -> ExitCode {
    let mut obs = Observed::default();
    type Check = fn(&mut Observed) -> Outcome;
    let checks: [(usize, &str, Duration, Check); 8] = [
        (1, "C5 v-function", Duration::from_secs(60), c5),
        (
            2,
            "component count graphs",
            Duration::from_secs(300),
            graphs,
        ),
        (
            3,
            "15-variable two-block sum",
            Duration::from_secs(600),
            two_block,
        ),
        (
            4,
            "mixed-degree vertex splittable ideal",
            Duration::MAX,
            mixed_degree,
        ),
        (5, "complete intersection suite", Duration::MAX, |o| {
            suite(o, verify::ci_suite, cfg(50, 4))
        }),
        (6, "disjoint product suite", Duration::MAX, |o| {
            suite(o, verify::product_suite, cfg(50, 3))
        }),
        (7, "disjoint sum suite", Duration::MAX, |o| {
            suite(o, verify::sum_suite, cfg(50, 3))
        }),
        (8, "oracle equivalence", Duration::from_secs(600), |o| {
            suite(o, verify::oracle_suite, cfg(100, 1))
        }),
    ];
    let mut lines = Vec::new();
    for (id, name, limit, check) in checks {
        let start = Instant::now();
        let mut out = check(&mut obs);
        let took = start.elapsed();
        if took > limit {
            out.ok = false;
            out.detail = format!("{} (took {took:?}, limit {limit:?})", out.detail);
        }
        lines.push((id, name, out, took));
    }

    let violations = obs.0.iter().filter(|o| !o.respects_lower_bound()).count();
    let bound = if violations == 0 {
        pass(format!("{} values checked", obs.0.len()))
    } else {
        fail(format!(
            "{violations} of {} values below alpha k - 1",
            obs.0.len()
        ))
    };
    lines.push((9, "lower bound alpha k - 1", bound, Duration::ZERO));

    let start = Instant::now();
    let vs = suite(&mut obs, verify::vsplit_suite, cfg(0, 4));
    lines.push((
        10,
        "equigenerated vertex splittable suite",
        vs,
        start.elapsed(),
    ));

    let mut failed = 0;
    for (id, name, out, took) in &lines {
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {id:>2} {tag} {name}: {} [{:.2?}]",
            out.detail, took
        );
        failed += usize::from(!out.ok);
    }
    println!(
        "{} of {} criteria passed",
        lines.len() - failed,
        lines.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
