//! Randomized cross-checks of the closed forms against direct computation
//! and the brute-force oracle.

use serde::Serialize;

use crate::assoc::{ass, ass_power, ass_product, ass_sum_power};
use crate::cache;
use crate::corpus::{self, Shape};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::oracle::{oracle_ass, oracle_v_local};
use crate::prime::{MonomialPrime, PrimeSet};
use crate::structure::{
    ci_ass, ci_v, components, edge_ideal, graph_component_count, vertex_split, Graph,
};
use crate::vnumber::{v_local, v_number, v_power, v_product, v_product_local, v_sum, v_sum_local};

/// One `(alpha, k, v(I^k))` triple seen during a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VObservation {
    pub alpha: u64,
    pub k: usize,
    pub value: u64,
}

impl VObservation {
    pub fn respects_lower_bound(&self) -> bool {
        self.value + 1 >= self.alpha * self.k as u64
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub checks: usize,
    pub discrepancies: Vec<String>,
    #[serde(skip)]
    pub observations: Vec<VObservation>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            suite: name.to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.discrepancies.push(what());
        }
    }

    fn observe(&mut self, ideal: &MonomialIdeal, k: usize, value: u64) -> Result<()> {
        let obs = VObservation {
            alpha: ideal.alpha()?,
            k,
            value,
        };
        self.check(obs.respects_lower_bound(), || {
            format!("lower bound fails for ({ideal})^{k}: v = {value}")
        });
        self.observations.push(obs);
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Settings shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub k_max: usize,
    pub oracle_budget: u128,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 7,
            cases: 50,
            k_max: 3,
            oracle_budget: crate::oracle::DEFAULT_BUDGET,
        }
    }
}

pub const PAIR_SHAPE: Shape = Shape {
    max_vars: 4,
    max_gens: 4,
    max_exp: 3,
    max_deg: 3,
};
pub const CI_SHAPE: Shape = Shape {
    max_vars: 8,
    max_gens: 4,
    max_exp: 4,
    max_deg: 4,
};
pub const ORACLE_SHAPE: Shape = Shape {
    max_vars: 5,
    max_gens: 5,
    max_exp: 3,
    max_deg: 15,
};

fn block_part(prime: &MonomialPrime, ideal: &MonomialIdeal) -> Option<MonomialPrime> {
    MonomialPrime::from_mask(prime.ring(), prime.mask() & ideal.support_mask()).ok()
}

/// Product of disjoint-support ideals: associated primes, every local
/// value and the global minimum against direct computation on `(IJ)^k`.
pub fn product_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("product");
    let mut rng = corpus::rng(cfg.seed);
    for _ in 0..cfg.cases {
        let (i, j) = corpus::random_disjoint_pair(&mut rng, &PAIR_SHAPE);
        rep.cases += 1;
        let ij = i.product(&j)?;
        for k in 1..=cfg.k_max {
            let direct_ideal = cache::power(&ij, k)?;
            let direct = ass(&direct_ideal)?;
            let formula = ass_product(&i, &j, k)?;
            rep.check(direct == formula, || {
                format!("Ass(({i})({j}))^{k}: direct {direct} vs formula {formula}")
            });
            for p in &direct {
                let d = v_local(&direct_ideal, p)?;
                let f = v_product_local(&i, &j, p, k);
                rep.check(f.as_ref() == Ok(&d), || {
                    format!("v_{p}((({i})({j}))^{k}): direct {d} vs formula {f:?}")
                });
            }
            let d = v_number(&direct_ideal)?;
            let f = v_product(&i, &j, k)?;
            rep.check(d.value == f.value, || {
                format!(
                    "v((({i})({j}))^{k}): direct {} vs formula {}",
                    d.value, f.value
                )
            });
            rep.observe(&ij, k, d.value)?;
        }
    }
    Ok(rep)
}

/// Sum of disjoint-support ideals: `Ass((I+J)^k)`, every local value and
/// the global value against direct computation; at `k = 1` also
/// `v(I+J) = v(I) + v(J)`.
pub fn sum_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sum");
    let mut rng = corpus::rng(cfg.seed);
    for _ in 0..cfg.cases {
        let (i, j) = corpus::random_disjoint_pair(&mut rng, &PAIR_SHAPE);
        rep.cases += 1;
        let s = i.sum(&j)?;
        for k in 1..=cfg.k_max {
            let direct_ideal = cache::power(&s, k)?;
            let direct = ass(&direct_ideal)?;
            let formula = ass_sum_power(&i, &j, k)?;
            rep.check(direct == formula, || {
                format!("Ass(({i}) + ({j}))^{k}: direct {direct} vs formula {formula}")
            });
            for big in &direct {
                let d = v_local(&direct_ideal, big)?;
                let f = match (block_part(big, &i), block_part(big, &j)) {
                    (Some(p), Some(q)) => v_sum_local(&i, &j, &p, &q, k),
                    _ => Err(crate::Error::NotAssociated(big.to_string())),
                };
                rep.check(f.as_ref() == Ok(&d), || {
                    format!("v_{big}((({i}) + ({j}))^{k}): direct {d} vs formula {f:?}")
                });
            }
            let d = v_number(&direct_ideal)?;
            let f = v_sum(&i, &j, k)?;
            rep.check(d.value == f.value, || {
                format!(
                    "v((({i}) + ({j}))^{k}): direct {} vs formula {}",
                    d.value, f.value
                )
            });
            if k == 1 {
                let parts = v_number(&i)?.value + v_number(&j)?.value;
                rep.check(d.value == parts, || {
                    format!("v(({i}) + ({j})) = {} but v(I) + v(J) = {parts}", d.value)
                });
            }
            rep.observe(&s, k, d.value)?;
        }
    }
    Ok(rep)
}

/// Monomial complete intersections: closed forms for `Ass(I^k)` and
/// `v(I^k)` against direct computation.
pub fn ci_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("ci");
    let mut rng = corpus::rng(cfg.seed);
    for _ in 0..cfg.cases {
        let i = corpus::random_complete_intersection(&mut rng, &CI_SHAPE);
        rep.cases += 1;
        let closed = ci_ass(&i)?;
        for k in 1..=cfg.k_max {
            let direct = ass_power(&i, k)?;
            rep.check(direct == closed, || {
                format!("Ass(({i})^{k}): direct {direct} vs closed form {closed}")
            });
            let d = v_power(&i, k)?.value;
            let f = ci_v(&i, k)?;
            rep.check(d == f, || {
                format!("v(({i})^{k}): direct {d} vs closed form {f}")
            });
            rep.observe(&i, k, d)?;
        }
    }
    Ok(rep)
}

/// Equigenerated vertex splittable ideals: powers of maximal ideals
/// (`n <= 4`, `d <= 3`) and complete-graph edge ideals (`n <= 5`).
/// The recognizer must accept and `v(I^k) = alpha k - 1` must hold.
pub fn vsplit_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("vsplit");
    let mut corpus_ideals = Vec::new();
    for n in 1..=4 {
        let ring = crate::ring::AmbientRing::indexed("x", n)?;
        let m = MonomialPrime::maximal(&ring).to_ideal();
        for d in 1..=3 {
            corpus_ideals.push(m.power(d)?);
        }
    }
    for n in 2..=5 {
        corpus_ideals.push(edge_ideal(&Graph::complete("x", n))?);
    }
    for i in &corpus_ideals {
        rep.cases += 1;
        let tree = vertex_split(i);
        rep.check(tree.as_ref().is_some_and(|t| t.validate()), || {
            format!("({i}) not recognized as vertex splittable")
        });
        let alpha = i.alpha()?;
        for k in 1..=cfg.k_max {
            let d = v_power(i, k)?.value;
            rep.check(d + 1 == alpha * k as u64, || {
                format!("v(({i})^{k}) = {d}, expected {}", alpha * k as u64 - 1)
            });
            rep.observe(i, k, d)?;
        }
    }
    Ok(rep)
}

/// Edge ideals of random graphs: ideal components mirror graph components,
/// and `v(I(G)^k) >= 2k + c(G) - 2` on every computed power.
pub fn edge_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("edge");
    let mut rng = corpus::rng(cfg.seed);
    for _ in 0..cfg.cases {
        let g = corpus::random_graph(&mut rng, 6, 0.35);
        rep.cases += 1;
        let i = edge_ideal(&g)?;
        let c = graph_component_count(&g)?;
        let parts = components(&i)?.len();
        rep.check(parts == c, || {
            format!("I(G) = ({i}): {parts} ideal components, c(G) = {c}")
        });
        for k in 1..=cfg.k_max {
            let d = v_power(&i, k)?.value;
            let bound = 2 * k as i64 + c as i64 - 2;
            rep.check(d as i64 >= bound, || {
                format!("v(({i})^{k}) = {d} below 2k + c - 2 = {bound}")
            });
            rep.observe(&i, k, d)?;
        }
    }
    Ok(rep)
}

/// Random ideals: the oracle's witnessed primes equal `Ass(I)` and its
/// least witness degrees equal the local v-numbers.
pub fn oracle_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("oracle");
    let mut rng = corpus::rng(cfg.seed);
    for _ in 0..cfg.cases {
        let i = corpus::random_ideal(&mut rng, &ORACLE_SHAPE);
        rep.cases += 1;
        let fast = ass(&i)?;
        let witnessed = oracle_ass(&i, cfg.oracle_budget)?;
        let slow: PrimeSet = witnessed.iter().map(|w| w.prime().clone()).collect();
        rep.check(fast == slow, || {
            format!("Ass({i}): {fast} vs oracle {slow}")
        });
        for w in &witnessed {
            if !fast.contains(w.prime()) {
                continue;
            }
            let v = v_local(&i, w.prime())?;
            let o = oracle_v_local(&i, w.prime(), cfg.oracle_budget)?;
            rep.check(v == o && o == w.degree(), || {
                format!("v_{}({i}): {v} vs oracle {o}", w.prime())
            });
        }
        let v = v_number(&i)?.value;
        rep.observe(&i, 1, v)?;
    }
    Ok(rep)
}
