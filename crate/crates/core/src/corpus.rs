//! Seeded random ideals for the cross-check suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::ring::{AmbientRing, Ring};
use crate::structure::Graph;

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape limits for random generators.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_exp: u32,
    pub max_deg: u64,
}

/// A random nonconstant monomial on the variables `vars` of an `n`-variable ring.
fn random_monomial(rng: &mut CorpusRng, n: usize, vars: &[usize], shape: &Shape) -> Monomial {
    loop {
        let mut e = vec![0u32; n];
        for &v in vars {
            if rng.gen_bool(0.5) {
                e[v] = rng.gen_range(1..=shape.max_exp);
            }
        }
        let m = Monomial::new(e);
        if !m.is_one() && m.degree() <= shape.max_deg {
            return m;
        }
    }
}

fn random_on(rng: &mut CorpusRng, ring: &Ring, vars: &[usize], shape: &Shape) -> MonomialIdeal {
    let count = rng.gen_range(1..=shape.max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| random_monomial(rng, ring.len(), vars, shape))
        .collect();
    minimalize(ring, gens).expect("arity matches")
}

/// Random proper ideal in `x1..xn`, `n <= shape.max_vars`.
pub fn random_ideal(rng: &mut CorpusRng, shape: &Shape) -> MonomialIdeal {
    let n = rng.gen_range(1..=shape.max_vars);
    let ring = AmbientRing::indexed("x", n).expect("valid names");
    let vars: Vec<usize> = (0..n).collect();
    random_on(rng, &ring, &vars, shape)
}

/// Random ideals `I` on `x1..xa` and `J` on `y1..yb` in the joint ring.
pub fn random_disjoint_pair(rng: &mut CorpusRng, shape: &Shape) -> (MonomialIdeal, MonomialIdeal) {
    let a = rng.gen_range(1..=shape.max_vars);
    let b = rng.gen_range(1..=shape.max_vars);
    let ring = AmbientRing::new(
        (1..=a)
            .map(|i| format!("x{i}"))
            .chain((1..=b).map(|i| format!("y{i}"))),
    )
    .expect("valid names");
    let left: Vec<usize> = (0..a).collect();
    let right: Vec<usize> = (a..a + b).collect();
    (
        random_on(rng, &ring, &left, shape),
        random_on(rng, &ring, &right, shape),
    )
}

/// Random monomial complete intersection: generators with pairwise disjoint
/// supports, `n <= max_vars`, `mu <= max_gens`, degrees `<= max_deg`.
pub fn random_complete_intersection(rng: &mut CorpusRng, shape: &Shape) -> MonomialIdeal {
    let mu = rng.gen_range(1..=shape.max_gens.min(shape.max_vars));
    let n = rng.gen_range(mu..=shape.max_vars);
    let ring = AmbientRing::indexed("x", n).expect("valid names");
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(rng);
    let mut gens = Vec::with_capacity(mu);
    let mut rest = &vars[..];
    for g in 0..mu {
        let remaining = mu - g - 1;
        let cap = (rest.len() - remaining).min(shape.max_deg as usize);
        let size = rng.gen_range(1..=cap);
        let (block, tail) = rest.split_at(size);
        rest = tail;
        let mut e = vec![0u32; n];
        for &v in block {
            e[v] = 1;
        }
        let mut deg = size as u64;
        let target = rng.gen_range(deg..=shape.max_deg);
        while deg < target {
            let v = block[rng.gen_range(0..block.len())];
            if e[v] < shape.max_exp {
                e[v] += 1;
                deg += 1;
            } else if block.iter().all(|&w| e[w] >= shape.max_exp) {
                break;
            }
        }
        gens.push(Monomial::new(e));
    }
    minimalize(&ring, gens).expect("arity matches")
}

/// Random simple graph on `v1..vn` with at least one edge.
pub fn random_graph(rng: &mut CorpusRng, max_vertices: usize, edge_prob: f64) -> Graph {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    loop {
        let mut g = Graph::new(names.clone());
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(edge_prob) {
                    g.add_edge(&names[a], &names[b]).expect("distinct vertices");
                }
            }
        }
        if !g.edges().is_empty() {
            return g;
        }
    }
}
