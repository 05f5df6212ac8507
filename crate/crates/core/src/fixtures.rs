//! Named ideals with known v-functions, used by regression tests and the
//! CLI `repro` command.

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::ring::{AmbientRing, Ring};
use crate::structure::{edge_ideal, Graph};

/// Edge ideal of the 5-cycle on `x1..x5`.
pub fn c5() -> MonomialIdeal {
    edge_ideal(&Graph::cycle("x", 5)).expect("C5 has edges")
}

/// Edge ideal of a 5-cycle on the variables `offset..offset+5` of `ring`.
pub fn c5_in(ring: &Ring, offset: usize) -> Result<MonomialIdeal> {
    let n = ring.len();
    let gens: Vec<Vec<u32>> = (0..5)
        .map(|i| {
            let mut e = vec![0; n];
            e[offset + i] = 1;
            e[offset + (i + 1) % 5] = 1;
            e
        })
        .collect();
    MonomialIdeal::from_exponents(ring, &gens)
}

/// Sum of two parts in 15 variables: `I1` is the 5-cycle on `x1..x5`,
/// `I2` the product of the 5-cycles on `y1..y5` and `z1..z5`.
/// `v((I1 + I2)^k) = 2k + 3` for `k >= 2`.
pub fn two_block_sum() -> (MonomialIdeal, MonomialIdeal) {
    let ring = AmbientRing::new(
        ["x", "y", "z"]
            .iter()
            .flat_map(|p| (1..=5).map(move |i| format!("{p}{i}"))),
    )
    .expect("valid names");
    let i1 = c5_in(&ring, 0).expect("in range");
    let j = c5_in(&ring, 5).expect("in range");
    let l = c5_in(&ring, 10).expect("in range");
    (i1, j.product(&l).expect("same ring"))
}

/// `(x1^2, x1x2, x1x3^2, x3^3)`: vertex splittable, not equigenerated,
/// with `v(I^k) = 2k` eventually.
pub fn mixed_degree_splittable() -> MonomialIdeal {
    let ring = AmbientRing::indexed("x", 3).expect("valid names");
    MonomialIdeal::from_exponents(&ring, &[[2, 0, 0], [1, 1, 0], [1, 0, 2], [0, 0, 3]])
        .expect("arity matches")
}

/// `C3 ⊔ K2` (two components) and `C3 ⊔ C3 ⊔ K2` (three components).
pub fn component_graphs() -> Vec<Graph> {
    let edge = Graph::from_edges(&[("c1", "c2")]).expect("simple edge");
    let one = Graph::cycle("a", 3)
        .disjoint_union(&edge)
        .expect("fresh names");
    let two = Graph::cycle("a", 3)
        .disjoint_union(&Graph::cycle("b", 3))
        .and_then(|g| g.disjoint_union(&edge))
        .expect("fresh names");
    vec![one, two]
}
