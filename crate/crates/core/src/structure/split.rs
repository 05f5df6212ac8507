use std::collections::HashMap;

use serde::Serialize;

use crate::ideal::{minimal_elements, MonomialIdeal};
use crate::monomial::Monomial;

/// Witness of vertex splittability.
///
/// `Node` records `I = x·I₁ + I₂` with `I₂ ⊆ I₁`, `x` absent from `I₂`, and
/// `G(I)` the disjoint union of `G(x·I₁)` and `G(I₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SplitTree {
    /// Principal, zero or unit ideal.
    Leaf(MonomialIdeal),
    Node {
        ideal: MonomialIdeal,
        var: usize,
        left: Box<SplitTree>,
        right: Box<SplitTree>,
    },
}

impl SplitTree {
    pub fn ideal(&self) -> &MonomialIdeal {
        match self {
            SplitTree::Leaf(i) => i,
            SplitTree::Node { ideal, .. } => ideal,
        }
    }

    /// Re-check every node: `x·I₁ + I₂` reproduces `I`, the generator sets
    /// are disjoint, `x` does not divide `I₂` and `I₂ ⊆ I₁`.
    pub fn validate(&self) -> bool {
        match self {
            SplitTree::Leaf(i) => i.gens().len() <= 1,
            SplitTree::Node {
                ideal,
                var,
                left,
                right,
            } => {
                let n = ideal.ring().len();
                let x = Monomial::var(n, *var);
                let (i1, i2) = (left.ideal(), right.ideal());
                let Ok(scaled) = i1.product(&MonomialIdeal::from_canonical(
                    ideal.ring().clone(),
                    vec![x],
                )) else {
                    return false;
                };
                let Ok(sum) = scaled.sum(i2) else {
                    return false;
                };
                let disjoint = scaled.gens().len() + i2.gens().len() == ideal.gens().len()
                    && scaled.gens().iter().all(|g| !i2.gens().contains(g));
                sum == *ideal
                    && disjoint
                    && i2.gens().iter().all(|g| g.exponent(*var) == 0)
                    && i2.is_subset(i1).unwrap_or(false)
                    && left.validate()
                    && right.validate()
            }
        }
    }

    /// Render as nested `split(x, I1, I2)` terms with `(gens)` leaves.
    pub fn render(&self) -> String {
        match self {
            SplitTree::Leaf(i) => format!("({i})"),
            SplitTree::Node {
                ideal,
                var,
                left,
                right,
            } => format!(
                "split({}, {}, {})",
                ideal.ring().name(*var),
                left.render(),
                right.render()
            ),
        }
    }
}

/// Search for a vertex splitting, trying variables in index order.
pub fn vertex_split(ideal: &MonomialIdeal) -> Option<SplitTree> {
    let mut memo = HashMap::new();
    split_rec(ideal, &mut memo)
}

fn split_rec(
    ideal: &MonomialIdeal,
    memo: &mut HashMap<MonomialIdeal, Option<SplitTree>>,
) -> Option<SplitTree> {
    if ideal.gens().len() <= 1 {
        return Some(SplitTree::Leaf(ideal.clone()));
    }
    if let Some(hit) = memo.get(ideal) {
        return hit.clone();
    }
    let n = ideal.ring().len();
    let mut found = None;
    for var in (0..n).filter(|&v| ideal.gens().iter().any(|g| g.exponent(v) > 0)) {
        let x = Monomial::var(n, var);
        let (with, without): (Vec<&Monomial>, Vec<&Monomial>) =
            ideal.gens().iter().partition(|g| g.exponent(var) > 0);
        let i1 = MonomialIdeal::from_canonical(
            ideal.ring().clone(),
            minimal_elements(with.iter().map(|g| g.colon(&x)).collect()),
        );
        let i2 = MonomialIdeal::from_canonical(
            ideal.ring().clone(),
            without.into_iter().cloned().collect(),
        );
        if !i2.is_subset(&i1).unwrap_or(false) {
            continue;
        }
        let Some(left) = split_rec(&i1, memo) else {
            continue;
        };
        let Some(right) = split_rec(&i2, memo) else {
            continue;
        };
        found = Some(SplitTree::Node {
            ideal: ideal.clone(),
            var,
            left: Box::new(left),
            right: Box::new(right),
        });
        break;
    }
    memo.insert(ideal.clone(), found.clone());
    found
}
