//! Structural recognizers and the closed forms they unlock.

mod factor;
mod graph;
mod split;

pub use factor::product_factors;
pub use graph::{edge_ideal, edge_v_asymptotic, graph_component_count, Graph};
pub use split::{vertex_split, SplitTree};

use serde::Serialize;

use crate::assoc::require_disjoint;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::prime::{MonomialPrime, PrimeSet};
use crate::vnumber::{v_function, LinearFit, VTable};

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Split `I` into connected parts: generators are linked when their
/// supports meet. Parts are ordered by their smallest variable.
pub fn components(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    ideal.require_proper()?;
    let mut uf = UnionFind::new(ideal.ring().len());
    for g in ideal.gens() {
        let mut support = g.support();
        if let Some(first) = support.next() {
            for v in support {
                uf.union(first, v);
            }
        }
    }
    let mut groups: Vec<(usize, Vec<_>)> = Vec::new();
    for g in ideal.gens() {
        let root = uf.find(
            g.support()
                .next()
                .expect("proper ideals have no unit generator"),
        );
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, v)) => v.push(g.clone()),
            None => groups.push((root, vec![g.clone()])),
        }
    }
    // union-find roots are the smallest index of each class
    groups.sort_by_key(|(root, _)| *root);
    Ok(groups
        .into_iter()
        .map(|(_, gens)| MonomialIdeal::from_canonical(ideal.ring().clone(), gens))
        .collect())
}

/// Generator supports are pairwise disjoint.
pub fn is_complete_intersection(ideal: &MonomialIdeal) -> bool {
    if !ideal.is_proper_nonzero() {
        return false;
    }
    let mut seen = 0u128;
    for g in ideal.gens() {
        let m = g.support_mask();
        if seen & m != 0 {
            return false;
        }
        seen |= m;
    }
    true
}

fn require_ci(ideal: &MonomialIdeal) -> Result<()> {
    ideal.require_proper()?;
    if is_complete_intersection(ideal) {
        Ok(())
    } else {
        Err(Error::NotCompleteIntersection)
    }
}

/// Associated primes of every power of a monomial complete intersection:
/// one variable chosen from the support of each generator.
pub fn ci_ass(ideal: &MonomialIdeal) -> Result<PrimeSet> {
    require_ci(ideal)?;
    let mut masks = vec![0u128];
    for g in ideal.gens() {
        masks = masks
            .iter()
            .flat_map(|&m| g.support().map(move |v| m | 1 << v))
            .collect();
    }
    masks
        .into_iter()
        .map(|m| MonomialPrime::from_mask(ideal.ring(), m))
        .collect()
}

/// `v(I^k) = alpha k + (sum of generator degrees - alpha - mu)` for a
/// monomial complete intersection.
pub fn ci_v(ideal: &MonomialIdeal, k: usize) -> Result<u64> {
    require_ci(ideal)?;
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let (alpha, mu) = (ideal.alpha()?, ideal.mu()? as u64);
    let total: u64 = ideal.gens().iter().map(|g| g.degree()).sum();
    Ok(alpha * k as u64 + total - alpha - mu)
}

fn ci_fit(ideal: &MonomialIdeal) -> Result<LinearFit> {
    let alpha = ideal.alpha()? as i64;
    let total: i64 = ideal.gens().iter().map(|g| g.degree() as i64).sum();
    Ok(LinearFit {
        slope: alpha,
        intercept: total - alpha - ideal.mu()? as i64,
        vstab: 1,
        certified: true,
    })
}

/// `v(I^k) = alpha k - 1` for an equigenerated vertex splittable ideal.
pub fn vertex_splittable_v(ideal: &MonomialIdeal, k: usize) -> Result<u64> {
    ideal.require_proper()?;
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    if vertex_split(ideal).is_none() {
        return Err(Error::NotVertexSplittable);
    }
    Ok(ideal.alpha()? * k as u64 - 1)
}

/// The closed-form v-function line of `I` when a structural result pins it
/// down for every `k >= 1`.
pub fn certified_fit(ideal: &MonomialIdeal) -> Result<Option<LinearFit>> {
    ideal.require_proper()?;
    if is_complete_intersection(ideal) {
        return ci_fit(ideal).map(Some);
    }
    if ideal.is_equigenerated() && vertex_split(ideal).is_some() {
        return Ok(Some(LinearFit {
            slope: ideal.alpha()? as i64,
            intercept: -1,
            vstab: 1,
            certified: true,
        }));
    }
    Ok(None)
}

/// [`v_function`] with the fit replaced by a certified line where one
/// applies. A computed value off the certified line keeps the heuristic fit.
pub fn v_function_certified(ideal: &MonomialIdeal, k_max: usize) -> Result<VTable> {
    let mut table = v_function(ideal, k_max)?;
    if let Some(fit) = certified_fit(ideal)? {
        let agrees = table
            .per_k
            .iter()
            .all(|(&k, v)| fit.at(k) == v.value as i64);
        if agrees {
            table.fit = Some(fit);
        }
    }
    Ok(table)
}

/// When the lower bound is known to be attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityScope {
    /// Every part has v-stability index 1: equality for all `k >= 1`.
    AllK,
    /// All parts share one initial degree: equality for large `k`.
    Eventual,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartHypothesis {
    pub alpha: u64,
    /// `v(I_j^k) = alpha k - 1` holds for all `k >= 1` by a structural result.
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumBound {
    pub k: usize,
    pub bound: i64,
    pub equality_certified: bool,
    pub equality_scope: Option<EqualityScope>,
    /// Every part's hypothesis is certified rather than window-checked.
    pub hypothesis_certified: bool,
    pub parts: Vec<PartHypothesis>,
}

/// Lower bound `(min α_j) k + (Σ α_j − min α_j − t)` for
/// `v((I_1 + ... + I_t)^k)` when the parts have disjoint supports and each
/// satisfies `v(I_j^k) = α_j k − 1` eventually.
///
/// Parts without a structural certificate are checked on `k = 1..=check_k_max`:
/// the last `window` values must lie on `α_j k − 1`.
pub fn disjoint_sum_vbound(
    ideals: &[MonomialIdeal],
    k: usize,
    check_k_max: usize,
    window: usize,
) -> Result<SumBound> {
    if ideals.len() < 2 {
        return Err(Error::TooFewIdeals(2));
    }
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    if window == 0 || window > check_k_max {
        return Err(Error::Window {
            window,
            k_max: check_k_max,
        });
    }
    for (a, i) in ideals.iter().enumerate() {
        for j in &ideals[a + 1..] {
            require_disjoint(i, j)?;
        }
    }
    let mut parts = Vec::with_capacity(ideals.len());
    for (index, ideal) in ideals.iter().enumerate() {
        let alpha = ideal.alpha()?;
        let certified = match certified_fit(ideal)? {
            Some(fit) if fit.intercept == -1 => true,
            Some(fit) => {
                return Err(Error::HypothesisFailure {
                    index,
                    k: 1,
                    value: fit.at(1) as u64,
                })
            }
            None => {
                let table = v_function(ideal, check_k_max)?;
                for (&kk, v) in table.per_k.iter().rev().take(window) {
                    if v.value + 1 != alpha * kk as u64 {
                        return Err(Error::HypothesisFailure {
                            index,
                            k: kk,
                            value: v.value,
                        });
                    }
                }
                false
            }
        };
        parts.push(PartHypothesis { alpha, certified });
    }
    let t = parts.len() as i64;
    let min_alpha = parts.iter().map(|p| p.alpha).min().expect("nonempty") as i64;
    let sum_alpha: i64 = parts.iter().map(|p| p.alpha as i64).sum();
    let bound = min_alpha * k as i64 + (sum_alpha - min_alpha - t);
    let hypothesis_certified = parts.iter().all(|p| p.certified);
    let equality_scope = if hypothesis_certified {
        Some(EqualityScope::AllK)
    } else if parts.iter().all(|p| p.alpha as i64 == min_alpha) {
        Some(EqualityScope::Eventual)
    } else {
        None
    };
    Ok(SumBound {
        k,
        bound,
        equality_certified: equality_scope.is_some(),
        equality_scope,
        hypothesis_certified,
        parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::ass_power;
    use crate::ring::AmbientRing;
    use crate::vnumber::v_power;

    #[test]
    fn components_examples() {
        let r = AmbientRing::indexed("x", 5).unwrap();
        let i =
            MonomialIdeal::from_exponents(&r, &[[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 0, 1, 1]])
                .unwrap();
        let parts = components(&i).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].to_string(), "x1*x2, x2*x3");
        assert_eq!(parts[1].to_string(), "x4*x5");

        let r = AmbientRing::new(["x", "y", "z"]).unwrap();
        let ci = MonomialIdeal::from_exponents(&r, &[[2, 0, 0], [0, 3, 0], [0, 0, 1]]).unwrap();
        assert_eq!(components(&ci).unwrap().len(), 3);
        let conn = MonomialIdeal::from_exponents(&r, &[[1, 1, 0], [0, 1, 1]]).unwrap();
        assert_eq!(components(&conn).unwrap(), vec![conn.clone()]);
        assert_eq!(components(&MonomialIdeal::zero(&r)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn complete_intersections() {
        let r = AmbientRing::indexed("x", 3).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[[1, 1, 0], [0, 0, 2]]).unwrap();
        assert!(is_complete_intersection(&i));
        let expected: PrimeSet = [
            MonomialPrime::new(&r, [0, 2]).unwrap(),
            MonomialPrime::new(&r, [1, 2]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(ci_ass(&i).unwrap(), expected);
        assert_eq!(ci_v(&i, 3).unwrap(), 6);
        for k in 1..=3 {
            assert_eq!(ass_power(&i, k).unwrap(), expected);
            assert_eq!(v_power(&i, k).unwrap().value, ci_v(&i, k).unwrap());
        }
        let u = MonomialIdeal::from_exponents(&r, &[[2, 1, 0]]).unwrap();
        for k in 1..=4 {
            assert_eq!(ci_v(&u, k).unwrap(), 3 * k as u64 - 1);
        }
        let not = MonomialIdeal::from_exponents(&r, &[[1, 1, 0], [0, 1, 1]]).unwrap();
        assert!(!is_complete_intersection(&not));
        assert_eq!(ci_v(&not, 1), Err(Error::NotCompleteIntersection));

        let r2 = AmbientRing::new(["x", "y"]).unwrap();
        let sq = MonomialIdeal::from_exponents(&r2, &[[2, 0], [0, 2]]).unwrap();
        assert_eq!(ci_ass(&sq).unwrap().to_string(), "{(x,y)}");
        assert_eq!(ci_v(&sq, 5).unwrap(), 10);
    }

    #[test]
    fn splittable_closed_form() {
        let r = AmbientRing::new(["x", "y"]).unwrap();
        let m2 = MonomialPrime::maximal(&r).to_ideal().power(2).unwrap();
        assert_eq!(vertex_splittable_v(&m2, 3).unwrap(), 5);
        let c5 = edge_ideal(&Graph::cycle("x", 5)).unwrap();
        assert_eq!(vertex_splittable_v(&c5, 2), Err(Error::NotVertexSplittable));
        let r3 = AmbientRing::indexed("x", 3).unwrap();
        let mixed =
            MonomialIdeal::from_exponents(&r3, &[[2, 0, 0], [1, 1, 0], [1, 0, 2], [0, 0, 3]])
                .unwrap();
        assert_eq!(vertex_splittable_v(&mixed, 2), Err(Error::NotEquigenerated));
    }

    #[test]
    fn certified_tables() {
        let r = AmbientRing::new(["x", "y"]).unwrap();
        let x2 = MonomialIdeal::from_exponents(&r, &[[2, 0]]).unwrap();
        let t = v_function_certified(&x2, 3).unwrap();
        assert_eq!(
            t.fit,
            Some(LinearFit {
                slope: 2,
                intercept: -1,
                vstab: 1,
                certified: true
            })
        );
    }

    #[test]
    fn sum_bounds() {
        let g = Graph::from_edges(&[("x1", "x2"), ("x3", "x4")]).unwrap();
        let parts = components(&edge_ideal(&g).unwrap()).unwrap();
        for k in 1..=3 {
            let b = disjoint_sum_vbound(&parts, k, 3, 2).unwrap();
            assert_eq!(b.bound, 2 * k as i64);
            assert!(b.equality_certified);
            assert_eq!(b.equality_scope, Some(EqualityScope::AllK));
        }
        assert_eq!(
            disjoint_sum_vbound(&parts[..1], 1, 3, 2),
            Err(Error::TooFewIdeals(2))
        );
        let overlapping = vec![parts[0].clone(), parts[0].clone()];
        assert_eq!(
            disjoint_sum_vbound(&overlapping, 1, 3, 2),
            Err(Error::OverlappingSupports)
        );
    }
}
