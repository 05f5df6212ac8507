//! Splitting an ideal as a product of ideals in disjoint sets of variables.

use std::collections::{HashMap, HashSet};

use super::UnionFind;
use crate::ideal::{minimal_elements, MonomialIdeal};
use crate::monomial::Monomial;

/// Two variables are independent when the pair of their exponents, over
/// the generators, is distributed as the product of the two marginals.
fn independent(gens: &[Monomial], a: usize, b: usize) -> bool {
    let mut ca: HashMap<u32, usize> = HashMap::new();
    let mut cb: HashMap<u32, usize> = HashMap::new();
    let mut cab: HashMap<(u32, u32), usize> = HashMap::new();
    for g in gens {
        let (x, y) = (g.exponent(a), g.exponent(b));
        *ca.entry(x).or_default() += 1;
        *cb.entry(y).or_default() += 1;
        *cab.entry((x, y)).or_default() += 1;
    }
    if cab.len() != ca.len() * cb.len() {
        return false;
    }
    cab.iter()
        .all(|(&(x, y), &c)| c * gens.len() == ca[&x] * cb[&y])
}

/// Factors `I = F_1 ⋯ F_m` with pairwise disjoint supports, or `None` when
/// no split into two or more factors is found.
///
/// Variables that are not pairwise independent must share a factor; the
/// resulting blocks are accepted only when the generators are exactly all
/// products of their projections.
pub fn product_factors(ideal: &MonomialIdeal) -> Option<Vec<MonomialIdeal>> {
    if !ideal.is_proper_nonzero() || ideal.gens().len() < 2 {
        return None;
    }
    let gens = ideal.gens();
    let support = ideal.support().ok()?;
    if support.len() < 2 {
        return None;
    }
    let mut uf = UnionFind::new(ideal.ring().len());
    for (pos, &a) in support.iter().enumerate() {
        for &b in &support[pos + 1..] {
            if uf.find(a) != uf.find(b) && !independent(gens, a, b) {
                uf.union(a, b);
            }
        }
    }
    let mut blocks: Vec<(usize, u128)> = Vec::new();
    for &v in &support {
        let root = uf.find(v);
        match blocks.iter_mut().find(|(r, _)| *r == root) {
            Some((_, m)) => *m |= 1 << v,
            None => blocks.push((root, 1 << v)),
        }
    }
    if blocks.len() < 2 {
        return None;
    }
    let mut product: usize = 1;
    let mut factors = Vec::with_capacity(blocks.len());
    for &(_, mask) in &blocks {
        let proj: HashSet<Monomial> = gens.iter().map(|g| g.restrict(mask)).collect();
        product = product.checked_mul(proj.len())?;
        factors.push(proj);
    }
    // generators inject into the product of projections
    if product != gens.len() {
        return None;
    }
    Some(
        factors
            .into_iter()
            .map(|p| {
                MonomialIdeal::from_canonical(
                    ideal.ring().clone(),
                    minimal_elements(p.into_iter().collect()),
                )
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::AmbientRing;

    #[test]
    fn splits_products_of_cycles() {
        let r = AmbientRing::indexed("x", 6).unwrap();
        let a = MonomialIdeal::from_exponents(
            &r,
            &[[1, 1, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0], [1, 0, 1, 0, 0, 0]],
        )
        .unwrap();
        let b =
            MonomialIdeal::from_exponents(&r, &[[0, 0, 0, 2, 0, 0], [0, 0, 0, 1, 1, 1]]).unwrap();
        let ab = a.product(&b).unwrap();
        let f = product_factors(&ab).unwrap();
        assert_eq!(f, vec![a.clone(), b.clone()]);
        let f3 = product_factors(&ab.power(3).unwrap()).unwrap();
        assert_eq!(f3, vec![a.power(3).unwrap(), b.power(3).unwrap()]);
    }

    #[test]
    fn refuses_non_products() {
        let r = AmbientRing::indexed("x", 3).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[[1, 1, 0], [0, 1, 1]]).unwrap();
        // x2 (x1, x3) is a product
        assert_eq!(product_factors(&i).unwrap().len(), 2);
        let j = MonomialIdeal::from_exponents(&r, &[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
        assert!(product_factors(&j).is_none());
        let sum = MonomialIdeal::from_exponents(&r, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert!(product_factors(&sum).is_none());
    }
}
