//! Local and global v-numbers of monomial ideals and of their powers.
//!
//! The local value at an associated prime `p` is computed as the initial
//! degree of `(I:p) / (I : (p + X_p^∞))`, where `X_p` is the product of the
//! associated primes strictly containing `p`. The quotient is nonzero in a
//! degree exactly where some minimal generator of `(I:p)` escapes the
//! saturation, so only those generators are inspected.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::assoc::{ass, colon_prime_outside, require_disjoint};
use crate::cache;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::{MonomialPrime, PrimeSet};
use crate::structure::{components, product_factors};

/// A v-number together with the associated prime attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VValue {
    pub value: u64,
    pub prime: MonomialPrime,
}

/// `X_p`: the product of the primes of `ass_set` strictly containing `p`,
/// or the unit ideal when `p` is maximal in `ass_set`.
pub fn x_ideal(ass_set: &PrimeSet, p: &MonomialPrime) -> Result<MonomialIdeal> {
    if !ass_set.contains(p) {
        return Err(Error::NotAssociated(p.to_string()));
    }
    let mut acc = MonomialIdeal::unit(p.ring());
    for q in ass_set.iter().filter(|q| p.is_strict_subset(q)) {
        acc = acc.product(&q.to_ideal())?;
    }
    Ok(acc)
}

/// Membership of `g` in `I : (p_1 ⋯ p_r)^∞` for monomial primes `p_j`.
///
/// The saturation by a product of primes is the intersection, over every
/// choice `E` of one variable from each `p_j`, of `I` with the variables of
/// `E` set to 1. So `g` lies in it iff for every such `E` some generator `u`
/// has `u_i <= g_i` off `E`.
pub(crate) fn in_prime_product_saturation(
    ideal: &MonomialIdeal,
    g: &Monomial,
    primes: &[u128],
) -> bool {
    let mut excess: Vec<u128> = ideal
        .gens()
        .iter()
        .map(|u| {
            u.exponents()
                .iter()
                .zip(g.exponents())
                .enumerate()
                .filter(|(_, (a, b))| a > b)
                .fold(0u128, |m, (i, _)| m | 1 << i)
        })
        .collect();
    excess.sort_unstable_by_key(|m| m.count_ones());
    excess.dedup();
    fn covered(excess: &[u128], chosen: u128) -> bool {
        excess.iter().any(|f| f & !chosen == 0)
    }
    fn search(excess: &[u128], primes: &[u128], chosen: u128) -> bool {
        if covered(excess, chosen) {
            return true;
        }
        let Some((&p, rest)) = primes.split_first() else {
            return false;
        };
        if p & chosen != 0 {
            return search(excess, rest, chosen);
        }
        (0..128)
            .filter(|i| p >> i & 1 == 1)
            .all(|i| search(excess, rest, chosen | 1 << i))
    }
    search(&excess, primes, 0)
}

/// `v_p(I)` given `Ass(I)`.
pub(crate) fn v_local_with(
    ideal: &MonomialIdeal,
    ass_set: &PrimeSet,
    p: &MonomialPrime,
) -> Result<u64> {
    if !ass_set.contains(p) {
        return Err(Error::NotAssociated(p.to_string()));
    }
    let key = (ideal.clone(), p.clone());
    cache::VLOCAL.get_or_try(&key, || {
        let parts = components(ideal)?;
        if parts.len() > 1 {
            return parts.iter().try_fold(0, |acc, part| {
                let q = MonomialPrime::from_mask(p.ring(), p.mask() & part.support_mask())?;
                Ok(acc + v_local_with(part, &ass(part)?, &q)?)
            });
        }
        if let Some(factors) = product_factors(ideal) {
            let alphas = factors.iter().map(|f| f.alpha()).sum::<Result<u64>>()?;
            for f in &factors {
                let a = ass(f)?;
                if a.contains(p) {
                    return Ok(v_local_with(f, &a, p)? + alphas - f.alpha()?);
                }
            }
            return Err(Error::NotAssociated(p.to_string()));
        }
        let mut outside = colon_prime_outside(ideal, p.mask());
        outside.sort();
        let supersets: Vec<u128> = ass_set
            .iter()
            .filter(|q| p.is_strict_subset(q))
            .map(|q| q.mask())
            .collect();
        outside
            .iter()
            .find(|g| !in_prime_product_saturation(ideal, g, &supersets))
            .map(Monomial::degree)
            .ok_or_else(|| Error::NotAssociated(p.to_string()))
    })
}

/// Local v-number `v_p(I)`: least degree of a monomial `f` with `(I:f) = p`.
pub fn v_local(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<u64> {
    crate::ring::check_same(ideal.ring(), p.ring())?;
    let ass_set = ass(ideal)?;
    v_local_with(ideal, &ass_set, p)
}

/// `v(I)`, the minimum of `v_p(I)` over `Ass(I)`; ties go to the smallest
/// prime in canonical order.
pub fn v_number(ideal: &MonomialIdeal) -> Result<VValue> {
    let ass_set = ass(ideal)?;
    let values = ass_set
        .as_slice()
        .par_iter()
        .map(|p| v_local_with(ideal, &ass_set, p).map(|v| (v, p)))
        .collect::<Result<Vec<_>>>()?;
    let (value, prime) = values
        .into_iter()
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)))
        .expect("proper ideals have associated primes");
    Ok(VValue {
        value,
        prime: prime.clone(),
    })
}

/// `v(I^k)`.
pub fn v_power(ideal: &MonomialIdeal, k: usize) -> Result<VValue> {
    v_number(&cache::power(ideal, k)?)
}

/// `v_p(I^k)`.
pub fn v_local_power(ideal: &MonomialIdeal, p: &MonomialPrime, k: usize) -> Result<u64> {
    v_local(&cache::power(ideal, k)?, p)
}

/// Eventual line `k -> slope*k + intercept`, valid from `vstab` on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LinearFit {
    pub slope: i64,
    pub intercept: i64,
    pub vstab: usize,
    /// True only when a structural result proves the line for every `k >= vstab`.
    pub certified: bool,
}

impl LinearFit {
    pub fn at(&self, k: usize) -> i64 {
        self.slope * k as i64 + self.intercept
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VTable {
    pub alpha: u64,
    pub per_k: BTreeMap<usize, VValue>,
    pub fit: Option<LinearFit>,
}

impl VTable {
    pub fn values(&self) -> Vec<u64> {
        self.per_k.values().map(|v| v.value).collect()
    }

    pub fn k_max(&self) -> usize {
        self.per_k.keys().next_back().copied().unwrap_or(0)
    }

    /// Every entry respects `v(I^k) >= alpha*k - 1`.
    pub fn satisfies_lower_bound(&self) -> bool {
        self.per_k
            .iter()
            .all(|(&k, v)| v.value + 1 >= self.alpha * k as u64)
    }
}

/// `v(I^k)` for `k = 1..=k_max`, fitted when at least three points exist.
pub fn v_function(ideal: &MonomialIdeal, k_max: usize) -> Result<VTable> {
    if k_max == 0 {
        return Err(Error::ZeroPower);
    }
    let alpha = ideal.alpha()?;
    let mut per_k = BTreeMap::new();
    for k in 1..=k_max {
        per_k.insert(k, v_power(ideal, k)?);
    }
    Ok(fit_linear(VTable {
        alpha,
        per_k,
        fit: None,
    }))
}

/// Line through the last two points, kept only if the third-to-last point
/// also lies on it; `vstab` is the start of the longest on-line tail.
pub fn fit_linear(mut table: VTable) -> VTable {
    table.fit = None;
    let pts: Vec<(i64, i64)> = table
        .per_k
        .iter()
        .map(|(&k, v)| (k as i64, v.value as i64))
        .collect();
    if pts.len() < 3 {
        return table;
    }
    let (k1, v1) = pts[pts.len() - 1];
    let (k0, v0) = pts[pts.len() - 2];
    if k1 - k0 != 1 {
        return table;
    }
    let slope = v1 - v0;
    let intercept = v1 - slope * k1;
    let on_line = |&(k, v): &(i64, i64)| v == slope * k + intercept;
    if !on_line(&pts[pts.len() - 3]) {
        return table;
    }
    let tail = pts.iter().rev().take_while(|p| on_line(p)).count();
    let vstab = pts[pts.len() - tail].0 as usize;
    table.fit = Some(LinearFit {
        slope,
        intercept,
        vstab,
        certified: false,
    });
    table
}

fn require_block(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<()> {
    if p.mask() & !ideal.support_mask() != 0 {
        return Err(Error::PrimeOutsideBlock(p.to_string()));
    }
    Ok(())
}

/// `v_{p+q}((I+J)^k)` as `min_l v_p(I^{k-l}) + v_q(J^{l+1})` over the
/// `0 <= l < k` with `p ∈ Ass(I^{k-l})` and `q ∈ Ass(J^{l+1})`.
pub fn v_sum_local(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    p: &MonomialPrime,
    q: &MonomialPrime,
    k: usize,
) -> Result<u64> {
    require_disjoint(i, j)?;
    require_block(i, p)?;
    require_block(j, q)?;
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let mut best: Option<u64> = None;
    for l in 0..k {
        let ip = cache::power(i, k - l)?;
        let jp = cache::power(j, l + 1)?;
        let ai = ass(&ip)?;
        let aj = ass(&jp)?;
        if !ai.contains(p) || !aj.contains(q) {
            continue;
        }
        let v = v_local_with(&ip, &ai, p)? + v_local_with(&jp, &aj, q)?;
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    best.ok_or(Error::EmptyIndexSet)
}

/// `v((I+J)^k)` as the minimum of the local formula over every associated
/// `p + q`; `(I+J)^k` itself is never formed.
pub fn v_sum(i: &MonomialIdeal, j: &MonomialIdeal, k: usize) -> Result<VValue> {
    require_disjoint(i, j)?;
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let mut local: BTreeMap<MonomialPrime, u64> = BTreeMap::new();
    for l in 0..k {
        let ip = cache::power(i, k - l)?;
        let jp = cache::power(j, l + 1)?;
        let ai = ass(&ip)?;
        let aj = ass(&jp)?;
        let left = ai
            .iter()
            .map(|p| Ok((p, v_local_with(&ip, &ai, p)?)))
            .collect::<Result<Vec<_>>>()?;
        let right = aj
            .iter()
            .map(|q| Ok((q, v_local_with(&jp, &aj, q)?)))
            .collect::<Result<Vec<_>>>()?;
        for (p, vp) in &left {
            for (q, vq) in &right {
                let slot = local.entry(p.join(q)?).or_insert(u64::MAX);
                *slot = (*slot).min(vp + vq);
            }
        }
    }
    let (prime, value) = local
        .into_iter()
        .min_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)))
        .expect("proper ideals have associated primes");
    Ok(VValue { value, prime })
}

/// `v_P((IJ)^k)`: `v_P(I^k) + alpha(J) k` when `P` lives in the block of
/// `I`, symmetrically for `J`.
pub fn v_product_local(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    prime: &MonomialPrime,
    k: usize,
) -> Result<u64> {
    require_disjoint(i, j)?;
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    for (own, other) in [(i, j), (j, i)] {
        if prime.mask() & !own.support_mask() == 0 {
            let pw = cache::power(own, k)?;
            let a = ass(&pw)?;
            if a.contains(prime) {
                return Ok(v_local_with(&pw, &a, prime)? + other.alpha()? * k as u64);
            }
        }
    }
    Err(Error::NotAssociated(prime.to_string()))
}

/// `v((IJ)^k) = min(v(I^k) + alpha(J) k, v(J^k) + alpha(I) k)`.
///
/// The associated primes of `(IJ)^k` split into those of `I^k` and `J^k`
/// and each local value shifts by the other factor's initial degree, so the
/// minimum holds for every `k >= 1`, not just eventually.
pub fn v_product(i: &MonomialIdeal, j: &MonomialIdeal, k: usize) -> Result<VValue> {
    require_disjoint(i, j)?;
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let kk = k as u64;
    let vi = v_power(i, k)?;
    let vj = v_power(j, k)?;
    let left = VValue {
        value: vi.value + j.alpha()? * kk,
        prime: vi.prime,
    };
    let right = VValue {
        value: vj.value + i.alpha()? * kk,
        prime: vj.prime,
    };
    Ok(if (right.value, &right.prime) < (left.value, &left.prime) {
        right
    } else {
        left
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{AmbientRing, Ring};

    fn ring(names: &[&str]) -> Ring {
        AmbientRing::new(names.iter().copied()).unwrap()
    }

    fn prime(r: &Ring, v: &[usize]) -> MonomialPrime {
        MonomialPrime::new(r, v.iter().copied()).unwrap()
    }

    fn c5(r: &Ring, offset: usize) -> MonomialIdeal {
        let n = r.len();
        let gens: Vec<Vec<u32>> = (0..5)
            .map(|i| {
                let mut e = vec![0; n];
                e[offset + i] = 1;
                e[offset + (i + 1) % 5] = 1;
                e
            })
            .collect();
        MonomialIdeal::from_exponents(r, &gens).unwrap()
    }

    #[test]
    fn x_ideal_examples() {
        let r = ring(&["x", "y", "z"]);
        let set: PrimeSet = [prime(&r, &[0]), prime(&r, &[0, 1])].into_iter().collect();
        assert_eq!(
            x_ideal(&set, &prime(&r, &[0])).unwrap(),
            prime(&r, &[0, 1]).to_ideal()
        );
        assert!(x_ideal(&set, &prime(&r, &[0, 1])).unwrap().is_unit());
        let tri: PrimeSet = [prime(&r, &[0, 1]), prime(&r, &[1, 2]), prime(&r, &[0, 2])]
            .into_iter()
            .collect();
        assert!(x_ideal(&tri, &prime(&r, &[0, 1])).unwrap().is_unit());
        assert!(matches!(
            x_ideal(&tri, &prime(&r, &[0])),
            Err(Error::NotAssociated(_))
        ));
    }

    #[test]
    fn local_values() {
        let r = ring(&["x", "y", "z"]);
        let i = MonomialIdeal::from_exponents(&r, &[[2, 0, 0], [1, 1, 0]]).unwrap();
        assert_eq!(v_local(&i, &prime(&r, &[0])).unwrap(), 1);
        assert_eq!(v_local(&i, &prime(&r, &[0, 1])).unwrap(), 1);
        assert!(matches!(
            v_local(&i, &prime(&r, &[1])),
            Err(Error::NotAssociated(_))
        ));
        let c3 = MonomialIdeal::from_exponents(&r, &[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
        let sq = c3.power(2).unwrap();
        assert_eq!(v_local(&sq, &MonomialPrime::maximal(&r)).unwrap(), 3);
        assert_eq!(v_number(&i).unwrap().value, 1);
    }

    #[test]
    fn c5_table() {
        let r = AmbientRing::indexed("x", 5).unwrap();
        let i = c5(&r, 0);
        assert_eq!(i.mu().unwrap(), 5);
        assert_eq!(i.alpha().unwrap(), 2);
        let t = v_function(&i, 5).unwrap();
        assert_eq!(t.values(), vec![2, 3, 5, 7, 9]);
        assert_eq!(
            t.fit,
            Some(LinearFit {
                slope: 2,
                intercept: -1,
                vstab: 2,
                certified: false
            })
        );
        assert!(t.satisfies_lower_bound());
    }

    #[test]
    fn principal_and_ci_tables() {
        let r = ring(&["x", "y"]);
        let x2 = MonomialIdeal::from_exponents(&r, &[[2, 0]]).unwrap();
        let t = v_function(&x2, 4).unwrap();
        assert_eq!(t.values(), vec![1, 3, 5, 7]);
        let f = t.fit.unwrap();
        assert_eq!((f.slope, f.intercept, f.vstab), (2, -1, 1));
        let ci = MonomialIdeal::from_exponents(&r, &[[2, 0], [0, 2]]).unwrap();
        let t = v_function(&ci, 4).unwrap();
        assert_eq!(t.values(), vec![2, 4, 6, 8]);
        let f = t.fit.unwrap();
        assert_eq!((f.slope, f.intercept, f.vstab), (2, 0, 1));
    }

    #[test]
    fn fit_absent_when_tail_bends() {
        let r = ring(&["x"]);
        let p = MonomialPrime::maximal(&r);
        let per_k = [(1, 1), (2, 2), (3, 4)]
            .into_iter()
            .map(|(k, v)| {
                (
                    k,
                    VValue {
                        value: v,
                        prime: p.clone(),
                    },
                )
            })
            .collect();
        let t = fit_linear(VTable {
            alpha: 1,
            per_k,
            fit: None,
        });
        assert_eq!(t.fit, None);
    }

    #[test]
    fn sum_formula() {
        let r = ring(&["x", "y"]);
        let x2 = MonomialIdeal::from_exponents(&r, &[[2, 0]]).unwrap();
        let y2 = MonomialIdeal::from_exponents(&r, &[[0, 2]]).unwrap();
        let (px, py) = (prime(&r, &[0]), prime(&r, &[1]));
        assert_eq!(v_sum_local(&x2, &y2, &px, &py, 2).unwrap(), 4);
        assert_eq!(
            v_sum_local(&x2, &y2, &px, &py, 1).unwrap(),
            v_local(&x2, &px).unwrap() + v_local(&y2, &py).unwrap()
        );
        assert_eq!(v_sum(&x2, &y2, 3).unwrap().value, 6);
        assert!(matches!(
            v_sum_local(&x2, &y2, &py, &px, 1),
            Err(Error::PrimeOutsideBlock(_))
        ));
        assert_eq!(v_sum(&x2, &x2, 1), Err(Error::OverlappingSupports));
    }

    #[test]
    fn sum_local_empty_index_set() {
        let r = ring(&["x", "y", "z"]);
        let i = MonomialIdeal::from_exponents(&r, &[[1, 1, 0]]).unwrap();
        let j = MonomialIdeal::from_exponents(&r, &[[0, 0, 1]]).unwrap();
        let p = prime(&r, &[0, 1]);
        assert_eq!(
            v_sum_local(&i, &j, &p, &prime(&r, &[2]), 2),
            Err(Error::EmptyIndexSet)
        );
    }

    #[test]
    fn product_formula() {
        let r = ring(&["x", "y"]);
        let x2 = MonomialIdeal::from_exponents(&r, &[[2, 0]]).unwrap();
        let y3 = MonomialIdeal::from_exponents(&r, &[[0, 3]]).unwrap();
        for k in 1..=4 {
            assert_eq!(v_product(&x2, &y3, k).unwrap().value, 5 * k as u64 - 1);
        }
        assert_eq!(v_product_local(&x2, &y3, &prime(&r, &[0]), 2).unwrap(), 9);
        assert!(matches!(
            v_product_local(&x2, &y3, &prime(&r, &[0, 1]), 2),
            Err(Error::NotAssociated(_))
        ));
    }

    mod props {
        use super::super::*;
        use crate::ring::AmbientRing;
        use proptest::prelude::*;

        fn arb_case() -> impl Strategy<Value = (MonomialIdeal, Vec<u128>, Vec<Monomial>)> {
            (1usize..=4).prop_flat_map(|n| {
                let exps = move || prop::collection::vec(0u32..=3, n);
                let full = (1u128 << n) - 1;
                (
                    prop::collection::vec(exps(), 1..=4),
                    prop::collection::vec(1u128..=full, 1..=3),
                    prop::collection::vec(exps(), 1..=4),
                )
                    .prop_map(move |(gens, primes, probes)| {
                        let r = AmbientRing::indexed("x", n).unwrap();
                        (
                            MonomialIdeal::from_exponents(&r, &gens).unwrap(),
                            primes,
                            probes.into_iter().map(Monomial::new).collect(),
                        )
                    })
            })
        }

        proptest! {
            #[test]
            fn transversal_test_matches_explicit_saturation((i, primes, probes) in arb_case()) {
                prop_assume!(i.is_proper_nonzero());
                let r = i.ring().clone();
                let product = primes.iter().fold(MonomialIdeal::unit(&r), |acc, &m| {
                    acc.product(&MonomialPrime::from_mask(&r, m).unwrap().to_ideal()).unwrap()
                });
                let sat = i.saturate(&product).unwrap().ideal;
                for g in &probes {
                    prop_assert_eq!(
                        in_prime_product_saturation(&i, g, &primes),
                        sat.contains(g).unwrap()
                    );
                }
            }
        }
    }
}
