//! Associated primes of monomial ideals and of their powers.
//!
//! A monomial prime `p ⊇ I` is associated to `I` exactly when the maximal
//! ideal of the localized ring `K[p]` is associated to the monomial
//! localization `I(p)`, i.e. when `(I(p) : p) ≠ I(p)`. Candidates are the
//! subsets of `supp(I)` meeting every generator support.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cache;
use crate::error::{Error, Result};
use crate::ideal::{minimal_elements, GenIndex, MonomialIdeal};
use crate::monomial::Monomial;
use crate::prime::{MonomialPrime, PrimeSet};
use crate::ring::check_same;
use crate::structure::{components, is_complete_intersection, product_factors};

/// Largest support enumerated exhaustively by [`ass`].
pub const MAX_CANDIDATE_SUPPORT: usize = 30;

/// Minimal generators of `(I : p)` that do not lie in `I`, where `p` is the
/// prime on the variables of `mask`.
///
/// `(I : p)` is the intersection of the `(I : x)` for `x ∈ p`. Every term
/// keeps `I` inside, so only the part `N` outside `I` is carried from one
/// step to the next: `(I + N) ∩ (I : x) = I + (N ∩ (I : x))`, and for a
/// generator `m` of `N` the ideal `(m) ∩ (I : x)` is `m·(I : xm)`.
pub(crate) fn colon_prime_outside(ideal: &MonomialIdeal, mask: u128) -> Vec<Monomial> {
    let gens = ideal.gens();
    let n = ideal.ring().len();
    let index = GenIndex::new(gens);
    let mut vars = (0..n).filter(|&i| mask >> i & 1 == 1);
    let Some(first) = vars.next() else {
        return Vec::new();
    };
    let x_mono = Monomial::var(n, first);
    let mut outside: Vec<Monomial> = minimal_elements(
        gens.iter()
            .filter(|g| g.exponent(first) > 0)
            .map(|g| g.colon(&x_mono))
            .collect(),
    );
    outside.retain(|m| !index.contains(m.exponents()));
    let mut bumped = vec![0u32; n];
    for x in vars {
        if outside.is_empty() {
            break;
        }
        let mut acc = Vec::new();
        for m in outside {
            bumped.copy_from_slice(m.exponents());
            bumped[x] += 1;
            if index.contains(&bumped) {
                acc.push(m);
                continue;
            }
            for u in index.colon_minimal(&bumped) {
                let candidate = m.checked_mul(&u).expect("bounded by an lcm of generators");
                if !index.contains(candidate.exponents()) {
                    acc.push(candidate);
                }
            }
        }
        outside = minimal_elements(acc);
    }
    outside
}

/// Socle test: `p` is associated to `I` (assumes `I ⊆ p`).
pub(crate) fn is_associated_candidate(ideal: &MonomialIdeal, mask: u128) -> bool {
    let local = ideal.drop_vars(!mask);
    !colon_prime_outside(&local, mask).is_empty()
}

/// `Ass(I)` for a proper nonzero monomial ideal.
pub fn ass(ideal: &MonomialIdeal) -> Result<PrimeSet> {
    ideal.require_proper()?;
    cache::ASS.get_or_try(ideal, || compute_ass(ideal))
}

fn compute_ass(ideal: &MonomialIdeal) -> Result<PrimeSet> {
    // sums and products over disjoint variables split the primes
    let parts = components(ideal)?;
    if parts.len() > 1 {
        let mut acc = vec![0u128];
        for part in &parts {
            let a = ass(part)?;
            acc = acc
                .iter()
                .flat_map(|m| a.iter().map(move |p| m | p.mask()))
                .collect();
        }
        return acc
            .into_iter()
            .map(|m| MonomialPrime::from_mask(ideal.ring(), m))
            .collect();
    }
    if let Some(factors) = product_factors(ideal) {
        let mut acc = PrimeSet::default();
        for f in &factors {
            acc = acc.union(&ass(f)?);
        }
        return Ok(acc);
    }
    let support = ideal.support()?;
    if support.len() > MAX_CANDIDATE_SUPPORT {
        return Err(Error::TooManyVariables(support.len()));
    }
    // generator supports re-indexed to positions within `support`
    let local_masks: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| {
            support
                .iter()
                .enumerate()
                .filter(|(_, &v)| g.exponent(v) > 0)
                .fold(0u64, |m, (pos, _)| m | 1 << pos)
        })
        .collect();
    let candidates: Vec<u64> = (1u64..1 << support.len())
        .filter(|a| local_masks.iter().all(|g| g & a != 0))
        .collect();
    let ring = ideal.ring();
    let found: Vec<u128> = candidates
        .par_iter()
        .map(|&a| {
            support
                .iter()
                .enumerate()
                .filter(|(pos, _)| a >> pos & 1 == 1)
                .fold(0u128, |m, (_, &v)| m | 1 << v)
        })
        .filter(|&mask| is_associated_candidate(ideal, mask))
        .collect();
    found
        .into_iter()
        .map(|mask| MonomialPrime::from_mask(ring, mask))
        .collect()
}

/// `Ass(I^k)`.
pub fn ass_power(ideal: &MonomialIdeal, k: usize) -> Result<PrimeSet> {
    ideal.require_proper()?;
    ass(&cache::power(ideal, k)?)
}

/// Window settings for the stabilization heuristics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StabilityConfig {
    pub k_max: usize,
    pub window: usize,
}

impl Default for StabilityConfig {
    fn default() -> Self {
        StabilityConfig {
            k_max: 8,
            window: 2,
        }
    }
}

impl StabilityConfig {
    pub fn validate(&self) -> Result<()> {
        if self.window < 2 || self.window > self.k_max {
            Err(Error::Window {
                window: self.window,
                k_max: self.k_max,
            })
        } else {
            Ok(())
        }
    }
}

/// Per-power associated primes over `1..=k_max` with the observed tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub per_k: BTreeMap<usize, PrimeSet>,
    /// Union of every computed `Ass(I^k)`.
    pub union: PrimeSet,
    /// `Ass(I^{k_max})`.
    pub stable_set: PrimeSet,
    /// First `k` of the constant tail, if the tail spans at least `window` powers.
    pub stable_from: Option<usize>,
    pub window: usize,
    /// Only set when a structural result fixes `Ass(I^k)` for every `k`.
    pub verified: bool,
}

fn stabilization(
    ideal: &MonomialIdeal,
    k_max: usize,
    window: usize,
) -> Result<StabilizationReport> {
    ideal.require_proper()?;
    let mut per_k = BTreeMap::new();
    for k in 1..=k_max {
        per_k.insert(k, ass_power(ideal, k)?);
    }
    let union = per_k.values().fold(PrimeSet::new(), |acc, s| acc.union(s));
    let stable_set = per_k[&k_max].clone();
    let mut from = k_max;
    while from > 1 && per_k[&(from - 1)] == stable_set {
        from -= 1;
    }
    let verified = is_complete_intersection(ideal);
    let stable_from = if verified || k_max + 1 - from >= window {
        Some(from)
    } else {
        None
    };
    Ok(StabilizationReport {
        per_k,
        union,
        stable_set,
        stable_from,
        window,
        verified,
    })
}

/// `Ass*(I)` approximated by the union over `k <= k_max`.
pub fn ass_star(ideal: &MonomialIdeal, k_max: usize) -> Result<StabilizationReport> {
    if k_max == 0 {
        return Err(Error::ZeroPower);
    }
    stabilization(ideal, k_max, k_max.min(2))
}

/// `Ass^∞(I)` read off the constant tail of `Ass(I^k)`, `k <= k_max`.
pub fn ass_infty(ideal: &MonomialIdeal, cfg: StabilityConfig) -> Result<StabilizationReport> {
    cfg.validate()?;
    stabilization(ideal, cfg.k_max, cfg.window)
}

/// Both ideals proper and nonzero in one ring, with disjoint supports.
pub(crate) fn require_disjoint(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    check_same(i.ring(), j.ring())?;
    i.require_proper()?;
    j.require_proper()?;
    if i.support_mask() & j.support_mask() != 0 {
        return Err(Error::OverlappingSupports);
    }
    Ok(())
}

/// `Ass((I+J)^k)` from the associated primes of the powers of the parts:
/// the union over `0 <= l < k` of `{p + q : p ∈ Ass(I^{k-l}), q ∈ Ass(J^{l+1})}`.
pub fn ass_sum_power(i: &MonomialIdeal, j: &MonomialIdeal, k: usize) -> Result<PrimeSet> {
    require_disjoint(i, j)?;
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let mut out = PrimeSet::new();
    for l in 0..k {
        let left = ass_power(i, k - l)?;
        let right = ass_power(j, l + 1)?;
        for p in &left {
            for q in &right {
                out.insert(p.join(q)?);
            }
        }
    }
    Ok(out)
}

/// `Ass((IJ)^k) = Ass(I^k) ∪ Ass(J^k)` for disjoint supports.
pub fn ass_product(i: &MonomialIdeal, j: &MonomialIdeal, k: usize) -> Result<PrimeSet> {
    require_disjoint(i, j)?;
    Ok(ass_power(i, k)?.union(&ass_power(j, k)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumInftyReport {
    pub primes: PrimeSet,
    pub verified: bool,
}

/// Stable associated primes of `I + J` assembled from the parts:
/// `{p+q : p ∈ Ass*(I), q ∈ Ass^∞(J)} ∪ {p+q : p ∈ Ass^∞(I), q ∈ Ass*(J)}`.
pub fn ass_sum_infty(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    cfg: StabilityConfig,
) -> Result<SumInftyReport> {
    require_disjoint(i, j)?;
    let ri = ass_infty(i, cfg)?;
    let rj = ass_infty(j, cfg)?;
    let mut primes = PrimeSet::new();
    for (star, infty) in [(&ri.union, &rj.stable_set), (&ri.stable_set, &rj.union)] {
        for p in star {
            for q in infty {
                primes.insert(p.join(q)?);
            }
        }
    }
    Ok(SumInftyReport {
        primes,
        verified: ri.verified && rj.verified,
    })
}
