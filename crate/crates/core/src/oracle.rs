//! Brute-force witnesses for associated primes and v-numbers.
//!
//! Every associated prime of a monomial ideal `I` is `(I : f)` for some
//! monomial `f`, and raising an exponent of `f` past the largest exponent
//! of that variable among the generators does not change `(I : f)`. So the
//! divisors of `lcm(G(I))` already realize every associated prime with a
//! witness of least degree, and enumerating them is exact.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;

pub const DEFAULT_BUDGET: u128 = 2_000_000;

/// A monomial `f` with `(I : f) = prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessRecord {
    prime: MonomialPrime,
    witness: Monomial,
}

impl WitnessRecord {
    /// Re-checks the colon before accepting the record.
    pub fn new(ideal: &MonomialIdeal, witness: Monomial) -> Option<Self> {
        let prime = ideal.colon_monomial(&witness).ok()?.as_prime()?;
        Some(WitnessRecord { prime, witness })
    }

    pub fn prime(&self) -> &MonomialPrime {
        &self.prime
    }

    pub fn witness(&self) -> &Monomial {
        &self.witness
    }

    pub fn degree(&self) -> u64 {
        self.witness.degree()
    }
}

impl Serialize for WitnessRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WitnessRecord", 3)?;
        st.serialize_field("prime", &self.prime)?;
        st.serialize_field(
            "witness",
            &self.witness.display(self.prime.ring()).to_string(),
        )?;
        st.serialize_field("degree", &self.degree())?;
        st.end()
    }
}

/// All divisors of `lcm(G(I))`, by ascending degree then canonical order.
fn divisors(ideal: &MonomialIdeal, budget: u128) -> Result<Vec<Monomial>> {
    let top = ideal.lcm_gens()?;
    let needed: u128 = top
        .exponents()
        .iter()
        .map(|&e| u128::from(e) + 1)
        .try_fold(1u128, |acc, x| acc.checked_mul(x))
        .unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::OracleBudget { needed, budget });
    }
    let mut out = vec![Monomial::one(top.arity())];
    for (i, &e) in top.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for m in &out {
            for a in 0..=e {
                let mut exps = m.exponents().to_vec();
                exps[i] = a;
                next.push(Monomial::new(exps));
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// One least-degree witness per associated prime, in canonical prime order.
pub fn oracle_ass(ideal: &MonomialIdeal, budget: u128) -> Result<Vec<WitnessRecord>> {
    ideal.require_proper()?;
    let mut best: BTreeMap<MonomialPrime, WitnessRecord> = BTreeMap::new();
    for f in divisors(ideal, budget)? {
        if let Some(rec) = WitnessRecord::new(ideal, f) {
            // divisors arrive by ascending degree, so the first hit is minimal
            best.entry(rec.prime.clone()).or_insert(rec);
        }
    }
    Ok(best.into_values().collect())
}

/// Least degree of a divisor witness for `p`.
pub fn oracle_v_local(ideal: &MonomialIdeal, p: &MonomialPrime, budget: u128) -> Result<u64> {
    crate::ring::check_same(ideal.ring(), p.ring())?;
    ideal.require_proper()?;
    for f in divisors(ideal, budget)? {
        if ideal.colon_monomial(&f)?.as_prime().as_ref() == Some(p) {
            return Ok(f.degree());
        }
    }
    Err(Error::NotRealized(p.to_string()))
}

/// Least degree of any divisor witness.
pub fn oracle_v(ideal: &MonomialIdeal, budget: u128) -> Result<u64> {
    ideal.require_proper()?;
    for f in divisors(ideal, budget)? {
        if ideal.colon_monomial(&f)?.as_prime().is_some() {
            return Ok(f.degree());
        }
    }
    unreachable!("a proper nonzero monomial ideal has an associated prime")
}
