//! Monomial ideals in canonical minimal-generator form.
//!
//! An ideal is stored as the divisibility antichain of its minimal
//! generators, sorted by the canonical monomial order. Two ideals are equal
//! exactly when their generator lists are.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{divides, Monomial};
use crate::prime::MonomialPrime;
use crate::ring::{check_same, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Stable value of the chain `I ⊆ (I:J) ⊆ (I:J^2) ⊆ ...` and the first
/// exponent at which it is reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub ideal: MonomialIdeal,
    pub exponent: usize,
}

/// Canonical antichain of `gens`: the minimal elements under divisibility,
/// sorted, without duplicates.
pub fn minimalize(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let gens: Vec<Monomial> = gens.into_iter().collect();
    if let Some(bad) = gens.iter().find(|g| g.arity() != ring.len()) {
        return Err(Error::Arity {
            expected: ring.len(),
            found: bad.arity(),
        });
    }
    Ok(MonomialIdeal::from_canonical(
        ring.clone(),
        minimal_elements(gens),
    ))
}

pub(crate) fn minimal_elements(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    let mut masks: Vec<u128> = Vec::with_capacity(gens.len());
    for g in gens {
        let gm = g.support_mask();
        let dominated = kept
            .iter()
            .zip(masks.iter())
            .any(|(k, &km)| km & !gm == 0 && divides(k.exponents(), g.exponents()));
        if !dominated {
            kept.push(g);
            masks.push(gm);
        }
    }
    kept
}

/// Some generator divides `m`.
#[inline]
pub(crate) fn member(gens: &[Monomial], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g.exponents(), m))
}

/// Generators laid out for repeated membership tests. The input must be
/// sorted by degree, so a scan stops at the first generator too large to
/// divide.
pub(crate) struct GenIndex {
    n: usize,
    flat: Vec<u32>,
    masks: Vec<u128>,
    degrees: Vec<u64>,
}

impl GenIndex {
    pub(crate) fn new(gens: &[Monomial]) -> Self {
        let n = gens.first().map_or(0, Monomial::arity);
        debug_assert!(gens.windows(2).all(|w| w[0].degree() <= w[1].degree()));
        GenIndex {
            n,
            flat: gens
                .iter()
                .flat_map(|g| g.exponents().iter().copied())
                .collect(),
            masks: gens.iter().map(Monomial::support_mask).collect(),
            degrees: gens.iter().map(Monomial::degree).collect(),
        }
    }

    pub(crate) fn contains(&self, m: &[u32]) -> bool {
        let mut mask = 0u128;
        let mut degree = 0u64;
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
                degree += u64::from(e);
            }
        }
        for (idx, (&d, &gm)) in self.degrees.iter().zip(&self.masks).enumerate() {
            if d > degree {
                break;
            }
            if gm & !mask == 0 && divides(&self.flat[idx * self.n..(idx + 1) * self.n], m) {
                return true;
            }
        }
        false
    }

    /// Minimal generators of `(I : v)`, in no particular order.
    pub(crate) fn colon_minimal(&self, v: &[u32]) -> Vec<Monomial> {
        let n = self.n;
        let count = self.degrees.len();
        let mut flat = vec![0u32; count * n];
        let mut keys: Vec<(u64, u128, usize)> = Vec::with_capacity(count);
        for idx in 0..count {
            let row = &mut flat[idx * n..(idx + 1) * n];
            let mut mask = 0u128;
            let mut degree = 0u64;
            for (i, (c, (&g, &e))) in row
                .iter_mut()
                .zip(self.flat[idx * n..].iter().zip(v))
                .enumerate()
            {
                *c = g.saturating_sub(e);
                if *c > 0 {
                    mask |= 1 << i;
                    degree += u64::from(*c);
                }
            }
            keys.push((degree, mask, idx));
        }
        keys.sort_unstable_by_key(|k| k.0);
        let mut kept: Vec<(u128, usize)> = Vec::new();
        for (_, mask, idx) in keys {
            let row = &flat[idx * n..(idx + 1) * n];
            let dominated = kept
                .iter()
                .any(|&(km, k)| km & !mask == 0 && divides(&flat[k * n..(k + 1) * n], row));
            if !dominated {
                kept.push((mask, idx));
            }
        }
        kept.into_iter()
            .map(|(_, idx)| Monomial::new(flat[idx * n..(idx + 1) * n].to_vec()))
            .collect()
    }
}

impl MonomialIdeal {
    /// Wraps a list that is already a sorted antichain.
    pub(crate) fn from_canonical(ring: Ring, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { ring, gens }
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal::from_canonical(ring.clone(), Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        MonomialIdeal::from_canonical(ring.clone(), vec![Monomial::one(ring.len())])
    }

    pub fn principal(ring: &Ring, m: Monomial) -> Result<Self> {
        minimalize(ring, [m])
    }

    /// Ideal generated by exponent vectors, minimalized.
    pub fn from_exponents<E: AsRef<[u32]>>(ring: &Ring, gens: &[E]) -> Result<Self> {
        minimalize(
            ring,
            gens.iter().map(|e| Monomial::new(e.as_ref().to_vec())),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Minimal generators `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn check_mono(&self, m: &Monomial) -> Result<()> {
        if m.arity() == self.ring.len() {
            Ok(())
        } else {
            Err(Error::Arity {
                expected: self.ring.len(),
                found: m.arity(),
            })
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_mono(m)?;
        Ok(member(&self.gens, m.exponents()))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.gens.iter().all(|g| member(&other.gens, g.exponents())))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(&self.ring, &other.ring)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(MonomialIdeal::from_canonical(
            self.ring.clone(),
            minimal_elements(gens),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.checked_mul(v)?);
            }
        }
        Ok(MonomialIdeal::from_canonical(
            self.ring.clone(),
            minimal_elements(gens),
        ))
    }

    /// `I^k` by repeated multiplication, minimalizing after every step.
    pub fn power(&self, k: usize) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection via pairwise least common multiples.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        Ok(MonomialIdeal::from_canonical(
            self.ring.clone(),
            minimal_elements(gens),
        ))
    }

    /// `(I : v)`, generated by `lcm(u, v) / v` for `u ∈ G(I)`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        self.check_mono(v)?;
        let gens = self.gens.iter().map(|u| u.colon(v)).collect();
        Ok(MonomialIdeal::from_canonical(
            self.ring.clone(),
            minimal_elements(gens),
        ))
    }

    /// `(I : J)` as the intersection of `(I : g)` over `g ∈ G(J)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(first)?;
        for g in gens {
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// `I : J^∞`, by iterating `(I : J)` until the chain stops growing.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<Saturation> {
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        check_same(&self.ring, &other.ring)?;
        let max_exp = self
            .gens
            .iter()
            .flat_map(|g| g.exponents().iter().copied())
            .max()
            .unwrap_or(0) as usize;
        let cap = 10 * (1 + max_exp);
        let mut cur = self.clone();
        for exponent in 0..=cap {
            let next = cur.colon_ideal(other)?;
            if next == cur {
                return Ok(Saturation {
                    ideal: cur,
                    exponent,
                });
            }
            cur = next;
        }
        Err(Error::SaturationCap(cap))
    }

    /// Substitute `x_i -> 1` for every variable in `mask`.
    pub fn drop_vars(&self, mask: u128) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.drop_vars(mask)).collect();
        MonomialIdeal::from_canonical(self.ring.clone(), minimal_elements(gens))
    }

    /// Monomial localization at `p`: variables outside `p` are set to 1.
    pub fn localize(&self, p: &MonomialPrime) -> Result<MonomialIdeal> {
        check_same(&self.ring, p.ring())?;
        Ok(self.drop_vars(!p.mask()))
    }

    /// Initial degree: least degree of a minimal generator.
    pub fn alpha(&self) -> Result<u64> {
        self.require_proper()?;
        Ok(self.gens[0].degree())
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> Result<usize> {
        self.require_proper()?;
        Ok(self.gens.len())
    }

    /// Variables dividing some generator, as indices in increasing order.
    pub fn support(&self) -> Result<Vec<usize>> {
        self.require_proper()?;
        let mask = self.support_mask();
        Ok((0..self.ring.len())
            .filter(|&i| mask >> i & 1 == 1)
            .collect())
    }

    pub fn support_mask(&self) -> u128 {
        self.gens.iter().fold(0, |m, g| m | g.support_mask())
    }

    /// Componentwise maximum of the generator exponents.
    pub fn lcm_gens(&self) -> Result<Monomial> {
        self.require_proper()?;
        Ok(self
            .gens
            .iter()
            .skip(1)
            .fold(self.gens[0].clone(), |acc, g| acc.lcm(g)))
    }

    /// The prime this ideal equals, when every generator is a single variable.
    pub fn as_prime(&self) -> Option<MonomialPrime> {
        if self.gens.is_empty() || !self.gens.iter().all(|g| g.degree() == 1) {
            return None;
        }
        MonomialPrime::from_mask(&self.ring, self.support_mask()).ok()
    }

    /// All minimal generators share one degree.
    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        Ok(())
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.gens.iter().map(|g| g.display(&self.ring).to_string()))
    }
}
