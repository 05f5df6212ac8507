use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::{check_same, Ring};

/// Prime ideal generated by a nonempty set of variables.
#[derive(Debug, Clone)]
pub struct MonomialPrime {
    ring: Ring,
    mask: u128,
}

impl MonomialPrime {
    pub fn new(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = 0u128;
        for i in vars {
            if i >= ring.len() {
                return Err(Error::VariableIndex {
                    index: i,
                    len: ring.len(),
                });
            }
            mask |= 1 << i;
        }
        MonomialPrime::from_mask(ring, mask)
    }

    pub fn from_names<S: AsRef<str>>(ring: &Ring, names: &[S]) -> Result<Self> {
        let vars = names
            .iter()
            .map(|n| {
                ring.index_of(n.as_ref())
                    .ok_or_else(|| Error::InvalidVariableName(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialPrime::new(ring, vars)
    }

    pub fn from_mask(ring: &Ring, mask: u128) -> Result<Self> {
        if mask == 0 {
            return Err(Error::EmptyPrime);
        }
        if ring.len() < 128 && mask >> ring.len() != 0 {
            return Err(Error::VariableIndex {
                index: 127 - mask.leading_zeros() as usize,
                len: ring.len(),
            });
        }
        Ok(MonomialPrime {
            ring: ring.clone(),
            mask,
        })
    }

    /// The maximal ideal generated by every variable.
    pub fn maximal(ring: &Ring) -> Self {
        MonomialPrime::new(ring, 0..ring.len()).expect("rings are nonempty")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ring.len()).filter(move |&i| self.mask >> i & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_var(&self, index: usize) -> bool {
        index < 128 && self.mask >> index & 1 == 1
    }

    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_strict_subset(&self, other: &MonomialPrime) -> bool {
        self.is_subset(other) && self.mask != other.mask
    }

    /// `p + q`.
    pub fn join(&self, other: &MonomialPrime) -> Result<MonomialPrime> {
        check_same(&self.ring, &other.ring)?;
        MonomialPrime::from_mask(&self.ring, self.mask | other.mask)
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.len();
        MonomialIdeal::from_canonical(
            self.ring.clone(),
            self.vars().map(|i| Monomial::var(n, i)).collect(),
        )
    }

    pub fn names(&self) -> Vec<&str> {
        self.vars().map(|i| self.ring.name(i)).collect()
    }
}

impl PartialEq for MonomialPrime {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && crate::ring::same_ring(&self.ring, &other.ring)
    }
}

impl Eq for MonomialPrime {}

impl Hash for MonomialPrime {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mask.hash(state);
    }
}

/// Cardinality first, then the sorted index lists lexicographically.
impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vars().cmp(other.vars()))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(","))
    }
}

impl Serialize for MonomialPrime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.names())
    }
}

/// Canonically sorted set of monomial primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct PrimeSet {
    primes: Vec<MonomialPrime>,
}

impl PrimeSet {
    pub fn new() -> Self {
        PrimeSet::default()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, MonomialPrime> {
        self.primes.iter()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: &MonomialPrime) -> bool {
        self.primes.binary_search(p).is_ok()
    }

    pub fn insert(&mut self, p: MonomialPrime) -> bool {
        match self.primes.binary_search(&p) {
            Ok(_) => false,
            Err(pos) => {
                self.primes.insert(pos, p);
                true
            }
        }
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        self.iter().chain(other.iter()).cloned().collect()
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.iter().all(|p| other.contains(p))
    }

    /// Elements of the set maximal under inclusion.
    pub fn maximal(&self) -> PrimeSet {
        self.iter()
            .filter(|p| !self.iter().any(|q| p.is_strict_subset(q)))
            .cloned()
            .collect()
    }

    pub fn as_slice(&self) -> &[MonomialPrime] {
        &self.primes
    }
}

impl FromIterator<MonomialPrime> for PrimeSet {
    fn from_iter<T: IntoIterator<Item = MonomialPrime>>(iter: T) -> Self {
        let mut primes: Vec<_> = iter.into_iter().collect();
        primes.sort();
        primes.dedup();
        PrimeSet { primes }
    }
}

impl<'a> IntoIterator for &'a PrimeSet {
    type Item = &'a MonomialPrime;
    type IntoIter = std::slice::Iter<'a, MonomialPrime>;
    fn into_iter(self) -> Self::IntoIter {
        self.primes.iter()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::AmbientRing;

    #[test]
    fn ordering_and_display() {
        let r = AmbientRing::new(["x", "y", "z"]).unwrap();
        let set: PrimeSet = [
            MonomialPrime::new(&r, [0, 1, 2]).unwrap(),
            MonomialPrime::new(&r, [1, 2]).unwrap(),
            MonomialPrime::new(&r, [2]).unwrap(),
            MonomialPrime::new(&r, [0, 1]).unwrap(),
            MonomialPrime::new(&r, [1, 2]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(set.to_string(), "{(z), (x,y), (y,z), (x,y,z)}");
        assert_eq!(set.maximal().to_string(), "{(x,y,z)}");
    }

    #[test]
    fn prime_ideal_round_trip() {
        let r = AmbientRing::new(["x", "y", "z"]).unwrap();
        let p = MonomialPrime::new(&r, [0, 2]).unwrap();
        assert_eq!(p.to_ideal().as_prime(), Some(p.clone()));
        assert_eq!(MonomialPrime::new(&r, []), Err(Error::EmptyPrime));
        assert!(matches!(
            MonomialPrime::new(&r, [3]),
            Err(Error::VariableIndex { .. })
        ));
    }
}
