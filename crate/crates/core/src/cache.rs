//! Bounded in-memory memo tables shared by the power, Ass and v_p routines.
//!
//! Values are immutable, so concurrent readers only ever see complete
//! entries. When a table reaches its capacity it is cleared wholesale.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{LazyLock, RwLock};

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::prime::{MonomialPrime, PrimeSet};

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Turn every memo table on or off (off also empties them).
pub fn set_enabled(on: bool) {
    ENABLED.store(on, Ordering::SeqCst);
    if !on {
        clear();
    }
}

pub fn clear() {
    POWERS.clear();
    ASS.clear();
    VLOCAL.clear();
}

pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
    capacity: usize,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    fn new(capacity: usize) -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
            capacity,
        }
    }

    pub(crate) fn get(&self, key: &K) -> Option<V> {
        if !ENABLED.load(Ordering::Relaxed) {
            return None;
        }
        self.map.read().ok()?.get(key).cloned()
    }

    pub(crate) fn insert(&self, key: K, value: V) {
        if !ENABLED.load(Ordering::Relaxed) {
            return;
        }
        if let Ok(mut map) = self.map.write() {
            if map.len() >= self.capacity {
                map.clear();
            }
            map.insert(key, value);
        }
    }

    pub(crate) fn get_or_try<F>(&self, key: &K, compute: F) -> Result<V>
    where
        F: FnOnce() -> Result<V>,
    {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = compute()?;
        self.insert(key.clone(), v.clone());
        Ok(v)
    }

    fn clear(&self) {
        if let Ok(mut map) = self.map.write() {
            map.clear();
        }
    }
}

pub(crate) static POWERS: LazyLock<Memo<(MonomialIdeal, usize), MonomialIdeal>> =
    LazyLock::new(|| Memo::new(512));
pub(crate) static ASS: LazyLock<Memo<MonomialIdeal, PrimeSet>> = LazyLock::new(|| Memo::new(512));
pub(crate) static VLOCAL: LazyLock<Memo<(MonomialIdeal, MonomialPrime), u64>> =
    LazyLock::new(|| Memo::new(4096));

/// `I^k`, reusing the largest cached lower power.
pub fn power(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    if k <= 1 {
        return ideal.power(k);
    }
    if let Some(p) = POWERS.get(&(ideal.clone(), k)) {
        return Ok(p);
    }
    let mut base = (1, ideal.clone());
    for j in (2..k).rev() {
        if let Some(p) = POWERS.get(&(ideal.clone(), j)) {
            base = (j, p);
            break;
        }
    }
    let (mut j, mut acc) = base;
    while j < k {
        acc = acc.product(ideal)?;
        j += 1;
        POWERS.insert((ideal.clone(), j), acc.clone());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::AmbientRing;

    #[test]
    fn cached_power_matches_direct() {
        let r = AmbientRing::new(["x", "y", "z"]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, &[[1, 1, 0], [0, 1, 1], [2, 0, 1]]).unwrap();
        for k in [3, 1, 2, 5, 4] {
            assert_eq!(power(&i, k).unwrap(), i.power(k).unwrap());
        }
    }
}
