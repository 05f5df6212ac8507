use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::AmbientRing;

/// Exponent vector of a monomial. The ring is carried by the enclosing
/// ideal; the vector length must equal the ring size wherever the two meet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Monomial { exps: exps.into() }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The variable `x_index` in `n` variables.
    pub fn var(n: usize, index: usize) -> Self {
        let mut exps = vec![0; n];
        exps[index] = 1;
        Monomial::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    /// Indices of variables dividing the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_mask(&self) -> u128 {
        self.support().fold(0, |m, i| m | (1u128 << i))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        divides(&self.exps, &other.exps)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<u32>>>()
            .map(Monomial::new)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial> {
        self.exps
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<u32>>>()
            .map(Monomial::new)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect::<Vec<_>>(),
        )
    }

    /// `lcm(self, v) / v`, the generator of `(self) : v`.
    pub fn colon(&self, v: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(v.exps.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect::<Vec<_>>(),
        )
    }

    /// Exact quotient; `None` unless `divisor` divides `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| self.colon(divisor))
    }

    /// Zero the exponents at the given variables (substitute `x_i -> 1`).
    pub fn drop_vars(&self, mask: u128) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .enumerate()
                .map(|(i, &e)| if mask >> i & 1 == 1 { 0 } else { e })
                .collect::<Vec<_>>(),
        )
    }

    /// Keep only the exponents at the given variables.
    pub fn restrict(&self, mask: u128) -> Monomial {
        self.drop_vars(!mask)
    }

    pub fn display<'a>(&'a self, ring: &'a AmbientRing) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ring }
    }
}

/// Canonical order: degree first, then the exponent vectors compared
/// lexicographically from the first variable, larger exponent first
/// (so `x^2 < x*y < y^2` in `K[x, y]`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[inline]
pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

/// Renders `x^2*y`, or `1` for the unit monomial.
pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a AmbientRing,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
