use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Variable sets are packed into `u128` masks, which caps the ring size.
pub const MAX_VARIABLES: usize = 128;

/// Ordered list of variable names fixing a polynomial ring `K[x_0, ..., x_{n-1}]`.
///
/// The coefficient field never appears: every computation here is
/// coefficient-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AmbientRing {
    names: Vec<String>,
}

/// Shared handle; ideals and primes hold one of these.
pub type Ring = Arc<AmbientRing>;

impl AmbientRing {
    pub fn new<I, S>(names: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        if names.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(AmbientRing { names }))
    }

    /// Ring on `x1, ..., xn`.
    pub fn indexed(prefix: &str, n: usize) -> Result<Ring> {
        AmbientRing::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Concatenation of two rings; names must stay unique.
    pub fn join(&self, other: &AmbientRing) -> Result<Ring> {
        AmbientRing::new(self.names.iter().chain(other.names.iter()).cloned())
    }
}

impl fmt::Display for AmbientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {}", self.names.join(" "))
    }
}

/// Identifier-like names: a letter or `_`, then letters, digits or `_`.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_same(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}
