//! Exact computations with monomial ideals: associated primes of powers,
//! local and global v-numbers, and closed forms for sums and products of
//! ideals in disjoint sets of variables.

pub mod assoc;
pub mod cache;
pub mod corpus;
pub mod error;
pub mod fixtures;
pub mod ideal;
pub mod monomial;
pub mod oracle;
pub mod prime;
pub mod ring;
pub mod structure;
pub mod verify;
pub mod vnumber;

pub use assoc::{
    ass, ass_infty, ass_power, ass_product, ass_star, ass_sum_infty, ass_sum_power,
    StabilityConfig, StabilizationReport, SumInftyReport,
};
pub use error::{Error, Result};
pub use ideal::{minimalize, MonomialIdeal, Saturation};
pub use monomial::Monomial;
pub use prime::{MonomialPrime, PrimeSet};
pub use ring::{AmbientRing, Ring};
pub use structure::{Graph, SplitTree};
pub use vnumber::{
    fit_linear, v_function, v_local, v_number, v_product, v_product_local, v_sum, v_sum_local,
    x_ideal, LinearFit, VTable, VValue,
};
