//! Solutions of `a^x + b^y = c^z` when `gcd(a, b) > 1`: enumeration,
//! per-prime typing, the four infinite families and the search for
//! anomalous two-solution cases.

pub mod arith;
pub mod checks;
pub mod classify;
mod error;
pub mod families;
pub mod known;
pub mod oracle;
pub mod search;
pub mod solve;
pub mod triple;

pub use error::{Error, Result};
