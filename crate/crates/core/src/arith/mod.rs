//! Exact integer primitives: factorization, valuations, perfect powers,
//! least indices and lifting-the-exponent helpers.

mod factor;
mod lte;
mod order;
mod power;
mod prime;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub use factor::{factorize, factorize_u64, Factored, TRIAL_BOUND};
pub use lte::{lte_odd, same_prime_set_scan, two_adic_profile, LteReport, Sign};
pub use order::{least_index, LeastIndex, DEFAULT_LEAST_INDEX_CAP};
pub use power::{
    as_power_of, exact_root, exact_root_u128, is_perfect_power, power_representations, primitive_power,
};
pub use prime::{is_prime, is_prime_u64};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("input must be positive")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(BigUint),
    #[error("prime {0} listed twice")]
    DuplicatePrime(BigUint),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Set of primes dividing `n`, ascending.
pub fn prime_set(n: &BigUint) -> Result<Vec<BigUint>, ArithError> {
    Ok(factorize(n)?.primes().cloned().collect())
}

pub fn radical(n: &BigUint) -> Result<BigUint, ArithError> {
    Ok(factorize(n)?.radical())
}

/// Exponent of the prime `p` in `n`.
pub fn valuation(p: &BigUint, n: &BigUint) -> Result<u32, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p.clone()));
    }
    Ok(valuation_unchecked(p, n))
}

/// Exponent of `p` in nonzero `n`; `p` is assumed to be at least 2.
pub(crate) fn valuation_unchecked(p: &BigUint, n: &BigUint) -> u32 {
    if *p == BigUint::from(2u32) {
        return n.trailing_zeros().unwrap_or(0) as u32;
    }
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// Whether every prime dividing `x` also divides `y` (both positive).
pub fn support_subset(x: &BigUint, y: &BigUint) -> bool {
    let mut rest = x.clone();
    loop {
        if rest.is_one() {
            return true;
        }
        let g = rest.gcd(y);
        if g.is_one() {
            return false;
        }
        while (&rest % &g).is_zero() {
            rest /= &g;
        }
    }
}

/// `P(x) == P(y)` for positive `x`, `y`.
pub fn same_support(x: &BigUint, y: &BigUint) -> bool {
    support_subset(x, y) && support_subset(y, x)
}

/// Greatest divisor of `n` coprime to `m`.
pub fn coprime_part(n: &BigUint, m: &BigUint) -> BigUint {
    let mut rest = n.clone();
    loop {
        let g = rest.gcd(m);
        if g.is_one() {
            return rest;
        }
        while (&rest % &g).is_zero() {
            rest /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn prime_set_examples() {
        assert!(prime_set(&b(1)).unwrap().is_empty());
        assert_eq!(prime_set(&b(24)).unwrap(), vec![b(2), b(3)]);
        assert_eq!(prime_set(&b(4930)).unwrap(), vec![b(2), b(5), b(17), b(29)]);
        assert_eq!(radical(&b(4930)).unwrap(), b(4930));
        assert_eq!(radical(&b(72)).unwrap(), b(6));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&b(2), &b(40)).unwrap(), 3);
        assert_eq!(valuation(&b(7), &b(98)).unwrap(), 2);
        assert_eq!(valuation(&b(3), &b(78405)).unwrap(), 1);
        assert_eq!(valuation(&b(3), &b(7857)).unwrap(), 4);
        assert_eq!(valuation(&b(4), &b(40)), Err(ArithError::NotPrime(b(4))));
        assert_eq!(valuation(&b(3), &b(0)), Err(ArithError::ZeroInput));
    }

    #[test]
    fn support() {
        assert!(support_subset(&b(8), &b(2)));
        assert!(support_subset(&b(1), &b(5)));
        assert!(!support_subset(&b(12), &b(8)));
        assert!(same_support(&b(12), &b(18)));
        assert_eq!(coprime_part(&b(360), &b(6)), b(5));
    }
}
