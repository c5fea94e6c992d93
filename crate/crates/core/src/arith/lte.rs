//! Valuation growth of `R^n - S^n` and `R^n + S^n`.

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::prime::is_prime_u64;
use super::{support_subset, valuation_unchecked, ArithError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

fn combine(r: u64, s: u64, n: u32, sign: Sign) -> BigUint {
    let rn = BigUint::from(r).pow(n);
    let sn = BigUint::from(s).pow(n);
    match sign {
        Sign::Minus => rn - sn,
        Sign::Plus => rn + sn,
    }
}

fn check_coprime_ordered(r: u64, s: u64) -> Result<(), ArithError> {
    if r <= s || s == 0 {
        return Err(ArithError::Precondition(format!("need r > s >= 1, got r={r}, s={s}")));
    }
    if r.gcd(&s) != 1 {
        return Err(ArithError::Precondition(format!("need gcd(r, s) = 1, got r={r}, s={s}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LteReport {
    pub v1: u32,
    pub v2: u32,
    /// `p^(v2 - v1)` divides `n2 / n1`; always true unless the library is wrong.
    pub divides: bool,
}

/// Odd-prime lifting: with `p^v1 || R^n1 - S^n1`, `p^v1 > 2` and `n1 | n2`,
/// reports `v2` and whether `p^(v2-v1)` divides `n2/n1`.
pub fn lte_odd(r: u64, s: u64, p: u64, n1: u32, n2: u32) -> Result<LteReport, ArithError> {
    check_coprime_ordered(r, s)?;
    if p % 2 == 0 || !is_prime_u64(p) {
        return Err(ArithError::Precondition(format!("p must be an odd prime, got {p}")));
    }
    if n1 == 0 || n2 % n1 != 0 {
        return Err(ArithError::Precondition(format!("need n1 | n2 with n1 >= 1, got {n1}, {n2}")));
    }
    let pb = BigUint::from(p);
    let v1 = valuation_unchecked(&pb, &combine(r, s, n1, Sign::Minus));
    if v1 == 0 {
        return Err(ArithError::Precondition(format!("p^v1 = 1 <= 2 for p={p}, r={r}, s={s}, n1={n1}")));
    }
    let v2 = valuation_unchecked(&pb, &combine(r, s, n2, Sign::Minus));
    let quotient = BigUint::from(n2 / n1);
    let divides = v2 >= v1 && (&quotient % pb.pow(v2 - v1)) == BigUint::from(0u32);
    Ok(LteReport { v1, v2, divides })
}

/// Exact 2-adic valuations of `R^n2 - S^n2` and `R^n2 + S^n2` for odd coprime `R > S`,
/// derived from the valuations at `n1` (a divisor of `n2`).
pub fn two_adic_profile(r: u64, s: u64, n1: u32, n2: u32) -> Result<(u32, u32), ArithError> {
    check_coprime_ordered(r, s)?;
    if r % 2 == 0 || s % 2 == 0 {
        return Err(ArithError::Precondition(format!("r and s must be odd, got r={r}, s={s}")));
    }
    if n1 == 0 || n2 % n1 != 0 {
        return Err(ArithError::Precondition(format!("need n1 | n2 with n1 >= 1, got {n1}, {n2}")));
    }
    let two = BigUint::from(2u32);
    let t = valuation_unchecked(&two, &combine(r, s, n1, Sign::Minus));
    let u = valuation_unchecked(&two, &combine(r, s, n1, Sign::Plus));
    let q = n2 / n1;
    if q % 2 == 1 {
        Ok((t, u))
    } else {
        let v = q.trailing_zeros();
        Ok((t.max(u) + v, 1))
    }
}

/// All `n1 < n2 <= nmax` with every prime of `R^n2 -/+ S^n2` dividing `R^n1 -/+ S^n1`.
pub fn same_prime_set_scan(r: u64, s: u64, nmax: u32, sign: Sign) -> Result<Vec<(u32, u32)>, ArithError> {
    check_coprime_ordered(r, s)?;
    if nmax < 2 {
        return Err(ArithError::Precondition(format!("nmax must be >= 2, got {nmax}")));
    }
    let values: Vec<BigUint> = (1..=nmax).map(|n| combine(r, s, n, sign)).collect();
    let mut out = Vec::new();
    for n2 in 2..=nmax {
        for n1 in 1..n2 {
            if support_subset(&values[n2 as usize - 1], &values[n1 as usize - 1]) {
                out.push((n1, n2));
            }
        }
    }
    Ok(out)
}
