use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::prime::{is_prime, is_prime_u64, mulmod};
use super::ArithError;

/// Trial division covers every prime below this bound.
pub const TRIAL_BOUND: u32 = 1 << 12;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = TRIAL_BOUND as usize;
        let mut composite = vec![false; limit];
        let mut out = Vec::new();
        for i in 2..limit {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j < limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

/// A positive integer together with its prime factorization.
///
/// Factors are kept sorted by prime, each with exponent at least one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factored {
    value: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl Factored {
    pub fn one() -> Self {
        Factored { value: BigUint::one(), factors: Vec::new() }
    }

    /// Builds from prime powers that are already known; primes are checked.
    pub fn from_prime_powers(mut factors: Vec<(BigUint, u32)>) -> Result<Self, ArithError> {
        factors.retain(|(_, e)| *e > 0);
        factors.sort();
        for w in factors.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(ArithError::DuplicatePrime(w[0].0.clone()));
            }
        }
        let mut value = BigUint::one();
        for (p, e) in &factors {
            if !is_prime(p) {
                return Err(ArithError::NotPrime(p.clone()));
            }
            value *= p.pow(*e);
        }
        Ok(Factored { value, factors })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn radical(&self) -> BigUint {
        self.primes().fold(BigUint::one(), |acc, p| acc * p)
    }

    /// Product of two factorizations.
    pub fn mul(&self, other: &Factored) -> Factored {
        let mut merged: Vec<(BigUint, u32)> = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            match (self.factors.get(i), other.factors.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    merged.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    merged.push(a.clone());
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    merged.push(b.clone());
                    j += 1;
                }
                (Some(a), None) => {
                    merged.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    merged.push(b.clone());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Factored { value: &self.value * &other.value, factors: merged }
    }

    pub fn pow(&self, e: u32) -> Factored {
        if e == 0 {
            return Factored::one();
        }
        Factored {
            value: self.value.pow(e),
            factors: self.factors.iter().map(|(p, k)| (p.clone(), k * e)).collect(),
        }
    }

    /// Recomputes the product of the prime powers.
    pub fn recompose(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

/// Full prime factorization of `n`.
pub fn factorize(n: &BigUint) -> Result<Factored, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    for &p in small_primes() {
        if rest.is_one() {
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((BigUint::from(p), e));
        }
        if BigUint::from(p as u64 * p as u64) > rest {
            break;
        }
    }
    if !rest.is_one() {
        let bound = BigUint::from(TRIAL_BOUND as u64 * TRIAL_BOUND as u64);
        let mut large = Vec::new();
        if rest < bound {
            large.push(rest);
        } else {
            split_into_primes(rest, &mut large);
        }
        large.sort();
        for p in large {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    Ok(Factored { value: n.clone(), factors })
}

pub fn factorize_u64(n: u64) -> Result<Factored, ArithError> {
    factorize(&BigUint::from(n))
}

/// Splits a value with no prime factor below `TRIAL_BOUND` into primes (with multiplicity).
fn split_into_primes(n: BigUint, out: &mut Vec<BigUint>) {
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            out.push(m);
            continue;
        }
        if let Some((root, e)) = small_root(&m) {
            for _ in 0..e {
                stack.push(root.clone());
            }
            continue;
        }
        let d = match m.to_u64() {
            Some(small) => BigUint::from(rho_u64(small)),
            None => rho_big(&m),
        };
        let q = &m / &d;
        stack.push(d);
        stack.push(q);
    }
}

/// Detects m = r^e for prime e, used before rho since rho handles prime powers poorly.
fn small_root(m: &BigUint) -> Option<(BigUint, u32)> {
    // every prime factor exceeds TRIAL_BOUND = 2^12
    let max_e = (m.bits() / 12) as u32;
    for e in 2..=max_e.max(2) {
        if !is_prime_u64(e as u64) {
            continue;
        }
        let r = m.nth_root(e);
        if r.pow(e) == *m {
            return Some((r, e));
        }
    }
    None
}

fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        if let Some(d) = brent_u64(n, c) {
            return d;
        }
        c += 1;
    }
}

fn brent_u64(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mulmod(x, x, n) + c) % n;
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let m = 128u64;
    let mut g = 1u64;
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mulmod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        if let Some(d) = brent_big(n, &c) {
            return d;
        }
        c += 1u32;
    }
}

fn brent_big(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let m = 128u64;
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
    }
    if g == *n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if g > one {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}
