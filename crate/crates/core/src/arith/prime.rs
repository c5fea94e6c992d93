//! Primality testing.
//!
//! Values below 2^64 use Miller-Rabin with the first twelve prime bases,
//! which is exact on that range. Larger values use the first thirteen
//! prime bases (exact below 3.3 * 10^24) and, above that bound, an
//! additional strong Lucas test (Baillie-PSW).

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit values.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES[..12] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = base.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a / n) for odd positive n.
fn jacobi(a: &BigUint, n: &BigUint) -> i32 {
    let mut a = a % n;
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            a >>= tz;
            let n_mod_8 = (&n % 8u32).to_u32().unwrap();
            if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        let a_mod_4 = (&a % 4u32).to_u32().unwrap();
        let n_mod_4 = (&n % 4u32).to_u32().unwrap();
        if a_mod_4 == 3 && n_mod_4 == 3 {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn signed_mod(v: i64, n: &BigUint) -> BigUint {
    if v >= 0 {
        BigUint::from(v as u64) % n
    } else {
        let r = BigUint::from(v.unsigned_abs()) % n;
        if r.is_zero() {
            r
        } else {
            n - r
        }
    }
}

fn half_mod(x: BigUint, n: &BigUint) -> BigUint {
    if x.is_odd() {
        (x + n) >> 1
    } else {
        x >> 1
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    let mut d_val: i64 = 5;
    loop {
        let dm = signed_mod(d_val, n);
        match jacobi(&dm, n) {
            -1 => break,
            0 => {
                if dm != *n && !dm.is_zero() {
                    return false;
                }
            }
            _ => {}
        }
        d_val = if d_val > 0 { -(d_val + 2) } else { -d_val + 2 };
    }
    let q_val = (1 - d_val) / 4;
    let d_mod = signed_mod(d_val, n);
    let q_mod = signed_mod(q_val, n);

    let n_plus_1 = n + 1u32;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let k = &n_plus_1 >> s;

    // U_1 = 1, V_1 = P = 1, Q^1 = Q.
    let mut u = BigUint::one();
    let mut v = BigUint::one();
    let mut qk = q_mod.clone();
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        // doubling
        u = (&u * &v) % n;
        v = (&v * &v + n * 2u32 - (&qk * 2u32) % n) % n;
        qk = (&qk * &qk) % n;
        if k.bit(i) {
            let u_next = half_mod(&u + &v, n);
            let v_next = half_mod((&d_mod * &u) % n + &v, n);
            u = u_next % n;
            v = v_next % n;
            qk = (&qk * &q_mod) % n;
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v + n * 2u32 - (&qk * 2u32) % n) % n;
        qk = (&qk * &qk) % n;
        if v.is_zero() {
            return true;
        }
    }
    false
}

/// Primality test for arbitrary-precision values.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    for &p in &BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    for &p in &BASES {
        if !strong_probable_prime(n, &BigUint::from(p)) {
            return false;
        }
    }
    let exact_bound: BigUint = "3317044064679887385961981".parse().unwrap();
    if *n < exact_bound {
        return true;
    }
    strong_lucas(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sieve(limit: usize) -> Vec<bool> {
        let mut is = vec![true; limit + 1];
        is[0] = false;
        is[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if is[i] {
                let mut j = i * i;
                while j <= limit {
                    is[j] = false;
                    j += i;
                }
            }
            i += 1;
        }
        is
    }

    #[test]
    fn agrees_with_sieve() {
        let table = sieve(200_000);
        for (n, &p) in table.iter().enumerate() {
            assert_eq!(is_prime_u64(n as u64), p, "n = {n}");
        }
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // strong pseudoprimes to several small bases
        for n in [2047u64, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383, 341550071728321] {
            assert!(!is_prime_u64(n), "{n}");
        }
        assert!(is_prime_u64(18446744073709551557));
    }

    #[test]
    fn big_values() {
        let m127 = (BigUint::one() << 127) - 1u32;
        assert!(is_prime(&m127));
        let m61 = (BigUint::one() << 61) - 1u32;
        assert!(!is_prime(&(&m61 * &m61)));
        assert!(!is_prime(&(&m127 * 3u32)));
        // 2^89 - 1 is prime, 2^83 - 1 is not
        assert!(is_prime(&((BigUint::one() << 89) - 1u32)));
        assert!(!is_prime(&((BigUint::one() << 83) - 1u32)));
        // product of two primes above the Miller-Rabin exact bound
        let p: BigUint = "1000000000000000000000007".parse().unwrap();
        let q: BigUint = "100000000000000000039".parse().unwrap();
        assert!(is_prime(&p));
        assert!(is_prime(&q));
        assert!(!is_prime(&(p * q)));
    }

    #[test]
    fn lucas_alone_on_small_primes() {
        let table = sieve(5000);
        for n in (5..5000usize).step_by(2) {
            if table[n] {
                assert!(strong_lucas(&BigUint::from(n)), "{n}");
            }
        }
    }
}
