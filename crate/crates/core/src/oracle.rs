//! Slow reference implementations used to cross-check the fast paths.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

/// All `(x, y, z)` with `a^x + b^y = c^z` and `c^z < 2^max_bits`, by a plain
/// double loop over `x` and `y`. Requires `a, b, c >= 2` and `max_bits <= 127`.
pub fn naive_solutions(a: u64, b: u64, c: u64, max_bits: u32) -> Vec<(u32, u32, u32)> {
    assert!(a >= 2 && b >= 2 && c >= 2 && max_bits <= 127);
    let limit = 1u128 << max_bits;
    let mut out = Vec::new();
    let mut ax = a as u128;
    let mut x = 1;
    while ax < limit {
        let mut by = b as u128;
        let mut y = 1;
        while ax + by < limit {
            let sum = ax + by;
            let mut cz = c as u128;
            let mut z = 1;
            while cz < sum {
                cz *= c as u128;
                z += 1;
            }
            if cz == sum {
                out.push((x, y, z));
            }
            by *= b as u128;
            y += 1;
        }
        ax *= a as u128;
        x += 1;
    }
    out.sort_by_key(|&(x, y, z)| (z, x, y));
    out
}

/// Exponent of `p` in `n > 0` by repeated division.
pub fn naive_valuation(p: u64, n: &BigUint) -> u32 {
    assert!(!n.is_zero());
    let p = BigUint::from(p);
    let mut m = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// `R^t - (-1)^eps S^t mod M` for `t = 1..=cap`, by direct iteration.
pub fn index_residues(r: u64, s: u64, m: u64, eps: u8, cap: u64) -> Vec<u64> {
    let m128 = m as u128;
    let (mut rt, mut st) = (1u128, 1u128);
    (1..=cap)
        .map(|_| {
            rt = rt * r as u128 % m128;
            st = st * s as u128 % m128;
            if eps == 0 {
                ((rt + m128 - st) % m128) as u64
            } else {
                ((rt + st) % m128) as u64
            }
        })
        .collect()
}

/// `x` is a power of two.
pub fn is_two_power(x: u64) -> bool {
    x != 0 && x & (x - 1) == 0
}
