//! Exact perfect-power detection.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::One;

use super::prime::is_prime_u64;

/// Returns `e >= 1` with `base^e == n`, if one exists.
///
/// Only exponents compatible with the bit lengths of `base` and `n` are
/// tried; each candidate is confirmed by an exact integer root.
pub fn as_power_of(base: &BigUint, n: &BigUint) -> Option<u32> {
    if *base < BigUint::from(2u32) || *n < *base {
        return None;
    }
    let nb = n.bits();
    let bb = base.bits();
    // base^e has between e*(bb-1)+1 and e*bb bits
    let lo = nb.div_ceil(bb);
    let hi = if bb > 1 { (nb - 1) / (bb - 1) } else { nb };
    for e in lo..=hi {
        let e = u32::try_from(e).ok()?;
        if n.nth_root(e) == *base && base.pow(e) == *n {
            return Some(e);
        }
    }
    None
}

/// Writes `n >= 2` as `root^e` with `e` maximal, so `root` is not itself a perfect power.
pub fn primitive_power(n: &BigUint) -> (BigUint, u32) {
    let mut root = n.clone();
    let mut exp = 1u32;
    'outer: loop {
        let bits = root.bits();
        if bits <= 1 {
            break;
        }
        for e in 2..=bits as u32 {
            if !is_prime_u64(e as u64) {
                continue;
            }
            let r = root.nth_root(e);
            if r.pow(e) == root {
                root = r;
                exp *= e;
                continue 'outer;
            }
        }
        break;
    }
    (root, exp)
}

/// Every representation `base^e == n` with `e >= 1`, ordered by increasing exponent.
///
/// `n == 1` yields the single trivial representation `(1, 1)`.
pub fn power_representations(n: &BigUint) -> Vec<(BigUint, u32)> {
    if n.is_one() {
        return vec![(BigUint::one(), 1)];
    }
    let (root, e) = primitive_power(n);
    (1..=e)
        .filter(|d| e % d == 0)
        .map(|d| (root.pow(e / d), d))
        .collect()
}

/// Whether `n` is a perfect power with exponent at least two.
pub fn is_perfect_power(n: &BigUint) -> bool {
    *n >= BigUint::from(2u32) && primitive_power(n).1 > 1
}

/// Exact integer `e`-th root when `n` is a perfect `e`-th power.
pub fn exact_root(n: &BigUint, e: u32) -> Option<BigUint> {
    let r = n.nth_root(e);
    (r.pow(e) == *n).then_some(r)
}

/// 64-bit variant of [`exact_root`] used by the search hot loops.
pub fn exact_root_u128(n: u128, e: u32) -> Option<u128> {
    if e == 1 {
        return Some(n);
    }
    let r = n.nth_root(e);
    for cand in [r.saturating_sub(1), r, r + 1] {
        if cand.checked_pow(e) == Some(n) {
            return Some(cand);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn as_power_of_examples() {
        assert_eq!(as_power_of(&b(6), &b(7776)), Some(5));
        assert_eq!(as_power_of(&b(2), &b(96)), None);
        assert_eq!(as_power_of(&b(57), &b(185193)), Some(3));
        assert_eq!(as_power_of(&b(7), &b(7)), Some(1));
        assert_eq!(as_power_of(&b(7), &b(1)), None);
        assert_eq!(as_power_of(&b(4), &b(8)), None);
        assert_eq!(as_power_of(&b(2), &(BigUint::one() << 300)), Some(300));
    }

    #[test]
    fn as_power_of_matches_repeated_multiplication() {
        for base in 2u64..40 {
            let mut powers = std::collections::HashMap::new();
            let mut p = b(1);
            for e in 1..=20u32 {
                p *= base;
                powers.insert(p.clone(), e);
            }
            for n in 1u64..5000 {
                assert_eq!(as_power_of(&b(base), &b(n)), powers.get(&b(n)).copied(), "{base} {n}");
            }
        }
    }

    #[test]
    fn primitive_and_representations() {
        assert_eq!(primitive_power(&b(64)), (b(2), 6));
        assert_eq!(primitive_power(&b(72)), (b(72), 1));
        assert_eq!(primitive_power(&b(1296)), (b(6), 4));
        let reps = power_representations(&b(64));
        assert_eq!(reps, vec![(b(64), 1), (b(8), 2), (b(4), 3), (b(2), 6)]);
        assert_eq!(power_representations(&b(1)), vec![(b(1), 1)]);
        assert!(is_perfect_power(&b(243)));
        assert!(!is_perfect_power(&b(6)));
    }

    #[test]
    fn u128_roots() {
        assert_eq!(exact_root_u128(3u128.pow(40), 5), Some(3u128.pow(8)));
        assert_eq!(exact_root_u128(3u128.pow(40) + 1, 5), None);
        assert_eq!(exact_root_u128(u128::MAX, 2), None);
    }
}
