use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tpe_core::arith::{
    as_power_of, factorize, factorize_u64, is_prime_u64, least_index, power_representations, valuation,
};
use tpe_core::oracle::{index_residues, naive_valuation};

fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[test]
fn factorize_roundtrip_up_to_a_million() {
    for n in 1..=1_000_000u64 {
        let f = factorize_u64(n).unwrap();
        assert_eq!(f.recompose(), BigUint::from(n));
        assert_eq!(*f.value(), BigUint::from(n));
        let mut prev = BigUint::zero();
        for (p, e) in f.factors() {
            assert!(*p > prev && *e >= 1);
            prev = p.clone();
        }
        if n % 997 == 0 {
            let want: Vec<(BigUint, u32)> = trial_division(n).into_iter().map(|(p, e)| (BigUint::from(p), e)).collect();
            assert_eq!(f.factors(), &want[..], "n = {n}");
        }
    }
}

fn random_prime(rng: &mut ChaCha8Rng, bits: u32) -> u64 {
    loop {
        let p = rng.gen_range(1u64 << (bits - 1)..1u64 << bits) | 1;
        if is_prime_u64(p) {
            return p;
        }
    }
}

#[test]
fn factorize_random_128_bit_composites() {
    let mut rng = ChaCha8Rng::seed_from_u64(128);
    for _ in 0..1000 {
        let mut n = BigUint::one();
        let mut primes = Vec::new();
        while n.bits() < 120 {
            let bits = rng.gen_range(8..=28);
            let p = random_prime(&mut rng, bits);
            n *= p;
            primes.push(p);
        }
        let f = factorize(&n).unwrap();
        assert_eq!(f.recompose(), n);
        primes.sort();
        primes.dedup();
        let got: Vec<BigUint> = f.primes().cloned().collect();
        let want: Vec<BigUint> = primes.into_iter().map(BigUint::from).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn spot_values() {
    let f = factorize_u64(98).unwrap();
    assert_eq!(f.factors(), &[(BigUint::from(2u32), 1), (BigUint::from(7u32), 2)]);
    assert!(factorize_u64(1).unwrap().factors().is_empty());
    let f = factorize_u64(78405).unwrap();
    assert_eq!(f.factors(), &[(BigUint::from(3u32), 1), (BigUint::from(5u32), 1), (BigUint::from(5227u32), 1)]);
    assert_eq!(as_power_of(&BigUint::from(6u32), &BigUint::from(7776u32)), Some(5));
    assert_eq!(as_power_of(&BigUint::from(2u32), &BigUint::from(96u32)), None);
    assert_eq!(as_power_of(&BigUint::from(57u32), &BigUint::from(185193u32)), Some(3));
}

proptest! {
    #[test]
    fn valuation_is_exact(p_idx in 0usize..10, n in 1u64..u64::MAX) {
        let p = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29][p_idx];
        let nb = BigUint::from(n);
        let v = valuation(&BigUint::from(p), &nb).unwrap();
        let pb = BigUint::from(p);
        prop_assert!((&nb % pb.pow(v)).is_zero());
        prop_assert!(!(&nb % pb.pow(v + 1)).is_zero());
        prop_assert_eq!(v, naive_valuation(p, &nb));
    }

    #[test]
    fn valuation_of_constructed_powers(p_idx in 0usize..6, e in 0u32..60, m in 1u64..1_000_000) {
        let p = [2u64, 3, 5, 7, 11, 13][p_idx];
        prop_assume!(m % p != 0);
        let n = BigUint::from(p).pow(e) * m;
        prop_assert_eq!(valuation(&BigUint::from(p), &n).unwrap(), e);
    }

    #[test]
    fn as_power_of_roundtrip(base in 2u64..1000, e in 1u32..20, off in 0u64..3) {
        let n = BigUint::from(base).pow(e) + off;
        let got = as_power_of(&BigUint::from(base), &n);
        if off == 0 {
            prop_assert_eq!(got, Some(e));
        } else {
            prop_assert!(got.map_or(true, |k| BigUint::from(base).pow(k) == n));
        }
    }

    #[test]
    fn power_representations_are_exact(base in 2u64..200, e in 1u32..12) {
        let n = BigUint::from(base).pow(e);
        let reps = power_representations(&n);
        prop_assert!(reps.iter().all(|(b, k)| b.pow(*k) == n));
        prop_assert!(reps.iter().any(|(b, k)| *b == BigUint::from(base) && *k == e));
        prop_assert!(reps.iter().any(|(b, k)| *b == n && *k == 1));
    }

    #[test]
    fn least_index_matches_residue_scan(r in 2u64..200, s in 1u64..200, m in 1u64..500, plus in any::<bool>()) {
        prop_assume!(r > s && num_integer::Integer::gcd(&r, &s) == 1);
        let eps = plus as u8;
        let got = least_index(r, s, m, eps, 2000).unwrap().found();
        let first = index_residues(r, s, m, eps, 2000).iter().position(|&x| x == 0).map(|i| i as u64 + 1);
        prop_assert_eq!(got, first);
    }
}
