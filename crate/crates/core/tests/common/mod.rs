#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;

/// Triples `(a, b, c)` with `2 <= a <= b <= ab_max`, `gcd(a, b) > 1`, `c <= c_max`
/// and at least one solution with `c^z < 2^bits`.
pub fn solvable_triples(ab_max: u64, c_max: u64, bits: u32) -> Vec<(u64, u64, u64)> {
    let limit = 1u128 << bits;
    let mut powers: HashMap<u128, Vec<u64>> = HashMap::new();
    for c in 2..=c_max {
        let mut cz = c as u128;
        while cz < limit {
            powers.entry(cz).or_default().push(c);
            cz *= c as u128;
        }
    }
    let mut out = BTreeSet::new();
    for a in 2..=ab_max {
        for b in a..=ab_max {
            if a.gcd(&b) == 1 {
                continue;
            }
            let mut ax = a as u128;
            while ax < limit {
                let mut by = b as u128;
                while ax + by < limit {
                    if let Some(cs) = powers.get(&(ax + by)) {
                        for &c in cs {
                            out.insert((a, b, c));
                        }
                    }
                    by *= b as u128;
                }
                ax *= a as u128;
            }
        }
    }
    out.into_iter().collect()
}

pub fn is_two_power(x: u64) -> bool {
    x.is_power_of_two()
}
