use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::prime::mulmod;
use super::ArithError;

/// Default iteration cap for [`least_index`].
pub const DEFAULT_LEAST_INDEX_CAP: u64 = 1_000_000;

/// Outcome of a bounded least-index search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeastIndex {
    Found(u64),
    CapExhausted { cap: u64 },
}

impl LeastIndex {
    pub fn found(self) -> Option<u64> {
        match self {
            LeastIndex::Found(t) => Some(t),
            LeastIndex::CapExhausted { .. } => None,
        }
    }
}

/// Least `t >= 1` with `m | r^t - (-1)^eps s^t`, searched up to `cap`.
///
/// Requires `r > s`, `gcd(r, s) = 1`, `m >= 1` and `eps` in `{0, 1}`.
pub fn least_index(r: u64, s: u64, m: u64, eps: u8, cap: u64) -> Result<LeastIndex, ArithError> {
    if r <= s || s == 0 {
        return Err(ArithError::Precondition(format!("least_index needs r > s >= 1, got r={r}, s={s}")));
    }
    if r.gcd(&s) != 1 {
        return Err(ArithError::Precondition(format!("least_index needs gcd(r, s) = 1, got r={r}, s={s}")));
    }
    if m == 0 {
        return Err(ArithError::Precondition("least_index needs m >= 1".into()));
    }
    if eps > 1 {
        return Err(ArithError::Precondition(format!("eps must be 0 or 1, got {eps}")));
    }
    if m == 1 {
        return Ok(LeastIndex::Found(1));
    }
    let (rm, sm) = (r % m, s % m);
    let (mut rt, mut st) = (1u64, 1u64);
    for t in 1..=cap {
        rt = mulmod(rt, rm, m);
        st = mulmod(st, sm, m);
        let hit = if eps == 0 { rt == st } else { (rt + st) % m == 0 };
        if hit {
            return Ok(LeastIndex::Found(t));
        }
    }
    Ok(LeastIndex::CapExhausted { cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(least_index(2, 1, 7, 0, 100).unwrap(), LeastIndex::Found(3));
        assert_eq!(least_index(3, 1, 8, 0, 100).unwrap(), LeastIndex::Found(2));
        assert_eq!(least_index(2, 1, 3, 1, 100).unwrap(), LeastIndex::Found(1));
    }

    #[test]
    fn cap_and_argument_errors_are_distinct() {
        // 2^t + 1 is never divisible by 7
        assert_eq!(least_index(2, 1, 7, 1, 1000).unwrap(), LeastIndex::CapExhausted { cap: 1000 });
        assert!(least_index(1, 2, 7, 0, 10).is_err());
        assert!(least_index(4, 2, 7, 0, 10).is_err());
        assert!(least_index(3, 2, 0, 0, 10).is_err());
        assert!(least_index(3, 2, 5, 2, 10).is_err());
    }
}
