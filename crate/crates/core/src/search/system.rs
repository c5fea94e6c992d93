//! The linear system for `(alpha, beta, gamma)` attached to a pair of shapes.

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::shapes::{Exponent, Shape53, Shape54};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SolvedSystem {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub x1: u32,
    pub x2: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NoSolution {
    /// The shapes disagree on `g`, `a1`, `b1` or `c1`.
    KeyMismatch,
    /// `a1 = b1 = 1`.
    BothUnit,
    /// `b1 = 1 < a1`; the swapped pairing covers it.
    UnitB,
    /// An exponent on `a1 > 1` is missing.
    FreeExponent,
    /// A denominator of the closed form for `gamma` is zero or negative.
    DegenerateDenominator,
    /// Some unknown is not a positive integer.
    NonIntegral,
    /// The two expressions for `gamma` disagree.
    Inconsistent,
}

impl NoSolution {
    pub fn code(&self) -> &'static str {
        match self {
            NoSolution::KeyMismatch => "key-mismatch",
            NoSolution::BothUnit => "both-unit",
            NoSolution::UnitB => "unit-b",
            NoSolution::FreeExponent => "free-exponent",
            NoSolution::DegenerateDenominator => "degenerate-denominator",
            NoSolution::NonIntegral => "non-integral",
            NoSolution::Inconsistent => "inconsistent",
        }
    }
}

fn exact_div(num: i64, den: i64) -> Result<i64, NoSolution> {
    if den <= 0 {
        return Err(NoSolution::DegenerateDenominator);
    }
    if num <= 0 || num % den != 0 {
        return Err(NoSolution::NonIntegral);
    }
    Ok(num / den)
}

fn positive_u32(v: i64) -> Result<u32, NoSolution> {
    u32::try_from(v).ok().filter(|v| *v > 0).ok_or(NoSolution::NonIntegral)
}

/// Solves `y1 beta = z1 gamma`, `y2 beta - w2 = z2 gamma` and, when `a1 > 1`,
/// `x1 alpha - w1 = z1 gamma`, `x2 alpha = z2 gamma`; with `a1 = 1`, `alpha = 1`
/// and `x1 = z1 gamma + w1`, `x2 = z2 gamma`.
pub fn pair_and_solve(s53: &Shape53, s54: &Shape54) -> Result<SolvedSystem, NoSolution> {
    if s53.key() != s54.key() {
        return Err(NoSolution::KeyMismatch);
    }
    let (a1_unit, b1_unit) = (s53.a1.is_one(), s53.b1.is_one());
    if a1_unit && b1_unit {
        return Err(NoSolution::BothUnit);
    }
    if b1_unit {
        return Err(NoSolution::UnitB);
    }
    let (y1, z1, w1) = (s53.y1 as i64, s53.z1 as i64, s53.w1 as i64);
    let (y2, z2, w2) = (s54.y2 as i64, s54.z2 as i64, s54.w2 as i64);
    let gamma = exact_div(w2 * y1, y2 * z1 - z2 * y1)?;
    let beta = exact_div(z1 * gamma, y1)?;
    let (alpha, x1, x2) = if a1_unit {
        (1, z1 * gamma + w1, z2 * gamma)
    } else {
        let (Exponent::Fixed(x1), Exponent::Fixed(x2)) = (s53.x1, s54.x2) else {
            return Err(NoSolution::FreeExponent);
        };
        let (x1, x2) = (x1 as i64, x2 as i64);
        let den = x1 * z2 - z1 * x2;
        if den <= 0 {
            return Err(NoSolution::DegenerateDenominator);
        }
        if w1 * x2 != gamma * den {
            return Err(NoSolution::Inconsistent);
        }
        (exact_div(z2 * gamma, x2)?, x1, x2)
    };
    let sys = SolvedSystem {
        alpha: positive_u32(alpha)?,
        beta: positive_u32(beta)?,
        gamma: positive_u32(gamma)?,
        x1: positive_u32(x1)?,
        x2: positive_u32(x2)?,
    };
    debug_assert!(satisfies(&sys, s53, s54));
    Ok(sys)
}

/// Re-substitutes a solution into all four linear equations.
pub fn satisfies(sys: &SolvedSystem, s53: &Shape53, s54: &Shape54) -> bool {
    let (al, be, ga) = (sys.alpha as i64, sys.beta as i64, sys.gamma as i64);
    let (x1, x2) = (sys.x1 as i64, sys.x2 as i64);
    s53.y1 as i64 * be == s53.z1 as i64 * ga
        && s54.y2 as i64 * be - s54.w2 as i64 == s54.z2 as i64 * ga
        && x1 * al - s53.w1 as i64 == s53.z1 as i64 * ga
        && x2 * al == s54.z2 as i64 * ga
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn s53(g: u64, w1: u32, a1: u64, x1: Exponent, b1: u64, y1: u32, c1: u64, z1: u32) -> Shape53 {
        Shape53 { g: b(g), w1, a1: b(a1), x1, b1: b(b1), y1, c1: b(c1), z1 }
    }

    fn s54(a1: u64, x2: Exponent, g: u64, w2: u32, b1: u64, y2: u32, c1: u64, z2: u32) -> Shape54 {
        Shape54 { a1: b(a1), x2, g: b(g), w2, b1: b(b1), y2, c1: b(c1), z2 }
    }

    #[test]
    fn known_pairs() {
        let free = Exponent::Free;
        let sys = pair_and_solve(&s53(3, 1, 1, free, 2, 1, 5, 1), &s54(1, free, 3, 1, 2, 3, 5, 2)).unwrap();
        assert_eq!(sys, SolvedSystem { alpha: 1, beta: 1, gamma: 1, x1: 2, x2: 2 });
        let sys = pair_and_solve(&s53(2, 4, 1, free, 3, 1, 19, 1), &s54(1, free, 2, 1, 3, 2, 19, 1)).unwrap();
        assert_eq!(sys, SolvedSystem { alpha: 1, beta: 1, gamma: 1, x1: 5, x2: 1 });
        // 6 15 231: 3^2 2^3 + 5 = 77, 2 + 3 5^2 = 77
        let fx = Exponent::Fixed;
        let sys = pair_and_solve(&s53(3, 2, 2, fx(3), 5, 1, 77, 1), &s54(2, fx(1), 3, 1, 5, 2, 77, 1)).unwrap();
        assert_eq!(sys, SolvedSystem { alpha: 1, beta: 1, gamma: 1, x1: 3, x2: 1 });
    }

    #[test]
    fn rejections() {
        let fx = Exponent::Fixed;
        let free = Exponent::Free;
        // gamma = 1 from the b-side, but w1 x2 / (x1 z2 - z1 x2) = 2
        assert_eq!(
            pair_and_solve(&s53(3, 4, 2, fx(3), 5, 1, 77, 1), &s54(2, fx(1), 3, 1, 5, 2, 77, 1)),
            Err(NoSolution::Inconsistent)
        );
        assert_eq!(
            pair_and_solve(&s53(2, 1, 1, free, 1, 1, 3, 1), &s54(1, free, 2, 3, 1, 1, 3, 2)),
            Err(NoSolution::BothUnit)
        );
        assert_eq!(
            pair_and_solve(&s53(3, 1, 1, free, 2, 1, 5, 1), &s54(1, free, 3, 1, 2, 1, 5, 1)),
            Err(NoSolution::DegenerateDenominator)
        );
        assert_eq!(
            pair_and_solve(&s53(3, 1, 1, free, 2, 1, 5, 1), &s54(1, free, 3, 1, 2, 3, 5, 1)),
            Err(NoSolution::NonIntegral)
        );
        assert_eq!(
            pair_and_solve(&s53(3, 1, 1, free, 2, 1, 5, 1), &s54(1, free, 3, 1, 2, 3, 7, 2)),
            Err(NoSolution::KeyMismatch)
        );
    }
}
