//! Rebuilding `(a, b, c)` from a solved system and checking the result.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::shapes::{Shape53, Shape54};
use super::system::SolvedSystem;
use crate::classify::{type_profile, PrimeType};
use crate::families::{classify_nine, NineClass, NineTuple};
use crate::solve::{enumerate_solutions, Solution, DEFAULT_MAX_BITS};
use crate::triple::build_triple;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    /// Normalized: `a <= b`, solutions ordered by `(x, y)`.
    pub nine: NineTuple,
    pub class: NineClass,
    pub bound_bits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rejection {
    WrongSolutionCount { found: usize },
    /// The two solutions are not the ones the shapes were built from.
    UnexpectedSolutions,
    TypeMismatch,
    /// A shape failed to reappear after dividing out `g^(gamma z)`.
    NotOriginating,
    Invalid(String),
}

impl Rejection {
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::WrongSolutionCount { .. } => "wrong-solution-count",
            Rejection::UnexpectedSolutions => "unexpected-solutions",
            Rejection::TypeMismatch => "type-mismatch",
            Rejection::NotOriginating => "not-originating",
            Rejection::Invalid(_) => "invalid",
        }
    }
}

/// Enumeration bound for a candidate: at least `max_bits`, and at least twice
/// the size of the larger `c`-power among its two solutions.
pub fn candidate_bound(c: &BigUint, z_max: u32, max_bits: u64) -> u64 {
    max_bits.max(2 * c.bits() * z_max as u64)
}

pub fn reconstruct(s53: &Shape53, s54: &Shape54, sys: &SolvedSystem) -> (BigUint, BigUint, BigUint, Solution, Solution) {
    let g = &s53.g;
    (
        g.pow(sys.alpha) * &s53.a1,
        g.pow(sys.beta) * &s53.b1,
        g.pow(sys.gamma) * &s53.c1,
        Solution { x: sys.x1, y: s53.y1, z: s53.z1 },
        Solution { x: sys.x2, y: s54.y2, z: s54.z2 },
    )
}

/// The originating shapes reappear from the two solutions once the common
/// power of `g` is divided out.
fn reproduces(s53: &Shape53, s54: &Shape54, sys: &SolvedSystem, s1: &Solution, s2: &Solution) -> bool {
    let (g, a1, b1) = (&s53.g, &s53.a1, &s53.b1);
    let (ga, gb, gc) = (sys.alpha, sys.beta, sys.gamma);
    let first = ga * s1.x == gc * s1.z + s53.w1
        && gb * s1.y == gc * s1.z
        && g.pow(s53.w1) * a1.pow(s1.x) + b1.pow(s1.y) == s53.c1.pow(s1.z);
    let second = ga * s2.x == gc * s2.z
        && gb * s2.y == gc * s2.z + s54.w2
        && a1.pow(s2.x) + g.pow(s54.w2) * b1.pow(s2.y) == s54.c1.pow(s2.z);
    first && second && s53.holds() && s54.holds()
}

pub fn reconstruct_and_verify(
    s53: &Shape53,
    s54: &Shape54,
    sys: &SolvedSystem,
    max_bits: u64,
    family_budget: Option<u64>,
) -> Result<Candidate, Rejection> {
    let (a, b, c, s1, s2) = reconstruct(s53, s54, sys);
    if !reproduces(s53, s54, sys, &s1, &s2) {
        return Err(Rejection::NotOriginating);
    }
    let t = build_triple(&a, &b, &c).map_err(|e| Rejection::Invalid(e.to_string()))?;
    let bound = candidate_bound(&c, s1.z.max(s2.z), max_bits);
    let set = enumerate_solutions(&t, bound);
    if set.solutions.len() != 2 {
        return Err(Rejection::WrongSolutionCount { found: set.solutions.len() });
    }
    if !set.solutions.contains(&s1) || !set.solutions.contains(&s2) {
        return Err(Rejection::UnexpectedSolutions);
    }
    let p1 = type_profile(&t, &s1).map_err(|e| Rejection::Invalid(e.to_string()))?;
    let p2 = type_profile(&t, &s2).map_err(|e| Rejection::Invalid(e.to_string()))?;
    if p1.uniform() != Some(PrimeType::A) || p2.uniform() != Some(PrimeType::B) {
        return Err(Rejection::TypeMismatch);
    }
    let nine = NineTuple::new(a, b, c, s1, s2).map_err(|e| Rejection::Invalid(e.to_string()))?;
    let class = classify_nine(&nine, family_budget).map_err(|e| Rejection::Invalid(e.to_string()))?;
    Ok(Candidate { nine: nine.normalized(), class, bound_bits: bound })
}

/// [`reconstruct_and_verify`] at the default enumeration budget.
pub fn verify_default(s53: &Shape53, s54: &Shape54, sys: &SolvedSystem) -> Result<Candidate, Rejection> {
    reconstruct_and_verify(s53, s54, sys, DEFAULT_MAX_BITS, None)
}

#[cfg(test)]
mod tests {
    use super::super::shapes::Exponent;
    use super::super::system::pair_and_solve;
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn three_six_fifteen() {
        let s53 = Shape53 { g: b(3), w1: 1, a1: b(1), x1: Exponent::Free, b1: b(2), y1: 1, c1: b(5), z1: 1 };
        let s54 = Shape54 { a1: b(1), x2: Exponent::Free, g: b(3), w2: 1, b1: b(2), y2: 3, c1: b(5), z2: 2 };
        let sys = pair_and_solve(&s53, &s54).unwrap();
        let cand = verify_default(&s53, &s54, &sys).unwrap();
        assert_eq!(cand.nine, NineTuple::from_u64([3, 6, 15, 2, 1, 1, 2, 3, 2]).unwrap());
        assert_eq!(cand.class.label(), "anomalous");
    }

    #[test]
    fn two_six_thirty_eight() {
        let s53 = Shape53 { g: b(2), w1: 4, a1: b(1), x1: Exponent::Free, b1: b(3), y1: 1, c1: b(19), z1: 1 };
        let s54 = Shape54 { a1: b(1), x2: Exponent::Free, g: b(2), w2: 1, b1: b(3), y2: 2, c1: b(19), z2: 1 };
        let sys = pair_and_solve(&s53, &s54).unwrap();
        let cand = verify_default(&s53, &s54, &sys).unwrap();
        assert_eq!(cand.nine, NineTuple::from_u64([2, 6, 38, 1, 2, 1, 5, 1, 1]).unwrap());
        assert_eq!(cand.class.label(), "anomalous");
    }

    #[test]
    fn tampered_system_rejected() {
        let s53 = Shape53 { g: b(3), w1: 1, a1: b(1), x1: Exponent::Free, b1: b(2), y1: 1, c1: b(5), z1: 1 };
        let s54 = Shape54 { a1: b(1), x2: Exponent::Free, g: b(3), w2: 1, b1: b(2), y2: 3, c1: b(5), z2: 2 };
        let mut sys = pair_and_solve(&s53, &s54).unwrap();
        sys.x1 += 1;
        assert_eq!(verify_default(&s53, &s54, &sys), Err(Rejection::NotOriginating));
    }
}
