//! Bounded enumeration of solutions, Criterion-1 classes and the
//! catalogue of triples with more than two solutions.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::as_power_of;
use crate::triple::Triple;
use crate::{Error, Result};

pub const DEFAULT_MAX_BITS: u64 = 256;

/// Positive exponents `(x, y, z)` with `a^x + b^y = c^z` for some triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Solution {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Solution {
    pub fn checked(t: &Triple, x: u32, y: u32, z: u32) -> Result<Solution> {
        let s = Solution { x, y, z };
        if x == 0 || y == 0 || z == 0 {
            return Err(Error::Input(format!("exponents must be positive, got ({x}, {y}, {z})")));
        }
        if !s.holds(t) {
            return Err(Error::Input(format!("{}^{x} + {}^{y} != {}^{z}", t.a, t.b, t.c)));
        }
        Ok(s)
    }

    pub(crate) fn unchecked(x: u32, y: u32, z: u32) -> Solution {
        Solution { x, y, z }
    }

    pub fn holds(&self, t: &Triple) -> bool {
        t.a.pow(self.x) + t.b.pow(self.y) == t.c.pow(self.z)
    }

    /// The two terms `a^x` and `b^y`, smaller first.
    pub fn term_pair(&self, t: &Triple) -> (BigUint, BigUint) {
        let (u, v) = (t.a.pow(self.x), t.b.pow(self.y));
        if u <= v {
            (u, v)
        } else {
            (v, u)
        }
    }

    fn order_key(&self) -> (u32, u32, u32) {
        (self.z, self.x, self.y)
    }

    pub fn swapped(&self) -> Solution {
        Solution { x: self.y, y: self.x, z: self.z }
    }
}

impl std::fmt::Display for Solution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// All solutions with `c^z < 2^max_bits`, ordered by `(z, x, y)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolutionSet {
    pub triple: Triple,
    pub solutions: Vec<Solution>,
    pub max_bits: u64,
    /// Criterion-1 classes as indices into `solutions`; each class and the
    /// list of classes are in solution order, so the first index is the representative.
    pub classes: Vec<Vec<usize>>,
    /// `c` itself is not below the bound, so nothing could be searched.
    pub bound_too_small: bool,
}

impl SolutionSet {
    pub fn count_n(&self) -> usize {
        self.classes.len()
    }

    pub fn representatives(&self) -> Vec<Solution> {
        self.classes.iter().map(|c| self.solutions[c[0]]).collect()
    }

    /// Solution count with `(x, y, z)` and `(y, x, z)` merged when `a = b`.
    pub fn dedup_count(&self) -> usize {
        if self.triple.a != self.triple.b {
            return self.solutions.len();
        }
        let mut keys: Vec<(u32, u32, u32)> =
            self.solutions.iter().map(|s| (s.x.min(s.y), s.x.max(s.y), s.z)).collect();
        keys.sort();
        keys.dedup();
        keys.len()
    }
}

pub fn enumerate_solutions(t: &Triple, max_bits: u64) -> SolutionSet {
    let bound_too_small = t.c.bits() > max_bits;
    let mut solutions = Vec::new();
    if !bound_too_small {
        let mut b_powers: HashMap<BigUint, u32> = HashMap::new();
        let mut p = t.b.clone();
        let mut y = 1u32;
        while p.bits() <= max_bits {
            b_powers.insert(p.clone(), y);
            p *= &t.b;
            y += 1;
        }
        let mut c_powers = Vec::new();
        let mut p = t.c.clone();
        let mut z = 1u32;
        while p.bits() <= max_bits {
            c_powers.push((z, p.clone()));
            p *= &t.c;
            z += 1;
        }
        solutions = c_powers
            .par_iter()
            .flat_map_iter(|(z, cz)| {
                let mut found = Vec::new();
                let mut ax = t.a.clone();
                let mut x = 1u32;
                while ax < *cz {
                    if let Some(&y) = b_powers.get(&(cz - &ax)) {
                        found.push(Solution::unchecked(x, y, *z));
                    }
                    ax *= &t.a;
                    x += 1;
                }
                found
            })
            .collect();
        solutions.sort_by_key(Solution::order_key);
    }
    let classes = criterion_classes(t, &solutions);
    SolutionSet { triple: t.clone(), solutions, max_bits, classes, bound_too_small }
}

fn criterion_classes(t: &Triple, sols: &[Solution]) -> Vec<Vec<usize>> {
    let mut index: HashMap<(BigUint, BigUint), usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, s) in sols.iter().enumerate() {
        let key = s.term_pair(t);
        match index.get(&key) {
            Some(&k) => classes[k].push(i),
            None => {
                index.insert(key, classes.len());
                classes.push(vec![i]);
            }
        }
    }
    classes
}

pub fn count_n(s: &SolutionSet) -> usize {
    s.count_n()
}

/// Whether `s1` of `t1` and `s2` of `t2` have the same pair of terms.
pub fn correspond(t1: &Triple, s1: &Solution, t2: &Triple, s2: &Solution) -> bool {
    s1.term_pair(t1) == s2.term_pair(t2)
}

/// Triples known to carry more than two solutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialCase {
    /// `({3, 5}, 2)`.
    Coprime352,
    /// `(2, 2, 2^gamma * 3)`.
    T47_1 { gamma: u32 },
    /// `(2, 8, 2^(3t) * 3)`, or `(8, 2, ...)` when `swapped`.
    T47_2 { t: u32, swapped: bool },
    /// `(2^k - 1, 2^k - 1, 2 (2^k - 1)^gamma)`.
    T47_3 { k: u32, gamma: u32 },
    /// `(2^u, 2^v, 2^w)` with `gcd(uv, w) = 1`.
    T47_4 { u: u32, v: u32, w: u32 },
}

impl SpecialCase {
    pub fn tag(&self) -> &'static str {
        match self {
            SpecialCase::Coprime352 => "coprime-352",
            SpecialCase::T47_1 { .. } => "T47-1",
            SpecialCase::T47_2 { .. } => "T47-2",
            SpecialCase::T47_3 { .. } => "T47-3",
            SpecialCase::T47_4 { .. } => "T47-4",
        }
    }

    /// The listed solutions; for the power-of-two case those with parameter `t <= t_max`.
    pub fn predicted(&self, t_max: u32) -> Vec<Solution> {
        let s = Solution::unchecked;
        let mut out = match *self {
            SpecialCase::Coprime352 => vec![s(1, 1, 3), s(3, 1, 5), s(1, 3, 7)],
            SpecialCase::T47_1 { gamma: g } => {
                vec![s(g + 1, g, 1), s(g, g + 1, 1), s(2 * g + 3, 2 * g, 2), s(2 * g, 2 * g + 3, 2)]
            }
            SpecialCase::T47_2 { t, swapped } => {
                let v = vec![s(3 * t + 1, t, 1), s(6 * t + 3, 2 * t, 2), s(6 * t, 2 * t + 1, 2)];
                if swapped {
                    v.iter().map(Solution::swapped).collect()
                } else {
                    v
                }
            }
            SpecialCase::T47_3 { k, gamma } => {
                vec![s(gamma, gamma, 1), s(k * gamma + 1, k * gamma, k), s(k * gamma, k * gamma + 1, k)]
            }
            SpecialCase::T47_4 { u, v, w } => parametric_power_of_two(u, v, w, t_max),
        };
        out.sort_by_key(Solution::order_key);
        out
    }
}

fn power_of_two_exponent(n: &BigUint) -> Option<u32> {
    (n.count_ones() == 1).then(|| n.trailing_zeros().unwrap_or(0) as u32)
}

/// `n = 2^e * 3` with `e >= 1`.
fn three_times_power_of_two(n: &BigUint) -> Option<u32> {
    let e = n.trailing_zeros()? as u32;
    (e >= 1 && (n >> e) == BigUint::from(3u32)).then_some(e)
}

pub fn detect_special_case(t: &Triple) -> Option<SpecialCase> {
    let (a, b, c) = (&t.a, &t.b, &t.c);
    let small = |n: &BigUint, v: u32| *n == BigUint::from(v);
    if small(c, 2) && ((small(a, 3) && small(b, 5)) || (small(a, 5) && small(b, 3))) {
        return Some(SpecialCase::Coprime352);
    }
    if let (Some(u), Some(v), Some(w)) = (power_of_two_exponent(a), power_of_two_exponent(b), power_of_two_exponent(c)) {
        return ((u as u64 * v as u64).gcd(&(w as u64)) == 1).then_some(SpecialCase::T47_4 { u, v, w });
    }
    if let Some(e) = three_times_power_of_two(c) {
        if small(a, 2) && small(b, 2) {
            return Some(SpecialCase::T47_1 { gamma: e });
        }
        if e % 3 == 0 {
            if small(a, 2) && small(b, 8) {
                return Some(SpecialCase::T47_2 { t: e / 3, swapped: false });
            }
            if small(a, 8) && small(b, 2) {
                return Some(SpecialCase::T47_2 { t: e / 3, swapped: true });
            }
        }
    }
    if a == b {
        let m = a + 1u32;
        if let Some(k) = power_of_two_exponent(&m) {
            let two = BigUint::from(2u32);
            if k >= 2 && c.is_even() && (c / &two) > BigUint::one() {
                if let Some(gamma) = as_power_of(a, &(c / &two)) {
                    return Some(SpecialCase::T47_3 { k, gamma });
                }
            }
        }
    }
    None
}

fn parametric_power_of_two(u: u32, v: u32, w: u32, t_max: u32) -> Vec<Solution> {
    let g = u.gcd(&v);
    let l = u / g * v;
    (1..=t_max)
        .filter(|t| (*t as u64 * l as u64 + 1) % w as u64 == 0)
        .map(|t| Solution::unchecked(t * v / g, t * u / g, ((t as u64 * l as u64 + 1) / w as u64) as u32))
        .collect()
}

/// Parametric solutions of `2^(ux) + 2^(vy) = 2^(wz)` for parameters `t <= t_max`,
/// each verified by substitution.
pub fn power_of_two_solutions(u: u32, v: u32, w: u32, t_max: u32) -> Result<Vec<Solution>> {
    if u == 0 || v == 0 || w == 0 {
        return Err(Error::Input("u, v, w must be positive".into()));
    }
    if (u as u64 * v as u64).gcd(&(w as u64)) != 1 {
        return Err(Error::Input(format!("gcd(uv, w) must be 1, got u={u}, v={v}, w={w}")));
    }
    let two = BigUint::from(2u32);
    let sols = parametric_power_of_two(u, v, w, t_max);
    for s in &sols {
        if two.pow(u * s.x) + two.pow(v * s.y) != two.pow(w * s.z) {
            return Err(Error::Invariant(format!("parametric solution {s} fails substitution")));
        }
    }
    Ok(sols)
}
