//! Exhaustive enumeration of shape pairs in a box of bases and exponents.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::shapes::{Exponent, Shape53, Shape54};
use super::{process_pair, Candidate, CandidateSet, SearchConfig, SearchStats};
use crate::arith::{exact_root, exact_root_u128};
use crate::families::NineClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DirectBounds {
    pub a1_max: u64,
    pub g_max: u64,
    pub b1_max: u64,
    pub exp_max: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectReport {
    /// Every verified nine-tuple, normalized and sorted.
    pub results: Vec<Candidate>,
    pub stats: SearchStats,
    pub units: u64,
}

impl DirectReport {
    pub fn anomalous(&self) -> Vec<&Candidate> {
        self.results.iter().filter(|c| matches!(c.class, NineClass::Anomalous { .. })).collect()
    }
}

/// Persisted progress of a direct search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub bounds: DirectBounds,
    pub config: SearchConfig,
    pub next_unit: u64,
    pub results: Vec<Candidate>,
    pub stats: SearchStats,
}

const CHUNK: usize = 512;

/// Work units `(g, a1, b1)`: pairwise coprime, `a1 < b1`, `b1 >= 2`.
fn units(bounds: &DirectBounds) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for g in 2..=bounds.g_max {
        for a1 in 1..=bounds.a1_max {
            if g.gcd(&a1) != 1 {
                continue;
            }
            for b1 in (a1 + 1).max(2)..=bounds.b1_max {
                if g.gcd(&b1) == 1 && a1.gcd(&b1) == 1 {
                    out.push((g, a1, b1));
                }
            }
        }
    }
    out
}

/// Every `(c1, z)` with `c1^z = v`, `c1 >= 2`, `z <= exp_max`.
fn roots(v: &BigUint, exp_max: u32) -> Vec<(BigUint, u32)> {
    let small: Option<u128> = v.try_into().ok();
    let mut out = Vec::new();
    for z in 1..=exp_max {
        let r = match small {
            Some(s) => exact_root_u128(s, z).map(BigUint::from),
            None => exact_root(v, z),
        };
        match r {
            Some(r) if r >= BigUint::from(2u32) => out.push((r, z)),
            Some(_) => break,
            None => {}
        }
    }
    out
}

fn exponents(base: u64, exp_max: u32) -> Vec<(Exponent, BigUint)> {
    if base == 1 {
        return vec![(Exponent::Free, BigUint::from(1u32))];
    }
    (1..=exp_max).map(|e| (Exponent::Fixed(e), BigUint::from(base).pow(e))).collect()
}

fn unit_shapes(g: u64, a1: u64, b1: u64, exp_max: u32) -> (Vec<Shape53>, Vec<Shape54>) {
    let (gb, a1b, b1b) = (BigUint::from(g), BigUint::from(a1), BigUint::from(b1));
    let g_pows: Vec<BigUint> = (1..=exp_max).map(|w| gb.pow(w)).collect();
    let b_pows: Vec<BigUint> = (1..=exp_max).map(|y| b1b.pow(y)).collect();
    let a_pows = exponents(a1, exp_max);
    let mut s53 = Vec::new();
    let mut s54 = Vec::new();
    for (wi, gw) in g_pows.iter().enumerate() {
        let w = wi as u32 + 1;
        for (x, ax) in &a_pows {
            for (yi, by) in b_pows.iter().enumerate() {
                let y = yi as u32 + 1;
                for (c1, z1) in roots(&(gw * ax + by), exp_max) {
                    s53.push(Shape53 { g: gb.clone(), w1: w, a1: a1b.clone(), x1: *x, b1: b1b.clone(), y1: y, c1, z1 });
                }
                for (c1, z2) in roots(&(ax + gw * by), exp_max) {
                    s54.push(Shape54 { a1: a1b.clone(), x2: *x, g: gb.clone(), w2: w, b1: b1b.clone(), y2: y, c1, z2 });
                }
            }
        }
    }
    (s53, s54)
}

fn run_unit(unit: (u64, u64, u64), exp_max: u32, cfg: &SearchConfig) -> (Vec<Candidate>, SearchStats) {
    let (s53, s54) = unit_shapes(unit.0, unit.1, unit.2, exp_max);
    let mut by_c: BTreeMap<&BigUint, Vec<&Shape54>> = BTreeMap::new();
    for s in &s54 {
        by_c.entry(&s.c1).or_default().push(s);
    }
    let mut stats = SearchStats::default();
    let mut found = Vec::new();
    for l in &s53 {
        for r in by_c.get(&l.c1).into_iter().flatten() {
            if let Some(c) = process_pair(l, r, cfg, &mut stats) {
                found.push(c);
            }
        }
    }
    (found, stats)
}

pub fn direct_search(bounds: DirectBounds, cfg: &SearchConfig) -> DirectReport {
    direct_search_resumable(bounds, cfg, None).expect("no checkpoint file involved")
}

/// Runs the search, saving progress to `checkpoint` after every chunk of work
/// units and resuming from it when it matches `bounds` and `cfg`.
pub fn direct_search_resumable(
    bounds: DirectBounds,
    cfg: &SearchConfig,
    checkpoint: Option<&Path>,
) -> std::io::Result<DirectReport> {
    let all = units(&bounds);
    let mut set = CandidateSet::new();
    let mut stats = SearchStats::default();
    let mut start = 0usize;
    if let Some(path) = checkpoint {
        if path.exists() {
            let cp: Checkpoint = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            if cp.bounds == bounds && cp.config == *cfg {
                start = (cp.next_unit as usize).min(all.len());
                set.extend(cp.results);
                stats = cp.stats;
            }
        }
    }
    while start < all.len() {
        let end = (start + CHUNK).min(all.len());
        let parts: Vec<(Vec<Candidate>, SearchStats)> =
            all[start..end].par_iter().map(|u| run_unit(*u, bounds.exp_max, cfg)).collect();
        for (found, s) in parts {
            set.extend(found);
            stats.merge(&s);
        }
        start = end;
        if let Some(path) = checkpoint {
            let cp = Checkpoint {
                bounds,
                config: *cfg,
                next_unit: start as u64,
                results: set.iter().cloned().collect(),
                stats: stats.clone(),
            };
            let tmp = path.with_extension("tmp");
            std::fs::write(&tmp, serde_json::to_string(&cp)?)?;
            std::fs::rename(&tmp, path)?;
        }
    }
    Ok(DirectReport { results: set.into_iter().collect(), stats, units: all.len() as u64 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::NineTuple;

    #[test]
    fn small_box() {
        let r = direct_search(DirectBounds { a1_max: 1, g_max: 5, b1_max: 5, exp_max: 3 }, &SearchConfig::default());
        for c in &r.results {
            let n = &c.nine;
            assert_eq!(n.a.pow(n.s1.x) + n.b.pow(n.s1.y), n.c.pow(n.s1.z));
            assert_eq!(n.a.pow(n.s2.x) + n.b.pow(n.s2.y), n.c.pow(n.s2.z));
        }
    }

    #[test]
    fn finds_three_six_fifteen() {
        let r = direct_search(DirectBounds { a1_max: 1, g_max: 3, b1_max: 2, exp_max: 3 }, &SearchConfig::default());
        let want = NineTuple::from_u64([3, 6, 15, 2, 1, 1, 2, 3, 2]).unwrap();
        assert!(r.anomalous().iter().any(|c| c.nine == want));
    }

    #[test]
    fn units_are_coprime_and_ordered() {
        let u = units(&DirectBounds { a1_max: 3, g_max: 4, b1_max: 6, exp_max: 1 });
        assert!(u.contains(&(3, 1, 2)));
        assert!(u.contains(&(2, 3, 5)));
        assert!(!u.contains(&(2, 3, 4)));
        assert!(!u.contains(&(4, 1, 1)));
        assert!(u.iter().all(|&(g, a, b)| a < b && g.gcd(&a) == 1 && g.gcd(&b) == 1 && a.gcd(&b) == 1));
    }

    #[test]
    fn checkpoint_resume_matches() {
        let bounds = DirectBounds { a1_max: 3, g_max: 6, b1_max: 30, exp_max: 3 };
        let cfg = SearchConfig::default();
        let fresh = direct_search(bounds, &cfg);
        let dir = std::env::temp_dir().join(format!("tpe-cp-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cp.json");
        let _ = std::fs::remove_file(&path);
        let first = direct_search_resumable(bounds, &cfg, Some(&path)).unwrap();
        let again = direct_search_resumable(bounds, &cfg, Some(&path)).unwrap();
        assert_eq!(fresh, first);
        assert_eq!(first.results, again.results);
        assert_eq!(first.stats, again.stats);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
