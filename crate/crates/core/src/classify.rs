//! Per-prime typing of solutions and the `f(n)` data attached to
//! Type A and Type C solutions.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::same_support;
use crate::solve::Solution;
use crate::triple::{PrimeExponents, Triple};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PrimeType {
    A,
    B,
    C,
    O,
}

impl std::fmt::Display for PrimeType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PrimeType::A => "A",
            PrimeType::B => "B",
            PrimeType::C => "C",
            PrimeType::O => "O",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTyping {
    pub p: BigUint,
    pub tag: PrimeType,
    /// `(alpha_p x, beta_p y, gamma_p z)`.
    pub values: (u64, u64, u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeProfile {
    pub entries: Vec<PrimeTyping>,
}

impl TypeProfile {
    pub fn tag_at(&self, p: &BigUint) -> Option<PrimeType> {
        self.entries.iter().find(|e| e.p == *p).map(|e| e.tag)
    }

    /// The common tag when every prime carries the same one.
    pub fn uniform(&self) -> Option<PrimeType> {
        let first = self.entries.first()?.tag;
        self.entries.iter().all(|e| e.tag == first).then_some(first)
    }
}

fn tag_of(values: (u64, u64, u64)) -> Option<PrimeType> {
    let (u, v, w) = values;
    if u == v && v == w {
        Some(PrimeType::O)
    } else if v == w && u > v {
        Some(PrimeType::A)
    } else if u == w && v > u {
        Some(PrimeType::B)
    } else if u == v && w > u {
        Some(PrimeType::C)
    } else {
        None
    }
}

pub fn type_profile(t: &Triple, s: &Solution) -> Result<TypeProfile> {
    if t.exps.is_empty() {
        return Err(Error::EmptyQ);
    }
    let mut entries = Vec::with_capacity(t.exps.len());
    for e in &t.exps {
        let values = (e.alpha as u64 * s.x as u64, e.beta as u64 * s.y as u64, e.gamma as u64 * s.z as u64);
        let tag = tag_of(values).ok_or_else(|| {
            Error::Invariant(format!("two smallest of {values:?} differ at p={} for solution {s}", e.p))
        })?;
        entries.push(PrimeTyping { p: e.p.clone(), tag, values });
    }
    Ok(TypeProfile { entries })
}

fn exps_at<'a>(t: &'a Triple, p: &BigUint) -> Result<&'a PrimeExponents> {
    t.exponents_at(p).ok_or_else(|| Error::Input(format!("{p} is not a common prime of the triple")))
}

fn require_tag(t: &Triple, p: &BigUint, s: &Solution, want: PrimeType) -> Result<()> {
    let got = type_profile(t, s)?.tag_at(p).expect("p is in Q");
    if got != want {
        return Err(Error::Input(format!("solution {s} is Type {got} at {p}, not Type {want}")));
    }
    Ok(())
}

/// Data of a Type A solution at `p`: `y = ns`, `z = nt` with `beta_p / gamma_p = t / s`,
/// and `a^x = D (R^n - S^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeAData {
    pub p: BigUint,
    pub s: u32,
    pub t: u32,
    pub n: u32,
    pub set_a: Vec<BigUint>,
    pub set_b: Vec<BigUint>,
    pub set_c: Vec<BigUint>,
    pub r_base: BigUint,
    pub s_base: BigUint,
    pub d: BigUint,
    /// `R^n - S^n`.
    pub f_n: BigUint,
    /// `a1^x` times the leftover powers of the primes in `set_a`.
    pub residual: BigUint,
    pub f_primes: Vec<BigUint>,
}

pub fn type_a_data(tr: &Triple, p: &BigUint, sol: &Solution) -> Result<TypeAData> {
    require_tag(tr, p, sol, PrimeType::A)?;
    let ep = exps_at(tr, p)?;
    let h = ep.beta.gcd(&ep.gamma);
    let (t, s) = (ep.beta / h, ep.gamma / h);
    if sol.y % s != 0 || sol.z % t != 0 || sol.y / s != sol.z / t {
        return Err(Error::Invariant(format!("y = {} and z = {} are not (ns, nt) for s={s}, t={t}", sol.y, sol.z)));
    }
    let n = sol.y / s;
    let (mut set_a, mut set_b, mut set_c) = (Vec::new(), Vec::new(), Vec::new());
    let mut r_base = tr.c1.pow(t);
    let mut s_base = tr.b1.pow(s);
    let mut d = BigUint::one();
    let mut residual = tr.a1.pow(sol.x);
    for e in &tr.exps {
        let (bs, gt) = (e.beta as u64 * s as u64, e.gamma as u64 * t as u64);
        d *= e.p.pow((n as u64 * bs.min(gt)) as u32);
        if bs > gt {
            set_b.push(e.p.clone());
            s_base *= e.p.pow((bs - gt) as u32);
        } else if bs < gt {
            set_c.push(e.p.clone());
            r_base *= e.p.pow((gt - bs) as u32);
        } else {
            set_a.push(e.p.clone());
            let ax = e.alpha as u64 * sol.x as u64;
            let sub = e.gamma as u64 * n as u64 * t as u64;
            if ax < sub {
                return Err(Error::Invariant(format!("negative leftover exponent at {}", e.p)));
            }
            residual *= e.p.pow((ax - sub) as u32);
        }
    }
    let f_n = r_base.pow(n) - s_base.pow(n);
    if f_n != residual {
        return Err(Error::Invariant(format!("R^n - S^n = {f_n} but the a-side gives {residual}")));
    }
    if &d * &f_n != tr.a.pow(sol.x) {
        return Err(Error::Invariant("D (R^n - S^n) differs from a^x".into()));
    }
    let f_primes = crate::arith::prime_set(&f_n)?;
    Ok(TypeAData { p: p.clone(), s, t, n, set_a, set_b, set_c, r_base, s_base, d, f_n, residual, f_primes })
}

/// Data of a Type C solution at `p`: `x = nr`, `y = ns` with `alpha_p / beta_p = s / r`,
/// and `c^z = D (R^n + S^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeCData {
    pub p: BigUint,
    pub r: u32,
    pub s: u32,
    pub n: u32,
    pub set_a: Vec<BigUint>,
    pub set_b: Vec<BigUint>,
    pub set_c: Vec<BigUint>,
    pub r_base: BigUint,
    pub s_base: BigUint,
    pub d: BigUint,
    /// `R^n + S^n`.
    pub f_n: BigUint,
    pub residual: BigUint,
    pub f_primes: Vec<BigUint>,
}

pub fn type_c_data(tr: &Triple, p: &BigUint, sol: &Solution) -> Result<TypeCData> {
    require_tag(tr, p, sol, PrimeType::C)?;
    let ep = exps_at(tr, p)?;
    let h = ep.alpha.gcd(&ep.beta);
    let (s, r) = (ep.alpha / h, ep.beta / h);
    if sol.x % r != 0 || sol.y % s != 0 || sol.x / r != sol.y / s {
        return Err(Error::Invariant(format!("x = {} and y = {} are not (nr, ns) for r={r}, s={s}", sol.x, sol.y)));
    }
    let n = sol.x / r;
    let (mut set_a, mut set_b, mut set_c) = (Vec::new(), Vec::new(), Vec::new());
    let mut r_base = tr.a1.pow(r);
    let mut s_base = tr.b1.pow(s);
    let mut d = BigUint::one();
    let mut residual = tr.c1.pow(sol.z);
    for e in &tr.exps {
        let (ar, bs) = (e.alpha as u64 * r as u64, e.beta as u64 * s as u64);
        d *= e.p.pow((n as u64 * ar.min(bs)) as u32);
        if ar > bs {
            set_a.push(e.p.clone());
            r_base *= e.p.pow((ar - bs) as u32);
        } else if ar < bs {
            set_b.push(e.p.clone());
            s_base *= e.p.pow((bs - ar) as u32);
        } else {
            set_c.push(e.p.clone());
            let gz = e.gamma as u64 * sol.z as u64;
            let sub = e.alpha as u64 * n as u64 * r as u64;
            if gz < sub {
                return Err(Error::Invariant(format!("negative leftover exponent at {}", e.p)));
            }
            residual *= e.p.pow((gz - sub) as u32);
        }
    }
    let f_n = r_base.pow(n) + s_base.pow(n);
    if f_n != residual {
        return Err(Error::Invariant(format!("R^n + S^n = {f_n} but the c-side gives {residual}")));
    }
    if &d * &f_n != tr.c.pow(sol.z) {
        return Err(Error::Invariant("D (R^n + S^n) differs from c^z".into()));
    }
    let f_primes = crate::arith::prime_set(&f_n)?;
    Ok(TypeCData { p: p.clone(), r, s, n, set_a, set_b, set_c, r_base, s_base, d, f_n, residual, f_primes })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScreenRule {
    /// Exponent ratios at `p` dominate those at `q`.
    Ratios,
    /// Some solution is Type A at `p` but not at `q`.
    MixedSolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossPrimeViolation {
    pub p: BigUint,
    pub q: BigUint,
    pub rule: ScreenRule,
    pub solution: Solution,
    pub tag: PrimeType,
}

fn ratios_dominate(ep: &PrimeExponents, eq: &PrimeExponents) -> bool {
    let (ap, bp, gp) = (ep.alpha as u64, ep.beta as u64, ep.gamma as u64);
    let (aq, bq, gq) = (eq.alpha as u64, eq.beta as u64, eq.gamma as u64);
    ap * bq > aq * bp && ap * gq > aq * gp
}

/// Flags solutions that are Type B, C or O at a prime where that is ruled out.
pub fn cross_prime_screen(t: &Triple, solutions: &[Solution]) -> Result<Vec<CrossPrimeViolation>> {
    let profiles = solutions
        .iter()
        .map(|s| Ok((*s, type_profile(t, s)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(screen_profiles(t, &profiles))
}

/// As [`cross_prime_screen`], on already computed (possibly constructed) profiles.
pub fn screen_profiles(t: &Triple, profiles: &[(Solution, TypeProfile)]) -> Vec<CrossPrimeViolation> {
    let mut out = Vec::new();
    let flag = |p: &BigUint, q: &BigUint, rule: ScreenRule, out: &mut Vec<CrossPrimeViolation>| {
        for (sol, prof) in profiles {
            match prof.tag_at(p) {
                Some(tag) if tag != PrimeType::A => out.push(CrossPrimeViolation {
                    p: p.clone(),
                    q: q.clone(),
                    rule,
                    solution: *sol,
                    tag,
                }),
                _ => {}
            }
        }
    };
    for ep in &t.exps {
        for eq in &t.exps {
            if ep.p == eq.p {
                continue;
            }
            if ratios_dominate(ep, eq) {
                flag(&ep.p, &eq.p, ScreenRule::Ratios, &mut out);
            }
            let mixed = profiles
                .iter()
                .any(|(_, prof)| prof.tag_at(&ep.p) == Some(PrimeType::A) && prof.tag_at(&eq.p) != Some(PrimeType::A));
            if mixed {
                flag(&ep.p, &eq.p, ScreenRule::MixedSolution, &mut out);
            }
        }
    }
    out
}

/// Number of Type O solutions at each common prime.
pub fn type_o_census(t: &Triple, solutions: &[Solution]) -> Result<BTreeMap<BigUint, usize>> {
    let mut census: BTreeMap<BigUint, usize> = t.q().map(|p| (p.clone(), 0)).collect();
    for s in solutions {
        for e in type_profile(t, s)?.entries {
            if e.tag == PrimeType::O {
                *census.get_mut(&e.p).expect("p in Q") += 1;
            }
        }
    }
    Ok(census)
}

/// Whether some prime carries both a Type C solution and a solution of another type.
pub fn mixes_type_c(t: &Triple, solutions: &[Solution]) -> Result<bool> {
    let profiles = solutions.iter().map(|s| type_profile(t, s)).collect::<Result<Vec<_>>>()?;
    Ok(t.q().any(|p| {
        let tags: Vec<PrimeType> = profiles.iter().filter_map(|pr| pr.tag_at(p)).collect();
        tags.contains(&PrimeType::C) && tags.iter().any(|x| *x != PrimeType::C)
    }))
}

/// A pair of Type A solutions at one prime whose `f` values share their prime set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidPair {
    pub p: BigUint,
    pub first: TypeAData,
    pub second: TypeAData,
}

/// Finds pairs of Type A solutions at a common prime with `P(f(n1)) = P(f(n2))`.
pub fn equal_support_type_a_pairs(t: &Triple, solutions: &[Solution]) -> Result<Vec<RigidPair>> {
    let mut out = Vec::new();
    for p in t.q() {
        let mut data = Vec::new();
        for s in solutions {
            if type_profile(t, s)?.tag_at(p) == Some(PrimeType::A) {
                data.push(type_a_data(t, p, s)?);
            }
        }
        for i in 0..data.len() {
            for j in i + 1..data.len() {
                if same_support(&data[i].f_n, &data[j].f_n) {
                    out.push(RigidPair { p: p.clone(), first: data[i].clone(), second: data[j].clone() });
                }
            }
        }
    }
    Ok(out)
}

/// `a = 2^alpha`, `Q = {2}` and `(b1, c1)` is `(2^(h-1) - 1, 2^(h-1) + 1)` for some `h >= 2`,
/// or `(7, 3)`.
pub fn matches_rigid_shape(t: &Triple) -> bool {
    let two = BigUint::from(2u32);
    if !t.a1.is_one() || t.exps.len() != 1 || t.exps[0].p != two {
        return false;
    }
    let (b1, c1) = (&t.b1, &t.c1);
    if *b1 == BigUint::from(7u32) && *c1 == BigUint::from(3u32) {
        return true;
    }
    let mid = b1 + 1u32;
    *c1 == &mid + 1u32 && mid.count_ones() == 1
}
