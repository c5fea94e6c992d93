//! The four infinite families of two-solution triples, membership tests
//! and classification of nine-tuples.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{as_power_of, power_representations, primitive_power};
use crate::known::KNOWN_ANOMALOUS;
use crate::solve::Solution;
use crate::{Error, Result};

/// A triple together with two of its solutions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NineTuple {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub s1: Solution,
    pub s2: Solution,
}

fn holds(a: &BigUint, b: &BigUint, c: &BigUint, s: &Solution) -> bool {
    s.x > 0 && s.y > 0 && s.z > 0 && a.pow(s.x) + b.pow(s.y) == c.pow(s.z)
}

impl NineTuple {
    pub fn new(a: BigUint, b: BigUint, c: BigUint, s1: Solution, s2: Solution) -> Result<NineTuple> {
        let two = BigUint::from(2u32);
        if a < two || b < two || c < two {
            return Err(Error::Input("a, b, c must all be at least 2".into()));
        }
        for s in [&s1, &s2] {
            if !holds(&a, &b, &c, s) {
                return Err(Error::Input(format!("{a}^{} + {b}^{} != {c}^{}", s.x, s.y, s.z)));
            }
        }
        if s1 == s2 {
            return Err(Error::Input("the two solutions must be distinct".into()));
        }
        Ok(NineTuple { a, b, c, s1, s2 })
    }

    pub fn from_u64(v: [u64; 9]) -> Result<NineTuple> {
        NineTuple::new(
            BigUint::from(v[0]),
            BigUint::from(v[1]),
            BigUint::from(v[2]),
            Solution { x: v[3] as u32, y: v[4] as u32, z: v[5] as u32 },
            Solution { x: v[6] as u32, y: v[7] as u32, z: v[8] as u32 },
        )
    }

    pub fn solution(&self, i: usize) -> &Solution {
        if i == 0 {
            &self.s1
        } else {
            &self.s2
        }
    }

    /// `(a^x, b^y)` of solution `i`.
    pub fn terms(&self, i: usize) -> (BigUint, BigUint) {
        let s = self.solution(i);
        (self.a.pow(s.x), self.b.pow(s.y))
    }

    /// Terms of solution `i`, smaller first.
    pub fn term_set(&self, i: usize) -> (BigUint, BigUint) {
        let (u, v) = self.terms(i);
        if u <= v {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn solutions_correspond(&self) -> bool {
        self.term_set(0) == self.term_set(1)
    }

    /// `a <= b` (swapping the roles of `x` and `y` if needed), solutions ordered by `(x, y)`.
    pub fn normalized(&self) -> NineTuple {
        let mut n = self.clone();
        if n.a > n.b {
            std::mem::swap(&mut n.a, &mut n.b);
            n.s1 = n.s1.swapped();
            n.s2 = n.s2.swapped();
        }
        if (n.s2.x, n.s2.y) < (n.s1.x, n.s1.y) {
            std::mem::swap(&mut n.s1, &mut n.s2);
        }
        n
    }

    pub fn max_term_bits(&self) -> u64 {
        [self.terms(0), self.terms(1)].iter().map(|(u, v)| u.bits().max(v.bits())).max().unwrap_or(0)
    }

    pub fn as_array(&self) -> (BigUint, BigUint, BigUint, [u32; 6]) {
        (
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            [self.s1.x, self.s1.y, self.s1.z, self.s2.x, self.s2.y, self.s2.z],
        )
    }
}

impl std::fmt::Display for NineTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {}, {}, {}, {})",
            self.a, self.b, self.c, self.s1.x, self.s1.y, self.s1.z, self.s2.x, self.s2.y, self.s2.z
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    I,
    II,
    III,
    IV,
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FamilyTag::I => "I",
            FamilyTag::II => "II",
            FamilyTag::III => "III",
            FamilyTag::IV => "IV",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyTag> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(FamilyTag::I),
            "II" | "2" => Ok(FamilyTag::II),
            "III" | "3" => Ok(FamilyTag::III),
            "IV" | "4" => Ok(FamilyTag::IV),
            _ => Err(Error::Input(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyParams {
    I { u: u32, h: u32 },
    II { t: u32 },
    III { g: BigUint, j: u32, u: u32, d: BigUint, k: u32, w: u32 },
    IV { g: BigUint, i: u32, j: u32, u: u32, d: BigUint, k: u32, w: u32, h: u32, v: u32 },
}

fn v2(n: &BigUint) -> u32 {
    n.trailing_zeros().unwrap_or(0) as u32
}

fn odd_part(n: &BigUint) -> BigUint {
    n >> v2(n)
}

impl FamilyParams {
    /// Family IV parameters with `h` and `v` filled in from `d` and `k`.
    pub fn iv(g: BigUint, i: u32, j: u32, u: u32, d: BigUint, k: u32, w: u32) -> FamilyParams {
        let h = v2(&((&d << 1u32) + 2u32));
        let v = k.trailing_zeros().min(32);
        FamilyParams::IV { g, i, j, u, d, k, w, h, v }
    }

    pub fn tag(&self) -> FamilyTag {
        match self {
            FamilyParams::I { .. } => FamilyTag::I,
            FamilyParams::II { .. } => FamilyTag::II,
            FamilyParams::III { .. } => FamilyTag::III,
            FamilyParams::IV { .. } => FamilyTag::IV,
        }
    }

    /// Named parameters in their canonical order.
    pub fn as_map(&self) -> Vec<(&'static str, BigUint)> {
        let n = |x: u32| BigUint::from(x);
        match self {
            FamilyParams::I { u, h } => vec![("u", n(*u)), ("h", n(*h))],
            FamilyParams::II { t } => vec![("t", n(*t))],
            FamilyParams::III { g, j, u, d, k, w } => vec![
                ("g", g.clone()),
                ("j", n(*j)),
                ("u", n(*u)),
                ("d", d.clone()),
                ("k", n(*k)),
                ("w", n(*w)),
            ],
            FamilyParams::IV { g, i, j, u, d, k, w, h, v } => vec![
                ("g", g.clone()),
                ("i", n(*i)),
                ("j", n(*j)),
                ("u", n(*u)),
                ("d", d.clone()),
                ("k", n(*k)),
                ("w", n(*w)),
                ("h", n(*h)),
                ("v", n(*v)),
            ],
        }
    }
}

impl std::fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.as_map().iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} {}", self.tag(), parts.join(" "))
    }
}

/// `(d+1)^k - d^k` for family III, the odd part of `(d+2)^k - d^k` for family IV.
pub fn family_g_power(tag: FamilyTag, d: &BigUint, k: u32) -> Option<BigUint> {
    match tag {
        FamilyTag::III => Some((d + 1u32).pow(k) - d.pow(k)),
        FamilyTag::IV => Some(odd_part(&((d + 2u32).pow(k) - d.pow(k)))),
        _ => None,
    }
}

/// The `w` with `g^w` equal to [`family_g_power`], if any.
pub fn derive_w(tag: FamilyTag, g: &BigUint, d: &BigUint, k: u32) -> Option<u32> {
    as_power_of(g, &family_g_power(tag, d, k)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintViolation {
    pub family: FamilyTag,
    pub constraint: String,
    pub detail: String,
}

impl std::fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "family {}: {} ({})", self.family, self.constraint, self.detail)
    }
}

struct Checker {
    family: FamilyTag,
    out: Vec<ConstraintViolation>,
}

impl Checker {
    fn require(&mut self, ok: bool, constraint: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.out.push(ConstraintViolation { family: self.family, constraint: constraint.into(), detail: detail() });
        }
    }
}

fn x2_of(k: u32, u: u32, w: u32, j: u32) -> Option<u32> {
    (k as u64 * u as u64 + (w / j.max(1)) as u64).to_u32()
}

/// Instantiates a family; every violated constraint is reported.
pub fn gen_family(params: &FamilyParams) -> std::result::Result<NineTuple, Vec<ConstraintViolation>> {
    let mut ck = Checker { family: params.tag(), out: Vec::new() };
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let built = match params {
        FamilyParams::I { u, h } => {
            let (u, h) = (*u, *h);
            ck.require(u > 0, "u > 0", || format!("u = {u}"));
            ck.require(h > 1, "h > 1", || format!("h = {h}"));
            if !ck.out.is_empty() {
                return Err(ck.out);
            }
            let p = two.pow(h - 1);
            let base = two.pow(u);
            (
                two.clone(),
                &base * (&p - 1u32),
                &base * (&p + 1u32),
                Solution { x: u + 1, y: 1, z: 1 },
                Solution { x: 2 * u + h + 1, y: 2, z: 2 },
            )
        }
        FamilyParams::II { t } => {
            let t = *t;
            ck.require(t > 0, "t > 0", || format!("t = {t}"));
            if !ck.out.is_empty() {
                return Err(ck.out);
            }
            let three = BigUint::from(3u32);
            (
                &two * three.pow(t),
                three.clone(),
                three,
                Solution { x: 1, y: t, z: t + 1 },
                Solution { x: 3, y: 3 * t, z: 3 * t + 2 },
            )
        }
        FamilyParams::III { g, j, u, d, k, w } => {
            let (j, u, k, w) = (*j, *u, *k, *w);
            ck.require(j > 0, "j > 0", || format!("j = {j}"));
            ck.require(u > 0, "u > 0", || format!("u = {u}"));
            ck.require(!d.is_zero(), "d > 0", || format!("d = {d}"));
            ck.require(g.is_odd(), "g odd", || format!("g = {g}"));
            ck.require(*g > one, "g > 1", || format!("g = {g}"));
            ck.require(k > 1, "k > 1", || format!("k = {k}"));
            ck.require(w > 0, "w > 0", || format!("w = {w}"));
            ck.require(j == 0 || w % j == 0, "j divides w", || format!("j = {j}, w = {w}"));
            if k > 1 && !d.is_zero() {
                let gw = family_g_power(FamilyTag::III, d, k).expect("family III");
                ck.require(*g > one && g.pow(w) == gw, "(d+1)^k - d^k = g^w", || {
                    format!("(d+1)^k - d^k = {gw}, g^w = {g}^{w}")
                });
            }
            let x2 = x2_of(k, u, w, j);
            ck.require(x2.is_some(), "x2 fits in 32 bits", || format!("k u + w/j too large for k={k}, u={u}"));
            if !ck.out.is_empty() {
                return Err(ck.out);
            }
            let gu = g.pow(j * u);
            (
                g.pow(j),
                &gu * d,
                &gu * (d + 1u32),
                Solution { x: u, y: 1, z: 1 },
                Solution { x: x2.expect("checked"), y: k, z: k },
            )
        }
        FamilyParams::IV { g, i, j, u, d, k, w, h, v } => {
            let (i, j, u, k, w, h, v) = (*i, *j, *u, *k, *w, *h, *v);
            ck.require(i > 0, "i > 0", || format!("i = {i}"));
            ck.require(j > 0, "j > 0", || format!("j = {j}"));
            ck.require(u > 0, "u > 0", || format!("u = {u}"));
            ck.require(!d.is_zero(), "d > 0", || format!("d = {d}"));
            ck.require(d.is_odd(), "d odd", || format!("d = {d}"));
            ck.require(!d.is_one(), "d != 1", || "d = 1 is impossible for this family".into());
            ck.require(g.is_odd(), "g odd", || format!("g = {g}"));
            ck.require(*g > one, "g > 1", || format!("g = {g}"));
            ck.require(k > 0 && k % 2 == 0, "k even and positive", || format!("k = {k}"));
            ck.require(w > 0, "w > 0", || format!("w = {w}"));
            ck.require(j == 0 || w % j == 0, "j divides w", || format!("j = {j}, w = {w}"));
            if k > 0 && !d.is_zero() {
                let gw = family_g_power(FamilyTag::IV, d, k).expect("family IV");
                ck.require(*g > one && g.pow(w) == gw, "g^w is the odd part of (d+2)^k - d^k", || {
                    format!("odd part = {gw}, g^w = {g}^{w}")
                });
            }
            let true_h = v2(&((d << 1u32) + 2u32));
            ck.require(h == true_h, "2^h exactly divides 2d+2", || format!("h = {h}, expected {true_h}"));
            let true_v = if k == 0 { 0 } else { k.trailing_zeros() };
            ck.require(v == true_v, "2^v exactly divides k", || format!("v = {v}, expected {true_v}"));
            if j > 0 && w % j == 0 {
                let lhs = k as i64 - v as i64;
                let rhs = h as i64 - (i as i64 * (w / j) as i64);
                ck.require(lhs == rhs, "k - v = h - iw/j", || format!("k - v = {lhs}, h - iw/j = {rhs}"));
            }
            let x2 = x2_of(k, u, w, j);
            ck.require(x2.is_some(), "x2 fits in 32 bits", || format!("k u + w/j too large for k={k}, u={u}"));
            if !ck.out.is_empty() {
                return Err(ck.out);
            }
            let gu = g.pow(j * u);
            let lead = two.pow(i * u - 1) * &gu;
            (
                two.pow(i) * g.pow(j),
                &lead * d,
                &lead * (d + 2u32),
                Solution { x: u, y: 1, z: 1 },
                Solution { x: x2.expect("checked"), y: k, z: k },
            )
        }
    };
    let (a, b, c, s1, s2) = built;
    NineTuple::new(a, b, c, s1, s2).map_err(|e| {
        vec![ConstraintViolation { family: params.tag(), constraint: "substitution".into(), detail: e.to_string() }]
    })
}

/// A family member certifying that a nine-tuple belongs to the family.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyWitness {
    pub params: FamilyParams,
    pub member: NineTuple,
    /// `matching[i]` is the input solution that member solution `i` corresponds to.
    pub matching: [usize; 2],
}

impl FamilyWitness {
    pub fn family(&self) -> FamilyTag {
        self.params.tag()
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Parameter candidates read off the exact shape of a nine-tuple.
fn exact_candidates(n: &NineTuple) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    let (s1, s2) = (n.s1, n.s2);
    let two = BigUint::from(2u32);
    if n.a == two && s1.x >= 2 {
        let u = s1.x - 1;
        if s2.x > 2 * u + 1 {
            out.push(FamilyParams::I { u, h: s2.x - 2 * u - 1 });
        }
    }
    out.push(FamilyParams::II { t: s1.y });
    let (u, k) = (s1.x, s2.y);
    if u == 0 || k == 0 {
        return out;
    }
    let shape_fits = |g: &BigUint, j: u32| (g.bits() - 1).saturating_mul(j as u64 * u as u64) <= n.b.bits();
    if n.a.is_odd() {
        for (g, j) in power_representations(&n.a) {
            if g.is_one() || !shape_fits(&g, j) {
                continue;
            }
            let gu = g.pow(j * u);
            let (d, r) = n.b.div_rem(&gu);
            if !r.is_zero() || d.is_zero() {
                continue;
            }
            if let Some(w) = derive_w(FamilyTag::III, &g, &d, k) {
                out.push(FamilyParams::III { g, j, u, d, k, w });
            }
        }
    } else {
        let i = v2(&n.a);
        let odd = odd_part(&n.a);
        if odd > BigUint::one() && i > 0 && (i as u64) * (u as u64) <= n.b.bits() {
            for (g, j) in power_representations(&odd) {
                if !shape_fits(&g, j) {
                    continue;
                }
                let lead = (BigUint::one() << (i * u - 1)) * g.pow(j * u);
                let (d, r) = n.b.div_rem(&lead);
                if !r.is_zero() || d.is_zero() || k % 2 != 0 {
                    continue;
                }
                if let Some(w) = derive_w(FamilyTag::IV, &g, &d, k) {
                    out.push(FamilyParams::iv(g, i, j, u, d, k, w));
                }
            }
        }
    }
    out
}

/// Every family whose defining formulas reproduce the nine-tuple verbatim.
pub fn in_f_all(n: &NineTuple) -> Vec<FamilyWitness> {
    let mut out: Vec<FamilyWitness> = exact_candidates(n)
        .into_iter()
        .filter_map(|p| {
            let m = gen_family(&p).ok()?;
            (m == *n).then_some(FamilyWitness { params: p, member: m, matching: [0, 1] })
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Exact membership in some family's parameter set, least witness first.
#[allow(non_snake_case)]
pub fn in_F(n: &NineTuple) -> Option<FamilyWitness> {
    in_f_all(n).into_iter().next()
}

/// Outcome of the correspondence-based membership search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySearch {
    Found(FamilyWitness),
    /// No member exists; complete within the budget.
    Absent { budget_bits: u64 },
    /// Some candidate needed intermediates above the budget.
    Exhausted { budget_bits: u64 },
}

pub fn default_family_budget(n: &NineTuple) -> u64 {
    2 * n.max_term_bits()
}

struct Inverter {
    budget: u64,
    exhausted: bool,
}

impl Inverter {
    fn fits(&mut self, bits: u64) -> bool {
        if bits > self.budget {
            self.exhausted = true;
            false
        } else {
            true
        }
    }

    /// Candidates whose first solution has terms `(p, q)` = `(A^X1, B^Y1)` and
    /// whose second has `B^Y2 = q2`.
    fn candidates(&mut self, p: &BigUint, q: &BigUint, q2: &BigUint) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        let one = BigUint::one();
        // I: p = 2^(u+1), q = 2^u (2^(h-1) - 1)
        if p.count_ones() == 1 {
            let e = v2(p);
            if e >= 2 && v2(q) >= e - 1 {
                let u = e - 1;
                let m = q >> u;
                let m1 = &m + 1u32;
                if m.is_odd() && m1.count_ones() == 1 {
                    out.push(FamilyParams::I { u, h: v2(&m1) + 1 });
                }
            }
        }
        // II: p = 2 3^t
        if p.is_even() {
            if let Some(t) = as_power_of(&BigUint::from(3u32), &(p >> 1u32)) {
                out.push(FamilyParams::II { t });
            }
        }
        let k = match as_power_of(q, q2) {
            Some(k) if k > 1 => k,
            _ => return out,
        };
        // III: p = g^(ju), q = g^(ju) d
        let (d, r) = q.div_rem(p);
        if r.is_zero() && !d.is_zero() && p.is_odd() && *p > one && self.fits(k as u64 * (&d + 1u32).bits()) {
            let gw = family_g_power(FamilyTag::III, &d, k).expect("family III");
            let (root, e) = primitive_power(&gw);
            if let Some(big_e) = as_power_of(&root, p) {
                for m in divisors(e) {
                    let g = root.pow(m);
                    let w = e / m;
                    for j in divisors(w) {
                        if big_e % (m * j) == 0 {
                            out.push(FamilyParams::III { g: g.clone(), j, u: big_e / (m * j), d: d.clone(), k, w });
                        }
                    }
                }
            }
        }
        // IV: p = 2^(iu) g^(ju), q = p d / 2
        let (d, r) = (q << 1u32).div_rem(p);
        if r.is_zero() && d.is_odd() && d > one && k % 2 == 0 && p.is_even() && self.fits(k as u64 * (&d + 2u32).bits()) {
            let gw = family_g_power(FamilyTag::IV, &d, k).expect("family IV");
            let e2 = v2(p);
            let odd_p = odd_part(p);
            if gw > one && odd_p > one {
                let (root, e) = primitive_power(&gw);
                if let Some(big_e) = as_power_of(&root, &odd_p) {
                    for m in divisors(e) {
                        let g = root.pow(m);
                        let w = e / m;
                        for j in divisors(w) {
                            if big_e % (m * j) != 0 {
                                continue;
                            }
                            let u = big_e / (m * j);
                            if e2 % u == 0 {
                                out.push(FamilyParams::iv(g.clone(), e2 / u, j, u, d.clone(), k, w));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Searches for a family member whose two solutions correspond to the two
/// solutions of `n`.
pub fn in_family(n: &NineTuple, budget_bits: Option<u64>) -> FamilySearch {
    let budget = budget_bits.unwrap_or_else(|| default_family_budget(n));
    if budget < n.max_term_bits() {
        return FamilySearch::Exhausted { budget_bits: budget };
    }
    let mut inv = Inverter { budget, exhausted: false };
    let pairs = [n.terms(0), n.terms(1)];
    let mut witnesses: Vec<FamilyWitness> = Vec::new();
    for first in 0..2 {
        let second = 1 - first;
        let (u1, v1) = &pairs[first];
        let (u2, v2_) = &pairs[second];
        for (p, q) in [(u1, v1), (v1, u1)] {
            for q2 in [u2, v2_] {
                for params in inv.candidates(p, q, q2) {
                    let Ok(member) = gen_family(&params) else { continue };
                    if member.term_set(0) == n.term_set(first) && member.term_set(1) == n.term_set(second) {
                        let matching = if first == 0 { [0, 1] } else { [1, 0] };
                        witnesses.push(FamilyWitness { params, member, matching });
                    }
                }
            }
        }
    }
    witnesses.sort();
    match witnesses.into_iter().next() {
        Some(w) => FamilySearch::Found(w),
        None if inv.exhausted => FamilySearch::Exhausted { budget_bits: budget },
        None => FamilySearch::Absent { budget_bits: budget },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NineClass {
    Family(FamilyWitness),
    Anomalous { budget_bits: u64 },
    /// The membership search ran out of budget.
    Undetermined { budget_bits: u64 },
}

impl NineClass {
    pub fn label(&self) -> &'static str {
        match self {
            NineClass::Family(_) => "family",
            NineClass::Anomalous { .. } => "anomalous",
            NineClass::Undetermined { .. } => "undetermined",
        }
    }

    pub fn budget_bits(&self) -> Option<u64> {
        match self {
            NineClass::Family(_) => None,
            NineClass::Anomalous { budget_bits } | NineClass::Undetermined { budget_bits } => Some(*budget_bits),
        }
    }
}

pub fn classify_nine(n: &NineTuple, budget_bits: Option<u64>) -> Result<NineClass> {
    if n.a.gcd(&n.b).is_one() {
        return Err(Error::Input(format!("gcd({}, {}) = 1", n.a, n.b)));
    }
    if n.solutions_correspond() {
        return Err(Error::Input("the two solutions correspond to each other".into()));
    }
    Ok(match in_family(n, budget_bits) {
        FamilySearch::Found(w) => NineClass::Family(w),
        FamilySearch::Absent { budget_bits } => NineClass::Anomalous { budget_bits },
        FamilySearch::Exhausted { budget_bits } => NineClass::Undetermined { budget_bits },
    })
}

/// Index into [`KNOWN_ANOMALOUS`] of a case with the same pairs of terms.
pub fn known_anomalous_match(n: &NineTuple) -> Option<usize> {
    let mine = {
        let mut v = [n.term_set(0), n.term_set(1)];
        v.sort();
        v
    };
    KNOWN_ANOMALOUS.iter().position(|k| {
        let Ok(kn) = NineTuple::from_u64(*k) else { return false };
        let mut v = [kn.term_set(0), kn.term_set(1)];
        v.sort();
        v == mine
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn nine(v: [u64; 9]) -> NineTuple {
        NineTuple::from_u64(v).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(gen_family(&FamilyParams::I { u: 1, h: 3 }).unwrap(), nine([2, 6, 10, 2, 1, 1, 6, 2, 2]));
        let p = FamilyParams::III { g: b(7), j: 1, u: 2, d: b(1), k: 3, w: 1 };
        assert_eq!(gen_family(&p).unwrap(), nine([7, 49, 98, 2, 1, 1, 7, 3, 3]));
        let p = FamilyParams::iv(b(3), 1, 1, 1, b(5), 2, 1);
        assert_eq!(gen_family(&p).unwrap(), nine([6, 15, 21, 1, 1, 1, 3, 2, 2]));
        assert_eq!(gen_family(&FamilyParams::II { t: 1 }).unwrap(), nine([6, 3, 3, 1, 1, 2, 3, 3, 5]));
    }

    #[test]
    fn generator_names_each_violation() {
        let p = FamilyParams::iv(b(3), 1, 1, 1, b(1), 2, 1);
        let errs = gen_family(&p).unwrap_err();
        assert!(errs.iter().any(|e| e.constraint == "d != 1"));
        let errs = gen_family(&FamilyParams::I { u: 0, h: 1 }).unwrap_err();
        assert_eq!(errs.len(), 2);
        let p = FamilyParams::III { g: b(9), j: 1, u: 1, d: b(1), k: 3, w: 1 };
        let errs = gen_family(&p).unwrap_err();
        assert_eq!(errs.iter().map(|e| e.constraint.as_str()).collect::<Vec<_>>(), vec!["(d+1)^k - d^k = g^w"]);
    }

    #[test]
    fn exact_membership() {
        let w = in_F(&nine([7, 49, 98, 2, 1, 1, 7, 3, 3])).unwrap();
        assert_eq!(w.params, FamilyParams::III { g: b(7), j: 1, u: 2, d: b(1), k: 3, w: 1 });
        assert!(in_F(&nine([7, 7, 98, 2, 2, 1, 6, 7, 3])).is_none());
        assert_eq!(in_F(&nine([6, 3, 3, 1, 1, 2, 3, 3, 5])).unwrap().params, FamilyParams::II { t: 1 });
        let w = in_F(&nine([6, 15, 21, 1, 1, 1, 3, 2, 2])).unwrap();
        assert_eq!(w.family(), FamilyTag::IV);
    }

    #[test]
    fn correspondence_membership() {
        match in_family(&nine([7, 7, 98, 2, 2, 1, 6, 7, 3]), None) {
            FamilySearch::Found(w) => {
                assert_eq!(w.family(), FamilyTag::III);
                assert_eq!(w.member, nine([7, 49, 98, 2, 1, 1, 7, 3, 3]));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(in_family(&nine([2, 6, 38, 1, 2, 1, 5, 1, 1]), None), FamilySearch::Absent { .. }));
        match in_family(&nine([2, 6, 10, 2, 1, 1, 6, 2, 2]), None) {
            FamilySearch::Found(w) => assert_eq!(w.params, FamilyParams::I { u: 1, h: 3 }),
            other => panic!("{other:?}"),
        }
        let n = nine([2, 6, 38, 1, 2, 1, 5, 1, 1]);
        assert_eq!(in_family(&n, Some(4)), FamilySearch::Exhausted { budget_bits: 4 });
    }

    #[test]
    fn classification() {
        for k in KNOWN_ANOMALOUS {
            let n = nine(k);
            assert!(matches!(classify_nine(&n, None).unwrap(), NineClass::Anomalous { .. }), "{n}");
            assert!(known_anomalous_match(&n).is_some());
        }
        let n = nine([19, 38, 57, 1, 1, 1, 4, 3, 3]);
        match classify_nine(&n, None).unwrap() {
            NineClass::Family(w) => {
                assert_eq!(w.params, FamilyParams::III { g: b(19), j: 1, u: 1, d: b(2), k: 3, w: 1 })
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            classify_nine(&nine([6, 15, 21, 1, 1, 1, 3, 2, 2]), None).unwrap(),
            NineClass::Family(FamilyWitness { params: FamilyParams::IV { .. }, .. })
        ));
        assert!(classify_nine(&nine([7, 7, 98, 6, 7, 3, 7, 6, 3]), None).is_err());
        assert!(classify_nine(&nine([3, 5, 2, 1, 1, 3, 3, 1, 5]), None).is_err());
    }

    #[test]
    fn normalization() {
        let n = nine([6, 3, 3, 3, 3, 5, 1, 1, 2]).normalized();
        assert_eq!(n, nine([3, 6, 3, 1, 1, 2, 3, 3, 5]));
    }
}
