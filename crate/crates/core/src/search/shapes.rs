//! Splitting a coprime equation into the two shapes
//! `g^w1 a1^x1 + b1^y1 = c1^z1` and `a1^x2 + g^w2 b1^y2 = c1^z2`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::equations::EquationRecord;
use crate::arith::{power_representations, Factored};

/// An exponent on a base of 1, which any value fits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Exponent {
    Fixed(u32),
    Free,
}

impl Exponent {
    pub fn fixed(self) -> Option<u32> {
        match self {
            Exponent::Fixed(e) => Some(e),
            Exponent::Free => None,
        }
    }

    fn pow(self, base: &BigUint) -> BigUint {
        match self {
            Exponent::Fixed(e) => base.pow(e),
            Exponent::Free => BigUint::one(),
        }
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exponent::Fixed(e) => write!(f, "{e}"),
            Exponent::Free => f.write_str("*"),
        }
    }
}

/// `g^w1 a1^x1 + b1^y1 = c1^z1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Shape53 {
    pub g: BigUint,
    pub w1: u32,
    pub a1: BigUint,
    pub x1: Exponent,
    pub b1: BigUint,
    pub y1: u32,
    pub c1: BigUint,
    pub z1: u32,
}

/// `a1^x2 + g^w2 b1^y2 = c1^z2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Shape54 {
    pub a1: BigUint,
    pub x2: Exponent,
    pub g: BigUint,
    pub w2: u32,
    pub b1: BigUint,
    pub y2: u32,
    pub c1: BigUint,
    pub z2: u32,
}

/// The coprime bases shared by a pair of shapes.
pub type ShapeKey = (BigUint, BigUint, BigUint, BigUint);

impl Shape53 {
    pub fn holds(&self) -> bool {
        self.g.pow(self.w1) * self.x1.pow(&self.a1) + self.b1.pow(self.y1) == self.c1.pow(self.z1)
    }

    pub fn key(&self) -> ShapeKey {
        (self.g.clone(), self.a1.clone(), self.b1.clone(), self.c1.clone())
    }
}

impl Shape54 {
    pub fn holds(&self) -> bool {
        self.x2.pow(&self.a1) + self.g.pow(self.w2) * self.b1.pow(self.y2) == self.c1.pow(self.z2)
    }

    pub fn key(&self) -> ShapeKey {
        (self.g.clone(), self.a1.clone(), self.b1.clone(), self.c1.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// `A` carries `g`, giving the first shape.
    Left,
    /// `B` carries `g`, giving the second shape.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shapes {
    S53(Vec<Shape53>),
    S54(Vec<Shape54>),
}

/// Every way to write a term as `g^w * m` with `g > 1` built from a nonempty
/// subset of its primes, `w` maximal, and `m` the part coprime to `g`.
fn g_splits(f: &Factored) -> Vec<(BigUint, u32, BigUint)> {
    let fs = f.factors();
    let n = fs.len();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let chosen: Vec<&(BigUint, u32)> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &fs[i]).collect();
        let w = chosen.iter().fold(0u32, |acc, (_, e)| acc.gcd(e));
        let g = chosen.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(e / w));
        let m = (0..n)
            .filter(|i| mask >> i & 1 == 0)
            .fold(BigUint::one(), |acc, i| acc * fs[i].0.pow(fs[i].1));
        out.push((g, w, m));
    }
    out
}

/// `(base, exponent)` representations; `1` is exponent-free.
fn bases(n: &BigUint) -> Vec<(BigUint, Exponent)> {
    if n.is_one() {
        return vec![(BigUint::one(), Exponent::Free)];
    }
    power_representations(n).into_iter().map(|(b, e)| (b, Exponent::Fixed(e))).collect()
}

/// Pure-term representations; a unit term is recorded as `1^1`.
fn pure_bases(n: &BigUint) -> Vec<(BigUint, u32)> {
    power_representations(n)
}

pub fn decompose(eq: &EquationRecord, side: Side) -> Shapes {
    let c_reps = power_representations(&eq.c);
    match side {
        Side::Left => {
            let mut out = Vec::new();
            for (g, w1, m) in g_splits(&eq.fa) {
                for (a1, x1) in bases(&m) {
                    for (b1, y1) in pure_bases(&eq.b) {
                        for (c1, z1) in &c_reps {
                            out.push(Shape53 {
                                g: g.clone(),
                                w1,
                                a1: a1.clone(),
                                x1,
                                b1: b1.clone(),
                                y1,
                                c1: c1.clone(),
                                z1: *z1,
                            });
                        }
                    }
                }
            }
            out.sort();
            Shapes::S53(out)
        }
        Side::Right => {
            let mut out = Vec::new();
            for (g, w2, m) in g_splits(&eq.fb) {
                for (b1, y2) in pure_bases(&m) {
                    for (a1, x2) in bases(&eq.a) {
                        for (c1, z2) in &c_reps {
                            out.push(Shape54 {
                                a1: a1.clone(),
                                x2,
                                g: g.clone(),
                                w2,
                                b1: b1.clone(),
                                y2,
                                c1: c1.clone(),
                                z2: *z2,
                            });
                        }
                    }
                }
            }
            out.sort();
            Shapes::S54(out)
        }
    }
}
