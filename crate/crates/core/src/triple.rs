//! Base triples `(a, b, c)`, their common primes and the `g`-decomposition.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, Factored};
use crate::{Error, Result};

/// Exponents of one common prime in `a`, `b` and `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeExponents {
    pub p: BigUint,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl PrimeExponents {
    fn reduced(&self) -> (u32, u32, u32) {
        let h = self.alpha.gcd(&self.beta).gcd(&self.gamma);
        (self.alpha / h, self.beta / h, self.gamma / h)
    }

    /// `(alpha, beta, gamma)` of `self` and `other` are proportional.
    pub fn proportional_to(&self, other: &PrimeExponents) -> bool {
        let (a1, b1, g1) = (self.alpha as u64, self.beta as u64, self.gamma as u64);
        let (a2, b2, g2) = (other.alpha as u64, other.beta as u64, other.gamma as u64);
        a1 * b2 == a2 * b1 && a1 * g2 == a2 * g1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub fa: Factored,
    pub fb: Factored,
    pub fc: Factored,
    /// Primes dividing all of `a`, `b`, `c`, ascending, with their exponents.
    pub exps: Vec<PrimeExponents>,
    pub a1: BigUint,
    pub b1: BigUint,
    pub c1: BigUint,
}

pub fn build_triple(a: &BigUint, b: &BigUint, c: &BigUint) -> Result<Triple> {
    let two = BigUint::from(2u32);
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if *v < two {
            return Err(Error::Input(format!("{name} must be at least 2, got {v}")));
        }
    }
    let (fa, fb, fc) = (factorize(a)?, factorize(b)?, factorize(c)?);
    let mut exps = Vec::new();
    let (mut a1, mut b1, mut c1) = (a.clone(), b.clone(), c.clone());
    for (p, alpha) in fa.factors() {
        let (beta, gamma) = (fb.exponent_of(p), fc.exponent_of(p));
        if beta > 0 && gamma > 0 {
            a1 /= p.pow(*alpha);
            b1 /= p.pow(beta);
            c1 /= p.pow(gamma);
            exps.push(PrimeExponents { p: p.clone(), alpha: *alpha, beta, gamma });
        }
    }
    Ok(Triple { a: a.clone(), b: b.clone(), c: c.clone(), fa, fb, fc, exps, a1, b1, c1 })
}

impl Triple {
    pub fn from_u64(a: u64, b: u64, c: u64) -> Result<Triple> {
        build_triple(&BigUint::from(a), &BigUint::from(b), &BigUint::from(c))
    }

    pub fn q(&self) -> impl Iterator<Item = &BigUint> {
        self.exps.iter().map(|e| &e.p)
    }

    pub fn exponents_at(&self, p: &BigUint) -> Option<&PrimeExponents> {
        self.exps.iter().find(|e| e.p == *p)
    }

    pub fn gcd_ab(&self) -> BigUint {
        self.a.gcd(&self.b)
    }

    /// The same triple with `a` and `b` exchanged.
    pub fn swapped(&self) -> Triple {
        Triple {
            a: self.b.clone(),
            b: self.a.clone(),
            c: self.c.clone(),
            fa: self.fb.clone(),
            fb: self.fa.clone(),
            fc: self.fc.clone(),
            exps: self
                .exps
                .iter()
                .map(|e| PrimeExponents { p: e.p.clone(), alpha: e.beta, beta: e.alpha, gamma: e.gamma })
                .collect(),
            a1: self.b1.clone(),
            b1: self.a1.clone(),
            c1: self.c1.clone(),
        }
    }

    /// `(a, b, c)` recomputed from the coprime parts and the common-prime powers.
    pub fn recompose(&self) -> (BigUint, BigUint, BigUint) {
        let (mut a, mut b, mut c) = (self.a1.clone(), self.b1.clone(), self.c1.clone());
        for e in &self.exps {
            a *= e.p.pow(e.alpha);
            b *= e.p.pow(e.beta);
            c *= e.p.pow(e.gamma);
        }
        (a, b, c)
    }
}

/// A set of common primes with proportional exponents bundled into one base `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GDecomposition {
    pub q1: Vec<BigUint>,
    pub g: BigUint,
    pub alpha_g: u32,
    pub beta_g: u32,
    pub gamma_g: u32,
    /// Common primes outside `q1`.
    pub residual: Vec<PrimeExponents>,
}

impl GDecomposition {
    /// `(a, b, c)` rebuilt as `g^alpha_g * residual * a1` and likewise.
    pub fn recompose(&self, t: &Triple) -> (BigUint, BigUint, BigUint) {
        let (mut a, mut b, mut c) = (
            self.g.pow(self.alpha_g) * &t.a1,
            self.g.pow(self.beta_g) * &t.b1,
            self.g.pow(self.gamma_g) * &t.c1,
        );
        for e in &self.residual {
            a *= e.p.pow(e.alpha);
            b *= e.p.pow(e.beta);
            c *= e.p.pow(e.gamma);
        }
        (a, b, c)
    }
}

pub fn g_decomposition(t: &Triple, q1: &[BigUint]) -> Result<GDecomposition> {
    if q1.is_empty() {
        return Err(Error::Input("Q1 must be nonempty".into()));
    }
    let mut chosen: Vec<&PrimeExponents> = Vec::with_capacity(q1.len());
    for p in q1 {
        match t.exponents_at(p) {
            Some(e) if !chosen.iter().any(|c| c.p == *p) => chosen.push(e),
            Some(_) => return Err(Error::Input(format!("{p} listed twice in Q1"))),
            None => return Err(Error::Input(format!("{p} is not a common prime of the triple"))),
        }
    }
    chosen.sort_by(|x, y| x.p.cmp(&y.p));
    let first = chosen[0];
    for e in &chosen[1..] {
        if !first.proportional_to(e) {
            return Err(Error::NotProportional { p: first.p.clone(), q: e.p.clone() });
        }
    }
    let h = chosen.iter().fold(0u32, |acc, e| acc.gcd(&e.alpha));
    let t1 = first.alpha / h;
    if first.beta % t1 != 0 || first.gamma % t1 != 0 {
        return Err(Error::Invariant(format!("t1 = {t1} does not divide beta or gamma at {}", first.p)));
    }
    let (j, m) = (first.beta / t1, first.gamma / t1);
    let g = chosen.iter().fold(BigUint::one(), |acc, e| acc * e.p.pow(e.alpha / h));
    let residual = t.exps.iter().filter(|e| !q1.contains(&e.p)).cloned().collect();
    Ok(GDecomposition {
        q1: chosen.iter().map(|e| e.p.clone()).collect(),
        g,
        alpha_g: h,
        beta_g: j,
        gamma_g: m,
        residual,
    })
}

/// Partition of the common primes into maximal classes with proportional exponents.
pub fn maximal_proportional_classes(t: &Triple) -> Vec<Vec<BigUint>> {
    let mut classes: Vec<((u32, u32, u32), Vec<BigUint>)> = Vec::new();
    for e in &t.exps {
        let key = e.reduced();
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(e.p.clone()),
            None => classes.push((key, vec![e.p.clone()])),
        }
    }
    classes.into_iter().map(|(_, m)| m).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn exps(t: &Triple) -> Vec<(u64, u32, u32, u32)> {
        t.exps.iter().map(|e| (e.p.iter_u64_digits().next().unwrap(), e.alpha, e.beta, e.gamma)).collect()
    }

    #[test]
    fn build_examples() {
        let t = Triple::from_u64(3, 6, 15).unwrap();
        assert_eq!(exps(&t), vec![(3, 1, 1, 1)]);
        assert_eq!((t.a1.clone(), t.b1.clone(), t.c1.clone()), (b(1), b(2), b(5)));

        let t = Triple::from_u64(7, 49, 98).unwrap();
        assert_eq!(exps(&t), vec![(7, 1, 2, 2)]);
        assert_eq!((t.a1.clone(), t.b1.clone(), t.c1.clone()), (b(1), b(1), b(2)));

        let t = Triple::from_u64(30, 70, 4930).unwrap();
        assert_eq!(exps(&t), vec![(2, 1, 1, 1), (5, 1, 1, 1)]);
        assert_eq!((t.a1.clone(), t.b1.clone(), t.c1.clone()), (b(3), b(7), b(493)));

        let t = Triple::from_u64(3, 5, 2).unwrap();
        assert!(t.exps.is_empty());
        assert!(Triple::from_u64(1, 5, 2).is_err());
    }

    #[test]
    fn g_decomposition_examples() {
        let t = Triple::from_u64(30, 70, 4930).unwrap();
        let d = g_decomposition(&t, &[b(2), b(5)]).unwrap();
        assert_eq!((d.g.clone(), d.alpha_g, d.beta_g, d.gamma_g), (b(10), 1, 1, 1));
        assert_eq!(d.recompose(&t), (t.a.clone(), t.b.clone(), t.c.clone()));

        let t = Triple::from_u64(7, 49, 98).unwrap();
        let d = g_decomposition(&t, &[b(7)]).unwrap();
        assert_eq!((d.g, d.alpha_g, d.beta_g, d.gamma_g), (b(7), 1, 2, 2));

        let t = Triple::from_u64(4, 8, 32).unwrap();
        let d = g_decomposition(&t, &[b(2)]).unwrap();
        assert_eq!((d.g, d.alpha_g, d.beta_g, d.gamma_g), (b(2), 2, 3, 5));

        // a = 2^2 3^4, b = 2^4 3^8, c = 2^6 3^12: t = (1, 2), h = 2
        let t = build_triple(&b(324), &b(16 * 6561), &b(64 * 531441)).unwrap();
        let d = g_decomposition(&t, &[b(2), b(3)]).unwrap();
        assert_eq!((d.g.clone(), d.alpha_g, d.beta_g, d.gamma_g), (b(18), 2, 4, 6));
        assert_eq!(d.recompose(&t), (t.a.clone(), t.b.clone(), t.c.clone()));
    }

    #[test]
    fn proportionality_violation_names_pair() {
        let t = Triple::from_u64(6, 36, 72).unwrap();
        assert_eq!(
            g_decomposition(&t, &[b(2), b(3)]),
            Err(Error::NotProportional { p: b(2), q: b(3) })
        );
        assert_eq!(maximal_proportional_classes(&t), vec![vec![b(2)], vec![b(3)]]);
        let t = Triple::from_u64(30, 70, 4930).unwrap();
        assert_eq!(maximal_proportional_classes(&t), vec![vec![b(2), b(5)]]);
    }
}
