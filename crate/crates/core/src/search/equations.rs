//! Coprime equations `A + B = C`: parsing from text and generation in a
//! radical/height box.

use std::io::BufRead;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, Factored};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationRecord {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub fa: Factored,
    pub fb: Factored,
    pub fc: Factored,
}

impl EquationRecord {
    pub fn new(a: BigUint, b: BigUint, c: BigUint) -> Result<EquationRecord, String> {
        if a.is_zero() || b.is_zero() {
            return Err("terms must be positive".into());
        }
        if &a + &b != c {
            return Err(format!("{a} + {b} != {c}"));
        }
        let g = a.gcd(&b);
        if !g.is_one() {
            return Err(format!("gcd(A, B) = {g}"));
        }
        let fa = factorize(&a).map_err(|e| e.to_string())?;
        let fb = factorize(&b).map_err(|e| e.to_string())?;
        let fc = factorize(&c).map_err(|e| e.to_string())?;
        Ok(EquationRecord { a, b, c, fa, fb, fc })
    }

    pub fn from_u64(a: u64, b: u64, c: u64) -> Result<EquationRecord, String> {
        EquationRecord::new(BigUint::from(a), BigUint::from(b), BigUint::from(c))
    }

    /// The same equation with `A` and `B` exchanged.
    pub fn swapped(&self) -> EquationRecord {
        EquationRecord {
            a: self.b.clone(),
            b: self.a.clone(),
            c: self.c.clone(),
            fa: self.fb.clone(),
            fb: self.fa.clone(),
            fc: self.fc.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineDiagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub records: Vec<EquationRecord>,
    pub diagnostics: Vec<LineDiagnostic>,
}

impl IngestReport {
    pub fn rejected(&self) -> usize {
        self.diagnostics.len()
    }
}

fn parse_line(line: &str) -> Result<Option<EquationRecord>, String> {
    let content = line.split('#').next().unwrap_or("").trim();
    if content.is_empty() {
        return Ok(None);
    }
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(format!("expected 3 fields, found {}", fields.len()));
    }
    let mut nums = Vec::with_capacity(3);
    for f in fields {
        nums.push(f.parse::<BigUint>().map_err(|_| format!("not a nonnegative integer: {f:?}"))?);
    }
    let c = nums.pop().expect("3 fields");
    let b = nums.pop().expect("3 fields");
    let a = nums.pop().expect("3 fields");
    EquationRecord::new(a, b, c).map(Some)
}

/// Reads `A B C` lines; blank lines and `#` comments are skipped, bad lines are reported.
pub fn ingest_equations<I, S>(lines: I) -> IngestReport
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut report = IngestReport::default();
    for (i, line) in lines.into_iter().enumerate() {
        match parse_line(line.as_ref()) {
            Ok(Some(r)) => report.records.push(r),
            Ok(None) => {}
            Err(message) => report.diagnostics.push(LineDiagnostic { line: i + 1, message }),
        }
    }
    report
}

pub fn ingest_reader<R: BufRead>(reader: R) -> std::io::Result<IngestReport> {
    let lines = reader.lines().collect::<std::io::Result<Vec<String>>>()?;
    Ok(ingest_equations(lines))
}

fn radical_sieve(limit: usize) -> Vec<u64> {
    let mut rad = vec![1u64; limit + 1];
    let mut is_composite = vec![false; limit + 1];
    for p in 2..=limit {
        if !is_composite[p] {
            let mut m = p;
            while m <= limit {
                if m > p {
                    is_composite[m] = true;
                }
                rad[m] *= p as u64;
                m += p;
            }
        }
    }
    rad
}

/// All coprime `A + B = C` with `A <= B`, `C <= height` and `rad(ABC) <= rad_bound`.
pub fn generate_equations(rad_bound: u64, height: u64) -> Vec<EquationRecord> {
    let limit = height as usize;
    if limit < 2 {
        return Vec::new();
    }
    let rad = radical_sieve(limit);
    let smooth: Vec<usize> = (1..=limit).filter(|&n| rad[n] <= rad_bound).collect();
    let mut out = Vec::new();
    for &c in smooth.iter().filter(|&&c| c >= 2) {
        for &a in smooth.iter().take_while(|&&a| 2 * a <= c) {
            let b = c - a;
            if rad[a] * rad[c] > rad_bound || a.gcd(&b) != 1 {
                continue;
            }
            if rad[a].saturating_mul(rad[b]).saturating_mul(rad[c]) <= rad_bound {
                let rec = EquationRecord::from_u64(a as u64, b as u64, c as u64).expect("coprime by construction");
                out.push(rec);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(v: &[EquationRecord]) -> Vec<(u64, u64, u64)> {
        v.iter()
            .map(|r| {
                let d = |n: &BigUint| n.iter_u64_digits().next().unwrap_or(0);
                (d(&r.a), d(&r.b), d(&r.c))
            })
            .collect()
    }

    #[test]
    fn ingest() {
        let rep = ingest_equations(["3 2 5", "# comment", "", "16 3 19  # trailing", "2 2 4", "1 2 4", "x 1 2", "1 2"]);
        assert_eq!(triples(&rep.records), vec![(3, 2, 5), (16, 3, 19)]);
        let lines: Vec<usize> = rep.diagnostics.iter().map(|d| d.line).collect();
        assert_eq!(lines, vec![5, 6, 7, 8]);
        assert!(rep.diagnostics[0].message.contains("gcd"));
        assert_eq!(rep.rejected(), 4);
    }

    #[test]
    fn generation_matches_exhaustive_scan() {
        for (rad_bound, height) in [(30u64, 100u64), (10, 20), (6, 10), (100, 2000)] {
            let got = triples(&generate_equations(rad_bound, height));
            let mut want = Vec::new();
            let rad = |n: u64| crate::arith::radical(&BigUint::from(n)).unwrap().iter_u64_digits().next().unwrap();
            for c in 2..=height {
                for a in 1..=c / 2 {
                    let b = c - a;
                    if a.gcd(&b) == 1 && rad(a) * rad(b) * rad(c) <= rad_bound {
                        want.push((a, b, c));
                    }
                }
            }
            assert_eq!(got, want, "box ({rad_bound}, {height})");
        }
        let g = triples(&generate_equations(30, 128));
        for t in [(1, 8, 9), (5, 27, 32), (3, 125, 128)] {
            assert!(g.contains(&t));
        }
        let g = triples(&generate_equations(10, 20));
        for t in [(1, 1, 2), (1, 2, 3), (1, 3, 4), (1, 4, 5)] {
            assert!(g.contains(&t));
        }
        assert!(triples(&generate_equations(6, 10)).contains(&(1, 8, 9)));
    }
}
