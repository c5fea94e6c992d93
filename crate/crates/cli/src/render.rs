use std::io::Write;

use clap::ValueEnum;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde_json::{json, Map, Value};

use tpe_core::classify::type_profile;
use tpe_core::families::{ConstraintViolation, FamilyParams, NineClass, NineTuple};
use tpe_core::search::{csv_summary, result_record, Candidate, SearchStats};
use tpe_core::solve::{detect_special_case, Solution, SolutionSet};
use tpe_core::triple::Triple;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

pub struct Out {
    format: Format,
    csv_header: Option<Vec<String>>,
}

fn big(v: &BigUint) -> Value {
    Value::Number(v.to_string().parse().expect("decimal integer"))
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl Out {
    pub fn new(format: Format) -> Out {
        Out { format, csv_header: None }
    }

    /// Writes one record: a JSON line, a CSV row of its fields, or the human text.
    pub fn record(&mut self, v: &Value, human: impl FnOnce() -> String) {
        match self.format {
            Format::Human => println!("{}", human()),
            Format::Json => println!("{v}"),
            Format::Csv => {
                let obj = v.as_object().cloned().unwrap_or_default();
                let header: Vec<String> = obj.keys().cloned().collect();
                let mut w = csv::Writer::from_writer(std::io::stdout());
                if self.csv_header.as_ref() != Some(&header) {
                    let _ = w.write_record(&header);
                    self.csv_header = Some(header);
                }
                let _ = w.write_record(obj.values().map(cell));
                let _ = w.flush();
            }
        }
    }
}

pub fn term(base: &BigUint, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{e}")
    }
}

pub fn equation(a: &BigUint, b: &BigUint, c: &BigUint, s: &Solution) -> String {
    format!("{} + {} = {}", term(a, s.x), term(b, s.y), term(c, s.z))
}

fn class_value(class: &NineClass, known: Option<usize>) -> Value {
    let mut m = Map::new();
    m.insert("classification".into(), json!(class.label()));
    match class {
        NineClass::Family(w) => {
            m.insert("family".into(), json!(w.family().to_string()));
            m.insert("params".into(), Value::Object(w.params.as_map().iter().map(|(k, v)| (k.to_string(), big(v))).collect()));
            m.insert("member".into(), json!(w.member.to_string()));
        }
        NineClass::Anomalous { budget_bits } | NineClass::Undetermined { budget_bits } => {
            m.insert("budget_bits".into(), json!(budget_bits));
        }
    }
    m.insert("known_case".into(), known.map(|k| json!(k + 1)).unwrap_or(Value::Null));
    Value::Object(m)
}

fn class_text(class: &NineClass, known: Option<usize>) -> String {
    let known = known.map(|k| format!(", known anomalous case {}", k + 1)).unwrap_or_default();
    match class {
        NineClass::Family(w) => format!("family member: {} -> {}{known}", w.params, w.member),
        NineClass::Anomalous { budget_bits } => format!("anomalous (no family member within {budget_bits} bits){known}"),
        NineClass::Undetermined { budget_bits } => {
            format!("undetermined (family search exceeded {budget_bits} bits){known}")
        }
    }
}

pub fn enumeration(out: &mut Out, t: &Triple, set: &SolutionSet, budget: Option<u64>) -> Result<(), Failure> {
    let common = !t.a.gcd(&t.b).is_one();
    let mut rows = Vec::new();
    for (i, s) in set.solutions.iter().enumerate() {
        let class = set.classes.iter().position(|c| c.contains(&i)).unwrap_or(0);
        let types = if common {
            let p = type_profile(t, s)?;
            p.entries.iter().map(|e| format!("{}:{}", e.p, e.tag)).collect::<Vec<_>>().join(" ")
        } else {
            String::new()
        };
        rows.push((s, class, types));
    }
    let special = detect_special_case(t);
    let classification = if common && set.count_n() == 2 {
        let reps = set.representatives();
        let n = NineTuple::new(t.a.clone(), t.b.clone(), t.c.clone(), reps[0], reps[1])?;
        let class = tpe_core::families::classify_nine(&n, budget)?;
        Some((class, tpe_core::families::known_anomalous_match(&n)))
    } else {
        None
    };
    match out.format {
        Format::Csv => {
            for (s, class, types) in &rows {
                out.record(
                    &json!({"x": s.x, "y": s.y, "z": s.z, "class": class + 1, "types": types}),
                    String::new,
                );
            }
        }
        _ => {
            let sols: Vec<Value> = rows
                .iter()
                .map(|(s, class, types)| json!({"x": s.x, "y": s.y, "z": s.z, "class": class + 1, "types": types}))
                .collect();
            let v = json!({
                "a": big(&t.a), "b": big(&t.b), "c": big(&t.c),
                "max_bits": set.max_bits,
                "bound_too_small": set.bound_too_small,
                "solutions": sols,
                "n": set.count_n(),
                "special_case": special.as_ref().map(|s| s.tag()),
                "classification": classification.as_ref().map(|(c, k)| class_value(c, *k)),
            });
            out.record(&v, || {
                let mut lines = vec![format!("({}, {}, {}), c^z < 2^{}", t.a, t.b, t.c, set.max_bits)];
                if set.bound_too_small {
                    lines.push(format!("warning: c has more than {} bits; nothing enumerated", set.max_bits));
                }
                for (s, class, types) in &rows {
                    lines.push(format!("  {:<36} {:<14} class {}  {}", equation(&t.a, &t.b, &t.c, s), s.to_string(), class + 1, types));
                }
                lines.push(format!("solutions: {}, N = {}", set.solutions.len(), set.count_n()));
                if let Some(sc) = &special {
                    lines.push(format!("special case: {}", sc.tag()));
                }
                if let Some((c, k)) = &classification {
                    lines.push(format!("classification: {}", class_text(c, *k)));
                }
                lines.join("\n")
            });
        }
    }
    Ok(())
}

pub fn classification(out: &mut Out, n: &NineTuple, class: &NineClass, known: Option<usize>) {
    let mut v = json!({
        "a": big(&n.a), "b": big(&n.b), "c": big(&n.c),
        "x1": n.s1.x, "y1": n.s1.y, "z1": n.s1.z, "x2": n.s2.x, "y2": n.s2.y, "z2": n.s2.z,
    });
    if let (Value::Object(m), Value::Object(c)) = (&mut v, class_value(class, known)) {
        m.extend(c);
    }
    out.record(&v, || {
        format!(
            "{}\n  {}\n  {}\n{}",
            n,
            equation(&n.a, &n.b, &n.c, &n.s1),
            equation(&n.a, &n.b, &n.c, &n.s2),
            class_text(class, known)
        )
    });
}

pub fn family_member(out: &mut Out, p: &FamilyParams, n: &NineTuple) {
    let mut v = json!({
        "family": p.tag().to_string(),
        "params": Value::Object(p.as_map().iter().map(|(k, v)| (k.to_string(), big(v))).collect()),
        "a": big(&n.a), "b": big(&n.b), "c": big(&n.c),
        "x1": n.s1.x, "y1": n.s1.y, "z1": n.s1.z, "x2": n.s2.x, "y2": n.s2.y, "z2": n.s2.z,
        "verified": true,
    });
    if out.format == Format::Csv {
        if let Value::Object(m) = &mut v {
            m.insert("params".into(), json!(p.to_string()));
        }
    }
    out.record(&v, || {
        format!(
            "{p}\n{n}\n  {}\n  {}\nboth solutions verified by substitution",
            equation(&n.a, &n.b, &n.c, &n.s1),
            equation(&n.a, &n.b, &n.c, &n.s2)
        )
    });
}

pub fn violations(out: &mut Out, p: &FamilyParams, vs: &[ConstraintViolation]) {
    for c in vs {
        out.record(
            &json!({"family": c.family.to_string(), "params": p.to_string(), "constraint": c.constraint, "detail": c.detail}),
            || format!("rejected: {c}"),
        );
    }
}

pub fn search_results(out: &mut Out, results: &[Candidate], stats: &SearchStats, extra: &[(&str, u64)]) {
    let mut summary = json!({
        "candidates": stats.candidates,
        "solved": stats.solved,
        "verified": stats.verified,
        "family": stats.family,
        "anomalous": stats.anomalous,
        "undetermined": stats.undetermined,
        "distinct": results.len(),
        "rejects": stats.rejects,
    });
    if let Value::Object(m) = &mut summary {
        for (k, v) in extra {
            m.insert(k.to_string(), json!(v));
        }
    }
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match out.format {
        Format::Json => {
            for c in results {
                let _ = writeln!(lock, "{}", result_record(c).to_json());
            }
            let _ = writeln!(lock, "{}", json!({ "summary": summary }));
        }
        Format::Csv => {
            let _ = write!(lock, "{}", csv_summary(results));
            eprintln!("{}", json!({ "summary": summary }));
        }
        Format::Human => {
            for c in results {
                let n = &c.nine;
                let _ = writeln!(
                    lock,
                    "{}  {}\n  {}\n  {}",
                    n,
                    class_text(&c.class, tpe_core::families::known_anomalous_match(n)),
                    equation(&n.a, &n.b, &n.c, &n.s1),
                    equation(&n.a, &n.b, &n.c, &n.s2)
                );
            }
            let rejects: Vec<String> = stats.rejects.iter().map(|(k, v)| format!("{k} {v}")).collect();
            let extras: Vec<String> = extra.iter().map(|(k, v)| format!("{k} {v}")).collect();
            let _ = writeln!(
                lock,
                "summary: {}; candidates {}, solved {}, verified {}, family {}, anomalous {}, undetermined {}, distinct {}; rejects: {}",
                extras.join(", "),
                stats.candidates,
                stats.solved,
                stats.verified,
                stats.family,
                stats.anomalous,
                stats.undetermined,
                results.len(),
                if rejects.is_empty() { "none".to_string() } else { rejects.join(", ") }
            );
        }
    }
}
