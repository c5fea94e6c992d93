//! JSON-lines and CSV renderings of search results.

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{Map, Number, Value};

use super::verify::Candidate;
use crate::families::NineClass;

/// One result as written to the JSON-lines output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultRecord {
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub x1: u32,
    pub y1: u32,
    pub z1: u32,
    pub x2: u32,
    pub y2: u32,
    pub z2: u32,
    pub classification: &'static str,
    pub family: Option<String>,
    pub params: Option<Vec<(&'static str, BigUint)>>,
    pub bound_bits: u64,
}

pub fn result_record(c: &Candidate) -> ResultRecord {
    let n = &c.nine;
    let (family, params) = match &c.class {
        NineClass::Family(w) => (Some(w.family().to_string()), Some(w.params.as_map())),
        _ => (None, None),
    };
    ResultRecord {
        a: n.a.clone(),
        b: n.b.clone(),
        c: n.c.clone(),
        x1: n.s1.x,
        y1: n.s1.y,
        z1: n.s1.z,
        x2: n.s2.x,
        y2: n.s2.y,
        z2: n.s2.z,
        classification: c.class.label(),
        family,
        params,
        bound_bits: c.bound_bits,
    }
}

fn num(v: &BigUint) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("decimal integer"))
}

impl ResultRecord {
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("a".into(), num(&self.a));
        m.insert("b".into(), num(&self.b));
        m.insert("c".into(), num(&self.c));
        for (k, v) in [("x1", self.x1), ("y1", self.y1), ("z1", self.z1), ("x2", self.x2), ("y2", self.y2), ("z2", self.z2)] {
            m.insert(k.into(), Value::from(v));
        }
        m.insert("classification".into(), Value::from(self.classification));
        m.insert("family".into(), self.family.clone().map(Value::from).unwrap_or(Value::Null));
        m.insert(
            "params".into(),
            match &self.params {
                Some(ps) => Value::Object(ps.iter().map(|(k, v)| (k.to_string(), num(v))).collect()),
                None => Value::Null,
            },
        );
        m.insert("bound_bits".into(), Value::from(self.bound_bits));
        Value::Object(m)
    }
}

pub fn json_line(c: &Candidate) -> String {
    result_record(c).to_json().to_string()
}

/// Header plus one row per result.
pub fn csv_summary(results: &[Candidate]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["a", "b", "c", "x1", "y1", "z1", "x2", "y2", "z2", "classification", "family", "params", "bound_bits"])
        .expect("in-memory write");
    for c in results {
        let r = result_record(c);
        let params = r
            .params
            .as_ref()
            .map(|ps| ps.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        w.write_record([
            r.a.to_string(),
            r.b.to_string(),
            r.c.to_string(),
            r.x1.to_string(),
            r.y1.to_string(),
            r.z1.to_string(),
            r.x2.to_string(),
            r.y2.to_string(),
            r.z2.to_string(),
            r.classification.to_string(),
            r.family.unwrap_or_default(),
            params,
            r.bound_bits.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::NineTuple;

    #[test]
    fn json_fields() {
        let c = Candidate {
            nine: NineTuple::from_u64([3, 6, 15, 2, 1, 1, 2, 3, 2]).unwrap(),
            class: NineClass::Anomalous { budget_bits: 40 },
            bound_bits: 256,
        };
        assert_eq!(
            json_line(&c),
            r#"{"a":3,"b":6,"c":15,"x1":2,"y1":1,"z1":1,"x2":2,"y2":3,"z2":2,"classification":"anomalous","family":null,"params":null,"bound_bits":256}"#
        );
        let csv = csv_summary(&[c]);
        assert_eq!(csv.lines().nth(1), Some("3,6,15,2,1,1,2,3,2,anomalous,,,256"));
    }
}
