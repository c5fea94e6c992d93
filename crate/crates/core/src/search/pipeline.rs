//! Shapes from a list of coprime equations, paired by their common bases.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::equations::EquationRecord;
use super::shapes::{decompose, Shape53, Shape54, ShapeKey, Shapes, Side};
use super::{process_pair, Candidate, CandidateSet, SearchConfig, SearchStats};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub records: u64,
    pub shapes53: u64,
    pub shapes54: u64,
    pub results: Vec<Candidate>,
    pub stats: SearchStats,
}

type Groups = BTreeMap<ShapeKey, (Vec<Shape53>, Vec<Shape54>)>;

fn group(records: &[EquationRecord]) -> Groups {
    let mut groups = Groups::new();
    for eq in records {
        for oriented in [eq.clone(), eq.swapped()] {
            if let Shapes::S53(v) = decompose(&oriented, Side::Left) {
                for s in v {
                    groups.entry(s.key()).or_default().0.push(s);
                }
            }
            if let Shapes::S54(v) = decompose(&oriented, Side::Right) {
                for s in v {
                    groups.entry(s.key()).or_default().1.push(s);
                }
            }
        }
    }
    for (l, r) in groups.values_mut() {
        l.sort();
        l.dedup();
        r.sort();
        r.dedup();
    }
    groups
}

pub fn run_pipeline(records: &[EquationRecord], cfg: &SearchConfig) -> PipelineReport {
    let groups = group(records);
    let shapes53 = groups.values().map(|(l, _)| l.len() as u64).sum();
    let shapes54 = groups.values().map(|(_, r)| r.len() as u64).sum();
    let work: Vec<(&Vec<Shape53>, &Vec<Shape54>)> =
        groups.values().filter(|(l, r)| !l.is_empty() && !r.is_empty()).map(|(l, r)| (l, r)).collect();
    let parts: Vec<(Vec<Candidate>, SearchStats)> = work
        .par_iter()
        .map(|(l, r)| {
            let mut stats = SearchStats::default();
            let mut found = Vec::new();
            for s53 in l.iter() {
                for s54 in r.iter() {
                    found.extend(process_pair(s53, s54, cfg, &mut stats));
                }
            }
            (found, stats)
        })
        .collect();
    let mut set = CandidateSet::new();
    let mut stats = SearchStats::default();
    for (found, s) in parts {
        set.extend(found);
        stats.merge(&s);
    }
    PipelineReport {
        records: records.len() as u64,
        shapes53,
        shapes54,
        results: set.into_iter().collect(),
        stats,
    }
}
