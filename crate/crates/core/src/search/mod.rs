//! Search for new two-solution triples from pairs of coprime equations.

mod direct;
mod equations;
mod output;
mod pipeline;
mod shapes;
mod system;
mod verify;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

pub use direct::{direct_search, direct_search_resumable, Checkpoint, DirectBounds, DirectReport};
pub use equations::{
    generate_equations, ingest_equations, ingest_reader, EquationRecord, IngestReport,
    LineDiagnostic,
};
pub use output::{csv_summary, json_line, result_record, ResultRecord};
pub use pipeline::{run_pipeline, PipelineReport};
pub use shapes::{decompose, Exponent, Shape53, Shape54, ShapeKey, Shapes, Side};
pub use system::{pair_and_solve, satisfies, NoSolution, SolvedSystem};
pub use verify::{candidate_bound, reconstruct, reconstruct_and_verify, verify_default, Candidate, Rejection};

use crate::families::NineClass;
use crate::solve::DEFAULT_MAX_BITS;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Minimum enumeration budget for reconstructed triples.
    pub max_bits: u64,
    pub family_budget: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_bits: DEFAULT_MAX_BITS, family_budget: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Shape pairs sharing `(g, a1, b1, c1)`.
    pub candidates: u64,
    pub solved: u64,
    pub verified: u64,
    pub family: u64,
    pub anomalous: u64,
    pub undetermined: u64,
    pub rejects: BTreeMap<String, u64>,
}

impl SearchStats {
    pub fn merge(&mut self, other: &SearchStats) {
        self.candidates += other.candidates;
        self.solved += other.solved;
        self.verified += other.verified;
        self.family += other.family;
        self.anomalous += other.anomalous;
        self.undetermined += other.undetermined;
        for (k, v) in &other.rejects {
            *self.rejects.entry(k.clone()).or_default() += v;
        }
    }

    fn reject(&mut self, code: &str) {
        *self.rejects.entry(code.to_string()).or_default() += 1;
    }
}

/// Verified candidates keyed by their normalized nine-tuple.
pub type CandidateSet = BTreeSet<Candidate>;

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.nine.cmp(&other.nine)
    }
}

/// Solves and verifies one shape pair, updating `stats`.
pub(crate) fn process_pair(s53: &Shape53, s54: &Shape54, cfg: &SearchConfig, stats: &mut SearchStats) -> Option<Candidate> {
    stats.candidates += 1;
    let sys = match pair_and_solve(s53, s54) {
        Ok(sys) => sys,
        Err(e) => {
            stats.reject(e.code());
            return None;
        }
    };
    stats.solved += 1;
    match reconstruct_and_verify(s53, s54, &sys, cfg.max_bits, cfg.family_budget) {
        Ok(c) => {
            stats.verified += 1;
            match c.class {
                NineClass::Family(_) => stats.family += 1,
                NineClass::Anomalous { .. } => stats.anomalous += 1,
                NineClass::Undetermined { .. } => stats.undetermined += 1,
            }
            Some(c)
        }
        Err(e) => {
            stats.reject(e.code());
            None
        }
    }
}
