//! MOEA/D with weight scalarization and the GSEMO baseline.
//!
//! Both algorithms use standard bit mutation on bit strings and the
//! rank-penalised fitness functions from [`crate::scalarize`]. One evaluation
//! is one offspring: its image and rank are computed once and every scalar
//! fitness `f_λ` and the vector fitness `g` are derived from them.

mod archive;
mod gsemo;
mod moead;
mod mutation;

pub use archive::Archive;
pub use gsemo::{gsemo_run, GsemoState};
pub use moead::{convf_enumeration_mode, moead_run, MoeadState, Subproblem};
pub use mutation::standard_bit_mutation;

use crate::matroid::Solution;
use crate::scalarize::ObjectivePoint;

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    AllTargetsHit,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub evaluations_used: u64,
    pub budget: u64,
    pub targets: Vec<ObjectivePoint>,
    /// Evaluation count at which each target first entered the output set.
    pub first_hit: Vec<Option<u64>>,
    /// Images of the final output set (archive for MOEA/D, population for GSEMO).
    pub archive_images: Vec<ObjectivePoint>,
    pub archive_solutions: Vec<Solution>,
    pub termination: Termination,
}

impl RunResult {
    pub fn hits(&self) -> usize {
        self.first_hit.iter().filter(|h| h.is_some()).count()
    }

    pub fn success(&self) -> bool {
        self.first_hit.iter().all(Option::is_some)
    }

    /// Evaluations until the last target was hit, for successful runs.
    pub fn hit_time(&self) -> Option<u64> {
        if self.success() {
            Some(self.first_hit.iter().flatten().copied().max().unwrap_or(0))
        } else {
            None
        }
    }
}

/// Records the first evaluation at which each target image is produced.
#[derive(Debug, Clone)]
pub(crate) struct TargetTracker {
    targets: Vec<ObjectivePoint>,
    first_hit: Vec<Option<u64>>,
    remaining: usize,
}

impl TargetTracker {
    pub fn new(targets: &[ObjectivePoint]) -> Self {
        let mut targets = targets.to_vec();
        targets.sort();
        targets.dedup();
        let remaining = targets.len();
        TargetTracker {
            first_hit: vec![None; targets.len()],
            targets,
            remaining,
        }
    }

    pub fn observe(&mut self, image: &ObjectivePoint, evaluation: u64) {
        if let Ok(i) = self.targets.binary_search(image) {
            if self.first_hit[i].is_none() {
                self.first_hit[i] = Some(evaluation);
                self.remaining -= 1;
            }
        }
    }

    pub fn done(&self) -> bool {
        self.remaining == 0
    }

    pub fn into_parts(self) -> (Vec<ObjectivePoint>, Vec<Option<u64>>) {
        (self.targets, self.first_hit)
    }
}

/// A solution with its cached vector fitness `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual {
    pub solution: Solution,
    pub fitness: ObjectivePoint,
}
