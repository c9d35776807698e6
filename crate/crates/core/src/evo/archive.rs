use super::Individual;
use crate::matroid::Solution;
use crate::scalarize::ObjectivePoint;

/// Mutually non-dominated solutions under weak dominance on `g`, one per image.
#[derive(Debug, Clone, Default)]
pub struct Archive {
    members: Vec<Individual>,
}

impl Archive {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `candidate` unless some member weakly dominates it; evicts the
    /// members it dominates. Returns whether it was inserted.
    pub fn offer(&mut self, solution: &Solution, fitness: &ObjectivePoint) -> bool {
        if self.members.iter().any(|m| m.fitness.weakly_dominates(fitness)) {
            return false;
        }
        self.members.retain(|m| !fitness.weakly_dominates(&m.fitness));
        self.members.push(Individual {
            solution: solution.clone(),
            fitness: fitness.clone(),
        });
        true
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn images(&self) -> Vec<ObjectivePoint> {
        self.members.iter().map(|m| m.fitness.clone()).collect()
    }

    pub fn solutions(&self) -> Vec<Solution> {
        self.members.iter().map(|m| m.solution.clone()).collect()
    }

    pub fn contains_image(&self, image: &ObjectivePoint) -> bool {
        self.members.iter().any(|m| &m.fitness == image)
    }

    /// Panics unless all members are pairwise non-dominated.
    pub fn assert_invariants(&self) {
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                assert!(
                    !a.fitness.weakly_dominates(&b.fitness) && !b.fitness.weakly_dominates(&a.fitness),
                    "archive members {:?} and {:?} are comparable",
                    a.fitness,
                    b.fitness
                );
            }
        }
    }
}
