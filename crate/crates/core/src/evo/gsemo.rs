use rand::Rng;

use super::{Archive, RunResult, TargetTracker, Termination};
use crate::error::Result;
use crate::evo::standard_bit_mutation;
use crate::matroid::Solution;
use crate::scalarize::{ObjectivePoint, WeightedInstance};

/// GSEMO population: mutually non-dominated individuals under `g`.
#[derive(Debug, Clone)]
pub struct GsemoState {
    population: Archive,
    evaluations: u64,
}

impl GsemoState {
    /// Starts from one uniformly random bit string, not counted as an evaluation.
    pub fn new<R: Rng + ?Sized>(inst: &WeightedInstance, rng: &mut R) -> Self {
        let bits: Vec<bool> = (0..inst.ground_size()).map(|_| rng.gen_bool(0.5)).collect();
        let x = Solution::from_bools(&bits);
        let g = inst.evaluate(&x).fitness_vector();
        let mut population = Archive::new();
        population.offer(&x, &g);
        GsemoState {
            population,
            evaluations: 0,
        }
    }

    pub fn population(&self) -> &Archive {
        &self.population
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    /// One iteration: mutate a uniformly chosen member and offer the child.
    pub fn step<R: Rng + ?Sized>(&mut self, inst: &WeightedInstance, rng: &mut R) -> (ObjectivePoint, bool) {
        let members = self.population.members();
        let parent = &members[rng.gen_range(0..members.len())].solution;
        let y = standard_bit_mutation(parent, rng);
        let g = inst.evaluate(&y).fitness_vector();
        self.evaluations += 1;
        let inserted = self.population.offer(&y, &g);
        (g, inserted)
    }
}

/// Runs GSEMO until every target image is in the population or `budget`
/// evaluations have been spent.
pub fn gsemo_run<R: Rng + ?Sized>(
    inst: &WeightedInstance,
    budget: u64,
    targets: &[ObjectivePoint],
    rng: &mut R,
) -> Result<RunResult> {
    let mut state = GsemoState::new(inst, rng);
    let mut tracker = TargetTracker::new(targets);
    for m in state.population.members() {
        tracker.observe(&m.fitness, 0);
    }
    let termination = loop {
        if tracker.done() {
            break Termination::AllTargetsHit;
        }
        if state.evaluations >= budget {
            break Termination::BudgetExhausted;
        }
        let (g, inserted) = state.step(inst, rng);
        if inserted {
            tracker.observe(&g, state.evaluations);
        }
        if cfg!(debug_assertions) && state.evaluations.is_multiple_of(1024) {
            state.population.assert_invariants();
        }
    };
    let (targets, first_hit) = tracker.into_parts();
    Ok(RunResult {
        evaluations_used: state.evaluations,
        budget,
        targets,
        first_hit,
        archive_images: state.population.images(),
        archive_solutions: state.population.solutions(),
        termination,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarize::tests::triangle_instance;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[i64]) -> ObjectivePoint {
        ObjectivePoint(v.to_vec())
    }

    #[test]
    fn finds_triangle_front() {
        let inst = triangle_instance();
        let targets = [p(&[3, 5]), p(&[4, 4]), p(&[5, 3])];
        for seed in 0..10 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = gsemo_run(&inst, 100_000, &targets, &mut rng).unwrap();
            assert!(r.success(), "seed {seed}");
            let mut imgs = r.archive_images.clone();
            imgs.sort();
            assert_eq!(imgs, targets.to_vec());
        }
    }

    #[test]
    fn zero_budget_only_observes_start() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = gsemo_run(&triangle_instance(), 0, &[p(&[0, 0])], &mut rng).unwrap();
        assert_eq!(r.evaluations_used, 0);
        assert_eq!(r.termination, Termination::BudgetExhausted);
        assert_eq!(r.archive_images.len(), 1);
    }

    #[test]
    fn population_stays_non_dominated() {
        let inst = triangle_instance();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut s = GsemoState::new(&inst, &mut rng);
        for _ in 0..5000 {
            s.step(&inst, &mut rng);
            s.population().assert_invariants();
        }
        assert_eq!(s.evaluations(), 5000);
    }

    #[test]
    fn seeded_runs_are_identical() {
        let inst = triangle_instance();
        let targets = [p(&[3, 5]), p(&[5, 3])];
        let run = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            gsemo_run(&inst, 10_000, &targets, &mut rng).unwrap()
        };
        assert_eq!(run(4), run(4));
    }
}
