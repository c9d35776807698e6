use std::cmp::Ordering;

use num::BigRational;
use rand::Rng;

use super::{Archive, Individual, RunResult, TargetTracker, Termination};
use crate::error::{Error, Result};
use crate::evo::standard_bit_mutation;
use crate::matroid::Solution;
use crate::oracle;
use crate::scalarize::{ObjectivePoint, TradeOff, WeightedInstance};

/// The tie pool of one scalarized subproblem.
#[derive(Debug, Clone)]
pub struct Subproblem {
    tradeoff: TradeOff,
    members: Vec<Individual>,
    /// `d_λ · f_λ`, shared by every member.
    best: i128,
}

impl Subproblem {
    pub fn tradeoff(&self) -> &TradeOff {
        &self.tradeoff
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    /// `f_λ` of every member, exact.
    pub fn fitness(&self) -> num::rational::Ratio<i128> {
        num::rational::Ratio::new(self.best, self.tradeoff.denominator() as i128)
    }
}

/// Population state of MOEA/D.
#[derive(Debug, Clone)]
pub struct MoeadState {
    subproblems: Vec<Subproblem>,
    neighborhoods: Vec<Vec<usize>>,
    archive: Archive,
    evaluations: u64,
}

fn squared_distance(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            &d * &d
        })
        .sum()
}

/// `size` nearest trade-offs of each trade-off by Euclidean distance; ties by
/// index, with the trade-off itself always first.
fn neighborhoods(tradeoffs: &[TradeOff], size: usize) -> Vec<Vec<usize>> {
    let exact: Vec<Vec<BigRational>> = tradeoffs.iter().map(TradeOff::to_big).collect();
    (0..tradeoffs.len())
        .map(|i| {
            let dist: Vec<BigRational> = exact.iter().map(|t| squared_distance(&exact[i], t)).collect();
            let mut order: Vec<usize> = (0..tradeoffs.len()).collect();
            order.sort_by(|&a, &b| match (a == i, b == i) {
                (true, false) => Ordering::Less,
                (false, true) => Ordering::Greater,
                _ => dist[a].cmp(&dist[b]).then(a.cmp(&b)),
            });
            order.truncate(size);
            order
        })
        .collect()
}

fn random_solution<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Solution {
    Solution::from_bools(&(0..m).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>())
}

impl MoeadState {
    /// Builds neighborhoods and seeds every subproblem with one uniformly
    /// random bit string. Seeding does not count as evaluations.
    pub fn new<R: Rng + ?Sized>(
        inst: &WeightedInstance,
        tradeoffs: &[TradeOff],
        neighborhood_size: usize,
        rng: &mut R,
    ) -> Result<Self> {
        if tradeoffs.is_empty() {
            return Err(Error::EmptyTradeOffs);
        }
        if neighborhood_size == 0 || neighborhood_size > tradeoffs.len() {
            return Err(Error::InvalidNeighborhood {
                size: neighborhood_size,
                count: tradeoffs.len(),
            });
        }
        if let Some(t) = tradeoffs.iter().find(|t| t.dim() != inst.objectives()) {
            return Err(Error::DimensionMismatch {
                expected: inst.objectives(),
                got: t.dim(),
            });
        }
        let m = inst.ground_size();
        let subproblems = tradeoffs
            .iter()
            .map(|t| {
                let x = random_solution(m, rng);
                let eval = inst.evaluate(&x);
                Subproblem {
                    tradeoff: t.clone(),
                    best: eval.scaled_fitness(t),
                    members: vec![Individual {
                        solution: x,
                        fitness: eval.fitness_vector(),
                    }],
                }
            })
            .collect();
        Ok(MoeadState {
            subproblems,
            neighborhoods: neighborhoods(tradeoffs, neighborhood_size),
            archive: Archive::new(),
            evaluations: 0,
        })
    }

    pub fn subproblems(&self) -> &[Subproblem] {
        &self.subproblems
    }

    pub fn neighborhoods(&self) -> &[Vec<usize>] {
        &self.neighborhoods
    }

    pub fn archive(&self) -> &Archive {
        &self.archive
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    /// Produces and places one offspring of subproblem `i`. Returns its `g`
    /// value and whether it entered the archive.
    pub fn evolve<R: Rng + ?Sized>(
        &mut self,
        inst: &WeightedInstance,
        i: usize,
        rng: &mut R,
    ) -> (ObjectivePoint, bool) {
        let pool = &self.subproblems[i].members;
        let parent = &pool[rng.gen_range(0..pool.len())].solution;
        let y = standard_bit_mutation(parent, rng);
        let eval = inst.evaluate(&y);
        let g = eval.fitness_vector();
        self.evaluations += 1;

        for &l in &self.neighborhoods[i] {
            let sub = &mut self.subproblems[l];
            let f = eval.scaled_fitness(&sub.tradeoff);
            match f.cmp(&sub.best) {
                Ordering::Less => {
                    sub.best = f;
                    sub.members.clear();
                    sub.members.push(Individual {
                        solution: y.clone(),
                        fitness: g.clone(),
                    });
                }
                Ordering::Equal => {
                    if !sub.members.iter().any(|m| m.fitness == g) {
                        sub.members.push(Individual {
                            solution: y.clone(),
                            fitness: g.clone(),
                        });
                    }
                }
                Ordering::Greater => {}
            }
        }
        let inserted = self.archive.offer(&y, &g);
        (g, inserted)
    }

    /// One generation: an offspring for every subproblem in order.
    pub fn step<R: Rng + ?Sized>(&mut self, inst: &WeightedInstance, rng: &mut R) {
        let before: Vec<i128> = self.subproblems.iter().map(|s| s.best).collect();
        for i in 0..self.subproblems.len() {
            self.evolve(inst, i, rng);
        }
        if cfg!(debug_assertions) {
            self.assert_progress(&before);
            self.assert_invariants(inst);
        }
    }

    fn assert_progress(&self, before: &[i128]) {
        for (s, b) in self.subproblems.iter().zip(before) {
            assert!(s.best <= *b, "best f_λ increased for {:?}", s.tradeoff);
        }
    }

    /// Panics unless every tie pool is pure and the archive is sound.
    pub fn assert_invariants(&self, inst: &WeightedInstance) {
        for s in &self.subproblems {
            assert!(!s.members.is_empty(), "empty population for {:?}", s.tradeoff);
            for (j, m) in s.members.iter().enumerate() {
                let eval = inst.evaluate(&m.solution);
                assert_eq!(eval.scaled_fitness(&s.tradeoff), s.best, "impure tie pool");
                assert_eq!(eval.fitness_vector(), m.fitness, "stale fitness");
                assert!(
                    s.members[j + 1..].iter().all(|o| o.fitness != m.fitness),
                    "duplicate image in tie pool"
                );
            }
        }
        self.archive.assert_invariants();
        for a in self.archive.members() {
            assert_eq!(inst.evaluate(&a.solution).fitness_vector(), a.fitness);
        }
    }
}

/// Runs MOEA/D until every target image is in the archive or `budget`
/// evaluations have been spent.
pub fn moead_run<R: Rng + ?Sized>(
    inst: &WeightedInstance,
    tradeoffs: &[TradeOff],
    neighborhood_size: usize,
    budget: u64,
    targets: &[ObjectivePoint],
    rng: &mut R,
) -> Result<RunResult> {
    let generation = tradeoffs.len() as u64;
    if tradeoffs.is_empty() {
        return Err(Error::EmptyTradeOffs);
    }
    if budget < generation {
        return Err(Error::BudgetTooSmall { budget, generation });
    }
    let mut state = MoeadState::new(inst, tradeoffs, neighborhood_size, rng)?;
    let mut tracker = TargetTracker::new(targets);
    let termination = if tracker.done() {
        Termination::AllTargetsHit
    } else {
        'run: loop {
            let before: Vec<i128> = state.subproblems.iter().map(|s| s.best).collect();
            for i in 0..state.subproblems.len() {
                let (g, inserted) = state.evolve(inst, i, rng);
                if inserted {
                    tracker.observe(&g, state.evaluations);
                }
                if tracker.done() {
                    break 'run Termination::AllTargetsHit;
                }
                if state.evaluations >= budget {
                    break 'run Termination::BudgetExhausted;
                }
            }
            if cfg!(debug_assertions) {
                state.assert_progress(&before);
                state.assert_invariants(inst);
                for t in tracker.targets.iter().zip(&tracker.first_hit) {
                    if t.1.is_some() {
                        assert!(state.archive.contains_image(t.0), "target {:?} evicted", t.0);
                    }
                }
            }
        }
    };
    let (targets, first_hit) = tracker.into_parts();
    Ok(RunResult {
        evaluations_used: state.evaluations,
        budget,
        targets,
        first_hit,
        archive_images: state.archive.images(),
        archive_solutions: state.archive.solutions(),
        termination,
    })
}

/// MOEA/D on a complete trade-off set with every supported image of the
/// front as a target. The targets come from the brute-force oracle, so the
/// instance must be small enough to enumerate.
pub fn convf_enumeration_mode<R: Rng + ?Sized>(
    inst: &WeightedInstance,
    complete: &[TradeOff],
    neighborhood_size: usize,
    budget: u64,
    rng: &mut R,
) -> Result<RunResult> {
    let targets = oracle::pareto_front(inst)?.supported_images;
    moead_run(inst, complete, neighborhood_size, budget, &targets, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;
    use crate::scalarize::tests::triangle_instance;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[i64]) -> ObjectivePoint {
        ObjectivePoint(v.to_vec())
    }

    fn quarters() -> Vec<TradeOff> {
        vec![
            TradeOff::from_scalar(1, 4).unwrap(),
            TradeOff::from_scalar(3, 4).unwrap(),
        ]
    }

    #[test]
    fn neighborhoods_include_self_first() {
        let ts: Vec<TradeOff> = (0..=4).map(|i| TradeOff::from_scalar(i, 4).unwrap()).collect();
        let b = neighborhoods(&ts, 3);
        assert_eq!(b[0], vec![0, 1, 2]);
        assert_eq!(b[2], vec![2, 1, 3]);
        assert_eq!(b[4], vec![4, 3, 2]);
        assert_eq!(neighborhoods(&ts, 5)[1], vec![1, 0, 2, 3, 4]);
    }

    #[test]
    fn rejects_bad_arguments() {
        let inst = triangle_instance();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            moead_run(&inst, &[], 1, 10, &[], &mut rng),
            Err(Error::EmptyTradeOffs)
        ));
        assert!(matches!(
            moead_run(&inst, &quarters(), 1, 1, &[], &mut rng),
            Err(Error::BudgetTooSmall { .. })
        ));
        assert!(matches!(
            moead_run(&inst, &quarters(), 3, 10, &[], &mut rng),
            Err(Error::InvalidNeighborhood { .. })
        ));
    }

    #[test]
    fn empty_targets_terminate_immediately() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = moead_run(&triangle_instance(), &quarters(), 2, 100, &[], &mut rng).unwrap();
        assert_eq!(r.evaluations_used, 0);
        assert_eq!(r.termination, Termination::AllTargetsHit);
        assert!(r.success());
    }

    #[test]
    fn budget_of_one_generation() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let unreachable = [p(&[0, 0])];
        let r = moead_run(&triangle_instance(), &quarters(), 2, 2, &unreachable, &mut rng).unwrap();
        assert_eq!(r.evaluations_used, 2);
        assert_eq!(r.termination, Termination::BudgetExhausted);
    }

    #[test]
    fn triangle_targets_hit_for_all_seeds() {
        let inst = triangle_instance();
        let targets = [p(&[3, 5]), p(&[5, 3])];
        for seed in 0..10 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = moead_run(&inst, &quarters(), 2, 100_000, &targets, &mut rng).unwrap();
            assert!(r.success(), "seed {seed}");
            assert!(r.archive_images.contains(&p(&[3, 5])));
            assert!(r.archive_images.contains(&p(&[5, 3])));
            assert!(r.first_hit.iter().all(|h| h.unwrap() <= r.evaluations_used));
        }
    }

    #[test]
    fn higher_rank_offspring_replaces_pool() {
        let inst = triangle_instance();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut state = MoeadState::new(&inst, &quarters(), 2, &mut rng).unwrap();
        for _ in 0..200 {
            state.step(&inst, &mut rng);
        }
        // both subproblems converge to bases
        for s in state.subproblems() {
            for m in s.members() {
                assert!(inst.matroid().is_base(&m.solution).unwrap());
            }
        }
        let fits: Vec<_> = state.subproblems().iter().map(|s| s.fitness()).collect();
        // f_{1/4}: min over {(3,5),(4,4),(5,3)} of (3a+b)/4 → 14/4
        assert_eq!(fits[0], num::rational::Ratio::new(7, 2));
        assert_eq!(fits[1], num::rational::Ratio::new(7, 2));
    }

    #[test]
    fn tie_pool_keeps_distinct_images() {
        // every base of U(1,3) ties at λ = 1/2 with images (1,3),(2,2),(3,1)
        let u = Matroid::uniform(3, 1).unwrap();
        let inst = WeightedInstance::new(u, vec![vec![1, 2, 3], vec![3, 2, 1]]).unwrap();
        let half = [TradeOff::from_scalar(1, 2).unwrap()];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut state = MoeadState::new(&inst, &half, 1, &mut rng).unwrap();
        for _ in 0..2000 {
            state.step(&inst, &mut rng);
        }
        let mut imgs: Vec<_> = state.subproblems()[0]
            .members()
            .iter()
            .map(|m| m.fitness.clone())
            .collect();
        imgs.sort();
        assert_eq!(imgs, vec![p(&[1, 3]), p(&[2, 2]), p(&[3, 1])]);
        state.assert_invariants(&inst);
    }

    #[test]
    fn seeded_runs_are_identical() {
        let inst = triangle_instance();
        let targets = [p(&[3, 5]), p(&[5, 3])];
        let run = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            moead_run(&inst, &quarters(), 2, 10_000, &targets, &mut rng).unwrap()
        };
        assert_eq!(run(9), run(9));
    }

    #[test]
    fn convf_collects_segment_midpoint() {
        let inst = triangle_instance();
        let complete = crate::extreme::extreme_biobjective(&inst).unwrap().tradeoffs;
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let r = convf_enumeration_mode(&inst, &complete, complete.len(), 100_000, &mut rng).unwrap();
            assert!(r.success(), "seed {seed}");
            for t in [p(&[3, 5]), p(&[4, 4]), p(&[5, 3])] {
                assert!(r.archive_images.contains(&t));
            }
        }
    }

    #[test]
    fn convf_single_base() {
        let u = Matroid::uniform(2, 2).unwrap();
        let inst = WeightedInstance::new(u, vec![vec![1, 2], vec![2, 1]]).unwrap();
        let complete = crate::extreme::extreme_biobjective(&inst).unwrap().tradeoffs;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = convf_enumeration_mode(&inst, &complete, 1, 10_000, &mut rng).unwrap();
        assert_eq!(r.targets, vec![p(&[3, 3])]);
        assert!(r.success());
    }
}
