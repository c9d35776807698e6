mod common;

use momwb::bench::{gen_instance, prepare, TargetSource};
use momwb::evo::{convf_enumeration_mode, gsemo_run, moead_run, MoeadState, Termination};
use momwb::extreme_biobjective;
use momwb::oracle::pareto_front;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn moead_hits_all_extreme_points_of_a_small_graph() {
    // at multiplier 3 a few percent of runs miss a point, so give it room
    let inst = gen_instance(8, 16, 2, 100, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
    let setup = prepare(&inst, TargetSource::Auto, 300.0).unwrap();
    for seed in 0..5 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = setup.tradeoffs.len();
        let r = moead_run(&inst, &setup.tradeoffs, n, setup.budget, &setup.targets, &mut rng).unwrap();
        assert_eq!(r.termination, Termination::AllTargetsHit, "seed {seed}");
        assert!(r.evaluations_used <= r.budget);
        for x in &r.archive_solutions {
            assert!(inst.matroid().is_base(x).unwrap());
        }
    }
}

#[test]
fn small_neighborhoods_keep_invariants() {
    let inst = gen_instance(9, 20, 2, 50, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
    let setup = prepare(&inst, TargetSource::Auto, 3.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut state = MoeadState::new(&inst, &setup.tradeoffs, 2, &mut rng).unwrap();
    let mut last: Vec<_> = state.subproblems().iter().map(|s| s.fitness()).collect();
    for _ in 0..500 {
        state.step(&inst, &mut rng);
        state.assert_invariants(&inst);
        let now: Vec<_> = state.subproblems().iter().map(|s| s.fitness()).collect();
        assert!(now.iter().zip(&last).all(|(a, b)| a <= b));
        last = now;
    }
    assert_eq!(state.evaluations(), 500 * setup.tradeoffs.len() as u64);
}

#[test]
fn three_objective_moead() {
    let inst = gen_instance(6, 10, 3, 20, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
    let setup = prepare(&inst, TargetSource::Auto, 3.0).unwrap();
    assert_eq!(setup.targets, pareto_front(&inst).unwrap().hull_vertices);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let n = setup.tradeoffs.len();
    let r = moead_run(&inst, &setup.tradeoffs, n, 1_000_000, &setup.targets, &mut rng).unwrap();
    assert!(r.success());
}

#[test]
fn seeded_runs_repeat() {
    let inst = gen_instance(8, 14, 2, 100, &mut ChaCha8Rng::seed_from_u64(8)).unwrap();
    let setup = prepare(&inst, TargetSource::Auto, 3.0).unwrap();
    let n = setup.tradeoffs.len();
    let moead = |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        moead_run(&inst, &setup.tradeoffs, n, setup.budget, &setup.targets, &mut rng).unwrap()
    };
    let gsemo = |s| {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        gsemo_run(&inst, setup.budget, &setup.targets, &mut rng).unwrap()
    };
    assert_eq!(moead(11), moead(11));
    assert_eq!(gsemo(11), gsemo(11));
    assert_ne!(moead(11), moead(12));
}

#[test]
fn convf_collects_supported_images() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for inst in common::collinear_instances(&mut rng, 3, 9) {
        let complete = extreme_biobjective(&inst).unwrap().tradeoffs;
        let supported = pareto_front(&inst).unwrap().supported_images;
        for seed in 0..2 {
            let mut run_rng = ChaCha8Rng::seed_from_u64(seed);
            let r = convf_enumeration_mode(&inst, &complete, complete.len(), 1_000_000, &mut run_rng).unwrap();
            assert_eq!(r.targets, supported);
            assert!(r.success(), "seed {seed}");
        }
    }
}
