mod common;

use itertools::Itertools;
use momwb::extreme::{
    extreme_count_bound_2, extreme_count_bound_k, sufficient_tradeoffs_biobjective, sufficient_tradeoffs_k,
};
use momwb::oracle::{self, pareto_front};
use momwb::{extreme_biobjective, extreme_k, greedy_min_base, ObjectivePoint, TradeOff, WeightedInstance};
use num::rational::Ratio;
use num::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn instance(seed: u64, k: usize, m_max: usize) -> WeightedInstance {
    common::small_instance(&mut ChaCha8Rng::seed_from_u64(seed), k, m_max)
}

fn weight(lambda: &TradeOff, y: &ObjectivePoint) -> Ratio<i128> {
    Ratio::new(lambda.scaled_dot(y.coords()), lambda.denominator() as i128)
}

/// Images of every base minimising `λᵀwx`, by brute force.
fn minimiser_images(lambda: &TradeOff, front: &oracle::FrontOracle) -> Vec<ObjectivePoint> {
    let best = front
        .base_images
        .iter()
        .map(|y| weight(lambda, y))
        .min()
        .unwrap();
    front
        .base_images
        .iter()
        .filter(|y| weight(lambda, y) == best)
        .cloned()
        .sorted()
        .dedup()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn biobjective_matches_oracle(seed in any::<u64>()) {
        let inst = instance(seed, 2, 12);
        let front = pareto_front(&inst).unwrap();
        let r = extreme_biobjective(&inst).unwrap();
        prop_assert_eq!(&r.images, &front.hull_vertices);
        prop_assert!(r.rounds <= r.images.len().max(1));
        for (x, y) in r.solutions.iter().zip(&r.images) {
            prop_assert!(inst.matroid().is_base(x).unwrap());
            prop_assert_eq!(&inst.image(x).unwrap(), y);
        }
        let bound = extreme_count_bound_2(inst.ground_size() as u64, inst.rank() as u64);
        if let Ok(b) = bound {
            prop_assert!(r.images.len() as u64 <= b);
        }
    }

    #[test]
    fn facets_match_oracle(seed in any::<u64>(), k in 2usize..=3) {
        let inst = instance(seed, k, 8);
        let front = pareto_front(&inst).unwrap();
        let r = extreme_k(&inst).unwrap();
        prop_assert_eq!(&r.images, &front.hull_vertices);
        let bound = extreme_count_bound_k(inst.ground_size() as u64, k as u64);
        prop_assert!(BigUint::from(r.images.len()) <= bound);
    }

    /// Every scalarized optimum on a grid over the open simplex is supported,
    /// and some extreme point attains the same value.
    #[test]
    fn grid_optima_lie_on_the_hull(seed in any::<u64>()) {
        let inst = instance(seed, 2, 10);
        let front = pareto_front(&inst).unwrap();
        let r = extreme_biobjective(&inst).unwrap();
        let grid = 2 * inst.w_max() * inst.ground_size() as u64;
        for i in 1..grid {
            let lambda = TradeOff::from_scalar(i, grid).unwrap();
            let keys = inst.scaled_element_weights(&lambda).unwrap();
            let x = greedy_min_base(inst.matroid(), &keys).unwrap();
            let y = inst.image(&x).unwrap();
            prop_assert!(front.supported_images.binary_search(&y).is_ok(), "{} at {}", y, lambda);
            let best = r.images.iter().map(|z| weight(&lambda, z)).min().unwrap();
            prop_assert_eq!(best, weight(&lambda, &y));
        }
    }

    /// All minimisers at a sufficient trade-off share one image, an extreme point.
    #[test]
    fn sufficient_tradeoffs_are_sound(seed in any::<u64>(), k in 2usize..=3) {
        let inst = instance(seed, k, 8);
        let front = pareto_front(&inst).unwrap();
        let ts = if k == 2 {
            sufficient_tradeoffs_biobjective(&extreme_biobjective(&inst).unwrap().tradeoffs).unwrap()
        } else {
            sufficient_tradeoffs_k(&extreme_k(&inst).unwrap()).unwrap()
        };
        let mut covered = Vec::new();
        for t in &ts {
            let images = minimiser_images(t, &front);
            prop_assert_eq!(images.len(), 1, "ties at {}", t);
            prop_assert!(front.hull_vertices.contains(&images[0]));
            covered.push(images[0].clone());
        }
        covered.sort();
        covered.dedup();
        prop_assert_eq!(covered, front.hull_vertices.clone());
    }

    #[test]
    fn theorem_properties_hold(seed in any::<u64>(), k in 2usize..=3) {
        let inst = instance(seed, k, if k == 2 { 12 } else { 8 });
        let check = oracle::cross_check(&inst).unwrap();
        prop_assert!(check.k_approximation);
        prop_assert!(check.hamming2_connected);
        prop_assert!(check.extreme_matches);
    }
}

#[test]
fn complete_tradeoffs_reach_every_supported_image() {
    // at the complete set, some tie-break order reaches every supported image
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for inst in common::collinear_instances(&mut rng, 10, 10) {
        let front = pareto_front(&inst).unwrap();
        let r = extreme_biobjective(&inst).unwrap();
        for y in &front.supported_images {
            assert!(
                r.tradeoffs
                    .iter()
                    .any(|t| minimiser_images(t, &front).contains(y)),
                "{y} is optimal for no trade-off"
            );
        }
    }
}

#[test]
fn k4_supported_bases_are_connected() {
    // K4 has 16 spanning trees
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let inst = momwb::bench::gen_instance(4, 6, 2, 100, &mut rng).unwrap();
        let front = pareto_front(&inst).unwrap();
        assert_eq!(front.all_bases.len(), 16);
        assert!(oracle::verify_hamming2_connected(&front.supported_solutions()).unwrap());
    }
}
