#![allow(dead_code)]

use momwb::bench::{gen_instance, gen_uniform_instance};
use momwb::WeightedInstance;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random connected graph on at most six vertices with `m ≤ m_max`.
pub fn small_graphic<R: Rng>(rng: &mut R, k: usize, m_max: usize) -> WeightedInstance {
    let weight_max = *[3u64, 5, 10, 100].choose(rng).unwrap();
    loop {
        let v = rng.gen_range(2..=6usize);
        let max_e = (v * (v - 1) / 2).min(m_max);
        if max_e + 1 < v {
            continue;
        }
        let e = rng.gen_range(v - 1..=max_e);
        return gen_instance(v, e, k, weight_max, rng).unwrap();
    }
}

/// A random uniform matroid with `2 ≤ m ≤ m_max` and `1 ≤ K < m`.
pub fn small_uniform<R: Rng>(rng: &mut R, k: usize, m_max: usize) -> WeightedInstance {
    let weight_max = *[3u64, 5, 10, 100].choose(rng).unwrap();
    let m = rng.gen_range(2..=m_max);
    let capacity = rng.gen_range(1..m);
    gen_uniform_instance(m, capacity, k, weight_max, rng).unwrap()
}

/// A random graphic or uniform instance with `m ≤ m_max`.
pub fn small_instance<R: Rng>(rng: &mut R, k: usize, m_max: usize) -> WeightedInstance {
    if rng.gen_bool(0.5) {
        small_graphic(rng, k, m_max)
    } else {
        small_uniform(rng, k, m_max)
    }
}

/// Small instances whose front has a supported image that is not extreme.
pub fn collinear_instances<R: Rng>(rng: &mut R, count: usize, m_max: usize) -> Vec<WeightedInstance> {
    let mut out = Vec::new();
    while out.len() < count {
        let weight_max = rng.gen_range(2..=4u64);
        let inst = if rng.gen_bool(0.5) {
            let v = rng.gen_range(4..=6usize);
            let e = rng.gen_range(v..=(v * (v - 1) / 2).min(m_max));
            gen_instance(v, e, 2, weight_max, rng).unwrap()
        } else {
            let m = rng.gen_range(4..=m_max);
            gen_uniform_instance(m, rng.gen_range(2..m), 2, weight_max, rng).unwrap()
        };
        let front = momwb::oracle::pareto_front(&inst).unwrap();
        if !front.non_vertex_supported().is_empty() {
            out.push(inst);
        }
    }
    out
}

/// A random trade-off with numerators in `0..=50`, not all zero.
pub fn random_tradeoff<R: Rng>(rng: &mut R, k: usize) -> momwb::TradeOff {
    loop {
        let nums: Vec<u64> = (0..k).map(|_| rng.gen_range(0..=50)).collect();
        if nums.iter().any(|&n| n > 0) {
            return momwb::TradeOff::from_direction(&nums).unwrap();
        }
    }
}
