use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::scalarize::{WeightedInstance, MAX_WEIGHT};

/// Consecutive disconnected draws before [`gen_instance`] gives up.
pub const MAX_GRAPH_DRAWS: usize = 1000;

/// The `i`-th unordered pair `(u, v)`, `u < v`, in lexicographic order.
fn pair(mut i: usize, vertex_count: usize) -> (usize, usize) {
    for u in 0..vertex_count {
        let row = vertex_count - u - 1;
        if i < row {
            return (u, u + 1 + i);
        }
        i -= row;
    }
    unreachable!("pair index out of range")
}

fn random_weights<R: Rng + ?Sized>(m: usize, k: usize, weight_max: u64, rng: &mut R) -> Vec<Vec<u64>> {
    (0..k)
        .map(|_| (0..m).map(|_| rng.gen_range(1..=weight_max)).collect())
        .collect()
}

fn check_weights(k: usize, weight_max: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::Infeasible("need at least one objective".into()));
    }
    if weight_max == 0 || weight_max > MAX_WEIGHT {
        return Err(Error::Infeasible(format!("weight_max must lie in 1..={MAX_WEIGHT}")));
    }
    Ok(())
}

/// A connected simple graph with `edge_count` edges drawn uniformly among
/// vertex pairs and weights drawn from `U{1, …, weight_max}`.
pub fn gen_instance<R: Rng + ?Sized>(
    vertex_count: usize,
    edge_count: usize,
    k: usize,
    weight_max: u64,
    rng: &mut R,
) -> Result<WeightedInstance> {
    check_weights(k, weight_max)?;
    let pairs = vertex_count * vertex_count.saturating_sub(1) / 2;
    if vertex_count == 0 || edge_count > pairs || edge_count + 1 < vertex_count {
        return Err(Error::Infeasible(format!(
            "{edge_count} edges cannot form a connected simple graph on {vertex_count} vertices"
        )));
    }
    for _ in 0..MAX_GRAPH_DRAWS {
        let mut chosen = index::sample(rng, pairs, edge_count).into_vec();
        chosen.sort_unstable();
        let edges = chosen.into_iter().map(|i| pair(i, vertex_count)).collect();
        let matroid = Matroid::graphic(vertex_count, edges)?;
        if matroid.full_rank() + 1 == vertex_count {
            let weights = random_weights(edge_count, k, weight_max, rng);
            return WeightedInstance::new(matroid, weights);
        }
    }
    Err(Error::Infeasible(format!(
        "no connected graph in {MAX_GRAPH_DRAWS} draws of {edge_count} edges on {vertex_count} vertices"
    )))
}

/// A uniform matroid `U(capacity, m)` with random weights.
pub fn gen_uniform_instance<R: Rng + ?Sized>(
    m: usize,
    capacity: usize,
    k: usize,
    weight_max: u64,
    rng: &mut R,
) -> Result<WeightedInstance> {
    check_weights(k, weight_max)?;
    let matroid = Matroid::uniform(m, capacity)?;
    WeightedInstance::new(matroid, random_weights(m, k, weight_max, rng))
}

/// `(vertex_count, edge_count)` of the four scaled-down instances.
pub const DESK_SHAPES: [(usize, usize); 4] = [(11, 30), (13, 38), (14, 44), (16, 50)];

/// `(vertex_count, edge_count)` of the twelve full-size instances, two per shape.
pub const TABLE_SHAPES: [(usize, usize); 12] = [
    (26, 150),
    (26, 150),
    (51, 150),
    (51, 150),
    (101, 150),
    (101, 150),
    (26, 300),
    (26, 300),
    (51, 300),
    (51, 300),
    (101, 300),
    (101, 300),
];

/// Named bi-objective graphic instances, one per shape, drawn from a single
/// seeded stream with weights from `U{1, …, 100}`.
pub fn gen_suite(shapes: &[(usize, usize)], seed: u64) -> Result<Vec<(String, WeightedInstance)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    shapes
        .iter()
        .enumerate()
        .map(|(i, &(v, e))| Ok((format!("g{}-{v}v{e}e", i + 1), gen_instance(v, e, 2, 100, &mut rng)?)))
        .collect()
}
