//! Exact enumeration of the extreme points of `Conv(F)` and of complete and
//! sufficient trade-off sets.
//!
//! Both enumerators call Greedy on scalarized weights and expand the current
//! hull along its facet normals until no new normal appears. Greedy keys are
//! lexicographic: the scaled scalarized weight first, then the raw objective
//! weights in the order given by a priority permutation, then the element
//! index. Exhaustive priorities make every returned image a hull vertex
//! rather than an interior point of a face.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;
use log::warn;
use num::rational::Ratio;
use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::error::{Error, Result};
pub use crate::hull::Facet;
use crate::hull::{dominance_hull_facets, dominance_hull_vertices};
use crate::matroid::{greedy_min_base, Solution};
use crate::scalarize::{ObjectivePoint, TradeOff, WeightedInstance};

/// Default largest number of objectives for facet enumeration.
pub const DEFAULT_MAX_OBJECTIVES: usize = 4;

#[derive(Debug, Clone)]
pub struct ExtremeResult {
    /// One witness base per extreme point, aligned with `images`.
    pub solutions: Vec<Solution>,
    /// Extreme points, pairwise distinct, sorted lexicographically.
    pub images: Vec<ObjectivePoint>,
    /// The complete trade-off set accumulated at termination.
    pub tradeoffs: Vec<TradeOff>,
    /// Facets of the final dominance hull.
    pub facets: Vec<Facet>,
    /// Main-loop iterations until no new trade-off appeared.
    pub rounds: usize,
}

/// Greedy keys for `λ` with objective priority `priority`.
fn priority_keys(inst: &WeightedInstance, lambda: &TradeOff, priority: &[usize]) -> Vec<Vec<i128>> {
    (0..inst.ground_size())
        .map(|e| {
            let column = inst.column(e);
            let mut key = Vec::with_capacity(priority.len() + 1);
            key.push(lambda.scaled_dot(&column));
            key.extend(priority.iter().map(|&p| column[p] as i128));
            key
        })
        .collect()
}

/// Collects distinct images with their first witness.
#[derive(Default)]
struct Collected {
    solutions: Vec<Solution>,
    images: Vec<ObjectivePoint>,
    seen: HashSet<ObjectivePoint>,
}

impl Collected {
    fn add(&mut self, inst: &WeightedInstance, x: Solution) -> Result<bool> {
        let image = inst.image(&x)?;
        if self.seen.insert(image.clone()) {
            self.solutions.push(x);
            self.images.push(image);
            Ok(true)
        } else {
            Ok(false)
        }
    }

    fn finish(self, tradeoffs: Vec<TradeOff>, rounds: usize) -> ExtremeResult {
        let points: Vec<Vec<i64>> = self.images.iter().map(|p| p.0.clone()).collect();
        let facets = dominance_hull_facets(&points);
        debug_assert_eq!(
            dominance_hull_vertices(&points, &facets).len(),
            points.len(),
            "collected image that is not a hull vertex"
        );
        let (images, solutions) = self
            .images
            .into_iter()
            .zip(self.solutions)
            .sorted_by(|a, b| a.0.cmp(&b.0))
            .unzip();
        ExtremeResult {
            solutions,
            images,
            tradeoffs,
            facets,
            rounds,
        }
    }
}

/// Extreme points and a complete trade-off set for two objectives.
///
/// Scalar trade-offs `t` stand for the weight `(1 − t)·w₁ + t·w₂`; the
/// returned [`TradeOff`]s are `(1 − t, t)`.
pub fn extreme_biobjective(inst: &WeightedInstance) -> Result<ExtremeResult> {
    if inst.objectives() != 2 {
        return Err(Error::UnsupportedDimension {
            k: inst.objectives(),
            min: 2,
            max: 2,
        });
    }
    let mut collected = Collected::default();
    let mut done: BTreeSet<TradeOff> = BTreeSet::new();
    let mut pending = vec![TradeOff::unit(2, 0), TradeOff::unit(2, 1)];
    let mut rounds = 0;
    while !pending.is_empty() {
        rounds += 1;
        let before = collected.images.len();
        for lambda in &pending {
            for priority in [[0, 1], [1, 0]] {
                let keys = priority_keys(inst, lambda, &priority);
                collected.add(inst, greedy_min_base(inst.matroid(), &keys)?)?;
            }
        }
        done.extend(pending.drain(..));

        let mut chain: Vec<&ObjectivePoint> = collected.images.iter().collect();
        chain.sort();
        for pair in chain.windows(2) {
            let (a, b) = (pair[0].coords(), pair[1].coords());
            let d1 = b[0] - a[0];
            let d2 = a[1] - b[1];
            debug_assert!(d1 > 0 && d2 > 0, "non-convex chain {a:?} {b:?}");
            let lambda = TradeOff::from_scalar(d1 as u64, (d1 + d2) as u64)?;
            if !done.contains(&lambda) && !pending.contains(&lambda) {
                pending.push(lambda);
            }
        }
        // a round that finds nothing new must be the last one
        debug_assert!(collected.images.len() > before || pending.is_empty());
    }
    debug_assert!(rounds <= collected.images.len() + 1);
    let mut tradeoffs: Vec<TradeOff> = done.into_iter().collect();
    tradeoffs.sort_by(|a, b| a.cmp_scalar(b));
    Ok(collected.finish(tradeoffs, rounds))
}

/// Extreme points and a complete trade-off set for `2 ≤ k ≤ 4` objectives.
pub fn extreme_k(inst: &WeightedInstance) -> Result<ExtremeResult> {
    extreme_k_with_limit(inst, DEFAULT_MAX_OBJECTIVES)
}

/// As [`extreme_k`] with a custom upper limit on `k`.
pub fn extreme_k_with_limit(inst: &WeightedInstance, max_k: usize) -> Result<ExtremeResult> {
    let k = inst.objectives();
    if k < 2 || k > max_k {
        return Err(Error::UnsupportedDimension { k, min: 2, max: max_k });
    }
    let priorities: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    let mut collected = Collected::default();
    let mut done: BTreeSet<TradeOff> = BTreeSet::new();
    let mut pending: Vec<TradeOff> = (0..k).map(|i| TradeOff::unit(k, i)).collect();
    let mut rounds = 0;
    while !pending.is_empty() {
        rounds += 1;
        for lambda in &pending {
            for priority in &priorities {
                let keys = priority_keys(inst, lambda, priority);
                collected.add(inst, greedy_min_base(inst.matroid(), &keys)?)?;
            }
        }
        done.extend(pending.drain(..));

        let points: Vec<Vec<i64>> = collected.images.iter().map(|p| p.0.clone()).collect();
        for facet in dominance_hull_facets(&points) {
            let lambda = facet_tradeoff(&facet)?;
            if !done.contains(&lambda) && !pending.contains(&lambda) {
                pending.push(lambda);
            }
        }
    }
    Ok(collected.finish(done.into_iter().collect(), rounds))
}

fn facet_tradeoff(facet: &Facet) -> Result<TradeOff> {
    let direction = facet
        .normal
        .iter()
        .map(|&c| u64::try_from(c).map_err(|_| Error::Overflow(format!("facet normal {c}"))))
        .collect::<Result<Vec<u64>>>()?;
    TradeOff::from_direction(&direction)
}

/// Midpoints of consecutive scalar trade-offs in `complete ∪ {0, 1}`.
///
/// Each midpoint lies strictly inside one cell of the trade-off line, so all
/// scalarized optima there share one image, which is an extreme point.
pub fn sufficient_tradeoffs_biobjective(complete: &[TradeOff]) -> Result<Vec<TradeOff>> {
    let mut scalars = complete
        .iter()
        .map(|t| {
            t.scalar().ok_or(Error::DimensionMismatch {
                expected: 2,
                got: t.dim(),
            })
        })
        .collect::<Result<Vec<Ratio<i128>>>>()?;
    scalars.sort();
    scalars.dedup();
    if scalars.len() < 2 {
        return Err(Error::EmptyInput("need at least two distinct trade-offs"));
    }
    scalars.push(Ratio::zero());
    scalars.push(Ratio::one());
    scalars.sort();
    scalars.dedup();
    let two = Ratio::from_integer(2);
    scalars
        .windows(2)
        .map(|w| TradeOff::from_scalar_ratio(&((w[0] + w[1]) / two)))
        .collect()
}

/// One interior trade-off per extreme point for `k ≥ 3`: the average of the
/// L1-normalised normals of all facets incident to the vertex.
pub fn sufficient_tradeoffs_k(result: &ExtremeResult) -> Result<Vec<TradeOff>> {
    let k = result
        .images
        .first()
        .map(|p| p.dim())
        .ok_or(Error::EmptyInput("extreme result has no images"))?;
    if result.images.len() == 1 {
        return Ok(vec![TradeOff::centroid(k)]);
    }
    let normalized: Vec<Vec<BigRational>> = result
        .facets
        .iter()
        .map(|f| facet_tradeoff(f).map(|t| t.to_big()))
        .collect::<Result<_>>()?;
    let mut out: Vec<TradeOff> = Vec::new();
    let mut degenerate = false;
    for image in &result.images {
        let incident: Vec<&Vec<BigRational>> = result
            .facets
            .iter()
            .zip(&normalized)
            .filter(|(f, _)| f.contains(image.coords()))
            .map(|(_, n)| n)
            .collect();
        if incident.is_empty() {
            degenerate = true;
            continue;
        }
        let count = BigRational::from_integer(BigInt::from(incident.len()));
        let avg: Vec<BigRational> = (0..k)
            .map(|i| incident.iter().map(|n| n[i].clone()).sum::<BigRational>() / &count)
            .collect();
        let t = TradeOff::from_big_direction(&avg)?;
        if !out.contains(&t) {
            out.push(t);
        }
    }
    if degenerate {
        warn!("degenerate hull: some images lie on no facet, falling back to facet normals");
        for f in &result.facets {
            let t = facet_tradeoff(f)?;
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// Smallest `h` with `h² ≥ v`.
fn ceil_sqrt(v: u64) -> u64 {
    let mut h = (v as f64).sqrt() as u64;
    while h * h < v {
        h += 1;
    }
    while h > 0 && (h - 1) * (h - 1) >= v {
        h -= 1;
    }
    h
}

/// Upper bound `hm − h(h+1)/2 + 1` on the number of bi-objective extreme
/// points, with `h = ⌈√(2·min{n, m−n} − 1)⌉`.
pub fn extreme_count_bound_2(m: u64, n: u64) -> Result<u64> {
    if n == 0 || n >= m {
        return Err(Error::TrivialInstance(format!(
            "bound requires 1 ≤ n < m, got m = {m}, n = {n}"
        )));
    }
    let h = ceil_sqrt(2 * n.min(m - n) - 1);
    Ok(h * m - h * (h + 1) / 2 + 1)
}

/// Upper bound `Σ_{i=1..k} C(m(m−1)/2, i−1)` on the number of extreme points.
pub fn extreme_count_bound_k(m: u64, k: u64) -> BigUint {
    let pairs = BigUint::from(m) * BigUint::from(m.saturating_sub(1)) / BigUint::from(2u32);
    let mut total = BigUint::zero();
    let mut binom = BigUint::one();
    for i in 0..k {
        // binom = C(pairs, i)
        total += &binom;
        binom = binom * (&pairs - BigUint::from(i).min(pairs.clone())) / BigUint::from(i + 1);
    }
    total
}
