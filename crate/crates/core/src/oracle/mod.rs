//! Brute-force ground truth for small instances.
//!
//! Bases are enumerated exhaustively and every front point is classified by
//! a small exact linear program: with `λ ≥ 0, Σλ = 1`, maximise
//! `t ≤ λᵀ(z − y)` over all other front points `z`. The optimum is positive
//! iff `y` is a vertex of the lower hull and non-negative iff `y` is
//! supported. This path shares nothing with the facet enumeration used by
//! [`crate::extreme`].

mod lp;

use std::collections::{BTreeMap, VecDeque};

use num::rational::Ratio;
use num::{BigInt, BigRational, Signed, Zero};

use crate::error::{Error, Result};
use crate::extreme::ExtremeResult;
use crate::matroid::{Matroid, Solution};
use crate::scalarize::{ObjectivePoint, TradeOff, WeightedInstance};
use lp::{maximize, Constraint, LpOutcome, Relation};

/// Largest ground set the enumerator accepts.
pub const MAX_ORACLE_GROUND_SIZE: usize = 20;

/// All bases, in lexicographic order of their sorted element lists.
pub fn enumerate_bases(matroid: &Matroid) -> Result<Vec<Solution>> {
    let m = matroid.ground_size();
    if m > MAX_ORACLE_GROUND_SIZE {
        return Err(Error::OracleTooLarge {
            m,
            cap: MAX_ORACLE_GROUND_SIZE,
        });
    }
    let n = matroid.full_rank();
    let mut out = Vec::new();
    let mut current = Solution::empty(m);
    extend(matroid, n, 0, 0, &mut current, &mut out)?;
    Ok(out)
}

fn extend(
    matroid: &Matroid,
    n: usize,
    start: usize,
    size: usize,
    current: &mut Solution,
    out: &mut Vec<Solution>,
) -> Result<()> {
    if size == n {
        out.push(current.clone());
        return Ok(());
    }
    let m = matroid.ground_size();
    for e in start..m {
        if m - e < n - size {
            break;
        }
        current.set(e, true);
        // prune dependent partial sets
        if matroid.rank(current)? == size + 1 {
            extend(matroid, n, e + 1, size + 1, current, out)?;
        }
        current.set(e, false);
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct FrontOracle {
    pub all_bases: Vec<Solution>,
    /// Images aligned with `all_bases`.
    pub base_images: Vec<ObjectivePoint>,
    /// Non-dominated images, sorted.
    pub front: Vec<ObjectivePoint>,
    /// Front points on the lower boundary of the hull.
    pub supported_images: Vec<ObjectivePoint>,
    /// Vertices of the lower hull, i.e. extreme points.
    pub hull_vertices: Vec<ObjectivePoint>,
}

impl FrontOracle {
    /// All bases mapped to `image`.
    pub fn witnesses<'a>(&'a self, image: &'a ObjectivePoint) -> impl Iterator<Item = &'a Solution> + 'a {
        self.all_bases
            .iter()
            .zip(&self.base_images)
            .filter(move |(_, y)| *y == image)
            .map(|(x, _)| x)
    }

    /// Every base whose image is supported.
    pub fn supported_solutions(&self) -> Vec<Solution> {
        self.all_bases
            .iter()
            .zip(&self.base_images)
            .filter(|(_, y)| self.supported_images.binary_search(y).is_ok())
            .map(|(x, _)| x.clone())
            .collect()
    }

    /// Supported images that are not extreme points.
    pub fn non_vertex_supported(&self) -> Vec<ObjectivePoint> {
        self.supported_images
            .iter()
            .filter(|y| self.hull_vertices.binary_search(y).is_err())
            .cloned()
            .collect()
    }
}

/// Keeps the distinct images not dominated by another distinct image.
pub fn non_dominated(images: &[ObjectivePoint]) -> Vec<ObjectivePoint> {
    let mut distinct = images.to_vec();
    distinct.sort();
    distinct.dedup();
    distinct
        .iter()
        .filter(|y| !distinct.iter().any(|z| z != *y && z.weakly_dominates(y)))
        .cloned()
        .collect()
}

fn big(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Largest `t` with `λᵀ(z − y) ≥ t` for all `z` in `others`, over the simplex.
/// `None` when `others` is empty (unbounded).
fn separation_margin(y: &ObjectivePoint, others: &[&ObjectivePoint]) -> Option<BigRational> {
    let k = y.dim();
    // variables: λ_1..λ_k, t⁺, t⁻
    let mut objective = vec![BigRational::zero(); k + 2];
    objective[k] = big(1);
    objective[k + 1] = big(-1);
    let mut constraints: Vec<Constraint> = others
        .iter()
        .map(|z| {
            let mut coeffs: Vec<BigRational> =
                (0..k).map(|i| big(y.coords()[i] - z.coords()[i])).collect();
            coeffs.push(big(1));
            coeffs.push(big(-1));
            Constraint {
                coeffs,
                relation: Relation::Le,
                rhs: BigRational::zero(),
            }
        })
        .collect();
    let mut simplex = vec![big(1); k];
    simplex.extend([BigRational::zero(), BigRational::zero()]);
    constraints.push(Constraint {
        coeffs: simplex,
        relation: Relation::Eq,
        rhs: big(1),
    });
    match maximize(&objective, &constraints) {
        LpOutcome::Optimal(v) => Some(v),
        LpOutcome::Unbounded => None,
        LpOutcome::Infeasible => unreachable!("the simplex is always feasible"),
    }
}

/// Enumerates all bases and classifies the front exactly.
pub fn pareto_front(inst: &WeightedInstance) -> Result<FrontOracle> {
    let all_bases = enumerate_bases(inst.matroid())?;
    let base_images = all_bases
        .iter()
        .map(|x| inst.image(x))
        .collect::<Result<Vec<_>>>()?;
    let front = non_dominated(&base_images);
    let mut supported_images = Vec::new();
    let mut hull_vertices = Vec::new();
    for y in &front {
        let others: Vec<&ObjectivePoint> = front.iter().filter(|z| *z != y).collect();
        match separation_margin(y, &others) {
            None => {
                supported_images.push(y.clone());
                hull_vertices.push(y.clone());
            }
            Some(t) => {
                if !t.is_negative() {
                    supported_images.push(y.clone());
                }
                if t.is_positive() {
                    hull_vertices.push(y.clone());
                }
            }
        }
    }
    Ok(FrontOracle {
        all_bases,
        base_images,
        front,
        supported_images,
        hull_vertices,
    })
}

/// Minimum of `λᵀ w x` over `bases`.
pub fn min_scalarized_weight(
    inst: &WeightedInstance,
    bases: &[Solution],
    lambda: &TradeOff,
) -> Result<Ratio<i128>> {
    bases
        .iter()
        .map(|x| crate::scalarize::scalarized_weight(inst, lambda, x))
        .try_fold(None::<Ratio<i128>>, |best, w| {
            let w = w?;
            Ok::<_, Error>(Some(match best {
                Some(b) if b <= w => b,
                _ => w,
            }))
        })?
        .ok_or(Error::EmptyInput("no bases"))
}

/// Whether every `y` in `all_images` is `c`-approximated (`x ≤ c·y`) by some
/// `x` in `sufficient_images`.
pub fn verify_k_approximation(
    sufficient_images: &[ObjectivePoint],
    all_images: &[ObjectivePoint],
    c: u64,
) -> bool {
    all_images.iter().all(|y| {
        sufficient_images.iter().any(|x| {
            x.coords()
                .iter()
                .zip(y.coords())
                .all(|(&xi, &yi)| xi as i128 <= c as i128 * yi as i128)
        })
    })
}

/// Whether the graph joining solutions at Hamming distance ≤ 2 is connected.
pub fn verify_hamming2_connected(solutions: &[Solution]) -> Result<bool> {
    if solutions.is_empty() {
        return Err(Error::EmptyInput("no solutions to connect"));
    }
    let mut seen = vec![false; solutions.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for j in 0..solutions.len() {
            if !seen[j] && solutions[i].hamming(&solutions[j]) <= 2 {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok(seen.into_iter().all(|s| s))
}

/// Groups base indices by image.
pub fn images_with_witnesses(oracle: &FrontOracle) -> BTreeMap<ObjectivePoint, Vec<usize>> {
    let mut out: BTreeMap<ObjectivePoint, Vec<usize>> = BTreeMap::new();
    for (i, y) in oracle.base_images.iter().enumerate() {
        out.entry(y.clone()).or_default().push(i);
    }
    out
}

/// Brute-force verdicts on one instance.
#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub oracle: FrontOracle,
    pub extreme: ExtremeResult,
    /// Extreme images equal the oracle's hull vertices.
    pub extreme_matches: bool,
    /// The hull vertices `k`-approximate every base image.
    pub k_approximation: bool,
    /// All supported solutions are 2-Hamming connected.
    pub hamming2_connected: bool,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.extreme_matches && self.k_approximation && self.hamming2_connected
    }
}

/// Compares the exact enumeration with brute force.
pub fn cross_check(inst: &WeightedInstance) -> Result<CrossCheck> {
    let oracle = pareto_front(inst)?;
    let extreme = if inst.objectives() == 2 {
        crate::extreme::extreme_biobjective(inst)?
    } else {
        crate::extreme::extreme_k(inst)?
    };
    let extreme_matches = extreme.images == oracle.hull_vertices;
    let k_approximation =
        verify_k_approximation(&oracle.hull_vertices, &oracle.base_images, inst.objectives() as u64);
    let hamming2_connected = verify_hamming2_connected(&oracle.supported_solutions())?;
    Ok(CrossCheck {
        oracle,
        extreme,
        extreme_matches,
        k_approximation,
        hamming2_connected,
    })
}
