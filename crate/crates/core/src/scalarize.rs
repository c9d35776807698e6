//! Weighted instances, exact trade-offs and the penalised fitness functions.
//!
//! A trade-off `λ` is a non-negative rational vector summing to one. It is
//! stored reduced, so its denominator is the least `d` with `d·λ` integral.
//! Scalarized weights `λᵀw x` are returned as exact rationals; internally
//! they are compared as integers scaled by `d`.

use std::cmp::Ordering;
use std::fmt;

use num::integer::Integer;
use num::rational::Ratio;
use num::{BigInt, BigRational, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, Solution};

/// Hard limits that keep every fitness computation inside `i128`.
pub const MAX_GROUND_SIZE: usize = 10_000;
pub const MAX_WEIGHT: u64 = 1_000_000;
pub const MAX_OBJECTIVES: usize = 8;

/// A point in objective space: an image `wx` or a penalised value `g(x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectivePoint(pub Vec<i64>);

impl ObjectivePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        ObjectivePoint(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Weak dominance; panics on dimension mismatch.
    #[inline]
    pub fn weakly_dominates(&self, other: &ObjectivePoint) -> bool {
        assert_eq!(self.0.len(), other.0.len(), "objective dimension mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for ObjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ObjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for ObjectivePoint {
    fn from(v: Vec<i64>) -> Self {
        ObjectivePoint(v)
    }
}

/// `u` dominates `v` iff `v − u` is coordinatewise non-negative.
pub fn dominates(u: &ObjectivePoint, v: &ObjectivePoint) -> Result<bool> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            got: v.dim(),
        });
    }
    Ok(u.weakly_dominates(v))
}

/// An L1-normalised, non-negative rational trade-off vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TradeOff {
    numerators: Vec<u64>,
    denominator: u64,
}

impl TradeOff {
    /// Normalises an arbitrary non-negative, non-zero direction to sum one.
    pub fn from_direction(direction: &[u64]) -> Result<Self> {
        let total = direction
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .ok_or_else(|| Error::Overflow("trade-off direction sum".into()))?;
        if direction.is_empty() || total == 0 {
            return Err(Error::InvalidTradeOff("direction must be non-zero".into()));
        }
        let g = direction.iter().fold(total, |acc, &v| acc.gcd(&v));
        Ok(TradeOff {
            numerators: direction.iter().map(|v| v / g).collect(),
            denominator: total / g,
        })
    }

    /// Checked constructor from explicit numerators over a common denominator.
    pub fn new(numerators: Vec<u64>, denominator: u64) -> Result<Self> {
        let sum: u128 = numerators.iter().map(|&v| v as u128).sum();
        if denominator == 0 || sum != denominator as u128 {
            return Err(Error::InvalidTradeOff(format!(
                "numerators {numerators:?} do not sum to denominator {denominator}"
            )));
        }
        Self::from_direction(&numerators)
    }

    /// Converts a direction with arbitrary-precision entries, failing if the
    /// reduced representation does not fit in `u64`.
    pub fn from_big_direction(direction: &[BigRational]) -> Result<Self> {
        if direction.iter().any(|v| v < &BigRational::zero()) {
            return Err(Error::InvalidTradeOff("negative coordinate".into()));
        }
        let total: BigRational = direction.iter().cloned().sum();
        if total.is_zero() {
            return Err(Error::InvalidTradeOff("direction must be non-zero".into()));
        }
        let normalized: Vec<BigRational> = direction.iter().map(|v| v / &total).collect();
        let lcm = normalized
            .iter()
            .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
        let nums = normalized
            .iter()
            .map(|v| (v.numer() * (&lcm / v.denom())).to_u64())
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| Error::Overflow("trade-off numerators exceed u64".into()))?;
        let den = lcm
            .to_u64()
            .ok_or_else(|| Error::Overflow("trade-off denominator exceeds u64".into()))?;
        Self::new(nums, den)
    }

    /// The unit trade-off `e_i` in `k` dimensions.
    pub fn unit(k: usize, i: usize) -> Self {
        assert!(i < k);
        let mut numerators = vec![0; k];
        numerators[i] = 1;
        TradeOff {
            numerators,
            denominator: 1,
        }
    }

    /// The centroid `(1/k, …, 1/k)`.
    pub fn centroid(k: usize) -> Self {
        assert!(k > 0);
        TradeOff {
            numerators: vec![1; k],
            denominator: k as u64,
        }
    }

    /// Bi-objective trade-off from a scalar `t = num/den ∈ [0, 1]`, meaning the
    /// weight `(1 − t)·w₁ + t·w₂`.
    pub fn from_scalar(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidTradeOff(format!("{num}/{den} is not in [0, 1]")));
        }
        Self::from_direction(&[den - num, num])
    }

    pub fn from_scalar_ratio(t: &Ratio<i128>) -> Result<Self> {
        let (num, den) = (
            u64::try_from(*t.numer()).map_err(|_| Error::InvalidTradeOff(format!("{t} < 0")))?,
            u64::try_from(*t.denom()).map_err(|_| Error::Overflow("scalar trade-off".into()))?,
        );
        Self::from_scalar(num, den)
    }

    /// For `k = 2`, the scalar `t` with `λ = (1 − t, t)`.
    pub fn scalar(&self) -> Option<Ratio<i128>> {
        (self.numerators.len() == 2).then(|| {
            Ratio::new(self.numerators[1] as i128, self.denominator as i128)
        })
    }

    pub fn dim(&self) -> usize {
        self.numerators.len()
    }

    pub fn numerators(&self) -> &[u64] {
        &self.numerators
    }

    /// `d_λ`, the least positive integer `a` with `a·λ` integral.
    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn component(&self, i: usize) -> Ratio<i128> {
        Ratio::new(self.numerators[i] as i128, self.denominator as i128)
    }

    pub fn to_big(&self) -> Vec<BigRational> {
        let d = BigInt::from(self.denominator);
        self.numerators
            .iter()
            .map(|&n| BigRational::new(BigInt::from(n), d.clone()))
            .collect()
    }

    /// `d_λ · λᵀ v`, exact.
    #[inline]
    pub fn scaled_dot(&self, v: &[i64]) -> i128 {
        debug_assert_eq!(v.len(), self.numerators.len());
        self.numerators
            .iter()
            .zip(v)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    /// Compares two bi-objective trade-offs by their scalar.
    pub fn cmp_scalar(&self, other: &TradeOff) -> Ordering {
        let lhs = self.numerators[1] as u128 * other.denominator as u128;
        let rhs = other.numerators[1] as u128 * self.denominator as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Debug for TradeOff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TradeOff({self})")
    }
}

impl fmt::Display for TradeOff {
    /// `n₁ … n_k / d`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.numerators {
            write!(f, "{n} ")?;
        }
        write!(f, "/ {}", self.denominator)
    }
}

/// A matroid with a `k × m` matrix of positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedInstance {
    matroid: Matroid,
    weights: Vec<Vec<u64>>,
    w_max: u64,
}

impl WeightedInstance {
    /// `weights[i][e]` is the weight of element `e` in objective `i`.
    pub fn new(matroid: Matroid, weights: Vec<Vec<u64>>) -> Result<Self> {
        let m = matroid.ground_size();
        let k = weights.len();
        if k == 0 || k > MAX_OBJECTIVES {
            return Err(Error::UnsupportedDimension {
                k,
                min: 1,
                max: MAX_OBJECTIVES,
            });
        }
        if m > MAX_GROUND_SIZE {
            return Err(Error::InvalidInstance(format!(
                "ground set of {m} elements exceeds {MAX_GROUND_SIZE}"
            )));
        }
        for (i, row) in weights.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvalidInstance(format!(
                    "weight row {i} has {} entries, expected {m}",
                    row.len()
                )));
            }
            if let Some(e) = row.iter().position(|&w| w == 0 || w > MAX_WEIGHT) {
                return Err(Error::InvalidInstance(format!(
                    "weight w[{i}][{e}] = {} outside 1..={MAX_WEIGHT}",
                    row[e]
                )));
            }
        }
        let w_max = weights.iter().flatten().copied().max().unwrap_or(1);
        Ok(WeightedInstance {
            matroid,
            weights,
            w_max,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn weights(&self) -> &[Vec<u64>] {
        &self.weights
    }

    /// `m`
    pub fn ground_size(&self) -> usize {
        self.matroid.ground_size()
    }

    /// `n`
    pub fn rank(&self) -> usize {
        self.matroid.full_rank()
    }

    /// `k`
    pub fn objectives(&self) -> usize {
        self.weights.len()
    }

    pub fn w_max(&self) -> u64 {
        self.w_max
    }

    /// Weight column of element `e` across all objectives.
    pub fn column(&self, e: usize) -> Vec<i64> {
        self.weights.iter().map(|row| row[e] as i64).collect()
    }

    fn check_solution(&self, x: &Solution) -> Result<()> {
        if x.len() != self.ground_size() {
            return Err(Error::LengthMismatch {
                expected: self.ground_size(),
                got: x.len(),
            });
        }
        Ok(())
    }

    fn check_tradeoff(&self, lambda: &TradeOff) -> Result<()> {
        if lambda.dim() != self.objectives() {
            return Err(Error::DimensionMismatch {
                expected: self.objectives(),
                got: lambda.dim(),
            });
        }
        Ok(())
    }

    /// The image `wx`.
    pub fn image(&self, x: &Solution) -> Result<ObjectivePoint> {
        self.check_solution(x)?;
        Ok(ObjectivePoint(self.image_unchecked(x)))
    }

    pub(crate) fn image_unchecked(&self, x: &Solution) -> Vec<i64> {
        let mut out = vec![0i64; self.objectives()];
        for e in x.ones() {
            for (acc, row) in out.iter_mut().zip(&self.weights) {
                *acc += row[e] as i64;
            }
        }
        out
    }

    /// The rank penalty `m·(n − r(x))·w_max`.
    pub(crate) fn penalty_unchecked(&self, x: &Solution) -> i64 {
        let deficit = self.rank() - self.matroid.rank_unchecked(x);
        (self.ground_size() as i64) * (deficit as i64) * (self.w_max as i64)
    }

    /// Scalar keys `d_λ·w^(λ)_e` for every element.
    pub fn scaled_element_weights(&self, lambda: &TradeOff) -> Result<Vec<i128>> {
        self.check_tradeoff(lambda)?;
        Ok((0..self.ground_size())
            .map(|e| lambda.scaled_dot(&self.column(e)))
            .collect())
    }

    pub(crate) fn evaluate(&self, x: &Solution) -> Evaluation {
        Evaluation {
            image: self.image_unchecked(x),
            penalty: self.penalty_unchecked(x),
        }
    }
}

/// Image and penalty of one solution; both fitness functions derive from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Evaluation {
    pub image: Vec<i64>,
    pub penalty: i64,
}

impl Evaluation {
    /// `d_λ · f_λ(x)`
    #[inline]
    pub fn scaled_fitness(&self, lambda: &TradeOff) -> i128 {
        lambda.denominator() as i128 * self.penalty as i128 + lambda.scaled_dot(&self.image)
    }

    /// `g(x)`
    pub fn fitness_vector(&self) -> ObjectivePoint {
        ObjectivePoint(self.image.iter().map(|c| c + self.penalty).collect())
    }
}

/// `λᵀ w x` as an exact rational.
pub fn scalarized_weight(inst: &WeightedInstance, lambda: &TradeOff, x: &Solution) -> Result<Ratio<i128>> {
    inst.check_tradeoff(lambda)?;
    inst.check_solution(x)?;
    let image = inst.image_unchecked(x);
    Ok(Ratio::new(
        lambda.scaled_dot(&image),
        lambda.denominator() as i128,
    ))
}

/// `f_λ(x) = m·(n − r(x))·w_max + λᵀ w x`.
pub fn fitness_scalar(inst: &WeightedInstance, lambda: &TradeOff, x: &Solution) -> Result<Ratio<i128>> {
    inst.check_tradeoff(lambda)?;
    inst.check_solution(x)?;
    Ok(Ratio::new(
        inst.evaluate(x).scaled_fitness(lambda),
        lambda.denominator() as i128,
    ))
}

/// `g(x) = m·(n − r(x))·w_max·𝟙 + wx`.
pub fn fitness_vector(inst: &WeightedInstance, x: &Solution) -> Result<ObjectivePoint> {
    inst.check_solution(x)?;
    Ok(inst.evaluate(x).fitness_vector())
}
