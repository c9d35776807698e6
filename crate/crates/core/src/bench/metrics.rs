use std::collections::HashSet;

use num::rational::Ratio;

use crate::error::{Error, Result};
use crate::scalarize::ObjectivePoint;

pub const DEFAULT_BUDGET_MULTIPLIER: f64 = 3.0;

/// Evaluation budget `⌈3·|R|·m²·ln(m − n)⌉`.
pub fn budget(targets: u64, m: u64, n: u64) -> Result<u64> {
    budget_with_multiplier(DEFAULT_BUDGET_MULTIPLIER, targets, m, n)
}

/// Evaluation budget `⌈c·|R|·m²·max(ln(m − n), 1)⌉`.
///
/// The log factor is clamped at 1 so that instances with `m − n ≤ 2` still
/// get a usable budget; this never changes the result for `m − n ≥ 3`.
pub fn budget_with_multiplier(multiplier: f64, targets: u64, m: u64, n: u64) -> Result<u64> {
    if targets == 0 {
        return Err(Error::EmptyInput("no targets"));
    }
    if m <= n {
        return Err(Error::TrivialInstance(format!(
            "budget needs m > n, got m = {m}, n = {n}"
        )));
    }
    if !(multiplier.is_finite() && multiplier > 0.0) {
        return Err(Error::Infeasible(format!("budget multiplier {multiplier} is not positive")));
    }
    let log = ((m - n) as f64).ln().max(1.0);
    let scale = targets
        .checked_mul(m)
        .and_then(|v| v.checked_mul(m))
        .ok_or_else(|| Error::Overflow("budget".into()))?;
    let b = (multiplier * scale as f64 * log).ceil();
    if b >= u64::MAX as f64 {
        return Err(Error::Overflow("budget".into()));
    }
    Ok(b as u64)
}

/// IGD+ of `archive` against `targets`; `None` stands for +∞ (empty archive).
pub fn igd_plus(archive: &[ObjectivePoint], targets: &[ObjectivePoint]) -> Result<Option<f64>> {
    if targets.is_empty() {
        return Err(Error::EmptyInput("no targets"));
    }
    if archive.is_empty() {
        return Ok(None);
    }
    let mut total = 0.0;
    for y in targets {
        let mut best = i128::MAX;
        for x in archive {
            if x.dim() != y.dim() {
                return Err(Error::DimensionMismatch {
                    expected: y.dim(),
                    got: x.dim(),
                });
            }
            let d: i128 = x
                .coords()
                .iter()
                .zip(y.coords())
                .map(|(&a, &b)| {
                    let gap = (a as i128 - b as i128).max(0);
                    gap * gap
                })
                .sum();
            best = best.min(d);
        }
        total += (best as f64).sqrt();
    }
    Ok(Some(total / targets.len() as f64))
}

/// Fraction of distinct targets present in `archive`.
pub fn cover_rate(archive: &[ObjectivePoint], targets: &[ObjectivePoint]) -> Result<Ratio<usize>> {
    let distinct: HashSet<&ObjectivePoint> = targets.iter().collect();
    if distinct.is_empty() {
        return Err(Error::EmptyInput("no targets"));
    }
    let present: HashSet<&ObjectivePoint> = archive.iter().collect();
    let hit = distinct.iter().filter(|y| present.contains(*y)).count();
    Ok(Ratio::new(hit, distinct.len()))
}

/// Mean and sample standard deviation; the deviation of a single value is 0.
pub fn mean_sd(values: &[f64]) -> Option<(f64, f64)> {
    if values.is_empty() {
        return None;
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() == 1 {
        return Some((mean, 0.0));
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Some((mean, var.sqrt()))
}
