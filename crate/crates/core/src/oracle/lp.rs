//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Sized for the oracle's tiny programs (a handful of variables, a few dozen
//! rows); nothing here is tuned for speed.

use num::{BigRational, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub(crate) struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal(BigRational),
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        self.basis[r] = c;
    }

    fn objective(&self, cost: &[BigRational]) -> BigRational {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, &b)| &cost[b] * self.rhs(i))
            .sum()
    }

    /// Maximises `cost · x` from the current basis. Returns false if unbounded.
    fn optimise(&mut self, cost: &[BigRational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.cols).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && {
                    let reduced: BigRational = &cost[j]
                        - self
                            .basis
                            .iter()
                            .enumerate()
                            .map(|(i, &b)| &cost[b] * &self.rows[i][j])
                            .sum::<BigRational>();
                    reduced.is_positive()
                }
            });
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<(usize, BigRational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][c].is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / &self.rows[i][c];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Maximises `objective · x` subject to `constraints` and `x ≥ 0`.
pub(crate) fn maximize(objective: &[BigRational], constraints: &[Constraint]) -> LpOutcome {
    let n = objective.len();
    let zero = BigRational::zero();
    let one = BigRational::from_integer(1.into());

    let mut rows_in: Vec<(Vec<BigRational>, Relation, BigRational)> = constraints
        .iter()
        .map(|c| {
            assert_eq!(c.coeffs.len(), n, "constraint width");
            if c.rhs.is_negative() {
                let flipped = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (c.coeffs.iter().map(|v| -v).collect(), flipped, -&c.rhs)
            } else {
                (c.coeffs.clone(), c.relation, c.rhs.clone())
            }
        })
        .collect();

    let slack_count = rows_in.iter().filter(|r| r.1 != Relation::Eq).count();
    let art_count = rows_in.iter().filter(|r| r.1 != Relation::Le).count();
    let cols = n + slack_count + art_count;
    let mut rows = Vec::with_capacity(rows_in.len());
    let mut basis = Vec::with_capacity(rows_in.len());
    let mut artificial = vec![false; cols];
    let (mut next_slack, mut next_art) = (n, n + slack_count);
    for (coeffs, rel, rhs) in rows_in.drain(..) {
        let mut row = coeffs;
        row.resize(cols + 1, zero.clone());
        row[cols] = rhs;
        match rel {
            Relation::Le => {
                row[next_slack] = one.clone();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -one.clone();
                next_slack += 1;
                row[next_art] = one.clone();
                artificial[next_art] = true;
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = one.clone();
                artificial[next_art] = true;
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, cols };

    if art_count > 0 {
        let phase1: Vec<BigRational> = (0..cols)
            .map(|j| if artificial[j] { -one.clone() } else { zero.clone() })
            .collect();
        let all = vec![true; cols];
        t.optimise(&phase1, &all);
        if t.objective(&phase1).is_negative() {
            return LpOutcome::Infeasible;
        }
        for r in 0..t.rows.len() {
            if artificial[t.basis[r]] {
                if let Some(c) = (0..cols).find(|&j| !artificial[j] && !t.rows[r][j].is_zero()) {
                    t.pivot(r, c);
                }
            }
        }
    }

    let mut cost = objective.to_vec();
    cost.resize(cols, zero);
    let allowed: Vec<bool> = artificial.iter().map(|a| !a).collect();
    if t.optimise(&cost, &allowed) {
        LpOutcome::Optimal(t.objective(&cost))
    } else {
        LpOutcome::Unbounded
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn c(coeffs: &[i64], relation: Relation, rhs: i64) -> Constraint {
        Constraint {
            coeffs: coeffs.iter().map(|&v| q(v)).collect(),
            relation,
            rhs: q(rhs),
        }
    }

    #[test]
    fn textbook_max() {
        // max 3x + 5y, x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18 → 36
        let out = maximize(
            &[q(3), q(5)],
            &[
                c(&[1, 0], Relation::Le, 4),
                c(&[0, 2], Relation::Le, 12),
                c(&[3, 2], Relation::Le, 18),
            ],
        );
        assert_eq!(out, LpOutcome::Optimal(q(36)));
    }

    #[test]
    fn equality_and_ge() {
        // max x - y, x + y = 4, y ≥ 1 → 2
        let out = maximize(
            &[q(1), q(-1)],
            &[c(&[1, 1], Relation::Eq, 4), c(&[0, 1], Relation::Ge, 1)],
        );
        assert_eq!(out, LpOutcome::Optimal(q(2)));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let out = maximize(&[q(1)], &[c(&[1], Relation::Le, 1), c(&[1], Relation::Ge, 2)]);
        assert_eq!(out, LpOutcome::Infeasible);
        let out = maximize(&[q(1), q(0)], &[c(&[0, 1], Relation::Le, 1)]);
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn negative_rhs() {
        // max -x, -x ≤ -3 → -3
        let out = maximize(&[q(-1)], &[c(&[-1], Relation::Le, -3)]);
        assert_eq!(out, LpOutcome::Optimal(q(-3)));
    }
}
