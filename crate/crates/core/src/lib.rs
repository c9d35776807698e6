//! Multi-objective minimum weight bases over weighted matroids.
//!
//! The crate covers the whole toolchain for the MOMWB problem:
//!
//! - [`matroid`]: graphic and uniform matroids, rank oracles and Greedy.
//! - [`scalarize`]: weight matrices, exact rational trade-offs, the penalised
//!   fitness functions and Pareto dominance.
//! - [`extreme`]: exact enumeration of the extreme points of the
//!   non-dominated front's convex hull together with complete and sufficient
//!   trade-off sets, plus the extreme-point count bounds.
//! - [`evo`]: MOEA/D with weight scalarization and the GSEMO baseline.
//! - [`oracle`]: brute-force ground truth for small instances.
//! - [`bench`]: instance generation, file formats, quality metrics and the
//!   experiment runner behind the `momwb` binary.
//!
//! All comparisons between scalarized weights are exact. Trade-offs are
//! stored as reduced rationals and fitness values are compared as integers
//! scaled by the trade-off denominator.

pub mod bench;
pub mod error;
pub mod evo;
pub mod extreme;
mod hull;
pub mod matroid;
pub mod oracle;
pub mod scalarize;

pub use error::{Error, Result};
pub use extreme::{extreme_biobjective, extreme_k, ExtremeResult, Facet};
pub use matroid::{greedy_min_base, Matroid, Solution};
pub use scalarize::{dominates, ObjectivePoint, TradeOff, WeightedInstance};
