//! Instance generation, file formats, quality metrics and the experiment
//! protocol: targets from exact extreme-point enumeration, sufficient
//! trade-offs for MOEA/D, a budget proportional to `|R|·m²·ln(m − n)` and
//! repeated seeded runs summarised per instance and algorithm.

mod format;
mod gen;
mod metrics;

pub use format::{
    parse_extreme_report, parse_instance, read_instance, serialize_extreme_report,
    serialize_instance, write_instance, ExtremeReport, FORMAT_VERSION,
};
pub use gen::{gen_instance, gen_suite, gen_uniform_instance, DESK_SHAPES, MAX_GRAPH_DRAWS, TABLE_SHAPES};
pub use metrics::{budget, budget_with_multiplier, cover_rate, igd_plus, mean_sd, DEFAULT_BUDGET_MULTIPLIER};

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use log::info;
use num::rational::Ratio;
use num::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::evo::{gsemo_run, moead_run, RunResult};
use crate::extreme::{
    extreme_biobjective, extreme_k, sufficient_tradeoffs_biobjective, sufficient_tradeoffs_k, ExtremeResult,
};
use crate::scalarize::{ObjectivePoint, TradeOff, WeightedInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Moead,
    Gsemo,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Moead => "MOEA/D",
            Algorithm::Gsemo => "GSEMO",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "moead" | "moea/d" => Ok(Algorithm::Moead),
            "gsemo" => Ok(Algorithm::Gsemo),
            _ => Err(Error::Infeasible(format!("unknown algorithm `{s}`"))),
        }
    }
}

/// MOEA/D neighborhood size: every trade-off, or the `N` nearest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Neighborhood {
    #[default]
    All,
    Size(usize),
}

impl Neighborhood {
    /// Concrete size for `count` trade-offs; sizes above `count` are clamped.
    pub fn resolve(self, count: usize) -> usize {
        match self {
            Neighborhood::All => count,
            Neighborhood::Size(n) => n.min(count),
        }
    }
}

impl FromStr for Neighborhood {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(Neighborhood::All);
        }
        match s.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Neighborhood::Size(n)),
            _ => Err(Error::Infeasible(format!(
                "neighborhood must be `all` or a positive integer, got `{s}`"
            ))),
        }
    }
}

/// Which exact enumeration supplies the targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TargetSource {
    /// The bi-objective dichotomic scheme for `k = 2`, facet enumeration otherwise.
    #[default]
    Auto,
    Biobjective,
    Facets,
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub algorithms: Vec<Algorithm>,
    pub reps: usize,
    pub seed_base: u64,
    pub neighborhood: Neighborhood,
    pub budget_multiplier: f64,
    pub target_source: TargetSource,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            algorithms: vec![Algorithm::Gsemo, Algorithm::Moead],
            reps: 10,
            seed_base: 0,
            neighborhood: Neighborhood::All,
            budget_multiplier: DEFAULT_BUDGET_MULTIPLIER,
            target_source: TargetSource::Auto,
        }
    }
}

impl ExperimentConfig {
    /// Seed of trial `i`.
    pub fn seed(&self, trial: usize) -> u64 {
        self.seed_base.wrapping_add(trial as u64)
    }
}

/// Everything a run needs besides the seed.
#[derive(Debug, Clone)]
pub struct Setup {
    pub extreme: ExtremeResult,
    pub targets: Vec<ObjectivePoint>,
    pub tradeoffs: Vec<TradeOff>,
    pub budget: u64,
}

/// Targets, sufficient trade-offs and budget for `inst`.
pub fn prepare(inst: &WeightedInstance, source: TargetSource, budget_multiplier: f64) -> Result<Setup> {
    let biobjective = match source {
        TargetSource::Auto => inst.objectives() == 2,
        TargetSource::Biobjective => true,
        TargetSource::Facets => false,
    };
    let (extreme, tradeoffs) = if biobjective {
        let r = extreme_biobjective(inst)?;
        let t = sufficient_tradeoffs_biobjective(&r.tradeoffs)?;
        (r, t)
    } else {
        let r = extreme_k(inst)?;
        let t = sufficient_tradeoffs_k(&r)?;
        (r, t)
    };
    let budget = budget_with_multiplier(
        budget_multiplier,
        extreme.images.len() as u64,
        inst.ground_size() as u64,
        inst.rank() as u64,
    )?;
    Ok(Setup {
        targets: extreme.images.clone(),
        extreme,
        tradeoffs,
        budget,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trial {
    pub algorithm: Algorithm,
    pub trial: usize,
    pub seed: u64,
    pub result: RunResult,
    pub cover: Ratio<usize>,
    /// `None` for an empty output set.
    pub igd_plus: Option<f64>,
}

/// One seeded run of `algorithm` against the targets of `setup`.
pub fn run_trial(
    inst: &WeightedInstance,
    setup: &Setup,
    algorithm: Algorithm,
    neighborhood: Neighborhood,
    trial: usize,
    seed: u64,
) -> Result<Trial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let result = match algorithm {
        Algorithm::Moead => {
            let n = neighborhood.resolve(setup.tradeoffs.len());
            let budget = setup.budget.max(setup.tradeoffs.len() as u64);
            moead_run(inst, &setup.tradeoffs, n, budget, &setup.targets, &mut rng)?
        }
        Algorithm::Gsemo => gsemo_run(inst, setup.budget, &setup.targets, &mut rng)?,
    };
    let cover = cover_rate(&result.archive_images, &setup.targets)?;
    let igd = igd_plus(&result.archive_images, &setup.targets)?;
    // targets are hull vertices, so nothing feasible dominates them
    assert_eq!(
        igd == Some(0.0),
        cover == Ratio::from_integer(1),
        "IGD+ and cover rate disagree for {algorithm} seed {seed}"
    );
    Ok(Trial {
        algorithm,
        trial,
        seed,
        result,
        cover,
        igd_plus: igd,
    })
}

/// Summary of all trials of one algorithm on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub instance: String,
    pub algorithm: Algorithm,
    pub m: usize,
    pub n: usize,
    pub targets: usize,
    pub tradeoffs: usize,
    pub budget: u64,
    pub successes: usize,
    pub reps: usize,
    /// Cover rate as a fraction, mean and sample deviation.
    pub cover: (f64, f64),
    /// `None` when some run ended with an empty output set.
    pub igd_plus: Option<(f64, f64)>,
    /// Fraction of the budget used until the last hit, over successful runs.
    pub hit_ratio: Option<(f64, f64)>,
}

impl ReportRow {
    fn from_trials(instance: &str, inst: &WeightedInstance, setup: &Setup, algorithm: Algorithm, trials: &[Trial]) -> Self {
        let covers: Vec<f64> = trials.iter().map(|t| t.cover.to_f64().unwrap_or(0.0)).collect();
        let igds: Option<Vec<f64>> = trials.iter().map(|t| t.igd_plus).collect();
        let ratios: Vec<f64> = trials
            .iter()
            .filter_map(|t| t.result.hit_time())
            .map(|h| h as f64 / t_budget(setup, algorithm) as f64)
            .collect();
        ReportRow {
            instance: instance.to_string(),
            algorithm,
            m: inst.ground_size(),
            n: inst.rank(),
            targets: setup.targets.len(),
            tradeoffs: setup.tradeoffs.len(),
            budget: setup.budget,
            successes: trials.iter().filter(|t| t.result.success()).count(),
            reps: trials.len(),
            cover: mean_sd(&covers).unwrap_or((0.0, 0.0)),
            igd_plus: igds.and_then(|v| mean_sd(&v)),
            hit_ratio: mean_sd(&ratios),
        }
    }
}

fn t_budget(setup: &Setup, algorithm: Algorithm) -> u64 {
    match algorithm {
        Algorithm::Moead => setup.budget.max(setup.tradeoffs.len() as u64),
        Algorithm::Gsemo => setup.budget,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub trials: Vec<(String, Trial)>,
}

/// Runs every configured algorithm `reps` times on every instance.
pub fn run_experiment(instances: &[(String, WeightedInstance)], config: &ExperimentConfig) -> Result<Report> {
    if config.reps == 0 {
        return Err(Error::Infeasible("repetitions must be at least 1".into()));
    }
    if config.algorithms.is_empty() {
        return Err(Error::EmptyInput("no algorithms"));
    }
    let mut report = Report {
        rows: Vec::new(),
        trials: Vec::new(),
    };
    for (name, inst) in instances {
        let setup = prepare(inst, config.target_source, config.budget_multiplier)?;
        info!(
            "{name}: m = {}, n = {}, |R| = {}, |Λ| = {}, budget = {}",
            inst.ground_size(),
            inst.rank(),
            setup.targets.len(),
            setup.tradeoffs.len(),
            setup.budget
        );
        for &algorithm in &config.algorithms {
            let mut trials = Vec::with_capacity(config.reps);
            for i in 0..config.reps {
                let t = run_trial(inst, &setup, algorithm, config.neighborhood, i, config.seed(i))?;
                info!(
                    "{name} {algorithm} trial {i}: {}/{} hit, {} evaluations",
                    t.result.hits(),
                    setup.targets.len(),
                    t.result.evaluations_used
                );
                trials.push(t);
            }
            report
                .rows
                .push(ReportRow::from_trials(name, inst, &setup, algorithm, &trials));
            report.trials.extend(trials.into_iter().map(|t| (name.clone(), t)));
        }
    }
    Ok(report)
}

/// `x` with at least six significant digits.
pub fn decimal(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let places = (5 - magnitude).max(0) as usize;
    format!("{x:.places$}")
}

fn pm(v: Option<(f64, f64)>, scale: f64, unit: &str, missing: &str) -> String {
    match v {
        Some((m, s)) => format!("{}±{}{unit}", decimal(m * scale), decimal(s * scale)),
        None => missing.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Report {
    pub fn to_table(&self) -> String {
        let header = [
            "instance", "algorithm", "m", "n", "|R|", "max eval.", "suc. rate", "cover rate", "IGD+", "T/max eval.",
        ];
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.instance.clone(),
                    r.algorithm.to_string(),
                    r.m.to_string(),
                    r.n.to_string(),
                    r.targets.to_string(),
                    r.budget.to_string(),
                    format!("{}/{}", r.successes, r.reps),
                    pm(Some(r.cover), 100.0, "%", "N/A"),
                    pm(r.igd_plus, 1.0, "", "inf"),
                    pm(r.hit_ratio, 100.0, "%", "N/A"),
                ]
            })
            .collect();
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].chars().count())
                    .chain([header[c].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::from("# mean±sd over runs, sample deviation (n−1); T/max eval. over successful runs only\n");
        let line = |row: Vec<String>| -> String {
            row.iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:>w$}", w = w))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(header.iter().map(|s| s.to_string()).collect())).unwrap();
        for row in cells {
            writeln!(out, "{}", line(row)).unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "instance,algorithm,m,n,targets,tradeoffs,max_eval,successes,reps,cover_mean,cover_sd,igd_plus_mean,igd_plus_sd,t_ratio_mean,t_ratio_sd\n",
        );
        let pair = |v: Option<(f64, f64)>, missing: &str| match v {
            Some((m, s)) => format!("{},{}", decimal(m), decimal(s)),
            None => format!("{missing},{missing}"),
        };
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                csv_field(&r.instance),
                r.algorithm,
                r.m,
                r.n,
                r.targets,
                r.tradeoffs,
                r.budget,
                r.successes,
                r.reps,
                pair(Some(r.cover), "N/A"),
                pair(r.igd_plus, "inf"),
                pair(r.hit_ratio, "N/A"),
            )
            .unwrap();
        }
        out
    }

    /// Per-trial records with seeds, for replay.
    pub fn trials_csv(&self) -> String {
        let mut out = String::from("instance,algorithm,trial,seed,success,evaluations,budget,hits,targets,igd_plus\n");
        for (name, t) in &self.trials {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                csv_field(name),
                t.algorithm,
                t.trial,
                t.seed,
                t.result.success(),
                t.result.evaluations_used,
                t.result.budget,
                t.result.hits(),
                t.result.targets.len(),
                t.igd_plus.map_or("inf".to_string(), decimal),
            )
            .unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarize::tests::triangle_instance;

    #[test]
    fn parse_options() {
        assert_eq!("moead".parse::<Algorithm>().unwrap(), Algorithm::Moead);
        assert_eq!("GSEMO".parse::<Algorithm>().unwrap(), Algorithm::Gsemo);
        assert!("nsga2".parse::<Algorithm>().is_err());
        assert_eq!("all".parse::<Neighborhood>().unwrap(), Neighborhood::All);
        assert_eq!("3".parse::<Neighborhood>().unwrap(), Neighborhood::Size(3));
        assert!("0".parse::<Neighborhood>().is_err());
        assert_eq!(Neighborhood::Size(9).resolve(4), 4);
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(0.0), "0");
        assert_eq!(decimal(1.0), "1.00000");
        assert_eq!(decimal(0.125), "0.125000");
        assert_eq!(decimal(1234567.0), "1234567");
    }

    #[test]
    fn triangle_setup() {
        let s = prepare(&triangle_instance(), TargetSource::Auto, 3.0).unwrap();
        assert_eq!(s.targets.len(), 2);
        assert_eq!(s.tradeoffs.len(), 2);
        assert_eq!(s.budget, 54);
        let f = prepare(&triangle_instance(), TargetSource::Facets, 3.0).unwrap();
        assert_eq!(f.targets, s.targets);
    }

    #[test]
    fn triangle_experiment_succeeds() {
        // the default budget here is only 54 evaluations, which about 2% of
        // runs of either algorithm exceed
        let inst = vec![("triangle".to_string(), triangle_instance())];
        let config = ExperimentConfig {
            budget_multiplier: 10.0,
            ..ExperimentConfig::default()
        };
        let report = run_experiment(&inst, &config).unwrap();
        assert_eq!(report.rows.len(), 2);
        for r in &report.rows {
            assert_eq!(r.successes, 10, "{}", r.algorithm);
            assert_eq!(r.cover, (1.0, 0.0));
            assert_eq!(r.igd_plus, Some((0.0, 0.0)));
        }
        assert_eq!(report.trials.len(), 20);
        let again = run_experiment(&inst, &config).unwrap();
        assert_eq!(report, again);
        let table = report.to_table();
        assert!(table.contains("10/10"));
        assert_eq!(report.to_csv().lines().count(), 3);
    }

    #[test]
    fn failed_runs_report_na() {
        let row = ReportRow {
            instance: "a,b".into(),
            algorithm: Algorithm::Gsemo,
            m: 3,
            n: 2,
            targets: 2,
            tradeoffs: 2,
            budget: 1,
            successes: 0,
            reps: 2,
            cover: (0.5, 0.0),
            igd_plus: None,
            hit_ratio: None,
        };
        let report = Report {
            rows: vec![row],
            trials: Vec::new(),
        };
        let csv = report.to_csv();
        assert!(csv.ends_with("\"a,b\",GSEMO,3,2,2,2,1,0,2,0.500000,0,inf,inf,N/A,N/A\n"), "{csv}");
        assert!(report.to_table().contains("N/A"));
    }
}
