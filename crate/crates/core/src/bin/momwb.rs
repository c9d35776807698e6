use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use momwb::bench::{
    self, gen_instance, gen_suite, gen_uniform_instance, prepare, read_instance, run_experiment, run_trial,
    serialize_extreme_report, serialize_instance, Algorithm, ExperimentConfig, ExtremeReport, Neighborhood,
    TargetSource, DESK_SHAPES, TABLE_SHAPES,
};
use momwb::evo::convf_enumeration_mode;
use momwb::extreme::{extreme_count_bound_2, extreme_count_bound_k, sufficient_tradeoffs_biobjective, sufficient_tradeoffs_k};
use momwb::oracle::cross_check;
use momwb::{extreme_biobjective, extreme_k, WeightedInstance};

#[derive(Parser)]
#[command(name = "momwb", version, about = "Multi-objective minimum weight bases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Auto,
    Biobjective,
    Facets,
}

impl From<Source> for TargetSource {
    fn from(s: Source) -> Self {
        match s {
            Source::Auto => TargetSource::Auto,
            Source::Biobjective => TargetSource::Biobjective,
            Source::Facets => TargetSource::Facets,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Desk,
    Table,
}

#[derive(clap::Args)]
struct RunArgs {
    instance: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = bench::DEFAULT_BUDGET_MULTIPLIER)]
    budget_multiplier: f64,
    #[arg(long, value_enum, default_value_t = Source::Auto)]
    targets: Source,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance file.
    Gen {
        #[arg(long, default_value_t = 14)]
        vertices: usize,
        #[arg(long, default_value_t = 40)]
        edges: usize,
        /// Uniform matroid U(capacity, m) instead of a graph; takes `m,capacity`.
        #[arg(long, value_parser = parse_pair)]
        uniform: Option<(usize, usize)>,
        #[arg(long, short, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        weight_max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extreme points and a complete trade-off set.
    Extreme {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Source::Auto)]
        targets: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sufficient trade-offs, one per extreme point.
    Tradeoffs {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Source::Auto)]
        targets: Source,
    },
    /// One seeded MOEA/D run.
    Moead {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value = "all")]
        neighborhood: Neighborhood,
        /// Use the complete trade-off set and every supported image as targets.
        #[arg(long)]
        convf: bool,
    },
    /// One seeded GSEMO run.
    Gsemo {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Repeated runs of both algorithms with a summary table.
    Bench {
        instances: Vec<PathBuf>,
        /// Generate a suite instead of reading instance files.
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = bench::DEFAULT_BUDGET_MULTIPLIER)]
        budget_multiplier: f64,
        #[arg(long, default_value = "all")]
        neighborhood: Neighborhood,
        #[arg(long, value_delimiter = ',', default_value = "gsemo,moead")]
        algorithms: Vec<Algorithm>,
        #[arg(long, value_enum, default_value_t = Source::Auto)]
        targets: Source,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Also write the summary as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write one CSV line per trial.
        #[arg(long)]
        trials_out: Option<PathBuf>,
    },
    /// Brute-force verification on a small instance.
    Oracle { instance: PathBuf },
    /// Upper bounds on the number of extreme points.
    Bounds {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, short, default_value_t = 2)]
        k: u64,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `m,capacity`")?;
    Ok((
        a.trim().parse().map_err(|e| format!("{e}"))?,
        b.trim().parse().map_err(|e| format!("{e}"))?,
    ))
}

fn emit(text: &str, out: Option<&PathBuf>) -> momwb::Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn extreme_for(inst: &WeightedInstance, source: Source) -> momwb::Result<momwb::ExtremeResult> {
    match (source, inst.objectives()) {
        (Source::Biobjective, _) | (Source::Auto, 2) => extreme_biobjective(inst),
        _ => extreme_k(inst),
    }
}

fn print_run(inst: &WeightedInstance, r: &momwb::evo::RunResult) {
    println!("m = {}, n = {}", inst.ground_size(), inst.rank());
    println!(
        "evaluations {} of {} ({:?}); hit {}/{} targets",
        r.evaluations_used,
        r.budget,
        r.termination,
        r.hits(),
        r.targets.len()
    );
    for (y, hit) in r.targets.iter().zip(&r.first_hit) {
        match hit {
            Some(e) => println!("target {y} hit at {e}"),
            None => println!("target {y} missed"),
        }
    }
}

fn run(cli: Cli) -> momwb::Result<()> {
    match cli.command {
        Command::Gen {
            vertices,
            edges,
            uniform,
            k,
            weight_max,
            seed,
            out,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let inst = match uniform {
                Some((m, capacity)) => gen_uniform_instance(m, capacity, k, weight_max, &mut rng)?,
                None => gen_instance(vertices, edges, k, weight_max, &mut rng)?,
            };
            emit(&serialize_instance(&inst), out.as_ref())
        }
        Command::Extreme { instance, targets, out } => {
            let inst = read_instance(instance)?;
            let r = extreme_for(&inst, targets)?;
            emit(&serialize_extreme_report(&ExtremeReport::from(&r)), out.as_ref())
        }
        Command::Tradeoffs { instance, targets } => {
            let inst = read_instance(instance)?;
            let r = extreme_for(&inst, targets)?;
            let ts = match (targets, inst.objectives()) {
                (Source::Biobjective, _) | (Source::Auto, 2) => sufficient_tradeoffs_biobjective(&r.tradeoffs)?,
                _ => sufficient_tradeoffs_k(&r)?,
            };
            for t in ts {
                println!("tradeoff {t}");
            }
            Ok(())
        }
        Command::Moead { run, neighborhood, convf } => {
            let inst = read_instance(&run.instance)?;
            let setup = prepare(&inst, run.targets.into(), run.budget_multiplier)?;
            let r = if convf {
                let complete = &setup.extreme.tradeoffs;
                let mut rng = ChaCha8Rng::seed_from_u64(run.seed);
                convf_enumeration_mode(
                    &inst,
                    complete,
                    neighborhood.resolve(complete.len()),
                    setup.budget.max(complete.len() as u64),
                    &mut rng,
                )?
            } else {
                run_trial(&inst, &setup, Algorithm::Moead, neighborhood, 0, run.seed)?.result
            };
            print_run(&inst, &r);
            Ok(())
        }
        Command::Gsemo { run } => {
            let inst = read_instance(&run.instance)?;
            let setup = prepare(&inst, run.targets.into(), run.budget_multiplier)?;
            let t = run_trial(&inst, &setup, Algorithm::Gsemo, Neighborhood::All, 0, run.seed)?;
            print_run(&inst, &t.result);
            Ok(())
        }
        Command::Bench {
            instances,
            suite,
            reps,
            seed,
            budget_multiplier,
            neighborhood,
            algorithms,
            targets,
            format,
            out,
            trials_out,
        } => {
            let mut named = match suite {
                Some(Suite::Desk) => gen_suite(&DESK_SHAPES, seed)?,
                Some(Suite::Table) => gen_suite(&TABLE_SHAPES, seed)?,
                None => Vec::new(),
            };
            for path in instances {
                let inst = read_instance(&path)?;
                named.push((path.display().to_string(), inst));
            }
            if named.is_empty() {
                return Err(momwb::Error::EmptyInput("no instances: pass files or --suite"));
            }
            let config = ExperimentConfig {
                algorithms,
                reps,
                seed_base: seed,
                neighborhood,
                budget_multiplier,
                target_source: targets.into(),
            };
            let report = run_experiment(&named, &config)?;
            match format {
                Format::Table => print!("{}", report.to_table()),
                Format::Csv => print!("{}", report.to_csv()),
            }
            if let Some(path) = out {
                fs::write(path, report.to_csv())?;
            }
            if let Some(path) = trials_out {
                fs::write(path, report.trials_csv())?;
            }
            Ok(())
        }
        Command::Oracle { instance } => {
            let inst = read_instance(instance)?;
            let c = cross_check(&inst)?;
            println!("bases: {}", c.oracle.all_bases.len());
            println!("front: {}", c.oracle.front.len());
            println!("supported: {}", c.oracle.supported_images.len());
            println!("extreme (brute force): {}", c.oracle.hull_vertices.len());
            println!("extreme (greedy): {}", c.extreme.images.len());
            let verdict = |ok: bool| if ok { "ok" } else { "FAILED" };
            println!("extreme points match: {}", verdict(c.extreme_matches));
            println!("k-approximation: {}", verdict(c.k_approximation));
            println!("2-Hamming connected: {}", verdict(c.hamming2_connected));
            if c.passed() {
                Ok(())
            } else {
                Err(momwb::Error::Infeasible("oracle check failed".into()))
            }
        }
        Command::Bounds { m, n, k } => {
            if let Some(n) = n {
                println!("bi-objective bound: {}", extreme_count_bound_2(m, n)?);
            }
            println!("k = {k} bound: {}", extreme_count_bound_k(m, k));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
