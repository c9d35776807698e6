//! The four-instance desk suite, both algorithms, printed as a table.
//!
//! Pass a repetition count as the first argument (default 3).

use momwb::bench::{gen_suite, run_experiment, ExperimentConfig, DESK_SHAPES};

fn main() -> momwb::Result<()> {
    let reps = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let suite = gen_suite(&DESK_SHAPES, 1)?;
    let config = ExperimentConfig {
        reps,
        seed_base: 1,
        ..ExperimentConfig::default()
    };
    let report = run_experiment(&suite, &config)?;
    print!("{}", report.to_table());
    Ok(())
}
