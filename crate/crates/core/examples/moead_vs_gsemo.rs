//! One MOEA/D run and one GSEMO run on the same instance and budget.

use momwb::bench::{gen_instance, prepare, TargetSource};
use momwb::evo::{gsemo_run, moead_run};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> momwb::Result<()> {
    let inst = gen_instance(12, 32, 2, 100, &mut ChaCha8Rng::seed_from_u64(11))?;
    let setup = prepare(&inst, TargetSource::Auto, 3.0)?;
    println!(
        "m = {}, n = {}, {} targets, |Lambda| = {}, budget {}",
        inst.ground_size(),
        inst.rank(),
        setup.targets.len(),
        setup.tradeoffs.len(),
        setup.budget
    );

    let n = setup.tradeoffs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let m = moead_run(&inst, &setup.tradeoffs, n, setup.budget, &setup.targets, &mut rng)?;
    println!("MOEA/D: {}/{} targets, {} evaluations", m.hits(), m.targets.len(), m.evaluations_used);

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let g = gsemo_run(&inst, setup.budget, &setup.targets, &mut rng)?;
    println!("GSEMO:  {}/{} targets, {} evaluations", g.hits(), g.targets.len(), g.evaluations_used);
    Ok(())
}
