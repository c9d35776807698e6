//! Writing and reading instance files and extreme-point reports.

use momwb::bench::{
    gen_instance, parse_extreme_report, parse_instance, serialize_extreme_report, serialize_instance, ExtremeReport,
};
use momwb::extreme_biobjective;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> momwb::Result<()> {
    let inst = gen_instance(5, 7, 2, 9, &mut ChaCha8Rng::seed_from_u64(4))?;
    let text = serialize_instance(&inst);
    print!("{text}");
    let back = parse_instance(&text)?;
    assert_eq!(back.weights(), inst.weights());

    let report = ExtremeReport::from(&extreme_biobjective(&back)?);
    let text = serialize_extreme_report(&report);
    print!("{text}");
    assert_eq!(parse_extreme_report(&text)?.points.len(), report.points.len());
    Ok(())
}
