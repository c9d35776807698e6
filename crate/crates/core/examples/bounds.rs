//! Extreme-point count bounds next to the counts seen on random graphs.

use momwb::bench::gen_instance;
use momwb::extreme::{extreme_count_bound_2, extreme_count_bound_k};
use momwb::extreme_biobjective;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> momwb::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (v, e) in [(8, 14), (10, 24), (14, 40), (20, 60)] {
        let inst = gen_instance(v, e, 2, 100, &mut rng)?;
        let (m, n) = (inst.ground_size() as u64, inst.rank() as u64);
        let found = extreme_biobjective(&inst)?.images.len();
        println!(
            "m = {m:2} n = {n:2}: {found:3} extreme points, bound {} (general k = 2 bound {})",
            extreme_count_bound_2(m, n)?,
            extreme_count_bound_k(m, 2)
        );
    }
    println!("m = 150, k = 3: {}", extreme_count_bound_k(150, 3));
    Ok(())
}
