//! Sufficient trade-off sets for two and three objectives.

use momwb::bench::gen_instance;
use momwb::extreme::{sufficient_tradeoffs_biobjective, sufficient_tradeoffs_k};
use momwb::{extreme_biobjective, extreme_k, greedy_min_base};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> momwb::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);

    let two = gen_instance(9, 18, 2, 50, &mut rng)?;
    let r = extreme_biobjective(&two)?;
    let ts = sufficient_tradeoffs_biobjective(&r.tradeoffs)?;
    println!("k = 2: {} extreme points, {} sufficient trade-offs", r.images.len(), ts.len());
    for t in &ts {
        let x = greedy_min_base(two.matroid(), &two.scaled_element_weights(t)?)?;
        println!("  {t} -> {}", two.image(&x)?);
    }

    let three = gen_instance(7, 12, 3, 20, &mut rng)?;
    let r = extreme_k(&three)?;
    let ts = sufficient_tradeoffs_k(&r)?;
    println!("k = 3: {} extreme points, {} sufficient trade-offs", r.images.len(), ts.len());
    Ok(())
}
