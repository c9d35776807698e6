//! MOEA/D with the complete trade-off set collects every supported image,
//! including the ones that are not extreme points.

use momwb::evo::convf_enumeration_mode;
use momwb::oracle::pareto_front;
use momwb::{extreme_biobjective, Matroid, WeightedInstance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> momwb::Result<()> {
    // U(2, 4) with three collinear supported images
    let inst = WeightedInstance::new(Matroid::uniform(4, 2)?, vec![vec![1, 2, 3, 9], vec![3, 2, 1, 9]])?;
    let front = pareto_front(&inst)?;
    let complete = extreme_biobjective(&inst)?.tradeoffs;
    println!(
        "{} supported images, {} of them extreme",
        front.supported_images.len(),
        front.hull_vertices.len()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let r = convf_enumeration_mode(&inst, &complete, complete.len(), 100_000, &mut rng)?;
    for (y, hit) in r.targets.iter().zip(&r.first_hit) {
        println!("  {y} first seen at {hit:?}");
    }
    println!("all collected: {}", r.success());
    Ok(())
}
