//! Brute-force cross-check of the extreme-point code on a few small instances.

use momwb::bench::{gen_instance, gen_uniform_instance};
use momwb::oracle::cross_check;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> momwb::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let instances = [
        gen_instance(6, 10, 2, 30, &mut rng)?,
        gen_instance(5, 8, 3, 10, &mut rng)?,
        gen_uniform_instance(9, 4, 2, 20, &mut rng)?,
    ];
    for inst in &instances {
        let c = cross_check(inst)?;
        println!(
            "m = {:2} k = {}: {:4} bases, {:2} front points, {:2} supported, {:2} extreme, passed {}",
            inst.ground_size(),
            inst.objectives(),
            c.oracle.all_bases.len(),
            c.oracle.front.len(),
            c.oracle.supported_images.len(),
            c.oracle.hull_vertices.len(),
            c.passed()
        );
    }
    Ok(())
}
