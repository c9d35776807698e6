//! Extreme points of a random bi-objective graph, by the dichotomic search
//! and by facet enumeration.

use momwb::bench::gen_instance;
use momwb::{extreme_biobjective, extreme_k};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> momwb::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let inst = gen_instance(10, 24, 2, 100, &mut rng)?;

    let r = extreme_biobjective(&inst)?;
    println!("{} extreme points after {} rounds", r.images.len(), r.rounds);
    for (y, x) in r.images.iter().zip(&r.solutions) {
        println!("  {y}  {}", x.to_bitstring());
    }
    println!("complete trade-offs:");
    for t in &r.tradeoffs {
        println!("  {t}");
    }

    let facets = extreme_k(&inst)?;
    assert_eq!(facets.images, r.images);
    println!("facet enumeration agrees ({} facets)", facets.facets.len());
    Ok(())
}
