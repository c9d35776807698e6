//! Minimum spanning trees under a few trade-offs on a hand-built graph.

use momwb::{greedy_min_base, Matroid, TradeOff, WeightedInstance};

fn main() -> momwb::Result<()> {
    // a 4-cycle with one chord, two weights per edge
    let edges = vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)];
    let weights = vec![vec![1, 4, 2, 6, 3], vec![5, 1, 4, 1, 2]];
    let inst = WeightedInstance::new(Matroid::graphic(4, edges)?, weights)?;

    for (num, den) in [(0, 4), (1, 4), (2, 4), (3, 4), (4, 4)] {
        let lambda = TradeOff::from_scalar(num, den)?;
        let keys = inst.scaled_element_weights(&lambda)?;
        let tree = greedy_min_base(inst.matroid(), &keys)?;
        println!("lambda {lambda}: tree {} image {}", tree.to_bitstring(), inst.image(&tree)?);
    }
    Ok(())
}
