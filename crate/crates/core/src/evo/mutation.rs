use rand::Rng;

use crate::matroid::Solution;

/// Flips every bit independently with probability `1/m`.
pub fn standard_bit_mutation<R: Rng + ?Sized>(x: &Solution, rng: &mut R) -> Solution {
    let m = x.len();
    let mut y = x.clone();
    if m == 0 {
        return y;
    }
    let p = 1.0 / m as f64;
    for i in 0..m {
        if rng.gen_bool(p) {
            y.flip(i);
        }
    }
    y
}
