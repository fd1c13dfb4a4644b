//! The SU(2)-invariant sphere of total area `k`. The central element `-1`
//! acts on the fibre by `(-1)^k`, computed three ways.

use diffchar::lie::{archimedes_check, su2_center_character};
use diffchar::reduction::reduce_su2_example;

/// Prints values just below 1 as small negatives, so `0.9999999` reads as `-0.0000001`.
fn wrap(v: f64) -> f64 {
    if v > 0.75 {
        v - 1.0
    } else {
        v
    }
}

fn main() {
    println!(" k  hemisphere  moment-corrected (max deviation)  reduction  trivial");
    for k in 0..=8 {
        let hemisphere = su2_center_character(k);
        let arch = archimedes_check(k, 20, 2024).unwrap();
        let red = reduce_su2_example(k).unwrap();
        println!(
            "{k:2}  {:10.6}  {:16.6} ({:.1e})        {:>9}  {}",
            wrap(hemisphere),
            wrap(arch.values[0]),
            arch.max_deviation,
            red.character.to_string(),
            red.character == 0.into()
        );
    }
}
