//! Reduction on the octahedron with a quarter turn: restrict a basic bundle to
//! the equatorial square and compare with the restriction of its cocycle.
//! Then the circle reduction of the SU(2) sphere at its zero level.

use diffchar::fixtures::octahedron_rotation;
use diffchar::generate::{random_basic_bundle, random_bundle};
use diffchar::prequantize::dch;
use diffchar::reduction::{bundle_in_vanishing_subcategory, commute_check, reduce_su2_example, restrict, stable_subcomplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let act = octahedron_rotation();
    let sub = stable_subcomplex(&act, &[1, 2, 3, 4]).unwrap();
    println!("stable subcomplex on {:?}: {} edges, {} faces", sub.vertices, sub.action.complex().count(1), sub.action.complex().count(2));
    if let Err(e) = stable_subcomplex(&act, &[1, 2]) {
        println!("vertices [1, 2] are rejected: {e}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut agree = 0;
    for _ in 0..20 {
        let b = random_basic_bundle(&act, &mut rng).unwrap();
        let rep = commute_check(&act, &b, &sub).unwrap();
        agree += usize::from(rep.verified);
    }
    println!("restriction commutes with prequantization for {agree}/20 basic bundles");

    // a generic bundle usually has α ≠ 0 over the square and cannot be reduced
    let generic = random_bundle(&act, &mut rng);
    let report = bundle_in_vanishing_subcategory(&act, &generic, &sub).unwrap();
    match report.witness {
        Some((g, e, a)) => println!("generic bundle: α = {a} on arrow {g} over edge {e:?}"),
        None => println!("generic bundle happens to be reducible"),
    }
    if let Err(e) = restrict(&act, &dch(&act, &generic).unwrap(), &sub) {
        println!("restrict: {e}");
    }

    println!("\nSU(2) sphere reduced by the maximal torus:");
    for k in 0..=4 {
        let r = reduce_su2_example(k).unwrap();
        let z = format!("{:.3}", r.zero_level).replace("-0.000", "0.000");
        let value = if r.value > 0.75 { r.value - 1.0 } else { r.value };
        println!("  k = {k}: zero level z = {z}, holonomy value {value:.9}, character {}", r.character);
    }
}
