//! Checks the four conditions on a character extracted from a bundle, then
//! breaks each one with a single change and prints the witness.

use diffchar::cycles::{cycle_generators, evaluate, GroupoidCycle, Segment};
use diffchar::diffchar::{check_conditions, extract_character, reconstruct_cocycle, AssertedValue};
use diffchar::fixtures::octahedron_rotation;
use diffchar::generate::uniform_bundle;
use diffchar::prequantize::dch;
use diffchar::rational::{q, qi, Phase};

fn main() {
    let act = octahedron_rotation();
    let x = dch(&act, &uniform_bundle(&act, 2).unwrap()).unwrap();
    let mut ch = extract_character(&act, &x, &cycle_generators(&act)).unwrap();

    // values on a triangle of arrows, a rectangle boundary and a face boundary
    let probes = [
        GroupoidCycle::new(vec![Segment::arrow(1, 1), Segment::arrow(2, 2), Segment::arrow(1, 4)]),
        GroupoidCycle::new(vec![Segment::arrow(1, 1), Segment::Path(vec![2, 3]), Segment::inverse_arrow(1, 2), Segment::Path(vec![2, 1])]),
        GroupoidCycle::new(vec![Segment::Path(vec![0, 1, 2, 0])]),
    ];
    for cycle in probes {
        let value = Phase::new(evaluate(&act, &x.h, &x.f, &cycle).unwrap());
        ch.asserted.push(AssertedValue { cycle, value });
    }
    print!("extracted character:\n{}", check_conditions(&ch, &act).unwrap());
    let rebuilt = reconstruct_cocycle(&ch, &act).unwrap();
    println!("reconstruction has the same forms: {}\n", rebuilt.omega == x.omega && rebuilt.alpha == x.alpha);

    let face = act.complex().face_index([0, 1, 2]).unwrap();
    let mut bad = ch.clone();
    bad.theta.omega[face] += qi(1);
    print!("curvature on face 0 1 2 raised by 1:\n{}\n", check_conditions(&bad, &act).unwrap());

    for (k, what) in ["arrow triangle", "rectangle boundary", "face boundary"].iter().enumerate() {
        let mut bad = ch.clone();
        bad.asserted[k].value = bad.asserted[k].value + Phase::new(q(1, 3));
        print!("{what} value shifted by 1/3:\n{}\n", check_conditions(&bad, &act).unwrap());
    }
    if let Err(e) = reconstruct_cocycle(&bad, &act) {
        println!("reconstruction refuses the broken character: {e}");
    }
}
