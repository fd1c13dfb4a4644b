//! Characters over the octahedron with a quarter-turn symmetry, seen as flat
//! twists of a fixed integral curvature form.

use diffchar::diffchar::{classify_flat, cohomologous, distinct_classes, kostant_eta, kostant_section, KostantOutcome};
use diffchar::fixtures::octahedron_rotation;
use diffchar::generate::uniform_theta;
use diffchar::prequantize::{dch, preq};
use diffchar::rational::{q, qi, Phase};

fn main() {
    let act = octahedron_rotation();
    println!("flat characters: {}", classify_flat(&act));

    let theta = uniform_theta(&act, qi(1));
    let KostantOutcome::Section(x0) = kostant_section(&theta, &act).unwrap() else {
        panic!("total 1 is integral");
    };
    let bundle = preq(&act, &x0).unwrap();

    // twist the equivariant structure by each character of Z/4
    let n = act.complex().n_vertices();
    let fiber: Vec<_> = act
        .group()
        .characters()
        .iter()
        .map(|chi| {
            let mut b = bundle.clone();
            for (i, phi) in b.equivariance.iter_mut().enumerate() {
                *phi = *phi + Phase::new(chi[i / n]);
            }
            dch(&act, &b).unwrap()
        })
        .collect();
    assert!(fiber.iter().all(|x| kostant_eta(x) == theta));
    println!("fiber over the uniform form of total 1: {} classes", distinct_classes(&act, &fiber).len());
    let twisted_apart = cohomologous(&act, &fiber[0], &fiber[1]).unwrap().is_none();
    println!("untwisted and quarter-twisted cocycles are cohomologous: {}", !twisted_apart);

    for total in [q(1, 2), q(3, 4)] {
        match kostant_section(&uniform_theta(&act, total), &act).unwrap() {
            KostantOutcome::Section(_) => println!("total {total}: section found"),
            KostantOutcome::Obstructed { combination, period } => {
                println!("total {total}: obstructed, period {period} on a combination of {} cells", combination.len());
                for (cell, k) in combination.iter().take(4) {
                    println!("    {k:+} x {cell}");
                }
            }
        }
    }
}
