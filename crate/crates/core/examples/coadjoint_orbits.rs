//! Which coadjoint orbits of the circle and of SU(2) carry a prequantum bundle.

use diffchar::lie::{coadjoint_character, CoadjointCharacter, CoadjointElement, CoadjointOutcome};
use diffchar::rational::{q, qi};

fn describe(outcome: CoadjointOutcome) -> String {
    match outcome {
        CoadjointOutcome::Exists(CoadjointCharacter::Torus { weight }) => format!("character t -> {weight} t"),
        CoadjointOutcome::Exists(CoadjointCharacter::Sphere(ch)) => {
            format!("sphere bundle, total {:.6}, moment at north pole {:.3}", ch.form.total(), ch.moment.axial(1.0))
        }
        CoadjointOutcome::Obstructed { reason } => format!("obstructed: {reason}"),
    }
}

fn main() {
    let mut lambdas: Vec<_> = (-3..=3).map(qi).collect();
    lambdas.extend([q(1, 2), q(5, 2), q(-7, 3)]);
    println!("circle:");
    for l in lambdas {
        println!("  λ = {l:>4}: {}", describe(coadjoint_character(&CoadjointElement::Torus(l))));
    }
    println!("SU(2):");
    for r in [0.0, 0.25, 0.5, 1.0, 1.5, 0.3] {
        println!("  |λ| = {r:>4}: {}", describe(coadjoint_character(&CoadjointElement::Su2([0.0, 0.0, r]))));
    }
}
