//! A finite cyclic group acting on a point. Bundles with connection over the
//! quotient are the characters of the group, so there are exactly `n` classes.

use diffchar::cycles::cycle_generators;
use diffchar::diffchar::{chern_group, classify_flat, distinct_classes, extract_character, is_cocycle, DC21Cochain};
use diffchar::fixtures::point_action;
use diffchar::rational::q;

fn main() {
    for n in 2..=5usize {
        let act = point_action(n);
        // on a point the only data is the phase f(g) of each group element
        let cocycles: Vec<DC21Cochain> = (0..n as i64)
            .map(|k| {
                let mut x = DC21Cochain::zero(&act);
                for g in 0..n {
                    x.f[g] = q(k * g as i64 % n as i64, n as i64);
                }
                x
            })
            .collect();
        assert!(cocycles.iter().all(|x| is_cocycle(&act, x).unwrap().ok));
        let classes = distinct_classes(&act, &cocycles);
        println!("Z/{n} on a point: flat classes {}, Chern group {}, distinct characters {}", classify_flat(&act), chern_group(&act), classes.len());

        let basis = cycle_generators(&act);
        for x in classes.iter().take(3) {
            let ch = extract_character(&act, x, &basis).unwrap();
            let values: Vec<String> = ch.psi.iter().map(|p| p.to_string()).collect();
            println!("    generator values {}", values.join(", "));
        }

        let mut broken = DC21Cochain::zero(&act);
        broken.f[1] = q(1, 2 * n as i64);
        let rep = is_cocycle(&act, &broken).unwrap();
        if let Some(v) = rep.first() {
            println!("    f(1) = 1/{}: {} fails at {} (residual {})", 2 * n, v.equation, v.location, v.residual);
        }
    }
}
