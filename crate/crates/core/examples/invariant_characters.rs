//! Circle-invariant characters on the sphere with a non-uniform area form,
//! numerically checked against the five conditions, and a shifted moment map
//! that breaks only the inertia condition.

use diffchar::lie::{
    check_invariant_conditions, invariant_character, one_param_cycle_value, one_param_via_sector, zero_level, AxisymmetricForm, Symmetry,
};

fn main() {
    // density 1 + z/2 integrates to 1 over the sphere
    let form = AxisymmetricForm::from_profile("1 + z/2", |z| (1.0 + 0.5 * z) / 2.0);
    println!("form {}: total {:.12}", form.label(), form.total());

    let ch = invariant_character(&form, Symmetry::Circle, None).unwrap();
    println!("moment map: c = {:.6}, μ(north) = {:.6}, μ(south) = {:.6}", ch.moment.c, ch.moment.axial(1.0), ch.moment.axial(-1.0));
    println!("zero level of μ at z = {:.6}", zero_level(&ch).unwrap());
    let report = check_invariant_conditions(&ch, 20, 1, 1e-9);
    for c in &report.conditions {
        println!("  ({}) {:<32} {} max error {:.2e}", c.index, c.name, if c.passed { "pass" } else { "FAIL" }, c.max_error);
    }
    println!("  connection basic: {}", report.basic);

    let (x, p) = ([0.0, 0.0, 2.0], [0.6, 0.0, 0.8]);
    println!(
        "one-parameter loop at z = 0.8, speed 2: <μ, X> gives {:.9}, sector integral gives {:.9}",
        one_param_cycle_value(&ch, x, p).unwrap(),
        one_param_via_sector(&ch, x, p).unwrap()
    );

    let shifted = invariant_character(&form, Symmetry::Circle, Some(ch.moment.c + 1.0 / 3.0)).unwrap();
    let report = check_invariant_conditions(&shifted, 20, 1, 1e-9);
    println!("moment shifted by 1/3 fails conditions {:?}", report.failed());
    if let Some(w) = report.conditions.iter().find(|c| !c.passed).and_then(|c| c.witness.as_ref()) {
        println!("  witness: {w}");
    }
}
