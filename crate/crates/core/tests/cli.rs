use std::path::PathBuf;

use diffchar::cli::run;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

/// Runs the CLI with `--out` pointing into a temporary directory and returns
/// the exit code with the parsed report.
fn run_json(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let mut argv = vec!["diffchar".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    argv.extend(["--out".to_string(), out.to_string_lossy().into_owned()]);
    let code = run(argv);
    let text = std::fs::read_to_string(&out).unwrap();
    (code, serde_json::from_str(&text).unwrap())
}

#[test]
fn su2_reports_parity() {
    for (k, expected) in [("2", "0/1"), ("3", "1/2")] {
        let (code, v) = run_json(&["su2", "--k", k, "--seed", "4"]);
        assert_eq!(code, 0);
        assert_eq!(v["schema"], "dc21/1");
        assert_eq!(v["result"]["reduction_chi"], expected);
    }
}

#[test]
fn classify_octahedron_with_quarter_turn() {
    let (code, v) = run_json(&["classify", &data("octahedron.complex"), &data("octahedron_z4.action")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["flat_group"]["group"], "Z/4");
}

#[test]
fn roundtrip_is_exact() {
    let files = [data("octahedron.complex"), data("octahedron_z4.action"), data("octahedron_z4_uniform.bundle")];
    let (code, v) = run_json(&["roundtrip", &files[0], &files[1], &files[2]]);
    assert_eq!(code, 0);
    assert_eq!(v["ok"], true);
}

#[test]
fn bad_phase_is_a_validation_error_with_location() {
    let files = [data("octahedron.complex"), data("octahedron_z4.action"), data("octahedron_z4_bad_phase.bundle")];
    let (code, v) = run_json(&["check", &files[0], &files[1], &files[2]]);
    assert_eq!(code, 1);
    let msg = v["result"]["message"].as_str().unwrap();
    assert!(msg.contains("octahedron_z4_bad_phase.bundle:2"), "{msg}");
}

#[test]
fn kostant_obstruction_is_an_answer() {
    let files = [data("octahedron.complex"), data("octahedron_z4.action")];
    let (code, v) = run_json(&["kostant", &files[0], &files[1], "--total", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["obstruction"]["period"], "1/2");
}

#[test]
fn reduce_rejects_subsets_that_are_not_orbit_closed() {
    let files = [data("octahedron.complex"), data("octahedron_z4.action"), data("octahedron_z4_uniform.bundle")];
    assert_eq!(run_json(&["reduce", &files[0], &files[1], &files[2], "--subset", "1,2,3,4"]).0, 0);
    assert_eq!(run_json(&["reduce", &files[0], &files[1], &files[2], "--subset", "1"]).0, 1);
}

#[test]
fn shifted_moment_is_a_math_failure() {
    assert_eq!(run_json(&["check", "--lie", "circle", "--k", "2"]).0, 0);
    assert_eq!(run_json(&["check", "--lie", "circle", "--k", "2", "--c", "1/3"]).0, 2);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(run(["diffchar", "su2", "--k", "two"]), 1);
    assert_eq!(run(["diffchar", "frobnicate"]), 1);
}
