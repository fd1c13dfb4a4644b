//! The `diffchar` command-line tool.
//!
//! Every subcommand prints one JSON report (or writes it atomically to
//! `--out`). Exit status is 0 on success, 1 for invalid input and 2 when a
//! mathematical check fails.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cycles::cycle_generators;
use crate::diffchar::{check_conditions, chern_group, classify_flat, extract_character, is_cocycle, kostant_section, KostantOutcome};
use crate::error::Error;
use crate::generate::uniform_theta;
use crate::io::{emit_bundle, load, Document};
use crate::lie::{archimedes_check, check_invariant_conditions, circle_dist, invariant_character, su2_center_character, AxisymmetricForm, Symmetry};
use crate::prequantize::{dch, gauge_equivalent, holonomy, preq};
use crate::rational::{frac, parse_q, q, Q};
use crate::reduction::{commute_check, in_vanishing_subcategory, reduce_su2_example, stable_subcomplex};
use crate::report::{character_value, cocycle_value, float_value, gauge_value, phases_value, presentation_value, q_value, Report};

#[derive(Debug, Parser)]
#[command(name = "diffchar", version, about = "Differential characters on finite action groupoids")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random samples for numerical checks.
    #[arg(long, global = true, default_value_t = 20)]
    pub trials: usize,
    /// Tolerance for quadrature-based checks; exact commands ignore it.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LieSymmetry {
    Circle,
    Su2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Flat characters and Chern classes of an action groupoid.
    Classify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Bundle to cocycle and back, with a verified gauge witness.
    Roundtrip {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// The value at −1 of the SU(2) character on the sphere, three ways.
    Su2 {
        #[arg(long, default_value_t = 1)]
        k: i64,
    },
    /// Restricts a bundle's character to an orbit-closed vertex set.
    Reduce {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Comma-separated vertex list.
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<usize>,
    },
    /// Lifts the uniform form of the given total to a cocycle, or certifies why not.
    Kostant {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value = "1")]
        total: String,
    },
    /// Character conditions for a bundle file, or numerically for a Lie example.
    Check {
        files: Vec<PathBuf>,
        #[arg(long, value_enum)]
        lie: Option<LieSymmetry>,
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Moment-map constant for the circle action, as `p/q`.
        #[arg(long)]
        c: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Roundtrip { .. } => "roundtrip",
            Command::Su2 { .. } => "su2",
            Command::Reduce { .. } => "reduce",
            Command::Kostant { .. } => "kostant",
            Command::Check { .. } => "check",
        }
    }
}

fn rational_arg(flag: &str, s: &str) -> Result<Q, Error> {
    parse_q(s).map_err(|e| Error::Validation(format!("--{flag}: invalid rational `{}`", e.0)))
}

fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Runs a parsed command and returns its report. `Ok` reports with `ok = false`
/// signal a failed mathematical check.
pub fn execute(cli: &Cli) -> Result<Report, Error> {
    let cfg = &cli.config;
    let name = cli.command.name();
    let (ok, result) = match &cli.command {
        Command::Classify { files } => classify(&load(files)?)?,
        Command::Roundtrip { files } => roundtrip(&load(files)?)?,
        Command::Su2 { k } => su2(*k, cfg)?,
        Command::Reduce { files, subset } => reduce(&load(files)?, subset)?,
        Command::Kostant { files, total } => kostant(&load(files)?, rational_arg("total", total)?)?,
        Command::Check { files, lie, k, c } => match lie {
            Some(sym) => {
                if !files.is_empty() {
                    return Err(Error::Validation("--lie takes no input files".into()));
                }
                let c = c.as_deref().map(|s| rational_arg("c", s)).transpose()?;
                check_lie(*sym, *k, c, cfg)?
            }
            None if files.is_empty() => return Err(Error::Validation("check needs input files or --lie".into())),
            None => check(&load(files)?)?,
        },
    };
    Ok(Report::new(name, cfg.seed, ok, result))
}

fn classify(doc: &Document) -> Result<(bool, Value), Error> {
    let act = doc.action()?;
    Ok((
        true,
        json!({
            "complex": act.complex().name(),
            "group": act.group().name(),
            "flat_group": presentation_value(&classify_flat(&act)),
            "chern_group": presentation_value(&chern_group(&act)),
        }),
    ))
}

fn roundtrip(doc: &Document) -> Result<(bool, Value), Error> {
    let act = doc.action()?;
    let bundle = doc.bundle(&act)?;
    let x = dch(&act, &bundle)?;
    let cocycle = is_cocycle(&act, &x)?;
    let back = preq(&act, &x)?;
    let witness = gauge_equivalent(&act, &bundle, &back)?;
    let basis = cycle_generators(&act);
    let ch = extract_character(&act, &x, &basis)?;
    let mut mismatches = Vec::new();
    for (i, g) in basis.generators.iter().enumerate() {
        let hol = holonomy(&act, &bundle, &g.cycle)?;
        if hol != ch.psi[i] {
            mismatches.push(json!({ "generator": i, "holonomy": q_value(&hol.lift()), "psi": q_value(&ch.psi[i].lift()) }));
        }
    }
    let text = emit_bundle(&act, &back);
    let bit_exact = text == emit_bundle(&act, &bundle);
    let ok = cocycle.ok && witness.is_some() && mismatches.is_empty();
    Ok((
        ok,
        json!({
            "cocycle": cocycle_value(&x),
            "cocycle_check": cocycle,
            "witness": witness.map(|w| phases_value(&w.phase)),
            "holonomy_mismatches": mismatches,
            "bit_exact": bit_exact,
            "bundle": text,
        }),
    ))
}

fn su2(k: i64, cfg: &RunConfig) -> Result<(bool, Value), Error> {
    let expected = frac(&q(k, 2));
    let target = to_f64(&expected);
    let chi = su2_center_character(k);
    let arch = archimedes_check(k, cfg.trials.max(1), cfg.seed)?;
    let red = reduce_su2_example(k)?;
    let ok = circle_dist(chi, target) <= cfg.tolerance && arch.max_deviation <= cfg.tolerance && red.character == expected;
    Ok((
        ok,
        json!({
            "k": k,
            "expected": q_value(&expected),
            "chi": float_value(chi),
            "archimedes_values": arch.values.iter().map(|v| float_value(*v)).collect::<Vec<_>>(),
            "archimedes_max_deviation": float_value(arch.max_deviation),
            "reduction_chi": q_value(&red.character),
            "reduction_value": float_value(red.value),
            "zero_level": float_value(red.zero_level),
            "trivial": red.character == q(0, 1),
        }),
    ))
}

fn reduce(doc: &Document, subset: &[usize]) -> Result<(bool, Value), Error> {
    let act = doc.action()?;
    let bundle = doc.bundle(&act)?;
    let sub = stable_subcomplex(&act, subset)?;
    let x = dch(&act, &bundle)?;
    let vanishing = in_vanishing_subcategory(&act, &x, &sub)?;
    if !vanishing.vanishes {
        return Ok((false, json!({ "vertices": sub.vertices, "vanishing": vanishing })));
    }
    let rep = commute_check(&act, &bundle, &sub)?;
    let ch = extract_character(&sub.action, &rep.restricted_cocycle, &cycle_generators(&sub.action))?;
    Ok((
        rep.verified,
        json!({
            "vertices": sub.vertices,
            "vanishing": vanishing,
            "reduced": cocycle_value(&rep.restricted_cocycle),
            "character": character_value(&ch),
            "witness": rep.witness.as_ref().map(gauge_value),
            "verified": rep.verified,
        }),
    ))
}

fn kostant(doc: &Document, total: Q) -> Result<(bool, Value), Error> {
    let act = doc.action()?;
    let flat = classify_flat(&act);
    let mut out = json!({ "total": q_value(&total), "flat_group": presentation_value(&flat) });
    match kostant_section(&uniform_theta(&act, total), &act)? {
        KostantOutcome::Section(x) => {
            let ch = extract_character(&act, &x, &cycle_generators(&act))?;
            out["section_exists"] = json!(true);
            out["section"] = cocycle_value(&x);
            out["character"] = character_value(&ch);
        }
        KostantOutcome::Obstructed { combination, period } => {
            out["section_exists"] = json!(false);
            out["obstruction"] = json!({
                "period": q_value(&period),
                "combination": combination.iter().map(|(cell, m)| json!([cell, *m as i64])).collect::<Vec<_>>(),
            });
        }
    }
    Ok((true, out))
}

fn check(doc: &Document) -> Result<(bool, Value), Error> {
    let act = doc.action()?;
    let bundle = doc.bundle(&act)?;
    let x = dch(&act, &bundle)?;
    let ch = extract_character(&act, &x, &cycle_generators(&act))?;
    let rep = check_conditions(&ch, &act)?;
    Ok((rep.all_passed(), json!({ "character": character_value(&ch), "conditions": rep })))
}

fn check_lie(sym: LieSymmetry, k: i64, c: Option<Q>, cfg: &RunConfig) -> Result<(bool, Value), Error> {
    let symmetry = match sym {
        LieSymmetry::Circle => Symmetry::Circle,
        LieSymmetry::Su2 => Symmetry::Su2,
    };
    let ch = invariant_character(&AxisymmetricForm::uniform(k as f64), symmetry, c.as_ref().map(to_f64))?;
    let rep = check_invariant_conditions(&ch, cfg.trials.max(1), cfg.seed, cfg.tolerance);
    Ok((rep.failed().is_empty(), json!({ "symmetry": symmetry, "k": k, "moment_constant": float_value(ch.moment.c), "psi": ch.psi, "report": rep })))
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let mut f = std::fs::File::create(&tmp)?;
    f.write_all(contents.as_bytes())?;
    f.sync_all()?;
    std::fs::rename(&tmp, path)
}

/// Exit status for an error: 1 for invalid input, 2 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_validation() {
        1
    } else {
        2
    }
}

/// Parses `args`, runs the command and emits its report; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let (report, code) = match execute(&cli) {
        Ok(r) => {
            let code = if r.ok { 0 } else { 2 };
            (r, code)
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            (Report::error(cli.command.name(), cli.config.seed, &e), exit_code(&e))
        }
    };
    let text = report.to_json();
    match &cli.config.out {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                eprintln!("error[io]: {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{text}"),
    }
    code
}
