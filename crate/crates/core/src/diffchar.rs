//! Cochain model of degree-two differential characters on an action groupoid.
//!
//! A cocycle is a pair of triples. On the base it is `(c, h, ω)` with `c`
//! integral on faces, `h` rational on edges and `ω` rational on faces. On the
//! arrow space it is `(b, f, α)` with `b` integral on `(g, edge)`, `f`
//! rational on `(g, vertex)` and `α` rational on `(g, edge)`. The cocycle
//! equations are
//!
//! ```text
//! ω = c + dh          δc = db          δω = dα
//! δh = α − b − df     δα = 0           δf ∈ ℤ,  δb = −d(δf)
//! ```
//!
//! and `(b, f, α)` is only defined up to `(b + dn, f − n, α)` for integral `n`.

use std::fmt;

use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::cycles::{cycle_generators, evaluate, Anchor, CycleBasis, CycleKind, GroupoidCycle, Segment};
use crate::error::Error;
use crate::groupoid::GroupAction;
use crate::linalg::{cohomology, solve_mod_one, AbelianGroupPresentation, CohomologyCoeff, IntMatrix, ModOneSolution};
use crate::rational::{floor_q, format_q, frac, qi, Phase, Q};

pub(crate) fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| qi(x)).collect()
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| -x).collect()
}

fn integral(v: &[Q]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

/// Cached coboundary and nerve matrices for one action.
pub(crate) struct Nerve<'a> {
    pub act: &'a GroupAction,
    pub d0: IntMatrix,
    pub d1: IntMatrix,
    pub delta_v0: IntMatrix,
    pub delta_e0: IntMatrix,
    pub delta_f0: IntMatrix,
    pub delta_v1: IntMatrix,
    pub delta_e1: IntMatrix,
    pub d_l1_0: IntMatrix,
    pub d_l1_1: IntMatrix,
    pub d_l2_0: IntMatrix,
}

impl<'a> Nerve<'a> {
    pub fn new(act: &'a GroupAction) -> Self {
        let cx = act.complex();
        Nerve {
            act,
            d0: cx.coboundary_matrix(0),
            d1: cx.coboundary_matrix(1),
            delta_v0: act.delta_matrix(0, 0),
            delta_e0: act.delta_matrix(0, 1),
            delta_f0: act.delta_matrix(0, 2),
            delta_v1: act.delta_matrix(1, 0),
            delta_e1: act.delta_matrix(1, 1),
            d_l1_0: act.d_matrix(1, 0),
            d_l1_1: act.d_matrix(1, 1),
            d_l2_0: act.d_matrix(2, 0),
        }
    }

    /// Human-readable name of the level-`n` cell with flat index `idx` in degree `k`.
    pub fn describe(&self, level: usize, k: usize, idx: usize) -> String {
        let cells = self.act.complex().count(k);
        let arrows = self.act.decode(level, idx / cells);
        let simplex = self.act.complex().simplex(k, idx % cells);
        let s: Vec<String> = simplex.iter().map(|v| v.to_string()).collect();
        if level == 0 {
            format!("[{}]", s.join(" "))
        } else {
            let a: Vec<String> = arrows.iter().map(|g| g.to_string()).collect();
            format!("({} | [{}])", a.join(","), s.join(" "))
        }
    }
}

/// A truncated Deligne-type cochain `(c, h, ω)` on the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCCochain {
    pub degree: usize,
    pub truncation: usize,
    /// Integral, on `degree`-simplices.
    pub c: Vec<Q>,
    /// On `(degree − 1)`-simplices; empty in degree 0.
    pub h: Vec<Q>,
    /// On `degree`-simplices; zero below the truncation degree.
    pub omega: Vec<Q>,
}

/// The differential `(c, h, ω) ↦ (dc, ω − c − dh, dω)`, truncated.
pub fn dc_differential(cx: &SimplicialComplex, x: &DCCochain) -> Result<DCCochain, Error> {
    let n = x.degree;
    if n > 2 {
        return Err(Error::Validation(format!("degree {n} exceeds the complex dimension")));
    }
    if x.c.len() != cx.count(n) || x.omega.len() != cx.count(n) || x.h.len() != if n == 0 { 0 } else { cx.count(n - 1) } {
        return Err(Error::Validation("cochain shape does not match the complex".into()));
    }
    if x.c.iter().any(|v| !v.is_integer()) {
        return Err(Error::Validation("c must be integral".into()));
    }
    if n < x.truncation && x.omega.iter().any(|v| !v.is_zero()) {
        return Err(Error::Validation("ω must vanish below the truncation degree".into()));
    }
    let d = cx.coboundary_matrix(n);
    let dh = if n == 0 { vec![Q::zero(); cx.count(0)] } else { cx.coboundary_matrix(n - 1).apply(&x.h) };
    let mut omega = d.apply(&x.omega);
    if n + 1 < x.truncation {
        omega.iter_mut().for_each(|v| *v = Q::zero());
    }
    Ok(DCCochain { degree: n + 1, truncation: x.truncation, c: d.apply(&x.c), h: sub(&sub(&x.omega, &x.c), &dh), omega })
}

/// A degree-two cochain of the truncated double complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DC21Cochain {
    /// Integral, on faces of the base.
    pub c: Vec<i64>,
    /// On edges of the base.
    pub h: Vec<Q>,
    /// On faces of the base.
    pub omega: Vec<Q>,
    /// Integral, on `(g, edge)` indexed `g·|E| + e`.
    pub b: Vec<i64>,
    /// On `(g, vertex)` indexed `g·|V| + v`.
    pub f: Vec<Q>,
    /// On `(g, edge)` indexed `g·|E| + e`.
    pub alpha: Vec<Q>,
}

impl DC21Cochain {
    pub fn zero(act: &GroupAction) -> Self {
        let cx = act.complex();
        let g = act.group().order();
        DC21Cochain {
            c: vec![0; cx.count(2)],
            h: vec![Q::zero(); cx.count(1)],
            omega: vec![Q::zero(); cx.count(2)],
            b: vec![0; g * cx.count(1)],
            f: vec![Q::zero(); g * cx.count(0)],
            alpha: vec![Q::zero(); g * cx.count(1)],
        }
    }

    pub fn check_shape(&self, act: &GroupAction) -> Result<(), Error> {
        let z = DC21Cochain::zero(act);
        let ok = self.c.len() == z.c.len()
            && self.h.len() == z.h.len()
            && self.omega.len() == z.omega.len()
            && self.b.len() == z.b.len()
            && self.f.len() == z.f.len()
            && self.alpha.len() == z.alpha.len();
        if ok {
            Ok(())
        } else {
            Err(Error::Validation("cochain shape does not match the action".into()))
        }
    }

    /// Representative of the class `[(b, f, α)]` with every `f` in `[0, 1)`.
    pub fn normalized(&self, act: &GroupAction) -> Self {
        let n: Vec<i64> = self.f.iter().map(floor_q).collect();
        let dn = act.d_matrix(1, 0).apply_int(&n);
        DC21Cochain { f: self.f.iter().map(frac).collect(), b: self.b.iter().zip(&dn).map(|(b, d)| b + d).collect(), ..self.clone() }
    }

    /// Equality of classes `[(b, f, α)]`, i.e. of normal forms.
    pub fn same_class(&self, other: &Self, act: &GroupAction) -> bool {
        self.normalized(act) == other.normalized(act)
    }

    /// `self + D(a, t, 0)` in normal form.
    pub fn apply_gauge(&self, act: &GroupAction, gauge: &GaugeCochain) -> Self {
        let nerve = Nerve::new(act);
        let cx = act.complex();
        let a = to_q(&gauge.a);
        let da = cx.coboundary_matrix(1).apply_int(&gauge.a);
        let delta_a = nerve.delta_e0.apply_int(&gauge.a);
        let dt = nerve.d0.apply(&gauge.t);
        let delta_t = nerve.delta_v0.apply(&gauge.t);
        DC21Cochain {
            c: self.c.iter().zip(&da).map(|(x, y)| x + y).collect(),
            h: sub(&sub(&self.h, &a), &dt),
            omega: self.omega.clone(),
            b: self.b.iter().zip(&delta_a).map(|(x, y)| x + y).collect(),
            f: add(&self.f, &delta_t),
            alpha: self.alpha.clone(),
        }
        .normalized(act)
    }
}

/// Gauge data `(a, t, 0)`: `a` integral on edges, `t` rational on vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeCochain {
    pub a: Vec<i64>,
    pub t: Vec<Q>,
}

/// One failed cocycle equation.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    pub equation: &'static str,
    /// `"arrows-2"`, `"arrows-1"` or `"base"`.
    pub level: &'static str,
    pub location: String,
    pub residual: String,
}

/// Outcome of [`is_cocycle`]. Violations are ordered: equations on pairs of
/// composable arrows first, then on single arrows, then on the base.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CocycleReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl CocycleReport {
    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

fn record(out: &mut Vec<Violation>, nerve: &Nerve, eq: &'static str, level: usize, k: usize, residual: &[Q], integral_ok: bool) {
    let lvl = ["base", "arrows-1", "arrows-2"][level];
    for (i, r) in residual.iter().enumerate() {
        let bad = if integral_ok { !r.is_integer() } else { !r.is_zero() };
        if bad {
            out.push(Violation { equation: eq, level: lvl, location: nerve.describe(level, k, i), residual: format_q(r) });
        }
    }
}

/// Checks all cocycle equations exactly, reporting every violation.
pub fn is_cocycle(act: &GroupAction, x: &DC21Cochain) -> Result<CocycleReport, Error> {
    x.check_shape(act)?;
    let nv = Nerve::new(act);
    Ok(cocycle_report(&nv, x))
}

pub(crate) fn cocycle_report(nv: &Nerve, x: &DC21Cochain) -> CocycleReport {
    let (b, c) = (to_q(&x.b), to_q(&x.c));
    let mut out = Vec::new();
    let delta_f = nv.delta_v1.apply(&x.f);
    record(&mut out, nv, "δf ∈ ℤ", 2, 0, &delta_f, true);
    let r = add(&nv.delta_e1.apply(&b), &nv.d_l2_0.apply(&delta_f));
    record(&mut out, nv, "δb = −d(δf)", 2, 1, &r, false);
    record(&mut out, nv, "δα = 0", 2, 1, &nv.delta_e1.apply(&x.alpha), false);
    let r = sub(&nv.delta_f0.apply(&c), &nv.d_l1_1.apply(&b));
    record(&mut out, nv, "δc = db", 1, 2, &r, false);
    let r = add(&add(&sub(&nv.delta_e0.apply(&x.h), &x.alpha), &b), &nv.d_l1_0.apply(&x.f));
    record(&mut out, nv, "δh = α − b − df", 1, 1, &r, false);
    let r = sub(&nv.delta_f0.apply(&x.omega), &nv.d_l1_1.apply(&x.alpha));
    record(&mut out, nv, "δω = dα", 1, 2, &r, false);
    let r = sub(&sub(&x.omega, &c), &nv.d1.apply(&x.h));
    record(&mut out, nv, "ω = c + dh", 0, 2, &r, false);
    CocycleReport { ok: out.is_empty(), violations: out }
}

fn require_cocycle(nv: &Nerve, x: &DC21Cochain, what: &str) -> Result<(), Error> {
    let rep = cocycle_report(nv, x);
    match rep.first() {
        None => Ok(()),
        Some(v) => Err(Error::NotCocycle(format!("{what}: {} fails at {} (residual {})", v.equation, v.location, v.residual))),
    }
}

/// Finds `(a, t)` with `x = y + D(a, t, 0)` up to the class relation, or `None`
/// when the two cocycles are not cohomologous.
pub fn cohomologous(act: &GroupAction, x: &DC21Cochain, y: &DC21Cochain) -> Result<Option<GaugeCochain>, Error> {
    x.check_shape(act)?;
    y.check_shape(act)?;
    let nv = Nerve::new(act);
    require_cocycle(&nv, x, "first argument")?;
    require_cocycle(&nv, y, "second argument")?;
    Ok(gauge_between(&nv, x, y))
}

pub(crate) fn gauge_between(nv: &Nerve, x: &DC21Cochain, y: &DC21Cochain) -> Option<GaugeCochain> {
    if x.omega != y.omega || x.alpha != y.alpha {
        return None;
    }
    let dh = sub(&x.h, &y.h);
    let df = sub(&x.f, &y.f);
    let mut neg_d0 = IntMatrix::zeros(nv.d0.rows(), nv.d0.cols());
    neg_d0.place(0, 0, &nv.d0, -1);
    let system = IntMatrix::vstack(&[neg_d0, nv.delta_v0.clone()]);
    let rhs: Vec<Q> = dh.iter().chain(df.iter()).copied().collect();
    let t = match solve_mod_one(&system, &rhs) {
        ModOneSolution::Solved(t) => t,
        ModOneSolution::Obstructed { .. } => return None,
    };
    let a_q = sub(&neg(&dh), &nv.d0.apply(&t));
    let a = integral(&a_q)?;
    let gauge = GaugeCochain { a, t };
    let moved = y.apply_gauge(nv.act, &gauge);
    (moved == x.normalized(nv.act)).then_some(gauge)
}

/// Keeps one representative per cohomology class, in input order.
pub fn distinct_classes(act: &GroupAction, cocycles: &[DC21Cochain]) -> Vec<DC21Cochain> {
    let nv = Nerve::new(act);
    let mut reps: Vec<DC21Cochain> = Vec::new();
    for x in cocycles {
        if !reps.iter().any(|r| gauge_between(&nv, x, r).is_some()) {
            reps.push(x.clone());
        }
    }
    reps
}

/// The form part `(ω, α)` of a character; its component on pairs of arrows is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta {
    pub omega: Vec<Q>,
    pub alpha: Vec<Q>,
}

/// A value of the character asserted on an arbitrary cycle, checked against
/// the reconstruction by [`check_conditions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertedValue {
    pub cycle: GroupoidCycle,
    pub value: Phase,
}

/// The invariant content of a cocycle: its forms and its values on the
/// generating cycles returned by [`cycle_generators`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffCharacter {
    pub theta: Theta,
    pub psi: Vec<Phase>,
    pub asserted: Vec<AssertedValue>,
}

pub fn kostant_eta(x: &DC21Cochain) -> Theta {
    Theta { omega: x.omega.clone(), alpha: x.alpha.clone() }
}

/// Reads off `(Θ, Ψ)` from a cocycle.
pub fn extract_character(act: &GroupAction, x: &DC21Cochain, basis: &CycleBasis) -> Result<DiffCharacter, Error> {
    x.check_shape(act)?;
    let nv = Nerve::new(act);
    require_cocycle(&nv, x, "extract_character")?;
    let psi = basis.generators.iter().map(|g| evaluate(act, &x.h, &x.f, &g.cycle).map(Phase::new)).collect::<Result<_, _>>()?;
    Ok(DiffCharacter { theta: kostant_eta(x), psi, asserted: Vec::new() })
}

/// Result of one of the four character conditions.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ConditionResult {
    pub index: u8,
    pub name: &'static str,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ConditionReport {
    pub conditions: Vec<ConditionResult>,
}

impl ConditionReport {
    pub fn all_passed(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<u8> {
        self.conditions.iter().filter(|c| !c.passed).map(|c| c.index).collect()
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            write!(f, "({}) {}: {}", c.index, c.name, if c.passed { "pass" } else { "FAIL" })?;
            if let Some(w) = c.witnesses.first() {
                write!(f, " [{w}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Lifts chosen to realise a character in spanning-tree gauge.
struct Lift {
    h: Vec<Q>,
    f: Vec<Q>,
    c: Vec<Q>,
    b: Vec<Q>,
}

fn lift_character(nv: &Nerve, ch: &DiffCharacter, basis: &CycleBasis) -> Result<Lift, Error> {
    let act = nv.act;
    let cx = act.complex();
    let group = act.group();
    let (ne, nvx) = (cx.count(1), cx.count(0));
    let z = DC21Cochain::zero(act);
    if ch.theta.omega.len() != z.omega.len() || ch.theta.alpha.len() != z.alpha.len() {
        return Err(Error::Validation("form shape does not match the action".into()));
    }
    if ch.psi.len() != basis.generators.len() {
        return Err(Error::Validation(format!("character lists {} generator values, basis has {}", ch.psi.len(), basis.generators.len())));
    }
    let mut h = vec![Q::zero(); ne];
    let mut f = vec![Q::zero(); group.order() * nvx];
    let mut known = vec![false; group.order() * nvx];
    for (gen, val) in basis.generators.iter().zip(&ch.psi) {
        match gen.anchor {
            Anchor::Edge(e) => h[e] = val.lift(),
            Anchor::Arrow { g, root } => {
                f[g * nvx + root] = val.lift();
            }
        }
    }
    // arrows at roots: generator values, or zero on component-tree arrows
    for (si, &s) in basis.group_generators.iter().enumerate() {
        for (c, &r) in basis.roots.iter().enumerate() {
            if basis.tree_arrow[si][c] {
                f[s * nvx + r] = Q::zero();
            }
            known[s * nvx + r] = true;
        }
        // propagate along tree edges using the rectangle relation
        for &w in &basis.bfs_order {
            let Some(u) = basis.parent[w] else { continue };
            let (e, sign) = cx.oriented_edge(u, w).unwrap();
            let (se, ssign) = act.act_simplex(s, 1, e);
            let hp = h[e] * qi(sign);
            let hsp = h[se] * qi(sign * ssign);
            let a = ch.theta.alpha[s * ne + e] * qi(sign);
            f[s * nvx + w] = frac(&(a - hp + hsp + f[s * nvx + u]));
            known[s * nvx + w] = true;
        }
    }
    // extend to all group elements through words in the generators
    let e = group.identity();
    let mut reached = vec![false; group.order()];
    reached[e] = true;
    let mut queue = std::collections::VecDeque::from([e]);
    while let Some(g) = queue.pop_front() {
        for &s in &basis.group_generators {
            let sg = group.mul(s, g);
            if !reached[sg] {
                reached[sg] = true;
                for v in 0..nvx {
                    f[sg * nvx + v] = frac(&(f[g * nvx + v] + f[s * nvx + act.act(g, v)]));
                }
                queue.push_back(sg);
            }
        }
    }
    debug_assert!(reached.iter().all(|&r| r));
    let c = sub(&ch.theta.omega, &nv.d1.apply(&h));
    let b = sub(&sub(&ch.theta.alpha, &nv.d_l1_0.apply(&f)), &nv.delta_e0.apply(&h));
    Ok(Lift { h, f, c, b })
}

fn classify_asserted(cycle: &GroupoidCycle) -> u8 {
    let arrows = cycle.segments.iter().filter(|s| matches!(s, Segment::Arrow { .. })).count();
    let paths = cycle.segments.iter().filter(|s| matches!(s, Segment::Path(v) if v.len() > 1)).count();
    match (paths, arrows) {
        (_, 0) => 4,
        (0, _) => 2,
        _ => 3,
    }
}

/// Checks the four character conditions:
/// (1) the forms are closed, (2) arrow triangles integrate to zero,
/// (3) each arrow-edge rectangle integrates to `α`, (4) each face integrates to `ω`.
pub fn check_conditions(ch: &DiffCharacter, act: &GroupAction) -> Result<ConditionReport, Error> {
    let nv = Nerve::new(act);
    let basis = cycle_generators(act);
    Ok(conditions_with(&nv, ch, &basis)?.0)
}

fn conditions_with(nv: &Nerve, ch: &DiffCharacter, basis: &CycleBasis) -> Result<(ConditionReport, Lift), Error> {
    let lift = lift_character(nv, ch, basis)?;
    let mut w: [Vec<String>; 4] = Default::default();

    let mut closure = Vec::new();
    let r = sub(&nv.delta_f0.apply(&ch.theta.omega), &nv.d_l1_1.apply(&ch.theta.alpha));
    record(&mut closure, nv, "δω = dα", 1, 2, &r, false);
    record(&mut closure, nv, "δα = 0", 2, 1, &nv.delta_e1.apply(&ch.theta.alpha), false);
    w[0] = closure.iter().map(|v| format!("{} at {} (residual {})", v.equation, v.location, v.residual)).collect();

    for (i, r) in nv.delta_v1.apply(&lift.f).iter().enumerate() {
        if !r.is_integer() {
            w[1].push(format!("triangle {} has value {}", nv.describe(2, 0, i), format_q(&frac(r))));
        }
    }
    for (i, r) in lift.b.iter().enumerate() {
        if !r.is_integer() {
            w[2].push(format!("rectangle {} differs from α by {}", nv.describe(1, 1, i), format_q(&frac(r))));
        }
    }
    for (i, r) in lift.c.iter().enumerate() {
        if !r.is_integer() {
            w[3].push(format!("face {} differs from ω by {}", nv.describe(0, 2, i), format_q(&frac(r))));
        }
    }
    for (k, a) in ch.asserted.iter().enumerate() {
        let v = Phase::new(evaluate(nv.act, &lift.h, &lift.f, &a.cycle)?);
        if v != a.value {
            let idx = classify_asserted(&a.cycle) as usize - 1;
            w[idx].push(format!("asserted cycle #{k} has value {} but the forms force {}", a.value, v));
        }
    }
    let names = ["closed forms", "arrow triangles", "arrow-edge rectangles", "faces"];
    let conditions = w
        .into_iter()
        .enumerate()
        .map(|(i, witnesses)| ConditionResult { index: i as u8 + 1, name: names[i], passed: witnesses.is_empty(), witnesses })
        .collect();
    Ok((ConditionReport { conditions }, lift))
}

/// Rebuilds a cocycle from `(Θ, Ψ)` in spanning-tree gauge.
pub fn reconstruct_cocycle(ch: &DiffCharacter, act: &GroupAction) -> Result<DC21Cochain, Error> {
    let nv = Nerve::new(act);
    let basis = cycle_generators(act);
    let (report, lift) = conditions_with(&nv, ch, &basis)?;
    if let Some(c) = report.conditions.iter().find(|c| !c.passed) {
        return Err(Error::ConditionFailed { index: c.index, witness: c.witnesses[0].clone() });
    }
    let x = DC21Cochain {
        c: integral(&lift.c).expect("condition (4) holds"),
        h: lift.h,
        omega: ch.theta.omega.clone(),
        b: integral(&lift.b).expect("condition (3) holds"),
        f: lift.f,
        alpha: ch.theta.alpha.clone(),
    };
    require_cocycle(&nv, &x, "reconstruction")?;
    Ok(x)
}

fn total_dims(act: &GroupAction, upto: usize) -> Vec<usize> {
    (0..=upto).map(|t| act.total_dim(t)).collect()
}

/// Flat characters: the first cohomology of the total complex with ℝ/ℤ coefficients.
pub fn classify_flat(act: &GroupAction) -> AbelianGroupPresentation {
    let ds = [act.total_matrix(0), act.total_matrix(1)];
    cohomology(&ds, &total_dims(act, 2), 1, CohomologyCoeff::Circle).expect("total complex is a complex")
}

/// Second integral cohomology of the total complex, the home of Chern classes.
pub fn chern_group(act: &GroupAction) -> AbelianGroupPresentation {
    let ds = [act.total_matrix(0), act.total_matrix(1), act.total_matrix(2)];
    cohomology(&ds, &total_dims(act, 3), 2, CohomologyCoeff::Integer).expect("total complex is a complex")
}

/// Outcome of [`kostant_section`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KostantOutcome {
    Section(DC21Cochain),
    /// An integer combination of faces, arrow-edge rectangles and arrow
    /// triangles that bounds in the groupoid but on which the forms have the
    /// non-integral period `period`.
    Obstructed {
        combination: Vec<(String, i128)>,
        period: Q,
    },
}

/// Finds a cocycle with form part `Θ`, or the period certificate showing that
/// `Θ` is not integral.
pub fn kostant_section(theta: &Theta, act: &GroupAction) -> Result<KostantOutcome, Error> {
    let nv = Nerve::new(act);
    let z = DC21Cochain::zero(act);
    if theta.omega.len() != z.omega.len() || theta.alpha.len() != z.alpha.len() {
        return Err(Error::Validation("form shape does not match the action".into()));
    }
    let r1 = sub(&nv.delta_f0.apply(&theta.omega), &nv.d_l1_1.apply(&theta.alpha));
    let r2 = nv.delta_e1.apply(&theta.alpha);
    if r1.iter().chain(&r2).any(|v| !v.is_zero()) {
        return Err(Error::Validation("Θ is not closed".into()));
    }
    let (nf, ne1, nv2) = (nv.d1.rows(), nv.delta_e0.rows(), nv.delta_v1.rows());
    let (ne, nv1) = (nv.d1.cols(), nv.d_l1_0.cols());
    let mut m = IntMatrix::zeros(nf + ne1 + nv2, ne + nv1);
    m.place(0, 0, &nv.d1, 1);
    m.place(nf, 0, &nv.delta_e0, 1);
    m.place(nf, ne, &nv.d_l1_0, 1);
    m.place(nf + ne1, ne, &nv.delta_v1, 1);
    let rhs: Vec<Q> = theta.omega.iter().chain(&theta.alpha).copied().chain(std::iter::repeat_n(Q::zero(), nv2)).collect();
    match solve_mod_one(&m, &rhs) {
        ModOneSolution::Obstructed { cycle, period } => {
            let combination = cycle
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    let name = if i < nf {
                        format!("face {}", nv.describe(0, 2, i))
                    } else if i < nf + ne1 {
                        format!("rectangle {}", nv.describe(1, 1, i - nf))
                    } else {
                        format!("triangle {}", nv.describe(2, 0, i - nf - ne1))
                    };
                    (name, k)
                })
                .collect();
            Ok(KostantOutcome::Obstructed { combination, period })
        }
        ModOneSolution::Solved(sol) => {
            let (h, f) = sol.split_at(ne);
            let c = sub(&theta.omega, &nv.d1.apply(h));
            let b = sub(&sub(&theta.alpha, &nv.d_l1_0.apply(f)), &nv.delta_e0.apply(h));
            let x = DC21Cochain {
                c: integral(&c).ok_or_else(|| Error::Numerical("section has non-integral c".into()))?,
                h: h.to_vec(),
                omega: theta.omega.clone(),
                b: integral(&b).ok_or_else(|| Error::Numerical("section has non-integral b".into()))?,
                f: f.to_vec(),
                alpha: theta.alpha.clone(),
            }
            .normalized(act);
            require_cocycle(&nv, &x, "section")?;
            Ok(KostantOutcome::Section(x))
        }
    }
}

/// Whether a class lies in the subcategory with vanishing `α`.
pub fn is_basic_class(x: &DC21Cochain) -> bool {
    x.alpha.iter().all(Zero::is_zero)
}

/// Generators of the given kind, for callers that want to address them by role.
pub fn generator_indices(basis: &CycleBasis, kind: CycleKind) -> Vec<usize> {
    basis.generators.iter().enumerate().filter(|(_, g)| g.kind == kind).map(|(i, _)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{octahedron, octahedron_rotation, octahedron_trivial, point_action};
    use crate::rational::q;

    fn point_cocycle(n: usize, k: i64) -> (GroupAction, DC21Cochain) {
        let act = point_action(n);
        let mut x = DC21Cochain::zero(&act);
        for g in 0..n {
            x.f[g] = frac(&q(k * g as i64, n as i64));
        }
        (act, x)
    }

    #[test]
    fn dc_differential_examples() {
        let cx = SimplicialComplex::new("tri", 3, &[vec![0, 1, 2]]).unwrap();
        let x = DCCochain { degree: 2, truncation: 2, c: vec![qi(0)], h: vec![qi(1), qi(0), qi(0)], omega: vec![qi(1)] };
        let y = dc_differential(&cx, &x).unwrap();
        assert!(y.h.iter().all(Zero::is_zero));
        let x = DCCochain { degree: 2, truncation: 2, c: vec![qi(3)], h: vec![qi(0); 3], omega: vec![qi(0)] };
        assert_eq!(dc_differential(&cx, &x).unwrap().h, vec![qi(-3)]);
    }

    #[test]
    fn point_characters() {
        let (act, x) = point_cocycle(2, 1);
        assert!(is_cocycle(&act, &x).unwrap().ok);
        let basis = cycle_generators(&act);
        let ch = extract_character(&act, &x, &basis).unwrap();
        assert_eq!(ch.psi, vec![Phase::new(q(1, 2))]);
        let y = reconstruct_cocycle(&ch, &act).unwrap();
        assert_eq!(y.f[1], q(1, 2));
        assert!(cohomologous(&act, &x, &y).unwrap().is_some());
    }

    #[test]
    fn perturbed_phase_breaks_triangles_first() {
        let (act, mut x) = point_cocycle(4, 1);
        x.f[1] += q(1, 3);
        let rep = is_cocycle(&act, &x).unwrap();
        assert_eq!(rep.first().unwrap().equation, "δf ∈ ℤ");
    }

    #[test]
    fn flat_classification() {
        for n in 2..=4 {
            assert_eq!(classify_flat(&point_action(n)), AbelianGroupPresentation::cyclic(n as i128));
        }
        assert!(classify_flat(&octahedron_trivial()).is_trivial());
        assert_eq!(classify_flat(&octahedron_rotation()), AbelianGroupPresentation::cyclic(4));
        let chern = chern_group(&octahedron_trivial());
        assert_eq!((chern.free_rank, chern.invariant_factors.len()), (1, 0));
    }

    #[test]
    fn half_total_is_obstructed() {
        let act = octahedron_trivial();
        let cx = octahedron();
        let omega = (0..8).map(|i| q(cx.face_orientation(i), 16)).collect();
        let theta = Theta { omega, alpha: vec![Q::zero(); 12] };
        match kostant_section(&theta, &act).unwrap() {
            KostantOutcome::Obstructed { period, .. } => assert_eq!(period, q(1, 2)),
            other => panic!("expected an obstruction, got {other:?}"),
        }
    }

    #[test]
    fn unit_total_has_section() {
        let act = octahedron_rotation();
        let cx = act.complex();
        let omega = (0..8).map(|i| q(cx.face_orientation(i), 8)).collect();
        let theta = Theta { omega, alpha: vec![Q::zero(); 4 * 12] };
        let KostantOutcome::Section(x) = kostant_section(&theta, &act).unwrap() else { panic!() };
        assert_eq!(kostant_eta(&x), theta);
        let ch = extract_character(&act, &x, &cycle_generators(&act)).unwrap();
        assert!(check_conditions(&ch, &act).unwrap().all_passed());
        let y = reconstruct_cocycle(&ch, &act).unwrap();
        assert!(cohomologous(&act, &x, &y).unwrap().is_some());
    }
}
