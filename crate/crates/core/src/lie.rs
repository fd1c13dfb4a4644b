//! Circle and SU(2) actions on the unit sphere with axisymmetric 2-forms.
//!
//! Conventions: the circle is ℝ/ℤ, so the axial generator rotates the sphere
//! once per unit time. An element `X ∈ su(2) ≅ ℝ³` rotates about `X/|X|` by
//! the angle `2π|X|`, and its exponential in SU(2) is the unit quaternion
//! `cos(π|X|) + sin(π|X|)·X/|X|`. In particular `e^X = −1` when `|X|` is odd.
//!
//! A form is written `ω = F(z) dφ∧dz` with `φ ∈ [0, 1)`, positive for the
//! outward orientation, so `∫_{S²} ω = ∫_{-1}^{1} F`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::quadrature::GaussLegendre;
use crate::rational::Q;

pub type Vec3 = [f64; 3];

pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

pub fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn add3(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn normalize(a: Vec3) -> Vec3 {
    scale(a, 1.0 / norm(a))
}

/// Representative of `x` modulo 1 in `[0, 1)`.
pub fn frac1(x: f64) -> f64 {
    let r = x - x.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Distance between `a` and `b` on ℝ/ℤ.
pub fn circle_dist(a: f64, b: f64) -> f64 {
    let d = frac1(a - b);
    d.min(1.0 - d)
}

/// Unit quaternion `w + xi + yj + zk`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    /// Closed-form exponential of `X ∈ su(2)`.
    pub fn exp(x: Vec3) -> Self {
        let n = norm(x);
        if n == 0.0 {
            return Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
        }
        let s = (PI * n).sin() / n;
        Quaternion { w: (PI * n).cos(), x: x[0] * s, y: x[1] * s, z: x[2] * s }
    }

    /// A Haar-random unit quaternion.
    pub fn random(rng: &mut impl Rng) -> Self {
        loop {
            let v: [f64; 4] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
            let n2: f64 = v.iter().map(|c| c * c).sum();
            if n2 > 1e-6 && n2 <= 1.0 {
                let n = n2.sqrt();
                return Quaternion { w: v[0] / n, x: v[1] / n, y: v[2] / n, z: v[3] / n };
            }
        }
    }

    pub fn conj(self) -> Quaternion {
        Quaternion { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    /// The induced rotation of ℝ³.
    pub fn rotate(self, v: Vec3) -> Vec3 {
        let p = Quaternion { w: 0.0, x: v[0], y: v[1], z: v[2] };
        let r = self * p * self.conj();
        [r.x, r.y, r.z]
    }

    /// Whether this is the central element `−1` up to `tol`.
    pub fn is_minus_one(self, tol: f64) -> bool {
        (self.w + 1.0).abs() < tol && self.x.abs() < tol && self.y.abs() < tol && self.z.abs() < tol
    }
}

fn random_unit(rng: &mut impl Rng) -> Vec3 {
    let q = Quaternion::random(rng);
    q.rotate([0.0, 0.0, 1.0])
}

/// Two unit vectors completing `n` to a right-handed orthonormal frame.
fn frame(n: Vec3) -> (Vec3, Vec3) {
    let seed = if n[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let u = normalize(cross(seed, n));
    let v = cross(n, u);
    (u, v)
}

impl std::ops::Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion {
            w: self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            x: self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            y: self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            z: self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        }
    }
}

/// An axially symmetric 2-form `F(z) dφ∧dz`.
#[derive(Clone)]
pub struct AxisymmetricForm {
    label: String,
    profile: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    uniform: Option<f64>,
}

impl fmt::Debug for AxisymmetricForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AxisymmetricForm").field("label", &self.label).field("uniform", &self.uniform).finish()
    }
}

impl AxisymmetricForm {
    /// The rotation-invariant form of total `k`, i.e. `F ≡ k/2`.
    pub fn uniform(k: f64) -> Self {
        let f = k / 2.0;
        AxisymmetricForm { label: format!("uniform(total={k})"), profile: Arc::new(move |_| f), uniform: Some(f) }
    }

    pub fn from_profile(label: &str, profile: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        AxisymmetricForm { label: label.to_string(), profile: Arc::new(profile), uniform: None }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_uniform(&self) -> bool {
        self.uniform.is_some()
    }

    pub fn density(&self, z: f64) -> f64 {
        (self.profile)(z)
    }

    /// `∫_a^b F`.
    pub fn integral(&self, a: f64, b: f64) -> f64 {
        GaussLegendre::standard().integrate(a, b, |z| self.density(z))
    }

    pub fn total(&self) -> f64 {
        self.integral(-1.0, 1.0)
    }

    /// `∫ ω` over the cap `z ≥ z0`.
    pub fn cap(&self, z0: f64) -> f64 {
        self.integral(z0, 1.0)
    }

    /// `∫ ω` over the cap `{q : q·n ≥ s}`, parameterised by height along `n`
    /// and the turn fraction around it.
    pub fn cap_about(&self, n: Vec3, s: f64) -> f64 {
        let n = normalize(n);
        let (u, v) = frame(n);
        GaussLegendre::standard().integrate_2d((s, 1.0), (0.0, 1.0), |h, t| {
            let r = (1.0 - h * h).max(0.0).sqrt();
            let (c, sn) = ((2.0 * PI * t).cos(), (2.0 * PI * t).sin());
            let q = add3(scale(n, h), add3(scale(u, r * c), scale(v, r * sn)));
            self.density(q[2])
        })
    }

    /// `ω_p(a, b)` for tangent vectors at `p`.
    pub fn evaluate(&self, p: Vec3, a: Vec3, b: Vec3) -> f64 {
        self.density(p[2]) / (2.0 * PI) * dot(p, cross(a, b))
    }
}

/// Which group acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Symmetry {
    /// ℝ/ℤ rotating about the z-axis.
    Circle,
    /// SU(2) acting through SO(3).
    Su2,
}

/// A moment map for the form's symmetry.
#[derive(Debug, Clone)]
pub struct MomentMap {
    pub symmetry: Symmetry,
    pub form: AxisymmetricForm,
    /// Integration constant `μ(z = 0)` in the circle case.
    pub c: f64,
}

impl MomentMap {
    /// `μ(z) = c − ∫_0^z F` for the axial generator.
    pub fn axial(&self, z: f64) -> f64 {
        match self.symmetry {
            Symmetry::Circle => self.c - self.form.integral(0.0, z),
            Symmetry::Su2 => -self.form.total() / 2.0 * z,
        }
    }

    /// `μ(p) ∈ ℝ³`.
    pub fn value(&self, p: Vec3) -> Vec3 {
        match self.symmetry {
            Symmetry::Circle => [0.0, 0.0, self.axial(p[2])],
            Symmetry::Su2 => scale(p, -self.form.total() / 2.0),
        }
    }

    pub fn pairing(&self, p: Vec3, x: Vec3) -> f64 {
        dot(self.value(p), x)
    }
}

/// The moment map of `form` solving `i_{ε_X} ω = −⟨dμ, X⟩`.
///
/// For the circle the constant defaults to the smallest nonnegative `c ≡ ∫_0^1 F (mod 1)`.
/// Then the north pole weight is an integer, and so is the south one when the total is.
/// For SU(2) the form must be invariant and the constant is forced to vanish.
pub fn moment_from_form(form: &AxisymmetricForm, symmetry: Symmetry, c: Option<f64>) -> Result<MomentMap, Error> {
    let total = form.total();
    if !total.is_finite() {
        return Err(Error::Numerical(format!("profile `{}` is not integrable", form.label())));
    }
    let c = match symmetry {
        Symmetry::Circle => c.unwrap_or_else(|| frac1(form.integral(0.0, 1.0))),
        Symmetry::Su2 => {
            if !form.is_uniform() {
                return Err(Error::Validation("an SU(2)-invariant form must be uniform".into()));
            }
            if c.is_some_and(|c| c != 0.0) {
                return Err(Error::Validation("an SU(2) moment map has no free constant".into()));
            }
            0.0
        }
    };
    Ok(MomentMap { symmetry, form: form.clone(), c })
}

/// Values of the character on its generating cycles: the weights of the
/// inertia characters at the poles (for the axial generator) and the values
/// on a few latitude circles, each traversed once counterclockwise about `+z`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PsiBase {
    pub north_weight: f64,
    pub south_weight: f64,
    pub loops: Vec<(f64, f64)>,
}

#[derive(Debug, Clone)]
pub struct InvariantCharacter {
    pub symmetry: Symmetry,
    pub form: AxisymmetricForm,
    pub moment: MomentMap,
    pub psi: PsiBase,
}

/// The character determined by `form` and the moment constant `c`.
pub fn invariant_character(form: &AxisymmetricForm, symmetry: Symmetry, c: Option<f64>) -> Result<InvariantCharacter, Error> {
    let moment = moment_from_form(form, symmetry, c)?;
    let psi = PsiBase {
        north_weight: moment.axial(1.0),
        south_weight: moment.axial(-1.0),
        loops: [-0.5, 0.0, 0.5].iter().map(|&z| (z, frac1(form.cap(z)))).collect(),
    };
    Ok(InvariantCharacter { symmetry, form: form.clone(), moment, psi })
}

/// The character of the uniform form of total `k` with the default constant.
pub fn uniform_character(k: i64, symmetry: Symmetry) -> InvariantCharacter {
    invariant_character(&AxisymmetricForm::uniform(k as f64), symmetry, None).expect("uniform forms are admissible")
}

fn axis_and_speed(ch: &InvariantCharacter, x: Vec3) -> Result<(Vec3, f64), Error> {
    let n = norm(x);
    if ch.symmetry == Symmetry::Circle && (x[0].abs() > 1e-12 || x[1].abs() > 1e-12) {
        return Err(Error::Validation("the circle only acts about the z-axis".into()));
    }
    if n == 0.0 {
        return Ok(([0.0, 0.0, 1.0], 0.0));
    }
    Ok((scale(x, 1.0 / n), n))
}

/// `⟨μ(p), X⟩ mod 1`: the value on the cycle made of the orbit path
/// `t ↦ e^{tX}p` closed by the arrow `e^{−X}`.
pub fn one_param_cycle_value(ch: &InvariantCharacter, x: Vec3, p: Vec3) -> Result<f64, Error> {
    axis_and_speed(ch, x)?;
    Ok(frac1(ch.moment.pairing(p, x)))
}

/// The same value computed from the generator table: slide the cycle to
/// the fixed point on the rotation axis, picking up the pole weight and the
/// integral of `ω` over the swept sector.
pub fn one_param_via_sector(ch: &InvariantCharacter, x: Vec3, p: Vec3) -> Result<f64, Error> {
    let (n, speed) = axis_and_speed(ch, x)?;
    if speed == 0.0 {
        return Ok(0.0);
    }
    let (weight, sector) = match ch.symmetry {
        Symmetry::Circle => {
            if n[2] > 0.0 {
                (ch.psi.north_weight, ch.form.cap(p[2]))
            } else {
                (-ch.psi.south_weight, ch.form.integral(-1.0, p[2]))
            }
        }
        Symmetry::Su2 => (ch.psi.north_weight, ch.form.cap_about(n, dot(p, n))),
    };
    Ok(frac1(speed * (weight + sector)))
}

/// `χ(−1)` by the hemisphere route: with `p` on the equator and `X` tangent
/// to it of unit length, `e^X = −1` and the orbit of `p` bounds a half-sphere `B`;
/// the value is `∫_B ω − ⟨μ(p), X⟩ mod 1`.
pub fn su2_center_character(k: i64) -> f64 {
    let ch = uniform_character(k, Symmetry::Su2);
    let p = [1.0, 0.0, 0.0];
    let x = [0.0, 1.0, 0.0];
    debug_assert!(Quaternion::exp(x).is_minus_one(1e-12));
    frac1(ch.form.cap_about(x, dot(p, x)) - ch.moment.pairing(p, x))
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ArchimedesReport {
    pub k: i64,
    pub expected: f64,
    pub values: Vec<f64>,
    /// Largest circle distance from `expected`.
    pub max_deviation: f64,
    /// Largest circle distance between two trials.
    pub spread: f64,
}

/// Evaluates `w·∫_B ω − ⟨μ(p), X⟩ mod 1` for random `X` of odd length `w ∈ {1, 3}`
/// and random `p`, where `B` is the cap to the left of the orbit circle.
pub fn archimedes_check(k: i64, trials: usize, seed: u64) -> Result<ArchimedesReport, Error> {
    if trials == 0 {
        return Err(Error::Validation("at least one trial is required".into()));
    }
    let ch = uniform_character(k, Symmetry::Su2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Vec::with_capacity(trials);
    for _ in 0..trials {
        let w = if rng.gen_bool(0.5) { 1.0 } else { 3.0 };
        let n = random_unit(&mut rng);
        let x = scale(n, w);
        if !Quaternion::exp(x).is_minus_one(1e-9) {
            return Err(Error::Numerical("sampled X does not exponentiate to −1".into()));
        }
        let p = random_unit(&mut rng);
        let v = w * ch.form.cap_about(n, dot(p, n)) - ch.moment.pairing(p, x);
        if !v.is_finite() {
            return Err(Error::Numerical("quadrature produced a non-finite value".into()));
        }
        values.push(frac1(v));
    }
    let expected = frac1(k as f64 / 2.0);
    let max_deviation = values.iter().map(|v| circle_dist(*v, expected)).fold(0.0, f64::max);
    let mut spread: f64 = 0.0;
    for a in &values {
        for b in &values {
            spread = spread.max(circle_dist(*a, *b));
        }
    }
    Ok(ArchimedesReport { k, expected, values, max_deviation, spread })
}

/// Result of one numerical condition.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct LieCondition {
    pub index: u8,
    pub name: &'static str,
    pub passed: bool,
    pub max_error: f64,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct LieConditionReport {
    pub conditions: Vec<LieCondition>,
    /// `μ` vanishes at every sample, so the connection would be basic.
    pub basic: bool,
}

impl LieConditionReport {
    pub fn failed(&self) -> Vec<u8> {
        self.conditions.iter().filter(|c| !c.passed).map(|c| c.index).collect()
    }
}

struct Worst {
    err: f64,
    witness: Option<String>,
}

impl Worst {
    fn new() -> Self {
        Worst { err: 0.0, witness: None }
    }
    fn see(&mut self, err: f64, what: impl FnOnce() -> String) {
        if err > self.err || err.is_nan() {
            self.err = err;
            self.witness = Some(what());
        }
    }
    fn finish(self, index: u8, name: &'static str, tol: f64) -> LieCondition {
        let passed = self.err <= tol;
        LieCondition { index, name, passed, max_error: self.err, witness: if passed { None } else { self.witness } }
    }
}

/// Numerically verifies (1) invariance and equivariance, (2) the contraction
/// identity, (3) `Ψ(∂S) = ∫_S ω` on caps, (4) the one-parameter identity and
/// (5) integrality of the inertia characters at the poles.
pub fn check_invariant_conditions(ch: &InvariantCharacter, trials: usize, seed: u64, tol: f64) -> LieConditionReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mu = &ch.moment;
    let axial = |rng: &mut ChaCha8Rng| -> Vec3 {
        match ch.symmetry {
            Symmetry::Circle => [0.0, 0.0, rng.gen_range(-2.0..2.0)],
            Symmetry::Su2 => scale(random_unit(rng), rng.gen_range(0.0..2.0)),
        }
    };

    let mut c1 = Worst::new();
    for _ in 0..trials {
        let p = random_unit(&mut rng);
        match ch.symmetry {
            Symmetry::Circle => {
                let g = Quaternion::exp([0.0, 0.0, rng.gen_range(0.0..1.0)]);
                let err = norm(add3(mu.value(g.rotate(p)), scale(mu.value(p), -1.0)));
                c1.see(err, || format!("μ not invariant at p = {p:?}"));
            }
            Symmetry::Su2 => {
                let g = Quaternion::random(&mut rng);
                let err = norm(add3(mu.value(g.rotate(p)), scale(g.rotate(mu.value(p)), -1.0)));
                c1.see(err, || format!("μ not equivariant at p = {p:?}"));
                let z = rng.gen_range(-1.0..1.0);
                let err = (ch.form.density(z) - ch.form.density(0.0)).abs();
                c1.see(err, || format!("ω not invariant: F({z}) differs from F(0)"));
            }
        }
    }

    let mut c2 = Worst::new();
    let h = 1e-5;
    for _ in 0..trials {
        let p = random_unit(&mut rng);
        let x = axial(&mut rng);
        let (u, _) = frame(p);
        let v = u;
        let eps = scale(cross(x, p), 2.0 * PI);
        let lhs = ch.form.evaluate(p, eps, v);
        let fwd = normalize(add3(p, scale(v, h)));
        let bwd = normalize(add3(p, scale(v, -h)));
        let dmu = (mu.pairing(fwd, x) - mu.pairing(bwd, x)) / (2.0 * h);
        c2.see((lhs + dmu).abs(), || format!("contraction identity fails at p = {p:?}, X = {x:?}"));
    }

    let mut c3 = Worst::new();
    for &(z0, value) in &ch.psi.loops {
        c3.see(circle_dist(value, ch.form.cap(z0)), || format!("loop at z = {z0} has value {value}, cap integral {}", frac1(ch.form.cap(z0))));
    }
    if let Some(&(z0, value)) = ch.psi.loops.first() {
        for _ in 0..trials {
            let z = rng.gen_range(-1.0..1.0);
            let extended = value + ch.form.integral(z, z0);
            c3.see(circle_dist(extended, ch.form.cap(z)), || format!("cap z ≥ {z} disagrees with the loop table"));
        }
    }

    let mut c4 = Worst::new();
    for _ in 0..trials {
        let p = random_unit(&mut rng);
        let x = axial(&mut rng);
        let a = one_param_cycle_value(ch, x, p).unwrap_or(f64::NAN);
        let b = one_param_via_sector(ch, x, p).unwrap_or(f64::NAN);
        c4.see(circle_dist(a, b), || format!("one-parameter cycle at p = {p:?}, X = {x:?}: {a} vs {b}"));
    }

    let mut c5 = Worst::new();
    let period = match ch.symmetry {
        Symmetry::Circle => 1.0,
        Symmetry::Su2 => 2.0,
    };
    for (name, w) in [("north", ch.psi.north_weight), ("south", ch.psi.south_weight)] {
        let scaled = w * period;
        c5.see((scaled - scaled.round()).abs(), || format!("inertia character at the {name} pole has weight {w}"));
    }

    let basic = (0..trials.max(1)).all(|_| norm(mu.value(random_unit(&mut rng))) <= tol);
    LieConditionReport {
        conditions: vec![
            c1.finish(1, "invariance and equivariance", tol),
            c2.finish(2, "contraction identity", 1e-6_f64.max(tol)),
            c3.finish(3, "cap integrals", tol),
            c4.finish(4, "one-parameter cycles", tol),
            c5.finish(5, "inertia characters", tol),
        ],
        basic,
    }
}

/// Which group a coadjoint element belongs to.
#[derive(Debug, Clone, PartialEq)]
pub enum CoadjointElement {
    /// `λ ∈ Lie(T)* ≅ ℝ` for `T = ℝ/ℤ`, exact.
    Torus(Q),
    Su2(Vec3),
}

#[derive(Debug, Clone)]
pub enum CoadjointCharacter {
    /// The orbit is a point; the character is `t ↦ weight·t`.
    Torus { weight: i64 },
    /// The orbit is a sphere of radius `|λ|`, modelled on the unit sphere.
    Sphere(Box<InvariantCharacter>),
}

#[derive(Debug, Clone)]
pub enum CoadjointOutcome {
    Exists(CoadjointCharacter),
    Obstructed { reason: String },
}

/// Decides prequantizability of a coadjoint orbit by whether `λ`, restricted
/// to the stabilizer algebra, integrates to a character of the stabilizer.
/// That lifting criterion is used as the complete decision rule.
pub fn coadjoint_character(lambda: &CoadjointElement) -> CoadjointOutcome {
    match lambda {
        CoadjointElement::Torus(l) => {
            if l.is_integer() {
                CoadjointOutcome::Exists(CoadjointCharacter::Torus { weight: l.to_integer() })
            } else {
                CoadjointOutcome::Obstructed { reason: format!("λ = {l} is not in the character lattice ℤ") }
            }
        }
        CoadjointElement::Su2(l) => {
            let r = norm(*l);
            if r == 0.0 {
                return CoadjointOutcome::Exists(CoadjointCharacter::Torus { weight: 0 });
            }
            let form = AxisymmetricForm::uniform(-2.0 * r);
            let total = form.total();
            if (total - total.round()).abs() > 1e-9 {
                return CoadjointOutcome::Obstructed { reason: format!("orbit form has total {total:.6}, not an integer") };
            }
            let form = AxisymmetricForm::uniform(total.round());
            let ch = invariant_character(&form, Symmetry::Su2, None).expect("uniform form");
            CoadjointOutcome::Exists(CoadjointCharacter::Sphere(Box::new(ch)))
        }
    }
}

/// Height `z` of the zero level of the axial moment, found by bisection.
/// When the moment vanishes identically the equator is returned.
pub fn zero_level(ch: &InvariantCharacter) -> Result<f64, Error> {
    let f = |z: f64| ch.moment.axial(z);
    let (mut a, mut b) = (-1.0_f64, 1.0_f64);
    let (fa, fb) = (f(a), f(b));
    if fa.abs() < 1e-14 && fb.abs() < 1e-14 {
        return Ok(0.0);
    }
    if fa * fb > 0.0 {
        return Err(Error::Numerical("the moment map has no zero on the sphere".into()));
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if f(a) * f(m) <= 0.0 {
            b = m;
        } else {
            a = m;
        }
        if b - a < 1e-15 {
            break;
        }
    }
    Ok(0.5 * (a + b))
}
