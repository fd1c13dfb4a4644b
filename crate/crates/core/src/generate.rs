//! Seeded random cocycles and bundles for property checks and demonstrations.

use rand::Rng;

use crate::diffchar::{kostant_section, DC21Cochain, KostantOutcome, Nerve, Theta};
use crate::error::Error;
use crate::groupoid::GroupAction;
use crate::prequantize::{dch, preq, DiscreteBundle, GaugeTransformation};
use crate::rational::{frac, q, qi, Phase, Q};

/// Propagates a value chosen on orbit representatives to whole orbits of
/// degree-`k` simplices, respecting orientation. Returns `None` when some
/// stabilizer reverses a simplex and the chosen value is not fixed by negation.
fn orbit_constant<T: Copy + PartialEq + std::ops::Neg<Output = T>>(
    act: &GroupAction,
    k: usize,
    mut pick: impl FnMut() -> T,
    zero: T,
) -> Option<Vec<T>> {
    let count = act.complex().count(k);
    let mut out: Vec<Option<T>> = vec![None; count];
    for s in 0..count {
        if out[s].is_some() {
            continue;
        }
        let v = pick();
        let mut orbit = Vec::new();
        let mut ok = true;
        for g in 0..act.group().order() {
            let (t, sign) = act.act_simplex(g, k, s);
            let val = if sign > 0 { v } else { -v };
            match out[t] {
                Some(w) if w != val => ok = false,
                Some(_) => {}
                None => {
                    out[t] = Some(val);
                    orbit.push(t);
                }
            }
        }
        if !ok {
            if v == zero {
                return None;
            }
            for t in orbit {
                out[t] = Some(zero);
            }
        }
    }
    out.into_iter().collect()
}

fn small(rng: &mut impl Rng, max_numer: i64, denom: i64) -> Q {
    q(rng.gen_range(-max_numer..=max_numer), denom)
}

/// A random cocycle with `α` strictly inside `(-1/2, 1/2)`.
///
/// It is assembled from a small connection `h`, a small vertex function `t`,
/// a character `χ` of the group and an invariant integer class `c`:
/// `f = δt + χ + n`, `ω = dh + c`, `α = δ(h + dt)`.
pub fn random_cocycle(act: &GroupAction, rng: &mut impl Rng) -> DC21Cochain {
    let nv = Nerve::new(act);
    let cx = act.complex();
    let chars = act.group().characters();
    let chi = &chars[rng.gen_range(0..chars.len())];
    let h: Vec<Q> = (0..cx.count(1)).map(|_| small(rng, 3, 48)).collect();
    let t: Vec<Q> = (0..cx.count(0)).map(|_| small(rng, 2, 48)).collect();
    let c: Vec<i64> = orbit_constant(act, 2, || rng.gen_range(-1i64..=1), 0).expect("zero is always admissible");
    let n_vertices = cx.count(0);
    let noise: Vec<i64> = (0..act.group().order() * n_vertices).map(|_| rng.gen_range(-1..=1)).collect();
    let delta_t = nv.delta_v0.apply(&t);
    let f: Vec<Q> = (0..delta_t.len()).map(|i| delta_t[i] + chi[i / n_vertices] + qi(noise[i])).collect();
    let dh = nv.d1.apply(&h);
    let omega = dh.iter().zip(&c).map(|(d, c)| d + qi(*c)).collect();
    let smooth: Vec<Q> = h.iter().zip(nv.d0.apply(&t)).map(|(a, b)| a + b).collect();
    let alpha = nv.delta_e0.apply(&smooth);
    let b = nv.d_l1_0.apply_int(&noise).into_iter().map(|x| -x).collect();
    DC21Cochain { c, h, omega, b, f, alpha }
}

pub fn random_gauge(act: &GroupAction, rng: &mut impl Rng) -> GaugeTransformation {
    GaugeTransformation { phase: (0..act.complex().n_vertices()).map(|_| Phase::new(q(rng.gen_range(0..96), 96))).collect() }
}

/// A random bundle: the bundle of [`random_cocycle`] moved by a random gauge.
pub fn random_bundle(act: &GroupAction, rng: &mut impl Rng) -> DiscreteBundle {
    let x = random_cocycle(act, rng);
    let b = preq(act, &x).expect("generated cocycles lie in the α window");
    random_gauge(act, rng).apply(act, &b).expect("gauge preserves validity")
}

/// A random basic bundle: orbit-constant connection, constant equivariance
/// phases given by a character, invariant curvature, then a random gauge.
pub fn random_basic_bundle(act: &GroupAction, rng: &mut impl Rng) -> Result<DiscreteBundle, Error> {
    let cx = act.complex();
    let chars = act.group().characters();
    let chi = chars[rng.gen_range(0..chars.len())].clone();
    let connection: Vec<Phase> = orbit_constant(act, 1, || Phase::new(q(rng.gen_range(0..24), 24)), Phase::zero())
        .ok_or_else(|| Error::Precondition("an edge is reversed by its stabilizer".into()))?;
    let h: Vec<Q> = connection.iter().map(Phase::lift).collect();
    let dh = cx.coboundary_matrix(1).apply(&h);
    let mut omega: Vec<Option<Q>> = vec![None; cx.count(2)];
    for s in 0..cx.count(2) {
        if omega[s].is_some() {
            continue;
        }
        let w = dh[s] + qi(rng.gen_range(-1..=1));
        for g in 0..act.group().order() {
            let (t, sign) = act.act_simplex(g, 2, s);
            let val = w * qi(sign);
            match omega[t] {
                Some(x) if x != val => return Err(Error::Precondition("a face is reversed by its stabilizer".into())),
                _ => omega[t] = Some(val),
            }
        }
    }
    let chern: Vec<i64> = omega.iter().zip(&dh).map(|(w, d)| (w.unwrap() - d).to_integer()).collect();
    let n = cx.n_vertices();
    let equivariance = (0..act.group().order() * n).map(|i| Phase::new(chi[i / n])).collect();
    let bundle = DiscreteBundle { connection, equivariance, chern };
    dch(act, &bundle)?;
    random_gauge(act, rng).apply(act, &bundle)
}

/// `ω = total / #faces` on every face in its declared orientation, with `α = 0`.
pub fn uniform_theta(act: &GroupAction, total: Q) -> Theta {
    let cx = act.complex();
    let per_face = total / qi(cx.count(2) as i64);
    Theta {
        omega: (0..cx.count(2)).map(|i| per_face * qi(cx.face_orientation(i))).collect(),
        alpha: vec![Q::from_integer(0); act.group().order() * cx.count(1)],
    }
}

/// The bundle with uniform curvature of the given integral total, built from
/// a section of the form map.
pub fn uniform_bundle(act: &GroupAction, total: i64) -> Result<DiscreteBundle, Error> {
    match kostant_section(&uniform_theta(act, qi(total)), act)? {
        KostantOutcome::Section(x) => preq(act, &x),
        KostantOutcome::Obstructed { period, .. } => Err(Error::Precondition(format!("uniform form has non-integral period {}", frac(&period)))),
    }
}
