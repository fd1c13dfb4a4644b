//! Discrete equivariant circle bundles with connection and their cocycles.

use num_traits::Zero;

use crate::cycles::{evaluate, GroupoidCycle};
use crate::diffchar::{gauge_between, is_cocycle, DC21Cochain, Nerve};
use crate::error::Error;
use crate::groupoid::GroupAction;
use crate::rational::{centered, format_q, frac, q, qi, Phase, Q};

/// Holonomy presentation of an equivariant bundle with connection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiscreteBundle {
    /// Parallel transport along each edge in sorted orientation.
    pub connection: Vec<Phase>,
    /// Phase of the equivariant structure at `(g, v)`, indexed `g·|V| + v`.
    pub equivariance: Vec<Phase>,
    /// Integer curvature deficit on each face in sorted orientation.
    pub chern: Vec<i64>,
}

impl DiscreteBundle {
    pub fn trivial(act: &GroupAction) -> Self {
        let cx = act.complex();
        DiscreteBundle {
            connection: vec![Phase::zero(); cx.count(1)],
            equivariance: vec![Phase::zero(); act.group().order() * cx.count(0)],
            chern: vec![0; cx.count(2)],
        }
    }

    /// Checks shapes and the cocycle law `φ(g₂g₁, v) = φ(g₂, g₁·v) + φ(g₁, v)`.
    pub fn validate(&self, act: &GroupAction) -> Result<(), Error> {
        let cx = act.complex();
        let n = cx.count(0);
        if self.connection.len() != cx.count(1) || self.equivariance.len() != act.group().order() * n || self.chern.len() != cx.count(2) {
            return Err(Error::Validation("bundle shape does not match the action".into()));
        }
        let grp = act.group();
        for g2 in 0..grp.order() {
            for g1 in 0..grp.order() {
                for v in 0..n {
                    let lhs = self.equivariance[grp.mul(g2, g1) * n + v];
                    let rhs = self.equivariance[g2 * n + act.act(g1, v)] + self.equivariance[g1 * n + v];
                    if lhs != rhs {
                        return Err(Error::InvariantViolation(format!("cocycle law fails for phases at ({g2}, {g1}, {v}): {lhs} vs {rhs}")));
                    }
                }
            }
        }
        Ok(())
    }

    fn lifted_connection(&self) -> Vec<Q> {
        self.connection.iter().map(Phase::lift).collect()
    }

    fn lifted_equivariance(&self) -> Vec<Q> {
        self.equivariance.iter().map(Phase::lift).collect()
    }
}

/// `ω = d(lift A) + chern` on each face.
pub fn curvature(act: &GroupAction, bundle: &DiscreteBundle) -> Result<Vec<Q>, Error> {
    bundle.validate(act)?;
    let dh = act.complex().coboundary_matrix(1).apply(&bundle.lifted_connection());
    Ok(dh.iter().zip(&bundle.chern).map(|(d, c)| d + qi(*c)).collect())
}

/// Transport along paths plus equivariance phases along arrows, mod 1.
pub fn holonomy(act: &GroupAction, bundle: &DiscreteBundle, cycle: &GroupoidCycle) -> Result<Phase, Error> {
    bundle.validate(act)?;
    evaluate(act, &bundle.lifted_connection(), &bundle.lifted_equivariance(), cycle).map(Phase::new)
}

/// The cocycle of a bundle. `h` and `f` are the lifts of `A` and `φ` to
/// `[0, 1)`; `α` is the representative of `δh + df` in `[-1/2, 1/2)`.
pub fn dch(act: &GroupAction, bundle: &DiscreteBundle) -> Result<DC21Cochain, Error> {
    bundle.validate(act)?;
    let nv = Nerve::new(act);
    let h = bundle.lifted_connection();
    let f = bundle.lifted_equivariance();
    let dh = nv.d1.apply(&h);
    let raw_alpha: Vec<Q> = nv.delta_e0.apply(&h).iter().zip(nv.d_l1_0.apply(&f)).map(|(a, b)| a + b).collect();
    let alpha: Vec<Q> = raw_alpha.iter().map(centered).collect();
    let b = alpha.iter().zip(&raw_alpha).map(|(a, r)| (a - r).to_integer()).collect();
    let x = DC21Cochain { c: bundle.chern.clone(), omega: dh.iter().zip(&bundle.chern).map(|(d, c)| d + qi(*c)).collect(), h, b, f, alpha };
    let rep = is_cocycle(act, &x)?;
    if let Some(v) = rep.first() {
        return Err(Error::InvariantViolation(format!(
            "curvature deficits are incompatible with the action: {} fails at {}",
            v.equation, v.location
        )));
    }
    Ok(x)
}

/// The bundle of a cocycle: `A = h`, `φ = f` mod 1 and the integer deficits
/// `ω − d(lift A)`. Only cocycles whose `α` lies in `[-1/2, 1/2)` are accepted,
/// since that window is the one [`dch`] produces.
pub fn preq(act: &GroupAction, x: &DC21Cochain) -> Result<DiscreteBundle, Error> {
    let rep = is_cocycle(act, x)?;
    if let Some(v) = rep.first() {
        return Err(Error::NotCocycle(format!("{} fails at {}", v.equation, v.location)));
    }
    let ne = act.complex().count(1);
    let half = q(1, 2);
    if let Some((i, a)) = x.alpha.iter().enumerate().find(|(_, a)| **a < -half || **a >= half) {
        let [u, v] = act.complex().edges()[i % ne];
        return Err(Error::AlphaOutsideWindow { g: i / ne, edge: [u, v], value: format_q(a) });
    }
    let connection: Vec<Phase> = x.h.iter().map(|v| Phase::new(*v)).collect();
    let lifted: Vec<Q> = connection.iter().map(Phase::lift).collect();
    let dh = act.complex().coboundary_matrix(1).apply(&lifted);
    let chern = x.omega.iter().zip(&dh).map(|(w, d)| (w - d).to_integer()).collect();
    Ok(DiscreteBundle { connection, equivariance: x.f.iter().map(|v| Phase::new(*v)).collect(), chern })
}

/// First `(g, edge, α)` with nonzero `α`, if any.
pub fn basic_witness(act: &GroupAction, bundle: &DiscreteBundle) -> Result<Option<(usize, [usize; 2], Q)>, Error> {
    let x = dch(act, bundle)?;
    let ne = act.complex().count(1);
    Ok(x.alpha.iter().enumerate().find(|(_, a)| !a.is_zero()).map(|(i, a)| (i / ne, act.complex().edges()[i % ne], *a)))
}

/// A connection is basic when its two pullbacks to the arrows agree, i.e. `α ≡ 0`.
pub fn is_basic(act: &GroupAction, bundle: &DiscreteBundle) -> Result<bool, Error> {
    Ok(basic_witness(act, bundle)?.is_none())
}

/// Vertex-wise phase change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeTransformation {
    pub phase: Vec<Phase>,
}

impl GaugeTransformation {
    pub fn identity(act: &GroupAction) -> Self {
        GaugeTransformation { phase: vec![Phase::zero(); act.complex().n_vertices()] }
    }

    /// `A + dγ`, `φ(g, v) + γ(g·v) − γ(v)`, with deficits recomputed so the curvature is unchanged.
    pub fn apply(&self, act: &GroupAction, bundle: &DiscreteBundle) -> Result<DiscreteBundle, Error> {
        let omega = curvature(act, bundle)?;
        let cx = act.complex();
        let n = cx.n_vertices();
        if self.phase.len() != n {
            return Err(Error::Validation("gauge has the wrong number of vertices".into()));
        }
        let connection: Vec<Phase> = cx.edges().iter().zip(&bundle.connection).map(|(&[u, v], a)| *a + self.phase[v] - self.phase[u]).collect();
        let equivariance = (0..bundle.equivariance.len())
            .map(|i| {
                let (g, v) = (i / n, i % n);
                bundle.equivariance[i] + self.phase[act.act(g, v)] - self.phase[v]
            })
            .collect();
        let lifted: Vec<Q> = connection.iter().map(Phase::lift).collect();
        let dh = cx.coboundary_matrix(1).apply(&lifted);
        let chern = omega.iter().zip(&dh).map(|(w, d)| (w - d).to_integer()).collect();
        Ok(DiscreteBundle { connection, equivariance, chern })
    }
}

/// Finds an equivariant gauge carrying `b1` to `b2`, verified by applying it.
pub fn gauge_equivalent(act: &GroupAction, b1: &DiscreteBundle, b2: &DiscreteBundle) -> Result<Option<GaugeTransformation>, Error> {
    let x1 = dch(act, b1)?;
    let x2 = dch(act, b2)?;
    let nv = Nerve::new(act);
    let Some(gauge) = gauge_between(&nv, &x2, &x1) else { return Ok(None) };
    let gamma = GaugeTransformation { phase: gauge.t.iter().map(|t| Phase::new(-t)).collect() };
    Ok((gamma.apply(act, b1)? == *b2).then_some(gamma))
}

/// Moment data of a bundle over a finite group action.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FiniteMomentReport {
    /// The moment map vanishes identically: a finite group has no infinitesimal generators.
    pub moment_is_zero: bool,
    pub basic: bool,
    /// `A(g·e) = A(e) + φ(g, head) − φ(g, tail)` for every arrow and edge.
    pub invariant: bool,
}

pub fn finite_moment(act: &GroupAction, bundle: &DiscreteBundle) -> Result<FiniteMomentReport, Error> {
    let basic = is_basic(act, bundle)?;
    let n = act.complex().n_vertices();
    let mut invariant = true;
    for g in 0..act.group().order() {
        for (e, &[u, w]) in act.complex().edges().iter().enumerate() {
            let (ge, s) = act.act_simplex(g, 1, e);
            let moved = if s > 0 { bundle.connection[ge] } else { -bundle.connection[ge] };
            let expected = bundle.connection[e] + bundle.equivariance[g * n + w] - bundle.equivariance[g * n + u];
            invariant &= moved == expected;
        }
    }
    Ok(FiniteMomentReport { moment_is_zero: true, basic, invariant })
}

/// Total curvature `Σ orientation·ω` over the faces.
pub fn total_curvature(act: &GroupAction, omega: &[Q]) -> Q {
    let cx = act.complex();
    omega.iter().enumerate().map(|(i, w)| *w * qi(cx.face_orientation(i))).fold(Q::zero(), |a, b| a + b)
}

/// Fractional part of the holonomy around each face minus its curvature; zero for a valid bundle.
pub fn face_defects(act: &GroupAction, bundle: &DiscreteBundle) -> Result<Vec<Q>, Error> {
    let omega = curvature(act, bundle)?;
    let cx = act.complex();
    Ok(cx
        .faces()
        .iter()
        .zip(&omega)
        .map(|(&[a, b, c], w)| {
            let loop_ = GroupoidCycle::new(vec![crate::cycles::Segment::Path(vec![a, b, c, a])]);
            let hol = holonomy(act, bundle, &loop_).expect("face boundary is a cycle");
            frac(&(hol.lift() - w))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{octahedron_rotation, point_action};

    #[test]
    fn trivial_bundle_is_zero_cocycle() {
        let act = octahedron_rotation();
        let b = DiscreteBundle::trivial(&act);
        assert_eq!(dch(&act, &b).unwrap(), DC21Cochain::zero(&act));
        assert!(is_basic(&act, &b).unwrap());
        assert_eq!(preq(&act, &DC21Cochain::zero(&act)).unwrap(), b);
    }

    #[test]
    fn point_phase_roundtrip() {
        let act = point_action(2);
        let mut b = DiscreteBundle::trivial(&act);
        b.equivariance[1] = Phase::new(q(1, 2));
        let x = dch(&act, &b).unwrap();
        assert_eq!(x.f[1], q(1, 2));
        assert_eq!(preq(&act, &x).unwrap(), b);
        let loop_ = GroupoidCycle::new(vec![crate::cycles::Segment::arrow(1, 0)]);
        assert_eq!(holonomy(&act, &b, &loop_).unwrap(), Phase::new(q(1, 2)));
    }

    #[test]
    fn broken_cocycle_law_is_rejected() {
        let act = point_action(2);
        let mut b = DiscreteBundle::trivial(&act);
        b.equivariance[1] = Phase::new(q(1, 3));
        assert!(matches!(dch(&act, &b), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn gauge_recovers_itself() {
        let act = octahedron_rotation();
        let b = DiscreteBundle::trivial(&act);
        let gamma = GaugeTransformation { phase: (0..6).map(|v| Phase::new(q(v, 7))).collect() };
        let b2 = gamma.apply(&act, &b).unwrap();
        let found = gauge_equivalent(&act, &b, &b2).unwrap().expect("gauge exists");
        assert_eq!(found.apply(&act, &b).unwrap(), b2);
    }
}
