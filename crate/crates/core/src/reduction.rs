//! Restriction of characters and bundles to group-stable subcomplexes.

use num_traits::Zero;

use crate::complex::SimplicialComplex;
use crate::diffchar::{cohomologous, is_cocycle, DC21Cochain, GaugeCochain};
use crate::error::Error;
use crate::groupoid::GroupAction;
use crate::lie::{circle_dist, frac1, uniform_character, zero_level, Symmetry};
use crate::prequantize::{dch, DiscreteBundle};
use crate::rational::{format_q, q, Q};

/// The full subcomplex on an orbit-closed vertex set, with the induced action.
///
/// Vertices are relabelled `0..k` in increasing order of their parent labels,
/// which keeps sorted tuples sorted and therefore preserves orientations.
#[derive(Debug, Clone)]
pub struct StableSubcomplex {
    pub vertices: Vec<usize>,
    pub action: GroupAction,
    /// Parent index of each edge of the subcomplex.
    pub edge_parent: Vec<usize>,
    /// Parent index of each face of the subcomplex.
    pub face_parent: Vec<usize>,
}

/// Validates orbit closure and builds the induced subcomplex and action.
pub fn stable_subcomplex(parent: &GroupAction, subset: &[usize]) -> Result<StableSubcomplex, Error> {
    let pcx = parent.complex();
    let mut vertices = subset.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    if vertices.is_empty() {
        return Err(Error::Validation("no vertices".into()));
    }
    let mut local = vec![None; pcx.n_vertices()];
    for (i, &v) in vertices.iter().enumerate() {
        if v >= pcx.n_vertices() {
            return Err(Error::Validation(format!("vertex {v} out of range")));
        }
        local[v] = Some(i);
    }
    for &v in &vertices {
        for g in 0..parent.group().order() {
            let w = parent.act(g, v);
            if local[w].is_none() {
                return Err(Error::NotOrbitClosed { g, v, image: w });
            }
        }
    }
    let mut simplices: Vec<Vec<usize>> = (0..vertices.len()).map(|i| vec![i]).collect();
    for &[a, b] in pcx.edges() {
        if let (Some(x), Some(y)) = (local[a], local[b]) {
            simplices.push(vec![x, y]);
        }
    }
    for (i, &[a, b, c]) in pcx.faces().iter().enumerate() {
        if let (Some(x), Some(y), Some(z)) = (local[a], local[b], local[c]) {
            if pcx.face_orientation(i) > 0 {
                simplices.push(vec![x, y, z]);
            } else {
                simplices.push(vec![y, x, z]);
            }
        }
    }
    let cx = SimplicialComplex::new(&format!("{}-sub", pcx.name()), vertices.len(), &simplices)?;
    let edge_parent = cx.edges().iter().map(|&[a, b]| pcx.edge_index([vertices[a], vertices[b]]).unwrap()).collect();
    let face_parent = cx.faces().iter().map(|&[a, b, c]| pcx.face_index([vertices[a], vertices[b], vertices[c]]).unwrap()).collect();
    let vertex_map = (0..parent.group().order()).map(|g| vertices.iter().map(|&v| local[parent.act(g, v)].unwrap()).collect()).collect();
    let action = GroupAction::new(parent.group().clone(), cx, vertex_map)?;
    Ok(StableSubcomplex { vertices, action, edge_parent, face_parent })
}

impl StableSubcomplex {
    fn pick<T: Copy>(&self, values: &[T], parent_count: usize, local: &[usize]) -> Vec<T> {
        let groups = values.len() / parent_count.max(1);
        let mut out = Vec::with_capacity(groups * local.len());
        for g in 0..groups {
            out.extend(local.iter().map(|&p| values[g * parent_count + p]));
        }
        out
    }

    fn restrict_raw(&self, parent: &GroupAction, x: &DC21Cochain) -> DC21Cochain {
        let pcx = parent.complex();
        let (ne, nf, nv) = (pcx.count(1), pcx.count(2), pcx.count(0));
        DC21Cochain {
            c: self.pick(&x.c, nf, &self.face_parent),
            h: self.pick(&x.h, ne, &self.edge_parent),
            omega: self.pick(&x.omega, nf, &self.face_parent),
            b: self.pick(&x.b, ne, &self.edge_parent),
            f: self.pick(&x.f, nv, &self.vertices),
            alpha: self.pick(&x.alpha, ne, &self.edge_parent),
        }
    }

    /// Restricts a bundle to the subcomplex.
    pub fn restrict_bundle(&self, parent: &GroupAction, b: &DiscreteBundle) -> Result<DiscreteBundle, Error> {
        b.validate(parent)?;
        let pcx = parent.complex();
        Ok(DiscreteBundle {
            connection: self.pick(&b.connection, pcx.count(1), &self.edge_parent),
            equivariance: self.pick(&b.equivariance, pcx.count(0), &self.vertices),
            chern: self.pick(&b.chern, pcx.count(2), &self.face_parent),
        })
    }

    /// Restricts a gauge witness; cohomologous inputs restrict to cohomologous outputs.
    pub fn restrict_gauge(&self, parent: &GroupAction, g: &GaugeCochain) -> GaugeCochain {
        let pcx = parent.complex();
        GaugeCochain { a: self.pick(&g.a, pcx.count(1), &self.edge_parent), t: self.pick(&g.t, pcx.count(0), &self.vertices) }
    }
}

/// Whether `α` vanishes on every rectangle `(g, e)` with `e` an edge of the subcomplex.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct VanishingReport {
    pub vanishes: bool,
    /// `(g, parent edge, α)` of the first nonzero rectangle.
    pub witness: Option<(usize, [usize; 2], String)>,
}

pub fn in_vanishing_subcategory(parent: &GroupAction, x: &DC21Cochain, sub: &StableSubcomplex) -> Result<VanishingReport, Error> {
    x.check_shape(parent)?;
    let ne = parent.complex().count(1);
    for g in 0..parent.group().order() {
        for &e in &sub.edge_parent {
            let a = x.alpha[g * ne + e];
            if !a.is_zero() {
                return Ok(VanishingReport { vanishes: false, witness: Some((g, parent.complex().edges()[e], format_q(&a))) });
            }
        }
    }
    Ok(VanishingReport { vanishes: true, witness: None })
}

pub fn bundle_in_vanishing_subcategory(parent: &GroupAction, b: &DiscreteBundle, sub: &StableSubcomplex) -> Result<VanishingReport, Error> {
    in_vanishing_subcategory(parent, &dch(parent, b)?, sub)
}

/// A cocycle on the reduced groupoid with vanishing `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedCharacter {
    pub cocycle: DC21Cochain,
}

/// Restricts a cocycle whose `α` vanishes over the subcomplex.
pub fn restrict(parent: &GroupAction, x: &DC21Cochain, sub: &StableSubcomplex) -> Result<ReducedCharacter, Error> {
    let rep = in_vanishing_subcategory(parent, x, sub)?;
    if let Some((g, e, a)) = rep.witness {
        return Err(Error::Precondition(format!("α = {a} on arrow {g} over edge {e:?}")));
    }
    let y = sub.restrict_raw(parent, x);
    let check = is_cocycle(&sub.action, &y)?;
    if let Some(v) = check.first() {
        return Err(Error::NotCocycle(format!("restriction: {} fails at {}", v.equation, v.location)));
    }
    debug_assert!(y.alpha.iter().all(Q::is_zero));
    Ok(ReducedCharacter { cocycle: y })
}

/// Outcome of comparing the two routes around the reduction square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommuteReport {
    /// Restriction of the bundle's cocycle.
    pub restricted_cocycle: DC21Cochain,
    /// Cocycle of the restricted bundle.
    pub cocycle_of_restriction: DC21Cochain,
    pub witness: Option<GaugeCochain>,
    /// The witness was re-applied and reproduced the first route exactly.
    pub verified: bool,
}

/// Compares `restrict(dch(B))` with `dch(restrict(B))`.
pub fn commute_check(parent: &GroupAction, bundle: &DiscreteBundle, sub: &StableSubcomplex) -> Result<CommuteReport, Error> {
    let x = dch(parent, bundle)?;
    let first = restrict(parent, &x, sub)?.cocycle;
    let second = dch(&sub.action, &sub.restrict_bundle(parent, bundle)?)?;
    let witness = cohomologous(&sub.action, &first, &second)?;
    let verified = witness.as_ref().is_some_and(|w| second.apply_gauge(&sub.action, w) == first.normalized(&sub.action));
    Ok(CommuteReport { restricted_cocycle: first, cocycle_of_restriction: second, witness, verified })
}

/// Reduction of the SU(2) sphere of total `k` by the maximal torus.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct TorusReduction {
    pub k: i64,
    /// Height of the zero level of the torus moment map.
    pub zero_level: f64,
    /// Numerical value of the residual character at `−1`.
    pub value: f64,
    /// The value certified as `0` or `1/2`.
    #[serde(serialize_with = "crate::report::ser_q")]
    pub character: Q,
}

/// Evaluates the residual character of `{±1}` on the torus-reduced sphere.
///
/// The zero level of `μ_T(z) = −(k/2)z` is located by bisection. At a point
/// `p` there, `−1 = e^{ẑ}` and the value is `∫_{z ≥ z₀} ω − ⟨μ(p), ẑ⟩ mod 1`.
pub fn reduce_su2_example(k: i64) -> Result<TorusReduction, Error> {
    let ch = uniform_character(k, Symmetry::Su2);
    let z0 = zero_level(&ch)?;
    let p = [(1.0 - z0 * z0).max(0.0).sqrt(), 0.0, z0];
    let value = frac1(ch.form.cap(z0) - ch.moment.pairing(p, [0.0, 0.0, 1.0]));
    let character = if circle_dist(value, 0.0) < 1e-9 {
        q(0, 1)
    } else if circle_dist(value, 0.5) < 1e-9 {
        q(1, 2)
    } else {
        return Err(Error::Numerical(format!("character value {value} is neither 0 nor 1/2")));
    };
    Ok(TorusReduction { k, zero_level: z0, value, character })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{evaluate, GroupoidCycle, Segment};
    use crate::fixtures::{octahedron_rotation, EQUATOR, NORTH};
    use crate::generate::{random_basic_bundle, uniform_bundle};
    use crate::rational::Phase;
    use rand::SeedableRng;

    #[test]
    fn torus_reduction_parity() {
        for k in 0..6 {
            let r = reduce_su2_example(k).unwrap();
            assert_eq!(r.character, q(k.rem_euclid(2), 2));
            assert!(r.zero_level.abs() < 1e-12);
        }
    }

    #[test]
    fn orbit_closure() {
        let act = octahedron_rotation();
        let sq = stable_subcomplex(&act, &EQUATOR).unwrap();
        assert_eq!((sq.action.complex().count(0), sq.action.complex().count(1)), (4, 4));
        assert!(stable_subcomplex(&act, &[NORTH]).is_ok());
        match stable_subcomplex(&act, &[1]) {
            Err(Error::NotOrbitClosed { g, v, image }) => assert_eq!((g, v, image), (1, 1, 2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn equator_holonomy_survives_restriction() {
        let act = octahedron_rotation();
        let b = uniform_bundle(&act, 1).unwrap();
        let x = dch(&act, &b).unwrap();
        let sq = stable_subcomplex(&act, &EQUATOR).unwrap();
        let r = restrict(&act, &x, &sq).unwrap();
        let up = GroupoidCycle::new(vec![Segment::Path(vec![1, 2, 3, 4, 1])]);
        let down = GroupoidCycle::new(vec![Segment::Path(vec![0, 1, 2, 3, 0])]);
        let before = Phase::new(evaluate(&act, &x.h, &x.f, &up).unwrap());
        let after = Phase::new(evaluate(&sq.action, &r.cocycle.h, &r.cocycle.f, &down).unwrap());
        assert_eq!(before, after);
    }

    #[test]
    fn random_basic_bundles_commute() {
        let act = octahedron_rotation();
        let sq = stable_subcomplex(&act, &EQUATOR).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let b = random_basic_bundle(&act, &mut rng).unwrap();
            assert!(commute_check(&act, &b, &sq).unwrap().verified);
        }
    }
}
