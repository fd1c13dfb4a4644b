//! Hybrid 1-cycles on the action groupoid: simplicial paths joined by arrows.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::complex::Chain;
use crate::error::Error;
use crate::groupoid::GroupAction;
use crate::rational::Q;

/// One piece of a hybrid cycle.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum Segment {
    /// A walk along edges of the base, listed by vertex.
    Path(Vec<usize>),
    /// The arrow `(g, source)` from `source` to `g·source`. With `sign = -1`
    /// it is traversed backwards, from `g·source` to `source`.
    Arrow { g: usize, source: usize, sign: i64 },
}

impl Segment {
    pub fn arrow(g: usize, source: usize) -> Self {
        Segment::Arrow { g, source, sign: 1 }
    }

    pub fn inverse_arrow(g: usize, source: usize) -> Self {
        Segment::Arrow { g, source, sign: -1 }
    }

    fn endpoints(&self, action: &GroupAction) -> (usize, usize) {
        match self {
            Segment::Path(vs) => (vs[0], *vs.last().unwrap()),
            Segment::Arrow { g, source, sign } => {
                let target = action.act(*g, *source);
                if *sign > 0 {
                    (*source, target)
                } else {
                    (target, *source)
                }
            }
        }
    }
}

/// A formal sum of segments whose boundary is expected to vanish.
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
pub struct GroupoidCycle {
    pub segments: Vec<Segment>,
}

impl GroupoidCycle {
    pub fn new(segments: Vec<Segment>) -> Self {
        GroupoidCycle { segments }
    }

    /// Appends `other` in order.
    pub fn then(mut self, other: &GroupoidCycle) -> Self {
        self.segments.extend(other.segments.iter().cloned());
        self
    }

    /// The same cycle traversed backwards.
    pub fn reversed(&self) -> Self {
        let segments = self
            .segments
            .iter()
            .rev()
            .map(|s| match s {
                Segment::Path(vs) => Segment::Path(vs.iter().rev().copied().collect()),
                Segment::Arrow { g, source, sign } => Segment::Arrow { g: *g, source: *source, sign: -sign },
            })
            .collect();
        GroupoidCycle { segments }
    }
}

/// Formal boundary `Σ (end − start)` of the segments, as a 0-chain on the base.
/// The result is zero exactly when the segments close up.
pub fn cycle_boundary(action: &GroupAction, cycle: &GroupoidCycle) -> Result<Chain, Error> {
    let n = action.complex().n_vertices();
    let mut coeffs = vec![0i64; n];
    for seg in &cycle.segments {
        validate_segment(action, seg)?;
        let (a, b) = seg.endpoints(action);
        coeffs[b] += 1;
        coeffs[a] -= 1;
    }
    Ok(Chain { degree: 0, coeffs })
}

fn validate_segment(action: &GroupAction, seg: &Segment) -> Result<(), Error> {
    let n = action.complex().n_vertices();
    match seg {
        Segment::Path(vs) => {
            if vs.is_empty() {
                return Err(Error::Validation("empty path segment".into()));
            }
            if let Some(v) = vs.iter().find(|&&v| v >= n) {
                return Err(Error::Validation(format!("path vertex {v} out of range")));
            }
            for w in vs.windows(2) {
                if action.complex().oriented_edge(w[0], w[1]).is_none() {
                    return Err(Error::Validation(format!("path step {} -> {} is not an edge", w[0], w[1])));
                }
            }
        }
        Segment::Arrow { g, source, sign } => {
            if *g >= action.group().order() || *source >= n || sign.abs() != 1 {
                return Err(Error::Validation(format!("malformed arrow ({g}, {source}, {sign})")));
            }
        }
    }
    Ok(())
}

/// Sum of `h` along a vertex walk.
pub fn path_value(action: &GroupAction, h: &[Q], walk: &[usize]) -> Q {
    let cx = action.complex();
    walk.windows(2)
        .map(|w| {
            let (i, s) = cx.oriented_edge(w[0], w[1]).expect("walk follows edges");
            h[i] * Q::from_integer(s)
        })
        .sum()
}

/// `Σ h(paths) + Σ ±f(arrows)` for a closed cycle. `f` is indexed by `g·|V| + v`.
pub fn evaluate(action: &GroupAction, h: &[Q], f: &[Q], cycle: &GroupoidCycle) -> Result<Q, Error> {
    if !cycle_boundary(action, cycle)?.is_zero() {
        return Err(Error::Validation("segments do not close up into a cycle".into()));
    }
    let nv = action.complex().n_vertices();
    let mut total = Q::zero();
    for seg in &cycle.segments {
        match seg {
            Segment::Path(vs) => total += path_value(action, h, vs),
            Segment::Arrow { g, source, sign } => total += f[g * nv + source] * Q::from_integer(*sign),
        }
    }
    Ok(total)
}

/// Role of a generator in the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum CycleKind {
    /// A loop in the base closing a non-tree edge.
    Loop,
    /// An arrow from a component root to itself.
    Inertia,
    /// A path-plus-arrow cycle joining two component roots.
    Closing,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Generator {
    pub kind: CycleKind,
    pub cycle: GroupoidCycle,
    /// The non-tree edge (for loops) or the arrow `(s, root)` the generator closes.
    pub anchor: Anchor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Anchor {
    Edge(usize),
    Arrow { g: usize, root: usize },
}

/// Spanning data for the base and the component graph, with the generating cycles.
///
/// Each connected component of the base gets a breadth-first spanning tree
/// rooted at its smallest vertex. Components are linked by arrows `(s, root)`
/// with `s` running over a generating set of the group; a second spanning tree
/// on that graph records a route from each orbit root to every component root.
#[derive(Debug, Clone)]
pub struct CycleBasis {
    pub generators: Vec<Generator>,
    pub group_generators: Vec<usize>,
    /// Component id of each vertex.
    pub component: Vec<usize>,
    /// Root vertex of each component.
    pub roots: Vec<usize>,
    /// Tree parent of each vertex, `None` at roots.
    pub parent: Vec<Option<usize>>,
    /// Vertices in breadth-first order, parents before children.
    pub bfs_order: Vec<usize>,
    pub tree_edge: Vec<bool>,
    /// Whether the arrow `(s, roots[c])` is a component-tree arrow, indexed `[s_pos][c]`.
    pub tree_arrow: Vec<Vec<bool>>,
    routes: Vec<GroupoidCycle>,
}

impl CycleBasis {
    /// Tree walk from the root of `v`'s component down to `v`.
    pub fn tree_path(&self, v: usize) -> Vec<usize> {
        let mut walk = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            walk.push(p);
            cur = p;
        }
        walk.reverse();
        walk
    }

    /// Tree walk from `a` to `b` through the component root.
    pub fn tree_walk(&self, a: usize, b: usize) -> Vec<usize> {
        let mut walk: Vec<usize> = self.tree_path(a).into_iter().rev().collect();
        walk.extend(self.tree_path(b).into_iter().skip(1));
        walk
    }

    /// Route from the orbit root to the root of component `c`.
    pub fn route(&self, c: usize) -> &GroupoidCycle {
        &self.routes[c]
    }
}

/// Builds the generating cycles of the groupoid's first homology.
pub fn cycle_generators(action: &GroupAction) -> CycleBasis {
    let cx = action.complex();
    let nv = cx.n_vertices();
    let mut adj = vec![Vec::new(); nv];
    for &[a, b] in cx.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut component = vec![usize::MAX; nv];
    let mut parent = vec![None; nv];
    let mut roots = Vec::new();
    let mut bfs_order = Vec::with_capacity(nv);
    let mut tree_edge = vec![false; cx.count(1)];
    for start in 0..nv {
        if component[start] != usize::MAX {
            continue;
        }
        let c = roots.len();
        roots.push(start);
        component[start] = c;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            bfs_order.push(u);
            for &w in &adj[u] {
                if component[w] == usize::MAX {
                    component[w] = c;
                    parent[w] = Some(u);
                    tree_edge[cx.oriented_edge(u, w).unwrap().0] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let group_generators = action.group().generators();
    let ncomp = roots.len();
    let mut tree_arrow = vec![vec![false; ncomp]; group_generators.len()];
    let mut routes: Vec<Option<GroupoidCycle>> = vec![None; ncomp];
    let mut basis = CycleBasis {
        generators: Vec::new(),
        group_generators: group_generators.clone(),
        component,
        roots,
        parent,
        bfs_order,
        tree_edge,
        tree_arrow: Vec::new(),
        routes: Vec::new(),
    };

    for (i, &[a, b]) in cx.edges().iter().enumerate() {
        if !basis.tree_edge[i] {
            let mut walk: Vec<usize> = basis.tree_path(a);
            walk.extend(basis.tree_path(b).into_iter().rev());
            basis.generators.push(Generator { kind: CycleKind::Loop, cycle: GroupoidCycle::new(vec![Segment::Path(walk)]), anchor: Anchor::Edge(i) });
        }
    }

    for start in 0..ncomp {
        if routes[start].is_some() {
            continue;
        }
        routes[start] = Some(GroupoidCycle::default());
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let r = basis.roots[c];
            for (si, &s) in group_generators.iter().enumerate() {
                let target = action.act(s, r);
                let c2 = basis.component[target];
                if routes[c2].is_none() {
                    tree_arrow[si][c] = true;
                    let route = routes[c]
                        .clone()
                        .unwrap()
                        .then(&GroupoidCycle::new(vec![Segment::arrow(s, r), Segment::Path(basis.tree_walk(target, basis.roots[c2]))]));
                    routes[c2] = Some(route);
                    queue.push_back(c2);
                }
            }
        }
    }
    basis.routes = routes.into_iter().map(|r| r.unwrap()).collect();

    for (si, &s) in group_generators.iter().enumerate() {
        for c in 0..ncomp {
            if tree_arrow[si][c] {
                continue;
            }
            let r = basis.roots[c];
            let target = action.act(s, r);
            let c2 = basis.component[target];
            let (kind, cycle) = if target == r {
                (CycleKind::Inertia, GroupoidCycle::new(vec![Segment::arrow(s, r)]))
            } else {
                let closing = GroupoidCycle::new(vec![Segment::arrow(s, r), Segment::Path(basis.tree_walk(target, basis.roots[c2]))]);
                let cycle = basis.routes[c].clone().then(&closing).then(&basis.routes[c2].reversed());
                (CycleKind::Closing, cycle)
            };
            basis.generators.push(Generator { kind, cycle, anchor: Anchor::Arrow { g: s, root: r } });
        }
    }
    basis.tree_arrow = tree_arrow;
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{octahedron_antipodal, octahedron_rotation, octahedron_trivial, point_action};
    use crate::rational::q;

    fn count(b: &CycleBasis, k: CycleKind) -> usize {
        b.generators.iter().filter(|g| g.kind == k).count()
    }

    #[test]
    fn generator_counts() {
        let b = cycle_generators(&point_action(2));
        assert_eq!(b.generators.len(), 1);
        assert_eq!(b.generators[0].kind, CycleKind::Inertia);

        let b = cycle_generators(&octahedron_trivial());
        assert_eq!((count(&b, CycleKind::Loop), b.generators.len()), (7, 7));

        let b = cycle_generators(&octahedron_rotation());
        assert_eq!((count(&b, CycleKind::Loop), count(&b, CycleKind::Inertia)), (7, 1));

        let b = cycle_generators(&octahedron_antipodal());
        assert_eq!(count(&b, CycleKind::Closing), 1);
    }

    #[test]
    fn every_generator_closes() {
        for act in [point_action(3), octahedron_trivial(), octahedron_rotation(), octahedron_antipodal()] {
            for g in cycle_generators(&act).generators {
                assert!(cycle_boundary(&act, &g.cycle).unwrap().is_zero(), "{g:?}");
            }
        }
    }

    #[test]
    fn quarter_equator_closed_by_rotation() {
        let act = octahedron_rotation();
        // edge 1 -> 2, then the inverse rotation arrow from 2 back to 1
        let c = GroupoidCycle::new(vec![Segment::Path(vec![1, 2]), Segment::inverse_arrow(1, 1)]);
        assert!(cycle_boundary(&act, &c).unwrap().is_zero());
    }

    #[test]
    fn equator_value() {
        let act = octahedron_trivial();
        let cx = act.complex();
        let mut h = vec![Q::zero(); cx.count(1)];
        for i in 0..4 {
            let (idx, s) = cx.oriented_edge(1 + i, 1 + (i + 1) % 4).unwrap();
            h[idx] = q(s, 8);
        }
        let c = GroupoidCycle::new(vec![Segment::Path(vec![1, 2, 3, 4, 1])]);
        assert_eq!(evaluate(&act, &h, &[Q::zero(); 6], &c).unwrap(), q(1, 2));
        let open = GroupoidCycle::new(vec![Segment::Path(vec![1, 2])]);
        assert!(evaluate(&act, &h, &[Q::zero(); 6], &open).is_err());
    }
}
