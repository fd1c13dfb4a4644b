//! Finite groups acting simplicially, the nerve of the action groupoid, and
//! the bigraded cochain operators living on it.
//!
//! A level-`n` nerve point is a tuple of arrows `[g_n, …, g_1]` together with
//! a simplex `x` of the base. Arrows are stored with `g_n` first, so the face
//! maps read
//!
//! * `∂_0` drops `g_n`,
//! * `∂_i` for `0 < i < n` composes `g_{n-i+1} g_{n-i}`,
//! * `∂_n` drops `g_1` and moves the base simplex to `g_1·x`.
//!
//! At level one this is `∂_0(g, x) = x` and `∂_1(g, x) = g·x`.

use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::linalg::IntMatrix;

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a table with `table[a][b] = a·b`.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Validation("group has no elements".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!("table row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Validation(format!("table entry {x} out of range")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Validation("table has no identity element".into()))?;
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::Validation(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Validation(format!("table is not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.to_string(), table, identity, inverses })
    }

    /// ℤ/n with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order zero");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(&format!("Z{n}"), table).expect("cyclic table is a group")
    }

    pub fn trivial() -> Self {
        let mut g = Self::cyclic(1);
        g.name = "trivial".into();
        g
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = self.mul(s, x);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// All homomorphisms to ℚ/ℤ, each listed as values in `[0, 1)` per element.
    ///
    /// Values on the greedy generators are searched over `(1/|G|)ℤ/ℤ`, which
    /// contains every character of a finite group.
    pub fn characters(&self) -> Vec<Vec<crate::rational::Q>> {
        use crate::rational::{frac, q, Q};
        let n = self.order() as i64;
        let gens = self.generators();
        let mut out = Vec::new();
        let total = (n as usize).pow(gens.len() as u32);
        for code in 0..total {
            let mut c = code;
            let gen_vals: Vec<Q> = gens
                .iter()
                .map(|_| {
                    let v = q((c % n as usize) as i64, n);
                    c /= n as usize;
                    v
                })
                .collect();
            let mut val: Vec<Option<Q>> = vec![None; self.order()];
            val[self.identity] = Some(Q::from_integer(0));
            let mut queue = std::collections::VecDeque::from([self.identity]);
            let mut ok = true;
            while let Some(x) = queue.pop_front() {
                for (s, vs) in gens.iter().zip(&gen_vals) {
                    let y = self.mul(*s, x);
                    let v = frac(&(val[x].unwrap() + vs));
                    match val[y] {
                        None => {
                            val[y] = Some(v);
                            queue.push_back(y);
                        }
                        Some(w) => ok &= w == v,
                    }
                }
            }
            if ok {
                out.push(val.into_iter().map(Option::unwrap).collect());
            }
        }
        out
    }

    /// Greedy generating set: scan elements in order, keeping each one not
    /// already in the span of those kept.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = BTreeSet::from([self.identity]);
        for a in 0..self.order() {
            if !span.contains(&a) {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }
}

/// Stabilizer of a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InertiaGroup {
    pub base_vertex: usize,
    pub elements: Vec<usize>,
}

/// A finite group acting on a simplicial complex by simplicial automorphisms.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: FiniteGroup,
    complex: SimplicialComplex,
    vertex_map: Vec<Vec<usize>>,
    edge_map: Vec<Vec<(usize, i64)>>,
    face_map: Vec<Vec<(usize, i64)>>,
}

impl GroupAction {
    /// Validates `vertex_map[g][v] = g·v` as a homomorphism into simplicial automorphisms.
    pub fn new(group: FiniteGroup, complex: SimplicialComplex, vertex_map: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = complex.n_vertices();
        if vertex_map.len() != group.order() {
            return Err(Error::Validation(format!("action lists {} group elements, group has {}", vertex_map.len(), group.order())));
        }
        for (g, row) in vertex_map.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!("action of {g} is defined on {} of {n} vertices", row.len())));
            }
            let mut seen = vec![false; n];
            for &w in row {
                if w >= n || std::mem::replace(&mut seen[w], true) {
                    return Err(Error::Validation(format!("action of {g} is not a permutation of the vertices")));
                }
            }
        }
        let e = group.identity();
        if let Some(v) = (0..n).find(|&v| vertex_map[e][v] != v) {
            return Err(Error::Validation(format!("identity moves vertex {v}")));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                let ab = group.mul(a, b);
                if let Some(v) = (0..n).find(|&v| vertex_map[ab][v] != vertex_map[a][vertex_map[b][v]]) {
                    return Err(Error::Validation(format!("({a}·{b})·{v} differs from {a}·({b}·{v})")));
                }
            }
        }
        let mut edge_map = Vec::with_capacity(group.order());
        let mut face_map = Vec::with_capacity(group.order());
        for (g, row) in vertex_map.iter().enumerate() {
            let mut em = Vec::with_capacity(complex.count(1));
            for &[a, b] in complex.edges() {
                em.push(complex.oriented_edge(row[a], row[b]).ok_or_else(|| Error::Validation(format!("{g} maps edge [{a} {b}] to a non-edge")))?);
            }
            let mut fm = Vec::with_capacity(complex.count(2));
            for &[a, b, c] in complex.faces() {
                fm.push(
                    complex
                        .oriented_face(row[a], row[b], row[c])
                        .ok_or_else(|| Error::Validation(format!("{g} maps face [{a} {b} {c}] to a non-face")))?,
                );
            }
            edge_map.push(em);
            face_map.push(fm);
        }
        Ok(GroupAction { group, complex, vertex_map, edge_map, face_map })
    }

    /// The trivial action of `group`.
    pub fn trivial(group: FiniteGroup, complex: SimplicialComplex) -> Self {
        let map = vec![(0..complex.n_vertices()).collect(); group.order()];
        GroupAction::new(group, complex, map).expect("trivial action is valid")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn vertex_map(&self) -> &[Vec<usize>] {
        &self.vertex_map
    }

    #[inline]
    pub fn act(&self, g: usize, v: usize) -> usize {
        self.vertex_map[g][v]
    }

    /// Image of simplex `i` of degree `k` under `g`, with orientation sign.
    #[inline]
    pub fn act_simplex(&self, g: usize, k: usize, i: usize) -> (usize, i64) {
        match k {
            0 => (self.vertex_map[g][i], 1),
            1 => self.edge_map[g][i],
            2 => self.face_map[g][i],
            _ => panic!("degree {k} out of range"),
        }
    }

    pub fn inertia(&self, v: usize) -> InertiaGroup {
        InertiaGroup { base_vertex: v, elements: (0..self.group.order()).filter(|&g| self.act(g, v) == v).collect() }
    }

    /// Orbit of `v`, sorted.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = (0..self.group.order()).map(|g| self.act(g, v)).collect();
        set.into_iter().collect()
    }

    /// Number of level-`n` arrow tuples, `|G|^n`.
    pub fn level_size(&self, n: usize) -> usize {
        self.group.order().pow(n as u32)
    }

    /// Arrow tuple `[g_n, …, g_1]` encoded by `idx`.
    pub fn decode(&self, n: usize, mut idx: usize) -> Vec<usize> {
        let k = self.group.order();
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = idx % k;
            idx /= k;
        }
        out
    }

    pub fn encode(&self, arrows: &[usize]) -> usize {
        arrows.iter().fold(0, |acc, &g| acc * self.group.order() + g)
    }

    /// Index of the level-`n` cell `(arrows, simplex i of degree k)`.
    pub fn cell_index(&self, k: usize, arrows: &[usize], i: usize) -> usize {
        self.encode(arrows) * self.complex.count(k) + i
    }

    /// Face `∂_i` of the nerve cell `(arrows, simplex s of degree k)`.
    /// Returns the new arrows, the new simplex index and the orientation sign.
    pub fn face(&self, i: usize, arrows: &[usize], k: usize, s: usize) -> Result<(Vec<usize>, usize, i64), Error> {
        let n = arrows.len();
        if n == 0 || i > n {
            return Err(Error::Validation(format!("face index {i} out of range for level {n}")));
        }
        if i == 0 {
            Ok((arrows[1..].to_vec(), s, 1))
        } else if i == n {
            let (t, sign) = self.act_simplex(arrows[n - 1], k, s);
            Ok((arrows[..n - 1].to_vec(), t, sign))
        } else {
            let mut out = arrows[..i - 1].to_vec();
            out.push(self.group.mul(arrows[i - 1], arrows[i]));
            out.extend_from_slice(&arrows[i + 1..]);
            Ok((out, s, 1))
        }
    }

    /// Matrix of `δ = Σ (-1)^i ∂_i^*` from level `n` to level `n+1`, simplicial degree `k`.
    pub fn delta_matrix(&self, n: usize, k: usize) -> IntMatrix {
        let cells = self.complex.count(k);
        let mut m = IntMatrix::zeros(self.level_size(n + 1) * cells, self.level_size(n) * cells);
        for a in 0..self.level_size(n + 1) {
            let arrows = self.decode(n + 1, a);
            for s in 0..cells {
                let row = a * cells + s;
                for i in 0..=n + 1 {
                    let (ar, t, sign) = self.face(i, &arrows, k, s).expect("face in range");
                    let col = self.encode(&ar) * cells + t;
                    let alt = if i % 2 == 0 { 1 } else { -1 };
                    m.add_to(row, col, alt * sign as i128);
                }
            }
        }
        m
    }

    /// Matrix of the simplicial coboundary `d_k` applied fibrewise on level `n`.
    pub fn d_matrix(&self, n: usize, k: usize) -> IntMatrix {
        let dk = self.complex.coboundary_matrix(k);
        let blocks = self.level_size(n);
        let mut m = IntMatrix::zeros(blocks * dk.rows(), blocks * dk.cols());
        for b in 0..blocks {
            m.place(b * dk.rows(), b * dk.cols(), &dk, 1);
        }
        m
    }

    /// Bidegrees `(p, q)` of total degree `t`: `p` simplicial, `q` nerve level.
    pub fn total_blocks(&self, t: usize) -> Vec<(usize, usize)> {
        (0..=t.min(2)).map(|p| (p, t - p)).collect()
    }

    /// Rank of the total cochain group in degree `t`.
    pub fn total_dim(&self, t: usize) -> usize {
        self.total_blocks(t).iter().map(|&(p, q)| self.level_size(q) * self.complex.count(p)).sum()
    }

    /// Matrix of the total differential `D = δ + (-1)^q d` from degree `t` to `t+1`.
    pub fn total_matrix(&self, t: usize) -> IntMatrix {
        let src = self.total_blocks(t);
        let dst = self.total_blocks(t + 1);
        let offsets = |blocks: &[(usize, usize)]| {
            let mut acc = 0;
            blocks
                .iter()
                .map(|&(p, q)| {
                    let o = acc;
                    acc += self.level_size(q) * self.complex.count(p);
                    ((p, q), o)
                })
                .collect::<Vec<_>>()
        };
        let src_off = offsets(&src);
        let dst_off = offsets(&dst);
        let find = |bd: (usize, usize)| dst_off.iter().find(|(b, _)| *b == bd).map(|(_, o)| *o);
        let mut m = IntMatrix::zeros(self.total_dim(t + 1), self.total_dim(t));
        for &((p, q), c0) in &src_off {
            if let Some(r0) = find((p, q + 1)) {
                m.place(r0, c0, &self.delta_matrix(q, p), 1);
            }
            if p < 2 {
                if let Some(r0) = find((p + 1, q)) {
                    let sign = if q % 2 == 0 { 1 } else { -1 };
                    m.place(r0, c0, &self.d_matrix(q, p), sign);
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{octahedron_rotation, point_action};

    #[test]
    fn level_one_faces_are_source_and_target() {
        let act = octahedron_rotation();
        let (a, v, s) = act.face(0, &[1], 0, 1).unwrap();
        assert_eq!((a, v, s), (vec![], 1, 1));
        let (_, v, _) = act.face(1, &[1], 0, 1).unwrap();
        assert_eq!(v, act.act(1, 1));
        let (_, v, _) = act.face(1, &[0], 0, 3).unwrap();
        assert_eq!(v, 3);
        assert!(act.face(2, &[1], 0, 1).is_err());
    }

    #[test]
    fn level_two_faces() {
        let act = octahedron_rotation();
        let g = act.group();
        let (a, _, _) = act.face(1, &[2, 3], 0, 1).unwrap();
        assert_eq!(a, vec![g.mul(2, 3)]);
        let (a, v, _) = act.face(2, &[2, 3], 0, 1).unwrap();
        assert_eq!((a, v), (vec![2], act.act(3, 1)));
        let (a, v, _) = act.face(0, &[2, 3], 0, 1).unwrap();
        assert_eq!((a, v), (vec![3], 1));
    }

    #[test]
    fn delta_on_point_z2() {
        let act = point_action(2);
        let m = act.delta_matrix(1, 0);
        // δf(σ, σ) = f(σ) - f(e) + f(σ)
        let f = [crate::rational::qi(0), crate::rational::q(1, 2)];
        let df = m.apply(&f);
        assert_eq!(df[act.encode(&[1, 1])], crate::rational::qi(1));
    }

    #[test]
    fn inertia_of_rotation() {
        let act = octahedron_rotation();
        assert_eq!(act.inertia(0).elements, vec![0, 1, 2, 3]);
        assert_eq!(act.inertia(1).elements, vec![0]);
    }

    #[test]
    fn greedy_generators() {
        assert_eq!(FiniteGroup::cyclic(4).generators(), vec![1]);
        assert!(FiniteGroup::trivial().generators().is_empty());
        assert_eq!(FiniteGroup::cyclic(4).characters().len(), 4);
        assert_eq!(FiniteGroup::trivial().characters().len(), 1);
    }

    #[test]
    fn rejects_non_homomorphism() {
        let cx = crate::fixtures::octahedron();
        let g = FiniteGroup::cyclic(2);
        let bad = vec![(0..6).collect(), vec![0, 2, 3, 4, 1, 5]];
        assert!(GroupAction::new(g, cx, bad).is_err());
    }
}
