//! Oriented simplicial 2-complexes, chains, cochains and the (co)boundary maps.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::IntMatrix;
use crate::rational::{frac, Q};

/// Coefficient ring of a cochain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coeff {
    Integer,
    Rational,
    /// ℝ/ℤ, stored as rationals in `[0, 1)`.
    Circle,
}

/// A finite simplicial complex of dimension at most 2.
///
/// Simplices are stored as sorted vertex tuples. For each face the declared
/// orientation is remembered as a sign relative to the sorted order, so the
/// fundamental chain of an oriented surface can be recovered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    name: String,
    n_vertices: usize,
    edges: Vec<[usize; 2]>,
    faces: Vec<[usize; 3]>,
    face_orientation: Vec<i64>,
    edge_index: HashMap<[usize; 2], usize>,
    face_index: HashMap<[usize; 3], usize>,
}

/// Sign of the permutation sorting `v`, together with the sorted tuple.
fn sort3(v: [usize; 3]) -> ([usize; 3], i64) {
    let mut s = v;
    let mut sign = 1;
    for i in 0..3 {
        for j in 0..2 - i {
            if s[j] > s[j + 1] {
                s.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    (s, sign)
}

impl SimplicialComplex {
    /// Builds the closure of the given simplices. Every listed simplex keeps
    /// its declared orientation; faces of faces are added automatically.
    pub fn new(name: &str, n_vertices: usize, simplices: &[Vec<usize>]) -> Result<Self, Error> {
        if n_vertices == 0 {
            return Err(Error::Validation("no vertices".into()));
        }
        let mut edges: Vec<[usize; 2]> = Vec::new();
        let mut faces: Vec<([usize; 3], i64)> = Vec::new();
        let mut seen_faces: HashMap<[usize; 3], i64> = HashMap::new();
        for s in simplices {
            if let Some(&v) = s.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::Validation(format!("vertex {v} out of range 0..{n_vertices}")));
            }
            match s.len() {
                1 => {}
                2 => {
                    if s[0] == s[1] {
                        return Err(Error::Validation(format!("degenerate edge {s:?}")));
                    }
                    edges.push([s[0].min(s[1]), s[0].max(s[1])]);
                }
                3 => {
                    let (sorted, sign) = sort3([s[0], s[1], s[2]]);
                    if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
                        return Err(Error::Validation(format!("degenerate face {s:?}")));
                    }
                    if seen_faces.insert(sorted, sign).is_some() {
                        return Err(Error::Validation(format!("duplicate face {s:?}")));
                    }
                    faces.push((sorted, sign));
                    edges.push([sorted[0], sorted[1]]);
                    edges.push([sorted[0], sorted[2]]);
                    edges.push([sorted[1], sorted[2]]);
                }
                n => return Err(Error::Validation(format!("simplex of {n} vertices; dimension is capped at 2"))),
            }
        }
        edges.sort_unstable();
        edges.dedup();
        faces.sort_unstable();
        let edge_index = edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let face_index = faces.iter().enumerate().map(|(i, (f, _))| (*f, i)).collect();
        Ok(SimplicialComplex {
            name: name.to_string(),
            n_vertices,
            edges,
            face_orientation: faces.iter().map(|(_, s)| *s).collect(),
            faces: faces.into_iter().map(|(f, _)| f).collect(),
            edge_index,
            face_index,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        if !self.faces.is_empty() {
            2
        } else if !self.edges.is_empty() {
            1
        } else {
            0
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    /// Declared orientation of face `i` relative to its sorted vertex order.
    pub fn face_orientation(&self, i: usize) -> i64 {
        self.face_orientation[i]
    }

    /// Number of simplices in degree `k`.
    pub fn count(&self, k: usize) -> usize {
        match k {
            0 => self.n_vertices,
            1 => self.edges.len(),
            2 => self.faces.len(),
            _ => 0,
        }
    }

    pub fn edge_index(&self, e: [usize; 2]) -> Option<usize> {
        self.edge_index.get(&e).copied()
    }

    pub fn face_index(&self, f: [usize; 3]) -> Option<usize> {
        self.face_index.get(&f).copied()
    }

    /// Index and orientation sign of the edge from `u` to `v`.
    pub fn oriented_edge(&self, u: usize, v: usize) -> Option<(usize, i64)> {
        if u < v {
            self.edge_index([u, v]).map(|i| (i, 1))
        } else {
            self.edge_index([v, u]).map(|i| (i, -1))
        }
    }

    /// Index and orientation sign of the face `(a, b, c)`.
    pub fn oriented_face(&self, a: usize, b: usize, c: usize) -> Option<(usize, i64)> {
        let (sorted, sign) = sort3([a, b, c]);
        self.face_index(sorted).map(|i| (i, sign))
    }

    /// Sorted vertex tuple of simplex `i` in degree `k`.
    pub fn simplex(&self, k: usize, i: usize) -> Vec<usize> {
        match k {
            0 => vec![i],
            1 => self.edges[i].to_vec(),
            2 => self.faces[i].to_vec(),
            _ => panic!("degree {k} out of range"),
        }
    }

    /// Looks up a sorted vertex tuple of any degree.
    pub fn simplex_index(&self, verts: &[usize]) -> Option<usize> {
        match verts.len() {
            1 => (verts[0] < self.n_vertices).then_some(verts[0]),
            2 => self.edge_index([verts[0], verts[1]]),
            3 => self.face_index([verts[0], verts[1], verts[2]]),
            _ => None,
        }
    }

    /// Matrix of `d_k : C^k → C^{k+1}` in the sorted bases.
    pub fn coboundary_matrix(&self, k: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.count(k + 1), self.count(k));
        match k {
            0 => {
                for (i, [a, b]) in self.edges.iter().enumerate() {
                    m.set(i, *b, 1);
                    m.set(i, *a, -1);
                }
            }
            1 => {
                for (i, [a, b, c]) in self.faces.iter().enumerate() {
                    m.set(i, self.edge_index[&[*b, *c]], 1);
                    m.set(i, self.edge_index[&[*a, *c]], -1);
                    m.set(i, self.edge_index[&[*a, *b]], 1);
                }
            }
            _ => {}
        }
        m
    }

    /// The chain `Σ orientation(f)·f` over all faces.
    pub fn fundamental_chain(&self) -> Chain {
        Chain { degree: 2, coeffs: self.face_orientation.clone() }
    }

    /// Connected components of the 1-skeleton, as a component id per vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n_vertices];
        let mut adj = vec![Vec::new(); self.n_vertices];
        for [a, b] in &self.edges {
            adj[*a].push(*b);
            adj[*b].push(*a);
        }
        let mut next = 0;
        for start in 0..self.n_vertices {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = next;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }
}

/// An integral chain, indexed by simplices in sorted orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub degree: usize,
    pub coeffs: Vec<i64>,
}

impl Chain {
    pub fn zero(cx: &SimplicialComplex, degree: usize) -> Self {
        Chain { degree, coeffs: vec![0; cx.count(degree)] }
    }

    /// The elementary chain on simplex `i` with the given sign.
    pub fn basis(cx: &SimplicialComplex, degree: usize, i: usize, sign: i64) -> Self {
        let mut c = Self::zero(cx, degree);
        c.coeffs[i] = sign;
        c
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(self.degree, other.degree);
        Chain { degree: self.degree, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }
}

/// A cochain with tagged coefficients, indexed by simplices in sorted orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub coeff: Coeff,
    values: Vec<Q>,
}

impl Cochain {
    pub fn zero(cx: &SimplicialComplex, degree: usize, coeff: Coeff) -> Self {
        Cochain { degree, coeff, values: vec![Q::zero(); cx.count(degree)] }
    }

    /// Builds a cochain, normalising ℝ/ℤ values into `[0, 1)`.
    pub fn new(degree: usize, coeff: Coeff, values: Vec<Q>) -> Result<Self, Error> {
        let values = match coeff {
            Coeff::Integer => {
                if let Some(v) = values.iter().find(|v| !v.is_integer()) {
                    return Err(Error::Validation(format!("non-integer value {v} in an integral cochain")));
                }
                values
            }
            Coeff::Rational => values,
            Coeff::Circle => values.iter().map(frac).collect(),
        };
        Ok(Cochain { degree, coeff, values })
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Q {
        self.values[i]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

/// Simplicial boundary. Degree-0 input is rejected.
pub fn boundary(cx: &SimplicialComplex, chain: &Chain) -> Result<Chain, Error> {
    if chain.degree == 0 || chain.degree > 2 {
        return Err(Error::Validation(format!("boundary of a degree-{} chain", chain.degree)));
    }
    let m = cx.coboundary_matrix(chain.degree - 1).transpose();
    Ok(Chain { degree: chain.degree - 1, coeffs: m.apply_int(&chain.coeffs) })
}

/// Simplicial coboundary, adjoint to [`boundary`]. Top-degree input is rejected.
pub fn coboundary(cx: &SimplicialComplex, cochain: &Cochain) -> Result<Cochain, Error> {
    if cochain.degree >= 2 {
        return Err(Error::Validation(format!("coboundary of a degree-{} cochain", cochain.degree)));
    }
    let out = cx.coboundary_matrix(cochain.degree).apply(&cochain.values);
    Cochain::new(cochain.degree + 1, cochain.coeff, out)
}

/// Evaluation of a cochain on an integral chain. ℝ/ℤ results are reduced mod 1.
pub fn pair(cochain: &Cochain, chain: &Chain) -> Result<Q, Error> {
    if cochain.degree != chain.degree {
        return Err(Error::Validation(format!("pairing a degree-{} cochain with a degree-{} chain", cochain.degree, chain.degree)));
    }
    let s: Q = cochain.values.iter().zip(&chain.coeffs).filter(|(_, &c)| c != 0).map(|(v, &c)| *v * Q::from_integer(c)).sum();
    Ok(if cochain.coeff == Coeff::Circle { frac(&s) } else { s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::octahedron;
    use crate::rational::{q, qi};

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::new("tri", 3, &[vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn triangle_boundary() {
        let cx = triangle();
        let b = boundary(&cx, &Chain::basis(&cx, 2, 0, 1)).unwrap();
        // edges sorted: [0,1], [0,2], [1,2]
        assert_eq!(b.coeffs, vec![1, -1, 1]);
        assert!(boundary(&cx, &b).unwrap().is_zero());
        assert!(boundary(&cx, &Chain::zero(&cx, 0)).is_err());
    }

    #[test]
    fn octahedron_surface_is_closed() {
        let cx = octahedron();
        assert_eq!((cx.count(0), cx.count(1), cx.count(2)), (6, 12, 8));
        assert!(boundary(&cx, &cx.fundamental_chain()).unwrap().is_zero());
    }

    #[test]
    fn third_per_edge_gives_unit_face() {
        let cx = triangle();
        // h oriented along ∂[012]: +1/3 on [01], [12], and -1/3 on [02]
        let h = Cochain::new(1, Coeff::Rational, vec![q(1, 3), q(-1, 3), q(1, 3)]).unwrap();
        assert_eq!(coboundary(&cx, &h).unwrap().values(), &[qi(1)]);
    }

    #[test]
    fn northern_hemisphere_pairing() {
        let cx = octahedron();
        let vals = (0..8).map(|i| q(cx.face_orientation(i), 8)).collect();
        let w = Cochain::new(2, Coeff::Rational, vals).unwrap();
        let mut north = Chain::zero(&cx, 2);
        for i in 1..=4 {
            let j = if i == 4 { 1 } else { i + 1 };
            let (idx, s) = cx.oriented_face(i, j, 0).unwrap();
            north.coeffs[idx] = s;
        }
        assert_eq!(pair(&w, &north).unwrap(), q(1, 2));
        assert!(pair(&w, &Chain::zero(&cx, 1)).is_err());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SimplicialComplex::new("e", 0, &[]).is_err());
        assert!(SimplicialComplex::new("x", 2, &[vec![0, 2]]).is_err());
        assert!(SimplicialComplex::new("x", 3, &[vec![0, 1, 2], vec![2, 1, 0]]).is_err());
        assert!(Cochain::new(0, Coeff::Integer, vec![q(1, 2)]).is_err());
    }
}
