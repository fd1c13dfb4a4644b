//! Small complexes and actions used by the examples, the tests and the CLI.

use crate::complex::SimplicialComplex;
use crate::groupoid::{FiniteGroup, GroupAction};

/// Index of the north pole of [`octahedron`].
pub const NORTH: usize = 0;
/// Index of the south pole of [`octahedron`].
pub const SOUTH: usize = 5;
/// Equator vertices of [`octahedron`], in rotation order.
pub const EQUATOR: [usize; 4] = [1, 2, 3, 4];

/// The octahedron with outward-oriented faces: vertex 0 is the north pole,
/// 1..=4 run around the equator, and 5 is the south pole.
pub fn octahedron() -> SimplicialComplex {
    let mut faces = Vec::new();
    for i in 0..4 {
        let a = EQUATOR[i];
        let b = EQUATOR[(i + 1) % 4];
        faces.push(vec![a, b, NORTH]);
        faces.push(vec![b, a, SOUTH]);
    }
    SimplicialComplex::new("octahedron", 6, &faces).expect("octahedron is well formed")
}

/// The minimal 7-vertex triangulation of the torus.
pub fn torus7() -> SimplicialComplex {
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 3) % 7, (i + 2) % 7]);
    }
    SimplicialComplex::new("torus7", 7, &faces).expect("torus is well formed")
}

pub fn point() -> SimplicialComplex {
    SimplicialComplex::new("point", 1, &[vec![0]]).expect("point is well formed")
}

/// ℤ/n acting on a point.
pub fn point_action(n: usize) -> GroupAction {
    GroupAction::trivial(FiniteGroup::cyclic(n), point())
}

/// The octahedron with the trivial group.
pub fn octahedron_trivial() -> GroupAction {
    GroupAction::trivial(FiniteGroup::trivial(), octahedron())
}

/// ℤ/4 rotating the octahedron about the polar axis, `1 → 2 → 3 → 4 → 1`.
pub fn octahedron_rotation() -> GroupAction {
    let map = (0..4).map(|k| (0..6).map(|v| if EQUATOR.contains(&v) { EQUATOR[(v - 1 + k) % 4] } else { v }).collect()).collect();
    GroupAction::new(FiniteGroup::cyclic(4), octahedron(), map).expect("rotation is simplicial")
}

/// ℤ/2 acting on the octahedron by the antipodal map.
pub fn octahedron_antipodal() -> GroupAction {
    let map = vec![(0..6).collect(), vec![5, 3, 4, 1, 2, 0]];
    GroupAction::new(FiniteGroup::cyclic(2), octahedron(), map).expect("antipodal map is simplicial")
}

/// The full permutation group of three letters acting on a single triangle.
/// Transpositions reverse the face's orientation.
pub fn triangle_s3() -> GroupAction {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed under composition");
    let table = perms.iter().map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
    let group = FiniteGroup::from_table("S3", table).expect("permutation table is a group");
    let cx = SimplicialComplex::new("triangle", 3, &[vec![0, 1, 2]]).expect("triangle is well formed");
    GroupAction::new(group, cx, perms.iter().map(|p| p.to_vec()).collect()).expect("permutations act simplicially")
}

/// ℤ/n rotating an n-gon (a circle with n edges, no faces).
pub fn polygon_rotation(n: usize) -> GroupAction {
    let edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    let cx = SimplicialComplex::new(&format!("polygon{n}"), n, &edges).expect("polygon is well formed");
    let map = (0..n).map(|k| (0..n).map(|v| (v + k) % n).collect()).collect();
    GroupAction::new(FiniteGroup::cyclic(n), cx, map).expect("rotation is simplicial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::boundary;

    #[test]
    fn torus_counts() {
        let t = torus7();
        assert_eq!((t.count(0), t.count(1), t.count(2)), (7, 21, 14));
        assert!(boundary(&t, &t.fundamental_chain()).unwrap().is_zero());
    }

    #[test]
    fn actions_are_valid() {
        assert_eq!(octahedron_rotation().orbit(1), vec![1, 2, 3, 4]);
        assert_eq!(octahedron_antipodal().orbit(0), vec![0, 5]);
        assert_eq!(point_action(3).group().order(), 3);
    }
}
