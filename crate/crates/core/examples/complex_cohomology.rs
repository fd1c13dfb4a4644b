//! Integral cohomology of the octahedron and the 7-vertex torus from their
//! coboundary matrices, plus a Stokes check on random cochains.

use diffchar::complex::{boundary, coboundary, pair, Chain, Cochain, Coeff, SimplicialComplex};
use diffchar::fixtures::{octahedron, torus7};
use diffchar::linalg::{cohomology, smith_normal_form, CohomologyCoeff};
use diffchar::rational::q;

fn report(cx: &SimplicialComplex) {
    let ds = [cx.coboundary_matrix(0), cx.coboundary_matrix(1)];
    let dims = [cx.count(0), cx.count(1), cx.count(2)];
    println!("{} ({} vertices, {} edges, {} faces)", cx.name(), dims[0], dims[1], dims[2]);
    for n in 0..3 {
        let z = cohomology(&ds, &dims, n, CohomologyCoeff::Integer).expect("coboundaries compose to zero");
        let circle = cohomology(&ds, &dims, n, CohomologyCoeff::Circle).expect("coboundaries compose to zero");
        println!("  H^{n}(Z) = {:<6}  H^{n}(R/Z) = {circle}", z.to_string());
    }
    let snf = smith_normal_form(&ds[1]);
    println!("  invariant factors of d1: {:?}", snf.diagonal());

    let h = Cochain::new(1, Coeff::Rational, (0..dims[1]).map(|i| q(i as i64 % 5 - 2, 3)).collect()).unwrap();
    let patch = Chain::basis(cx, 2, 0, 1).add(&Chain::basis(cx, 2, 1, 2));
    let flux = pair(&coboundary(cx, &h).unwrap(), &patch).unwrap();
    let edge = pair(&h, &boundary(cx, &patch).unwrap()).unwrap();
    let closed = pair(&coboundary(cx, &h).unwrap(), &cx.fundamental_chain()).unwrap();
    println!("  Stokes on a two-face patch: <dh, S> = {flux}, <h, dS> = {edge}; on the whole surface {closed}");
}

fn main() {
    report(&octahedron());
    report(&torus7());
}
