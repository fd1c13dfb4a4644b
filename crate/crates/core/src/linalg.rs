//! Dense integer matrices, Smith normal form, and exact solves modulo ℤ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, Signed, ToPrimitive, Zero};

use crate::rational::{frac, Q};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_to(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        out.add_to(i, j, a.checked_mul(b).expect("integer overflow in product"));
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product over ℚ.
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (j, xj) in x.iter().enumerate() {
                    let a = self.get(i, j);
                    if a != 0 && !xj.is_zero() {
                        acc += *xj * Q::from_integer(a as i64);
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix-vector product over ℤ.
    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let s: i128 = x.iter().enumerate().map(|(j, &v)| self.get(i, j) * v as i128).sum();
                i64::try_from(s).expect("integer overflow")
            })
            .collect()
    }

    /// Stacks `blocks` vertically; all blocks must share the column count.
    pub fn vstack(blocks: &[IntMatrix]) -> IntMatrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = IntMatrix::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            for i in 0..b.rows {
                for j in 0..cols {
                    out.set(r0 + i, j, b.get(i, j));
                }
            }
            r0 += b.rows;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`, scaled by `sign`.
    pub fn place(&mut self, r0: usize, c0: usize, block: &IntMatrix, sign: i128) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                let v = block.get(i, j);
                if v != 0 {
                    self.set(r0 + i, c0 + j, sign * v);
                }
            }
        }
    }
}

/// Entry types the elimination runs over: `i128` with overflow detection,
/// and `BigInt` as the exact fallback.
trait Entry: Clone + PartialEq + fmt::Debug + Integer + Signed + CheckedAdd + CheckedMul {}
impl<T: Clone + PartialEq + fmt::Debug + Integer + Signed + CheckedAdd + CheckedMul> Entry for T {}

#[derive(Debug)]
struct Overflow;

/// Dense row-major working matrix for the elimination.
#[derive(Debug, Clone)]
struct Grid<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

fn lin<T: Entry>(s: &T, a: &T, u: &T, b: &T) -> Result<T, Overflow> {
    let sa = s.checked_mul(a).ok_or(Overflow)?;
    let ub = u.checked_mul(b).ok_or(Overflow)?;
    sa.checked_add(&ub).ok_or(Overflow)
}

impl<T: Entry> Grid<T> {
    fn from_int(m: &IntMatrix, conv: impl Fn(i128) -> T) -> Self {
        Grid { rows: m.rows, cols: m.cols, data: m.data.iter().map(|&v| conv(v)).collect() }
    }

    fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Grid { rows: n, cols: n, data }
    }

    fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `(row a, row b) ← (s·a + u·b, x·a + y·b)`.
    fn mix_rows(&mut self, a: usize, b: usize, [s, u, x, y]: &[T; 4]) -> Result<(), Overflow> {
        for j in 0..self.cols {
            let (va, vb) = (self.at(a, j).clone(), self.at(b, j).clone());
            if !(va.is_zero() && vb.is_zero()) {
                self.data[a * self.cols + j] = lin(s, &va, u, &vb)?;
                self.data[b * self.cols + j] = lin(x, &va, y, &vb)?;
            }
        }
        Ok(())
    }

    /// `(col a, col b) ← (s·a + u·b, x·a + y·b)`.
    fn mix_cols(&mut self, a: usize, b: usize, [s, u, x, y]: &[T; 4]) -> Result<(), Overflow> {
        for i in 0..self.rows {
            let (va, vb) = (self.at(i, a).clone(), self.at(i, b).clone());
            if !(va.is_zero() && vb.is_zero()) {
                self.data[i * self.cols + a] = lin(s, &va, u, &vb)?;
                self.data[i * self.cols + b] = lin(x, &va, y, &vb)?;
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.at(r, j).clone();
            self.data[r * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.at(i, c).clone();
            self.data[i * self.cols + c] = v;
        }
    }

    fn to_int(&self) -> Option<IntMatrix>
    where
        T: ToPrimitive,
    {
        let data = self.data.iter().map(|v| v.to_i128()).collect::<Option<Vec<_>>>()?;
        Some(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }
}

/// The inverse of the 2×2 block `[[s, u], [x, y]]` of determinant 1, in the
/// layout used to update the inverse transform.
fn adjugate<T: Entry>([s, u, x, y]: &[T; 4]) -> [T; 4] {
    [y.clone(), -x.clone(), -u.clone(), s.clone()]
}

/// Optional bookkeeping of `U`, `U⁻¹`, `V`, `V⁻¹` alongside the elimination.
struct Tracker<T> {
    u: Option<(Grid<T>, Grid<T>)>,
    v: Option<(Grid<T>, Grid<T>)>,
}

impl<T: Entry> Tracker<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if let Some((u, ui)) = self.u.as_mut() {
            u.swap_rows(a, b);
            ui.swap_cols(a, b);
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        if let Some((v, vi)) = self.v.as_mut() {
            v.swap_cols(a, b);
            vi.swap_rows(a, b);
        }
    }
    fn mix_rows(&mut self, a: usize, b: usize, m: &[T; 4]) -> Result<(), Overflow> {
        if let Some((u, ui)) = self.u.as_mut() {
            u.mix_rows(a, b, m)?;
            ui.mix_cols(a, b, &adjugate(m))?;
        }
        Ok(())
    }
    fn mix_cols(&mut self, a: usize, b: usize, m: &[T; 4]) -> Result<(), Overflow> {
        if let Some((v, vi)) = self.v.as_mut() {
            v.mix_cols(a, b, m)?;
            vi.mix_rows(a, b, &adjugate(m))?;
        }
        Ok(())
    }
    fn negate_row(&mut self, r: usize) {
        if let Some((u, ui)) = self.u.as_mut() {
            u.negate_row(r);
            ui.negate_col(r);
        }
    }
}

/// A unimodular 2×2 block sending `(p, v)` to `(gcd, 0)`.
fn bezout_block<T: Entry>(p: &T, v: &T) -> [T; 4] {
    if v.is_multiple_of(p) {
        return [T::one(), T::zero(), -(v.clone() / p.clone()), T::one()];
    }
    let e = p.extended_gcd(v);
    let (g, s, u) = if e.gcd.is_negative() { (-e.gcd, -e.x, -e.y) } else { (e.gcd, e.x, e.y) };
    [s, u, -(v.clone() / g.clone()), p.clone() / g]
}

fn smallest_pivot<T: Entry>(d: &Grid<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let v = d.at(i, j).abs();
            if !v.is_zero() && best.as_ref().is_none_or(|(b, _, _)| v < *b) {
                let unit = v.is_one();
                best = Some((v, i, j));
                if unit {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn reduce<T: Entry>(d: &mut Grid<T>, tr: &mut Tracker<T>) -> Result<usize, Overflow> {
    let n = d.rows.min(d.cols);
    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = smallest_pivot(d, t) else { break };
        d.swap_rows(t, pi);
        tr.swap_rows(t, pi);
        d.swap_cols(t, pj);
        tr.swap_cols(t, pj);
        loop {
            for i in t + 1..d.rows {
                if !d.at(i, t).is_zero() {
                    let m = bezout_block(d.at(t, t), d.at(i, t));
                    d.mix_rows(t, i, &m)?;
                    tr.mix_rows(t, i, &m)?;
                }
            }
            for j in t + 1..d.cols {
                if !d.at(t, j).is_zero() {
                    let m = bezout_block(d.at(t, t), d.at(t, j));
                    d.mix_cols(t, j, &m)?;
                    tr.mix_cols(t, j, &m)?;
                }
            }
            // column operations can refill column t when the pivot shrank
            if (t + 1..d.rows).any(|i| !d.at(i, t).is_zero()) {
                continue;
            }
            let p = d.at(t, t).clone();
            let offender = (t + 1..d.rows).find(|&i| (t + 1..d.cols).any(|j| !d.at(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let m = [T::one(), T::one(), T::zero(), T::one()];
                    d.mix_rows(t, i, &m)?;
                    tr.mix_rows(t, i, &m)?;
                }
                None => break,
            }
        }
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            tr.negate_row(t);
        }
        t += 1;
    }
    Ok(t)
}

fn run_smith<T: Entry>(a: Grid<T>, track: bool) -> Result<(Grid<T>, Tracker<T>, usize), Overflow> {
    let mut tr = Tracker {
        u: track.then(|| (Grid::identity(a.rows), Grid::identity(a.rows))),
        v: track.then(|| (Grid::identity(a.cols), Grid::identity(a.cols))),
    };
    let mut d = a;
    let rank = reduce(&mut d, &mut tr)?;
    Ok((d, tr, rank))
}

/// Result of a Smith decomposition `U·A·V = D`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Smith {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.rank).map(|i| self.d.get(i, i)).collect()
    }
}

/// A Smith decomposition with arbitrary-precision transforms.
#[derive(Debug, Clone)]
pub struct ExactSmith {
    pub u: Vec<Vec<BigInt>>,
    pub u_inv: Vec<Vec<BigInt>>,
    pub d: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub v_inv: Vec<Vec<BigInt>>,
    pub rank: usize,
}

/// Smith normal form with unimodular transforms and their inverses, exact
/// for any input size.
///
/// Pivot choice: smallest nonzero absolute value in the remaining block, ties
/// broken by row-major position. The pivot row and column are cleared by
/// extended-gcd steps. Diagonal entries are nonnegative.
pub fn smith_normal_form_exact(a: &IntMatrix) -> ExactSmith {
    let (d, tr, rank) = run_smith(Grid::from_int(a, BigInt::from), true).expect("big integers do not overflow");
    let (u, u_inv) = tr.u.expect("tracked");
    let (v, v_inv) = tr.v.expect("tracked");
    ExactSmith { u: u.to_rows(), u_inv: u_inv.to_rows(), d: d.to_rows(), v: v.to_rows(), v_inv: v_inv.to_rows(), rank }
}

/// Smith normal form with `i128` transforms, same pivoting as
/// [`smith_normal_form_exact`]. Runs in `i128` and falls back to big integers
/// when intermediate entries overflow.
///
/// # Panics
/// When a transform entry does not fit in `i128`; dense matrices with large
/// entries should use [`smith_normal_form_exact`].
pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let pack = |d: Grid<i128>, tr: Tracker<i128>, rank| {
        let (u, u_inv) = tr.u.expect("tracked");
        let (v, v_inv) = tr.v.expect("tracked");
        let m = |g: Grid<i128>| IntMatrix { rows: g.rows, cols: g.cols, data: g.data };
        Smith { u: m(u), u_inv: m(u_inv), d: m(d), v: m(v), v_inv: m(v_inv), rank }
    };
    if let Ok((d, tr, rank)) = run_smith(Grid::from_int(a, |v| v), true) {
        return pack(d, tr, rank);
    }
    let (d, tr, rank) = run_smith(Grid::from_int(a, BigInt::from), true).expect("big integers do not overflow");
    let (u, u_inv) = tr.u.expect("tracked");
    let (v, v_inv) = tr.v.expect("tracked");
    let small = |g: &Grid<BigInt>| g.to_int().expect("Smith transform exceeds i128; use smith_normal_form_exact");
    Smith { u: small(&u), u_inv: small(&u_inv), d: small(&d), v: small(&v), v_inv: small(&v_inv), rank }
}

/// Rank and nonzero invariant factors, without tracking transforms.
pub fn invariant_factors(a: &IntMatrix) -> (usize, Vec<i128>) {
    if let Ok((d, _, rank)) = run_smith(Grid::from_int(a, |v| v), false) {
        return (rank, (0..rank).map(|i| *d.at(i, i)).collect());
    }
    let (d, _, rank) = run_smith(Grid::from_int(a, BigInt::from), false).expect("big integers do not overflow");
    let factors = (0..rank).map(|i| d.at(i, i).to_i128().expect("invariant factor exceeds i128")).collect();
    (rank, factors)
}

pub fn rank(a: &IntMatrix) -> usize {
    invariant_factors(a).0
}

/// Outcome of solving `A·x ≡ b (mod ℤ)` over ℚ.
#[derive(Debug, Clone)]
pub enum ModOneSolution {
    /// A rational `x` with `A·x - b` integral.
    Solved(Vec<Q>),
    /// An integer row vector `z` with `z·A = 0` and `z·b ∉ ℤ`.
    Obstructed { cycle: Vec<i128>, period: Q },
}

/// Solves `A·x ≡ b (mod ℤ)` with a rational unknown `x`.
pub fn solve_mod_one(a: &IntMatrix, b: &[Q]) -> ModOneSolution {
    assert_eq!(b.len(), a.rows(), "right-hand side length mismatch");
    let snf = smith_normal_form(a);
    let ub = snf.u.apply(b);
    for (i, val) in ub.iter().enumerate().skip(snf.rank) {
        if !frac(val).is_zero() {
            return ModOneSolution::Obstructed { cycle: snf.u.row(i).to_vec(), period: frac(val) };
        }
    }
    let mut s = vec![Q::zero(); a.cols()];
    for i in 0..snf.rank {
        s[i] = ub[i] / Q::from_integer(snf.d.get(i, i) as i64);
    }
    ModOneSolution::Solved(snf.v.apply(&s))
}

/// Coefficients for [`cohomology`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CohomologyCoeff {
    Integer,
    Circle,
}

/// A finitely generated abelian group `(ℝ/ℤ)^a ⊕ ℤ^b ⊕ ℤ/d₁ ⊕ ⋯ ⊕ ℤ/d_k`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AbelianGroupPresentation {
    pub divisible_rank: usize,
    pub free_rank: usize,
    /// Invariant factors `≥ 2` in divisibility order.
    pub invariant_factors: Vec<i128>,
}

impl AbelianGroupPresentation {
    pub fn trivial() -> Self {
        AbelianGroupPresentation { divisible_rank: 0, free_rank: 0, invariant_factors: vec![] }
    }

    pub fn cyclic(n: i128) -> Self {
        let invariant_factors = if n >= 2 { vec![n] } else { vec![] };
        AbelianGroupPresentation { divisible_rank: 0, free_rank: 0, invariant_factors }
    }

    pub fn is_trivial(&self) -> bool {
        self.divisible_rank == 0 && self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the group when finite.
    pub fn order(&self) -> Option<i128> {
        (self.divisible_rank == 0 && self.free_rank == 0).then(|| self.invariant_factors.iter().product())
    }
}

impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.divisible_rank {
            0 => {}
            1 => parts.push("R/Z".to_string()),
            n => parts.push(format!("(R/Z)^{n}")),
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            n => parts.push(format!("Z^{n}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Cohomology in degree `n` of the cochain complex whose `i`-th differential
/// is `differentials[i] : C^i → C^{i+1}`.
///
/// `dims[i]` is the rank of `C^i`; it is needed for degrees with no outgoing map.
pub fn cohomology(
    differentials: &[IntMatrix],
    dims: &[usize],
    n: usize,
    coeff: CohomologyCoeff,
) -> Result<AbelianGroupPresentation, crate::error::Error> {
    if n >= dims.len() || dims.len() != differentials.len() + 1 {
        return Err(crate::error::Error::Validation(format!("degree {n} with {} ranks and {} differentials", dims.len(), differentials.len())));
    }
    for (i, d) in differentials.iter().enumerate() {
        if d.cols() != dims[i] || d.rows() != dims[i + 1] {
            return Err(crate::error::Error::Validation(format!("differential {i} has shape {}x{}", d.rows(), d.cols())));
        }
        if let Some(next) = differentials.get(i + 1) {
            if !next.mul(d).is_zero() {
                return Err(crate::error::Error::Validation(format!("d{} ∘ d{} is not zero", i + 1, i)));
            }
        }
    }
    let factors = |k: usize| match differentials.get(k) {
        Some(d) => invariant_factors(d),
        None => (0, vec![]),
    };
    let (rank_out, out_factors) = factors(n);
    let (rank_in, in_factors) = if n == 0 { (0, vec![]) } else { factors(n - 1) };
    let rank = dims[n] - rank_out - rank_in;
    let torsion = |fs: Vec<i128>| fs.into_iter().filter(|&d| d > 1).collect::<Vec<_>>();
    Ok(match coeff {
        CohomologyCoeff::Integer => AbelianGroupPresentation { divisible_rank: 0, free_rank: rank, invariant_factors: torsion(in_factors) },
        CohomologyCoeff::Circle => AbelianGroupPresentation { divisible_rank: rank, free_rank: 0, invariant_factors: torsion(out_factors) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i128]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    fn check(a: &IntMatrix) -> Smith {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(a.cols()));
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&m(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.diagonal(), vec![2, 4]);
    }

    #[test]
    fn zero_matrix() {
        let s = check(&IntMatrix::zeros(3, 2));
        assert_eq!(s.rank, 0);
        assert!(s.d.is_zero());
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2,3) is not in normal form; expected diag(1,6)
        let s = check(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![1, 6]);
    }

    #[test]
    fn mod_one_solve_and_obstruction() {
        // x ≡ 1/2, 2x ≡ 0 is solvable (x = 1/2)
        let a = m(&[&[1], &[2]]);
        match solve_mod_one(&a, &[q(1, 2), q(0, 1)]) {
            ModOneSolution::Solved(x) => {
                let r = a.apply(&x);
                assert!(r[0] - q(1, 2) == Q::from_integer((r[0] - q(1, 2)).to_integer()));
                assert!(r[1].is_integer());
            }
            other => panic!("unexpected {other:?}"),
        }
        // 0·x ≡ 1/3 is obstructed
        let z = IntMatrix::zeros(1, 1);
        match solve_mod_one(&z, &[q(1, 3)]) {
            ModOneSolution::Obstructed { period, .. } => assert_eq!(period, q(1, 3)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
