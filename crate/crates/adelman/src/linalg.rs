//! Normal forms and exact solvers over the integers.
//!
//! All equality decisions in the crate funnel into two questions answered
//! here: does `X * M = B` have an integer solution, and what is a canonical
//! basis of `{ v : v * M = 0 }`.  Hermite and Smith normal forms with
//! tracked unimodular transforms answer both.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::ZMatrix;

/// Row Hermite normal form data: `u * m = h` with `u` unimodular.
///
/// `h` is in row-echelon form, pivots are positive, entries below a pivot
/// are zero and entries above it are reduced into `[0, pivot)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteDecomposition {
    pub u: ZMatrix,
    pub h: ZMatrix,
}

/// Smith normal form data: `u * m * v = d` with `u`, `v` unimodular and
/// `d` diagonal with non-negative entries forming a divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: ZMatrix,
    pub d: ZMatrix,
    pub v: ZMatrix,
}

/// Row Hermite normal form with tracked transform.
pub fn hnf(m: &ZMatrix) -> HermiteDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = ZMatrix::identity(rows);
    let mut pivot_row = 0;

    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        if (pivot_row..rows).all(|r| h.at(r, col).is_zero()) {
            continue;
        }
        // Euclid in this column until a single nonzero entry is left.
        loop {
            let r_min = (pivot_row..rows)
                .filter(|&r| !h.at(r, col).is_zero())
                .min_by(|&a, &b| h.at(a, col).abs().cmp(&h.at(b, col).abs()))
                .expect("nonzero entry present");
            h.swap_rows(pivot_row, r_min);
            u.swap_rows(pivot_row, r_min);
            let mut clean = true;
            for r in pivot_row + 1..rows {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let q = h.at(r, col) / h.at(pivot_row, col);
                let neg_q = -q;
                h.add_row_multiple(r, pivot_row, &neg_q);
                u.add_row_multiple(r, pivot_row, &neg_q);
                if !h.at(r, col).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.at(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for r in 0..pivot_row {
            let q = h.at(r, col).div_floor(h.at(pivot_row, col));
            if !q.is_zero() {
                let neg_q = -q;
                h.add_row_multiple(r, pivot_row, &neg_q);
                u.add_row_multiple(r, pivot_row, &neg_q);
            }
        }
        pivot_row += 1;
    }

    HermiteDecomposition { u, h }
}

/// Clears row and column `t` of `d` except for the pivot `d[t][t]`,
/// mirroring every operation in `u` and `v`.
fn clear_cross(d: &mut ZMatrix, u: &mut ZMatrix, v: &mut ZMatrix, t: usize) {
    let rows = d.rows();
    let cols = d.cols();
    'reduce: loop {
        for r in t + 1..rows {
            if d.at(r, t).is_zero() {
                continue;
            }
            let q = d.at(r, t) / d.at(t, t);
            let neg_q = -q;
            d.add_row_multiple(r, t, &neg_q);
            u.add_row_multiple(r, t, &neg_q);
            if !d.at(r, t).is_zero() {
                d.swap_rows(r, t);
                u.swap_rows(r, t);
                continue 'reduce;
            }
        }
        for c in t + 1..cols {
            if d.at(t, c).is_zero() {
                continue;
            }
            let q = d.at(t, c) / d.at(t, t);
            let neg_q = -q;
            d.add_col_multiple(c, t, &neg_q);
            v.add_col_multiple(c, t, &neg_q);
            if !d.at(t, c).is_zero() {
                d.swap_cols(c, t);
                v.swap_cols(c, t);
                continue 'reduce;
            }
        }
        return;
    }
}

fn is_diagonal(m: &ZMatrix) -> bool {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if r != c && !m.at(r, c).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Smith normal form with tracked transforms.
///
/// Diagonalisation alternates row and column Hermite passes; the
/// above-pivot reduction of the Hermite form is what keeps intermediate
/// entries from swelling.  A divisibility fix-up on the diagonal follows.
pub fn snf(m: &ZMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = ZMatrix::identity(rows);
    let mut v = ZMatrix::identity(cols);
    let n = rows.min(cols);

    let mut guard = 0usize;
    while !is_diagonal(&d) {
        let row_pass = hnf(&d);
        u = row_pass.u.mul(&u);
        d = row_pass.h;
        if is_diagonal(&d) {
            break;
        }
        let col_pass = hnf(&d.transpose());
        v = v.mul(&col_pass.u.transpose());
        d = col_pass.h.transpose();
        guard += 1;
        assert!(guard < 10_000, "snf failed to converge");
    }

    // gather the nonzero diagonal entries in front, with positive sign
    let mut rank = 0;
    for t in 0..n {
        if !d.at(t, t).is_zero() {
            d.swap_rows(rank, t);
            u.swap_rows(rank, t);
            d.swap_cols(rank, t);
            v.swap_cols(rank, t);
            if d.at(rank, rank).is_negative() {
                d.negate_row(rank);
                u.negate_row(rank);
            }
            rank += 1;
        }
    }

    // enforce d_i | d_{i+1}
    'chain: loop {
        for i in 0..rank.saturating_sub(1) {
            let di = d.at(i, i).clone();
            let dj = d.at(i + 1, i + 1).clone();
            if !(&dj % &di).is_zero() {
                d.add_col_multiple(i, i + 1, &BigInt::one());
                v.add_col_multiple(i, i + 1, &BigInt::one());
                clear_cross(&mut d, &mut u, &mut v, i);
                for t in [i, i + 1] {
                    if d.at(t, t).is_negative() {
                        d.negate_row(t);
                        u.negate_row(t);
                    }
                }
                continue 'chain;
            }
        }
        break;
    }

    SmithDecomposition { u, d, v }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &ZMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a.at(r, k).is_zero()) else {
                return BigInt::zero();
            };
            a.swap_rows(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.set(i, j, num / &prev);
            }
            a.set(i, k, BigInt::zero());
        }
        prev = a.at(k, k).clone();
    }
    sign * a.at(n - 1, n - 1)
}

pub fn is_unimodular(m: &ZMatrix) -> bool {
    m.is_square() && det(m).abs().is_one()
}

/// A canonical basis of the left kernel `{ v : v * m = 0 }`, one row per
/// basis vector, in Hermite normal form (first nonzero entry of each row
/// positive).
pub fn kernel_basis(m: &ZMatrix) -> ZMatrix {
    let dec = hnf(m);
    let mut basis = ZMatrix::zero(0, m.rows());
    for r in 0..m.rows() {
        if dec.h.row_is_zero(r) {
            basis = basis.vstack(&dec.u.row(r));
        }
    }
    hnf(&basis).h.nonzero_rows()
}

/// Solves `x * m = b` exactly over the integers, if possible.
///
/// Decided through the Smith normal form of `m`: with `u*m*v = d`, the
/// system is equivalent to `y * d = b * v`, which is solvable iff each
/// diagonal entry divides the matching column and the columns beyond the
/// diagonal vanish.
pub fn solve_left(m: &ZMatrix, b: &ZMatrix) -> Result<Option<ZMatrix>> {
    if b.cols() != m.cols() {
        return Err(Error::Dimensions(format!(
            "solve_left: rhs has {} columns, matrix has {}",
            b.cols(),
            m.cols()
        )));
    }
    let dec = snf(m);
    let bv = b.mul(&dec.v);
    let k = b.rows();
    let n = m.cols();
    let diag = m.rows().min(n);
    let mut y = ZMatrix::zero(k, m.rows());
    for i in 0..k {
        for c in 0..n {
            let rhs = bv.at(i, c);
            if c < diag && !dec.d.at(c, c).is_zero() {
                let (q, r) = rhs.div_rem(dec.d.at(c, c));
                if !r.is_zero() {
                    return Ok(None);
                }
                y.set(i, c, q);
            } else if !rhs.is_zero() {
                return Ok(None);
            }
        }
    }
    let x = y.mul(&dec.u);
    debug_assert_eq!(x.mul(m), *b);
    Ok(Some(x))
}

/// Whether `x * m = b` is solvable modulo `modulus`.
pub fn solvable_mod(m: &ZMatrix, b: &ZMatrix, modulus: &BigInt) -> Result<bool> {
    if b.cols() != m.cols() {
        return Err(Error::Dimensions(
            "solvable_mod: rhs/matrix column mismatch".into(),
        ));
    }
    assert!(modulus > &BigInt::one(), "modulus must be at least 2");
    let dec = snf(m);
    let bv = b.mul(&dec.v);
    let diag = m.rows().min(m.cols());
    for i in 0..b.rows() {
        for c in 0..m.cols() {
            let d = if c < diag {
                dec.d.at(c, c).clone()
            } else {
                BigInt::zero()
            };
            let g = d.gcd(modulus);
            if !(bv.at(i, c) % &g).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Kronecker product with row-major index pairing:
/// `kronecker(a, b)[(i*b.rows + j), (p*b.cols + q)] = a[i][p] * b[j][q]`.
///
/// It linearises two-sided multiplication on row-major flattenings:
/// `vec(l * x * r) = vec(x) * kronecker(l^T, r)`.
pub fn kronecker(a: &ZMatrix, b: &ZMatrix) -> ZMatrix {
    let mut out = ZMatrix::zero(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for p in 0..a.cols() {
            let ai = a.at(i, p);
            if ai.is_zero() {
                continue;
            }
            for j in 0..b.rows() {
                for q in 0..b.cols() {
                    let bj = b.at(j, q);
                    if bj.is_zero() {
                        continue;
                    }
                    out.set(i * b.rows() + j, p * b.cols() + q, ai * bj);
                }
            }
        }
    }
    out
}

/// A system of simultaneous matrix equations, each of the form
/// `sum over terms of L * X_k * R = C` in several matrix unknowns.
///
/// Vectorising every term with [`kronecker`] turns the whole system into a
/// single `x * M = b` instance for the SNF solver, which keeps one code
/// path for homotopy equations, morphism lifts and witness searches.
#[derive(Default)]
pub struct MatrixSystem {
    dims: Vec<(usize, usize)>,
    equations: Vec<Equation>,
}

struct Equation {
    terms: Vec<(usize, ZMatrix, ZMatrix)>,
    rhs: ZMatrix,
}

impl MatrixSystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers an unknown matrix of the given shape, returning its index.
    pub fn unknown(&mut self, rows: usize, cols: usize) -> usize {
        self.dims.push((rows, cols));
        self.dims.len() - 1
    }

    /// Adds the equation `sum of l * X_k * r over terms = rhs`.
    pub fn equation(&mut self, terms: Vec<(usize, ZMatrix, ZMatrix)>, rhs: ZMatrix) {
        for (k, l, r) in &terms {
            let (ur, uc) = self.dims[*k];
            assert_eq!(l.cols(), ur, "left factor vs unknown rows");
            assert_eq!(r.rows(), uc, "unknown cols vs right factor");
            assert_eq!(l.rows(), rhs.rows(), "term rows vs rhs");
            assert_eq!(r.cols(), rhs.cols(), "term cols vs rhs");
        }
        self.equations.push(Equation { terms, rhs });
    }

    /// The vectorised coefficient matrix and right-hand side.
    pub fn assemble(&self) -> (ZMatrix, ZMatrix) {
        let row_offsets: Vec<usize> = self
            .dims
            .iter()
            .scan(0, |acc, (r, c)| {
                let off = *acc;
                *acc += r * c;
                Some(off)
            })
            .collect();
        let width: usize = self.dims.iter().map(|(r, c)| r * c).sum();
        let height: usize = self
            .equations
            .iter()
            .map(|e| e.rhs.rows() * e.rhs.cols())
            .sum();

        let mut coeff = ZMatrix::zero(width, height);
        let mut rhs = ZMatrix::zero(1, height);
        let mut col_off = 0;
        for eq in &self.equations {
            let block_cols = eq.rhs.rows() * eq.rhs.cols();
            for (k, l, r) in &eq.terms {
                let block = kronecker(&l.transpose(), r);
                for br in 0..block.rows() {
                    for bc in 0..block.cols() {
                        let val = block.at(br, bc);
                        if !val.is_zero() {
                            let cur = coeff.at(row_offsets[*k] + br, col_off + bc) + val;
                            coeff.set(row_offsets[*k] + br, col_off + bc, cur);
                        }
                    }
                }
            }
            let flat = eq.rhs.vec_row();
            for bc in 0..block_cols {
                rhs.set(0, col_off + bc, flat.at(0, bc).clone());
            }
            col_off += block_cols;
        }
        (coeff, rhs)
    }

    fn split(&self, row: &ZMatrix) -> Vec<ZMatrix> {
        let mut out = Vec::with_capacity(self.dims.len());
        let mut off = 0;
        for &(r, c) in &self.dims {
            let slice = row.columns(off..off + r * c);
            out.push(ZMatrix::unvec_row(&slice, r, c));
            off += r * c;
        }
        out
    }

    /// Solves the system exactly; `None` when no integer solution exists.
    pub fn solve(&self) -> Option<Vec<ZMatrix>> {
        let (coeff, rhs) = self.assemble();
        let x = solve_left(&coeff, &rhs).expect("assembled dimensions agree")?;
        Some(self.split(&x))
    }

    /// A basis of the homogeneous solutions, one assignment per element.
    pub fn kernel(&self) -> Vec<Vec<ZMatrix>> {
        let (coeff, _) = self.assemble();
        let basis = kernel_basis(&coeff);
        (0..basis.rows()).map(|r| self.split(&basis.row(r))).collect()
    }

    /// Whether the system is solvable modulo `modulus`.
    pub fn solvable_mod(&self, modulus: &BigInt) -> bool {
        let (coeff, rhs) = self.assemble();
        solvable_mod(&coeff, &rhs, modulus).expect("assembled dimensions agree")
    }
}

/// Finds `(s, t)` with `s * b0 + a1 * t = c`, if an integer solution
/// exists.  For `a1 : n1 x n2`, `b0 : m0 x m1` and `c : n1 x m1` the
/// witnesses have shapes `s : n1 x m0` and `t : n2 x m1`.
pub fn solve_homotopy(
    a1: &ZMatrix,
    b0: &ZMatrix,
    c: &ZMatrix,
) -> Result<Option<(ZMatrix, ZMatrix)>> {
    if c.rows() != a1.rows() || c.cols() != b0.cols() {
        return Err(Error::Dimensions(format!(
            "solve_homotopy: c is {} x {}, expected {} x {}",
            c.rows(),
            c.cols(),
            a1.rows(),
            b0.cols()
        )));
    }
    let mut sys = MatrixSystem::new();
    let s = sys.unknown(a1.rows(), b0.rows());
    let t = sys.unknown(a1.cols(), b0.cols());
    sys.equation(
        vec![
            (s, ZMatrix::identity(a1.rows()), b0.clone()),
            (t, a1.clone(), ZMatrix::identity(b0.cols())),
        ],
        c.clone(),
    );
    match sys.solve() {
        Some(mut sol) => {
            let t_val = sol.pop().expect("two unknowns");
            let s_val = sol.pop().expect("two unknowns");
            debug_assert_eq!(&s_val.mul(b0).add(&a1.mul(&t_val)), c);
            Ok(Some((s_val, t_val)))
        }
        None => Ok(None),
    }
}
