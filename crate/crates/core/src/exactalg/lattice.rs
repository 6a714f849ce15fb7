//! Integer lattices: echelon bases, coset normal forms, exact solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{smith_normal_form, IntMatrix};

/// Row-style Hermite normal form of the lattice spanned by `gens`.
///
/// Rows come out in echelon order with positive pivots and entries above each
/// pivot reduced into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_rows(gens: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = gens
        .iter()
        .filter(|g| g.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    for r in &rows {
        assert_eq!(r.len(), dim);
    }
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..dim {
        loop {
            // rows with a nonzero entry in column c
            let active: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if active.len() <= 1 {
                break;
            }
            let piv = *active
                .iter()
                .min_by(|&&a, &&b| rows[a][c].abs().cmp(&rows[b][c].abs()).then(a.cmp(&b)))
                .unwrap();
            let p = rows[piv][c].clone();
            for &i in &active {
                if i == piv {
                    continue;
                }
                let q = rows[i][c].div_floor(&p);
                let sub: Vec<BigInt> = rows[piv].iter().map(|v| v * &q).collect();
                for (x, s) in rows[i].iter_mut().zip(sub) {
                    *x -= s;
                }
            }
            rows.retain(|r| r.iter().any(|v| !v.is_zero()));
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            let mut r = rows.remove(i);
            if r[c].is_negative() {
                r.iter_mut().for_each(|v| *v = -&*v);
            }
            out.push(r);
        }
    }
    // reduce above pivots
    for k in 0..out.len() {
        let c = pivot_col(&out[k]);
        let p = out[k][c].clone();
        for i in 0..k {
            let q = out[i][c].div_floor(&p);
            if !q.is_zero() {
                let sub: Vec<BigInt> = out[k].iter().map(|v| v * &q).collect();
                for (x, s) in out[i].iter_mut().zip(sub) {
                    *x -= s;
                }
            }
        }
    }
    out
}

fn pivot_col(row: &[BigInt]) -> usize {
    row.iter().position(|v| !v.is_zero()).expect("nonzero row")
}

/// Canonical representative of `x + L` where `hnf` is a Hermite basis of `L`:
/// each pivot coordinate is brought into `[0, pivot)`.
pub fn reduce_mod_lattice(x: &[BigInt], hnf: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut x = x.to_vec();
    for r in hnf {
        let c = pivot_col(r);
        let q = x[c].div_floor(&r[c]);
        if !q.is_zero() {
            for (xi, ri) in x.iter_mut().zip(r) {
                *xi -= ri * &q;
            }
        }
    }
    x
}

/// Solution data for `A z = b` over the integers.
#[derive(Clone, Debug)]
pub struct IntegerSolution {
    pub particular: Vec<BigInt>,
    /// Basis of the integer kernel of `A` (saturated).
    pub kernel: Vec<Vec<BigInt>>,
}

/// Solves `A z = b` over Z. Returns `None` when no integer solution exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<IntegerSolution> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let s = smith_normal_form(a);
    let c = s.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..c.len() {
        if i < s.rank {
            let d = &s.d[(i, i)];
            let (q, r) = c[i].div_rem(d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !c[i].is_zero() {
            return None;
        }
    }
    let particular = s.v.mul_vec(&y);
    let kernel = (s.rank..a.cols()).map(|j| s.v.column(j)).collect();
    Some(IntegerSolution { particular, kernel })
}

/// Saturated basis of `{z : A z = 0}`, in Hermite form.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_normal_form(a);
    let k: Vec<Vec<BigInt>> = (s.rank..a.cols()).map(|j| s.v.column(j)).collect();
    hermite_rows(&k, a.cols())
}
