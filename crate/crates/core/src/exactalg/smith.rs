//! Smith normal form with unimodular transforms.
//!
//! Pivoting always takes the smallest-magnitude nonzero entry of the active
//! block, and reductions use the nearest-integer quotient. Both choices are
//! fixed so that the output is a deterministic function of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal with `d1 | d2 | ...`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Nearest-integer quotient for a positive divisor.
fn nearest_quotient(a: &BigInt, p: &BigInt) -> BigInt {
    debug_assert!(p.is_positive());
    let two = BigInt::from(2);
    (a * &two + p).div_floor(&(p * &two))
}

struct Work {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Smallest |entry| in the block `[t.., t..]`, ties broken by (row, col).
    fn min_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let a = &self.d[(i, j)];
                if a.is_zero() {
                    continue;
                }
                let m = a.abs();
                if best.as_ref().is_none_or(|(_, _, b)| &m < b) {
                    best = Some((i, j, m));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Smallest |entry| among the pivot, the rest of row `t` and column `t`.
    fn min_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t, self.d[(t, t)].abs());
        for i in t + 1..self.d.rows() {
            let a = &self.d[(i, t)];
            if !a.is_zero() && a.abs() < best.2 {
                best = (i, t, a.abs());
            }
        }
        for j in t + 1..self.d.cols() {
            let a = &self.d[(t, j)];
            if !a.is_zero() && a.abs() < best.2 {
                best = (t, j, a.abs());
            }
        }
        (best.0, best.1)
    }

    fn bring_to_pivot(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
        if self.d[(t, t)].is_negative() {
            self.negate_row(t);
        }
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        d: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    let mut t = 0;
    while t < m.min(n) {
        let Some(pos) = w.min_in_block(t) else { break };
        w.bring_to_pivot(t, pos);
        loop {
            let p = w.d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if w.d[(i, t)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&w.d[(i, t)], &p);
                w.add_row(i, t, &-q);
                clean &= w.d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if w.d[(t, j)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&w.d[(t, j)], &p);
                w.add_col(j, t, &-q);
                clean &= w.d[(t, j)].is_zero();
            }
            if !clean {
                let pos = w.min_in_cross(t);
                w.bring_to_pivot(t, pos);
                continue;
            }
            // divisibility of the remaining block
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !w.d[(i, j)].is_multiple_of(&p));
            match offender {
                Some((i, _)) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        t += 1;
    }
    let rank = t;
    SmithDecomposition {
        u: w.u,
        d: w.d,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
        rank,
    }
}
