//! Linear algebra over the field with two elements, on 0/1 byte vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;

pub(crate) type F2Vec = Vec<u8>;

pub(crate) fn reduce(m: &IntMatrix) -> Vec<F2Vec> {
    let r = m.mod2();
    (0..r.rows())
        .map(|i| r.row(i).iter().map(|v| u8::from(!v.is_zero())).collect())
        .collect()
}

pub(crate) fn to_int_columns(cols: &[F2Vec], rows: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, &b) in c.iter().enumerate() {
            if b == 1 {
                m[(i, j)] = BigInt::one();
            }
        }
    }
    m
}

pub(crate) fn to_int_rows(rows: &[F2Vec], cols: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows.len(), cols);
    for (i, r) in rows.iter().enumerate() {
        for (j, &b) in r.iter().enumerate() {
            if b == 1 {
                m[(i, j)] = BigInt::one();
            }
        }
    }
    m
}

fn xor_into(dst: &mut [u8], src: &[u8]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// Kernel basis of a matrix given as rows (each of length `n`).
pub(crate) fn kernel(rows: &[F2Vec], n: usize) -> Vec<F2Vec> {
    let mut a: Vec<F2Vec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] == 1) else {
            continue;
        };
        a.swap(r, p);
        let pr = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] == 1 {
                xor_into(row, &pr);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u8; n];
            v[f] = 1;
            for (k, &pc) in pivots.iter().enumerate() {
                if a[k][f] == 1 {
                    v[pc] = 1;
                }
            }
            v
        })
        .collect()
}

/// Incremental independence test against a growing echelon basis.
#[derive(Default)]
pub(crate) struct Span {
    echelon: Vec<(usize, F2Vec)>,
}

impl Span {
    fn reduce(&self, v: &[u8]) -> F2Vec {
        let mut v = v.to_vec();
        for (p, row) in &self.echelon {
            if v[*p] == 1 {
                xor_into(&mut v, row);
            }
        }
        v
    }

    /// Adds `v` if independent; returns whether it was added.
    pub(crate) fn insert(&mut self, v: &[u8]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|&b| b == 1) {
            None => false,
            Some(p) => {
                for (_, row) in self.echelon.iter_mut() {
                    if row[p] == 1 {
                        xor_into(row, &r);
                    }
                }
                self.echelon.push((p, r));
                true
            }
        }
    }
}

/// Inverse of an invertible square matrix given by its columns.
pub(crate) fn inverse_of_columns(cols: &[F2Vec]) -> Vec<F2Vec> {
    let n = cols.len();
    // rows of [M | I]
    let mut a: Vec<F2Vec> = (0..n)
        .map(|i| {
            let mut r: F2Vec = cols.iter().map(|c| c[i]).collect();
            r.extend((0..n).map(|j| u8::from(i == j)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| a[i][c] == 1)
            .expect("matrix is invertible over F2");
        a.swap(c, p);
        let pr = a[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != c && row[c] == 1 {
                xor_into(row, &pr);
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}
