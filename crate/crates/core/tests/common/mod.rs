//! Random corpus of valid equivariant complexes shared by the property suites.

#![allow(dead_code)]

pub mod oracles;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use z2index::catalog::models::antipodal_complex;
use z2index::complexes::{Coeff, EquivariantComplex, LambdaMatrix, LambdaScalar};
use z2index::exactalg::lattice::kernel_basis;

pub const MAX_CELLS: usize = 6;

fn tau_power(p: bool, sign: i64) -> LambdaScalar {
    if p {
        LambdaScalar::new(0, sign)
    } else {
        LambdaScalar::new(sign, 0)
    }
}

fn sign(rng: &mut ChaCha8Rng) -> i64 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}

/// First boundary: a spanning tree of edges between vertex orbits, one edge
/// `+-(1 - tau)` that makes the cover connected, and a few extra edges, all in
/// head-tail form.
fn first_boundary(rng: &mut ChaCha8Rng, r0: usize) -> LambdaMatrix {
    let mut cols: Vec<Vec<(usize, LambdaScalar)>> = Vec::new();
    let edge = |rng: &mut ChaCha8Rng, i: usize, j: usize| {
        let s = sign(rng);
        let (p, q) = (rng.gen_bool(0.5), rng.gen_bool(0.5));
        vec![(i, tau_power(p, s)), (j, tau_power(q, -s))]
    };
    for i in 1..r0 {
        let j = rng.gen_range(0..i);
        let c = edge(rng, i, j);
        cols.push(c);
    }
    let s = sign(rng);
    cols.push(vec![(rng.gen_range(0..r0), LambdaScalar::new(s, -s))]);
    let extra = rng.gen_range(0..=MAX_CELLS - cols.len());
    for _ in 0..extra.min(2) {
        let c = match rng.gen_range(0..3) {
            0 if r0 > 1 => {
                let i = rng.gen_range(0..r0);
                let j = (i + rng.gen_range(1..r0)) % r0;
                edge(rng, i, j)
            }
            1 => {
                let s = sign(rng);
                vec![(rng.gen_range(0..r0), LambdaScalar::new(s, -s))]
            }
            _ => Vec::new(),
        };
        cols.push(c);
    }
    cols.shuffle(rng);
    let mut m = LambdaMatrix::zeros(r0, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for &(i, v) in col {
            m.add_to(i, j, v);
        }
    }
    m
}

fn to_lambda_column(v: &[BigInt]) -> Vec<LambdaScalar> {
    v.chunks(2)
        .map(|p| LambdaScalar::new(p[0].to_i64().unwrap(), p[1].to_i64().unwrap()))
        .collect()
}

/// A random valid Lambda-complex of dimension `top` with at most
/// [`MAX_CELLS`] cells per degree. With `full_h1`, the second boundary hits a
/// full basis of 1-cycles when that fits, so that `H_1(X, Z) = 0`.
pub fn random_lambda_complex(seed: u64, top: usize, full_h1: bool) -> EquivariantComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r0 = rng.gen_range(1..=3);
    let mut ranks = vec![r0];
    let mut bds = vec![first_boundary(&mut rng, r0)];
    ranks.push(bds[0].cols());
    for n in 2..=top {
        let partial = EquivariantComplex::from_lambda("partial", ranks.clone(), bds.clone());
        let kernel = kernel_basis(&partial.chain_matrix(Coeff::Lambda, n - 1));
        let mut cols: Vec<Vec<LambdaScalar>> = Vec::new();
        if n == 2 && full_h1 && kernel.len() <= MAX_CELLS {
            cols.extend(kernel.iter().map(|k| to_lambda_column(k)));
        }
        let lo = if n == top { 1 } else { 0 };
        let want = rng.gen_range(lo..=MAX_CELLS).max(cols.len());
        while cols.len() < want {
            let mut v = vec![BigInt::from(0); 2 * ranks[n - 1]];
            if !kernel.is_empty() {
                for _ in 0..rng.gen_range(1..=2) {
                    let k = &kernel[rng.gen_range(0..kernel.len())];
                    let c = rng.gen_range(-2i64..=2);
                    for (a, b) in v.iter_mut().zip(k) {
                        *a += b * c;
                    }
                }
            }
            cols.push(to_lambda_column(&v));
        }
        let mut m = LambdaMatrix::zeros(ranks[n - 1], cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        ranks.push(cols.len());
        bds.push(m);
    }
    EquivariantComplex::from_lambda(format!("random-{seed}"), ranks, bds)
}

/// A random antipodally closed subcomplex of the boundary of the
/// cross-polytope in `R^5`, generated by a few 4-simplices and lower simplices.
pub fn random_antipodal_complex(seed: u64) -> EquivariantComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords = 5;
    let mut gens = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let signs: u32 = rng.gen_range(0..32);
        gens.push((0..coords).map(|i| 2 * i + ((signs >> i) & 1) as usize).collect::<Vec<_>>());
    }
    for _ in 0..rng.gen_range(0..=2) {
        let len = rng.gen_range(2..=4);
        let mut idx: Vec<usize> = (0..coords).collect();
        idx.shuffle(&mut rng);
        gens.push(idx[..len].iter().map(|&i| 2 * i + rng.gen_range(0..2)).collect());
    }
    EquivariantComplex::from_delta(format!("antipodal-{seed}"), antipodal_complex(coords, &gens))
        .expect("subcomplexes of the cross-polytope are valid")
}

/// Corpus of valid 4-dimensional Lambda-complexes, every third one built for
/// `H_1(X, Z) = 0`.
pub fn lambda_corpus(count: usize) -> Vec<EquivariantComplex> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let c = random_lambda_complex(seed, 4, seed % 3 == 0);
        seed += 1;
        if c.validate().is_valid() {
            out.push(c);
        }
    }
    out
}

/// Antipodal subcomplexes with a connected cover; disconnected draws are skipped.
pub fn antipodal_corpus(count: usize) -> Vec<EquivariantComplex> {
    (0..)
        .map(random_antipodal_complex)
        .filter(|c| c.validate().is_valid())
        .take(count)
        .collect()
}
