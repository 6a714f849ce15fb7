//! Slow reference computations that share no code with the library.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Rows = Vec<Vec<i64>>;

/// Determinant by cofactor expansion; fine up to 5 x 5.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        _ => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect()).collect()
}

/// Invariant factors from determinantal divisors: `d_k = g_k / g_{k-1}` where
/// `g_k` is the gcd of all `k x k` minors.
pub fn minor_gcd_factors(a: &Rows) -> Vec<BigInt> {
    let (r, c) = (a.len(), a.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    let mut prev: i128 = 1;
    for k in 1..=r.min(c) {
        let mut g: i128 = 0;
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let m: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
                g = g.gcd(&det(&m));
            }
        }
        if g == 0 {
            break;
        }
        out.push(BigInt::from(g / prev));
        prev = g;
    }
    out
}

/// Rank over the rationals: the largest `k` with a nonzero `k x k` minor.
pub fn rational_rank(a: &Rows) -> usize {
    let (r, c) = (a.len(), a.first().map_or(0, Vec::len));
    (1..=r.min(c))
        .rev()
        .find(|&k| {
            subsets(r, k).iter().any(|rs| {
                subsets(c, k).iter().any(|cs| {
                    let m: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
                    det(&m) != 0
                })
            })
        })
        .unwrap_or(0)
}

/// `ker(d_out) / im(d_in)` as (free rank, torsion factors > 1).
///
/// The kernel is a saturated sublattice, so `Z^n / ker` is free and the torsion
/// of the subquotient is the torsion of `coker(d_in)`.
pub fn subquotient(d_in: &Rows, d_out: &Rows, n: usize) -> (usize, Vec<BigInt>) {
    let kernel_rank = n - rational_rank(d_out);
    let free = kernel_rank - rational_rank(d_in);
    let torsion = minor_gcd_factors(d_in).into_iter().filter(|d| *d > BigInt::from(1)).collect();
    (free, torsion)
}

fn mod2_vectors(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u32..(1 << n)).map(move |m| (0..n).map(|i| ((m >> i) & 1) as i64).collect())
}

fn apply_mod2(a: &Rows, v: &[i64]) -> Vec<i64> {
    a.iter().map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum::<i64>().rem_euclid(2)).collect()
}

/// Dimension of `ker(d_out) / im(d_in)` over `F_2` by enumerating all vectors.
pub fn subquotient_mod2_dim(d_in: &Rows, d_out: &Rows, n: usize) -> usize {
    let a = d_in.first().map_or(0, Vec::len);
    let kernel = mod2_vectors(n).filter(|v| d_out.is_empty() || apply_mod2(d_out, v).iter().all(|&x| x == 0)).count();
    let mut image: Vec<Vec<i64>> = mod2_vectors(a).map(|v| if d_in.is_empty() { vec![0; n] } else { apply_mod2(d_in, &v) }).collect();
    image.sort();
    image.dedup();
    (kernel.trailing_zeros() - image.len().trailing_zeros()) as usize
}

pub fn random_rows(rng: &mut ChaCha8Rng, r: usize, c: usize, bound: i64) -> Rows {
    (0..r).map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

pub fn mul(a: &Rows, b: &Rows) -> Rows {
    let inner = b.len();
    let c = b.first().map_or(0, Vec::len);
    a.iter().map(|r| (0..c).map(|j| (0..inner).map(|k| r[k] * b[k][j]).sum()).collect()).collect()
}

/// A random pair `(d_in, d_out)` with `d_out d_in = 0` on ambient rank `n`.
///
/// `d_out` is a random combination of rows orthogonal to the columns of
/// `d_in`, found by brute force among small integer vectors.
pub fn random_composable(rng: &mut ChaCha8Rng, n: usize) -> (Rows, Rows) {
    let a = rng.gen_range(0..=n);
    let low_rank = rng.gen_range(0..=a.min(n));
    // d_in = p * q with an n x low_rank factor, to get nontrivial kernels and torsion
    let p = random_rows(rng, n, low_rank, 3);
    let q = random_rows(rng, low_rank, a, 3);
    let d_in = if low_rank == 0 { vec![vec![0; a]; n] } else { mul(&p, &q) };
    let orthogonal: Vec<Vec<i64>> = (0..5i64.pow(n as u32))
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let x = k % 5 - 2;
                    k /= 5;
                    x
                })
                .collect::<Vec<i64>>()
        })
        .filter(|v| v.iter().any(|&x| x != 0))
        .filter(|v| (0..a).all(|j| (0..n).map(|i| v[i] * d_in[i][j]).sum::<i64>() == 0))
        .collect();
    let b = rng.gen_range(0..=3);
    let d_out: Rows = (0..b)
        .map(|_| {
            if orthogonal.is_empty() {
                vec![0; n]
            } else {
                let mut row = vec![0; n];
                for _ in 0..2 {
                    let v = &orthogonal[rng.gen_range(0..orthogonal.len())];
                    let c = rng.gen_range(-2..=2);
                    row.iter_mut().zip(v).for_each(|(x, y)| *x += c * y);
                }
                row
            }
        })
        .collect();
    (d_in, d_out)
}
