//! Isotropic vectors of an integral quadratic form with odd parity.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use serde::Serialize;

use crate::exactalg::IntMatrix;

/// Find `v` in `Z^n` with `v^T G v = 0` and `l(v) = 1 (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticWitnessProblem {
    pub gram: IntMatrix,
    /// Values of the parity functional on the standard basis, each 0 or 1.
    pub parity: Vec<u8>,
    /// Sup-norm bound for the enumeration.
    pub radius: u32,
}

/// Why no witness exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoWitnessReason {
    /// The parity functional vanishes identically.
    ParityVanishes,
    /// The form is positive or negative definite.
    Definite,
    /// Rank two with a discriminant that is not a rational square.
    AnisotropicBinary,
    /// Every isotropic line has even parity.
    IsotropicLinesEven,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessOutcome {
    Witness(Vec<i64>),
    CertifiedNone(NoWitnessReason),
    /// Exhausted the box of the given radius without a witness.
    Unknown {
        radius: u32,
    },
}

impl QuadraticWitnessProblem {
    pub fn new(gram: IntMatrix, parity: Vec<u8>, radius: u32) -> Self {
        assert!(
            gram.is_square() && gram.rows() == parity.len(),
            "gram and parity sizes differ"
        );
        assert_eq!(gram, gram.transpose(), "gram matrix must be symmetric");
        QuadraticWitnessProblem {
            gram,
            parity,
            radius,
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// `v^T G v`.
    pub fn value(&self, v: &[i64]) -> BigInt {
        let n = self.dim();
        let mut s = BigInt::from(0);
        for i in 0..n {
            for j in 0..n {
                s += &self.gram[(i, j)] * v[i] * v[j];
            }
        }
        s
    }

    pub fn parity_of(&self, v: &[i64]) -> u8 {
        let s: i64 = v
            .iter()
            .zip(&self.parity)
            .map(|(x, &l)| x.rem_euclid(2) * l as i64)
            .sum();
        (s % 2) as u8
    }

    fn is_witness(&self, v: &[i64]) -> bool {
        self.parity_of(v) == 1 && self.value(v) == BigInt::from(0)
    }
}

/// Enumeration order within `Z`: `0, 1, -1, 2, -2, ...`.
fn coordinate_key(x: i64) -> u64 {
    2 * x.unsigned_abs() - (x > 0) as u64
}

fn from_key(k: u64) -> i64 {
    let m = k.div_ceil(2) as i64;
    if k % 2 == 1 {
        m
    } else {
        -m
    }
}

/// Search order: sup norm first, then lexicographic in coordinate keys.
fn order_key(v: &[i64]) -> (u64, Vec<u64>) {
    let sup = v.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    (sup, v.iter().map(|&x| coordinate_key(x)).collect())
}

fn is_definite(g: &IntMatrix) -> bool {
    let n = g.rows();
    let minors: Vec<BigInt> = (1..=n)
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            g.select_rows(&idx).select_cols(&idx).determinant()
        })
        .collect();
    let zero = BigInt::from(0);
    let positive = minors.iter().all(|m| *m > zero);
    let negative = minors
        .iter()
        .enumerate()
        .all(|(k, m)| if k % 2 == 0 { *m < zero } else { *m > zero });
    n > 0 && (positive || negative)
}

fn primitive(mut v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

/// Isotropic lines of a nonzero binary form `a x^2 + 2b xy + c y^2` whose
/// discriminant `b^2 - ac` is a square. `None` if the discriminant is not a square.
fn binary_isotropic_lines(a: i64, b: i64, c: i64) -> Option<Vec<Vec<i64>>> {
    let disc = (b as i128) * (b as i128) - (a as i128) * (c as i128);
    if disc < 0 {
        return None;
    }
    let s = disc.sqrt();
    if s * s != disc {
        return None;
    }
    let s = s as i64;
    let mut lines = Vec::new();
    if a != 0 {
        // a (x/y)^2 + 2b (x/y) + c = 0
        lines.push(primitive(vec![-b + s, a]));
        lines.push(primitive(vec![-b - s, a]));
    } else {
        // y (2b x + c y) = 0
        lines.push(vec![1, 0]);
        if b != 0 {
            lines.push(primitive(vec![c, -2 * b]));
        }
    }
    lines.sort();
    lines.dedup();
    Some(lines)
}

fn exact_small(p: &QuadraticWitnessProblem) -> Option<WitnessOutcome> {
    let g = p.gram.to_i64_rows()?;
    match p.dim() {
        1 if g[0][0] == 0 => Some(WitnessOutcome::Witness(vec![1])),
        2 if g.iter().flatten().any(|&x| x != 0) => {
            let Some(lines) = binary_isotropic_lines(g[0][0], g[0][1], g[1][1]) else {
                return Some(WitnessOutcome::CertifiedNone(
                    NoWitnessReason::AnisotropicBinary,
                ));
            };
            // every isotropic vector is a multiple k v of a primitive line vector v,
            // and l(k v) = k l(v), so k = 1 is the only candidate that matters
            let best = lines
                .into_iter()
                .filter(|v| p.parity_of(v) == 1)
                .min_by_key(|v| order_key(v));
            Some(match best {
                Some(v) => WitnessOutcome::Witness(v),
                None => WitnessOutcome::CertifiedNone(NoWitnessReason::IsotropicLinesEven),
            })
        }
        _ => None,
    }
}

fn search(p: &QuadraticWitnessProblem) -> WitnessOutcome {
    let n = p.dim();
    for r in 1..=p.radius as u64 {
        // odometer over keys in 0..=2r, last coordinate fastest
        let mut keys = vec![0u64; n];
        loop {
            let v: Vec<i64> = keys.iter().map(|&k| from_key(k)).collect();
            if v.iter().any(|x| x.unsigned_abs() == r) && p.is_witness(&v) {
                return WitnessOutcome::Witness(v);
            }
            let mut exhausted = true;
            for i in (0..n).rev() {
                if keys[i] < 2 * r {
                    keys[i] += 1;
                    exhausted = false;
                    break;
                }
                keys[i] = 0;
            }
            if exhausted {
                break;
            }
        }
    }
    WitnessOutcome::Unknown { radius: p.radius }
}

/// Decide whether a witness exists, certifying absence where possible.
///
/// Absence is certified when the parity vanishes, when the form is definite,
/// or by exact analysis in rank at most two. Otherwise the sup-norm box of the
/// given radius is enumerated and the first witness in search order returned.
pub fn isotropic_parity_witness(p: &QuadraticWitnessProblem) -> WitnessOutcome {
    if p.parity.iter().all(|&l| l % 2 == 0) {
        return WitnessOutcome::CertifiedNone(NoWitnessReason::ParityVanishes);
    }
    if is_definite(&p.gram) {
        return WitnessOutcome::CertifiedNone(NoWitnessReason::Definite);
    }
    if let Some(out) = exact_small(p) {
        return out;
    }
    search(p)
}
