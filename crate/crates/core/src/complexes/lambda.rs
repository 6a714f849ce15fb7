use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element `a + b*tau` of the group ring of the order-two group.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LambdaScalar {
    pub a: i64,
    pub b: i64,
}

impl LambdaScalar {
    pub const ZERO: LambdaScalar = LambdaScalar { a: 0, b: 0 };
    pub const ONE: LambdaScalar = LambdaScalar { a: 1, b: 0 };
    pub const TAU: LambdaScalar = LambdaScalar { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        LambdaScalar { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// tau -> 1
    pub fn augment(self) -> i64 {
        self.a + self.b
    }

    /// tau -> -1
    pub fn twisted(self) -> i64 {
        self.a - self.b
    }

    /// Multiplication by tau swaps the coordinates.
    pub fn times_tau(self) -> Self {
        LambdaScalar {
            a: self.b,
            b: self.a,
        }
    }
}

impl From<[i64; 2]> for LambdaScalar {
    fn from([a, b]: [i64; 2]) -> Self {
        LambdaScalar { a, b }
    }
}

impl From<LambdaScalar> for [i64; 2] {
    fn from(s: LambdaScalar) -> Self {
        [s.a, s.b]
    }
}

impl From<i64> for LambdaScalar {
    fn from(a: i64) -> Self {
        LambdaScalar { a, b: 0 }
    }
}

impl Add for LambdaScalar {
    type Output = LambdaScalar;
    fn add(self, o: Self) -> Self {
        LambdaScalar::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for LambdaScalar {
    type Output = LambdaScalar;
    fn sub(self, o: Self) -> Self {
        LambdaScalar::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for LambdaScalar {
    type Output = LambdaScalar;
    fn neg(self) -> Self {
        LambdaScalar::new(-self.a, -self.b)
    }
}

impl Mul for LambdaScalar {
    type Output = LambdaScalar;
    // (a + b t)(c + d t) = (ac + bd) + (ad + bc) t since t^2 = 1
    fn mul(self, o: Self) -> Self {
        LambdaScalar::new(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl fmt::Debug for LambdaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LambdaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "t"),
            (0, -1) => write!(f, "-t"),
            (0, b) => write!(f, "{b}t"),
            (a, 1) => write!(f, "{a}+t"),
            (a, -1) => write!(f, "{a}-t"),
            (a, b) if b < 0 => write!(f, "{a}{b}t"),
            (a, b) => write!(f, "{a}+{b}t"),
        }
    }
}

/// Matrix over the group ring, row-major. Column `j` of a boundary matrix is
/// the boundary of the `j`-th cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LambdaScalar>,
}

impl LambdaMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LambdaMatrix {
            rows,
            cols,
            data: vec![LambdaScalar::ZERO; rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<LambdaScalar>>) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, v) in r.into_iter().enumerate() {
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

    pub fn get(&self, i: usize, j: usize) -> LambdaScalar {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LambdaScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: LambdaScalar) {
        let k = i * self.cols + j;
        self.data[k] = self.data[k] + v;
    }

    pub fn to_rows(&self) -> Vec<Vec<LambdaScalar>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn mul(&self, other: &LambdaMatrix) -> LambdaMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = LambdaMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.add_to(i, j, a * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, LambdaScalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(k, s)| (k / self.cols, k % self.cols, *s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_structure() {
        let t = LambdaScalar::TAU;
        assert_eq!(t * t, LambdaScalar::ONE);
        let one_plus = LambdaScalar::new(1, 1);
        let minus = LambdaScalar::new(-1, 1);
        assert_eq!(one_plus * minus, LambdaScalar::ZERO);
        assert_eq!(one_plus * one_plus, LambdaScalar::new(2, 2));
        assert_eq!(
            LambdaScalar::new(2, 3) * LambdaScalar::new(5, 7),
            LambdaScalar::new(31, 29)
        );
    }

    #[test]
    fn specializations_are_ring_maps() {
        let samples = [(2, 3), (-1, 4), (0, 1), (5, -5)];
        for &(a, b) in &samples {
            for &(c, d) in &samples {
                let x = LambdaScalar::new(a, b);
                let y = LambdaScalar::new(c, d);
                assert_eq!((x * y).augment(), x.augment() * y.augment());
                assert_eq!((x * y).twisted(), x.twisted() * y.twisted());
                assert_eq!((x + y).twisted(), x.twisted() + y.twisted());
            }
        }
    }

    #[test]
    fn serde_as_pair() {
        let s: LambdaScalar = serde_json::from_str("[1, -1]").unwrap();
        assert_eq!(s, LambdaScalar::new(1, -1));
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,-1]");
    }
}
