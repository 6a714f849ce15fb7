use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{LambdaMatrix, LambdaScalar};
use crate::exactalg::IntMatrix;

/// Coefficient module for (co)homology of the orbit space.
///
/// `Z` and `Z2` carry the trivial action, `ZMinus` the sign action, and
/// `Lambda` is the group ring itself, whose (co)homology is that of the cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coeff {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Z-")]
    ZMinus,
    #[serde(rename = "Z2")]
    Z2,
    #[serde(rename = "Lambda")]
    Lambda,
}

impl Coeff {
    pub const ALL: [Coeff; 4] = [Coeff::Z, Coeff::ZMinus, Coeff::Z2, Coeff::Lambda];

    /// Integer rank of the module over Z (or Z/2).
    pub fn width(self) -> usize {
        match self {
            Coeff::Lambda => 2,
            _ => 1,
        }
    }

    pub fn is_mod2(self) -> bool {
        self == Coeff::Z2
    }

    /// Matrix of multiplication by `s` on the module, in its Z-basis.
    /// For `Lambda` the basis is `(1, tau)`.
    pub fn scalar_block(self, s: LambdaScalar) -> [[i64; 2]; 2] {
        match self {
            Coeff::Z | Coeff::Z2 => [[s.augment(), 0], [0, 0]],
            Coeff::ZMinus => [[s.twisted(), 0], [0, 0]],
            Coeff::Lambda => [[s.a, s.b], [s.b, s.a]],
        }
    }

    /// Specializes a boundary matrix `C_n -> C_{n-1}` to `M (x) C_n -> M (x) C_{n-1}`.
    pub fn specialize(self, m: &LambdaMatrix) -> IntMatrix {
        let w = self.width();
        let mut out = IntMatrix::zeros(m.rows() * w, m.cols() * w);
        for (i, j, s) in m.nonzero_entries() {
            let blk = self.scalar_block(s);
            for (r, row) in blk.iter().enumerate().take(w) {
                for (c, &v) in row.iter().enumerate().take(w) {
                    if v != 0 {
                        out[(i * w + r, j * w + c)] = BigInt::from(v);
                    }
                }
            }
        }
        out
    }

    pub fn name(self) -> &'static str {
        match self {
            Coeff::Z => "Z",
            Coeff::ZMinus => "Z-",
            Coeff::Z2 => "Z2",
            Coeff::Lambda => "Lambda",
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Coeff {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "Z" => Ok(Coeff::Z),
            "Z-" | "Zminus" | "ZMinus" => Ok(Coeff::ZMinus),
            "Z2" | "Z/2" => Ok(Coeff::Z2),
            "Lambda" | "L" => Ok(Coeff::Lambda),
            other => Err(format!(
                "unknown coefficient system `{other}` (expected Z, Z-, Z2 or Lambda)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_specialization_is_regular_representation() {
        let m = LambdaMatrix::from_rows(1, vec![vec![LambdaScalar::new(-1, 1)]]);
        let r = Coeff::Lambda.specialize(&m);
        assert_eq!(r, IntMatrix::from_rows(2, &[[-1, 1], [1, -1]]));
        assert_eq!(
            Coeff::ZMinus.specialize(&m),
            IntMatrix::from_rows(1, &[[-2]])
        );
        assert_eq!(Coeff::Z.specialize(&m), IntMatrix::from_rows(1, &[[0]]));
    }

    #[test]
    fn scalar_blocks_respect_products() {
        // block(x*y) == block(x) * block(y) for every coefficient system
        let xs = [
            LambdaScalar::new(2, -1),
            LambdaScalar::new(0, 3),
            LambdaScalar::new(1, 1),
        ];
        for c in Coeff::ALL {
            for &x in &xs {
                for &y in &xs {
                    let w = c.width();
                    let bx = c.scalar_block(x);
                    let by = c.scalar_block(y);
                    let bxy = c.scalar_block(x * y);
                    for i in 0..w {
                        for j in 0..w {
                            let p: i64 = (0..w).map(|k| bx[i][k] * by[k][j]).sum();
                            assert_eq!(p, bxy[i][j], "{c} {x} {y}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("Z-".parse::<Coeff>().unwrap(), Coeff::ZMinus);
        assert!("Q".parse::<Coeff>().is_err());
    }
}
