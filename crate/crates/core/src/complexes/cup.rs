use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{Cochain, Coeff, ComplexError, DeltaComplex};

/// Coefficient pairings for cup products of gauge-fixed cochains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pairing {
    /// `Z/2 (x) Z/2 -> Z/2`
    Z2Z2,
    /// `Z- (x) Z- -> Z` (the sign actions cancel)
    ZMinusZMinus,
    /// `Z (x) Z -> Z`
    ZZ,
    /// `Z (x) Z- -> Z-`, in either order
    ZZMinus,
    /// Ordinary integral cup product on the cover.
    LambdaLambda,
}

impl Pairing {
    pub fn for_inputs(a: Coeff, b: Coeff) -> Option<Pairing> {
        use Coeff::*;
        Some(match (a, b) {
            (Z2, Z2) => Pairing::Z2Z2,
            (ZMinus, ZMinus) => Pairing::ZMinusZMinus,
            (Z, Z) => Pairing::ZZ,
            (Z, ZMinus) | (ZMinus, Z) => Pairing::ZZMinus,
            (Lambda, Lambda) => Pairing::LambdaLambda,
            _ => return None,
        })
    }

    pub fn output(self) -> Coeff {
        match self {
            Pairing::Z2Z2 => Coeff::Z2,
            Pairing::ZMinusZMinus | Pairing::ZZ => Coeff::Z,
            Pairing::ZZMinus => Coeff::ZMinus,
            Pairing::LambdaLambda => Coeff::Lambda,
        }
    }
}

/// Values of a gauge-fixed cochain on every simplex of the cover.
fn expand(d: &DeltaComplex, phi: &Cochain) -> Result<Vec<BigInt>, ComplexError> {
    let (reps, slots) = d.orbits(phi.degree);
    let expected = reps.len() * phi.coeff.width();
    if phi.values.len() != expected {
        return Err(ComplexError::CochainLength {
            degree: phi.degree,
            expected,
            found: phi.values.len(),
        });
    }
    Ok(slots
        .iter()
        .map(|s| {
            let t = s.tau_power as usize;
            match phi.coeff {
                Coeff::Z | Coeff::Z2 => phi.values[s.orbit].clone(),
                Coeff::ZMinus if t == 1 => -&phi.values[s.orbit],
                Coeff::ZMinus => phi.values[s.orbit].clone(),
                Coeff::Lambda => phi.values[2 * s.orbit + t].clone(),
            }
        })
        .collect())
}

/// Alexander-Whitney cup product `(phi u psi)(s) = phi(front_p s) * psi(back_q s)`.
pub fn aw_cup(
    d: &DeltaComplex,
    phi: &Cochain,
    psi: &Cochain,
    pairing: Pairing,
) -> Result<Cochain, ComplexError> {
    if Pairing::for_inputs(phi.coeff, psi.coeff) != Some(pairing) {
        return Err(ComplexError::PairingMismatch {
            pairing,
            left: phi.coeff,
            right: psi.coeff,
        });
    }
    let (p, q) = (phi.degree, psi.degree);
    let n = p + q;
    let out = pairing.output();
    if n > d.dim() {
        return Ok(Cochain::new(n, out, Vec::new()));
    }
    let f = expand(d, phi)?;
    let g = expand(d, psi)?;
    let eval = |s: usize| -> BigInt {
        let a = &f[d.front_face(n, s, p)];
        if a.is_zero() {
            return BigInt::zero();
        }
        a * &g[d.back_face(n, s, q)]
    };
    let (reps, _) = d.orbits(n);
    let mut values = Vec::with_capacity(reps.len() * out.width());
    for &s in &reps {
        values.push(eval(s));
        if out == Coeff::Lambda {
            values.push(eval(d.involution(n, s)));
        }
    }
    Ok(Cochain::new(n, out, values))
}
