//! The Z/2-index decision tree.
//!
//! Each verdict carries certificates for the bounds it asserts and the list of
//! hypotheses that were checked on the way. Index 2 against 3 is decided by
//! the existence of an antisymmetric class `s` in `H^2(X, Z)` with
//! `d_3^{0,2}(s) != 0` and `s^2 = 0`, which becomes an isotropic-vector problem
//! with a parity constraint.

mod witness;

pub use witness::{
    isotropic_parity_witness, NoWitnessReason, QuadraticWitnessProblem, WitnessOutcome,
};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::borel::{borel_filtered_complex, d3_02, BorelError, DEFAULT_TRUNCATION};
use crate::complexes::{aw_cup, Cochain, Coeff, ComplexError, EquivariantComplex, Pairing};
use crate::exactalg::lattice::solve_integer;
use crate::exactalg::{big_json_vec, solve_in_image, ExactAlgError, IntMatrix};
use crate::obstructions::{
    connecting_cochain, primary_obstruction, x_powers, CoefficientSes, D3Membership,
    ObstructionError, PowerSource, XPowers,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeciderError {
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("the decider needs a 4-dimensional complex, got dimension {0}")]
    NotFourDimensional(usize),
    #[error("missing aux data `{0}`")]
    MissingAuxData(&'static str),
    #[error("aux basis cocycles do not match the antisymmetric classes: {0}")]
    BasisMatchFailure(String),
    /// A cross-check between independent computations failed.
    #[error("internal consistency check failed: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
    #[error(transparent)]
    Borel(#[from] BorelError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideConfig {
    /// Sup-norm bound for the witness enumeration.
    pub radius: u32,
    /// Sphere truncation of the Borel construction used for the cross-check.
    pub truncation: usize,
    /// Compare the membership form of `d_3^{0,2}` with the spectral sequence.
    pub cross_check: bool,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            radius: 8,
            truncation: DEFAULT_TRUNCATION,
            cross_check: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexStatus {
    Exact(u8),
    /// `lo < hi`, both inclusive.
    Range(u8, u8),
}

impl IndexStatus {
    pub fn is_exact(self) -> bool {
        matches!(self, IndexStatus::Exact(_))
    }

    pub fn bounds(self) -> (u8, u8) {
        match self {
            IndexStatus::Exact(k) => (k, k),
            IndexStatus::Range(lo, hi) => (lo, hi),
        }
    }
}

impl std::fmt::Display for IndexStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IndexStatus::Exact(k) => write!(f, "{k}"),
            IndexStatus::Range(lo, hi) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub claim: String,
    pub witness: Value,
}

/// A hypothesis and whether it holds; `None` when it was not checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assumption {
    pub name: &'static str,
    pub holds: Option<bool>,
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WarningKind {
    MissingAuxData,
    /// Aux data that is not verified against the complex influenced the verdict.
    UnverifiedAuxData,
    SearchExhausted,
    HypothesisFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub kind: WarningKind,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndexVerdict {
    pub status: IndexStatus,
    pub certificates: Vec<Certificate>,
    pub assumptions: Vec<Assumption>,
    pub warnings: Vec<Warning>,
}

fn cochain_json(z: &Cochain) -> Value {
    json!({ "degree": z.degree, "coeff": z.coeff.name(), "values": big_json_vec(&z.values) })
}

/// The parity-constrained square form on `H^2(X, Z)^{as}`.
///
/// With a triangulation the Gram matrix is computed from cup products on the
/// cover; otherwise it is read from aux `square_form`, given on the classes of
/// aux `basis_cocycles` and transported to the canonical antisymmetric basis.
pub fn square_form(
    c: &EquivariantComplex,
    radius: u32,
) -> Result<QuadraticWitnessProblem, DeciderError> {
    let membership = D3Membership::new(c)?;
    let parity = membership.functional()?;
    let n = membership.rank();
    if n == 0 {
        return Ok(QuadraticWitnessProblem::new(
            IntMatrix::zeros(0, 0),
            Vec::new(),
            radius,
        ));
    }
    let gram = match c.delta() {
        Some(d) => {
            let fundamental = c.cover_fundamental_cycle()?.ok_or_else(|| {
                DeciderError::InvariantViolation("H_4(X, Z) is not infinite cyclic".into())
            })?;
            let h2 = &membership.injection.codomain;
            let reps: Vec<Cochain> = membership
                .basis
                .iter()
                .map(|b| Cochain::new(2, Coeff::Lambda, h2.representative(b)))
                .collect();
            let mut g = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    let cup = aw_cup(d, &reps[i], &reps[j], Pairing::LambdaLambda)?;
                    g[(i, j)] = c.pairing_eval(&cup, &fundamental)?;
                }
            }
            if g != g.transpose() {
                return Err(DeciderError::InvariantViolation(
                    "cup square form is not symmetric".into(),
                ));
            }
            g
        }
        None => aux_gram(c, &membership)?,
    };
    Ok(QuadraticWitnessProblem::new(gram, parity, radius))
}

fn aux_gram(c: &EquivariantComplex, membership: &D3Membership) -> Result<IntMatrix, DeciderError> {
    let n = membership.rank();
    let form = c
        .aux
        .square_form
        .as_ref()
        .ok_or(DeciderError::MissingAuxData("square_form"))?;
    let cocycles = c
        .aux
        .basis_cocycles
        .as_ref()
        .ok_or(DeciderError::MissingAuxData("basis_cocycles"))?;
    if form.len() != n || form.iter().any(|r| r.len() != n) {
        return Err(DeciderError::BasisMatchFailure(format!(
            "square_form must be {n} x {n}"
        )));
    }
    let g_aux = IntMatrix::from_rows(n, form);
    if g_aux != g_aux.transpose() {
        return Err(DeciderError::BasisMatchFailure(
            "square_form is not symmetric".into(),
        ));
    }
    if cocycles.len() != n {
        return Err(DeciderError::BasisMatchFailure(format!(
            "{} basis cocycles for an antisymmetric group of rank {n}",
            cocycles.len()
        )));
    }
    let anti = c.antisymmetric_classes(2)?;
    // row i of p: coordinates of the i-th aux class on the canonical basis
    let mut p = IntMatrix::zeros(n, n);
    for (i, cells) in cocycles.iter().enumerate() {
        let values: Vec<BigInt> = cells
            .iter()
            .flat_map(|s| [BigInt::from(s.a), BigInt::from(s.b)])
            .collect();
        let z = Cochain::new(2, Coeff::Lambda, values);
        let (_, class) = c
            .class_of(&z)
            .map_err(|e| DeciderError::BasisMatchFailure(format!("cocycle {i}: {e}")))?;
        let coords = anti
            .subgroup
            .coordinates(&anti.group, &class)
            .ok_or_else(|| {
                DeciderError::BasisMatchFailure(format!("cocycle {i} is not antisymmetric"))
            })?;
        for (k, v) in coords.into_iter().take(n).enumerate() {
            p[(i, k)] = v;
        }
    }
    if !p.determinant().abs().is_one() {
        return Err(DeciderError::BasisMatchFailure(
            "aux classes do not form a basis of the antisymmetric classes".into(),
        ));
    }
    // g_aux = p g p^T, so g = p^{-1} g_aux p^{-T}
    let p_inv = unimodular_inverse(&p);
    Ok(p_inv.mul(&g_aux).mul(&p_inv.transpose()))
}

fn unimodular_inverse(p: &IntMatrix) -> IntMatrix {
    let n = p.rows();
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let e: Vec<BigInt> = (0..n).map(|i| BigInt::from((i == j) as i64)).collect();
            solve_integer(p, &e)
                .expect("unimodular matrices are invertible over Z")
                .particular
        })
        .collect();
    IntMatrix::from_columns(n, &cols)
}

/// Parities of `d_3^{0,2}` on the canonical antisymmetric basis, read from the
/// twisted Borel spectral sequence.
pub fn d3_parity_from_borel(
    c: &EquivariantComplex,
    truncation: usize,
) -> Result<(Vec<u8>, bool), DeciderError> {
    let f = borel_filtered_complex(c, truncation, Coeff::ZMinus)?;
    let d3 = d3_02(&f, c)?;
    let anti = c.antisymmetric_classes(2)?;
    let parity = anti
        .free_basis()
        .iter()
        .map(|b| {
            let y = solve_in_image(&d3.restriction, b)?.ok_or_else(|| {
                DeciderError::InvariantViolation("antisymmetric class not in E_3^{0,2}".into())
            })?;
            Ok(u8::from(
                !d3.hom.codomain.is_zero_element(&d3.hom.apply(&y)),
            ))
        })
        .collect::<Result<Vec<u8>, DeciderError>>()?;
    Ok((parity, d3.is_surjective()))
}

struct Builder {
    certificates: Vec<Certificate>,
    assumptions: Vec<Assumption>,
    warnings: Vec<Warning>,
}

impl Builder {
    fn certify(&mut self, claim: impl Into<String>, witness: Value) {
        self.certificates.push(Certificate {
            claim: claim.into(),
            witness,
        });
    }

    fn assume(&mut self, name: &'static str, holds: Option<bool>, note: impl Into<String>) {
        self.assumptions.push(Assumption {
            name,
            holds,
            note: note.into(),
        });
    }

    fn warn(&mut self, kind: WarningKind, message: impl Into<String>) {
        self.warnings.push(Warning {
            kind,
            message: message.into(),
        });
    }

    fn finish(self, status: IndexStatus) -> IndexVerdict {
        IndexVerdict {
            status,
            certificates: self.certificates,
            assumptions: self.assumptions,
            warnings: self.warnings,
        }
    }
}

/// Whether power `k` depends on aux data, directly or through the Bockstein chain.
fn rests_on_aux(powers: &XPowers, k: u32) -> bool {
    match powers.get(k).map(|p| p.source) {
        Some(s) if s.is_trusted_aux() => true,
        Some(PowerSource::Bockstein) if k > 1 => rests_on_aux(powers, k - 1),
        _ => false,
    }
}

fn aux_warning(b: &mut Builder, powers: &XPowers, k: u32) {
    if rests_on_aux(powers, k) {
        b.warn(
            WarningKind::UnverifiedAuxData,
            format!("x^{k} rests on aux data that is only checked to be a cocycle"),
        );
    }
}

/// Decide the Z/2-index of a free involution on a 4-dimensional complex.
pub fn decide(c: &EquivariantComplex, config: &DecideConfig) -> Result<IndexVerdict, DeciderError> {
    let report = c.validate();
    if !report.is_valid() {
        return Err(DeciderError::InvalidComplex(report.to_string()));
    }
    if c.top_degree() != 4 {
        return Err(DeciderError::NotFourDimensional(c.top_degree()));
    }
    let mut b = Builder {
        certificates: Vec::new(),
        assumptions: Vec::new(),
        warnings: Vec::new(),
    };
    b.assume("connected", Some(true), "H_0(X, Z) = Z");

    // (1) ind = 1 iff beta(x) = 0
    let powers = x_powers(c)?;
    let x = &powers.x;
    let beta = connecting_cochain(c, CoefficientSes::IntegralMod2, x)?;
    let (h2z, beta_class) = c.class_of(&beta)?;
    b.certify(
        "lower bound 1: x is the classifying class",
        json!({ "x": cochain_json(x) }),
    );
    if h2z.is_zero_element(&beta_class) {
        b.certify(
            "index 1: beta(x) = 0 in H^2(N, Z)",
            json!({ "beta_x": cochain_json(&beta), "class": big_json_vec(&beta_class) }),
        );
        return Ok(b.finish(IndexStatus::Exact(1)));
    }
    b.certify(
        "lower bound 2: beta(x) != 0 in H^2(N, Z)",
        json!({ "beta_x": cochain_json(&beta), "group": h2z.describe(), "class": big_json_vec(&beta_class) }),
    );

    // (2) top power and orientability
    let x4 = powers.get(4).expect("powers up to the top degree");
    let mut hi = 4u8;
    let mut orientable = None;
    if c.claims_closed_4_manifold {
        b.assume(
            "closed_4_manifold",
            Some(true),
            "claimed by the input, not verified",
        );
        let fc = c.fundamental_class()?;
        orientable = Some(fc.orientable);
        b.assume("orientable", Some(fc.orientable), "H_4(N, Z) = Z");
        if fc.orientable {
            if x4.nonzero == Some(true) {
                return Err(DeciderError::InvariantViolation(
                    "x^4 != 0 on an orientable orbit space".into(),
                ));
            }
            hi = 3;
            let witness = match &x4.cocycle {
                Some(z) => json!({ "x4": cochain_json(z), "source": x4.source }),
                None => {
                    json!({ "x4": null, "reason": "x^4 = rho beta(x^3) and beta(x^3) is 2-torsion in H^4(N, Z) = Z" })
                }
            };
            b.certify("upper bound 3: N is orientable, so x^4 = 0", witness);
        } else {
            match x4.nonzero {
                Some(true) => {
                    aux_warning(&mut b, &powers, 4);
                    b.certify(
                        "index 4: x^4 != 0 on a closed 4-manifold",
                        json!({ "x4": x4.cocycle.as_ref().map(cochain_json), "source": x4.source }),
                    );
                    return Ok(b.finish(IndexStatus::Exact(4)));
                }
                Some(false) => {
                    aux_warning(&mut b, &powers, 4);
                    hi = 3;
                    b.certify(
                        "upper bound 3: x^4 = 0 on a closed 4-manifold",
                        json!({ "x4": x4.cocycle.as_ref().map(cochain_json), "source": x4.source }),
                    );
                }
                None => b.warn(
                    WarningKind::MissingAuxData,
                    "x^4 is unknown (supply x_cube_cocycle or x_power_nonzero); upper bound stays 4",
                ),
            }
        }
    } else {
        b.assume(
            "closed_4_manifold",
            Some(false),
            "not claimed; the top-power criterion does not apply",
        );
    }

    // (3) primary obstruction
    let primary = primary_obstruction(c)?;
    aux_warning(&mut b, &powers, 2);
    if !primary.vanishes {
        b.certify(
            "lower bound 3: beta^-(x^2) != 0 in H^3(N, Z-)",
            json!({
                "cocycle": cochain_json(&primary.cocycle),
                "group": primary.group.describe(),
                "class": big_json_vec(&primary.class),
            }),
        );
        return Ok(b.finish(if hi == 3 {
            IndexStatus::Exact(3)
        } else {
            IndexStatus::Range(3, hi)
        }));
    }
    b.certify(
        "beta^-(x^2) = 0 in H^3(N, Z-)",
        json!({ "cocycle": cochain_json(&primary.cocycle), "group": primary.group.describe() }),
    );

    // (4) secondary obstruction
    let h1 = c.cover_h1_vanishes()?;
    b.assume("cover_h1_vanishes", Some(h1), "H_1(X, Z) = 0");
    if !(h1 && orientable == Some(true)) {
        b.warn(
            WarningKind::HypothesisFailed,
            "the secondary obstruction is only decided for orientable closed N with H_1(X, Z) = 0",
        );
        return Ok(b.finish(IndexStatus::Range(2, hi)));
    }
    let membership = D3Membership::new(c)?;
    let parity = membership.functional()?;
    if config.cross_check {
        let (borel_parity, surjective) = d3_parity_from_borel(c, config.truncation)?;
        if borel_parity != parity {
            return Err(DeciderError::InvariantViolation(format!(
                "d_3 parity {parity:?} from membership, {borel_parity:?} from the spectral sequence"
            )));
        }
        if !surjective {
            return Err(DeciderError::InvariantViolation(
                "beta^-(x^2) = 0 but d_3^{0,2} is not surjective".into(),
            ));
        }
    }
    let problem = match square_form(c, config.radius) {
        Ok(p) => p,
        Err(DeciderError::MissingAuxData(field)) => {
            b.warn(
                WarningKind::MissingAuxData,
                format!("aux `{field}` is required to decide between 2 and 3"),
            );
            return Ok(b.finish(IndexStatus::Range(2, 3)));
        }
        Err(e) => return Err(e),
    };
    if c.delta().is_none() && problem.dim() > 0 {
        b.warn(
            WarningKind::UnverifiedAuxData,
            "the square form is taken from aux `square_form` and is not verified",
        );
    }
    let form = json!({ "gram": problem.gram, "parity": problem.parity });
    match isotropic_parity_witness(&problem) {
        WitnessOutcome::Witness(v) => {
            let coords: Vec<BigInt> = v.iter().map(|&t| BigInt::from(t)).collect();
            let preimage_check = membership.preimage(&coords)?;
            if preimage_check.is_some() {
                return Err(DeciderError::InvariantViolation(
                    "witness lies in the image of H^2(N, Z-)".into(),
                ));
            }
            b.certify(
                "index 2: an antisymmetric class s with d_3(s) != 0 and s^2 = 0",
                json!({ "form": form, "s": v, "square": big_json_vec(&[problem.value(&v)]) }),
            );
            Ok(b.finish(IndexStatus::Exact(2)))
        }
        WitnessOutcome::CertifiedNone(reason) => {
            b.certify(
                "index 3: every antisymmetric class with d_3(s) != 0 has s^2 != 0",
                json!({ "form": form, "reason": reason }),
            );
            Ok(b.finish(IndexStatus::Exact(3)))
        }
        WitnessOutcome::Unknown { radius } => {
            b.warn(
                WarningKind::SearchExhausted,
                format!("no witness with sup norm <= {radius} and no anisotropy certificate"),
            );
            b.certify(
                "search exhausted",
                json!({ "form": form, "radius": radius }),
            );
            Ok(b.finish(IndexStatus::Range(2, 3)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn unimodular_inverse_roundtrip() {
        let p = IntMatrix::from_rows(2, &[[2, 1], [1, 1]]);
        assert_eq!(p.mul(&unimodular_inverse(&p)), IntMatrix::identity(2));
    }

    #[test]
    fn low_dimensional_inputs_are_rejected() {
        let c = catalog::get("circle").unwrap().complex;
        assert_eq!(
            decide(&c, &DecideConfig::default()),
            Err(DeciderError::NotFourDimensional(1))
        );
    }
}
