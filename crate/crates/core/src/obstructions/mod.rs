//! Bockstein homomorphisms, powers of the classifying class, the primary
//! obstruction `beta^-(x^2)` and the membership form of the differential
//! `d_3^{0,2}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::complexes::{aw_cup, Cochain, Coeff, ComplexError, EquivariantComplex, Pairing};
use crate::exactalg::{
    induced_hom, solve_in_image, AbelianGroup, ExactAlgError, GroupHom, IntMatrix,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("{0} is not a cocycle")]
    NotACocycle(String),
    #[error("lift-and-divide failed: {0}")]
    LiftDivisionFailure(String),
    #[error("missing aux data `{0}`")]
    MissingAuxData(&'static str),
    #[error("H_1(X, Z) is nonzero; the membership map is not defined")]
    HypothesisH1Nonzero,
    #[error("coordinates have length {found}, expected {expected}")]
    CoordinateLength { expected: usize, found: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

/// The three short exact coefficient sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CoefficientSes {
    /// `Z -x2-> Z -> Z/2`, connecting map `beta`.
    IntegralMod2,
    /// `Z- -x2-> Z- -> Z/2`, connecting map `beta^-`.
    TwistedMod2,
    /// `Z- -(t-1)-> Lambda -> Z`, augmentation as surjection.
    TwistedLambda,
}

impl CoefficientSes {
    pub const ALL: [CoefficientSes; 3] = [
        CoefficientSes::IntegralMod2,
        CoefficientSes::TwistedMod2,
        CoefficientSes::TwistedLambda,
    ];

    pub fn sub(self) -> Coeff {
        match self {
            CoefficientSes::IntegralMod2 => Coeff::Z,
            _ => Coeff::ZMinus,
        }
    }

    pub fn middle(self) -> Coeff {
        match self {
            CoefficientSes::IntegralMod2 => Coeff::Z,
            CoefficientSes::TwistedMod2 => Coeff::ZMinus,
            CoefficientSes::TwistedLambda => Coeff::Lambda,
        }
    }

    pub fn quotient(self) -> Coeff {
        match self {
            CoefficientSes::TwistedLambda => Coeff::Z,
            _ => Coeff::Z2,
        }
    }

    /// Cochain-level injection `C^q(sub) -> C^q(middle)` on `n` cells.
    pub fn injection(self, n: usize) -> IntMatrix {
        match self {
            CoefficientSes::TwistedLambda => {
                let mut m = IntMatrix::zeros(2 * n, n);
                for i in 0..n {
                    m[(2 * i, i)] = BigInt::from(-1);
                    m[(2 * i + 1, i)] = BigInt::from(1);
                }
                m
            }
            _ => IntMatrix::identity(n).scale(&BigInt::from(2)),
        }
    }

    /// Cochain-level surjection `C^q(middle) -> C^q(quotient)` on `n` cells.
    pub fn surjection(self, n: usize) -> IntMatrix {
        match self {
            CoefficientSes::TwistedLambda => {
                let mut m = IntMatrix::zeros(n, 2 * n);
                for i in 0..n {
                    m[(i, 2 * i)] = BigInt::one();
                    m[(i, 2 * i + 1)] = BigInt::one();
                }
                m
            }
            _ => IntMatrix::identity(n),
        }
    }

    /// A linear section of the surjection on cochain values.
    fn lift(self, v: &[BigInt]) -> Vec<BigInt> {
        match self {
            CoefficientSes::TwistedLambda => {
                v.iter().flat_map(|x| [x.clone(), BigInt::zero()]).collect()
            }
            _ => v.to_vec(),
        }
    }

    /// Inverse of the injection on its image.
    fn divide(self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        match self {
            CoefficientSes::TwistedLambda => v
                .chunks(2)
                .map(|p| (&p[0] + &p[1]).is_zero().then(|| p[1].clone()))
                .collect(),
            _ => {
                let two = BigInt::from(2);
                v.iter()
                    .map(|x| x.is_multiple_of(&two).then(|| x / &two))
                    .collect()
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CoefficientSes::IntegralMod2 => "Z -> Z -> Z2",
            CoefficientSes::TwistedMod2 => "Z- -> Z- -> Z2",
            CoefficientSes::TwistedLambda => "Z- -> Lambda -> Z",
        }
    }
}

/// Cochain-level connecting map: lift, apply the coboundary, divide.
///
/// Returns a `(q + 1)`-cocycle with `ses.sub()` coefficients. The result is
/// recomputed from a second lift and the two are checked to be cohomologous.
pub fn connecting_cochain(
    c: &EquivariantComplex,
    ses: CoefficientSes,
    z: &Cochain,
) -> Result<Cochain, ObstructionError> {
    if z.coeff != ses.quotient() {
        return Err(ObstructionError::LiftDivisionFailure(format!(
            "expected {} coefficients, got {}",
            ses.quotient(),
            z.coeff
        )));
    }
    c.check_length(z)?;
    if !c.is_cocycle(z) {
        return Err(ObstructionError::NotACocycle(format!(
            "degree-{} {} cochain",
            z.degree, z.coeff
        )));
    }
    let q = z.degree;
    let run = |lift: Vec<BigInt>| -> Result<Cochain, ObstructionError> {
        let d = c.coboundary(ses.middle(), q).mul_vec(&lift);
        let v = ses.divide(&d).ok_or_else(|| {
            ObstructionError::LiftDivisionFailure(format!("{} in degree {q}", ses.name()))
        })?;
        Ok(Cochain::new(q + 1, ses.sub(), v))
    };
    let first = run(ses.lift(&z.values))?;
    if q < c.top_degree() {
        // second lift: add the image of a fixed sub-cochain
        let n = c.rank(q);
        let w: Vec<BigInt> = (0..n).map(|i| BigInt::from((i % 3) as i64 + 1)).collect();
        let shifted: Vec<BigInt> = ses
            .lift(&z.values)
            .iter()
            .zip(ses.injection(n).mul_vec(&w))
            .map(|(a, b)| a + b)
            .collect();
        let second = run(shifted)?;
        let g = c.cohomology(ses.sub(), q + 1)?;
        let diff: Vec<BigInt> = first
            .values
            .iter()
            .zip(&second.values)
            .map(|(a, b)| a - b)
            .collect();
        let cls = g.class_of(&diff).map_err(|_| {
            ObstructionError::LiftDivisionFailure("connecting cochain is not a cocycle".into())
        })?;
        if !g.is_zero_element(&cls) {
            return Err(ObstructionError::LiftDivisionFailure(
                "result depends on the lift".into(),
            ));
        }
    }
    Ok(first)
}

/// Connecting homomorphism `H^q(quotient) -> H^{q+1}(sub)` on group coordinates.
pub fn connecting_hom(
    c: &EquivariantComplex,
    ses: CoefficientSes,
    q: usize,
    class: &[BigInt],
) -> Result<Vec<BigInt>, ObstructionError> {
    let h = connecting_group_hom(c, ses, q)?;
    if class.len() != h.domain.ngens() {
        return Err(ObstructionError::CoordinateLength {
            expected: h.domain.ngens(),
            found: class.len(),
        });
    }
    Ok(h.apply(class))
}

/// The connecting homomorphism as a map of computed groups.
pub fn connecting_group_hom(
    c: &EquivariantComplex,
    ses: CoefficientSes,
    q: usize,
) -> Result<GroupHom, ObstructionError> {
    let dom = c.cohomology(ses.quotient(), q)?;
    let cod = if q < c.top_degree() {
        c.cohomology(ses.sub(), q + 1)?
    } else {
        AbelianGroup::trivial()
    };
    let mut cols = Vec::with_capacity(dom.ngens());
    for j in 0..dom.ngens() {
        if q >= c.top_degree() {
            cols.push(Vec::new());
            continue;
        }
        let z = Cochain::new(q, ses.quotient(), dom.representative(&dom.generator(j)));
        let b = connecting_cochain(c, ses, &z)?;
        cols.push(cod.class_of(&b.values)?);
    }
    Ok(GroupHom {
        matrix: IntMatrix::from_columns(cod.ngens(), &cols),
        domain: dom,
        codomain: cod,
    })
}

/// `H^q(sub) -> H^q(middle)` induced by the injection.
pub fn induced_injection(
    c: &EquivariantComplex,
    ses: CoefficientSes,
    q: usize,
) -> Result<GroupHom, ObstructionError> {
    let dom = c.cohomology(ses.sub(), q)?;
    let cod = c.cohomology(ses.middle(), q)?;
    Ok(induced_hom(&ses.injection(c.rank(q)), &dom, &cod)?)
}

/// `H^q(middle) -> H^q(quotient)` induced by the surjection.
pub fn induced_surjection(
    c: &EquivariantComplex,
    ses: CoefficientSes,
    q: usize,
) -> Result<GroupHom, ObstructionError> {
    let dom = c.cohomology(ses.middle(), q)?;
    let cod = c.cohomology(ses.quotient(), q)?;
    Ok(induced_hom(&ses.surjection(c.rank(q)), &dom, &cod)?)
}

/// Mod-2 reduction of an integral or twisted cochain.
pub fn reduce_mod2(z: &Cochain) -> Cochain {
    Cochain::new(z.degree, Coeff::Z2, z.values.clone())
}

/// `rho(beta(z))`: the Bockstein of a mod-2 cocycle, reduced mod 2 (that is, `Sq^1 z`).
pub fn rho_beta(c: &EquivariantComplex, z: &Cochain) -> Result<Cochain, ObstructionError> {
    Ok(reduce_mod2(&connecting_cochain(
        c,
        CoefficientSes::IntegralMod2,
        z,
    )?))
}

/// Where a power of `x` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PowerSource {
    /// Alexander-Whitney cup product on the triangulation.
    Cup,
    /// The identity `x^{2k} = rho beta(x^{2k-1})`, valid for any mod-2 class of odd degree.
    Bockstein,
    /// A cocycle supplied as aux data (checked to be a cocycle only).
    AuxCocycle,
    /// A nonvanishing flag supplied as aux data.
    AuxFlag,
    Unknown,
}

impl PowerSource {
    /// Whether the value rests on unverifiable aux data.
    pub fn is_trusted_aux(self) -> bool {
        matches!(self, PowerSource::AuxCocycle | PowerSource::AuxFlag)
    }
}

#[derive(Clone, Debug)]
pub struct Power {
    pub k: u32,
    pub cocycle: Option<Cochain>,
    pub nonzero: Option<bool>,
    pub source: PowerSource,
}

/// The classifying class and its powers `x^1 .. x^D`.
#[derive(Clone, Debug)]
pub struct XPowers {
    pub x: Cochain,
    pub powers: Vec<Power>,
}

impl XPowers {
    pub fn get(&self, k: u32) -> Option<&Power> {
        self.powers.iter().find(|p| p.k == k)
    }

    pub fn nonzero(&self, k: u32) -> Option<bool> {
        self.get(k).and_then(|p| p.nonzero)
    }
}

fn class_nonzero(c: &EquivariantComplex, z: &Cochain) -> Result<bool, ObstructionError> {
    if z.degree > c.top_degree() {
        return Ok(false);
    }
    let (g, coords) = c.class_of(z).map_err(|e| match e {
        ComplexError::NotACocycle { what } => ObstructionError::NotACocycle(what),
        other => other.into(),
    })?;
    Ok(!g.is_zero_element(&coords))
}

fn aux_cocycle(
    c: &EquivariantComplex,
    k: usize,
    v: &[i64],
    what: &str,
) -> Result<Cochain, ObstructionError> {
    let z = Cochain::from_i64(k, Coeff::Z2, v);
    c.check_length(&z)?;
    if !c.is_cocycle(&z) {
        return Err(ObstructionError::NotACocycle(what.to_string()));
    }
    Ok(z)
}

/// Powers of the classifying class.
///
/// With a triangulation every power is a cup product. Otherwise even powers
/// come from `x^{2k} = Sq^1 x^{2k-1} = rho beta(x^{2k-1})`, and odd powers from
/// aux cocycles or flags.
pub fn x_powers(c: &EquivariantComplex) -> Result<XPowers, ObstructionError> {
    let x = c.classifying_cocycle()?;
    let top = c.top_degree() as u32;
    let mut powers: Vec<Power> = vec![Power {
        k: 1,
        nonzero: Some(true),
        cocycle: Some(x.clone()),
        source: PowerSource::Cup,
    }];
    if let Some(d) = c.delta() {
        let mut cur = x.clone();
        for k in 2..=top {
            cur = aw_cup(d, &cur, &x, Pairing::Z2Z2)?;
            powers.push(Power {
                k,
                nonzero: Some(class_nonzero(c, &cur)?),
                cocycle: Some(cur.clone()),
                source: PowerSource::Cup,
            });
        }
        return Ok(XPowers { x, powers });
    }
    for k in 2..=top {
        let prev = powers.last().unwrap();
        let (cocycle, source) = if k % 2 == 0 {
            match (&prev.cocycle, k == 2, &c.aux.x_square_cocycle) {
                (_, true, Some(v)) => (
                    Some(aux_cocycle(c, 2, v, "x_square_cocycle")?),
                    PowerSource::AuxCocycle,
                ),
                (Some(p), _, _) => (Some(rho_beta(c, p)?), PowerSource::Bockstein),
                (None, _, _) => (None, PowerSource::Unknown),
            }
        } else {
            match (k, &c.aux.x_cube_cocycle) {
                (3, Some(v)) => (
                    Some(aux_cocycle(c, 3, v, "x_cube_cocycle")?),
                    PowerSource::AuxCocycle,
                ),
                _ => (None, PowerSource::Unknown),
            }
        };
        let (nonzero, source) = match &cocycle {
            Some(z) => (Some(class_nonzero(c, z)?), source),
            None => match c.aux.power_flag(k) {
                Some(f) => (Some(f), PowerSource::AuxFlag),
                // a power above a vanishing power vanishes
                None if prev.nonzero == Some(false) => (Some(false), PowerSource::Bockstein),
                None => (None, PowerSource::Unknown),
            },
        };
        powers.push(Power {
            k,
            cocycle,
            nonzero,
            source,
        });
    }
    Ok(XPowers { x, powers })
}

/// `beta^-(x^2)` in `H^3(N, Z-)`.
#[derive(Clone, Debug)]
pub struct PrimaryObstruction {
    pub x_square: Cochain,
    pub x_square_source: PowerSource,
    pub cocycle: Cochain,
    pub group: AbelianGroup,
    pub class: Vec<BigInt>,
    pub vanishes: bool,
}

pub fn primary_obstruction(c: &EquivariantComplex) -> Result<PrimaryObstruction, ObstructionError> {
    let powers = x_powers(c)?;
    let sq = powers
        .get(2)
        .and_then(|p| p.cocycle.clone().map(|z| (z, p.source)))
        .ok_or(ObstructionError::MissingAuxData("x_square_cocycle"))?;
    let cocycle = connecting_cochain(c, CoefficientSes::TwistedMod2, &sq.0)?;
    let (group, class) = c.class_of(&cocycle)?;
    let vanishes = group.is_zero_element(&class);
    Ok(PrimaryObstruction {
        x_square: sq.0,
        x_square_source: sq.1,
        cocycle,
        group,
        class,
        vanishes,
    })
}

/// Membership of antisymmetric classes in the image of `H^2(N, Z-)`.
#[derive(Clone, Debug)]
pub struct D3Membership {
    /// Canonical basis of `H^2(X, Z)^{as}` in coordinates of `H^2(X, Z)`.
    pub basis: Vec<Vec<BigInt>>,
    /// `H^2(N, Z-) -> H^2(X, Z)` induced by multiplication with `t - 1`.
    pub injection: GroupHom,
}

impl D3Membership {
    pub fn new(c: &EquivariantComplex) -> Result<Self, ObstructionError> {
        if !c.cover_h1_vanishes()? {
            return Err(ObstructionError::HypothesisH1Nonzero);
        }
        let anti = c.antisymmetric_classes(2)?;
        let injection = induced_injection(c, CoefficientSes::TwistedLambda, 2)?;
        Ok(D3Membership {
            basis: anti.free_basis().to_vec(),
            injection,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn element(&self, y: &[BigInt]) -> Vec<BigInt> {
        let g = &self.injection.codomain;
        let mut acc = g.zero();
        for (b, c) in self.basis.iter().zip(y) {
            let term: Vec<BigInt> = b.iter().map(|v| v * c).collect();
            acc = g.add(&acc, &term);
        }
        acc
    }

    /// A preimage in `H^2(N, Z-)` of `y` (coordinates on the antisymmetric basis).
    pub fn preimage(&self, y: &[BigInt]) -> Result<Option<Vec<BigInt>>, ObstructionError> {
        if y.len() != self.rank() {
            return Err(ObstructionError::CoordinateLength {
                expected: self.rank(),
                found: y.len(),
            });
        }
        Ok(solve_in_image(&self.injection, &self.element(y))?)
    }

    /// 0 if `y` lies in the image, 1 otherwise.
    pub fn value(&self, y: &[BigInt]) -> Result<u8, ObstructionError> {
        Ok(if self.preimage(y)?.is_some() { 0 } else { 1 })
    }

    /// Values on the basis vectors.
    pub fn functional(&self) -> Result<Vec<u8>, ObstructionError> {
        (0..self.rank())
            .map(|i| {
                let e: Vec<BigInt> = (0..self.rank())
                    .map(|j| BigInt::from((i == j) as i64))
                    .collect();
                self.value(&e)
            })
            .collect()
    }
}

/// `d_3^{0,2}(y)` computed as the failure of `y` to come from `H^2(N, Z-)`.
pub fn d3_membership(c: &EquivariantComplex, y: &[BigInt]) -> Result<u8, ObstructionError> {
    D3Membership::new(c)?.value(y)
}
