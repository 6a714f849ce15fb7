use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{
    AuxData, Coeff, ComplexError, DeltaComplex, LambdaMatrix, ValidationReport, Violation,
};
use crate::exactalg::{
    induced_hom, subgroup_of, subquotient_group, subquotient_group_mod2, AbelianGroup, GroupHom,
    IntMatrix, Subgroup,
};

/// A cochain with values on the orbit representatives.
///
/// `values` has `rank * coeff.width()` entries; `Z2` values are kept in `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub coeff: Coeff,
    pub values: Vec<BigInt>,
}

impl Cochain {
    pub fn new(degree: usize, coeff: Coeff, values: Vec<BigInt>) -> Self {
        let values = if coeff.is_mod2() {
            values
                .into_iter()
                .map(|v| v.mod_floor(&BigInt::from(2)))
                .collect()
        } else {
            values
        };
        Cochain {
            degree,
            coeff,
            values,
        }
    }

    pub fn from_i64(degree: usize, coeff: Coeff, values: &[i64]) -> Self {
        Self::new(
            degree,
            coeff,
            values.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }

    pub fn zero(c: &EquivariantComplex, degree: usize, coeff: Coeff) -> Self {
        Cochain {
            degree,
            coeff,
            values: vec![BigInt::zero(); c.cochain_dim(coeff, degree)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.values
            .iter()
            .map(|v| i64::try_from(v).expect("cochain value fits in i64"))
            .collect()
    }
}

/// Orientation data of a closed orbit space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalClass {
    pub orientable: bool,
    /// Generator of `H_D(N, Z)` with first nonzero entry positive, when orientable.
    pub integral: Option<Vec<BigInt>>,
    /// Generator of `H_D(N, Z/2)`, when that group is `Z/2`.
    pub mod2: Option<Vec<BigInt>>,
}

impl FundamentalClass {
    pub fn integral_cycle(&self) -> Result<&[BigInt], ComplexError> {
        self.integral.as_deref().ok_or(ComplexError::NonOrientable)
    }
}

/// The antisymmetric part `{y : tau^* y = -y}` of `H^q(X, Z)`.
#[derive(Clone, Debug)]
pub struct AntisymmetricClasses {
    pub group: AbelianGroup,
    pub tau: GroupHom,
    pub subgroup: Subgroup,
}

impl AntisymmetricClasses {
    /// Canonical basis of the free part, in group coordinates of `H^q(X, Z)`.
    pub fn free_basis(&self) -> &[Vec<BigInt>] {
        self.subgroup.free_generators()
    }

    pub fn rank(&self) -> usize {
        self.subgroup.free_rank
    }

    /// Group element with the given coordinates on the free basis.
    pub fn element(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut acc = self.group.zero();
        for (g, c) in self.free_basis().iter().zip(coords) {
            let term: Vec<BigInt> = g.iter().map(|v| v * c).collect();
            acc = self.group.add(&acc, &term);
        }
        acc
    }
}

/// A free involution on a finite complex, as a free `Lambda`-chain complex.
///
/// `boundaries[n - 1]` is `d_n : C_n -> C_{n-1}`, an `r_{n-1} x r_n` matrix whose
/// column `j` is the boundary of cell `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantComplex {
    pub name: String,
    ranks: Vec<usize>,
    boundaries: Vec<LambdaMatrix>,
    pub claims_closed_4_manifold: bool,
    delta: Option<DeltaComplex>,
    pub aux: AuxData,
    pub note: Option<String>,
}

impl EquivariantComplex {
    pub fn from_lambda(
        name: impl Into<String>,
        ranks: Vec<usize>,
        boundaries: Vec<LambdaMatrix>,
    ) -> Self {
        EquivariantComplex {
            name: name.into(),
            ranks,
            boundaries,
            claims_closed_4_manifold: false,
            delta: None,
            aux: AuxData::default(),
            note: None,
        }
    }

    /// Builds the orbit-representative Lambda-complex of a Delta-complex.
    pub fn from_delta(name: impl Into<String>, delta: DeltaComplex) -> Result<Self, ComplexError> {
        let v = delta.validate();
        if !v.is_empty() {
            return Err(ComplexError::Invalid(ValidationReport { violations: v }));
        }
        let (ranks, boundaries) = delta.lambda_boundaries();
        let mut c = Self::from_lambda(name, ranks, boundaries);
        c.delta = Some(delta);
        Ok(c)
    }

    pub fn with_aux(mut self, aux: AuxData) -> Self {
        self.aux = aux;
        self
    }

    pub fn claiming_manifold(mut self, claim: bool) -> Self {
        self.claims_closed_4_manifold = claim;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Attaches a refinement without checking it; `validate` compares the two.
    pub fn with_delta(mut self, delta: DeltaComplex) -> Self {
        self.delta = Some(delta);
        self
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, q: usize) -> usize {
        self.ranks.get(q).copied().unwrap_or(0)
    }

    /// `d_n` for `1 <= n <= D`.
    pub fn boundary(&self, n: usize) -> &LambdaMatrix {
        &self.boundaries[n - 1]
    }

    pub fn boundaries(&self) -> &[LambdaMatrix] {
        &self.boundaries
    }

    pub fn delta(&self) -> Option<&DeltaComplex> {
        self.delta.as_ref()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        if self.ranks.is_empty() {
            out.push(Violation::Empty);
            return ValidationReport { violations: out };
        }
        let d = self.top_degree();
        for n in 1..=d.max(self.boundaries.len()) {
            let expected = (self.rank(n - 1), self.rank(n));
            let found = self
                .boundaries
                .get(n - 1)
                .map_or((0, 0), |m| (m.rows(), m.cols()));
            if n > d || n > self.boundaries.len() || expected != found {
                out.push(Violation::BoundaryShape {
                    degree: n,
                    expected,
                    found,
                });
            }
        }
        if !out.is_empty() {
            return ValidationReport { violations: out };
        }
        for n in 2..=d {
            if !self.boundary(n - 1).mul(self.boundary(n)).is_zero() {
                out.push(Violation::CompositionNonzero { degree: n });
            }
        }
        if out.is_empty() {
            match self.homology(Coeff::Lambda, 0) {
                Ok(h0) if h0.free_rank() == 1 && h0.torsion().is_empty() => {}
                Ok(h0) => out.push(Violation::Disconnected { h0: h0.describe() }),
                Err(e) => out.push(Violation::Disconnected { h0: e.to_string() }),
            }
        }
        if let Some(delta) = &self.delta {
            let dv = delta.validate();
            if dv.is_empty() {
                let (ranks, bds) = delta.lambda_boundaries();
                if ranks != self.ranks {
                    out.push(Violation::DeltaMismatch {
                        detail: format!("orbit counts {ranks:?} vs ranks {:?}", self.ranks),
                    });
                } else {
                    for (n, (a, b)) in bds.iter().zip(&self.boundaries).enumerate() {
                        if a != b {
                            out.push(Violation::DeltaMismatch {
                                detail: format!("boundary in degree {}", n + 1),
                            });
                        }
                    }
                }
            }
            out.extend(dv);
        }
        ValidationReport { violations: out }
    }

    pub fn check(&self) -> Result<(), ComplexError> {
        let r = self.validate();
        if r.is_valid() {
            Ok(())
        } else {
            Err(ComplexError::Invalid(r))
        }
    }

    pub fn cochain_dim(&self, coeff: Coeff, q: usize) -> usize {
        self.rank(q) * coeff.width()
    }

    /// Specialized `d_n : C_n -> C_{n-1}` for `0 <= n <= D + 1` (zero-size at the ends).
    pub fn chain_matrix(&self, coeff: Coeff, n: usize) -> IntMatrix {
        let w = coeff.width();
        if n == 0 || n > self.top_degree() {
            let rows = if n == 0 { 0 } else { self.rank(n - 1) * w };
            return IntMatrix::zeros(rows, self.rank(n) * w);
        }
        coeff.specialize(self.boundary(n))
    }

    /// `delta^q : C^q -> C^{q+1}`, the transpose of `d_{q+1}`.
    pub fn coboundary(&self, coeff: Coeff, q: usize) -> IntMatrix {
        self.chain_matrix(coeff, q + 1).transpose()
    }

    fn coboundary_into(&self, coeff: Coeff, q: usize) -> IntMatrix {
        if q == 0 {
            IntMatrix::zeros(self.cochain_dim(coeff, 0), 0)
        } else {
            self.coboundary(coeff, q - 1)
        }
    }

    fn check_degree(&self, q: usize) -> Result<(), ComplexError> {
        if q > self.top_degree() {
            return Err(ComplexError::DegreeOutOfRange {
                degree: q,
                top: self.top_degree(),
            });
        }
        Ok(())
    }

    pub fn cohomology(&self, coeff: Coeff, q: usize) -> Result<AbelianGroup, ComplexError> {
        self.check_degree(q)?;
        let d_in = self.coboundary_into(coeff, q);
        let d_out = self.coboundary(coeff, q);
        Ok(if coeff.is_mod2() {
            subquotient_group_mod2(&d_in, &d_out)?
        } else {
            subquotient_group(&d_in, &d_out)?
        })
    }

    pub fn homology(&self, coeff: Coeff, q: usize) -> Result<AbelianGroup, ComplexError> {
        self.check_degree(q)?;
        let d_in = self.chain_matrix(coeff, q + 1);
        let d_out = self.chain_matrix(coeff, q);
        Ok(if coeff.is_mod2() {
            subquotient_group_mod2(&d_in, &d_out)?
        } else {
            subquotient_group(&d_in, &d_out)?
        })
    }

    /// Alternating sum of cochain ranks.
    pub fn euler_characteristic(&self, coeff: Coeff) -> i64 {
        (0..=self.top_degree())
            .map(|q| {
                let r = self.cochain_dim(coeff, q) as i64;
                if q % 2 == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    pub fn coboundary_of(&self, phi: &Cochain) -> Cochain {
        let v = self.coboundary(phi.coeff, phi.degree).mul_vec(&phi.values);
        Cochain::new(phi.degree + 1, phi.coeff, v)
    }

    pub fn check_length(&self, phi: &Cochain) -> Result<(), ComplexError> {
        let expected = self.cochain_dim(phi.coeff, phi.degree);
        if phi.values.len() != expected {
            return Err(ComplexError::CochainLength {
                degree: phi.degree,
                expected,
                found: phi.values.len(),
            });
        }
        Ok(())
    }

    pub fn is_cocycle(&self, phi: &Cochain) -> bool {
        self.coboundary_of(phi).is_zero()
    }

    /// Coordinates of the class of a cocycle in `cohomology(phi.coeff, phi.degree)`.
    pub fn class_of(&self, phi: &Cochain) -> Result<(AbelianGroup, Vec<BigInt>), ComplexError> {
        self.check_length(phi)?;
        let g = self.cohomology(phi.coeff, phi.degree)?;
        let coords = g
            .class_of(&phi.values)
            .map_err(|_| ComplexError::NotACocycle {
                what: format!("degree-{} {} cochain", phi.degree, phi.coeff),
            })?;
        Ok((g, coords))
    }

    /// The mod-2 cocycle classifying the double cover.
    ///
    /// Read off `d_1` when every column has the form `tau^a v - tau^b w`
    /// (value `a - b mod 2`), otherwise taken from `aux.x_cocycle`.
    pub fn classifying_cocycle(&self) -> Result<Cochain, ComplexError> {
        if self.top_degree() == 0 {
            return Err(ComplexError::DegreeOutOfRange { degree: 1, top: 0 });
        }
        let x = match self.structured_x() {
            Ok(x) => x,
            Err(e) => match &self.aux.x_cocycle {
                Some(v) => Cochain::from_i64(1, Coeff::Z2, v),
                None => return Err(e),
            },
        };
        let (g, coords) = self.class_of(&x)?;
        if g.is_zero_element(&coords) {
            return Err(ComplexError::ZeroClass {
                what: "classifying cocycle".into(),
            });
        }
        Ok(x)
    }

    fn structured_x(&self) -> Result<Cochain, ComplexError> {
        let d1 = self.boundary(1);
        let mut vals = Vec::with_capacity(d1.cols());
        for j in 0..d1.cols() {
            let entries: Vec<_> = (0..d1.rows())
                .map(|i| d1.get(i, j))
                .filter(|s| !s.is_zero())
                .collect();
            let unit_power = |s: super::LambdaScalar| match (s.a.abs(), s.b.abs()) {
                (1, 0) => Some(0),
                (0, 1) => Some(1),
                _ => None,
            };
            let x = match entries.as_slice() {
                [] => Some(0),
                [s] if s.a.abs() == 1 && s.a == -s.b => Some(1),
                [s, t] if s.augment() == -t.augment() => match (unit_power(*s), unit_power(*t)) {
                    (Some(p), Some(q)) => Some((p + q) % 2),
                    _ => None,
                },
                _ => None,
            };
            vals.push(x.ok_or(ComplexError::UnstructuredBoundary { cell: j })?);
        }
        Ok(Cochain::from_i64(1, Coeff::Z2, &vals))
    }

    /// Action of the involution on `Lambda`-cochains of degree `q`: swaps `(u, v)`.
    pub fn tau_matrix(&self, q: usize) -> IntMatrix {
        let n = self.rank(q);
        let mut t = IntMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            t[(2 * i, 2 * i + 1)] = BigInt::from(1);
            t[(2 * i + 1, 2 * i)] = BigInt::from(1);
        }
        t
    }

    /// `tau^*` on `H^q(X, Z)`.
    pub fn tau_star(&self, q: usize) -> Result<GroupHom, ComplexError> {
        let h = self.cohomology(Coeff::Lambda, q)?;
        Ok(induced_hom(&self.tau_matrix(q), &h, &h)?)
    }

    pub fn antisymmetric_classes(&self, q: usize) -> Result<AntisymmetricClasses, ComplexError> {
        let tau = self.tau_star(q)?;
        let plus = tau.plus(&GroupHom::identity(&tau.domain));
        let subgroup = subgroup_of(&tau.domain, &plus.kernel_generators());
        Ok(AntisymmetricClasses {
            group: tau.domain.clone(),
            tau,
            subgroup,
        })
    }

    /// Whether `H_1(X, Z)` vanishes.
    pub fn cover_h1_vanishes(&self) -> Result<bool, ComplexError> {
        Ok(self.top_degree() >= 1 && self.homology(Coeff::Lambda, 1)?.is_trivial())
    }

    pub fn fundamental_class(&self) -> Result<FundamentalClass, ComplexError> {
        if !self.claims_closed_4_manifold {
            return Err(ComplexError::NotClosedManifoldClaim);
        }
        let d = self.top_degree();
        let integral = top_generator(&self.homology(Coeff::Z, d)?);
        let h2 = self.homology(Coeff::Z2, d)?;
        let mod2 = (h2.ngens() == 1).then(|| h2.representative(&[BigInt::from(1)]));
        Ok(FundamentalClass {
            orientable: integral.is_some(),
            integral,
            mod2,
        })
    }

    /// Generator of `H_D(X, Z)` when it is infinite cyclic.
    pub fn cover_fundamental_cycle(&self) -> Result<Option<Vec<BigInt>>, ComplexError> {
        Ok(top_generator(
            &self.homology(Coeff::Lambda, self.top_degree())?,
        ))
    }

    /// `phi(z)`, reduced mod 2 for `Z2` cochains.
    pub fn pairing_eval(&self, phi: &Cochain, z: &[BigInt]) -> Result<BigInt, ComplexError> {
        self.check_length(phi)?;
        if z.len() != phi.values.len() {
            return Err(ComplexError::CochainLength {
                degree: phi.degree,
                expected: phi.values.len(),
                found: z.len(),
            });
        }
        let s: BigInt = phi.values.iter().zip(z).map(|(a, b)| a * b).sum();
        Ok(if phi.coeff.is_mod2() {
            s.mod_floor(&BigInt::from(2))
        } else {
            s
        })
    }
}

fn top_generator(h: &AbelianGroup) -> Option<Vec<BigInt>> {
    if h.free_rank() != 1 || !h.torsion().is_empty() {
        return None;
    }
    let mut z = h.representative(&[BigInt::from(1)]);
    if z.iter()
        .find(|v| !v.is_zero())
        .is_some_and(|v| v.is_negative())
    {
        z.iter_mut().for_each(|v| *v = -&*v);
    }
    Some(z)
}
