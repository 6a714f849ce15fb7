//! Truncated Borel construction `X x_{Z/2} S^m` and the spectral sequence of
//! its filtration by sphere degree.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::complexes::{Coeff, ComplexError, EquivariantComplex, LambdaMatrix, LambdaScalar};
use crate::exactalg::lattice::kernel_basis;
use crate::exactalg::{
    induced_hom, subquotient_group, AbelianGroup, ExactAlgError, GroupHom, IntMatrix,
};

/// Sphere truncation used when none is given: enough for pages up to `r = 3`
/// in total degree 4 with room to spare.
pub const DEFAULT_TRUNCATION: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BorelError {
    #[error("E_{r}^{{{p},*}} needs p + r <= {m} (sphere truncation)")]
    WindowExceedsTruncation { p: usize, r: usize, m: usize },
    #[error("d_2^{{0,2}} is nonzero; d_3^{{0,2}} is only defined on its kernel {domain}")]
    DomainRestricted { domain: String },
    #[error("the given map is not an involution")]
    NotInvolution,
    #[error("Borel spectral sequences use Z, Z- or Z2 coefficients, not {0}")]
    UnsupportedCoefficients(Coeff),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Algebra(#[from] ExactAlgError),
}

/// A cochain complex whose basis elements carry filtration levels; the
/// coboundary never lowers the level.
#[derive(Clone, Debug)]
pub struct FilteredCochainComplex {
    pub coeff: Coeff,
    pub truncation: usize,
    /// `coboundaries[n] : C^n -> C^{n+1}`.
    pub coboundaries: Vec<IntMatrix>,
    pub filtration: Vec<Vec<usize>>,
    /// Top cell degree of the fiber.
    pub fiber_dim: usize,
    /// Borel total space as an equivariant complex (cells `e_i x t^s f_k`).
    pub total: EquivariantComplex,
}

/// Basis of the Borel complex in total degree `n`: `(i, k, s)` for the cell
/// `e_i x t^s f_k` with `deg e_i + k = n`, ordered by `k`, then `i`, then `s`.
fn borel_index(c: &EquivariantComplex, m: usize) -> Vec<Vec<(usize, usize, usize)>> {
    let d = c.top_degree();
    (0..=d + m)
        .map(|n| {
            let mut v = Vec::new();
            for k in 0..=m.min(n) {
                let q = n - k;
                if q > d {
                    continue;
                }
                for i in 0..c.rank(q) {
                    v.push((i, k, 0));
                    v.push((i, k, 1));
                }
            }
            v
        })
        .collect()
}

/// `C(X) (x) C(S^m)` with the diagonal action, specialized to `coeff`.
pub fn borel_filtered_complex(
    c: &EquivariantComplex,
    m: usize,
    coeff: Coeff,
) -> Result<FilteredCochainComplex, BorelError> {
    if coeff == Coeff::Lambda {
        return Err(BorelError::UnsupportedCoefficients(coeff));
    }
    let index = borel_index(c, m);
    let pos: Vec<BTreeMap<(usize, usize, usize), usize>> = index
        .iter()
        .map(|v| v.iter().enumerate().map(|(j, t)| (*t, j)).collect())
        .collect();
    let ranks: Vec<usize> = index.iter().map(Vec::len).collect();
    let top = ranks.len() - 1;
    let mut bds = Vec::with_capacity(top);
    for n in 1..=top {
        let mut b = LambdaMatrix::zeros(ranks[n - 1], ranks[n]);
        for (col, &(i, k, s)) in index[n].iter().enumerate() {
            let q = n - k;
            if q >= 1 {
                let d = c.boundary(q);
                for j in 0..d.rows() {
                    let v = d.get(j, i);
                    if v.a != 0 {
                        b.add_to(pos[n - 1][&(j, k, s)], col, LambdaScalar::new(v.a, 0));
                    }
                    if v.b != 0 {
                        b.add_to(pos[n - 1][&(j, k, 1 - s)], col, LambdaScalar::new(0, v.b));
                    }
                }
            }
            if k >= 1 {
                let sq = if q % 2 == 0 { 1 } else { -1 };
                let sk = if k % 2 == 0 { 1 } else { -1 };
                b.add_to(pos[n - 1][&(i, k - 1, s)], col, LambdaScalar::new(sq, 0));
                b.add_to(
                    pos[n - 1][&(i, k - 1, 1 - s)],
                    col,
                    LambdaScalar::new(sq * sk, 0),
                );
            }
        }
        bds.push(b);
    }
    let total = EquivariantComplex::from_lambda(format!("{} x S^{m}", c.name), ranks, bds);
    let coboundaries = (0..=top).map(|n| total.coboundary(coeff, n)).collect();
    let filtration = index
        .iter()
        .map(|v| v.iter().map(|t| t.1).collect())
        .collect();
    Ok(FilteredCochainComplex {
        coeff,
        truncation: m,
        coboundaries,
        filtration,
        fiber_dim: c.top_degree(),
        total,
    })
}

impl FilteredCochainComplex {
    pub fn top_degree(&self) -> usize {
        self.filtration.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.filtration.get(n).map_or(0, Vec::len)
    }

    /// Total cohomology `H^n` of the complex.
    pub fn total_cohomology(&self, n: usize) -> Result<AbelianGroup, BorelError> {
        Ok(self.total.cohomology(self.coeff, n)?)
    }

    fn below(&self, n: usize, level: usize) -> Vec<usize> {
        self.filtration[n]
            .iter()
            .enumerate()
            .filter(|(_, &f)| f < level)
            .map(|(j, _)| j)
            .collect()
    }

    /// Generators of `Z_r^p` in degree `n`: cochains in `F^p` whose coboundary
    /// lies in `F^{p+r}`. For `r < 0` this is all of `F^p`.
    fn z_gens(&self, n: usize, p: isize, r: isize) -> Vec<Vec<BigInt>> {
        let dim = self.dim(n);
        let p0 = p.max(0) as usize;
        if r < 0 {
            return (0..dim)
                .filter(|&j| self.filtration[n][j] >= p0)
                .map(|j| unit(dim, j))
                .collect();
        }
        let lower = self.below(n, p0);
        let mut s = IntMatrix::identity(dim).select_rows(&lower);
        if n < self.top_degree() {
            let lvl = (p + r).max(0) as usize;
            let rows = self.below(n + 1, lvl);
            s = s.vstack(&self.coboundaries[n].select_rows(&rows));
        }
        if s.rows() == 0 {
            return (0..dim).map(|j| unit(dim, j)).collect();
        }
        kernel_basis(&s)
    }

    /// Test matrix whose kernel is `Z_r^p` in degree `n`.
    fn z_test(&self, n: usize, p: usize, r: usize) -> IntMatrix {
        let dim = self.dim(n);
        let mut s = IntMatrix::identity(dim).select_rows(&self.below(n, p));
        if n < self.top_degree() {
            s = s.vstack(&self.coboundaries[n].select_rows(&self.below(n + 1, p + r)));
        }
        s
    }

    /// `E_r^{p,q} = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1})` in degree `p + q`.
    pub fn page_group(&self, r: usize, p: usize, q: usize) -> Result<AbelianGroup, BorelError> {
        if p + r > self.truncation {
            return Err(BorelError::WindowExceedsTruncation {
                p,
                r,
                m: self.truncation,
            });
        }
        let n = p + q;
        if n > self.top_degree() {
            return Ok(AbelianGroup::trivial());
        }
        let dim = self.dim(n);
        let mut cols = self.z_gens(n, p as isize + 1, r as isize - 1);
        if n >= 1 {
            let d = &self.coboundaries[n - 1];
            for g in self.z_gens(n - 1, p as isize - r as isize + 1, r as isize - 1) {
                cols.push(d.mul_vec(&g));
            }
        }
        let d_in = IntMatrix::from_columns(dim, &cols);
        Ok(subquotient_group(&d_in, &self.z_test(n, p, r))?)
    }

    /// `d_r : E_r^{p,q} -> E_r^{p+r, q-r+1}` between the given page groups;
    /// it is the coboundary of total degree `n = p + q`.
    pub fn differential(
        &self,
        n: usize,
        dom: &AbelianGroup,
        cod: &AbelianGroup,
    ) -> Result<GroupHom, BorelError> {
        Ok(induced_hom(&self.coboundaries[n], dom, cod)?)
    }
}

fn unit(n: usize, j: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[j] = BigInt::from(1);
    v
}

/// One page of the spectral sequence over the window `p + r <= m`, `q <= dim X`.
#[derive(Clone, Debug)]
pub struct SsPage {
    pub r: usize,
    pub truncation: usize,
    pub groups: BTreeMap<(usize, usize), AbelianGroup>,
    /// Differentials whose source and target both lie in the window.
    pub differentials: BTreeMap<(usize, usize), GroupHom>,
}

impl SsPage {
    pub fn group(&self, p: usize, q: usize) -> Option<&AbelianGroup> {
        self.groups.get(&(p, q))
    }

    pub fn differential(&self, p: usize, q: usize) -> Option<&GroupHom> {
        self.differentials.get(&(p, q))
    }

    /// Largest `p` in the window.
    pub fn max_p(&self) -> usize {
        self.truncation - self.r
    }
}

pub fn ss_page(f: &FilteredCochainComplex, r: usize) -> Result<SsPage, BorelError> {
    if r > f.truncation {
        return Err(BorelError::WindowExceedsTruncation {
            p: 0,
            r,
            m: f.truncation,
        });
    }
    let max_p = f.truncation - r;
    let mut groups = BTreeMap::new();
    for p in 0..=max_p {
        for q in 0..=f.fiber_dim {
            groups.insert((p, q), f.page_group(r, p, q)?);
        }
    }
    let mut differentials = BTreeMap::new();
    for (&(p, q), dom) in &groups {
        let tp = p + r;
        if q + 1 < r || tp > max_p {
            continue;
        }
        let tq = q + 1 - r;
        let Some(cod) = groups.get(&(tp, tq)) else {
            continue;
        };
        differentials.insert((p, q), f.differential(p + q, dom, cod)?);
    }
    Ok(SsPage {
        r,
        truncation: f.truncation,
        groups,
        differentials,
    })
}

/// `ker(f) / im(g)` for endomorphisms `f, g` of `m` given in its coordinates.
fn endo_subquotient(
    m: &AbelianGroup,
    f: &IntMatrix,
    g: &IntMatrix,
) -> Result<AbelianGroup, BorelError> {
    let n = m.ngens();
    let fr = m.free_rank();
    let tors = m.torsion();
    let t = tors.len();
    // ambient (x, y): x in Z^n, y in Z^t with f(x)_tors = T y and f(x)_free = 0
    let mut test = IntMatrix::zeros(n, n + t);
    for i in 0..n {
        for j in 0..n {
            test[(i, j)] = f[(i, j)].clone();
        }
    }
    for (k, o) in tors.iter().enumerate() {
        test[(fr + k, n + k)] = -o.clone();
    }
    let pair = |x: Vec<BigInt>| -> Result<Vec<BigInt>, BorelError> {
        let fx = f.mul_vec(&x);
        let mut v = x;
        for (k, o) in tors.iter().enumerate() {
            let (qt, rem) = fx[fr + k].div_rem(o);
            if !rem.is_zero() {
                return Err(BorelError::Algebra(ExactAlgError::NotChainLevelMap(
                    "endomorphism does not respect torsion".into(),
                )));
            }
            v.push(qt);
        }
        Ok(v)
    };
    let mut cols = Vec::new();
    for j in 0..n {
        cols.push(pair(g.column(j))?);
    }
    for (k, o) in tors.iter().enumerate() {
        let mut e = vec![BigInt::zero(); n];
        e[fr + k] = o.clone();
        cols.push(pair(e)?);
    }
    let d_in = IntMatrix::from_columns(n + t, &cols);
    Ok(subquotient_group(&d_in, &test)?)
}

/// `H^p(Z/2; M)` for the action `u`: `ker(1 - u)` for `p = 0`,
/// `ker(1 + u) / im(1 - u)` for odd `p`, `ker(1 - u) / im(1 + u)` for even `p > 0`.
pub fn e2_closed_form(
    m: &AbelianGroup,
    u: &GroupHom,
    p: usize,
) -> Result<AbelianGroup, BorelError> {
    let uu = u.then(u);
    let id = GroupHom::identity(m);
    let diff = uu.plus(&id.scaled(-1));
    if !diff.is_zero() || u.matrix.rows() != m.ngens() || u.matrix.cols() != m.ngens() {
        return Err(BorelError::NotInvolution);
    }
    let n = m.ngens();
    let one = IntMatrix::identity(n);
    let minus = one.add(&u.matrix.neg());
    let plus = one.add(&u.matrix);
    if p == 0 {
        endo_subquotient(m, &minus, &IntMatrix::zeros(n, n))
    } else if p % 2 == 1 {
        endo_subquotient(m, &plus, &minus)
    } else {
        endo_subquotient(m, &minus, &plus)
    }
}

/// `(H^q(X, Z), u)` with the action used in the second page for `coeff`:
/// `-tau^*` for `Z-`, `tau^*` for `Z`.
pub fn e2_coefficients(
    c: &EquivariantComplex,
    coeff: Coeff,
    q: usize,
) -> Result<(AbelianGroup, GroupHom), BorelError> {
    let tau = c.tau_star(q)?;
    let u = match coeff {
        Coeff::ZMinus => tau.scaled(-1),
        Coeff::Z => tau,
        other => return Err(BorelError::UnsupportedCoefficients(other)),
    };
    Ok((u.domain.clone(), u))
}

/// `d_3^{0,2} : E_3^{0,2} -> E_3^{3,0}` for a twisted Borel complex.
#[derive(Clone, Debug)]
pub struct D3Differential {
    pub hom: GroupHom,
    /// `E_3^{0,2} -> H^2(X, Z)` induced by restriction to a fiber.
    pub restriction: GroupHom,
}

impl D3Differential {
    pub fn is_surjective(&self) -> bool {
        self.hom.is_surjective()
    }
}

pub fn d3_02(
    f: &FilteredCochainComplex,
    c: &EquivariantComplex,
) -> Result<D3Differential, BorelError> {
    if 3 > f.truncation {
        return Err(BorelError::WindowExceedsTruncation {
            p: 3,
            r: 3,
            m: f.truncation,
        });
    }
    let e2 = f.page_group(2, 0, 2)?;
    let t2 = f.page_group(2, 2, 1)?;
    let d2 = f.differential(2, &e2, &t2)?;
    if !d2.is_zero() {
        return Err(BorelError::DomainRestricted {
            domain: crate::exactalg::subgroup_of(&e2, &d2.kernel_generators()).describe(),
        });
    }
    let dom = f.page_group(3, 0, 2)?;
    let cod = f.page_group(3, 3, 0)?;
    let hom = f.differential(2, &dom, &cod)?;
    let h2 = if c.top_degree() >= 2 {
        c.cohomology(Coeff::Lambda, 2)?
    } else {
        AbelianGroup::trivial()
    };
    let restriction = induced_hom(&fiber_restriction(f, c, 2), &dom, &h2)?;
    Ok(D3Differential { hom, restriction })
}

/// Pullback of twisted Borel cochains of degree `n` to integral cochains on `X`
/// along the fiber inclusion `x -> (x, f_0)`.
pub fn fiber_restriction(
    f: &FilteredCochainComplex,
    c: &EquivariantComplex,
    n: usize,
) -> IntMatrix {
    let rows = 2 * c.rank(n);
    let mut m = IntMatrix::zeros(rows, f.dim(n));
    // the first 2 * rank(n) basis elements are (i, 0, 0), (i, 0, 1)
    let sign = if f.coeff == Coeff::ZMinus { -1 } else { 1 };
    for i in 0..c.rank(n) {
        m[(2 * i, 2 * i)] = BigInt::from(1);
        m[(2 * i + 1, 2 * i + 1)] = BigInt::from(sign);
    }
    m
}
