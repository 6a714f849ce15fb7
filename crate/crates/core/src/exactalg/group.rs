//! Finitely generated abelian groups presented as subquotients of lattices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lattice::{hermite_rows, reduce_mod_lattice, solve_integer};
use super::{mod2, smith_normal_form, ExactAlgError, IntMatrix};

/// `ker(d_out) / im(d_in)` with explicit coordinates.
///
/// Generators are ordered free first, then torsion by increasing order.
/// `class_map` sends an ambient cycle to group coordinates and `lift_map`
/// sends group coordinates back to a representative cycle.
#[derive(Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
    ambient_dim: usize,
    class_map: IntMatrix,
    lift_map: IntMatrix,
    cycle_test: IntMatrix,
    boundaries: IntMatrix,
    mod2: bool,
}

pub fn subquotient_group(
    d_in: &IntMatrix,
    d_out: &IntMatrix,
) -> Result<AbelianGroup, ExactAlgError> {
    let n = d_in.rows();
    if d_out.cols() != n {
        return Err(ExactAlgError::DimensionMismatch {
            expected: n,
            found: d_out.cols(),
        });
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(ExactAlgError::CompositionNonzero);
    }
    let s = smith_normal_form(d_out);
    let kern: Vec<usize> = (s.rank..n).collect();
    let k_basis = s.v.select_cols(&kern); // n x k
    let k_left = s.v_inv.select_rows(&kern); // k x n, left inverse on the kernel
    let y = k_left.mul(d_in); // boundaries in kernel coordinates
    let t = smith_normal_form(&y);
    let k = kern.len();
    let mut order: Vec<usize> = (t.rank..k).collect();
    let mut torsion = Vec::new();
    for i in 0..t.rank {
        let e = &t.d[(i, i)];
        if !e.is_one() {
            order.push(i);
            torsion.push(e.clone());
        }
    }
    let class_map = t.u.select_rows(&order).mul(&k_left);
    let lift_map = k_basis.mul(&t.u_inv.select_cols(&order));
    let free_rank = k - t.rank;
    let mut g = AbelianGroup {
        free_rank,
        torsion,
        ambient_dim: n,
        class_map,
        lift_map,
        cycle_test: d_out.clone(),
        boundaries: d_in.clone(),
        mod2: false,
    };
    g.reduce_class_map();
    Ok(g)
}

/// Same subquotient with all matrices read modulo 2.
pub fn subquotient_group_mod2(
    d_in: &IntMatrix,
    d_out: &IntMatrix,
) -> Result<AbelianGroup, ExactAlgError> {
    let n = d_in.rows();
    if d_out.cols() != n {
        return Err(ExactAlgError::DimensionMismatch {
            expected: n,
            found: d_out.cols(),
        });
    }
    if !d_out.mul(d_in).mod2().is_zero() {
        return Err(ExactAlgError::CompositionNonzero);
    }
    let out_rows = mod2::reduce(d_out);
    let ker = mod2::kernel(&out_rows, n);
    let in_cols = mod2::reduce(&d_in.transpose());
    let mut span = mod2::Span::default();
    let mut basis: Vec<mod2::F2Vec> = Vec::new();
    for c in &in_cols {
        if span.insert(c) {
            basis.push(c.clone());
        }
    }
    let nb = basis.len();
    let mut chosen = Vec::new();
    for v in &ker {
        if span.insert(v) {
            chosen.push(v.clone());
        }
    }
    let mut full = basis;
    full.extend(chosen.iter().cloned());
    for i in 0..n {
        let mut e = vec![0u8; n];
        e[i] = 1;
        if span.insert(&e) {
            full.push(e);
        }
    }
    let inv = mod2::inverse_of_columns(&full);
    let class_rows: Vec<mod2::F2Vec> = inv[nb..nb + chosen.len()].to_vec();
    Ok(AbelianGroup {
        free_rank: 0,
        torsion: vec![BigInt::from(2); chosen.len()],
        ambient_dim: n,
        class_map: mod2::to_int_rows(&class_rows, n),
        lift_map: mod2::to_int_columns(&chosen, n),
        cycle_test: d_out.mod2(),
        boundaries: d_in.mod2(),
        mod2: true,
    })
}

impl AbelianGroup {
    /// The trivial group on a zero-dimensional ambient space.
    pub fn trivial() -> Self {
        subquotient_group(&IntMatrix::zeros(0, 0), &IntMatrix::zeros(0, 0)).unwrap()
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn ngens(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn class_map(&self) -> &IntMatrix {
        &self.class_map
    }

    pub fn lift_map(&self) -> &IntMatrix {
        &self.lift_map
    }

    pub fn boundary_generators(&self) -> &IntMatrix {
        &self.boundaries
    }

    pub fn is_mod2(&self) -> bool {
        self.mod2
    }

    pub fn is_trivial(&self) -> bool {
        self.ngens() == 0
    }

    /// Order of generator `i`; `None` for free generators.
    pub fn generator_order(&self, i: usize) -> Option<&BigInt> {
        if i < self.free_rank {
            None
        } else {
            Some(&self.torsion[i - self.free_rank])
        }
    }

    /// Isomorphism type, e.g. `Z^2 + Z/2`.
    pub fn describe(&self) -> String {
        describe_type(self.free_rank, &self.torsion)
    }

    fn reduce_class_map(&mut self) {
        for (t, e) in self.torsion.clone().iter().enumerate() {
            let r = self.free_rank + t;
            for j in 0..self.class_map.cols() {
                let v = self.class_map[(r, j)].mod_floor(e);
                self.class_map[(r, j)] = v;
            }
        }
    }

    /// Reduces torsion coordinates into `[0, order)`.
    pub fn normalize(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ngens(), "group coordinate length");
        x.iter()
            .enumerate()
            .map(|(i, v)| match self.generator_order(i) {
                Some(e) => v.mod_floor(e),
                None => v.clone(),
            })
            .collect()
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        self.normalize(x).iter().all(Zero::is_zero)
    }

    pub fn is_cycle(&self, v: &[BigInt]) -> bool {
        let w = self.cycle_test.mul_vec(v);
        if self.mod2 {
            w.iter().all(|x| x.is_even())
        } else {
            w.iter().all(Zero::is_zero)
        }
    }

    /// Group coordinates of the class of an ambient cycle.
    pub fn class_of(&self, v: &[BigInt]) -> Result<Vec<BigInt>, ExactAlgError> {
        if v.len() != self.ambient_dim {
            return Err(ExactAlgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        if !self.is_cycle(v) {
            return Err(ExactAlgError::NotACycle);
        }
        Ok(self.normalize(&self.class_map.mul_vec(v)))
    }

    /// A representative cycle for group coordinates `g`.
    pub fn representative(&self, g: &[BigInt]) -> Vec<BigInt> {
        let v = self.lift_map.mul_vec(&self.normalize(g));
        if self.mod2 {
            let two = BigInt::from(2);
            v.iter().map(|x| x.mod_floor(&two)).collect()
        } else {
            v
        }
    }

    /// Unit vector for generator `i`.
    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        let mut e = vec![BigInt::zero(); self.ngens()];
        e[i] = BigInt::one();
        e
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.ngens()]
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let s: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.normalize(&s)
    }

    /// Torsion relations `order_i * e_i` as rows.
    fn relation_rows(&self) -> Vec<Vec<BigInt>> {
        (self.free_rank..self.ngens())
            .map(|i| {
                let mut r = self.zero();
                r[i] = self.torsion[i - self.free_rank].clone();
                r
            })
            .collect()
    }

    /// Whether `x` lies in the subgroup generated by `gens`.
    pub fn subgroup_contains(&self, gens: &[Vec<BigInt>], x: &[BigInt]) -> bool {
        self.express_in(gens, x).is_some()
    }

    /// Integer coefficients `c` with `sum c_i gens_i = x` in the group.
    pub fn express_in(&self, gens: &[Vec<BigInt>], x: &[BigInt]) -> Option<Vec<BigInt>> {
        let n = self.ngens();
        let mut cols: Vec<Vec<BigInt>> = gens.to_vec();
        cols.extend(self.relation_rows());
        let a = IntMatrix::from_columns(n, &cols);
        solve_integer(&a, x).map(|s| s.particular[..gens.len()].to_vec())
    }
}

pub(crate) fn describe_type(free_rank: usize, torsion: &[BigInt]) -> String {
    let mut parts = Vec::new();
    match free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for t in torsion {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbelianGroup({})", self.describe())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Homomorphism between two computed groups, in their normalized coordinates.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub domain: AbelianGroup,
    pub codomain: AbelianGroup,
    /// `codomain.ngens() x domain.ngens()`; column `j` is the image of generator `j`.
    pub matrix: IntMatrix,
}

/// Map on subquotients induced by an ambient matrix `f`.
pub fn induced_hom(
    f: &IntMatrix,
    dom: &AbelianGroup,
    cod: &AbelianGroup,
) -> Result<GroupHom, ExactAlgError> {
    if f.cols() != dom.ambient_dim || f.rows() != cod.ambient_dim {
        return Err(ExactAlgError::DimensionMismatch {
            expected: dom.ambient_dim,
            found: f.cols(),
        });
    }
    let mut cols = Vec::with_capacity(dom.ngens());
    for j in 0..dom.ngens() {
        let image = f.mul_vec(&dom.lift_map.column(j));
        let c = cod.class_of(&image).map_err(|_| {
            ExactAlgError::NotChainLevelMap(format!("generator {j} does not map to a cycle"))
        })?;
        cols.push(c);
    }
    for j in 0..dom.boundaries.cols() {
        let image = f.mul_vec(&dom.boundaries.column(j));
        let c = cod.class_of(&image).map_err(|_| {
            ExactAlgError::NotChainLevelMap(format!("boundary {j} does not map to a cycle"))
        })?;
        if !cod.is_zero_element(&c) {
            return Err(ExactAlgError::NotChainLevelMap(format!(
                "boundary {j} does not map to a boundary"
            )));
        }
    }
    if dom.mod2 && !cod.mod2 {
        // 2 * (any cycle) must die in the codomain
        for j in 0..dom.ngens() {
            let twice: Vec<BigInt> = cols[j].iter().map(|v| v * 2).collect();
            if !cod.is_zero_element(&twice) {
                return Err(ExactAlgError::NotChainLevelMap(format!(
                    "mod-2 generator {j} maps to an element of order > 2"
                )));
            }
        }
    }
    for j in dom.free_rank..dom.ngens() {
        let t = &dom.torsion[j - dom.free_rank];
        let scaled: Vec<BigInt> = cols[j].iter().map(|v| v * t).collect();
        if !cod.is_zero_element(&scaled) {
            return Err(ExactAlgError::NotChainLevelMap(format!(
                "torsion generator {j} of order {t} has image of larger order"
            )));
        }
    }
    Ok(GroupHom {
        domain: dom.clone(),
        codomain: cod.clone(),
        matrix: IntMatrix::from_columns(cod.ngens(), &cols),
    })
}

impl GroupHom {
    pub fn identity(g: &AbelianGroup) -> GroupHom {
        GroupHom {
            domain: g.clone(),
            codomain: g.clone(),
            matrix: IntMatrix::identity(g.ngens()),
        }
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.codomain
            .normalize(&self.matrix.mul_vec(&self.domain.normalize(x)))
    }

    pub fn is_zero(&self) -> bool {
        (0..self.domain.ngens()).all(|j| self.codomain.is_zero_element(&self.matrix.column(j)))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GroupHom) -> GroupHom {
        assert_eq!(self.codomain.ngens(), next.domain.ngens());
        let cols: Vec<Vec<BigInt>> = (0..self.domain.ngens())
            .map(|j| next.apply(&self.matrix.column(j)))
            .collect();
        GroupHom {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            matrix: IntMatrix::from_columns(next.codomain.ngens(), &cols),
        }
    }

    /// Pointwise sum with another map between the same groups.
    pub fn plus(&self, other: &GroupHom) -> GroupHom {
        let cols: Vec<Vec<BigInt>> = (0..self.domain.ngens())
            .map(|j| {
                self.codomain
                    .add(&self.matrix.column(j), &other.matrix.column(j))
            })
            .collect();
        GroupHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: IntMatrix::from_columns(self.codomain.ngens(), &cols),
        }
    }

    /// `k` times the map.
    pub fn scaled(&self, k: i64) -> GroupHom {
        let cols: Vec<Vec<BigInt>> = (0..self.domain.ngens())
            .map(|j| {
                self.codomain.normalize(
                    &self
                        .matrix
                        .column(j)
                        .iter()
                        .map(|v| v * k)
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        GroupHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: IntMatrix::from_columns(self.codomain.ngens(), &cols),
        }
    }

    pub fn image_generators(&self) -> Vec<Vec<BigInt>> {
        (0..self.domain.ngens())
            .map(|j| self.codomain.normalize(&self.matrix.column(j)))
            .collect()
    }

    /// Generators of the kernel, in domain coordinates (Hermite-reduced).
    pub fn kernel_generators(&self) -> Vec<Vec<BigInt>> {
        let nd = self.domain.ngens();
        let nc = self.codomain.ngens();
        let mut cols: Vec<Vec<BigInt>> = (0..nd).map(|j| self.matrix.column(j)).collect();
        cols.extend(self.codomain.relation_rows());
        let a = IntMatrix::from_columns(nc, &cols);
        let sol = solve_integer(&a, &vec![BigInt::zero(); nc]).expect("homogeneous system");
        let mut gens: Vec<Vec<BigInt>> = sol.kernel.iter().map(|k| k[..nd].to_vec()).collect();
        gens.extend(self.domain.relation_rows());
        hermite_rows(&gens, nd)
            .into_iter()
            .map(|g| self.domain.normalize(&g))
            .filter(|g| g.iter().any(|v| !v.is_zero()))
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        let gens = self.image_generators();
        (0..self.codomain.ngens()).all(|i| {
            self.codomain
                .subgroup_contains(&gens, &self.codomain.generator(i))
        })
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_generators().is_empty()
    }
}

/// A preimage of `target` under `h`, or `None` when `target` is not in the image.
///
/// Among all preimages the canonical coset representative modulo the kernel
/// (Hermite reduction, pivot coordinates in `[0, pivot)`) is returned.
pub fn solve_in_image(
    h: &GroupHom,
    target: &[BigInt],
) -> Result<Option<Vec<BigInt>>, ExactAlgError> {
    let nc = h.codomain.ngens();
    let nd = h.domain.ngens();
    if target.len() != nc {
        return Err(ExactAlgError::DimensionMismatch {
            expected: nc,
            found: target.len(),
        });
    }
    let mut cols: Vec<Vec<BigInt>> = (0..nd).map(|j| h.matrix.column(j)).collect();
    cols.extend(h.codomain.relation_rows());
    let a = IntMatrix::from_columns(nc, &cols);
    let Some(sol) = solve_integer(&a, &h.codomain.normalize(target)) else {
        return Ok(None);
    };
    let mut lattice: Vec<Vec<BigInt>> = sol.kernel.iter().map(|k| k[..nd].to_vec()).collect();
    lattice.extend(h.domain.relation_rows());
    let hnf = hermite_rows(&lattice, nd);
    let x = reduce_mod_lattice(&sol.particular[..nd], &hnf);
    Ok(Some(h.domain.normalize(&x)))
}

/// A subgroup of a computed group, with its own canonical generators.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// Generators in ambient group coordinates: free first, then torsion.
    pub generators: Vec<Vec<BigInt>>,
}

impl Subgroup {
    pub fn describe(&self) -> String {
        describe_type(self.free_rank, &self.torsion)
    }

    pub fn free_generators(&self) -> &[Vec<BigInt>] {
        &self.generators[..self.free_rank]
    }

    /// Coefficients of `x` on the canonical generators, if `x` lies in the subgroup.
    pub fn coordinates(&self, group: &AbelianGroup, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let c = group.express_in(&self.generators, x)?;
        Some(
            c.iter()
                .enumerate()
                .map(|(i, v)| {
                    if i < self.free_rank {
                        v.clone()
                    } else {
                        v.mod_floor(&self.torsion[i - self.free_rank])
                    }
                })
                .collect(),
        )
    }

    /// Element with the given coefficients on the canonical generators.
    pub fn element(&self, group: &AbelianGroup, coeffs: &[BigInt]) -> Vec<BigInt> {
        let mut acc = group.zero();
        for (g, c) in self.generators.iter().zip(coeffs) {
            let term: Vec<BigInt> = g.iter().map(|v| v * c).collect();
            acc = group.add(&acc, &term);
        }
        acc
    }
}

/// Structure and canonical generators of the subgroup spanned by `gens`.
pub fn subgroup_of(group: &AbelianGroup, gens: &[Vec<BigInt>]) -> Subgroup {
    let n = group.ngens();
    let rel = group.relation_rows();
    let mut all: Vec<Vec<BigInt>> = gens.to_vec();
    all.extend(rel.iter().cloned());
    let basis = hermite_rows(&all, n);
    let k = basis.len();
    if k == 0 {
        return Subgroup {
            free_rank: 0,
            torsion: Vec::new(),
            generators: Vec::new(),
        };
    }
    let bt = IntMatrix::from_columns(n, &basis); // n x k
    let rel_coords: Vec<Vec<BigInt>> = rel
        .iter()
        .map(|r| {
            solve_integer(&bt, r)
                .expect("relations lie in the span")
                .particular
        })
        .collect();
    let r = IntMatrix::from_columns(k, &rel_coords);
    let s = smith_normal_form(&r);
    let mut order: Vec<usize> = (s.rank..k).collect();
    let mut torsion = Vec::new();
    for i in 0..s.rank {
        let e = &s.d[(i, i)];
        if !e.is_one() {
            order.push(i);
            torsion.push(e.clone());
        }
    }
    let free_rank = k - s.rank;
    let to_elem = |coeffs: Vec<BigInt>| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); n];
        for (c, b) in coeffs.iter().zip(&basis) {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += c * bi;
            }
        }
        v
    };
    let mut free: Vec<Vec<BigInt>> = order[..free_rank]
        .iter()
        .map(|&i| to_elem(s.u_inv.column(i)))
        .collect();
    let tors: Vec<Vec<BigInt>> = order[free_rank..]
        .iter()
        .map(|&i| group.normalize(&to_elem(s.u_inv.column(i))))
        .collect();
    // Canonical free generators: Hermite form of their free-coordinate projections,
    // with the same unimodular recombination applied to the full vectors.
    free = canonical_free_generators(&free, group.free_rank(), &tors, group);
    let mut generators = free;
    generators.extend(tors);
    Subgroup {
        free_rank,
        torsion,
        generators,
    }
}

fn canonical_free_generators(
    free: &[Vec<BigInt>],
    free_dim: usize,
    tors: &[Vec<BigInt>],
    group: &AbelianGroup,
) -> Vec<Vec<BigInt>> {
    if free.is_empty() {
        return Vec::new();
    }
    let f = free.len();
    // augmented rows [projection | identity] tracks the recombination
    let aug: Vec<Vec<BigInt>> = free
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut r = v[..free_dim].to_vec();
            r.extend((0..f).map(|j| BigInt::from(u8::from(i == j))));
            r
        })
        .collect();
    let h = hermite_rows(&aug, free_dim + f);
    let mut out = Vec::new();
    for row in h.iter().take(f) {
        if row[..free_dim].iter().all(Zero::is_zero) {
            break;
        }
        let mut v = vec![BigInt::zero(); group.ngens()];
        for (c, g) in row[free_dim..].iter().zip(free) {
            for (vi, gi) in v.iter_mut().zip(g) {
                *vi += c * gi;
            }
        }
        // strip torsion components that are multiples of torsion generators
        out.push(strip_torsion(&group.normalize(&v), tors, group));
    }
    debug_assert_eq!(out.len(), f);
    out
}

fn strip_torsion(v: &[BigInt], tors: &[Vec<BigInt>], group: &AbelianGroup) -> Vec<BigInt> {
    if tors.is_empty() {
        return v.to_vec();
    }
    // Subtract the torsion part when it lies in the subgroup's torsion span,
    // so free generators have torsion coordinates as small as possible.
    let fr = group.free_rank();
    let mut t = group.zero();
    for i in fr..group.ngens() {
        t[i] = v[i].clone();
    }
    if let Some(c) = group.express_in(tors, &t) {
        let mut out = v.to_vec();
        for (g, ci) in tors.iter().zip(&c) {
            for (o, gi) in out.iter_mut().zip(g) {
                *o -= ci * gi;
            }
        }
        group.normalize(&out)
    } else {
        v.to_vec()
    }
}

/// Whether `im(f) == ker(g)` for composable maps `f: A -> B`, `g: B -> C`.
pub fn is_exact_at(f: &GroupHom, g: &GroupHom) -> bool {
    let b = &f.codomain;
    let img = f.image_generators();
    if !img.iter().all(|x| g.codomain.is_zero_element(&g.apply(x))) {
        return false;
    }
    g.kernel_generators()
        .iter()
        .all(|k| b.subgroup_contains(&img, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::bigvec;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Twisted cochain complex of RP^3: Z -2-> Z -0-> Z -2-> Z
    fn rp3_twisted(q: usize) -> AbelianGroup {
        let d = [
            IntMatrix::from_rows(1, &[[2]]),
            IntMatrix::from_rows(1, &[[0]]),
            IntMatrix::from_rows(1, &[[2]]),
        ];
        let d_in = if q == 0 {
            IntMatrix::zeros(1, 0)
        } else {
            d[q - 1].clone()
        };
        let d_out = if q == 3 {
            IntMatrix::zeros(0, 1)
        } else {
            d[q].clone()
        };
        subquotient_group(&d_in, &d_out).unwrap()
    }

    #[test]
    fn twisted_projective_space_groups() {
        assert_eq!(rp3_twisted(3).describe(), "Z/2");
        assert_eq!(rp3_twisted(2).describe(), "0");
        assert_eq!(rp3_twisted(1).describe(), "Z/2");
        assert_eq!(rp3_twisted(0).describe(), "0");
    }

    #[test]
    fn zero_maps_give_ambient() {
        let g = subquotient_group(&IntMatrix::zeros(2, 0), &IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(g.describe(), "Z^2");
    }

    #[test]
    fn composition_must_vanish() {
        let e = subquotient_group(
            &IntMatrix::from_rows(1, &[[1]]),
            &IntMatrix::from_rows(1, &[[1]]),
        );
        assert_eq!(e.unwrap_err(), ExactAlgError::CompositionNonzero);
    }

    #[test]
    fn class_and_lift_are_inverse() {
        let d_in = IntMatrix::from_rows(2, &[[2, 0], [0, 3], [0, 0]]);
        let g = subquotient_group(&d_in, &IntMatrix::zeros(0, 3)).unwrap();
        assert_eq!(g.describe(), "Z + Z/6");
        for i in 0..g.ngens() {
            let e = g.generator(i);
            assert_eq!(g.class_of(&g.representative(&e)).unwrap(), e);
        }
        // boundaries are zero
        assert!(g.is_zero_element(&g.class_of(&bigvec(&[2, 3, 0])).unwrap()));
    }

    #[test]
    fn identity_induces_identity() {
        let g = rp3_twisted(1);
        let h = induced_hom(&IntMatrix::identity(1), &g, &g).unwrap();
        assert_eq!(h.matrix, IntMatrix::identity(1));
    }

    #[test]
    fn doubling_on_z2_is_zero() {
        let g = rp3_twisted(1);
        let h = induced_hom(&IntMatrix::from_rows(1, &[[2]]), &g, &g).unwrap();
        assert!(h.is_zero());
    }

    #[test]
    fn non_chain_map_is_rejected() {
        // Z/2 -> Z (zero differentials): the boundary 2 maps to 2, not a boundary
        let src = rp3_twisted(1);
        let dst = subquotient_group(&IntMatrix::zeros(1, 0), &IntMatrix::zeros(0, 1)).unwrap();
        assert!(matches!(
            induced_hom(&IntMatrix::identity(1), &src, &dst),
            Err(ExactAlgError::NotChainLevelMap(_))
        ));
    }

    fn times(k: i64) -> GroupHom {
        let g = subquotient_group(&IntMatrix::zeros(1, 0), &IntMatrix::zeros(0, 1)).unwrap();
        induced_hom(&IntMatrix::from_rows(1, &[[k]]), &g, &g).unwrap()
    }

    #[test]
    fn preimages() {
        assert_eq!(
            solve_in_image(&times(0), &[z(0)]).unwrap(),
            Some(vec![z(0)])
        );
        assert_eq!(solve_in_image(&times(2), &[z(3)]).unwrap(), None);
        assert_eq!(
            solve_in_image(&times(2), &[z(4)]).unwrap(),
            Some(vec![z(2)])
        );
        assert!(matches!(
            solve_in_image(&times(2), &[z(1), z(1)]),
            Err(ExactAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mod2_subquotient() {
        // Z -2-> Z read mod 2: both groups Z/2
        let d = IntMatrix::from_rows(1, &[[2]]);
        let h0 = subquotient_group_mod2(&IntMatrix::zeros(1, 0), &d).unwrap();
        let h1 = subquotient_group_mod2(&d, &IntMatrix::zeros(0, 1)).unwrap();
        assert_eq!(h0.describe(), "Z/2");
        assert_eq!(h1.describe(), "Z/2");
        assert_eq!(h1.class_of(&bigvec(&[3])).unwrap(), vec![z(1)]);
    }

    #[test]
    fn kernels_and_exactness() {
        // Z -2-> Z -> Z/2 is exact in the middle
        let zg = subquotient_group(&IntMatrix::zeros(1, 0), &IntMatrix::zeros(0, 1)).unwrap();
        let z2 = subquotient_group_mod2(&IntMatrix::zeros(1, 0), &IntMatrix::zeros(0, 1)).unwrap();
        let f = induced_hom(&IntMatrix::from_rows(1, &[[2]]), &zg, &zg).unwrap();
        let g = induced_hom(&IntMatrix::identity(1), &zg, &z2).unwrap();
        assert!(is_exact_at(&f, &g));
        assert_eq!(g.kernel_generators(), vec![vec![z(2)]]);
        assert!(g.is_surjective());
        assert!(!g.is_injective());
    }

    #[test]
    fn subgroup_structure() {
        let d_in = IntMatrix::from_rows(1, &[[0], [4]]);
        let g = subquotient_group(&d_in, &IntMatrix::zeros(0, 2)).unwrap(); // Z + Z/4
        assert_eq!(g.describe(), "Z + Z/4");
        let s = subgroup_of(&g, &[vec![z(2), z(0)], vec![z(0), z(2)]]);
        assert_eq!(s.describe(), "Z + Z/2");
        let x = s.element(&g, &[z(3), z(1)]);
        assert_eq!(s.coordinates(&g, &x).unwrap(), vec![z(3), z(1)]);
    }
}
