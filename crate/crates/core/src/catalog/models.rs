//! Cell models used by the catalog.

use crate::complexes::{DeltaComplex, EquivariantComplex, LambdaMatrix, LambdaScalar};

fn s(a: i64, b: i64) -> LambdaScalar {
    LambdaScalar::new(a, b)
}

/// Boundary matrices of the free sphere `S^m` with two cells per dimension,
/// `d f_k = (1 + (-1)^k tau) f_{k-1}`.
pub fn lambda_sphere(m: usize) -> (Vec<usize>, Vec<LambdaMatrix>) {
    let ranks = vec![1; m + 1];
    let bds = (1..=m)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            LambdaMatrix::from_rows(1, vec![vec![s(1, sign)]])
        })
        .collect();
    (ranks, bds)
}

/// A finite CW complex with a cellular involution acting by signed permutations.
///
/// `boundaries[q - 1]` is the integral `c_{q-1} x c_q` boundary; the involution
/// sends cell `s` to `signs[q][s] * perm[q][s]`.
#[derive(Clone, Debug)]
pub struct SignedCells {
    pub counts: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<i64>>>,
    pub perm: Vec<Vec<usize>>,
    pub signs: Vec<Vec<i64>>,
}

impl SignedCells {
    /// `S^n` as a point and an `n`-cell; `flip` reverses the top cell.
    pub fn sphere(n: usize, flip: bool) -> Self {
        let mut counts = vec![0; n + 1];
        counts[0] = 1;
        counts[n] = 1;
        let boundaries = (1..=n)
            .map(|q| vec![vec![0; counts[q]]; counts[q - 1]])
            .collect();
        let perm = counts.iter().map(|&c| (0..c).collect()).collect();
        let mut signs: Vec<Vec<i64>> = counts.iter().map(|&c| vec![1; c]).collect();
        if flip {
            signs[n][0] = -1;
        }
        SignedCells {
            counts,
            boundaries,
            perm,
            signs,
        }
    }

    /// The circle with complex conjugation: fixed points `+1`, `-1` and the two
    /// arcs exchanged with a sign.
    pub fn circle_conjugation() -> Self {
        SignedCells {
            counts: vec![2, 2],
            // upper arc +1 -> -1, lower arc -1 -> +1
            boundaries: vec![vec![vec![-1, 1], vec![1, -1]]],
            perm: vec![vec![0, 1], vec![1, 0]],
            signs: vec![vec![1, 1], vec![-1, -1]],
        }
    }

    fn dim(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Free `Lambda`-complex of `L~ x K` with the diagonal involution.
///
/// Basis in degree `n`: pairs `(b, s)` with `deg b + deg s = n`, ordered by
/// `deg b` ascending, then `b`, then `s`.
pub fn product(
    l_ranks: &[usize],
    l_bds: &[LambdaMatrix],
    k: &SignedCells,
) -> (Vec<usize>, Vec<LambdaMatrix>) {
    let dl = l_ranks.len() - 1;
    let dk = k.dim();
    let top = dl + dk;
    let mut index: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); top + 1];
    for n in 0..=top {
        for p in 0..=dl.min(n) {
            let q = n - p;
            if q > dk {
                continue;
            }
            for b in 0..l_ranks[p] {
                for c in 0..k.counts[q] {
                    index[n].push((p, b, c));
                }
            }
        }
    }
    let pos = |n: usize, p: usize, b: usize, c: usize| {
        index[n].iter().position(|&t| t == (p, b, c)).unwrap()
    };
    let ranks: Vec<usize> = index.iter().map(Vec::len).collect();
    let mut bds = Vec::new();
    for n in 1..=top {
        let mut m = LambdaMatrix::zeros(ranks[n - 1], ranks[n]);
        for (col, &(p, b, c)) in index[n].iter().enumerate() {
            let q = n - p;
            if p >= 1 {
                let d = &l_bds[p - 1];
                for j in 0..d.rows() {
                    let v = d.get(j, b);
                    if v.a != 0 {
                        m.add_to(pos(n - 1, p - 1, j, c), col, s(v.a, 0));
                    }
                    if v.b != 0 {
                        let pc = k.perm[q][c];
                        m.add_to(pos(n - 1, p - 1, j, pc), col, s(0, v.b * k.signs[q][pc]));
                    }
                }
            }
            if q >= 1 {
                let sign = if p % 2 == 0 { 1 } else { -1 };
                let d = &k.boundaries[q - 1];
                for (t, row) in d.iter().enumerate() {
                    if row[c] != 0 {
                        m.add_to(pos(n - 1, p, b, t), col, s(sign * row[c], 0));
                    }
                }
            }
        }
        bds.push(m);
    }
    (ranks, bds)
}

/// Mod-2 cochain on `L~ x K` pulled back from a cochain `phi` on the `L` factor:
/// `phi(b)` on cells `b x (vertex)`, zero elsewhere.
pub fn pullback_from_left(l_ranks: &[usize], k: &SignedCells, p: usize, phi: &[i64]) -> Vec<i64> {
    let dl = l_ranks.len() - 1;
    let mut out = Vec::new();
    for pp in 0..=dl.min(p) {
        let q = p - pp;
        if q > k.dim() {
            continue;
        }
        for b in 0..l_ranks[pp] {
            for _ in 0..k.counts[q] {
                out.push(if pp == p { phi[b] } else { 0 });
            }
        }
    }
    out
}

/// Boundary of the cross-polytope in `R^{n+1}` with the antipodal map.
pub fn cross_polytope(n: usize) -> DeltaComplex {
    let coords = n + 1;
    let tops: Vec<Vec<usize>> = (0u32..(1 << coords))
        .map(|signs| (0..coords).map(|i| 2 * i + ((signs >> i) & 1) as usize).collect())
        .collect();
    antipodal_complex(coords, &tops)
}

/// The antipodally closed subcomplex of the cross-polytope boundary generated
/// by the given simplices.
///
/// Vertex `2i` is `+e_i` and `2i + 1` is `-e_i`, so the antipodal map is
/// `v -> v ^ 1`. A simplex is a set of vertices with distinct coordinates;
/// vertices are listed in increasing order, which the antipodal map preserves.
pub fn antipodal_complex(coords: usize, generators: &[Vec<usize>]) -> DeltaComplex {
    let mut all = std::collections::BTreeSet::new();
    for g in generators {
        let mut g = g.clone();
        g.sort();
        assert!(g.windows(2).all(|w| w[0] / 2 < w[1] / 2), "simplex repeats a coordinate");
        assert!(g.iter().all(|&v| v < 2 * coords), "vertex out of range");
        for image in [g.clone(), g.iter().map(|&v| v ^ 1).collect()] {
            for mask in 1u32..(1 << image.len()) {
                let face: Vec<usize> = (0..image.len()).filter(|i| mask & (1 << i) != 0).map(|i| image[i]).collect();
                all.insert(face);
            }
        }
    }
    let top = all.iter().map(Vec::len).max().unwrap_or(1) - 1;
    let mut simplices: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
    for s in all {
        simplices[s.len() - 1].push(s);
    }
    for list in &mut simplices {
        list.sort();
    }
    // vertices are renumbered densely in label order
    let lookup = |d: usize, v: &[usize]| simplices[d].binary_search(&v.to_vec()).unwrap();
    let faces = (1..=top)
        .map(|d| {
            simplices[d]
                .iter()
                .map(|v| {
                    (0..=d)
                        .map(|i| {
                            let mut f = v.clone();
                            f.remove(i);
                            lookup(d - 1, &f)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let involution = (0..=top)
        .map(|d| {
            simplices[d]
                .iter()
                .map(|v| {
                    let w: Vec<usize> = v.iter().map(|&x| x ^ 1).collect();
                    lookup(d, &w)
                })
                .collect()
        })
        .collect();
    DeltaComplex {
        vertices: simplices[0].len(),
        faces,
        involution,
    }
}

/// Torus `R^2 / (2Z x Z)` triangulated over two unit squares, with the
/// translation by `(1, 0)`; the orbit space is the two-triangle torus.
pub fn torus_translation() -> DeltaComplex {
    // edges: h0 h1 w0 w1 g0 g1; triangles: T0 U0 T1 U1
    DeltaComplex {
        vertices: 2,
        faces: vec![
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![0, 0],
                vec![1, 1],
                vec![1, 0],
                vec![0, 1],
            ],
            vec![vec![3, 4, 0], vec![0, 4, 2], vec![2, 5, 1], vec![1, 5, 3]],
        ],
        involution: vec![vec![1, 0], vec![1, 0, 3, 2, 5, 4], vec![2, 3, 0, 1]],
    }
}

/// Free circle as two vertices and two edges.
pub fn circle_delta() -> DeltaComplex {
    DeltaComplex {
        vertices: 2,
        faces: vec![vec![vec![1, 0], vec![0, 1]]],
        involution: vec![vec![1, 0], vec![1, 0]],
    }
}

/// `S^0` with the swap. Disconnected, so it fails validation; used for
/// truncated Borel constructions, whose total space is `RP^m`.
pub fn point_pair() -> EquivariantComplex {
    EquivariantComplex::from_lambda("point_pair", vec![1], Vec::new())
}
