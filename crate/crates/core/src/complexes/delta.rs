use serde::{Deserialize, Serialize};

use super::{LambdaMatrix, LambdaScalar, Violation};

/// A Delta-complex with a simplicial involution.
///
/// `faces[d - 1][k]` lists the `d + 1` faces of the `k`-th `d`-simplex, face
/// `i` being the one opposite vertex `i`. `involution[d]` permutes the
/// `d`-simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaComplex {
    pub vertices: usize,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub involution: Vec<Vec<usize>>,
}

/// Position of a simplex relative to the chosen orbit representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitSlot {
    /// Index of the orbit (the Lambda-basis index).
    pub orbit: usize,
    /// 0 if the simplex is the representative, 1 if it is its image.
    pub tau_power: u8,
}

impl DeltaComplex {
    pub fn dim(&self) -> usize {
        self.faces.len()
    }

    pub fn count(&self, d: usize) -> usize {
        if d == 0 {
            self.vertices
        } else {
            self.faces.get(d - 1).map_or(0, Vec::len)
        }
    }

    /// Face `i` of simplex `k` in dimension `d >= 1`.
    pub fn face(&self, d: usize, k: usize, i: usize) -> usize {
        self.faces[d - 1][k][i]
    }

    pub fn involution(&self, d: usize, k: usize) -> usize {
        self.involution[d][k]
    }

    /// Front `p`-face (vertices `0..=p`) of the `k`-th `d`-simplex.
    pub fn front_face(&self, d: usize, k: usize, p: usize) -> usize {
        let mut s = k;
        for e in (p + 1..=d).rev() {
            s = self.face(e, s, e);
        }
        s
    }

    /// Back `q`-face (vertices `d-q..=d`) of the `k`-th `d`-simplex.
    pub fn back_face(&self, d: usize, k: usize, q: usize) -> usize {
        let mut s = k;
        for e in (q + 1..=d).rev() {
            s = self.face(e, s, 0);
        }
        s
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for d in 1..=self.dim() {
            for (k, f) in self.faces[d - 1].iter().enumerate() {
                if f.len() != d + 1 {
                    out.push(Violation::DeltaShape {
                        dim: d,
                        detail: format!("simplex {k} has {} faces, expected {}", f.len(), d + 1),
                    });
                    continue;
                }
                if let Some(bad) = f.iter().find(|&&x| x >= self.count(d - 1)) {
                    out.push(Violation::DeltaShape {
                        dim: d,
                        detail: format!("simplex {k} refers to missing face {bad}"),
                    });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for d in 2..=self.dim() {
            for k in 0..self.count(d) {
                for j in 1..=d {
                    for i in 0..j {
                        let lhs = self.face(d - 1, self.face(d, k, j), i);
                        let rhs = self.face(d - 1, self.face(d, k, i), j - 1);
                        if lhs != rhs {
                            out.push(Violation::SimplicialIdentity {
                                dim: d,
                                simplex: k,
                                i,
                                j,
                            });
                        }
                    }
                }
            }
        }
        if self.involution.len() != self.dim() + 1 {
            out.push(Violation::InvolutionShape {
                dim: self.involution.len(),
                detail: format!("expected {} permutations", self.dim() + 1),
            });
            return out;
        }
        for d in 0..=self.dim() {
            let perm = &self.involution[d];
            let n = self.count(d);
            if perm.len() != n || perm.iter().any(|&p| p >= n) {
                out.push(Violation::InvolutionShape {
                    dim: d,
                    detail: "not a permutation of the simplices".into(),
                });
                continue;
            }
            for k in 0..n {
                if perm[perm[k]] != k {
                    out.push(Violation::InvolutionNotInvolutive { dim: d, simplex: k });
                }
                if perm[k] == k {
                    out.push(Violation::NonFreeInvolution { dim: d, simplex: k });
                }
                if d >= 1 {
                    for i in 0..=d {
                        let a = self.face(d, perm[k], i);
                        let b = self
                            .involution
                            .get(d - 1)
                            .and_then(|p| p.get(self.face(d, k, i)));
                        if Some(&a) != b {
                            out.push(Violation::InvolutionNotSimplicial {
                                dim: d,
                                simplex: k,
                                face: i,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Orbit representatives (the smaller index of each pair) in increasing order,
    /// and for every simplex its orbit slot. Assumes a valid free involution.
    pub fn orbits(&self, d: usize) -> (Vec<usize>, Vec<OrbitSlot>) {
        let n = self.count(d);
        let mut reps = Vec::new();
        let mut slots = vec![
            OrbitSlot {
                orbit: 0,
                tau_power: 0
            };
            n
        ];
        for k in 0..n {
            let t = self.involution(d, k);
            if k < t {
                slots[k] = OrbitSlot {
                    orbit: reps.len(),
                    tau_power: 0,
                };
                slots[t] = OrbitSlot {
                    orbit: reps.len(),
                    tau_power: 1,
                };
                reps.push(k);
            }
        }
        (reps, slots)
    }

    /// Boundary matrices of the free Lambda-complex on orbit representatives.
    pub fn lambda_boundaries(&self) -> (Vec<usize>, Vec<LambdaMatrix>) {
        let orbit_data: Vec<_> = (0..=self.dim()).map(|d| self.orbits(d)).collect();
        let ranks: Vec<usize> = orbit_data.iter().map(|(r, _)| r.len()).collect();
        let mut bds = Vec::new();
        for d in 1..=self.dim() {
            let (reps, _) = &orbit_data[d];
            let (_, slots) = &orbit_data[d - 1];
            let mut m = LambdaMatrix::zeros(ranks[d - 1], ranks[d]);
            for (col, &k) in reps.iter().enumerate() {
                for i in 0..=d {
                    let f = self.face(d, k, i);
                    let slot = slots[f];
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let v = if slot.tau_power == 0 {
                        LambdaScalar::new(sign, 0)
                    } else {
                        LambdaScalar::new(0, sign)
                    };
                    m.add_to(slot.orbit, col, v);
                }
            }
            bds.push(m);
        }
        (ranks, bds)
    }
}
