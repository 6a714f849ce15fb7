//! Built-in complexes with known answers.

pub mod models;

use thiserror::Error;

use crate::complexes::{AuxData, Coeff, EquivariantComplex, LambdaMatrix, LambdaScalar};
use models::{cross_polytope, lambda_sphere, product, pullback_from_left, SignedCells};

/// Reference values an entry must reproduce.
#[derive(Clone, Debug, Default)]
pub struct Expected {
    /// Cohomology of the orbit space, one group description per degree.
    pub cohomology: Vec<(Coeff, Vec<&'static str>)>,
    /// Homology of the orbit space, one group description per degree.
    pub homology: Vec<(Coeff, Vec<&'static str>)>,
    /// Whether `beta^-(x^2)` vanishes.
    pub primary_vanishes: Option<bool>,
    /// Exact Z2-index.
    pub index: Option<u8>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub complex: EquivariantComplex,
    pub expected: Expected,
    pub derivation: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown catalog entry `{0}`")]
pub struct UnknownEntry(pub String);

const RP_NAMES: [&str; 8] = ["rp1", "rp2", "rp3", "rp4", "rp5", "rp6", "rp7", "rp8"];

pub fn list() -> Vec<&'static str> {
    let mut v = vec!["kirby", "sphere4", "s1s3_a", "s1s3_b", "s1s3_c", "s1s3_d"];
    v.extend(RP_NAMES);
    v.extend(["circle", "torus2"]);
    v
}

pub fn get(name: &str) -> Result<CatalogEntry, UnknownEntry> {
    let entry = match name {
        "kirby" => kirby(),
        "sphere4" => sphere4(),
        "s1s3_a" => s1s3(Case::A),
        "s1s3_b" => s1s3(Case::B),
        "s1s3_c" => s1s3(Case::C),
        "s1s3_d" => s1s3(Case::D),
        "circle" => circle(),
        "torus2" => torus2(),
        other => match RP_NAMES.iter().position(|&n| n == other) {
            Some(i) => rp(i + 1),
            None => return Err(UnknownEntry(other.to_string())),
        },
    };
    Ok(entry)
}

fn l(a: i64, b: i64) -> LambdaScalar {
    LambdaScalar::new(a, b)
}

fn kirby() -> CatalogEntry {
    let bds = vec![
        LambdaMatrix::from_rows(1, vec![vec![l(-1, 1)]]),
        LambdaMatrix::from_rows(2, vec![vec![l(0, 0), l(1, 1)]]),
        LambdaMatrix::from_rows(1, vec![vec![l(1, 1)], vec![l(0, 0)]]),
        LambdaMatrix::from_rows(1, vec![vec![l(-1, 1)]]),
    ];
    let aux = AuxData {
        square_form: Some(vec![vec![0, 1], vec![1, 0]]),
        basis_cocycles: Some(vec![vec![l(1, -1), l(0, 0)], vec![l(0, 0), l(1, 0)]]),
        ..AuxData::default()
    };
    let complex = EquivariantComplex::from_lambda("kirby", vec![1, 1, 2, 1, 1], bds)
        .with_aux(aux)
        .claiming_manifold(true)
        .with_note("rational homology 4-sphere with fundamental group Z/2 from a surgery diagram");
    CatalogEntry {
        name: "kirby",
        complex,
        expected: Expected {
            cohomology: vec![
                (Coeff::ZMinus, vec!["0", "Z/2", "Z^2", "0", "Z/2"]),
                (Coeff::Lambda, vec!["Z", "0", "Z^2", "0", "Z"]),
            ],
            homology: vec![(Coeff::Z, vec!["Z", "Z/2", "Z/2", "0", "Z"])],
            primary_vanishes: Some(true),
            index: Some(2),
        },
        derivation: "Handle decomposition with one 0-, one 1-, two 2-, one 3- and one 4-handle. \
            The 2-handles L1, L2 give d(L1) = 0 and d(L2) = (1 + t) e1, the 3-handle bounds \
            (1 + t) L1. The square form is the intersection form of the cover on the classes \
            L1 - tL1 and L2, whose square is 2a(2b + 1) on aL1' + bL2'.",
    }
}

fn sphere4() -> CatalogEntry {
    let complex = EquivariantComplex::from_delta("sphere4", cross_polytope(4))
        .expect("cross-polytope is a valid delta complex")
        .claiming_manifold(true)
        .with_note("boundary of the 5-dimensional cross-polytope with the antipodal map");
    CatalogEntry {
        name: "sphere4",
        complex,
        expected: Expected {
            cohomology: vec![
                (Coeff::Z2, vec!["Z/2"; 5]),
                (Coeff::ZMinus, vec!["0", "Z/2", "0", "Z/2", "Z"]),
            ],
            homology: vec![(Coeff::Z, vec!["Z", "Z/2", "0", "Z/2", "0"])],
            primary_vanishes: None,
            index: Some(4),
        },
        derivation: "Antipodal 4-sphere, orbit space RP^4, whose mod-2 cohomology is Z/2[x]/(x^5).",
    }
}

#[derive(Clone, Copy)]
enum Case {
    A,
    B,
    C,
    D,
}

fn s1s3(case: Case) -> CatalogEntry {
    let (name, l_model, k_model, index, primary, note, derivation) = match case {
        Case::A => (
            "s1s3_a",
            lambda_sphere(1),
            SignedCells::sphere(3, false),
            1,
            true,
            "orbit space S^1 x S^3",
            "Free rotation of the circle factor times the identity on S^3.",
        ),
        Case::B => (
            "s1s3_b",
            lambda_sphere(1),
            SignedCells::sphere(3, true),
            1,
            true,
            "orbit space the nonorientable S^3-bundle over S^1",
            "Free rotation of the circle factor times a reflection of S^3.",
        ),
        Case::C => (
            "s1s3_c",
            lambda_sphere(3),
            SignedCells::sphere(1, false),
            3,
            false,
            "orbit space S^1 x RP^3",
            "Antipodal map on S^3 times the identity on S^1. The class x^3 is pulled back \
             from RP^3 along the projection, so it is the dual of the 3-cell times a vertex.",
        ),
        Case::D => (
            "s1s3_d",
            lambda_sphere(3),
            SignedCells::circle_conjugation(),
            3,
            false,
            "orbit space RP^4 # RP^4",
            "Antipodal map on S^3 times complex conjugation on S^1. The circle has the two \
             fixed points as vertices and the two exchanged arcs as edges. The class x^3 is \
             pulled back from RP^3 along the equivariant projection.",
        ),
    };
    let (lr, lb) = l_model;
    let (ranks, bds) = product(&lr, &lb, &k_model);
    let mut aux = AuxData::default();
    if lr.len() > 3 {
        aux.x_cube_cocycle = Some(pullback_from_left(&lr, &k_model, 3, &[1]));
    }
    let complex = EquivariantComplex::from_lambda(name, ranks, bds)
        .with_aux(aux)
        .claiming_manifold(true)
        .with_note(note);
    let mut cohomology = Vec::new();
    let mut homology = Vec::new();
    match case {
        Case::A => homology.push((Coeff::Z, vec!["Z", "Z", "0", "Z", "Z"])),
        Case::B => homology.push((Coeff::Z, vec!["Z", "Z", "0", "Z/2", "0"])),
        Case::C => homology.push((Coeff::Z, vec!["Z", "Z + Z/2", "Z/2", "Z", "Z"])),
        Case::D => cohomology.push((
            Coeff::Z2,
            vec!["Z/2", "Z/2 + Z/2", "Z/2 + Z/2", "Z/2 + Z/2", "Z/2"],
        )),
    }
    CatalogEntry {
        name,
        complex,
        expected: Expected {
            cohomology,
            homology,
            primary_vanishes: Some(primary),
            index: Some(index),
        },
        derivation,
    }
}

fn rp(m: usize) -> CatalogEntry {
    let (ranks, bds) = lambda_sphere(m);
    let mut aux = AuxData::default();
    if m >= 3 {
        aux.x_cube_cocycle = Some(vec![1]);
    }
    let twisted: Vec<&'static str> = (0..=m)
        .map(|n| match n {
            0 => "0",
            n if n % 2 == 1 => "Z/2",
            n if n == m => "Z",
            _ => "0",
        })
        .collect();
    let complex = EquivariantComplex::from_lambda(RP_NAMES[m - 1], ranks, bds)
        .with_aux(aux)
        .claiming_manifold(m == 4)
        .with_note(format!("antipodal S^{m}, orbit space RP^{m}"));
    CatalogEntry {
        name: RP_NAMES[m - 1],
        complex,
        expected: Expected {
            cohomology: vec![(Coeff::ZMinus, twisted), (Coeff::Z2, vec!["Z/2"; m + 1])],
            homology: Vec::new(),
            primary_vanishes: None,
            index: (m == 4).then_some(4),
        },
        derivation: "Two cells in each dimension with d f_k = (1 + (-1)^k t) f_{k-1}; \
            with sign coefficients the cochain complex is Z -2-> Z -0-> Z -2-> ...",
    }
}

fn circle() -> CatalogEntry {
    let complex = EquivariantComplex::from_delta("circle", models::circle_delta())
        .expect("circle is a valid delta complex")
        .with_note("rotation by pi on the circle");
    CatalogEntry {
        name: "circle",
        complex,
        expected: Expected {
            cohomology: vec![
                (Coeff::ZMinus, vec!["0", "Z/2"]),
                (Coeff::Z, vec!["Z", "Z"]),
            ],
            homology: Vec::new(),
            primary_vanishes: None,
            index: None,
        },
        derivation: "Twisted cochain complex Z -(-2)-> Z.",
    }
}

fn torus2() -> CatalogEntry {
    let complex = EquivariantComplex::from_delta("torus2", models::torus_translation())
        .expect("torus is a valid delta complex")
        .with_note("half-translation on a torus; the orbit space is the two-triangle torus");
    CatalogEntry {
        name: "torus2",
        complex,
        expected: Expected {
            cohomology: vec![
                (Coeff::Z, vec!["Z", "Z^2", "Z"]),
                (Coeff::Lambda, vec!["Z", "Z^2", "Z"]),
            ],
            homology: Vec::new(),
            primary_vanishes: None,
            index: None,
        },
        derivation: "Cup product fixture: on the orbit torus, a = h' + g' and b = w' + g' \
            have a u b = 1 on the fundamental cycle T - U.",
    }
}
