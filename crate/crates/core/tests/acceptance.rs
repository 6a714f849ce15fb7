//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Every comparison is exact; there are no numerical tolerances anywhere in
//! this suite. Corpus sizes are pinned below.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::oracles;
use z2index::borel::{borel_filtered_complex, d3_02, e2_closed_form, e2_coefficients, ss_page};
use z2index::catalog;
use z2index::complexes::{aw_cup, Coeff, Cochain, EquivariantComplex, Pairing};
use z2index::decider::{
    d3_parity_from_borel, decide, isotropic_parity_witness, square_form, DecideConfig, IndexStatus, WitnessOutcome,
};
use z2index::exactalg::{
    is_exact_at, smith_normal_form, subquotient_group, subquotient_group_mod2, IntMatrix,
};
use z2index::obstructions::{
    connecting_group_hom, induced_injection, induced_surjection, primary_obstruction, rho_beta, x_powers,
    CoefficientSes, D3Membership,
};

const LAMBDA_CORPUS: usize = 120;
const ANTIPODAL_CORPUS: usize = 40;
const SNF_CASES: usize = 500;
const SUBQUOTIENT_CASES: usize = 300;
const TRUNCATION: usize = 6;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn entry(name: &str) -> EquivariantComplex {
    catalog::get(name).expect("catalog entry").complex
}

fn groups(c: &EquivariantComplex, coeff: Coeff, homology: bool) -> Vec<String> {
    (0..=c.top_degree())
        .map(|q| {
            let g = if homology { c.homology(coeff, q) } else { c.cohomology(coeff, q) };
            g.expect("group").describe()
        })
        .collect()
}

fn index_of(c: &EquivariantComplex) -> IndexStatus {
    decide(c, &DecideConfig::default()).expect("verdict").status
}

fn s1s3_table() -> Outcome {
    let got: Vec<IndexStatus> = ["s1s3_a", "s1s3_b", "s1s3_c", "s1s3_d"].iter().map(|n| index_of(&entry(n))).collect();
    let want = [1, 1, 3, 3].map(IndexStatus::Exact);
    ensure!(got == want, "verdicts {got:?}");
    Ok("verdicts 1, 1, 3, 3".into())
}

fn kirby_end_to_end() -> Outcome {
    let c = entry("kirby");
    let h = groups(&c, Coeff::Z, true);
    ensure!(h == ["Z", "Z/2", "Z/2", "0", "Z"], "H_*(N, Z) = {h:?}");
    let hm = groups(&c, Coeff::ZMinus, false);
    ensure!(hm == ["0", "Z/2", "Z^2", "0", "Z/2"], "H^*(N, Z-) = {hm:?}");
    let anti = c.antisymmetric_classes(2).map_err(|e| e.to_string())?;
    ensure!(anti.free_basis().len() == 2, "antisymmetric rank {}", anti.free_basis().len());
    let f = borel_filtered_complex(&c, TRUNCATION, Coeff::ZMinus).map_err(|e| e.to_string())?;
    let d3 = d3_02(&f, &c).map_err(|e| e.to_string())?;
    ensure!(d3.hom.codomain.describe() == "Z/2", "d3 codomain {}", d3.hom.codomain.describe());
    let (parity, _) = d3_parity_from_borel(&c, TRUNCATION).map_err(|e| e.to_string())?;
    ensure!(parity == [0, 1], "d3 parity {parity:?}");
    let p = square_form(&c, 8).map_err(|e| e.to_string())?;
    ensure!(p.gram == IntMatrix::from_rows(2, &[[0, 1], [1, 0]]), "gram {:?}", p.gram);
    ensure!(
        isotropic_parity_witness(&p) == WitnessOutcome::Witness(vec![0, 1]),
        "witness {:?}",
        isotropic_parity_witness(&p)
    );
    let v = decide(&c, &DecideConfig::default()).map_err(|e| e.to_string())?;
    ensure!(v.status == IndexStatus::Exact(2), "verdict {}", v.status);
    let w = &v.certificates.last().ok_or("no certificate")?.witness["s"];
    ensure!(*w == serde_json::json!([0, 1]), "certificate witness {w}");
    Ok("homology, twisted cohomology, d3 = b mod 2, verdict 2 with witness (0, 1)".into())
}

fn antipodal_sphere() -> Outcome {
    let c = entry("sphere4");
    ensure!(c.delta().is_some(), "sphere4 is not a triangulated input");
    let p = x_powers(&c).map_err(|e| e.to_string())?;
    let nz: Vec<_> = (1..=4).map(|k| p.nonzero(k)).collect();
    ensure!(nz == [Some(true); 4], "powers {nz:?}");
    let v = index_of(&c);
    ensure!(v == IndexStatus::Exact(4), "verdict {v}");
    Ok("x^1..x^4 nonzero, verdict 4".into())
}

fn projective_pattern() -> Outcome {
    let c = entry("rp7");
    for n in 0..=7 {
        let g = c.cohomology(Coeff::ZMinus, n).map_err(|e| e.to_string())?.describe();
        let want = if n % 2 == 0 { "0" } else { "Z/2" };
        ensure!(g == want, "H^{n}(RP^7, Z-) = {g}");
    }
    let p = primary_obstruction(&c).map_err(|e| e.to_string())?;
    ensure!(!p.vanishes, "beta^-(alpha^2) vanishes");
    Ok("Z- cohomology alternates 0, Z/2 and beta^-(alpha^2) != 0".into())
}

fn connected_sum_orbit() -> Outcome {
    let c = entry("s1s3_d");
    let dims: Vec<usize> = (0..=4).map(|q| c.cohomology(Coeff::Z2, q).expect("group").ngens()).collect();
    ensure!(dims == [1, 2, 2, 2, 1], "mod-2 dimensions {dims:?}");
    let p = x_powers(&c).map_err(|e| e.to_string())?;
    let nz: Vec<_> = (2..=4).map(|k| p.nonzero(k)).collect();
    ensure!(nz == [Some(true), Some(true), Some(false)], "x^2, x^3, x^4 nonzero: {nz:?}");
    Ok("dimensions (1, 2, 2, 2, 1), x^2, x^3 != 0, x^4 = 0".into())
}

fn spectral_sequence_consistency() -> Outcome {
    let corpus = common::lambda_corpus(LAMBDA_CORPUS);
    let mut compared = 0;
    for c in &corpus {
        ensure!(c.ranks().iter().all(|&r| r <= common::MAX_CELLS), "{} exceeds the cell bound", c.name);
        let f = borel_filtered_complex(c, TRUNCATION, Coeff::ZMinus).map_err(|e| e.to_string())?;
        for n in 0..TRUNCATION {
            let direct = if n <= c.top_degree() {
                c.cohomology(Coeff::ZMinus, n).expect("group").describe()
            } else {
                "0".into()
            };
            let total = f.total_cohomology(n).map_err(|e| e.to_string())?.describe();
            ensure!(total == direct, "{}: total {total} vs direct {direct} in degree {n}", c.name);
        }
        let page = ss_page(&f, 2).map_err(|e| e.to_string())?;
        for q in 0..=c.top_degree() {
            let (m, u) = e2_coefficients(c, Coeff::ZMinus, q).map_err(|e| e.to_string())?;
            for p in 0..=page.max_p() {
                let closed = e2_closed_form(&m, &u, p).map_err(|e| e.to_string())?.describe();
                let got = page.group(p, q).ok_or("missing E_2 group")?.describe();
                ensure!(got == closed, "{}: E_2^({p},{q}) = {got} vs {closed}", c.name);
            }
        }
        if c.cover_h1_vanishes().map_err(|e| e.to_string())? {
            let (parity, _) = d3_parity_from_borel(c, TRUNCATION).map_err(|e| e.to_string())?;
            let membership = D3Membership::new(c).and_then(|m| m.functional()).map_err(|e| e.to_string())?;
            ensure!(parity == membership, "{}: Borel d3 {parity:?} vs membership {membership:?}", c.name);
            compared += 1;
        }
    }
    Ok(format!("{} complexes, {compared} with H_1(X) = 0", corpus.len()))
}

fn bockstein_suite() -> Outcome {
    let corpus = common::lambda_corpus(LAMBDA_CORPUS);
    let (mut onto, mut not_onto) = (0, 0);
    for c in &corpus {
        for ses in CoefficientSes::ALL {
            for q in 0..c.top_degree() {
                let i = induced_injection(c, ses, q).map_err(|e| e.to_string())?;
                let p = induced_surjection(c, ses, q).map_err(|e| e.to_string())?;
                let d = connecting_group_hom(c, ses, q).map_err(|e| e.to_string())?;
                let i_next = induced_injection(c, ses, q + 1).map_err(|e| e.to_string())?;
                ensure!(
                    is_exact_at(&i, &p) && is_exact_at(&p, &d) && is_exact_at(&d, &i_next),
                    "{}: {} not exact around degree {q}",
                    c.name,
                    ses.name()
                );
            }
        }
        if c.cover_h1_vanishes().map_err(|e| e.to_string())? {
            let vanishes = primary_obstruction(c).map_err(|e| e.to_string())?.vanishes;
            let (_, surjective) = d3_parity_from_borel(c, TRUNCATION).map_err(|e| e.to_string())?;
            ensure!(vanishes == surjective, "{}: primary vanishes {vanishes}, d3 onto {surjective}", c.name);
            if surjective {
                onto += 1;
            } else {
                not_onto += 1;
            }
        }
    }
    let mut mode_a = common::antipodal_corpus(ANTIPODAL_CORPUS);
    mode_a.push(entry("sphere4"));
    for c in &mode_a {
        let d = c.delta().ok_or("not triangulated")?;
        let x = c.classifying_cocycle().map_err(|e| e.to_string())?;
        let cup = |a: &Cochain, b: &Cochain| aw_cup(d, a, b, Pairing::Z2Z2).expect("cup");
        let x3 = cup(&cup(&x, &x), &x);
        let x4 = cup(&x3, &x);
        let sq = rho_beta(c, &x3).map_err(|e| e.to_string())?;
        let sum = x4.values.iter().zip(&sq.values).map(|(a, b)| a + b).collect();
        let (g, class) = c.class_of(&Cochain::new(4, Coeff::Z2, sum)).map_err(|e| e.to_string())?;
        ensure!(g.is_zero_element(&class), "{}: x^4 != rho beta(x^3)", c.name);
    }
    Ok(format!(
        "{} complexes exact, {} triangulated inputs, equivalence on {onto} onto and {not_onto} not onto",
        corpus.len(),
        mode_a.len()
    ))
}

fn to_matrix(rows: &oracles::Rows, r: usize, c: usize) -> IntMatrix {
    IntMatrix::from_vec(r, c, rows.iter().flatten().map(|&x| BigInt::from(x)).collect())
}

fn exact_algebra_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..SNF_CASES {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rows = oracles::random_rows(&mut rng, r, c, 9);
        let got = smith_normal_form(&to_matrix(&rows, r, c)).invariant_factors();
        ensure!(got == oracles::minor_gcd_factors(&rows), "invariant factors of {rows:?}: {got:?}");
    }
    for _ in 0..SUBQUOTIENT_CASES {
        let n = rng.gen_range(1..=4);
        let (d_in, d_out) = oracles::random_composable(&mut rng, n);
        let a = d_in.first().map_or(0, Vec::len);
        let (mi, mo) = (to_matrix(&d_in, n, a), to_matrix(&d_out, d_out.len(), n));
        let g = subquotient_group(&mi, &mo).map_err(|e| e.to_string())?;
        let want = oracles::subquotient(&d_in, &d_out, n);
        ensure!((g.free_rank(), g.torsion().to_vec()) == want, "subquotient {d_in:?} {d_out:?}");
        let g2 = subquotient_group_mod2(&mi, &mo).map_err(|e| e.to_string())?;
        ensure!(g2.ngens() == oracles::subquotient_mod2_dim(&d_in, &d_out, n), "mod 2 {d_in:?} {d_out:?}");
    }
    Ok(format!("{SNF_CASES} Smith forms, {SUBQUOTIENT_CASES} subquotients"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("S1 x S3 index table", s1s3_table),
        ("surgery example end to end", kirby_end_to_end),
        ("antipodal 4-sphere", antipodal_sphere),
        ("projective space pattern", projective_pattern),
        ("RP4 # RP4 orbit space", connected_sum_orbit),
        ("spectral sequence consistency", spectral_sequence_consistency),
        ("Bockstein exactness suite", bockstein_suite),
        ("exact algebra oracles", exact_algebra_oracles),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
