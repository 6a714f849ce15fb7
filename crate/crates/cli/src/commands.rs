use serde_json::{json, Value};

use z2index::borel::{borel_filtered_complex, ss_page};
use z2index::catalog;
use z2index::complexes::{Coeff, Cochain};
use z2index::decider::{d3_parity_from_borel, decide, DecideConfig};
use z2index::exactalg::big_json_vec;
use z2index::obstructions::{connecting_cochain, primary_obstruction, x_powers, CoefficientSes, D3Membership};
use z2index::{AbelianGroup, EquivariantComplex, IndexStatus};

use crate::report::{InputInfo, Report};
use crate::InputError;

fn compute<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, InputError> {
    r.map_err(|e| InputError::new("unsupported_input", e))
}

fn group_json(g: &AbelianGroup) -> Value {
    json!({ "group": g.describe(), "free_rank": g.free_rank(), "torsion": big_json_vec(g.torsion()) })
}

fn class_json(c: &EquivariantComplex, z: &Cochain) -> Result<Value, InputError> {
    let (g, class) = compute(c.class_of(z))?;
    Ok(json!({
        "group": g.describe(),
        "class": big_json_vec(&class),
        "zero": g.is_zero_element(&class),
    }))
}

pub fn validate(c: &EquivariantComplex, info: InputInfo) -> Report {
    let v = c.validate();
    let payload = json!({
        "mode": if c.delta().is_some() { "delta" } else { "lambda" },
        "ranks": c.ranks(),
        "valid": v.is_valid(),
        "violations": v.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    Report::new("validate", Some(info), payload)
}

pub fn cohomology(
    c: &EquivariantComplex,
    info: InputInfo,
    coeff: Coeff,
    degree: Option<usize>,
) -> Result<Report, InputError> {
    let degrees: Vec<usize> = match degree {
        Some(q) if q > c.top_degree() => {
            return Err(InputError::new("invalid_argument", format!("degree {q} exceeds dimension {}", c.top_degree())))
        }
        Some(q) => vec![q],
        None => (0..=c.top_degree()).collect(),
    };
    let mut groups = Vec::new();
    for q in degrees {
        let mut g = group_json(&compute(c.cohomology(coeff, q))?);
        g["degree"] = json!(q);
        groups.push(g);
    }
    let space = if coeff == Coeff::Lambda { "cover" } else { "orbit space" };
    Ok(Report::new(
        "cohomology",
        Some(info),
        json!({ "coeff": coeff.name(), "space": space, "cohomology": groups }),
    ))
}

pub fn obstructions(c: &EquivariantComplex, info: InputInfo, trunc: usize) -> Result<Report, InputError> {
    let powers = compute(x_powers(c))?;
    let beta = compute(connecting_cochain(c, CoefficientSes::IntegralMod2, &powers.x))?;
    let primary = compute(primary_obstruction(c))?;
    let power_rows: Vec<Value> = powers
        .powers
        .iter()
        .map(|p| json!({ "k": p.k, "nonzero": p.nonzero, "source": p.source }))
        .collect();
    let d3 = if compute(c.cover_h1_vanishes())? {
        let m = compute(D3Membership::new(c))?;
        let (borel, surjective) = compute(d3_parity_from_borel(c, trunc))?;
        json!({
            "antisymmetric_basis": m.basis.iter().map(|b| big_json_vec(b)).collect::<Vec<_>>(),
            "membership_parity": compute(m.functional())?,
            "borel_parity": borel,
            "surjective": surjective,
        })
    } else {
        json!({ "skipped": "H_1(X, Z) is nonzero" })
    };
    let payload = json!({
        "x": { "values": big_json_vec(&powers.x.values), "class": class_json(c, &powers.x)? },
        "beta_x": class_json(c, &beta)?,
        "x_powers": power_rows,
        "primary": {
            "x_square_source": primary.x_square_source,
            "group": primary.group.describe(),
            "class": big_json_vec(&primary.class),
            "vanishes": primary.vanishes,
        },
        "d3": d3,
    });
    let mut report = Report::new("obstructions", Some(info), payload);
    let aux: Vec<String> = powers
        .powers
        .iter()
        .filter(|p| p.source.is_trusted_aux())
        .map(|p| format!("x^{}", p.k))
        .collect();
    if !aux.is_empty() {
        report.warn(
            "unverified_aux_data",
            format!("{} taken from aux data that is not verified against the complex", aux.join(", ")),
        );
    }
    if primary.x_square_source.is_trusted_aux() {
        report.warn("unverified_aux_data", "x^2 for the primary obstruction comes from aux data");
    }
    Ok(report)
}

pub fn spectral_sequence(
    c: &EquivariantComplex,
    info: InputInfo,
    coeff: Coeff,
    r: usize,
    trunc: usize,
) -> Result<Report, InputError> {
    let invalid = |e: z2index::borel::BorelError| InputError::new("invalid_argument", e);
    let f = borel_filtered_complex(c, trunc, coeff).map_err(invalid)?;
    let page = ss_page(&f, r).map_err(invalid)?;
    let rows: Vec<Value> = (0..=c.top_degree())
        .map(|q| {
            let groups: Vec<String> = (0..=page.max_p())
                .map(|p| page.group(p, q).map_or("?".to_string(), |g| g.describe()))
                .collect();
            json!({ "q": q, "groups": groups })
        })
        .collect();
    let differentials: Vec<Value> = page
        .differentials
        .iter()
        .filter(|(_, d)| !d.matrix.is_zero() && !d.domain.is_trivial() && !d.codomain.is_trivial())
        .map(|(&(p, q), d)| {
            json!({
                "from": [p, q],
                "to": [p + r, q + 1 - r],
                "domain": d.domain.describe(),
                "codomain": d.codomain.describe(),
                "matrix": d.matrix,
            })
        })
        .collect();
    let payload = json!({
        "coeff": coeff.name(),
        "page": r,
        "truncation": trunc,
        "rows": rows,
        "nonzero_differentials": differentials,
    });
    let mut report = Report::new("ss", Some(info), payload);
    report.warn(
        "truncation_window",
        format!("groups are those of the truncation m = {trunc}; columns p = 0..={} satisfy p + r <= m", page.max_p()),
    );
    Ok(report)
}

pub fn index(c: &EquivariantComplex, info: InputInfo, radius: u32, trunc: usize) -> Result<(Report, u8), InputError> {
    let config = DecideConfig {
        radius,
        truncation: trunc,
        ..DecideConfig::default()
    };
    let v = compute(decide(c, &config))?;
    let (lo, hi) = v.status.bounds();
    let payload = json!({
        "verdict": v.status.to_string(),
        "exact": v.status.is_exact(),
        "lower": lo,
        "upper": hi,
        "certificates": v.certificates,
        "assumptions": v.assumptions,
        "search_radius": radius,
        "truncation": trunc,
    });
    let mut report = Report::new("index", Some(info), payload);
    for w in &v.warnings {
        let kind = serde_json::to_value(w.kind).expect("serializable");
        report.warn(kind.as_str().unwrap_or("warning"), w.message.clone());
    }
    let code = match v.status {
        IndexStatus::Exact(_) => 0,
        IndexStatus::Range(..) => 1,
    };
    Ok((report, code))
}

pub fn catalog_list() -> Report {
    let entries: Vec<Value> = catalog::list()
        .into_iter()
        .map(|name| {
            let e = catalog::get(name).expect("listed entries exist");
            json!({ "name": name, "expected_index": e.expected.index, "cells": e.complex.ranks() })
        })
        .collect();
    Report::new("catalog list", None, json!({ "entries": entries }))
}
