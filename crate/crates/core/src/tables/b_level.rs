//! H¹ of B_s (classical) and B_{r/2} (half-Frobenius) kernels.

use crate::error::Result;
use crate::isogeny::TauMap;
use crate::lattice::SystemId;
use crate::module_expr::{params, CohomologyAnswer, ModuleExpr, Summand};
use crate::weight::Weight;

use super::{b_tau, lookup, pw, require_odd, require_restricted, shape, tau_form, Row};

/// Rows of the classical H¹(B_s, λ') table, twisted by F^s.
pub fn b_s_classical_rows(id: SystemId, s: u32) -> Vec<Row> {
    assert!(s >= 1);
    let d = id.data();
    let sh = shape(id);
    let p = id.p();
    let tw = 2 * s;
    let mut rows = Vec::new();
    for &j in &sh.k_roots {
        rows.push(Row {
            weight: pw(p, s) * d.omega(j) - pw(p, s - 1) * d.simple_root(j),
            expr: ModuleExpr::single(Summand::line(d.omega(j), tw)),
            label: "p^s w - p^(s-1) alpha".into(),
            params: params([("omega", d.omega(j).to_string()), ("alpha", format!("alpha{j}"))]),
        });
    }
    rows.push(Row {
        weight: pw(p, s) * sh.m_omega - pw(p, s - 1) * d.simple_root(sh.m_root),
        expr: ModuleExpr::single(Summand::indecomposable(sh.m_tag, d.zero(), tw)),
        label: "p^s w - p^(s-1) alpha (indecomposable)".into(),
        params: params([("omega", sh.m_omega.to_string()), ("alpha", format!("alpha{}", sh.m_root))]),
    });
    for i in 0..s.saturating_sub(1) {
        for j in 1..=d.rank {
            rows.push(Row {
                weight: pw(p, s) * d.omega(j) - pw(p, i) * d.simple_root(j),
                expr: ModuleExpr::single(Summand::line(d.omega(j), tw)),
                label: "p^s w - p^i alpha".into(),
                params: params([
                    ("omega", d.omega(j).to_string()),
                    ("alpha", format!("alpha{j}")),
                    ("i", i.to_string()),
                ]),
            });
        }
    }
    rows
}

pub fn h1_b_s_classical(id: SystemId, lambda: Weight, s: u32) -> Result<CohomologyAnswer> {
    require_restricted(id, lambda, 2 * s)?;
    Ok(lookup(&b_s_classical_rows(id, s), lambda))
}

/// Rows of the H¹(B_{r/2}, λ) table for r = 2s+1 ≥ 3, generated from the τ-forms.
pub fn b_r2_rows(id: SystemId, r: u32) -> Result<Vec<Row>> {
    let s = require_odd(r)?;
    if s == 0 {
        return Err(crate::error::Error::InvalidParameter("r must be at least 3".into()));
    }
    let d = id.data();
    let sh = shape(id);
    let line = |j: usize| ModuleExpr::single(Summand::line(d.omega(j), r));
    let mut rows = Vec::new();
    for &(b, j) in &sh.beta_rows {
        rows.push(Row {
            weight: TauMap::new(id).pow(d.omega(j), r) - d.beta(b),
            expr: line(j),
            label: "tau^r w - beta".into(),
            params: params([("omega", d.omega(j).to_string()), ("beta", format!("beta{b}"))]),
        });
    }
    for &j in &sh.k_roots {
        rows.push(Row {
            weight: tau_form(id, r, d.omega(j), 2 * s - 1, d.simple_root(j)),
            expr: line(j),
            label: "tau^r w - tau^(2s-1) alpha".into(),
            params: params([("omega", d.omega(j).to_string()), ("alpha", format!("alpha{j}"))]),
        });
    }
    rows.push(Row {
        weight: tau_form(id, r, sh.m_omega, 2 * s - 1, d.simple_root(sh.m_root)),
        expr: ModuleExpr::single(Summand::indecomposable(sh.m_tag, d.zero(), r)),
        label: "tau^r w - tau^(2s-1) alpha (indecomposable)".into(),
        params: params([("omega", sh.m_omega.to_string()), ("alpha", format!("alpha{}", sh.m_root))]),
    });
    for i in 0..s.saturating_sub(1) {
        for j in 1..=d.rank {
            rows.push(Row {
                weight: tau_form(id, r, d.omega(j), 2 * i + 1, d.simple_root(j)),
                expr: line(j),
                label: "tau^r w - tau^(2i+1) alpha".into(),
                params: params([
                    ("omega", d.omega(j).to_string()),
                    ("alpha", format!("alpha{j}")),
                    ("i", i.to_string()),
                ]),
            });
        }
    }
    Ok(rows)
}

/// H¹(B_{r/2}, λ) for λ ∈ X_{r/2}; r = 1 is the B_τ table.
pub fn h1_b_r2(id: SystemId, lambda: Weight, r: u32) -> Result<CohomologyAnswer> {
    require_odd(r)?;
    if r == 1 {
        return b_tau::h1_b_tau_table(id, lambda);
    }
    require_restricted(id, lambda, r)?;
    Ok(lookup(&b_r2_rows(id, r)?, lambda))
}

/// Every τ-form `τ^r ω − τ^j ζ` that `λ` satisfies, with the answer each one gives.
pub fn b_r2_form_matches(id: SystemId, lambda: Weight, r: u32) -> Result<Vec<CohomologyAnswer>> {
    let s = require_odd(r)?;
    lambda.check_rank(id.rank())?;
    let d = id.data();
    let sh = shape(id);
    let t = TauMap::new(id);
    let solve = |j: u32, zeta: Weight| t.preimage(lambda + t.pow(zeta, j), r);
    let line = |w: Weight| ModuleExpr::single(Summand::line(w, r));
    let mut out = Vec::new();
    for &(b, _) in &sh.beta_rows {
        if let Some(w) = t.preimage(lambda + d.beta(b), r) {
            out.push(CohomologyAnswer::new(
                "tau^r w - beta",
                line(w),
                params([("omega", w.to_string()), ("beta", format!("beta{b}"))]),
            ));
        }
    }
    if s == 0 {
        return Ok(out);
    }
    for &j in &sh.k_roots {
        if let Some(w) = solve(2 * s - 1, d.simple_root(j)) {
            out.push(CohomologyAnswer::new(
                "tau^r w - tau^(2s-1) alpha",
                line(w),
                params([("omega", w.to_string()), ("alpha", format!("alpha{j}"))]),
            ));
        }
    }
    if let Some(w) = solve(2 * s - 1, d.simple_root(sh.m_root)) {
        out.push(CohomologyAnswer::new(
            "tau^r w - tau^(2s-1) alpha (indecomposable)",
            ModuleExpr::single(Summand::indecomposable(sh.m_tag, w - sh.m_omega, r)),
            params([("omega", w.to_string()), ("alpha", format!("alpha{}", sh.m_root))]),
        ));
    }
    for i in 0..s.saturating_sub(1) {
        for j in 1..=d.rank {
            if let Some(w) = solve(2 * i + 1, d.simple_root(j)) {
                out.push(CohomologyAnswer::new(
                    "tau^r w - tau^(2i+1) alpha",
                    line(w),
                    params([("omega", w.to_string()), ("alpha", format!("alpha{j}")), ("i", i.to_string())]),
                ));
            }
        }
    }
    Ok(out)
}

/// H¹(B_{r/2}, λ) for arbitrary λ, by solving the τ-forms for ω.
pub fn h1_b_r2_general(id: SystemId, lambda: Weight, r: u32) -> Result<CohomologyAnswer> {
    require_odd(r)?;
    if r == 1 {
        return b_tau::h1_b_tau_general(id, lambda);
    }
    Ok(b_r2_form_matches(id, lambda, r)?.into_iter().next().unwrap_or_else(CohomologyAnswer::zero))
}
