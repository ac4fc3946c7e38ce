//! G-level tables: induced coefficients over G_{r/2}, simple coefficients over G_s and G_{r/2}.

use crate::error::Result;
use crate::lattice::SystemId;
use crate::module_expr::{params, CohomologyAnswer, ModuleExpr, Summand, SummandKind};
use crate::weight::Weight;

use super::{b_level, lookup, pw, require_odd, require_restricted, shape, Row};

/// Ind_B^G of one summand of a B-answer, untwisted. Lines induce H⁰ (zero if not
/// dominant); an indecomposable induces its filtration factors.
pub fn induce_summand(id: SystemId, s: Summand) -> Vec<Summand> {
    let d = id.data();
    let keep = |w: Weight| w.is_dominant().then(|| Summand::costandard(w));
    match s.kind {
        SummandKind::Line => keep(s.weight).into_iter().collect(),
        SummandKind::Indecomposable => {
            let sh = shape(id);
            let omega = s.weight + sh.m_omega;
            let factors: Vec<Option<Summand>> = match id {
                SystemId::C2 | SystemId::G2 => vec![
                    keep(omega + 2 * d.omega(1) - d.omega(2)),
                    (omega.get(0) >= 0).then(|| keep(omega)).flatten(),
                ],
                SystemId::F4 => vec![
                    keep(omega + d.omega(3) + d.omega(4) - d.omega(2)),
                    (omega.get(3) >= 1).then(|| keep(omega + 2 * d.omega(3) - d.omega(4) - d.omega(2))).flatten(),
                    (omega.get(2) >= 0).then(|| keep(omega)).flatten(),
                ],
            };
            factors.into_iter().flatten().collect()
        }
        _ => vec![s],
    }
}

pub fn induce(id: SystemId, e: &ModuleExpr) -> ModuleExpr {
    ModuleExpr::from_summands(e.summands().iter().flat_map(|&s| induce_summand(id, s)).collect())
}

/// Closed-form rows of H¹(G_{r/2}, H⁰(λ))^{(−r/2)}.
pub fn g_r2_h0_rows(id: SystemId, r: u32) -> Result<Vec<Row>> {
    let s = require_odd(r)?;
    let sh = shape(id);
    let h0 = |w: Weight| ModuleExpr::single(Summand::costandard(w));
    if s == 0 {
        let d = id.data();
        let rows: Vec<(Weight, Weight)> = match id {
            SystemId::C2 => vec![(d.zero(), d.omega(1))],
            SystemId::G2 => vec![(d.omega(1), d.omega(1))],
            SystemId::F4 => vec![(d.omega(4), d.omega(4)), (d.omega(3), d.omega(1))],
        };
        return Ok(rows
            .into_iter()
            .map(|(w, a)| Row { weight: w, expr: h0(a), label: "G_tau table".into(), params: params([("lambda", w)]) })
            .collect());
    }
    Ok(b_level::b_r2_rows(id, r)?
        .into_iter()
        .map(|row| {
            let expr = match row.expr.summands()[0].kind {
                SummandKind::Indecomposable => h0(sh.m_induced),
                _ => row.expr.untwist(r).expect("rows carry twist r").map(|x| Summand::costandard(x.weight)),
            };
            Row { expr, ..row }
        })
        .collect())
}

pub fn h1_g_r2_h0(id: SystemId, lambda: Weight, r: u32) -> Result<CohomologyAnswer> {
    require_odd(r)?;
    require_restricted(id, lambda, r)?;
    Ok(lookup(&g_r2_h0_rows(id, r)?, lambda))
}

/// Any dominant λ: induce the general B_{r/2} answer. M-rows give filtration factors.
pub fn h1_g_r2_h0_general(id: SystemId, lambda: Weight, r: u32) -> Result<CohomologyAnswer> {
    let b = b_level::h1_b_r2_general(id, lambda, r)?;
    let untwisted = b.expr.untwist(r)?;
    let mut p = b.matched_params.clone();
    if untwisted.summands().iter().any(|s| s.kind == SummandKind::Indecomposable) {
        p.insert("filtration".into(), "true".into());
    }
    Ok(CohomologyAnswer::new(b.case_fired.clone(), induce(id, &untwisted), p))
}

fn k_row(id: SystemId, w: Weight, label: &str, extra: &[(&str, String)]) -> Row {
    let mut p = params(extra.iter().map(|(k, v)| (*k, v.clone())));
    p.insert("lambda".into(), w.to_string());
    Row { weight: w, expr: ModuleExpr::single(Summand::trivial(id.rank())), label: label.into(), params: p }
}

fn simple_row(id: SystemId, w: Weight, with_k: bool, simple: Weight, label: &str) -> Row {
    let mut v = vec![Summand::simple(simple)];
    if with_k {
        v.push(Summand::trivial(id.rank()));
    }
    Row { weight: w, expr: ModuleExpr::from_summands(v), label: label.into(), params: params([("lambda", w)]) }
}

/// The G₁ table used when computing the G_s answers.
pub fn g1_base_rows(id: SystemId) -> Vec<Row> {
    let d = id.data();
    let o = |i| d.omega(i);
    let l = "G_1 table";
    match id {
        SystemId::C2 => vec![simple_row(id, d.zero(), false, o(1), l), k_row(id, o(2), l, &[])],
        SystemId::G2 => vec![simple_row(id, o(2), false, o(1), l), k_row(id, o(1) + o(2), l, &[])],
        SystemId::F4 => vec![
            simple_row(id, o(1), false, o(4), l),
            simple_row(id, o(2), true, o(1), l),
            k_row(id, o(1) + o(4), l, &[]),
            simple_row(id, o(2) + o(3), true, o(4), l),
        ],
    }
}

/// The G_τ table used when computing the G_{r/2} answers.
pub fn g_tau_base_rows(id: SystemId) -> Vec<Row> {
    let d = id.data();
    let l = "G_tau table";
    match id {
        SystemId::C2 => vec![simple_row(id, d.zero(), false, d.omega(1), l)],
        SystemId::G2 => vec![simple_row(id, d.omega(1), false, d.omega(1), l)],
        SystemId::F4 => vec![
            simple_row(id, d.omega(4), false, d.omega(4), l),
            simple_row(id, d.omega(3), true, d.omega(1), l),
        ],
    }
}

/// Rows of H¹(G_s, L(λ))^{(−s)}.
pub fn g_s_l_rows(id: SystemId, s: u32) -> Vec<Row> {
    assert!(s >= 1);
    let d = id.data();
    let o = |i| d.omega(i);
    let p = id.p();
    let top = pw(p, s - 1);
    let mut rows = Vec::new();
    match id {
        SystemId::C2 => {
            rows.push(simple_row(id, d.zero(), false, o(1), "L(w1) at 0"));
            rows.push(k_row(id, o(2), "k at w2", &[]));
            for i in 1..s {
                for j in 1..=2 {
                    rows.push(k_row(id, pw(p, i) * o(j), "k at 2^i w", &[("i", i.to_string())]));
                }
            }
        }
        SystemId::G2 => {
            rows.push(simple_row(id, top * o(2), false, o(1), "L(w1) at 3^(s-1) w2"));
            for i in 0..s {
                rows.push(k_row(id, pw(p, i) * (o(1) + o(2)), "k at 3^i (w1+w2)", &[("i", i.to_string())]));
            }
            for j in 0..s.saturating_sub(1) {
                rows.push(k_row(id, pw(p, j) * (o(2) + 3 * o(1)), "k at 3^j (w2+3w1)", &[("j", j.to_string())]));
            }
        }
        SystemId::F4 => {
            rows.push(simple_row(id, top * o(1), false, o(4), "top: L(w4)"));
            rows.push(simple_row(id, top * o(2), true, o(1), "top: k + L(w1)"));
            rows.push(k_row(id, top * (o(1) + o(4)), "top: k", &[]));
            rows.push(simple_row(id, top * (o(2) + o(3)), true, o(4), "top: k + L(w4)"));
            for i in 0..s.saturating_sub(1) {
                for w in f4_k_weights() {
                    rows.push(k_row(id, pw(p, i) * d.w(&w), "k at 2^i x", &[("i", i.to_string())]));
                }
                rows.push(k_row(id, pw(p, i) * (o(2) + 2 * o(1)), "k at 2^i (w2+2w1)", &[("i", i.to_string())]));
            }
        }
    }
    rows
}

/// ω1+2ω4, ω2, ω1+ω4, ω2+ω3, ω2+ω3+2ω4.
fn f4_k_weights() -> [[i64; 4]; 5] {
    [[1, 0, 0, 2], [0, 1, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 1, 2]]
}

pub fn h1_g_s_l(id: SystemId, lambda: Weight, s: u32) -> Result<CohomologyAnswer> {
    if s == 0 {
        return Err(crate::error::Error::InvalidParameter("s must be at least 1".into()));
    }
    require_restricted(id, lambda, 2 * s)?;
    Ok(lookup(&g_s_l_rows(id, s), lambda))
}

/// Rows of H¹(G_{r/2}, L(λ))^{(−r/2)}; r = 1 is the G_τ table.
pub fn g_r2_l_rows(id: SystemId, r: u32) -> Result<Vec<Row>> {
    let s = require_odd(r)?;
    if s == 0 {
        return Ok(g_tau_base_rows(id));
    }
    let d = id.data();
    let o = |i| d.omega(i);
    let p = id.p();
    let ps = pw(p, s);
    let mut rows = Vec::new();
    match id {
        SystemId::C2 => {
            rows.push(simple_row(id, d.zero(), false, o(1), "L(w1) at 0"));
            rows.push(k_row(id, ps * o(1), "k at 2^s w1", &[]));
            rows.push(k_row(id, o(2), "k at w2", &[]));
            for i in 1..s {
                for j in 1..=2 {
                    rows.push(k_row(id, pw(p, i) * o(j), "k at 2^i w", &[("i", i.to_string())]));
                }
            }
        }
        SystemId::G2 => {
            rows.push(simple_row(id, ps * o(1), false, o(1), "L(w1) at 3^s w1"));
            for i in 0..s {
                rows.push(k_row(id, pw(p, i) * (o(1) + o(2)), "k at 3^i (w1+w2)", &[("i", i.to_string())]));
                rows.push(k_row(id, pw(p, i) * (o(2) + 3 * o(1)), "k at 3^i (w2+3w1)", &[("i", i.to_string())]));
            }
        }
        SystemId::F4 => {
            rows.push(simple_row(id, ps * o(4), false, o(4), "top: L(w4)"));
            rows.push(simple_row(id, ps * o(3), true, o(1), "top: k + L(w1)"));
            for i in 0..s {
                for w in f4_k_weights() {
                    rows.push(k_row(id, pw(p, i) * d.w(&w), "k at 2^i x", &[("i", i.to_string())]));
                }
            }
            for j in 0..s.saturating_sub(1) {
                rows.push(k_row(id, pw(p, j) * (o(2) + 2 * o(1)), "k at 2^j (w2+2w1)", &[("j", j.to_string())]));
            }
        }
    }
    Ok(rows)
}

pub fn h1_g_r2_l(id: SystemId, lambda: Weight, r: u32) -> Result<CohomologyAnswer> {
    require_odd(r)?;
    require_restricted(id, lambda, r)?;
    Ok(lookup(&g_r2_l_rows(id, r)?, lambda))
}
