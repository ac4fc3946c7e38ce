//! Table-level cross-checks against independent oracles.

use crate::error::{Error, Result};
use crate::isogeny::{restricted_weights, x_tau, TauMap};
use crate::lattice::SystemId;
use crate::module_expr::params;
use crate::tables::{self, b_level, g_level, H2Verdict};
use crate::weight::Weight;

use super::{fold_parallel, AuditReport};

/// The B_τ criterion against the stated tables, all systems.
pub fn audit_btau_oracle() -> AuditReport {
    let mut rep = AuditReport::new("btau-oracle", Default::default());
    for id in SystemId::ALL {
        for l in x_tau(id) {
            rep.bump(format!("{id} weights"));
            let table = tables::h1_b_tau_table(id, l).expect("in X_tau");
            let oracle = tables::h1_b_tau_criterion(id, l).expect("in X_tau");
            if table.expr != oracle.expr {
                rep.fail(l, format!("{id}: {}", table.expr), &oracle.expr);
            }
            if !table.is_zero() {
                rep.bump(format!("{id} nonzero"));
            }
        }
    }
    rep.finish()
}

/// The general matcher agrees with the restricted table on X_{r/2}.
pub fn audit_restriction_consistency(id: SystemId, r: u32) -> Result<AuditReport> {
    let mut rep = AuditReport::new("restriction", params([("group", id.to_string()), ("r", r.to_string())]));
    let weights = restricted_weights(id, r);
    fold_parallel(&mut rep, &weights, |&l| {
        let mut part = AuditReport::default();
        part.bump("weights");
        let a = tables::h1_b_r2(id, l, r).expect("restricted");
        match tables::h1_b_r2_general(id, l, r) {
            Ok(b) if a == b => {}
            Ok(b) => part.fail(l, &a, &b),
            Err(e) => part.fail(l, &a, e),
        }
        part
    });
    Ok(rep.finish())
}

/// The τ-form criterion: `λ + ζ ∈ τ^r X` for some `ζ ∈ Π_s ∪ {τ^i α : α ∈ Π, 0 ≤ i ≤ 2s−1}`.
fn weightform_hits(id: SystemId, l: Weight, r: u32) -> Vec<String> {
    let d = id.data();
    let t = TauMap::new(id);
    let s = (r - 1) / 2;
    let mut hits = Vec::new();
    for (k, b) in d.betas().into_iter().enumerate() {
        if t.in_image(l + b, r) {
            hits.push(format!("beta{}", k + 1));
        }
    }
    for i in 0..2 * s {
        for j in 1..=d.rank {
            if t.in_image(l + t.pow(d.simple_root(j), i), r) {
                hits.push(format!("tau^{i} alpha{j}"));
            }
        }
    }
    hits
}

/// Nonvanishing of the general B_{r/2} answer against the τ-form criterion on a box.
pub fn audit_weightform(id: SystemId, r: u32, box_max: Option<i64>) -> Result<AuditReport> {
    let s = tables::require_odd(r)?;
    if s == 0 {
        return Err(Error::InvalidParameter("audit needs r >= 3".into()));
    }
    let bound = box_max.unwrap_or_else(|| id.p().pow(s + 1));
    if bound < 0 {
        return Err(Error::InvalidParameter("box must be non-negative".into()));
    }
    let mut rep = AuditReport::new(
        "weightform",
        params([("group", id.to_string()), ("r", r.to_string()), ("box", bound.to_string())]),
    );
    let n = id.rank();
    let weights: Vec<Weight> = (0..(bound + 1).pow(n as u32))
        .map(|mut k| {
            let mut c = vec![0; n];
            for x in c.iter_mut().rev() {
                *x = k % (bound + 1);
                k /= bound + 1;
            }
            Weight::new(&c)
        })
        .collect();
    fold_parallel(&mut rep, &weights, |&l| {
        let mut part = AuditReport::default();
        part.bump("weights");
        let hits = weightform_hits(id, l, r);
        let matches = b_level::b_r2_form_matches(id, l, r).expect("valid r");
        let general = tables::h1_b_r2_general(id, l, r).expect("valid r");
        if hits.is_empty() != general.is_zero() {
            part.fail(l, format!("forms {hits:?}"), &general);
        }
        if matches.iter().any(|m| m.expr != general.expr) {
            let all: Vec<String> = matches.iter().map(|m| m.to_string()).collect();
            part.fail(l, "a single answer", all.join(" | "));
        }
        if !general.is_zero() {
            part.bump("nonzero");
        }
        part
    });
    Ok(rep.finish())
}

/// Odd ω1-coefficient forces the H² classifier to report vanishing.
pub fn audit_h2_parity(s_max: u32) -> AuditReport {
    let mut rep = AuditReport::new("h2-parity", params([("s_max", s_max)]));
    let d = SystemId::C2.data();
    for s in 1..=s_max {
        for l in restricted_weights(SystemId::C2, 2 * s) {
            let v = tables::h2_b_s_c2_classify(l, s).expect("restricted");
            let kind = match &v {
                H2Verdict::Zero => "zero",
                H2Verdict::PossiblyNonzero(_) => "possibly nonzero",
                H2Verdict::Recursive(_) => "recursive",
            };
            rep.bump(format!("s={s} {kind}"));
            let odd = l.get(0) % 2 != 0;
            if odd && (!v.is_zero() || d.in_root_lattice(l)) {
                rep.fail(l, "zero, outside root lattice", &v);
            }
        }
    }
    rep.finish()
}

/// Induction of the B_{r/2} table reproduces the induced G_{r/2} table.
pub fn audit_induced(id: SystemId, r: u32) -> Result<AuditReport> {
    tables::require_odd(r)?;
    let mut rep = AuditReport::new("induced", params([("group", id.to_string()), ("r", r.to_string())]));
    let weights = restricted_weights(id, r);
    fold_parallel(&mut rep, &weights, |&l| {
        let mut part = AuditReport::default();
        part.bump("weights");
        let g = tables::h1_g_r2_h0(id, l, r).expect("restricted");
        let b = tables::h1_b_r2(id, l, r).expect("restricted");
        let induced = g_level::induce(id, &b.expr.untwist(r).expect("twist r"));
        if induced != g.expr {
            part.fail(l, &g.expr, &induced);
        }
        let general = tables::h1_g_r2_h0_general(id, l, r).expect("dominant");
        if general.expr != g.expr {
            part.fail(l, &g.expr, format!("general: {}", general.expr));
        }
        part
    });
    Ok(rep.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_and_parity() {
        assert!(audit_btau_oracle().passed);
        assert!(audit_h2_parity(3).passed);
    }
}
