//! First cohomology of B_τ with coefficients in a line.

use crate::chevalley::h1_u_tau;
use crate::error::Result;
use crate::isogeny::{peel_digit, TauMap};
use crate::lattice::SystemId;
use crate::module_expr::{params, CohomologyAnswer, ModuleExpr, Summand};
use crate::weight::Weight;

use super::require_restricted;

/// The stated table for λ0 ∈ X_τ.
pub fn h1_b_tau_table(id: SystemId, lambda0: Weight) -> Result<CohomologyAnswer> {
    require_restricted(id, lambda0, 1)?;
    let d = id.data();
    let (w1, w2) = (d.omega(1), d.omega(2));
    let lines: Vec<Weight> = match id {
        SystemId::C2 if lambda0.is_zero() => vec![w2 - w1, w1],
        SystemId::G2 if lambda0 == w1 => vec![w2 - w1, w1],
        SystemId::F4 if lambda0 == d.omega(4) => {
            vec![d.omega(4), d.omega(2) - d.omega(3), d.omega(3) - d.omega(4)]
        }
        SystemId::F4 if lambda0 == d.omega(3) => vec![d.omega(1)],
        _ => vec![],
    };
    let expr = ModuleExpr::from_summands(lines.into_iter().map(|w| Summand::line(w, 1)).collect());
    Ok(CohomologyAnswer::new("B_tau table", expr, params([("lambda0", lambda0)])))
}

/// Invariants of the torus kernel on `⊕ k_{β+λ0}`: β+λ0 must lie in τX(T).
pub fn h1_b_tau_criterion(id: SystemId, lambda0: Weight) -> Result<CohomologyAnswer> {
    require_restricted(id, lambda0, 1)?;
    let t = TauMap::new(id);
    let d = id.data();
    let mut summands = Vec::new();
    let mut hits = Vec::new();
    for (k, beta) in d.betas().into_iter().enumerate() {
        debug_assert!(h1_u_tau(id).contains(&beta));
        if let Some(pre) = t.preimage(beta + lambda0, 1) {
            summands.push(Summand::line(pre, 1));
            hits.push(format!("beta{}", k + 1));
        }
    }
    Ok(CohomologyAnswer::new(
        "B_tau criterion",
        ModuleExpr::from_summands(summands),
        params([("lambda0", lambda0.to_string()), ("betas", hits.join(","))]),
    ))
}

/// Any λ: write λ = λ0 + τλ1 and shift the table answer for λ0 by λ1.
pub fn h1_b_tau_general(id: SystemId, lambda: Weight) -> Result<CohomologyAnswer> {
    lambda.check_rank(id.rank())?;
    let (lambda0, lambda1) = peel_digit(id, lambda);
    let base = h1_b_tau_table(id, lambda0)?;
    let mut p = base.matched_params.clone();
    p.insert("lambda1".into(), lambda1.to_string());
    Ok(CohomologyAnswer::new("B_tau table (shifted)", base.expr.shift(lambda1), p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isogeny::x_tau;

    #[test]
    fn oracle_matches_table() {
        for id in SystemId::ALL {
            for l in x_tau(id) {
                assert_eq!(h1_b_tau_table(id, l).unwrap().expr, h1_b_tau_criterion(id, l).unwrap().expr, "{id} {l}");
            }
        }
    }

    #[test]
    fn examples() {
        let c2 = SystemId::C2.data();
        let e = h1_b_tau_general(SystemId::C2, c2.omega(2)).unwrap().expr;
        assert_eq!(
            e,
            ModuleExpr::from_summands(vec![Summand::line(c2.omega(2), 1), Summand::line(2 * c2.omega(1), 1)])
        );
        let f4 = SystemId::F4.data();
        let a = h1_b_tau_criterion(SystemId::F4, f4.omega(4)).unwrap();
        assert_eq!(a.expr.summands().len(), 3);
        assert_eq!(a.matched_params["betas"], "beta1,beta3,beta4");
        assert!(h1_b_tau_criterion(SystemId::F4, f4.omega(3) + f4.omega(4)).unwrap().is_zero());
        assert!(h1_b_tau_table(SystemId::G2, SystemId::G2.data().w(&[2, 0])).unwrap().is_zero());
        assert!(h1_b_tau_table(SystemId::C2, c2.omega(2)).is_err());
    }
}
