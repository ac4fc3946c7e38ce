//! Exact weight-bound audits for the Ree groups of type F4.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::audit::AuditReport;
use crate::error::{Error, Result};
use crate::isogeny::TauMap;
use crate::lattice::SystemId;
use crate::module_expr::{params, SummandKind};
use crate::tables::g_level::g_r2_l_rows;
use crate::weight::Weight;

const F4: SystemId = SystemId::F4;
/// Truncation bound defining Γ.
pub const GAMMA_BOUND: i64 = 17;

fn ser_ratio<S: Serializer>(r: &Ratio<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalBound {
    #[serde(serialize_with = "ser_ratio")]
    pub value: Ratio<i64>,
    pub context: String,
}

fn pair(w: Weight) -> i64 {
    F4.data().pair_alpha0(w)
}

/// `{ν dominant : ⟨ν, α0^∨⟩ < 17}`.
pub fn gamma_set() -> Vec<Weight> {
    F4.data().enumerate_dominant(GAMMA_BOUND)
}

/// Γ by scanning the box `0 ≤ a,b,c,d ≤ 8` with `2a+4b+3c+2d ≤ 16`.
pub fn gamma_box_oracle() -> Vec<Weight> {
    let mut out = Vec::new();
    for a in 0..=8 {
        for b in 0..=8 {
            for c in 0..=8 {
                for d in 0..=8 {
                    if 2 * a + 4 * b + 3 * c + 2 * d <= 16 {
                        out.push(Weight::new(&[a, b, c, d]));
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// `⟨τν, α0^∨⟩ − ⟨ν, α0^∨⟩ = 2a + 2b + c`.
pub fn tau_pairing_identity(nu: Weight) -> Result<AuditReport> {
    nu.check_rank(4)?;
    if !nu.is_dominant() {
        return Err(Error::InvalidParameter(format!("{nu} is not dominant")));
    }
    let mut rep = AuditReport::new("identity", params([("nu", nu)]));
    let lhs = pair(TauMap::new(F4).apply(nu)) - pair(nu);
    let rhs = 2 * nu.get(0) + 2 * nu.get(1) + nu.get(2);
    rep.bump("checked");
    if lhs != rhs {
        rep.fail(nu, rhs, lhs);
    }
    Ok(rep.finish())
}

/// `(⟨τ(ω3+ω4), α0^∨⟩, ⟨ω3+ω4, α0^∨⟩)`, computed from the root data.
pub fn steinberg_constants() -> (i64, i64) {
    let d = F4.data();
    let w34 = d.omega(3) + d.omega(4);
    (pair(TauMap::new(F4).apply(w34)), pair(w34))
}

/// `(τ^r − 1)ρ`, the highest weight of the τ^r-Steinberg module.
pub fn steinberg_weight(s: u32) -> Weight {
    let d = F4.data();
    TauMap::new(F4).pow(d.rho(), 2 * s + 1) - d.rho()
}

/// `(2^s−1)·A + (2^{s+1}−1)·B`.
fn steinberg_pairing(s: u32) -> i64 {
    let (a, b) = steinberg_constants();
    (2i64.pow(s) - 1) * a + (2i64.pow(s + 1) - 1) * b
}

/// `A + B(2^{s+1}−1)/(2^s−1) + 2^{s−1}/(2^s−1)`.
pub fn tau_nu_bound(s: u32) -> Result<RationalBound> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    let (a, b) = steinberg_constants();
    let den = 2i64.pow(s) - 1;
    let value = Ratio::from_integer(a)
        + Ratio::new(b * (2i64.pow(s + 1) - 1), den)
        + Ratio::new(2i64.pow(s - 1), den);
    Ok(RationalBound { value, context: format!("bound on <tau nu, alpha0> at s={s}") })
}

/// Largest integer value of `⟨τν, α0^∨⟩` the bound admits.
pub fn tau_nu_gate(s: u32) -> Result<i64> {
    Ok(tau_nu_bound(s)?.value.floor().to_integer())
}

/// Replays the inequality chain leading to the bound.
pub fn audit_bound_chain(s: u32) -> Result<AuditReport> {
    let bound = tau_nu_bound(s)?;
    let mut rep = AuditReport::new("tau-nu-bound", params([("s", s.to_string()), ("bound", bound.value.to_string())]));
    let d = F4.data();
    let t = TauMap::new(F4);
    let (a, b) = steinberg_constants();
    rep.bump("constants");
    if (a, b) != (6, 5) {
        rep.fail(d.omega(3) + d.omega(4), "pairings (6, 5)", format!("({a}, {b})"));
    }
    let stw = steinberg_weight(s);
    let expected = (2i64.pow(s) - 1) * (d.omega(1) + d.omega(2)) + (2i64.pow(s + 1) - 1) * (d.omega(3) + d.omega(4));
    rep.bump("steinberg weight");
    if stw != expected || pair(stw) != steinberg_pairing(s) {
        rep.fail(stw, expected, format!("pairing {}", pair(stw)));
    }
    // halving the sum of the two weight bounds, over a grid of pairing values
    let c = steinberg_pairing(s);
    for pl in 0..=24 {
        for pm in 0..=24 {
            for pn in 0..=24 {
                let first = pl + pm + pn + 2i64.pow(s);
                let second = 2 * c - pl - pm + pn;
                rep.bump("halving");
                if Ratio::new(first + second, 2) != Ratio::from_integer(c + pn) + Ratio::new(2i64.pow(s), 2) {
                    rep.fail(d.zero(), "halved sum", format!("{pl},{pm},{pn}"));
                }
            }
        }
    }
    // <τ^r ν> = 2^s <τν>, so the difference with <τν> is (2^s−1)<τν>
    for nu in gamma_set() {
        rep.bump("tau^r scaling");
        if pair(t.pow(nu, 2 * s + 1)) != 2i64.pow(s) * pair(t.apply(nu)) {
            rep.fail(nu, "2^s <tau nu>", pair(t.pow(nu, 2 * s + 1)));
        }
    }
    let derived = Ratio::new(c + 2i64.pow(s - 1), 2i64.pow(s) - 1);
    rep.bump("division");
    if derived != bound.value {
        rep.fail(d.zero(), bound.value, derived);
    }
    let gate = tau_nu_gate(s)?;
    rep.findings.push(format!("<tau nu> <= {gate} (bound {} ~ {:.4})", bound.value, bound.value.to_f64().unwrap_or(0.0)));
    if 2i64.pow(s) <= 4 {
        rep.findings.push(format!("hypothesis 2^s > 4 fails at s={s}; values reported only"));
    }
    Ok(rep.finish())
}

/// Class of ν by `2a + 2b + c`: 0, 1, or at least 2.
fn nu_class(nu: Weight) -> u8 {
    (2 * nu.get(0) + 2 * nu.get(1) + nu.get(2)).min(2) as u8
}

/// Partitions the ν admitted by the bound at level `s` and checks the conclusions.
pub fn classify_admissible_nu(s: u32) -> Result<AuditReport> {
    let gate = tau_nu_gate(s)?;
    let mut rep = AuditReport::new("classify-nu", params([("s", s.to_string()), ("tau_gate", gate.to_string())]));
    let t = TauMap::new(F4);
    let d = F4.data();
    let admitted: Vec<Weight> =
        d.enumerate_dominant(gate + 1).into_iter().filter(|&nu| pair(t.apply(nu)) <= gate).collect();
    let mut at_sixteen = Vec::new();
    for &nu in &admitted {
        let p = pair(nu);
        let class = nu_class(nu);
        rep.bump(format!("class {class}"));
        rep.bump("admitted");
        let ok = match class {
            0 => nu.get(0) == 0 && nu.get(1) == 0 && nu.get(2) == 0 && nu.get(3) <= 8,
            1 => nu.get(2) == 1 && nu.get(0) == 0 && nu.get(1) == 0 && p <= 15,
            _ => p < 16,
        };
        if !ok {
            rep.fail(nu, format!("class {class} conclusion"), format!("pairing {p}"));
        }
        if p > 16 {
            rep.fail(nu, "pairing <= 16", p);
        }
        if p == 16 {
            at_sixteen.push(nu);
        }
    }
    if at_sixteen != [8 * d.omega(4)] {
        let list: Vec<String> = at_sixteen.iter().map(Weight::to_string).collect();
        rep.fail(8 * d.omega(4), "unique pairing-16 weight 8w4", list.join(" "));
    }
    let total = rep.stats.get("class 0").copied().unwrap_or(0)
        + rep.stats.get("class 1").copied().unwrap_or(0)
        + rep.stats.get("class 2").copied().unwrap_or(0);
    if total != admitted.len() as u64 {
        rep.fail(d.zero(), admitted.len(), total);
    }
    if s < 4 {
        rep.findings.push(format!("s={s} is below the stated range s >= 4"));
    }
    Ok(rep.finish())
}

/// `⟨τ^r θ, α0^∨⟩ ≤ ⟨σ0, α0^∨⟩ + 2^s` over the F4 simple-coefficient table.
pub fn audit_sigma0_bound(r: u32) -> Result<AuditReport> {
    if r % 2 == 0 || r < 3 {
        return Err(Error::InvalidParameter(format!("r must be odd and at least 3, got {r}")));
    }
    let s = (r - 1) / 2;
    let t = TauMap::new(F4);
    let d = F4.data();
    let slack = 2i64.pow(s);
    let mut rep = AuditReport::new("sigma0", params([("r", r.to_string()), ("s", s.to_string())]));
    let check = |rep: &mut AuditReport, sigma0: Weight, theta: Weight| {
        let lhs = pair(t.pow(theta, r));
        let rhs = pair(sigma0) + slack;
        if lhs > rhs {
            rep.fail(sigma0, format!("<tau^r {theta}> <= {rhs}"), lhs);
        }
    };
    for row in g_r2_l_rows(F4, r)? {
        rep.bump("rows");
        for sm in row.expr.summands() {
            debug_assert_eq!(sm.kind, SummandKind::Simple);
            rep.bump("pairs");
            check(&mut rep, row.weight, sm.weight);
        }
    }
    // the summand L(ω4) that the Steinberg factorization adds at 2^{s−1}ω2
    let extra = 2i64.pow(s - 1) * d.omega(2);
    let before = rep.counterexamples.len();
    check(&mut rep, extra, d.omega(4));
    rep.findings.push(format!(
        "with L(w4) added at {extra}: {}",
        if rep.counterexamples.len() == before { "inequality holds" } else { "inequality fails" }
    ));
    Ok(rep.finish())
}

/// Pairings of the weight list used to bound Ext¹ over G_{7/2}.
pub fn ext_bound_weight_audit() -> AuditReport {
    let d = F4.data();
    let o = |i| d.omega(i);
    let mut rep = AuditReport::new("ext-bound-weights", Default::default());
    let gammas = [o(1), o(2), o(3), o(4), o(1) + o(4), 2 * o(4)];
    let max = gammas.iter().map(|&g| pair(g)).max().unwrap_or(0);
    rep.bump("gamma weights");
    if max != 4 {
        rep.fail(d.zero(), "max gamma pairing 4", max);
    }
    let tensored = max + pair(o(4));
    if tensored != 6 {
        rep.fail(o(4), "tensoring bound 6", tensored);
    }
    rep.params.insert("gamma_max".into(), max.to_string());
    rep.params.insert("bound".into(), tensored.to_string());
    // k, k+k, L(ω4), k+L(ω1), k+L(ω4)
    let lists: [&[Weight]; 5] = [&[d.zero()], &[d.zero(), d.zero()], &[o(4)], &[d.zero(), o(1)], &[d.zero(), o(4)]];
    let mut inclusive = true;
    let mut strict = true;
    for list in lists {
        rep.bump("candidate modules");
        for &w in list {
            let p = pair(w);
            inclusive &= p <= 2;
            strict &= p < 2;
            if p > tensored {
                rep.fail(w, format!("pairing <= {tensored}"), p);
            }
        }
    }
    rep.findings.push(format!(
        "'2-small' as pairing <= 2 (the (t-1)-small convention): {}",
        if inclusive { "holds for every candidate" } else { "fails" }
    ));
    rep.findings.push(format!(
        "'2-small' as pairing < 2: {}",
        if strict { "holds" } else { "fails for L(w1) and L(w4), both of pairing 2" }
    ));
    rep.finish()
}

/// Highest weights of the simple-coefficient answers stay within `h + 4`.
pub fn audit_small_answers(s_max: u32) -> AuditReport {
    use crate::tables::g_level::g_s_l_rows;
    let d = F4.data();
    let limit = d.coxeter_h + 4;
    let mut rep = AuditReport::new("small-answers", params([("s_max", s_max.to_string()), ("limit", limit.to_string())]));
    for s in 1..=s_max {
        let rows = g_s_l_rows(F4, s).into_iter().chain(g_r2_l_rows(F4, 2 * s + 1).expect("odd r"));
        for row in rows {
            for sm in row.expr.summands() {
                rep.bump("weights");
                if pair(sm.weight) > limit {
                    rep.fail(row.weight, format!("pairing <= {limit}"), pair(sm.weight));
                }
            }
        }
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert_eq!(tau_nu_bound(3).unwrap().value, Ratio::new(121, 7));
        assert_eq!(tau_nu_bound(4).unwrap().value, Ratio::new(253, 15));
        assert_eq!(tau_nu_gate(3).unwrap(), 17);
        assert_eq!(tau_nu_gate(4).unwrap(), 16);
    }

    #[test]
    fn chain_and_classes() {
        for s in 1..8 {
            assert!(audit_bound_chain(s).unwrap().passed);
        }
        let c = classify_admissible_nu(4).unwrap();
        assert!(c.passed, "{c}");
        assert!(!classify_admissible_nu(2).unwrap().passed);
    }

    #[test]
    fn gamma_and_identity() {
        assert_eq!(gamma_set(), gamma_box_oracle());
        let d = F4.data();
        assert!(gamma_set().contains(&(8 * d.omega(4))));
        for w in [d.omega(1), d.zero(), d.omega(3)] {
            assert!(tau_pairing_identity(w).unwrap().passed);
        }
    }

    #[test]
    fn sigma0_and_lemma() {
        for s in 1..=10 {
            let rep = audit_sigma0_bound(2 * s + 1).unwrap();
            assert!(rep.passed, "{rep}");
        }
        let rep = ext_bound_weight_audit();
        assert!(rep.passed);
        assert_eq!(rep.params["bound"], "6");
        assert!(audit_small_answers(10).passed);
    }
}
