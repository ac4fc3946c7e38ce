use num_rational::Ratio;

use suzree_core::audit::{self, E01Rule};
use suzree_core::bounds;
use suzree_core::isogeny::restricted_weights;
use suzree_core::tables::{self, printed::DiscrepancyKind};
use suzree_core::{SystemId, Weight};

use SystemId::{C2, F4, G2};

#[test]
fn b_r2_small_levels() {
    let c2 = audit::audit_b_r2(C2, 3).unwrap();
    assert!(c2.passed);
    assert_eq!(c2.stats["weights"], 8);
    assert_eq!(c2.stats["nonzero"], 4);
    assert!(c2.axioms.iter().any(|a| a.contains("root lattice")));
    let f4 = audit::audit_b_r2(F4, 3).unwrap();
    assert!(f4.passed);
    assert_eq!(f4.stats["weights"], 64);
    assert!(!f4.stats.contains_key("case: tau^r w - tau^(2i+1) alpha"));
    let g2 = audit::audit_b_r2(G2, 3).unwrap();
    assert!(g2.passed);
    assert!(g2.discrepancies.iter().any(|d| d.row == 5 && d.kind == DiscrepancyKind::Transcription));
}

#[test]
fn g_s_level_two() {
    let rep = audit::audit_g_s_simple(C2, 2).unwrap();
    assert!(rep.passed, "{rep}");
    let nonzero: Vec<Weight> = restricted_weights(C2, 4)
        .into_iter()
        .filter(|&l| !tables::h1_g_s_l(C2, l, 2).unwrap().is_zero())
        .collect();
    let expected: Vec<Weight> = [[0, 0], [0, 1], [0, 2], [2, 0]].iter().map(|c| Weight::new(c)).collect();
    assert_eq!(nonzero, expected);
    assert_eq!(audit::audit_g_s_simple(F4, 2).unwrap().stats["s=2 weights"], 256);
}

#[test]
fn g_r2_proof_rule_and_steinberg_rule() {
    for r in [3, 5, 7] {
        let replay = audit::audit_g_r2_simple(F4, r, E01Rule::ProofReplay).unwrap();
        assert!(replay.passed, "{replay}");
        let steinberg = audit::audit_g_r2_simple(F4, r, E01Rule::Steinberg).unwrap();
        // the inner k ⊕ L(ω1) at 2^{s−1}ω2 contributes L(ω4) under the factorization
        let s = (r - 1) / 2;
        let l = Weight::new(&[0, 1 << (s - 1), 0, 0]);
        assert_eq!(steinberg.counterexamples.len(), 1);
        assert_eq!(steinberg.counterexamples[0].weight, l);
        assert_eq!(replay.stats["e01 rule disagreements"], 1);
    }
    for id in [C2, G2] {
        let a = audit::audit_g_r2_simple(id, 5, E01Rule::ProofReplay).unwrap();
        let b = audit::audit_g_r2_simple(id, 5, E01Rule::Steinberg).unwrap();
        assert!(a.passed && b.passed);
        assert!(!a.stats.contains_key("e01 rule disagreements"));
    }
}

#[test]
fn g_r2_named_rows() {
    let g2 = tables::h1_g_r2_l(G2, Weight::new(&[3, 0]), 3).unwrap();
    assert_eq!(g2.expr.to_string(), "L[1,0]");
    let f4 = tables::h1_g_r2_l(F4, Weight::new(&[0, 1, 0, 0]), 3).unwrap();
    assert_eq!(f4.expr.to_string(), "k");
}

#[test]
fn weightform_boxes() {
    for id in SystemId::ALL {
        for r in [3, 5] {
            let rep = audit::audit_weightform(id, r, None).unwrap();
            assert!(rep.passed, "{rep}");
        }
    }
    assert!(audit::audit_weightform(C2, 5, Some(6)).unwrap().passed);
}

#[test]
fn induced_and_restriction() {
    for id in SystemId::ALL {
        for r in [1, 3, 5] {
            assert!(audit::audit_induced(id, r).unwrap().passed);
        }
        for r in [3, 5, 7] {
            assert!(audit::audit_restriction_consistency(id, r).unwrap().passed);
        }
    }
}

#[test]
fn bound_sequence() {
    let mut prev = bounds::tau_nu_bound(2).unwrap().value;
    for s in 3..=20 {
        let b = bounds::tau_nu_bound(s).unwrap().value;
        assert!(b < prev);
        if s >= 4 {
            assert!(b < Ratio::from_integer(17));
        }
        prev = b;
    }
    assert_eq!(bounds::tau_nu_bound(1).unwrap().value, Ratio::from_integer(22));
    assert_eq!(bounds::tau_nu_bound(2).unwrap().value, Ratio::new(55, 3));
}

#[test]
fn admissible_partition() {
    for s in 3..=8 {
        let rep = bounds::classify_admissible_nu(s).unwrap();
        assert!(rep.passed, "{rep}");
        let classes: u64 = (0..3).map(|c| rep.stats.get(&format!("class {c}")).copied().unwrap_or(0)).sum();
        assert_eq!(classes, rep.stats["admitted"]);
    }
    let d = F4.data();
    assert_eq!(d.pair_alpha0(d.omega(3) + 6 * d.omega(4)), 15);
    let rejected = d.omega(2) + 7 * d.omega(4);
    assert_eq!(d.pair_alpha0(rejected), 18);
    assert!(bounds::tau_nu_gate(4).unwrap() < d.pair_alpha0(suzree_core::isogeny::TauMap::new(F4).apply(rejected)));
    let s2 = bounds::classify_admissible_nu(2).unwrap();
    assert!(!s2.passed);
}

#[test]
fn f4_weight_bound_audits() {
    for s in 1..=10 {
        assert!(bounds::audit_sigma0_bound(2 * s + 1).unwrap().passed);
    }
    let lemma = bounds::ext_bound_weight_audit();
    assert!(lemma.passed);
    assert_eq!(lemma.findings.len(), 2);
    assert!(bounds::audit_small_answers(10).passed);
    assert_eq!(bounds::gamma_set(), bounds::gamma_box_oracle());
    let d = F4.data();
    for (nu, diff) in [(d.omega(1), 2), (d.zero(), 0), (d.omega(3), 1)] {
        let t = suzree_core::isogeny::TauMap::new(F4).apply(nu);
        assert_eq!(d.pair_alpha0(t) - d.pair_alpha0(nu), diff);
    }
}
