//! Worked values for the tables, the digits and the classifiers.

use suzree_core::isogeny::{rotate_digits, select_rotation, tau_adic_digits, tau_preimage, TauMap};
use suzree_core::module_expr::IndecomposableTag;
use suzree_core::tables::{self, H2Verdict};
use suzree_core::{ModuleExpr, Summand, SystemId, Weight};

use SystemId::{C2, F4, G2};

fn w(c: &[i64]) -> Weight {
    Weight::new(c)
}

fn lines(ws: &[&[i64]], twist: u32) -> ModuleExpr {
    ModuleExpr::from_summands(ws.iter().map(|c| Summand::line(w(c), twist)).collect())
}

fn simples(ws: &[&[i64]]) -> ModuleExpr {
    ModuleExpr::from_summands(ws.iter().map(|c| Summand::simple(w(c))).collect())
}

#[test]
fn btau_tables() {
    assert_eq!(tables::h1_b_tau_table(C2, w(&[0, 0])).unwrap().expr, lines(&[&[-1, 1], &[1, 0]], 1));
    assert!(tables::h1_b_tau_table(C2, w(&[1, 0])).unwrap().is_zero());
    assert_eq!(tables::h1_b_tau_table(G2, w(&[1, 0])).unwrap().expr, lines(&[&[-1, 1], &[1, 0]], 1));
    assert!(tables::h1_b_tau_table(G2, w(&[0, 0])).unwrap().is_zero());
    assert!(tables::h1_b_tau_table(G2, w(&[2, 0])).unwrap().is_zero());
    assert_eq!(
        tables::h1_b_tau_table(F4, w(&[0, 0, 0, 1])).unwrap().expr,
        lines(&[&[0, 0, 0, 1], &[0, 1, -1, 0], &[0, 0, 1, -1]], 1)
    );
    assert_eq!(tables::h1_b_tau_table(F4, w(&[0, 0, 1, 0])).unwrap().expr, lines(&[&[1, 0, 0, 0]], 1));
    assert!(tables::h1_b_tau_table(F4, w(&[0, 0, 1, 1])).unwrap().is_zero());
    assert!(tables::h1_b_tau_table(F4, w(&[1, 0, 0, 0])).is_err());
}

#[test]
fn btau_tensoring() {
    // ω2 = 0 + τω1 in C2
    assert_eq!(tables::h1_b_tau_general(C2, w(&[0, 1])).unwrap().expr, lines(&[&[0, 1], &[2, 0]], 1));
    let t = TauMap::new(G2);
    for mu in [w(&[0, 0]), w(&[3, -1]), w(&[-2, 5])] {
        assert!(tables::h1_b_tau_general(G2, w(&[2, 0]) + t.apply(mu)).unwrap().is_zero());
    }
}

#[test]
fn tau_preimages() {
    assert_eq!(tau_preimage(C2, w(&[0, 1]), 1), Some(w(&[1, 0])));
    assert_eq!(tau_preimage(C2, w(&[3, -1]), 1), None);
    for id in SystemId::ALL {
        let z = id.data().zero();
        for m in 0..6 {
            assert_eq!(tau_preimage(id, z, m), Some(z));
        }
    }
}

#[test]
fn digits_and_rotation() {
    let d = tau_adic_digits(C2, w(&[1, 1]), 3).unwrap();
    assert_eq!(d.digits, vec![w(&[1, 0]), w(&[1, 0]), w(&[0, 0])]);
    for s in 1..5 {
        let r = 2 * s + 1;
        let d = tau_adic_digits(C2, w(&[2i64.pow(s), 0]), r).unwrap();
        for (i, x) in d.digits.iter().enumerate() {
            assert_eq!(*x, if i == 2 * s as usize { w(&[1, 0]) } else { w(&[0, 0]) });
        }
    }
    assert!(tau_adic_digits(C2, w(&[4, 0]), 3).is_err());
    assert_eq!(rotate_digits(C2, w(&[1, 0]), 1, 3).unwrap(), w(&[0, 1]));
    assert_eq!(rotate_digits(F4, w(&[1, 2, 3, 1]), 0, 5).unwrap(), w(&[1, 2, 3, 1]));
}

#[test]
fn rotation_selection() {
    let t = TauMap::new(C2);
    let one = w(&[1, 0]);
    let z = w(&[0, 0]);
    // first differing digit at 7, 0 and 10
    for (i, n) in [(7, 0), (0, 7), (10, 12)] {
        let b = t.pow(one, i);
        assert_eq!(select_rotation(C2, z, b, 15).unwrap(), n);
        let rb = rotate_digits(C2, b, n, 15).unwrap();
        let digits = tau_adic_digits(C2, rb, 15).unwrap().digits;
        assert_eq!(digits[7], one);
    }
    assert!(select_rotation(C2, z, z, 15).is_err());
}

#[test]
fn classical_b_s() {
    for s in 1..5 {
        let m = tables::h1_b_s_classical(C2, w(&[0, 0]), s).unwrap().expr;
        assert_eq!(m, ModuleExpr::single(Summand::indecomposable(IndecomposableTag::MC2, w(&[0, 0]), 2 * s)));
        let g = tables::h1_b_s_classical(G2, w(&[3i64.pow(s - 1), 3i64.pow(s - 1)]), s).unwrap().expr;
        assert_eq!(g, lines(&[&[1, 0]], 2 * s));
        let f = tables::h1_b_s_classical(F4, w(&[2i64.pow(s - 1), 0, 0, 0]), s).unwrap().expr;
        assert_eq!(f, ModuleExpr::single(Summand::indecomposable(IndecomposableTag::MF4, w(&[0, 0, 0, 0]), 2 * s)));
    }
}

#[test]
fn b_r2_rows() {
    for s in 1..5u32 {
        let r = 2 * s + 1;
        let p2 = 2i64.pow(s);
        assert_eq!(tables::h1_b_r2(C2, w(&[0, p2 - 1]), r).unwrap().expr, lines(&[&[1, 0]], r));
        assert_eq!(tables::h1_b_r2(F4, w(&[0, p2 / 2, 0, 0]), r).unwrap().expr, lines(&[&[0, 0, 0, 1]], r));
        let g = tables::h1_b_r2(G2, w(&[3i64.pow(s), 0]), r).unwrap().expr;
        assert_eq!(g, ModuleExpr::single(Summand::indecomposable(IndecomposableTag::MG2, w(&[0, 0]), r)));
    }
    assert!(tables::h1_b_r2(C2, w(&[4, 0]), 3).is_err());
}

#[test]
fn b_r2_general_forms() {
    let t = TauMap::new(C2);
    let d = C2.data();
    for s in 1..4 {
        let r = 2 * s + 1;
        for om in [w(&[1, 0]), w(&[0, 1]), w(&[2, 3])] {
            for b in d.betas() {
                let l = t.pow(om, r) - b;
                assert_eq!(tables::h1_b_r2_general(C2, l, r).unwrap().expr, lines(&[om.coeffs()], r));
            }
        }
    }
    assert!(tables::h1_b_r2_general(C2, d.rho(), 3).unwrap().is_zero());
    let f = F4.data();
    let tf = TauMap::new(F4);
    let om = w(&[1, 0, 2, 1]);
    let l = tf.pow(om, 5) - tf.pow(f.simple_root(2), 3);
    let expr = tables::h1_b_r2_general(F4, l, 5).unwrap().expr;
    let shift = om + f.omega(3) - f.omega(2);
    assert_eq!(expr, ModuleExpr::single(Summand::indecomposable(IndecomposableTag::MF4, shift, 5)));
}

#[test]
fn h2_classifier() {
    let d = C2.data();
    for s in 2..5u32 {
        let p = 2i64.pow(s);
        // ν = ω1 is the only choice keeping λ' in X_s
        for l in 0..s {
            let lp = p * d.omega(1) - 2i64.pow(l) * d.simple_root(1);
            assert!(matches!(tables::h2_b_s_c2_classify(lp, s).unwrap(), H2Verdict::PossiblyNonzero(_)), "{lp}");
        }
        assert!(tables::h2_b_s_c2_classify(w(&[1, 0]), s).unwrap().is_zero());
    }
}

#[test]
fn induced_tables() {
    assert_eq!(
        tables::h1_g_r2_h0(C2, w(&[0, 0]), 1).unwrap().expr,
        ModuleExpr::single(Summand::costandard(w(&[1, 0])))
    );
    for s in 1..5u32 {
        let r = 2 * s + 1;
        let f = tables::h1_g_r2_h0(F4, w(&[0, 0, 0, 2i64.pow(s)]), r).unwrap().expr;
        assert_eq!(f, ModuleExpr::single(Summand::costandard(w(&[0, 0, 0, 1]))));
        let g = tables::h1_g_r2_h0(G2, w(&[3i64.pow(s + 1) - 2, 1]), r).unwrap().expr;
        assert_eq!(g, ModuleExpr::single(Summand::costandard(w(&[0, 1]))));
    }
}

#[test]
fn simple_coefficient_tables() {
    for s in 1..6u32 {
        assert_eq!(tables::h1_g_s_l(C2, w(&[0, 0]), s).unwrap().expr, simples(&[&[1, 0]]));
        let g = 3i64.pow(s - 1);
        assert_eq!(tables::h1_g_s_l(G2, w(&[0, g]), s).unwrap().expr, simples(&[&[1, 0]]));
        let f = 2i64.pow(s - 1);
        assert_eq!(tables::h1_g_s_l(F4, w(&[0, f, f, 0]), s).unwrap().expr, simples(&[&[0, 0, 0, 0], &[0, 0, 0, 1]]));
    }
    for s in 1..6u32 {
        let r = 2 * s + 1;
        assert_eq!(tables::h1_g_r2_l(C2, w(&[2i64.pow(s), 0]), r).unwrap().expr, simples(&[&[0, 0]]));
        for i in 0..s {
            let c = 3i64.pow(i);
            assert_eq!(tables::h1_g_r2_l(G2, w(&[c, c]), r).unwrap().expr, simples(&[&[0, 0]]));
        }
        for j in 0..s.saturating_sub(1) {
            let c = 2i64.pow(j);
            assert_eq!(tables::h1_g_r2_l(F4, w(&[2 * c, c, 0, 0]), r).unwrap().expr, simples(&[&[0, 0, 0, 0]]));
        }
    }
    assert_eq!(tables::h1_g_r2_l(G2, w(&[3, 0]), 3).unwrap().expr, simples(&[&[1, 0]]));
    assert_eq!(tables::h1_g_r2_l(F4, w(&[0, 1, 0, 0]), 3).unwrap().expr, simples(&[&[0, 0, 0, 0]]));
}
