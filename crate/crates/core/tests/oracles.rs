//! Library results against independent brute-force computations.

use std::collections::BTreeSet;

use suzree_core::chevalley::{commutator_span_mod_p, h1_u_tau, structure_constant_magnitude};
use suzree_core::isogeny::{is_r_half_restricted, restricted_weights, x_tau, TauMap};
use suzree_core::tables;
use suzree_core::{SystemId, Weight};

use SystemId::{C2, F4, G2};

/// Cartan matrices in Bourbaki numbering, row i = α_i in the ω-basis.
fn cartan(id: SystemId) -> Vec<Vec<i64>> {
    match id {
        C2 => vec![vec![2, -1], vec![-2, 2]],
        G2 => vec![vec![2, -1], vec![-3, 2]],
        F4 => vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]],
    }
}

/// Reflection s_i on ω-coordinates: λ − λ_i α_i.
fn reflect(id: SystemId, i: usize, w: &[i64]) -> Vec<i64> {
    let a = &cartan(id)[i];
    w.iter().zip(a).map(|(x, ai)| x - w[i] * ai).collect()
}

/// All roots as the W-orbit of the simple roots.
fn roots_by_orbit(id: SystemId) -> BTreeSet<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = cartan(id).into_iter().collect();
    let mut frontier: Vec<Vec<i64>> = seen.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for i in 0..id.rank() {
            let u = reflect(id, i, &v);
            if seen.insert(u.clone()) {
                frontier.push(u);
            }
        }
    }
    seen
}

/// Order of W as the orbit size of a regular weight (ρ).
fn weyl_order(id: SystemId) -> usize {
    let rho = vec![1; id.rank()];
    let mut seen = BTreeSet::from([rho.clone()]);
    let mut frontier = vec![rho];
    while let Some(v) = frontier.pop() {
        for i in 0..id.rank() {
            let u = reflect(id, i, &v);
            if seen.insert(u.clone()) {
                frontier.push(u);
            }
        }
    }
    seen.len()
}

#[test]
fn root_counts_and_weyl_orders() {
    for (id, nroots, order, h) in [(C2, 8, 8, 4), (G2, 12, 12, 6), (F4, 48, 1152, 12)] {
        let d = id.data();
        let orbit = roots_by_orbit(id);
        assert_eq!(orbit.len(), nroots);
        let lib: BTreeSet<Vec<i64>> = d.roots.iter().map(|r| r.weight.coeffs().to_vec()).collect();
        assert_eq!(lib, orbit);
        assert_eq!(weyl_order(id), order);
        assert_eq!(d.weyl.len(), order);
        assert_eq!(d.coxeter_h, h);
        assert_eq!((nroots / id.rank()) as i64, h);
        for w in &d.weyl {
            for r in &d.roots {
                assert!(d.is_root(w.apply(r.weight)));
            }
        }
        for i in 1..=id.rank() {
            assert_eq!(d.simple_root(i).coeffs(), cartan(id)[i - 1].as_slice());
            for j in 1..=id.rank() {
                assert_eq!(d.pair(d.simple_root(j), d.simple_root(i)).unwrap(), cartan(id)[j - 1][i - 1]);
            }
        }
    }
}

#[test]
fn cartan_types_of_short_subsystems() {
    assert_eq!(C2.data().short_cartan_type(), "A1xA1");
    assert_eq!(G2.data().short_cartan_type(), "A2");
    assert_eq!(F4.data().short_cartan_type(), "D4");
}

#[test]
fn dominant_enumeration_matches_box_scan() {
    for id in SystemId::ALL {
        let d = id.data();
        for bound in 0..=10i64 {
            let n = id.rank() as u32;
            let side: i64 = bound + 1;
            let mut scan = Vec::new();
            for k in 0..side.pow(n) {
                let c: Vec<i64> = (0..n).map(|j| (k / side.pow(n - 1 - j)) % side).collect();
                let w = Weight::new(&c);
                if d.pair_alpha0(w) < bound {
                    scan.push(w);
                }
            }
            scan.sort();
            assert_eq!(d.enumerate_dominant(bound), scan, "{id} bound {bound}");
        }
    }
    let f = F4.data();
    assert_eq!(f.enumerate_dominant(3), vec![Weight::new(&[0, 0, 0, 0]), Weight::new(&[0, 0, 0, 1]), Weight::new(&[1, 0, 0, 0])]);
    let g = f.enumerate_dominant(17);
    assert!(g.contains(&Weight::new(&[0, 0, 0, 8])));
    assert!(!g.contains(&Weight::new(&[0, 4, 0, 1])));
}

#[test]
fn root_lattice_by_integer_solve() {
    // C2: aα1 + bα2 = (2a − 2b, −a + 2b), so the ω1-coefficient is always even
    let d = C2.data();
    for x in -6..=6 {
        for y in -6..=6 {
            let w = Weight::new(&[x, y]);
            let solvable = (-12..=12).any(|a: i64| (-12..=12).any(|b: i64| 2 * a - 2 * b == x && -a + 2 * b == y));
            assert_eq!(d.in_root_lattice(w), solvable, "{w}");
        }
    }
    assert_eq!(F4.data().cartan_det, 1);
    assert!(F4.data().in_root_lattice(Weight::new(&[1, 0, 0, 0])));
}

/// τ sends short simple roots to long ones and long simple roots to p times short ones.
#[test]
fn tau_on_simple_roots() {
    for id in SystemId::ALL {
        let d = id.data();
        let t = TauMap::new(id);
        let p = id.p();
        let simples: Vec<Weight> = (1..=id.rank()).map(|i| d.simple_root(i)).collect();
        for i in 1..=id.rank() {
            let img = t.apply(d.simple_root(i));
            let long = !d.is_short_simple(i);
            let hit = simples.iter().enumerate().find(|(j, &a)| {
                let target_long = !d.is_short_simple(j + 1);
                if long {
                    !target_long && p * a == img
                } else {
                    target_long && a == img
                }
            });
            assert!(hit.is_some(), "{id} alpha{i} -> {img}");
        }
        for x in -4..=4 {
            for y in -4..=4 {
                let mut c = vec![0; id.rank()];
                c[0] = x;
                c[id.rank() - 1] = y;
                let w = Weight::new(&c);
                assert_eq!(t.pow(w, 2), p * w);
            }
        }
    }
}

#[test]
fn restricted_set_sizes() {
    for id in SystemId::ALL {
        let d = id.data();
        let nshort = (1..=id.rank()).filter(|&i| d.is_short_simple(i)).count() as u32;
        let nlong = id.rank() as u32 - nshort;
        for r in [1, 3, 5] {
            let s = (r - 1) / 2;
            let expected = id.p().pow((s + 1) * nshort + s * nlong) as usize;
            assert_eq!(restricted_weights(id, r).len(), expected);
        }
    }
    assert_eq!(restricted_weights(F4, 5).len(), 1024);
    assert_eq!(restricted_weights(F4, 7).len(), 1 << 14);
    assert_eq!(x_tau(C2).len(), 2);
    assert_eq!(x_tau(G2).len(), 3);
    assert_eq!(x_tau(F4).len(), 4);
    assert!(is_r_half_restricted(C2, Weight::new(&[2, 0]), 3));
}

#[test]
fn lie_algebra_substrate() {
    for id in SystemId::ALL {
        let d = id.data();
        let short: Vec<Weight> = d.roots.iter().filter(|r| !r.long).map(|r| r.weight).collect();
        for &a in &short {
            for &b in &short {
                if a == b || a == -b {
                    continue;
                }
                let n = structure_constant_magnitude(id, a, b).unwrap();
                assert!((0..=3).contains(&n));
                if d.root(a + b).is_some_and(|r| r.long) {
                    assert_eq!(n % id.p(), 0, "{id}: {a} + {b}");
                }
            }
        }
        for a in d.roots.iter().map(|r| r.weight) {
            for b in d.roots.iter().map(|r| r.weight) {
                if a != b && a != -b {
                    assert!((0..=3).contains(&structure_constant_magnitude(id, a, b).unwrap()));
                }
            }
        }
        let neg_short: BTreeSet<Weight> = short.iter().copied().filter(|w| d.root(*w).is_some_and(|r| !r.positive)).collect();
        let neg_simple: BTreeSet<Weight> = d.betas().into_iter().map(|b| -b).collect();
        let expected: BTreeSet<Weight> = neg_short.difference(&neg_simple).copied().collect();
        assert_eq!(commutator_span_mod_p(id).roots, expected, "{id}");
        let mut pi_s = d.betas();
        pi_s.sort();
        assert_eq!(h1_u_tau(id), pi_s);
    }
    assert_eq!(commutator_span_mod_p(F4).roots.len(), 8);
    assert!(commutator_span_mod_p(C2).roots.is_empty());
}

/// `λ0 + β ∈ τX` by solving with the explicit inverse `τ^{-1} = τ/p`.
fn btau_oracle(id: SystemId, l0: Weight) -> Vec<Weight> {
    let t = TauMap::new(id);
    let mut out: Vec<Weight> = id
        .data()
        .betas()
        .into_iter()
        .filter_map(|b| t.apply(l0 + b).div_exact(id.p()))
        .collect();
    out.sort();
    out
}

#[test]
fn btau_against_inverse_oracle() {
    for id in SystemId::ALL {
        for l0 in x_tau(id) {
            let table = tables::h1_b_tau_table(id, l0).unwrap();
            let got: Vec<Weight> = table.expr.summands().iter().map(|s| s.weight).collect();
            assert_eq!(got, btau_oracle(id, l0), "{id} {l0}");
            assert!(table.expr.summands().iter().all(|s| s.twist_halves == 1));
        }
    }
}
