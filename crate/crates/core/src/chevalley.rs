//! Root-vector combinatorics of the Lie algebra of U_τ.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::SystemId;
use crate::weight::Weight;

/// Roots whose root vectors span a subspace.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootVectorSpan {
    pub roots: BTreeSet<Weight>,
}

/// `|N_{αβ}|`: zero unless α+β is a root, otherwise q+1 for the α-string through β.
pub fn structure_constant_magnitude(id: SystemId, alpha: Weight, beta: Weight) -> Result<i64> {
    let d = id.data();
    for x in [alpha, beta] {
        if !d.is_root(x) {
            return Err(Error::NotARoot(x, id.name()));
        }
    }
    if alpha == beta || alpha == -beta {
        return Err(Error::InvalidParameter(format!("{alpha} and {beta} are proportional")));
    }
    if !d.is_root(alpha + beta) {
        return Ok(0);
    }
    let q = (1..).take_while(|&k| d.is_root(beta - k * alpha)).count() as i64;
    Ok(q + 1)
}

fn negative_short(id: SystemId) -> Vec<Weight> {
    let d = id.data();
    d.phi_s.iter().filter(|&&i| !d.roots[i].positive).map(|&i| d.roots[i].weight).collect()
}

/// Roots α+β of Φ_s^- reached by a bracket that survives mod p.
pub fn commutator_span_mod_p(id: SystemId) -> RootVectorSpan {
    let neg = negative_short(id);
    let mut roots = BTreeSet::new();
    for &a in &neg {
        for &b in &neg {
            if a == b || !neg.contains(&(a + b)) {
                continue;
            }
            let n = structure_constant_magnitude(id, a, b).expect("distinct negative roots");
            if n % id.p() != 0 {
                roots.insert(a + b);
            }
        }
    }
    RootVectorSpan { roots }
}

/// Weights of `H^1(U_τ, k)`: Φ_s^- modulo the commutator span, negated.
pub fn h1_u_tau(id: SystemId) -> Vec<Weight> {
    let span = commutator_span_mod_p(id);
    let mut out: Vec<Weight> = negative_short(id).into_iter().filter(|r| !span.roots.contains(r)).map(|r| -r).collect();
    out.sort();
    out
}
