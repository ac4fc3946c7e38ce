//! Vanishing classifier for H²(B_s, λ') in type C2, p = 2.
//!
//! Only decides whether a pattern row can fire; the values of H²(B_1, ·)
//! themselves are not modelled.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::SystemId;
use crate::weight::Weight;

use super::{pw, require_restricted};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H2Verdict {
    Zero,
    PossiblyNonzero(String),
    /// `λ' = 2λ1`: the answer involves H²(B_{s−1}, λ1), whose verdict is carried,
    /// plus an H¹ term with coefficients in a twisted indecomposable.
    Recursive(Box<H2Verdict>),
}

impl H2Verdict {
    pub fn is_zero(&self) -> bool {
        matches!(self, H2Verdict::Zero)
    }
}

impl fmt::Display for H2Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H2Verdict::Zero => write!(f, "zero"),
            H2Verdict::PossiblyNonzero(l) => write!(f, "possibly nonzero ({l})"),
            H2Verdict::Recursive(inner) => write!(f, "recursive [{inner}]"),
        }
    }
}

pub fn h2_b_s_c2_classify(lambda: Weight, s: u32) -> Result<H2Verdict> {
    let id = SystemId::C2;
    if s == 0 {
        return Err(Error::InvalidParameter("s must be at least 1".into()));
    }
    require_restricted(id, lambda, 2 * s)?;
    Ok(classify(lambda, s))
}

fn classify(lambda: Weight, s: u32) -> H2Verdict {
    if let Some(label) = match_rows(lambda, s) {
        return H2Verdict::PossiblyNonzero(label);
    }
    if s > 1 {
        if let Some(l1) = lambda.div_exact(2) {
            return H2Verdict::Recursive(Box::new(classify(l1, s - 1)));
        }
    }
    H2Verdict::Zero
}

/// The first pattern row `λ'` satisfies, with ν solved for.
fn match_rows(lambda: Weight, s: u32) -> Option<String> {
    let d = SystemId::C2.data();
    let q = pw(2, s);
    let nu = |x: Weight| x.div_exact(q);
    let alphas = [(1usize, d.simple_root(1)), (2, d.simple_root(2))];
    let dots: Vec<(u32, Weight)> = d
        .weyl
        .iter()
        .filter(|w| w.length == 0 || w.length == 2)
        .map(|w| (w.length, d.dot_action(w, d.zero())))
        .collect();

    for &(len, w0) in &dots {
        if let Some(n) = nu(lambda - pw(2, s - 1) * w0) {
            return Some(format!("2^(s-1)(w.0+2nu) [l(w)={len}, w.0={w0}, nu={n}]"));
        }
    }
    for l in 0..s.saturating_sub(1) {
        for &(len, w0) in &dots {
            if let Some(n) = nu(lambda - pw(2, l) * w0) {
                return Some(format!("2^s nu + 2^l w.0 [l(w)={len}, l={l}, nu={n}]"));
            }
        }
    }
    for l in 0..s {
        for &(j, a) in &alphas {
            if j == 2 && l == s - 1 {
                continue;
            }
            if let Some(n) = nu(lambda + pw(2, l) * a) {
                return Some(format!("2^s nu - 2^l alpha [alpha=alpha{j}, l={l}, nu={n}]"));
            }
        }
    }
    for t in 1..s {
        for l in 0..t {
            for &(jb, b) in &alphas {
                for &(ja, a) in &alphas {
                    if let Some(n) = nu(lambda + pw(2, t) * b + pw(2, l) * a) {
                        return Some(format!(
                            "2^s nu - 2^t beta - 2^l alpha [beta=alpha{jb}, alpha=alpha{ja}, t={t}, l={l}, nu={n}]"
                        ));
                    }
                }
            }
        }
    }
    let a12 = d.simple_root(1) + d.simple_root(2);
    for l in 0..s.saturating_sub(1) {
        if let Some(n) = nu(lambda + pw(2, l) * a12) {
            return Some(format!("2^s nu - 2^l (alpha1+alpha2) [l={l}, nu={n}]"));
        }
    }
    let top2 = pw(2, s - 1) * d.simple_root(2);
    for l in 0..s.saturating_sub(1) {
        for &(j, a) in &alphas {
            if let Some(n) = nu(lambda + top2 + pw(2, l) * a) {
                return Some(format!("2^s nu - 2^(s-1) alpha2 - 2^l alpha [alpha=alpha{j}, l={l}, nu={n}]"));
            }
        }
    }
    for &(j, a) in &alphas {
        if let Some(n) = nu(lambda + pw(2, s - 1) * a) {
            return Some(format!("2^s nu - 2^(s-1) alpha [alpha=alpha{j}, nu={n}]"));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isogeny::restricted_weights;

    #[test]
    fn odd_first_coefficient_vanishes() {
        for s in 1..=4 {
            for w in restricted_weights(SystemId::C2, 2 * s) {
                if w.get(0) % 2 != 0 {
                    assert_eq!(h2_b_s_c2_classify(w, s), Ok(H2Verdict::Zero), "{w} s={s}");
                }
            }
        }
    }

    #[test]
    fn pattern_rows() {
        let d = SystemId::C2.data();
        for s in 1..4u32 {
            // 2^s nu - 2^l alpha1 with nu = omega1 + omega2
            let nu = d.omega(1) + d.omega(2);
            for l in 0..s {
                let w = pw(2, s) * nu - pw(2, l) * d.simple_root(1);
                if w.is_dominant() && require_restricted(SystemId::C2, w, 2 * s).is_ok() {
                    assert!(matches!(h2_b_s_c2_classify(w, s).unwrap(), H2Verdict::PossiblyNonzero(_)));
                }
            }
        }
        // zero weight matches the first row with w = 1
        assert!(matches!(h2_b_s_c2_classify(d.zero(), 2).unwrap(), H2Verdict::PossiblyNonzero(_)));
        assert!(h2_b_s_c2_classify(d.w(&[4, 0]), 2).is_err());
    }
}
