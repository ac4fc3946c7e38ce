//! The exceptional isogeny τ on the weight lattice and τ-adic digits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::SystemId;
use crate::weight::{Weight, MAX_RANK};

/// τ on the ω-basis; column j is τ(ω_{j+1}).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauMap {
    pub id: SystemId,
    pub p: i64,
    m: [[i64; MAX_RANK]; MAX_RANK],
}

impl TauMap {
    pub fn new(id: SystemId) -> Self {
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        // (source index, target index, factor) for ω_source ↦ factor·ω_target
        let images: &[(usize, usize, i64)] = match id {
            SystemId::C2 => &[(0, 1, 1), (1, 0, 2)],
            SystemId::G2 => &[(0, 1, 1), (1, 0, 3)],
            SystemId::F4 => &[(3, 0, 1), (0, 3, 2), (2, 1, 1), (1, 2, 2)],
        };
        for &(src, dst, f) in images {
            m[dst][src] = f;
        }
        TauMap { id, p: id.p(), m }
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.id.rank();
        (0..n).map(|i| self.m[i][..n].to_vec()).collect()
    }

    pub fn apply(&self, w: Weight) -> Weight {
        let n = w.rank();
        let out: Vec<i64> = (0..n).map(|i| (0..n).map(|j| self.m[i][j] * w.get(j)).sum()).collect();
        Weight::new(&out)
    }

    pub fn pow(&self, w: Weight, m: u32) -> Weight {
        let mut w = if m >= 2 { self.p.pow(m / 2) * w } else { w };
        if m % 2 == 1 {
            w = self.apply(w);
        }
        w
    }

    /// `μ` with `τ^m(μ) = λ`, if it exists. Uses `τ^{-1} = τ/p`.
    pub fn preimage(&self, w: Weight, m: u32) -> Option<Weight> {
        let mut cur = w;
        for _ in 0..m {
            cur = self.apply(cur).div_exact(self.p)?;
        }
        Some(cur)
    }

    pub fn in_image(&self, w: Weight, m: u32) -> bool {
        self.preimage(w, m).is_some()
    }
}

pub fn tau(id: SystemId, w: Weight) -> Weight {
    TauMap::new(id).apply(w)
}

pub fn tau_pow(id: SystemId, w: Weight, m: u32) -> Weight {
    TauMap::new(id).pow(w, m)
}

pub fn tau_preimage(id: SystemId, w: Weight, m: u32) -> Option<Weight> {
    TauMap::new(id).preimage(w, m)
}

/// Per-simple-root exclusive upper bounds defining X_{r/2}.
pub fn restriction_bounds(id: SystemId, r: u32) -> Vec<i64> {
    let d = id.data();
    let p = id.p();
    (1..=d.rank)
        .map(|i| {
            if r % 2 == 0 {
                p.pow(r / 2)
            } else {
                let s = (r - 1) / 2;
                if d.is_short_simple(i) {
                    p.pow(s + 1)
                } else {
                    p.pow(s)
                }
            }
        })
        .collect()
}

/// Membership in X_{r/2}; even `r = 2s` gives the classical X_s.
pub fn is_r_half_restricted(id: SystemId, w: Weight, r: u32) -> bool {
    w.rank() == id.rank()
        && w.is_dominant()
        && w.coeffs().iter().zip(restriction_bounds(id, r)).all(|(&c, b)| c < b)
}

/// All of X_{r/2}, lexicographically.
pub fn restricted_weights(id: SystemId, r: u32) -> Vec<Weight> {
    let bounds = restriction_bounds(id, r);
    let total: i64 = bounds.iter().product();
    let mut out = Vec::with_capacity(total as usize);
    let mut cur = vec![0i64; bounds.len()];
    loop {
        out.push(Weight::new(&cur));
        let mut k = bounds.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < bounds[k] {
                break;
            }
            cur[k] = 0;
        }
    }
}

pub fn x_tau(id: SystemId) -> Vec<Weight> {
    restricted_weights(id, 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauDigits {
    pub digits: Vec<Weight>,
    pub r: u32,
}

impl TauDigits {
    pub fn recompose(&self, id: SystemId) -> Weight {
        let t = TauMap::new(id);
        self.digits.iter().rev().fold(Weight::zero(id.rank()), |acc, &d| t.apply(acc) + d)
    }
}

/// The X_τ representative of `w` modulo τX(T), and `(w − digit)/τ`.
pub fn peel_digit(id: SystemId, w: Weight) -> (Weight, Weight) {
    let t = TauMap::new(id);
    for d in x_tau(id) {
        if let Some(q) = t.preimage(w - d, 1) {
            return (d, q);
        }
    }
    unreachable!("X_tau is a full set of coset representatives")
}

/// Splits an arbitrary weight as `Σ_{i<r} τ^i d_i + τ^r rest`.
pub fn tau_adic_split(id: SystemId, w: Weight, r: u32) -> (TauDigits, Weight) {
    let mut cur = w;
    let mut digits = Vec::with_capacity(r as usize);
    for _ in 0..r {
        let (d, q) = peel_digit(id, cur);
        digits.push(d);
        cur = q;
    }
    (TauDigits { digits, r }, cur)
}

pub fn tau_adic_digits(id: SystemId, w: Weight, r: u32) -> Result<TauDigits> {
    if !is_r_half_restricted(id, w, r) {
        return Err(Error::NotRestricted { weight: w, set: format!("X_{{{r}/2}}") });
    }
    let (digits, rest) = tau_adic_split(id, w, r);
    debug_assert!(rest.is_zero());
    Ok(digits)
}

fn check_odd(r: u32) -> Result<()> {
    if r % 2 == 1 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("r must be odd, got {r}")))
    }
}

/// The weight whose digit i is digit `(i + r − n) mod r` of `w`.
pub fn rotate_digits(id: SystemId, w: Weight, n: u32, r: u32) -> Result<Weight> {
    check_odd(r)?;
    if n >= r {
        return Err(Error::InvalidParameter(format!("rotation {n} out of range for r={r}")));
    }
    let digits = tau_adic_digits(id, w, r)?;
    Ok(rotate_sequence(&digits, n).recompose(id))
}

pub fn rotate_sequence(d: &TauDigits, n: u32) -> TauDigits {
    let r = d.r as usize;
    let n = n as usize;
    TauDigits { digits: (0..r).map(|i| d.digits[(i + r - n) % r]).collect(), r: d.r }
}

/// The rotation that moves the first differing digit of `a` and `b` to index 2s−7.
pub fn select_rotation(id: SystemId, a: Weight, b: Weight, r: u32) -> Result<u32> {
    check_odd(r)?;
    let s = (r - 1) / 2;
    if s < 7 {
        return Err(Error::InvalidParameter(format!("need s >= 7, got s={s}")));
    }
    if a == b {
        return Err(Error::EqualWeights);
    }
    let da = tau_adic_digits(id, a, r)?;
    let db = tau_adic_digits(id, b, r)?;
    let i = (0..r as usize).find(|&i| da.digits[i] != db.digits[i]).unwrap() as u32;
    let target = 2 * s - 7;
    let n = if i <= target { target - i } else { r + target - i };
    Ok(n % r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_examples() {
        let d = SystemId::C2.data();
        assert_eq!(tau(SystemId::C2, d.omega(1)), d.omega(2));
        assert_eq!(tau(SystemId::C2, d.omega(2)), 2 * d.omega(1));
        let f = SystemId::F4.data();
        let t = tau(SystemId::F4, f.omega(3) + f.omega(4));
        assert_eq!(t, f.omega(1) + f.omega(2));
        assert_eq!(f.pair_alpha0(t), 6);
    }

    #[test]
    fn preimage_examples() {
        let d = SystemId::C2.data();
        let beta2 = d.beta(2);
        assert_eq!(beta2, d.omega(2));
        assert_eq!(tau_preimage(SystemId::C2, beta2, 1), Some(d.omega(1)));
        assert_eq!(tau_preimage(SystemId::C2, d.w(&[3, -1]), 1), None);
        assert_eq!(tau_preimage(SystemId::C2, d.zero(), 5), Some(d.zero()));
    }

    #[test]
    fn restricted_sets() {
        let c2 = SystemId::C2.data();
        assert_eq!(x_tau(SystemId::C2), vec![c2.zero(), c2.omega(1)]);
        assert!(is_r_half_restricted(SystemId::C2, 2 * c2.omega(1), 3));
        let f4 = SystemId::F4.data();
        assert_eq!(
            x_tau(SystemId::F4),
            vec![f4.zero(), f4.omega(4), f4.omega(3), f4.omega(3) + f4.omega(4)]
        );
        assert_eq!(restricted_weights(SystemId::F4, 3).len(), 64);
        assert_eq!(restricted_weights(SystemId::F4, 7).len(), 1 << 14);
    }

    #[test]
    fn digit_examples() {
        let id = SystemId::C2;
        let d = id.data();
        let digits = tau_adic_digits(id, d.omega(1) + d.omega(2), 3).unwrap();
        assert_eq!(digits.digits, vec![d.omega(1), d.omega(1), d.zero()]);
        for s in 1..5u32 {
            let r = 2 * s + 1;
            let dg = tau_adic_digits(id, (1 << s) * d.omega(1), r).unwrap();
            for (i, x) in dg.digits.iter().enumerate() {
                assert_eq!(*x, if i as u32 == 2 * s { d.omega(1) } else { d.zero() });
            }
        }
        assert_eq!(rotate_digits(id, d.omega(1), 1, 3), Ok(d.omega(2)));
        assert_eq!(rotate_digits(id, d.omega(1), 0, 3), Ok(d.omega(1)));
        assert!(tau_adic_digits(id, d.w(&[4, 0]), 3).is_err());
    }

    #[test]
    fn rotation_choice() {
        let id = SystemId::C2;
        let d = id.data();
        let r = 15;
        let t = TauMap::new(id);
        let at = |i: u32| t.pow(d.omega(1), i);
        // first difference at digit 7, 0, 10
        assert_eq!(select_rotation(id, at(7), d.zero(), r), Ok(0));
        assert_eq!(select_rotation(id, at(0), d.zero(), r), Ok(7));
        assert_eq!(select_rotation(id, at(10), d.zero(), r), Ok(12));
        assert_eq!(select_rotation(id, d.zero(), d.zero(), r), Err(Error::EqualWeights));
    }
}
