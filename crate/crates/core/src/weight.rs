//! Integral weights in the fundamental-weight basis.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 4;

/// A weight `Σ c_i ω_i`. Unused trailing slots are always zero, so the derived
/// order is lexicographic on the coefficients.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    rank: u8,
    c: [i64; MAX_RANK],
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} too large");
        Weight { rank: rank as u8, c: [0; MAX_RANK] }
    }

    pub fn new(coeffs: &[i64]) -> Self {
        let mut w = Self::zero(coeffs.len());
        w.c[..coeffs.len()].copy_from_slice(coeffs);
        w
    }

    /// The fundamental weight ω_i, with `i` counted from 1.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i));
        let mut w = Self::zero(rank);
        w.c[i - 1] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.c[..self.rank as usize]
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coeffs()[i]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    /// Non-negative in every coordinate, i.e. dominant.
    pub fn is_dominant(&self) -> bool {
        self.coeffs().iter().all(|&x| x >= 0)
    }

    pub fn all_divisible_by(&self, d: i64) -> bool {
        self.coeffs().iter().all(|&x| x % d == 0)
    }

    /// Exact division; `None` unless every coordinate is divisible by `d`.
    pub fn div_exact(&self, d: i64) -> Option<Self> {
        if !self.all_divisible_by(d) {
            return None;
        }
        let mut w = *self;
        for x in w.c.iter_mut() {
            *x /= d;
        }
        Some(w)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: rank, got: self.rank() })
        }
    }

    /// Parses `a,b[,c,d]`.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidParameter(format!("bad weight {s:?}: {e}")))?;
        if coeffs.is_empty() || coeffs.len() > MAX_RANK {
            return Err(Error::InvalidParameter(format!("bad weight {s:?}")));
        }
        Ok(Self::new(&coeffs))
    }

    fn zip(self, o: Self, f: impl Fn(i64, i64) -> i64) -> Self {
        assert_eq!(self.rank, o.rank, "rank mismatch in weight arithmetic");
        let mut w = self;
        for (x, y) in w.c.iter_mut().zip(o.c) {
            *x = f(*x, y);
        }
        w
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        self.zip(o, |a, b| a + b)
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, o: Weight) {
        *self = *self + o;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        self.zip(o, |a, b| a - b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::zero(self.rank()) - self
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        let mut out = w;
        for x in out.c.iter_mut() {
            *x *= self;
        }
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.coeffs().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.rank()))?;
        for x in self.coeffs() {
            seq.serialize_element(x)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Weight;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a list of at most {MAX_RANK} integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Weight, A::Error> {
                let mut v = Vec::new();
                while let Some(x) = seq.next_element::<i64>()? {
                    if v.len() == MAX_RANK {
                        return Err(de::Error::invalid_length(v.len() + 1, &self));
                    }
                    v.push(x);
                }
                Ok(Weight::new(&v))
            }
        }
        de.deserialize_seq(V)
    }
}
