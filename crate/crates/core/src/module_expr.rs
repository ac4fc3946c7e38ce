//! Canonical symbolic expressions for cohomology answers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SummandKind {
    Line,
    Simple,
    Costandard,
    Indecomposable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IndecomposableTag {
    #[serde(rename = "M_C2")]
    MC2,
    #[serde(rename = "M_G2")]
    MG2,
    #[serde(rename = "M_F4")]
    MF4,
    /// The module with head k_{α1} and socle k from the C2 second-cohomology lemma.
    #[serde(rename = "M_BNP_C2")]
    MBnpC2,
}

impl IndecomposableTag {
    pub fn name(self) -> &'static str {
        match self {
            IndecomposableTag::MC2 => "M_C2",
            IndecomposableTag::MG2 => "M_G2",
            IndecomposableTag::MF4 => "M_F4",
            IndecomposableTag::MBnpC2 => "M",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Summand {
    pub kind: SummandKind,
    /// Highest weight, or the tensoring line for an indecomposable.
    pub weight: Weight,
    /// Twist by τ^m.
    pub twist_halves: u32,
    pub tag: Option<IndecomposableTag>,
}

impl Summand {
    pub fn line(weight: Weight, twist_halves: u32) -> Self {
        Summand { kind: SummandKind::Line, weight, twist_halves, tag: None }
    }

    pub fn simple(weight: Weight) -> Self {
        Summand { kind: SummandKind::Simple, weight, twist_halves: 0, tag: None }
    }

    pub fn trivial(rank: usize) -> Self {
        Self::simple(Weight::zero(rank))
    }

    pub fn costandard(weight: Weight) -> Self {
        Summand { kind: SummandKind::Costandard, weight, twist_halves: 0, tag: None }
    }

    pub fn indecomposable(tag: IndecomposableTag, shift: Weight, twist_halves: u32) -> Self {
        Summand { kind: SummandKind::Indecomposable, weight: shift, twist_halves, tag: Some(tag) }
    }
}

fn twist_suffix(m: u32) -> String {
    match m {
        0 => String::new(),
        m if m % 2 == 0 => format!("^({})", m / 2),
        m => format!("^({m}/2)"),
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = twist_suffix(self.twist_halves);
        match self.kind {
            SummandKind::Line => write!(f, "k{}{t}", self.weight),
            SummandKind::Simple if self.weight.is_zero() => write!(f, "k"),
            SummandKind::Simple => write!(f, "L{}{t}", self.weight),
            SummandKind::Costandard => write!(f, "H0{}{t}", self.weight),
            SummandKind::Indecomposable => {
                let name = self.tag.map_or("M?", IndecomposableTag::name);
                if self.weight.is_zero() {
                    write!(f, "{name}{t}")
                } else {
                    write!(f, "{name}{t} (x) k{}{t}", self.weight)
                }
            }
        }
    }
}

/// A direct sum, kept sorted; the empty sum is the zero module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleExpr {
    summands: Vec<Summand>,
}

impl ModuleExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_summands(mut summands: Vec<Summand>) -> Self {
        summands.sort();
        ModuleExpr { summands }
    }

    pub fn single(s: Summand) -> Self {
        ModuleExpr { summands: vec![s] }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn direct_sum(&self, other: &ModuleExpr) -> ModuleExpr {
        Self::from_summands(self.summands.iter().chain(&other.summands).copied().collect())
    }

    pub fn map(&self, f: impl Fn(Summand) -> Summand) -> ModuleExpr {
        Self::from_summands(self.summands.iter().map(|&s| f(s)).collect())
    }

    /// Tensor every Line and indecomposable with the line `λ` (inside the twist).
    pub fn shift(&self, by: Weight) -> ModuleExpr {
        self.map(|s| match s.kind {
            SummandKind::Line | SummandKind::Indecomposable => Summand { weight: s.weight + by, ..s },
            _ => s,
        })
    }

    pub fn twist(&self, m: u32) -> ModuleExpr {
        self.map(|s| Summand { twist_halves: s.twist_halves + m, ..s })
    }

    pub fn untwist(&self, m: u32) -> Result<ModuleExpr> {
        if let Some(s) = self.summands.iter().find(|s| s.twist_halves < m) {
            return Err(Error::Untwist { by: m, has: s.twist_halves });
        }
        Ok(self.map(|s| Summand { twist_halves: s.twist_halves - m, ..s }))
    }

    /// Highest weights of all summands (the tensoring line for indecomposables).
    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        self.summands.iter().map(|s| s.weight)
    }
}

impl fmt::Display for ModuleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// An answer together with the table row that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyAnswer {
    pub expr: ModuleExpr,
    pub case_fired: String,
    pub matched_params: BTreeMap<String, String>,
}

impl CohomologyAnswer {
    pub const ZERO_CASE: &'static str = "zero";

    pub fn zero() -> Self {
        CohomologyAnswer { expr: ModuleExpr::zero(), case_fired: Self::ZERO_CASE.into(), matched_params: BTreeMap::new() }
    }

    /// A fired case. If the expression nonetheless vanishes the label becomes
    /// "zero" and the original label is kept under `reduced_from`.
    pub fn new(case: impl Into<String>, expr: ModuleExpr, params: BTreeMap<String, String>) -> Self {
        let case = case.into();
        if expr.is_zero() {
            let mut matched_params = params;
            matched_params.insert("reduced_from".into(), case);
            return CohomologyAnswer { expr, case_fired: Self::ZERO_CASE.into(), matched_params };
        }
        CohomologyAnswer { expr, case_fired: case, matched_params: params }
    }

    pub fn is_zero(&self) -> bool {
        self.expr.is_zero()
    }
}

impl fmt::Display for CohomologyAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.expr, self.case_fired)
    }
}

/// Builds a parameter map from `(key, value)` pairs.
pub fn params<I, K, V>(items: I) -> BTreeMap<String, String>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: ToString,
{
    items.into_iter().map(|(k, v)| (k.into(), v.to_string())).collect()
}
