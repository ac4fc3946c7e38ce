//! Closed-form cohomology tables and the oracles that cross-check them.

pub mod b_level;
pub mod b_tau;
pub mod g_level;
pub mod h2;
pub mod printed;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::isogeny::{is_r_half_restricted, TauMap};
use crate::lattice::SystemId;
use crate::module_expr::{CohomologyAnswer, IndecomposableTag, ModuleExpr};
use crate::weight::Weight;

pub use b_level::{h1_b_r2, h1_b_r2_general, h1_b_s_classical};
pub use b_tau::{h1_b_tau_criterion, h1_b_tau_general, h1_b_tau_table};
pub use g_level::{h1_g_r2_h0, h1_g_r2_h0_general, h1_g_r2_l, h1_g_s_l};
pub use h2::{h2_b_s_c2_classify, H2Verdict};

/// One nonzero row of a closed-form table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub weight: Weight,
    pub expr: ModuleExpr,
    pub label: String,
    pub params: BTreeMap<String, String>,
}

impl Row {
    pub fn answer(&self) -> CohomologyAnswer {
        CohomologyAnswer::new(self.label.clone(), self.expr.clone(), self.params.clone())
    }
}

pub fn lookup(rows: &[Row], w: Weight) -> CohomologyAnswer {
    rows.iter().find(|r| r.weight == w).map_or_else(CohomologyAnswer::zero, Row::answer)
}

/// Per-type data shared by the B- and G-level tables.
pub(crate) struct Shape {
    /// Index of the simple root whose top-degree row produces the indecomposable.
    pub m_root: usize,
    /// The ω with `τ^r ω − τ^{2s−1} α_m` restricted.
    pub m_omega: Weight,
    pub m_tag: IndecomposableTag,
    /// Highest weight of the module induced from the indecomposable.
    pub m_induced: Weight,
    /// Simple roots whose top-degree row is a line.
    pub k_roots: Vec<usize>,
    /// `(β index, ω index)` pairs for the rows `τ^r ω − β`.
    pub beta_rows: Vec<(usize, usize)>,
}

pub(crate) fn shape(id: SystemId) -> Shape {
    let d = id.data();
    match id {
        SystemId::C2 | SystemId::G2 => Shape {
            m_root: 2,
            m_omega: d.omega(2) - d.omega(1),
            m_tag: if id == SystemId::C2 { IndecomposableTag::MC2 } else { IndecomposableTag::MG2 },
            m_induced: d.omega(1),
            k_roots: vec![1],
            beta_rows: vec![(2, 1), (1, 2)],
        },
        SystemId::F4 => Shape {
            m_root: 2,
            m_omega: d.omega(2) - d.omega(3),
            m_tag: IndecomposableTag::MF4,
            m_induced: d.omega(4),
            k_roots: vec![1, 3, 4],
            beta_rows: vec![(2, 1), (1, 2), (3, 3), (4, 4)],
        },
    }
}

/// `τ^r ω − τ^j ζ`.
pub fn tau_form(id: SystemId, r: u32, omega: Weight, j: u32, zeta: Weight) -> Weight {
    let t = TauMap::new(id);
    t.pow(omega, r) - t.pow(zeta, j)
}

pub(crate) fn pw(p: i64, e: u32) -> i64 {
    p.pow(e)
}

pub(crate) fn require_restricted(id: SystemId, w: Weight, r: u32) -> Result<()> {
    w.check_rank(id.rank())?;
    if is_r_half_restricted(id, w, r) {
        Ok(())
    } else {
        let set = if r % 2 == 0 { format!("X_{}", r / 2) } else { format!("X_{{{r}/2}}") };
        Err(Error::NotRestricted { weight: w, set })
    }
}

pub(crate) fn require_odd(r: u32) -> Result<u32> {
    if r % 2 == 1 {
        Ok((r - 1) / 2)
    } else {
        Err(Error::InvalidParameter(format!("r must be odd, got {r}")))
    }
}
