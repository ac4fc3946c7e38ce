//! Literal transcriptions of the printed coefficient forms and τ-labels of the
//! B_{r/2} and induced G_{r/2} tables, for reporting where they disagree with
//! the τ-arithmetic.

use serde::Serialize;

use crate::lattice::SystemId;
use crate::weight::Weight;

use super::{pw, tau_form};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Zeta {
    Beta(usize),
    /// `τ^{2s−1} α_j`
    TopAlpha(usize),
    /// `τ^{2i+1} α_j`
    OddAlpha(usize),
}

/// `τ^r ω − ζ` with ω given by its coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TauLabel {
    pub omega: [i64; 4],
    pub zeta: Zeta,
}

impl TauLabel {
    pub fn eval(&self, id: SystemId, s: u32, i: u32) -> Weight {
        let d = id.data();
        let r = 2 * s + 1;
        let omega = Weight::new(&self.omega[..id.rank()]);
        match self.zeta {
            Zeta::Beta(b) => tau_form(id, r, omega, 0, d.beta(b)),
            Zeta::TopAlpha(j) => tau_form(id, r, omega, 2 * s - 1, d.simple_root(j)),
            Zeta::OddAlpha(j) => tau_form(id, r, omega, 2 * i + 1, d.simple_root(j)),
        }
    }

    pub fn indexed(&self) -> bool {
        matches!(self.zeta, Zeta::OddAlpha(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrintedTable {
    /// H¹(B_{r/2}, λ)
    Borel,
    /// H¹(G_{r/2}, H⁰(λ))
    Induced,
}

pub struct PrintedRow {
    pub table: PrintedTable,
    pub row: usize,
    pub coeffs: fn(u32, u32) -> Vec<i64>,
    pub printed_label: TauLabel,
    pub resolved_label: TauLabel,
    pub transcription: Option<&'static str>,
}

const fn lab(omega: [i64; 4], zeta: Zeta) -> TauLabel {
    TauLabel { omega, zeta }
}

const W1: [i64; 4] = [1, 0, 0, 0];
const W2: [i64; 4] = [0, 1, 0, 0];
const W3: [i64; 4] = [0, 0, 1, 0];
const W4: [i64; 4] = [0, 0, 0, 1];
const W2_MINUS_W1: [i64; 4] = [-1, 1, 0, 0];
const W2_MINUS_W3: [i64; 4] = [0, 1, -1, 0];

fn p2(e: u32) -> i64 {
    pw(2, e)
}
fn p3(e: u32) -> i64 {
    pw(3, e)
}

fn row(table: PrintedTable, row: usize, coeffs: fn(u32, u32) -> Vec<i64>, l: TauLabel) -> PrintedRow {
    PrintedRow { table, row, coeffs, printed_label: l, resolved_label: l, transcription: None }
}

fn c2_rows(table: PrintedTable) -> Vec<PrintedRow> {
    use Zeta::*;
    vec![
        row(table, 1, |s, _| vec![0, p2(s) - 1], lab(W1, Beta(2))),
        row(table, 2, |s, _| vec![p2(s + 1) - 2, 1], lab(W2, Beta(1))),
        row(table, 3, |s, _| vec![p2(s), 0], lab(W1, TopAlpha(1))),
        row(table, 4, |_, _| vec![0, 0], lab(W2_MINUS_W1, TopAlpha(2))),
        row(table, 5, |s, i| vec![p2(i + 1), p2(s) - p2(i + 1)], lab(W1, OddAlpha(1))),
        row(table, 6, |s, i| vec![p2(s + 1) - p2(i + 2), p2(i + 1)], lab(W2, OddAlpha(2))),
    ]
}

fn g2_rows(table: PrintedTable) -> Vec<PrintedRow> {
    use Zeta::*;
    let mut v = vec![
        row(table, 1, |s, _| vec![1, p3(s) - 1], lab(W1, Beta(2))),
        row(table, 2, |s, _| vec![p3(s + 1) - 2, 1], lab(W2, Beta(1))),
        row(table, 3, |s, _| vec![p3(s), p3(s - 1)], lab(W1, TopAlpha(1))),
        row(table, 4, |s, _| vec![p3(s), 0], lab(W2_MINUS_W1, TopAlpha(2))),
    ];
    v.push(match table {
        PrintedTable::Borel => PrintedRow {
            transcription: Some("subscript printed as omega_12, read as omega_1"),
            ..row(table, 5, |s, i| vec![p3(i + 1), p3(s) - 2 * p3(i)], lab(W1, OddAlpha(1)))
        },
        PrintedTable::Induced => row(table, 5, |s, i| vec![p3(i + 1), p3(s + 1) - 2 * p3(i)], lab(W1, OddAlpha(1))),
    });
    v.push(row(table, 6, |s, i| vec![p3(s + 1) - 2 * p3(i + 1), p3(i + 1)], lab(W2, OddAlpha(2))));
    v
}

fn f4_rows(table: PrintedTable) -> Vec<PrintedRow> {
    use Zeta::*;
    let mut v = vec![
        row(table, 1, |s, _| vec![0, 0, 1, 2 * (p2(s) - 1)], lab(W1, Beta(2))),
        row(table, 2, |s, _| vec![0, 1, 2 * (p2(s) - 1), 1], lab(W2, Beta(1))),
        row(table, 3, |s, _| vec![1, p2(s) - 1, 0, 1], lab(W3, Beta(3))),
        row(table, 4, |s, _| vec![p2(s) - 1, 0, 0, 1], lab(W4, Beta(4))),
        row(table, 5, |s, _| vec![0, 0, p2(s), 0], lab(W1, TopAlpha(1))),
        row(table, 6, |s, _| vec![p2(s - 1), 0, p2(s), 0], lab(W3, TopAlpha(3))),
        row(table, 7, |s, _| vec![0, p2(s - 1), 0, 0], lab(W4, TopAlpha(4))),
        row(table, 8, |s, _| vec![0, 0, 0, p2(s)], lab(W2_MINUS_W3, TopAlpha(2))),
        row(table, 9, |s, i| vec![0, 0, p2(i + 1), p2(s + 1) - p2(i + 2)], lab(W1, OddAlpha(1))),
        row(table, 10, |s, i| vec![0, p2(i + 1), p2(s + 1) - p2(i + 2), p2(i + 1)], lab(W2, OddAlpha(2))),
    ];
    let r11: fn(u32, u32) -> Vec<i64> = |s, i| vec![p2(i), p2(s) - p2(i + 1), p2(i + 1), 0];
    v.push(match table {
        PrintedTable::Borel => PrintedRow {
            printed_label: lab(W2, OddAlpha(2)),
            ..row(table, 11, r11, lab(W3, OddAlpha(3)))
        },
        PrintedTable::Induced => row(table, 11, r11, lab(W3, OddAlpha(3))),
    });
    v.push(row(table, 12, |s, i| vec![p2(s) - p2(i + 1), p2(i), 0, 0], lab(W4, OddAlpha(4))));
    v
}

pub fn printed_rows(id: SystemId, table: PrintedTable) -> Vec<PrintedRow> {
    match id {
        SystemId::C2 => c2_rows(table),
        SystemId::G2 => g2_rows(table),
        SystemId::F4 => f4_rows(table),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum DiscrepancyKind {
    CoefficientForm,
    TauLabel,
    Transcription,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub table: PrintedTable,
    pub row: usize,
    pub kind: DiscrepancyKind,
    pub s: u32,
    pub i: Option<u32>,
    pub printed: Weight,
    pub resolved: Weight,
    pub detail: String,
}

/// Every printed form that disagrees with its τ-form at level `s`, plus
/// transcription notes. Indexed rows are evaluated for all `0 ≤ i ≤ s−2`.
pub fn discrepancies(id: SystemId, s: u32) -> Vec<Discrepancy> {
    assert!(s >= 1);
    let rank = id.rank();
    let mut out = Vec::new();
    for table in [PrintedTable::Borel, PrintedTable::Induced] {
        for pr in printed_rows(id, table) {
            let is: Vec<Option<u32>> =
                if pr.resolved_label.indexed() { (0..s.saturating_sub(1)).map(Some).collect() } else { vec![None] };
            if let Some(t) = pr.transcription {
                let i = is.first().copied().flatten();
                let c = Weight::new(&(pr.coeffs)(s, i.unwrap_or(0))[..rank]);
                out.push(Discrepancy {
                    table,
                    row: pr.row,
                    kind: DiscrepancyKind::Transcription,
                    s,
                    i,
                    printed: c,
                    resolved: pr.resolved_label.eval(id, s, i.unwrap_or(0)),
                    detail: t.into(),
                });
            }
            for i in is {
                let iv = i.unwrap_or(0);
                let resolved = pr.resolved_label.eval(id, s, iv);
                let coeff = Weight::new(&(pr.coeffs)(s, iv)[..rank]);
                if coeff != resolved {
                    out.push(Discrepancy {
                        table,
                        row: pr.row,
                        kind: DiscrepancyKind::CoefficientForm,
                        s,
                        i,
                        printed: coeff,
                        resolved,
                        detail: "printed coefficient form differs from the tau-form; tau-form used".into(),
                    });
                }
                let label = pr.printed_label.eval(id, s, iv);
                if pr.printed_label != pr.resolved_label || label != resolved {
                    out.push(Discrepancy {
                        table,
                        row: pr.row,
                        kind: DiscrepancyKind::TauLabel,
                        s,
                        i,
                        printed: label,
                        resolved,
                        detail: format!(
                            "printed label {:?} evaluates elsewhere; coefficient form matches {:?}",
                            pr.printed_label, pr.resolved_label
                        ),
                    });
                }
            }
        }
    }
    out
}
