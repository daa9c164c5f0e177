//! Parameter exploration: separable-code parameter rows (n, m, l, r) with
//! the design-distance floor, the dimension lower bound n − mr, and the
//! Classic-McEliece-style public key size ⌈(nmr − m²r²)/8⌉, plus the
//! built-in nine-row published table with its one flagged discrepancy.

use num_bigint::BigUint;

use crate::code::{max_length, public_key_bytes, BoundRatio};
use crate::error::{Error, Result};
use crate::galois::FieldCtx;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamRow {
    pub n: u64,
    pub m: u64,
    pub l: u64,
    pub r: u64,
}

#[derive(Clone, Debug)]
pub struct ParamRowOut {
    pub row: ParamRow,
    /// n − m·r, the dimension lower bound.
    pub k_lower: u64,
    /// Floor of the applicable design distance (2r+1)/l.
    pub d_floor: u64,
    /// ⌈(nmr − m²r²)/8⌉.
    pub pk_bytes: u64,
    /// n exceeds the locator supply Σ_{t≤l} I_q(t).
    pub infeasible: bool,
    /// A published value that disagrees with the formula, when reproducing
    /// the built-in table.
    pub flagged_published_pk: Option<u64>,
}

/// The nine built-in published rows as (n, m, l, r, published pk bytes).
pub const TABLE1: [(u64, u64, u64, u64, u64); 9] = [
    (3488, 12, 1, 64, 261_120),
    (3488, 7, 2, 64, 170_240),
    (3488, 7, 2, 129, 291_782),
    (6960, 13, 1, 119, 1_047_319),
    (6960, 7, 2, 119, 637_974),
    (6960, 5, 3, 358, 1_156_788),
    (8192, 13, 1, 128, 1_357_824),
    (8192, 7, 2, 128, 817_152),
    (8192, 2, 8, 832, 1_357_824),
];

pub fn paper_table1_rows() -> Vec<ParamRow> {
    TABLE1
        .iter()
        .map(|&(n, m, l, r, _)| ParamRow { n, m, l, r })
        .collect()
}

fn eval_row(row: ParamRow, published: Option<u64>) -> Result<ParamRowOut> {
    if row.n <= row.m * row.r {
        return Err(Error::InvalidParameter(format!(
            "row (n={}, m={}, l={}, r={}) needs n > m·r",
            row.n, row.m, row.l, row.r
        )));
    }
    if row.l < 1 {
        return Err(Error::InvalidParameter("l must be >= 1".into()));
    }
    let pk_bytes = public_key_bytes(row.n, row.m, row.r)?;
    let ctx = FieldCtx::new(row.m as u32)?;
    let infeasible = BigUint::from(row.n) > max_length(row.l as usize, &ctx);
    let flagged_published_pk = published.filter(|&p| p != pk_bytes);
    Ok(ParamRowOut {
        row,
        k_lower: row.n - row.m * row.r,
        d_floor: BoundRatio::new(2 * row.r + 1, row.l).floor(),
        pk_bytes,
        infeasible,
        flagged_published_pk,
    })
}

pub fn param_table(rows: &[ParamRow]) -> Result<Vec<ParamRowOut>> {
    rows.iter().map(|&row| eval_row(row, None)).collect()
}

/// The built-in table, each row checked against its published value.
pub fn paper_table1() -> Result<Vec<ParamRowOut>> {
    TABLE1
        .iter()
        .map(|&(n, m, l, r, published)| eval_row(ParamRow { n, m, l, r }, Some(published)))
        .collect()
}

pub fn render_text(rows: &[ParamRowOut]) -> String {
    let mut out = String::new();
    out.push_str("n      k>=    m   l  r    d    pk_bytes\n");
    for r in rows {
        out.push_str(&format!(
            "{:<6} {:<6} {:<3} {:<2} {:<4} {:<4} {}{}{}\n",
            r.row.n,
            r.k_lower,
            r.row.m,
            r.row.l,
            r.row.r,
            r.d_floor,
            r.pk_bytes,
            match r.flagged_published_pk {
                Some(p) => format!("  [DISCREPANCY: published value {p}]"),
                None => String::new(),
            },
            if r.infeasible {
                "  [WARNING: n exceeds the locator supply for this l]"
            } else {
                ""
            }
        ));
    }
    out
}

pub fn render_csv(rows: &[ParamRowOut]) -> String {
    let mut out = String::from("n,k_lower,m,l,r,d_floor,pk_bytes,published_pk,infeasible\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.row.n,
            r.k_lower,
            r.row.m,
            r.row.l,
            r.row.r,
            r.d_floor,
            r.pk_bytes,
            r.flagged_published_pk
                .map(|p| p.to_string())
                .unwrap_or_default(),
            r.infeasible
        ));
    }
    out
}
