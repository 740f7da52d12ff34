use serde::{Deserialize, Serialize};

use super::{best_known_bound, bound_from_theorem, BoundResult, Theorem};
use crate::error::{Error, Result};
use crate::quadruple::{evaluate_family, Family};

/// Earlier bounds obtained with other counting arguments; echoed for
/// comparison and never recomputed.
pub const HISTORICAL_KS: &[(usize, &str)] =
    &[(9, "8.0838"), (10, "9.0793"), (15, "14.0610"), (20, "19.0490")];

pub const HISTORICAL_KR: &[(usize, &str)] = &[
    (5, "4.0984"),
    (6, "5.1053"),
    (7, "6.1149"),
    (8, "7.1128"),
    (9, "8.1094"),
    (10, "9.1055"),
    (15, "14.0864"),
    (20, "19.0719"),
];

fn historical(table: &[(usize, &str)], k: usize) -> Option<String> {
    table.iter().find(|(kk, _)| *kk == k).map(|(_, v)| v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: usize,
    pub gallai: BoundResult,
    pub ks: Option<String>,
    pub kr: Option<String>,
    pub cr: Option<BoundResult>,
    pub r: BoundResult,
    pub here: BoundResult,
}

pub fn reproduce_table(ks: &[usize]) -> Result<Vec<TableRow>> {
    ks.iter()
        .map(|&k| {
            if k < 4 {
                return Err(Error::KTooSmall { k, min: 4 });
            }
            let gallai = bound_from_theorem(&evaluate_family(Family::Gallai, k, None)?, Theorem::T4z0)?;
            let cr = match k {
                4 => None,
                5 | 6 => Some(bound_from_theorem(
                    &evaluate_family(Family::Cr, k, None)?,
                    Theorem::T5z0,
                )?),
                _ => Some(bound_from_theorem(
                    &evaluate_family(Family::Cr, k, None)?,
                    Theorem::T7z0,
                )?),
            };
            let r = bound_from_theorem(&evaluate_family(Family::R, k, None)?, Theorem::T4)?;
            Ok(TableRow {
                k,
                gallai,
                ks: historical(HISTORICAL_KS, k),
                kr: historical(HISTORICAL_KR, k),
                cr,
                r,
                here: best_known_bound(k)?,
            })
        })
        .collect()
}

pub fn render_table_text(rows: &[TableRow]) -> String {
    let dash = || "---".to_string();
    let mut lines = vec![format!(
        "{:>3}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}",
        "k", "Gallai", "KS*", "KR*", "CR", "R", "Here"
    )];
    for row in rows {
        lines.push(format!(
            "{:>3}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}",
            row.k,
            row.gallai.decimal,
            row.ks.clone().unwrap_or_else(dash),
            row.kr.clone().unwrap_or_else(dash),
            row.cr.as_ref().map(|b| b.decimal.clone()).unwrap_or_else(dash),
            row.r.decimal,
            row.here.decimal,
        ));
    }
    lines.push("* historical values, not recomputed".into());
    lines.join("\n") + "\n"
}
