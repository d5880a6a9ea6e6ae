//! Re-derivation of every stored spectrum table from the production
//! rules it claims to follow.
//!
//! Each check recomputes one table from scratch (filling arithmetic,
//! residue coverage, transversal-design composition, patched-group size
//! sets) and compares against the stored rows.  A mismatch means the
//! data and the rules have drifted apart and is reported rather than
//! papered over.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::facts::{catalog_no_olp_values, k5_family_no_olp};
use super::tables::{
    ResidueRow, K5_BASE, NO_OLP_BASIC_INGREDIENTS, NO_OLP_BASIC_ROWS, NO_OLP_FULL_ROWS,
    NO_OLP_OPEN, NO_OLP_PATCH_INGREDIENTS, ONE_OLP_INGREDIENTS, ONE_OLP_ROWS, TD_PLAN_ROWS,
    W10_EXPECTED, W40_EXPECTED,
};
use super::{ingredient_check, largest_gap, plan_construction53, recipe_check};
use crate::construct::{m10_set, m40_set};
use crate::error::{Error, Result};

/// Outcome of one replay check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn run(name: &str, body: impl FnOnce() -> Result<String>) -> CheckResult {
    match body() {
        Ok(detail) => CheckResult {
            name: name.to_owned(),
            pass: true,
            detail,
        },
        Err(e) => CheckResult {
            name: name.to_owned(),
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn mismatch(msg: String) -> Error {
    Error::Recipe(msg)
}

fn check_rows(rows: &[ResidueRow]) -> Result<String> {
    for row in rows {
        recipe_check(row)?;
    }
    Ok(format!("{} rows", rows.len()))
}

/// Is r covered by a residue row table.
fn row_covered(rows: &[ResidueRow], r: usize) -> bool {
    rows.iter()
        .any(|row| r % 44 == row.rho && r >= 44 * row.w_min + row.s)
}

/// s values known to support an OLP-free geometry with block size 5:
/// the catalog bases and the two uniform-filling families.
fn k5_known(r: usize) -> bool {
    K5_BASE.contains(&r) || k5_family_no_olp(r)
}

/// All replay checks, in table order.
pub fn replay_all() -> Vec<CheckResult> {
    let catalog4: BTreeSet<usize> = catalog_no_olp_values(4).into_iter().collect();

    let mut results = vec![
        run("rows-no-olp-basic", || check_rows(&NO_OLP_BASIC_ROWS)),
        run("rows-no-olp-full", || check_rows(&NO_OLP_FULL_ROWS)),
        run("rows-one-olp", || check_rows(&ONE_OLP_ROWS)),
        run("gap-no-olp-basic", || {
            let gap = largest_gap(&NO_OLP_BASIC_ROWS);
            if gap == 920 {
                Ok("largest unreached r = 920".into())
            } else {
                Err(mismatch(format!("largest unreached r = {gap}, recorded as 920")))
            }
        }),
        run("gap-one-olp", || {
            let gap = largest_gap(&ONE_OLP_ROWS);
            if gap == 9172 {
                Ok("largest unreached r = 9172".into())
            } else {
                Err(mismatch(format!("largest unreached r = {gap}, recorded as 9172")))
            }
        }),
    ];

    // Ingredient tables, with fillers drawn from the catalog and from
    // rows already checked.
    let mut known4 = catalog4.clone();
    results.push(run("ingredients-no-olp", || {
        for table in [&NO_OLP_BASIC_INGREDIENTS[..], &NO_OLP_PATCH_INGREDIENTS[..]] {
            for row in table {
                ingredient_check(row)?;
                for (role, value) in [("u-group filler", row.p), ("patched filler", row.q)] {
                    if !known4.contains(&value) {
                        return Err(mismatch(format!(
                            "ingredient r = {}: {role} {value} is not a known OLP-free geometry",
                            row.r
                        )));
                    }
                }
                known4.insert(row.r);
            }
        }
        Ok(format!(
            "{} + {} rows",
            NO_OLP_BASIC_INGREDIENTS.len(),
            NO_OLP_PATCH_INGREDIENTS.len()
        ))
    }));

    results.push(run("row-fillers-no-olp", || {
        let basic: BTreeSet<usize> = catalog4
            .iter()
            .copied()
            .chain(NO_OLP_BASIC_INGREDIENTS.iter().map(|row| row.r))
            .collect();
        for row in NO_OLP_BASIC_ROWS.iter() {
            if !basic.contains(&row.s) {
                return Err(mismatch(format!(
                    "row residue {}: filler replication {} not in catalog or basic ingredients",
                    row.rho, row.s
                )));
            }
        }
        for row in NO_OLP_FULL_ROWS.iter() {
            if !known4.contains(&row.s) {
                return Err(mismatch(format!(
                    "row residue {}: filler replication {} unaccounted",
                    row.rho, row.s
                )));
            }
        }
        Ok("44 rows".into())
    }));

    results.push(run("ingredients-one-olp", || {
        let mut one = BTreeSet::from([1usize]);
        for row in ONE_OLP_INGREDIENTS.iter() {
            ingredient_check(row)?;
            if row.q != 1 {
                return Err(mismatch(format!(
                    "ingredient r = {}: patched filler must be the degenerate geometry, got {}",
                    row.r, row.q
                )));
            }
            if !known4.contains(&row.p) {
                return Err(mismatch(format!(
                    "ingredient r = {}: u-group filler {} is not a known OLP-free geometry",
                    row.r, row.p
                )));
            }
            one.insert(row.r);
        }
        for row in ONE_OLP_ROWS.iter() {
            if !one.contains(&row.s) {
                return Err(mismatch(format!(
                    "row residue {}: filler replication {} unaccounted",
                    row.rho, row.s
                )));
            }
        }
        Ok(format!("{} rows", ONE_OLP_INGREDIENTS.len()))
    }));

    results.push(run("coverage-no-olp", || {
        let open: BTreeSet<usize> = (6..3000)
            .filter(|&r| r % 4 <= 1)
            .filter(|&r| !known4.contains(&r) && !row_covered(&NO_OLP_FULL_ROWS, r))
            .collect();
        let recorded: BTreeSet<usize> = NO_OLP_OPEN.iter().copied().collect();
        if open == recorded {
            Ok(format!("{} open values match", open.len()))
        } else {
            let extra: Vec<_> = open.difference(&recorded).collect();
            let missing: Vec<_> = recorded.difference(&open).collect();
            Err(mismatch(format!(
                "open set mismatch: unexpected {extra:?}, unreached {missing:?}"
            )))
        }
    }));

    results.push(run("td-compositions", || {
        let mut acc: BTreeSet<usize> = BTreeSet::new();
        for row in TD_PLAN_ROWS.iter() {
            let known = |s: usize| acc.contains(&s) || k5_known(s);
            if !known(row.r0) {
                return Err(mismatch(format!(
                    "row g = {}, u = {}, q = {}: base replication {} unaccounted",
                    row.g, row.u, row.q, row.r0
                )));
            }
            let out = plan_construction53(row.g, row.u, row.q, row.r0, known)?;
            for &r in row.rs {
                if !out.contains(&r) {
                    return Err(mismatch(format!(
                        "row g = {}, u = {}, q = {}: listed r = {r} not reproduced",
                        row.g, row.u, row.q
                    )));
                }
            }
            acc.extend(row.rs.iter().copied());
        }
        Ok(format!("{} rows", TD_PLAN_ROWS.len()))
    }));

    results.push(run("patched-group-40", || {
        for &(r0, expected) in W40_EXPECTED.iter() {
            let q = 2 * r0 + 3;
            let got = regenerate(&m40_set(2, q)?, 40 * r0 + 60);
            if got != expected {
                return Err(mismatch(format!("base {r0}: regenerated {got:?}")));
            }
        }
        Ok(format!("{} bases", W40_EXPECTED.len()))
    }));

    results.push(run("patched-group-10", || {
        for &(r0, expected) in W10_EXPECTED.iter() {
            let q = (4 * r0 + 6) / 10;
            let got = regenerate(&m10_set(10, q)?, 10 * r0 + 15);
            if got != expected {
                return Err(mismatch(format!("base {r0}: regenerated {got:?}")));
            }
        }
        Ok(format!("{} bases", W10_EXPECTED.len()))
    }));

    results
}

/// New replication numbers from one patched-group size set: offset + s
/// for each integral s = (m - 6)/4 with a known filler, keeping only
/// values the uniform families do not already provide.
fn regenerate(m_values: &BTreeSet<usize>, offset: usize) -> Vec<usize> {
    m_values
        .iter()
        .filter(|&&m| m >= 6 && (m - 6) % 4 == 0)
        .map(|&m| (m - 6) / 4)
        .filter(|&s| k5_known(s))
        .map(|s| offset + s)
        .filter(|&r| !k5_family_no_olp(r))
        .collect()
}

/// Runs every check and reports the failures, if any.
pub fn replay_ok() -> Result<()> {
    let failures: Vec<String> = replay_all()
        .into_iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::Recipe(failures.join("; ")))
    }
}
