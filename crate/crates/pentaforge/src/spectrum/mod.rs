//! Replication-number spectrum: admissibility arithmetic, the existence
//! registry, and replay of the recorded production-rule tables.
//!
//! The submodules split three concerns.  [`tables`] stores the recorded
//! residue rows, ingredient lists and worked examples as plain data.
//! [`facts`] turns those tables plus a handful of hard-coded results
//! into per-parameter existence answers.  [`replay`] re-derives every
//! table entry from the production-rule arithmetic and reports any
//! discrepancy, so the stored data can never drift from the rules.

pub mod facts;
pub mod replay;
pub mod tables;

pub use facts::{
    admissible, facts, k5_family_no_olp, Basis, ExistenceStatus, Status, VariantStatus,
};

use crate::construct::is_prime_power;
use crate::error::{Error, Result};
use tables::{IngredientRow, ResidueRow};

/// Replication number of the geometry obtained by filling all `n` groups
/// of a group divisible design with geometries of block size `k` whose
/// replication numbers sum to `r_sum`.
///
/// Each point keeps the lines of its own filler and picks up one line
/// through every one of the other `n - 1` groups' worth of blocks, which
/// works out to `(n - 1)(k + 1)/(k - 1)` extra lines per point.
pub fn theorem22_params(n: usize, r_sum: usize, k: usize) -> Result<usize> {
    if k < 2 || n == 0 {
        return Err(Error::Param(format!(
            "group filling needs k >= 2 and at least one group, got k = {k}, n = {n}"
        )));
    }
    let extra = (n - 1) * (k + 1);
    if extra % (k - 1) != 0 {
        return Err(Error::Param(format!(
            "(n - 1)(k + 1) = {extra} is not a multiple of k - 1 = {}",
            k - 1
        )));
    }
    Ok(r_sum + extra / (k - 1))
}

/// Outcome of replaying one residue row of the block size 4 tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecipeReport {
    pub rho: usize,
    pub s: usize,
    pub w_min: usize,
    pub t_min: usize,
    /// Group type of the design filled at width w: 3w groups of 44
    /// points and one group of 3s + 5.
    pub gdd_type_template: String,
    /// Smallest replication number the row produces.
    pub r_min: usize,
}

/// Check one residue row: filling 3w groups of size 44 with a geometry
/// of replication 13 and one group of size 3s + 5 with a geometry of
/// replication s must give replication 44w + s, the family residue must
/// match, and the stated t and w thresholds must describe the same set.
pub fn recipe_check(row: &ResidueRow) -> Result<RecipeReport> {
    let ResidueRow {
        rho,
        s,
        w_min,
        t_min,
    } = *row;
    if rho >= 44 || s % 44 != rho {
        return Err(Error::Recipe(format!(
            "row residue {rho}: s = {s} is not congruent to {rho} mod 44"
        )));
    }
    if t_min != w_min + (s - rho) / 44 {
        return Err(Error::Recipe(format!(
            "row residue {rho}: t >= {t_min} does not match w >= {w_min} with s = {s}"
        )));
    }
    for w in [w_min, w_min + 1, w_min + 7] {
        let r = theorem22_params(3 * w + 1, 39 * w + s, 4)?;
        if r != 44 * w + s {
            return Err(Error::Recipe(format!(
                "row residue {rho}: filling at w = {w} gives {r}, expected {}",
                44 * w + s
            )));
        }
    }
    Ok(RecipeReport {
        rho,
        s,
        w_min,
        t_min,
        gdd_type_template: format!("44^{{3w}} {}^1", 3 * s + 5),
        r_min: 44 * w_min + s,
    })
}

/// Check one ingredient row: filling u groups with a geometry of
/// replication p and one group with a geometry of replication q must
/// give the recorded replication r.
pub fn ingredient_check(row: &IngredientRow) -> Result<usize> {
    let IngredientRow { r, u, p, q } = *row;
    if u % 3 != 0 {
        return Err(Error::Recipe(format!(
            "ingredient r = {r}: group count u + 1 with u = {u} not a multiple of 3"
        )));
    }
    let got = theorem22_params(u + 1, u * p + q, 4)?;
    if got != r {
        return Err(Error::Recipe(format!(
            "ingredient row: u = {u}, p = {p}, q = {q} gives {got}, recorded as {r}"
        )));
    }
    Ok(r)
}

/// Largest replication number in an admissible residue class that a row
/// table fails to reach: one step below the smallest family member.
pub fn largest_gap(rows: &[ResidueRow]) -> usize {
    rows.iter()
        .map(|row| 44 * (row.t_min - 1) + row.rho)
        .max()
        .unwrap_or(0)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Search for the smallest pair (a, t) that produces a geometry with
/// exactly j opposite line pairs in the residue class rho mod 44.
///
/// The plan fills 12t + 1 - j groups with an OLP-free geometry of
/// replication a and j groups with a one-OLP geometry of the same
/// replication, so it needs t >= 1, 12t + 1 >= j, 12t + 1 coprime to 44,
/// the congruence (12t + 1)a + 20t = rho mod 44, and both variants of
/// the filler recorded as existing.  Returns None when rho is not an
/// admissible residue or the bounded search finds nothing.
pub fn plan_jolp(j: usize, rho: usize) -> Option<(usize, usize)> {
    if rho >= 44 || rho % 4 > 1 {
        return None;
    }
    for t in 1..=64usize {
        let groups = 12 * t + 1;
        if groups < j || gcd(groups, 44) != 1 {
            continue;
        }
        let inv = (1..44).find(|x| (groups * x) % 44 == 1)?;
        let target = (rho + 44 - (20 * t) % 44) % 44;
        let mut a = (target * inv) % 44;
        if a == 0 {
            a = 44;
        }
        while a <= 20_000 {
            let f = facts(4, a);
            if f.no_olp.status == Status::Exists && f.one_olp.status == Status::Exists {
                return Some((a, t));
            }
            a += 44;
        }
    }
    None
}

/// Candidate replication numbers from composing a transversal design of
/// order q with group weights g, a patched group, and u + 1 fillers.
///
/// The group weights force u >= 6 even, gu = 0 mod 4, g(u - 1) = 0 mod 3
/// and g^2 u(u + 1) = 0 mod 20; the base geometry needs gq = 6 or 10 mod
/// 20 with replication r0 = (gq - 6)/4.  The patched group can take any
/// size m = jd + (q - j)g with d = g(u - 1)/3, and contributes a filler
/// of replication s = (m - 6)/4 when that is an integer.  The result
/// lists u r0 + s + 3u/2 for every such s accepted by the oracle.
pub fn plan_construction53(
    g: usize,
    u: usize,
    q: usize,
    r0: usize,
    oracle: impl Fn(usize) -> bool,
) -> Result<Vec<usize>> {
    if g == 0 || u < 6 || u % 2 != 0 {
        return Err(Error::Range(format!(
            "group weight g = {g} with u = {u} groups: u must be even and at least 6"
        )));
    }
    if (g * u) % 4 != 0 || (g * (u - 1)) % 3 != 0 || (g * g * (u + 1) * u) % 20 != 0 {
        return Err(Error::Range(format!(
            "weights g = {g}, u = {u} violate the divisibility conditions"
        )));
    }
    let gq = g * q;
    if gq % 20 != 6 && gq % 20 != 10 {
        return Err(Error::Range(format!(
            "gq = {gq} must be 6 or 10 mod 20 for an admissible base"
        )));
    }
    if is_prime_power(q).is_none() || u > q {
        return Err(Error::Range(format!(
            "{} mutually orthogonal squares of side {q} are not certified here",
            u - 1
        )));
    }
    if r0 != (gq - 6) / 4 {
        return Err(Error::Range(format!(
            "base replication {r0} does not match (gq - 6)/4 = {}",
            (gq - 6) / 4
        )));
    }
    let d = g * (u - 1) / 3;
    let mut out = std::collections::BTreeSet::new();
    for j in 0..=q {
        let m = j * d + (q - j) * g;
        if m < 6 || (m - 6) % 4 != 0 {
            continue;
        }
        let s = (m - 6) / 4;
        if oracle(s) {
            out.insert(u * r0 + s + 3 * u / 2);
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tables::{NO_OLP_BASIC_ROWS, ONE_OLP_ROWS};

    #[test]
    fn filling_arithmetic() {
        assert_eq!(theorem22_params(35, 35, 5).unwrap(), 86);
        assert_eq!(theorem22_params(1, 9, 4).unwrap(), 9);
        assert_eq!(theorem22_params(4, 52, 4).unwrap(), 57);
        for w in 0..20 {
            assert_eq!(
                theorem22_params(3 * w + 1, 39 * w + 13, 4).unwrap(),
                44 * w + 13
            );
        }
        assert!(theorem22_params(2, 5, 4).is_err());
        assert!(theorem22_params(0, 5, 4).is_err());
        assert!(theorem22_params(3, 5, 1).is_err());
    }

    #[test]
    fn recipe_rows() {
        let row = ResidueRow {
            rho: 0,
            s: 132,
            w_min: 7,
            t_min: 10,
        };
        let rep = recipe_check(&row).unwrap();
        assert_eq!(rep.gdd_type_template, "44^{3w} 401^1");
        assert_eq!(rep.r_min, 44 * 7 + 132);
        let row = ResidueRow {
            rho: 13,
            s: 13,
            w_min: 1,
            t_min: 1,
        };
        assert_eq!(recipe_check(&row).unwrap().gdd_type_template, "44^{3w} 44^1");
        let bad = ResidueRow {
            rho: 13,
            s: 14,
            w_min: 1,
            t_min: 1,
        };
        assert!(matches!(recipe_check(&bad), Err(Error::Recipe(_))));
        let bad = ResidueRow {
            rho: 0,
            s: 132,
            w_min: 7,
            t_min: 11,
        };
        assert!(matches!(recipe_check(&bad), Err(Error::Recipe(_))));
    }

    #[test]
    fn ingredient_rows() {
        let row = IngredientRow {
            r: 132,
            u: 6,
            p: 17,
            q: 20,
        };
        assert_eq!(ingredient_check(&row).unwrap(), 132);
        let bad = IngredientRow {
            r: 133,
            u: 6,
            p: 17,
            q: 20,
        };
        assert!(ingredient_check(&bad).is_err());
        let bad = IngredientRow {
            r: 132,
            u: 7,
            p: 17,
            q: 20,
        };
        assert!(ingredient_check(&bad).is_err());
    }

    #[test]
    fn table_gaps() {
        assert_eq!(largest_gap(&NO_OLP_BASIC_ROWS), 920);
        assert_eq!(largest_gap(&ONE_OLP_ROWS), 9172);
    }

    #[test]
    fn jolp_search() {
        // Inadmissible residues are rejected outright.
        assert_eq!(plan_jolp(0, 2), None);
        assert_eq!(plan_jolp(0, 46), None);
        let (a, t) = plan_jolp(0, 1).unwrap();
        assert!(t >= 1 && gcd(12 * t + 1, 44) == 1);
        assert_eq!(((12 * t + 1) * a + 20 * t) % 44, 1);
        let fa = facts(4, a);
        assert_eq!(fa.no_olp.status, Status::Exists);
        assert_eq!(fa.one_olp.status, Status::Exists);
        // Large j forces more groups.
        let (_, t) = plan_jolp(30, 0).unwrap();
        assert!(12 * t + 1 >= 30);
        for rho in (0..44).filter(|r| r % 4 <= 1) {
            assert!(plan_jolp(3, rho).is_some(), "residue {rho}");
        }
    }

    #[test]
    fn construction53_preconditions() {
        let all = |_: usize| true;
        assert!(plan_construction53(2, 5, 43, 20, all).is_err());
        assert!(plan_construction53(2, 7, 43, 20, all).is_err());
        assert!(plan_construction53(2, 40, 44, 21, all).is_err());
        assert!(plan_construction53(2, 40, 43, 21, all).is_err());
        assert!(plan_construction53(1, 40, 43, 20, all).is_err());
        // u > q: not enough orthogonal squares.
        assert!(plan_construction53(2, 64, 43, 20, all).is_err());
    }

    #[test]
    fn construction53_worked_example() {
        let out = plan_construction53(2, 40, 43, 20, |s| facts(5, s).no_olp.status == Status::Exists)
            .unwrap();
        assert!(out.contains(&880) && out.contains(&1066), "{out:?}");
        for r in &out {
            assert!((r - 40 * 20 - 60) <= (26 * 43 - 6) / 4);
        }
    }
}
