//! Existence registry for pentagonal geometry parameters.
//!
//! `facts(k, r)` answers, for one parameter pair, what is currently known
//! about three variants of the existence question: any geometry at all,
//! one with no opposite line pairs, and one with exactly one opposite
//! line pair.  Answers are assembled from small hard-coded results (the
//! replication bound, the Moore graph cases, per-k exception lists) plus
//! membership tests against the residue-class production rules replayed
//! in [`crate::spectrum::replay`].

use serde::{Deserialize, Serialize};

use super::tables::{
    IngredientRow, ResidueRow, K5_BASE, K5_OPEN, NO_OLP_BASIC_INGREDIENTS, NO_OLP_BASIC_ROWS,
    NO_OLP_FULL_ROWS, NO_OLP_OPEN, NO_OLP_PATCH_INGREDIENTS, ONE_OLP_INGREDIENTS, ONE_OLP_ROWS,
};
use crate::catalog;

/// Resolution of one existence question.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exists,
    Nonexistent,
    Open,
}

/// How a positive answer is backed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// A concrete design ships in the catalog or is built by this crate.
    Constructed,
    /// Follows from a recorded result; no design is materialized here.
    Recorded,
}

/// Status of a single variant together with its justification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantStatus {
    pub status: Status,
    pub basis: Option<Basis>,
    pub source: String,
}

impl VariantStatus {
    fn exists(basis: Basis, source: &str) -> Self {
        VariantStatus {
            status: Status::Exists,
            basis: Some(basis),
            source: source.to_owned(),
        }
    }

    fn nonexistent(source: &str) -> Self {
        VariantStatus {
            status: Status::Nonexistent,
            basis: None,
            source: source.to_owned(),
        }
    }

    fn open(source: &str) -> Self {
        VariantStatus {
            status: Status::Open,
            basis: None,
            source: source.to_owned(),
        }
    }
}

/// Everything known about the parameter pair (k, r).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceStatus {
    pub k: usize,
    pub r: usize,
    pub admissible: bool,
    /// Any geometry with these parameters.
    pub any: VariantStatus,
    /// A geometry with no opposite line pairs.
    pub no_olp: VariantStatus,
    /// A geometry with exactly one opposite line pair.
    pub one_olp: VariantStatus,
}

/// Divisibility screen: r(r-1) must be a multiple of k so that the line
/// count vr/k is an integer.
pub fn admissible(k: usize, r: usize) -> bool {
    k >= 2 && r >= 1 && (r * (r - 1)) % k == 0
}

/// Replication numbers of OLP-free catalog geometries with block size k.
pub fn catalog_no_olp_values(k: usize) -> Vec<usize> {
    catalog::entries()
        .iter()
        .filter(|e| e.k == k && e.claims.is_some_and(|c| c.olp_count == 0))
        .filter_map(|e| e.r)
        .collect()
}

/// Members of the residue-class families for k = 4, generated from a row
/// table: r is covered when r >= 44 * w_min + s and r == s (mod 44).
fn in_residue_rows(rows: &[ResidueRow], r: usize) -> bool {
    rows.iter()
        .any(|row| r % 44 == row.rho && r >= 44 * row.w_min + row.s)
}

fn ingredient_outputs(rows: &[IngredientRow]) -> impl Iterator<Item = usize> + '_ {
    rows.iter().map(|row| row.r)
}

/// No-OLP geometries with k = 4 that this crate can account for:
/// catalog entries, the two ingredient tables, and the residue rows.
fn k4_no_olp_known(r: usize) -> Option<Basis> {
    if catalog_no_olp_values(4).contains(&r) {
        return Some(Basis::Constructed);
    }
    if ingredient_outputs(&NO_OLP_BASIC_INGREDIENTS).any(|x| x == r)
        || ingredient_outputs(&NO_OLP_PATCH_INGREDIENTS).any(|x| x == r)
    {
        return Some(Basis::Recorded);
    }
    if in_residue_rows(&NO_OLP_BASIC_ROWS, r) || in_residue_rows(&NO_OLP_FULL_ROWS, r) {
        return Some(Basis::Recorded);
    }
    None
}

/// One-OLP geometries with k = 4: the degenerate r = 1 plus the
/// dedicated ingredient table and residue rows.
fn k4_one_olp_known(r: usize) -> Option<Basis> {
    if r == 1 {
        return Some(Basis::Constructed);
    }
    if ingredient_outputs(&ONE_OLP_INGREDIENTS).any(|x| x == r) {
        return Some(Basis::Recorded);
    }
    if in_residue_rows(&ONE_OLP_ROWS, r) {
        return Some(Basis::Recorded);
    }
    None
}

/// No-OLP geometries with k = 5 obtained by filling uniform group
/// divisible designs with one of the five catalog geometries.  For a
/// base with replication number r0 the group count is 10 r0 + 15 and the
/// two families start at r0 and 5 r0 + 6; the second skips its first
/// step when r0 is small and not a multiple of 3.
pub fn k5_family_no_olp(r: usize) -> bool {
    for &r0 in K5_BASE.iter() {
        let base = 10 * r0 + 15;
        if r >= r0 && (r - r0) % base == 0 {
            return true;
        }
        let start = 5 * r0 + 6;
        if r >= start && (r - start) % base == 0 {
            let t = (r - start) / base;
            let skip_first = r0 <= 1220 && r0 % 3 != 0;
            if !(skip_first && t == 1) {
                return true;
            }
        }
    }
    false
}

fn moore_status(k: usize) -> Status {
    match k {
        2 | 3 | 7 => Status::Exists,
        57 => Status::Open,
        _ => Status::Nonexistent,
    }
}

/// Knowledge lookup for the parameter pair (k, r).
pub fn facts(k: usize, r: usize) -> ExistenceStatus {
    let adm = admissible(k, r);
    let mut st = ExistenceStatus {
        k,
        r,
        admissible: adm,
        any: VariantStatus::open("no applicable result"),
        no_olp: VariantStatus::open("no applicable result"),
        one_olp: VariantStatus::open("no applicable result"),
    };

    if k < 2 || r == 0 {
        let v = VariantStatus::nonexistent("parameters out of range");
        st.any = v.clone();
        st.no_olp = v.clone();
        st.one_olp = v;
        return st;
    }

    if !adm {
        let v = VariantStatus::nonexistent("line count vr/k is not an integer");
        st.any = v.clone();
        st.no_olp = v.clone();
        st.one_olp = v;
        return st;
    }

    if r == 1 {
        // Two disjoint lines; every point sees exactly one opposite line.
        st.any = VariantStatus::exists(Basis::Constructed, "degenerate geometry");
        st.one_olp = VariantStatus::exists(Basis::Constructed, "degenerate geometry");
        st.no_olp = VariantStatus::nonexistent("degenerate geometry is the only design");
        return st;
    }

    if r < k {
        let v = VariantStatus::nonexistent("replication number below block size");
        st.any = v.clone();
        st.no_olp = v.clone();
        st.one_olp = v;
        return st;
    }

    if r == k || r == k + 1 {
        // r = k forces the deficiency graph to be a Moore graph of degree
        // k; r = k + 1 arises from deleting a point of the r = k + 1 case
        // one step up, so the same three degrees are the only candidates.
        let deg = if r == k { k } else { k + 1 };
        let status = moore_status(deg);
        let source = "deficiency graph must be a Moore graph";
        st.any = match status {
            Status::Exists => VariantStatus::exists(Basis::Recorded, source),
            Status::Nonexistent => VariantStatus::nonexistent(source),
            Status::Open => VariantStatus::open(source),
        };
        st.no_olp = st.any.clone();
        st.one_olp = match status {
            Status::Nonexistent => VariantStatus::nonexistent(source),
            _ => VariantStatus::open("no applicable result"),
        };
        return st;
    }

    match k {
        2 => {
            // Admissible r > 3: spectrum not tracked here.
        }
        3 => {
            if r == 4 || r == 6 {
                let v = VariantStatus::nonexistent("exhaustive search");
                st.any = v.clone();
                st.no_olp = v.clone();
                st.one_olp = v;
            } else {
                let basis = if r % 6 == 3 {
                    Basis::Constructed
                } else {
                    Basis::Recorded
                };
                st.any = VariantStatus::exists(basis, "block size 3 spectrum");
                st.no_olp = if r == 7 {
                    VariantStatus::nonexistent("unique design has opposite line pairs")
                } else {
                    VariantStatus::exists(basis, "block size 3 spectrum")
                };
            }
        }
        4 => {
            if let Some(basis) = k4_no_olp_known(r) {
                st.no_olp = VariantStatus::exists(basis, "block size 4 production rules");
            } else if NO_OLP_OPEN.contains(&r) {
                st.no_olp = VariantStatus::open("listed possible exception");
            } else {
                st.no_olp = VariantStatus::open("beyond tabulated ranges");
            }
            if let Some(basis) = k4_one_olp_known(r) {
                st.one_olp = VariantStatus::exists(basis, "block size 4 production rules");
            }
            if st.no_olp.status == Status::Exists {
                st.any = st.no_olp.clone();
            } else if st.one_olp.status == Status::Exists {
                st.any = st.one_olp.clone();
            }
        }
        5 => {
            if r % 5 == 1 {
                if K5_OPEN.contains(&r) {
                    st.any = VariantStatus::open("listed possible exception");
                } else {
                    st.any =
                        VariantStatus::exists(Basis::Recorded, "block size 5 residue class 1");
                }
            }
            if K5_BASE.contains(&r) {
                st.no_olp = VariantStatus::exists(Basis::Constructed, "catalog entry");
            } else if k5_family_no_olp(r) {
                st.no_olp =
                    VariantStatus::exists(Basis::Recorded, "uniform group filling families");
            }
            if st.no_olp.status == Status::Exists {
                st.any = st.no_olp.clone();
            }
        }
        _ => {}
    }

    st
}

#[cfg(test)]
mod tests {
    use super::*;

    fn any(k: usize, r: usize) -> Status {
        facts(k, r).any.status
    }

    fn no_olp(k: usize, r: usize) -> Status {
        facts(k, r).no_olp.status
    }

    fn one_olp(k: usize, r: usize) -> Status {
        facts(k, r).one_olp.status
    }

    #[test]
    fn admissibility_screen() {
        assert!(admissible(3, 7));
        assert!(!admissible(3, 5));
        assert!(admissible(4, 8));
        assert!(!admissible(4, 7));
        assert!(admissible(5, 16));
        assert!(!admissible(1, 3));
        assert!(!admissible(2, 0));
    }

    #[test]
    fn out_of_range_and_inadmissible() {
        assert_eq!(any(1, 5), Status::Nonexistent);
        assert_eq!(any(4, 0), Status::Nonexistent);
        assert_eq!(any(4, 7), Status::Nonexistent);
        assert_eq!(no_olp(4, 7), Status::Nonexistent);
    }

    #[test]
    fn degenerate_column() {
        for k in 2..10 {
            assert_eq!(any(k, 1), Status::Exists);
            assert_eq!(one_olp(k, 1), Status::Exists);
            assert_eq!(no_olp(k, 1), Status::Nonexistent);
        }
    }

    #[test]
    fn replication_bound() {
        assert_eq!(any(4, 3), Status::Nonexistent);
        assert_eq!(any(5, 4), Status::Nonexistent);
        assert_eq!(any(7, 6), Status::Nonexistent);
        assert_eq!(any(57, 56), Status::Nonexistent);
    }

    #[test]
    fn moore_diagonal() {
        assert_eq!(any(2, 2), Status::Exists);
        assert_eq!(any(3, 3), Status::Exists);
        assert_eq!(any(7, 7), Status::Exists);
        assert_eq!(any(57, 57), Status::Open);
        assert_eq!(any(4, 4), Status::Nonexistent);
        assert_eq!(any(5, 5), Status::Nonexistent);
        assert_eq!(any(13, 13), Status::Nonexistent);
    }

    #[test]
    fn moore_superdiagonal() {
        assert_eq!(any(2, 3), Status::Exists);
        assert_eq!(any(6, 7), Status::Exists);
        assert_eq!(any(56, 57), Status::Open);
        assert_eq!(any(4, 5), Status::Nonexistent);
        assert_eq!(any(5, 6), Status::Nonexistent);
        assert_eq!(any(12, 13), Status::Nonexistent);
    }

    #[test]
    fn block_size_three() {
        assert_eq!(any(3, 4), Status::Nonexistent);
        assert_eq!(any(3, 6), Status::Nonexistent);
        for r in [7usize, 9, 10, 12, 13, 15, 33, 99] {
            assert_eq!(any(3, r), Status::Exists, "r = {r}");
        }
        assert_eq!(no_olp(3, 7), Status::Nonexistent);
        assert_eq!(no_olp(3, 9), Status::Exists);
        assert_eq!(facts(3, 33).any.basis, Some(Basis::Constructed));
        assert_eq!(facts(3, 10).any.basis, Some(Basis::Recorded));
    }

    #[test]
    fn block_size_four_no_olp() {
        assert_eq!(no_olp(4, 13), Status::Exists);
        assert_eq!(facts(4, 13).no_olp.basis, Some(Basis::Constructed));
        assert_eq!(no_olp(4, 120), Status::Exists);
        assert_eq!(no_olp(4, 8), Status::Open);
        assert_eq!(no_olp(4, 308), Status::Open);
        // Largest open value: everything admissible beyond it is covered.
        for r in 309..400 {
            if admissible(4, r) {
                assert_eq!(no_olp(4, r), Status::Exists, "r = {r}");
            }
        }
    }

    #[test]
    fn block_size_four_one_olp() {
        assert_eq!(one_olp(4, 1), Status::Exists);
        assert_eq!(one_olp(4, 137), Status::Exists);
        assert_eq!(one_olp(4, 13), Status::Open);
        for r in 9173..9300 {
            if admissible(4, r) {
                assert_eq!(one_olp(4, r), Status::Exists, "r = {r}");
            }
        }
    }

    #[test]
    fn block_size_five() {
        for r in [21usize, 26, 41, 61, 86, 121] {
            assert_eq!(any(5, r), Status::Exists, "r = {r}");
        }
        for &r in K5_OPEN.iter() {
            assert_eq!(any(5, r), Status::Open, "r = {r}");
        }
        for &r in K5_BASE.iter() {
            assert_eq!(no_olp(5, r), Status::Exists, "r = {r}");
            assert_eq!(facts(5, r).no_olp.basis, Some(Basis::Constructed));
        }
        // First few family members in each residue class.
        assert_eq!(no_olp(5, 235), Status::Exists);
        assert_eq!(no_olp(5, 106), Status::Exists);
        assert_eq!(no_olp(5, 156), Status::Exists);
        // t = 1 is skipped for the shifted family except over r0 = 30.
        assert!(!k5_family_no_olp(321));
        assert!(k5_family_no_olp(471));
        assert_eq!(any(5, 45), Status::Open);
    }

    #[test]
    fn lattice_consistency() {
        for k in 1..8 {
            for r in 0..130 {
                let f = facts(k, r);
                if f.any.status == Status::Nonexistent {
                    assert_eq!(f.no_olp.status, Status::Nonexistent, "k={k} r={r}");
                    assert_eq!(f.one_olp.status, Status::Nonexistent, "k={k} r={r}");
                }
                for v in [&f.no_olp, &f.one_olp] {
                    if v.status == Status::Exists {
                        assert_eq!(f.any.status, Status::Exists, "k={k} r={r}");
                    }
                }
                for v in [&f.any, &f.no_olp, &f.one_olp] {
                    assert_eq!(v.basis.is_some(), v.status == Status::Exists);
                }
            }
        }
    }
}
