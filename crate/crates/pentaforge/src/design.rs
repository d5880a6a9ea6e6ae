//! Incidence-structure types and the parameter arithmetic shared by every
//! other module.
//!
//! Points are dense integer labels `0..v`. Structured point sets used by the
//! direct constructions (for example Z_q x Z_2) are flattened to this range;
//! each construction documents its flattening.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A line of an incidence structure: strictly increasing point labels,
/// at least two of them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block(Vec<usize>);

impl Block {
    /// Sorts the labels and validates the block. Listing order in source
    /// data is irrelevant; a block is a set.
    pub fn new(mut points: Vec<usize>) -> Result<Self> {
        points.sort_unstable();
        if points.len() < 2 {
            return Err(Error::Param(format!(
                "block must have at least 2 points, got {}",
                points.len()
            )));
        }
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Param(format!("block has a repeated point: {points:?}")));
        }
        Ok(Block(points))
    }

    pub fn points(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.binary_search(&p).is_ok()
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// An incidence structure: `v` points labeled `0..v` plus a list of blocks.
///
/// The block list keeps its given order (file round-trips preserve it), but
/// equality compares blocks as a multiset, so two developments of the same
/// design compare equal regardless of generation order.
#[derive(Clone, Debug, Eq)]
pub struct Design {
    v: usize,
    blocks: Vec<Block>,
}

impl Design {
    pub fn new(v: usize, blocks: Vec<Block>) -> Result<Self> {
        for b in &blocks {
            if let Some(&p) = b.points().last() {
                if p >= v {
                    return Err(Error::Param(format!("point {p} out of range for v={v}")));
                }
            }
        }
        Ok(Design { v, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

impl PartialEq for Design {
    fn eq(&self, other: &Self) -> bool {
        if self.v != other.v || self.blocks.len() != other.blocks.len() {
            return false;
        }
        let mut a: Vec<&Block> = self.blocks.iter().collect();
        let mut b: Vec<&Block> = other.blocks.iter().collect();
        a.sort();
        b.sort();
        a == b
    }
}

/// A design together with its group partition and block size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gdd {
    pub design: Design,
    pub groups: Vec<Vec<usize>>,
    pub k: usize,
}

impl Gdd {
    pub fn gdd_type(&self) -> Result<GddType> {
        type_of_groups(self.design.v(), &self.groups)
    }
}

/// A resolvable GDD: the blocks carry a partition into parallel classes,
/// stored as lists of block indices.
#[derive(Clone, Debug)]
pub struct Rgdd {
    pub gdd: Gdd,
    pub classes: Vec<Vec<usize>>,
}

/// Normalized multiset of group sizes, e.g. `2^35` or `10^10 18^1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GddType {
    parts: Vec<(usize, usize)>,
}

impl GddType {
    /// Builds a normalized type from (size, count) pairs: equal sizes are
    /// merged, sizes end up strictly increasing, zero sizes and counts are
    /// rejected.
    pub fn new(parts: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut merged: BTreeMap<usize, usize> = BTreeMap::new();
        for (size, count) in parts {
            if size == 0 || count == 0 {
                return Err(Error::Param(format!(
                    "group type part {size}^{count} must have positive size and count"
                )));
            }
            *merged.entry(size).or_insert(0) += count;
        }
        if merged.is_empty() {
            return Err(Error::Param("group type must have at least one part".into()));
        }
        Ok(GddType { parts: merged.into_iter().collect() })
    }

    /// (size, count) pairs with sizes strictly increasing.
    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn total_points(&self) -> usize {
        self.parts.iter().map(|&(g, u)| g * u).sum()
    }

    pub fn group_count(&self) -> usize {
        self.parts.iter().map(|&(_, u)| u).sum()
    }
}

impl fmt::Display for GddType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &(size, count) in &self.parts {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{size}^{count}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses exponent notation: whitespace-separated tokens `g^u` or bare `g`.
pub fn parse_gdd_type(text: &str) -> Result<GddType> {
    let mut parts = Vec::new();
    for tok in text.split_whitespace() {
        let (size, count) = match tok.split_once('^') {
            Some((g, u)) => (
                g.parse::<usize>().map_err(|_| bad_type_token(tok))?,
                u.parse::<usize>().map_err(|_| bad_type_token(tok))?,
            ),
            None => (tok.parse::<usize>().map_err(|_| bad_type_token(tok))?, 1),
        };
        parts.push((size, count));
    }
    if parts.is_empty() {
        return Err(Error::Parse("empty group type".into()));
    }
    GddType::new(parts)
}

fn bad_type_token(tok: &str) -> Error {
    Error::Parse(format!("malformed group type token {tok:?}"))
}

/// Collects the sizes of a group partition of `0..v` into exponent form.
pub fn type_of_groups(v: usize, groups: &[Vec<usize>]) -> Result<GddType> {
    check_partition(v, groups)?;
    GddType::new(groups.iter().map(|g| (g.len(), 1)))
}

/// Checks that `groups` partitions `0..v`: every label appears in exactly
/// one group and no label is out of range.
pub fn check_partition(v: usize, groups: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; v];
    for g in groups {
        for &p in g {
            if p >= v {
                return Err(Error::Partition(format!("label {p} out of range for v={v}")));
            }
            if seen[p] {
                return Err(Error::Partition(format!("label {p} appears twice")));
            }
            seen[p] = true;
        }
    }
    if let Some(miss) = seen.iter().position(|&s| !s) {
        return Err(Error::Partition(format!("label {miss} is not covered")));
    }
    Ok(())
}

/// Point and block counts of a PENT(k,r).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PentParams {
    pub k: usize,
    pub r: usize,
    pub v: usize,
    pub b: usize,
}

/// v = r(k-1) + k + 1 and b = vr/k. The division is exact precisely when
/// r(r-1) is divisible by k; a remainder raises the admissibility error.
pub fn pent_params(k: usize, r: usize) -> Result<PentParams> {
    if k < 2 {
        return Err(Error::Param(format!("block size k={k} must be at least 2")));
    }
    if r < 1 {
        return Err(Error::Param("replication r must be at least 1".into()));
    }
    let v = r * (k - 1) + k + 1;
    if (v * r) % k != 0 {
        return Err(Error::Admissibility { k, r });
    }
    Ok(PentParams { k, r, v, b: v * r / k })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_match_known_cases() {
        let p = pent_params(4, 13).unwrap();
        assert_eq!((p.v, p.b), (44, 143));
        let p = pent_params(2, 2).unwrap();
        assert_eq!((p.v, p.b), (5, 5));
        let p = pent_params(5, 20).unwrap();
        assert_eq!((p.v, p.b), (86, 344));
    }

    #[test]
    fn params_reject_inadmissible() {
        assert!(matches!(pent_params(3, 5), Err(Error::Admissibility { .. })));
        assert!(matches!(pent_params(1, 5), Err(Error::Param(_))));
        assert!(matches!(pent_params(4, 0), Err(Error::Param(_))));
    }

    #[test]
    fn divisibility_equivalence() {
        // k | vr holds exactly when r(r-1) = 0 (mod k); brute force over a
        // grid wide enough to hit every residue pattern.
        for k in 2..=10 {
            for r in 1..=200 {
                let v = r * (k - 1) + k + 1;
                assert_eq!((v * r) % k == 0, (r * (r - 1)) % k == 0, "k={k} r={r}");
            }
        }
    }

    #[test]
    fn blocks_sort_and_reject_duplicates() {
        let b = Block::new(vec![5, 20, 2, 11]).unwrap();
        assert_eq!(b.points(), &[2, 5, 11, 20]);
        assert!(Block::new(vec![1, 1, 2]).is_err());
        assert!(Block::new(vec![7]).is_err());
    }

    #[test]
    fn design_equality_is_multiset() {
        let a = Design::new(
            4,
            vec![Block::new(vec![0, 1]).unwrap(), Block::new(vec![2, 3]).unwrap()],
        )
        .unwrap();
        let b = Design::new(
            4,
            vec![Block::new(vec![2, 3]).unwrap(), Block::new(vec![0, 1]).unwrap()],
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn design_rejects_out_of_range() {
        assert!(Design::new(3, vec![Block::new(vec![0, 3]).unwrap()]).is_err());
    }

    #[test]
    fn type_parse_and_format() {
        let t = parse_gdd_type("2^35").unwrap();
        assert_eq!(t.parts(), &[(2, 35)]);
        let t = parse_gdd_type("44^3 401^1").unwrap();
        assert_eq!(t.parts(), &[(44, 3), (401, 1)]);
        assert_eq!(t.to_string(), "44^3 401^1");
        let t = parse_gdd_type("7^5").unwrap();
        assert_eq!(t.to_string(), "7^5");
        // bare tokens and merging
        let t = parse_gdd_type("5 5 3^2").unwrap();
        assert_eq!(t.parts(), &[(3, 2), (5, 2)]);
        assert!(parse_gdd_type("4^^2").is_err());
        assert!(parse_gdd_type("").is_err());
        assert!(parse_gdd_type("0^3").is_err());
    }

    #[test]
    fn groups_to_type() {
        let groups: Vec<Vec<usize>> = (0..35).map(|i| vec![2 * i, 2 * i + 1]).collect();
        assert_eq!(type_of_groups(70, &groups).unwrap().to_string(), "2^35");

        // residue classes mod 34 on 68 points plus a tail pair
        let mut groups: Vec<Vec<usize>> = (0..34).map(|c| vec![c, c + 34]).collect();
        groups.push(vec![68, 69]);
        assert_eq!(type_of_groups(70, &groups).unwrap().to_string(), "2^35");

        let groups = vec![(0..44).collect(), (44..88).collect(), (88..132).collect()];
        assert_eq!(type_of_groups(132, &groups).unwrap().to_string(), "44^3");

        let bad = vec![vec![0, 1], vec![1, 2]];
        assert!(matches!(type_of_groups(3, &bad), Err(Error::Partition(_))));
        let short = vec![vec![0, 1]];
        assert!(matches!(type_of_groups(3, &short), Err(Error::Partition(_))));
    }

    #[test]
    fn type_total_points() {
        let t = parse_gdd_type("10^10 18^1").unwrap();
        assert_eq!(t.total_points(), 118);
        assert_eq!(t.group_count(), 11);
    }
}
