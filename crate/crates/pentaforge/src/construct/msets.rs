//! Reachable-sum sets for weighted transversal constructions, witness
//! search, and the group-patching composition itself.

use std::collections::{BTreeMap, BTreeSet};

use crate::design::{Block, Design, Gdd};
use crate::error::{Error, Result};
use crate::verify::verify_gdd;

/// New-group sizes reachable by weighting one side-q group with values
/// from {g, 3g, 13g}: the arithmetic run {gj : j = q, q+2, ..., 13q-40}
/// plus ten listed stragglers g(13q - j) near the top.
pub fn m40_set(g: usize, q: usize) -> Result<BTreeSet<usize>> {
    if g % 2 != 0 || g == 6 || g == 12 {
        return Err(Error::Range(format!(
            "weight {g} must be even and not 6 or 12"
        )));
    }
    if q < 40 {
        return Err(Error::Range(format!("side {q} must be at least 40")));
    }
    let mut out = BTreeSet::new();
    let mut j = q;
    while j <= 13 * q - 40 {
        out.insert(g * j);
        j += 2;
    }
    for j in [36, 34, 32, 30, 24, 22, 20, 12, 10, 0] {
        out.insert(g * (13 * q - j));
    }
    Ok(out)
}

/// Same as [`m40_set`] for weights {g, 9g/5, 3g}: the run
/// {gj/5 : j = 5q, 5q+2, ..., 15q} minus six unreachable slots.
pub fn m10_set(g: usize, q: usize) -> Result<BTreeSet<usize>> {
    if g % 10 != 0 || g == 30 || g == 60 {
        return Err(Error::Range(format!(
            "weight {g} must be divisible by 10 and not 30 or 60"
        )));
    }
    if q < 10 {
        return Err(Error::Range(format!("side {q} must be at least 10")));
    }
    let excluded = [5 * q + 2, 5 * q + 6, 15 * q - 14, 15 * q - 8, 15 * q - 4, 15 * q - 2];
    let mut out = BTreeSet::new();
    let mut j = 5 * q;
    while j <= 15 * q {
        if !excluded.contains(&j) {
            out.insert(g * j / 5);
        }
        j += 2;
    }
    Ok(out)
}

/// Every sum of exactly `count` values drawn from `parts` with repetition.
/// Brute-force oracle for the closed-form sets above.
pub fn reachable_sums(parts: &[usize], count: usize) -> BTreeSet<usize> {
    let mut sums = BTreeSet::new();
    sums.insert(0usize);
    for _ in 0..count {
        let mut next = BTreeSet::new();
        for s in sums {
            for &p in parts {
                next.insert(s + p);
            }
        }
        sums = next;
    }
    sums
}

/// Writes `total` as a sum of exactly `count` values from `parts`, greedy
/// on the largest part with backtracking. Returns (part, multiplicity)
/// pairs in decreasing part order, or None.
pub fn sum_decompose(total: usize, parts: &[usize], count: usize) -> Option<Vec<(usize, usize)>> {
    let mut sorted: Vec<usize> = parts.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.reverse();
    let mut chosen = Vec::new();
    if dfs(total, count, &sorted, &mut chosen) {
        Some(chosen.into_iter().filter(|&(_, n)| n > 0).collect())
    } else {
        None
    }
}

fn dfs(total: usize, count: usize, parts: &[usize], chosen: &mut Vec<(usize, usize)>) -> bool {
    let Some((&part, rest)) = parts.split_first() else {
        return total == 0 && count == 0;
    };
    if rest.is_empty() {
        if count * part == total {
            chosen.push((part, count));
            return true;
        }
        return false;
    }
    let min_rest = *parts.last().unwrap();
    let mut n = (total / part).min(count);
    loop {
        let remaining = total - n * part;
        // Remaining count must be able to reach the remaining total.
        if remaining >= (count - n) * min_rest && remaining <= (count - n) * part {
            chosen.push((part, n));
            if dfs(remaining, count - n, rest, chosen) {
                return true;
            }
            chosen.pop();
        }
        if n == 0 {
            return false;
        }
        n -= 1;
    }
}

/// Weighted group-patch composition: in a (u+1)-GDD of type q^{u+1},
/// give every point of the last group its own weight and every other
/// point weight g, then replace each block by a filler GDD of type
/// g^u w^1 where w is the weight met in the last group. The result is a
/// GDD of type (gq)^u (sum of weights)^1 with the fillers' block size.
pub fn td_patch_gdd(
    base: &Gdd,
    g: usize,
    weights: &[usize],
    fillers: &BTreeMap<usize, Gdd>,
) -> Result<Gdd> {
    if g == 0 || weights.iter().any(|&w| w == 0) {
        return Err(Error::Param("weights must be positive".into()));
    }
    let base_type = base.gdd_type()?;
    let (q, u_plus_1) = match base_type.parts() {
        [(q, u1)] => (*q, *u1),
        _ => {
            return Err(Error::Param(format!(
                "patch base must be uniform, got type {base_type}"
            )))
        }
    };
    if base.k != u_plus_1 || u_plus_1 < 2 {
        return Err(Error::Param(format!(
            "patch base must be a transversal design with one point per group per block, got {} groups and block size {}",
            u_plus_1, base.k
        )));
    }
    let u = u_plus_1 - 1;
    if weights.len() != q {
        return Err(Error::Param(format!(
            "need one weight per point of the patched group: {} != {q}",
            weights.len()
        )));
    }
    let base_report = verify_gdd(&base.design, base.k, &base.groups)?;
    if !base_report.valid {
        return Err(Error::Param(format!(
            "patch base failed verification: {}",
            base_report.violations.join("; ")
        )));
    }

    // Filler block size; all fillers must agree and have type g^u w^1.
    let mut filler_k: Option<usize> = None;
    for (&w, filler) in fillers {
        let mut expected: Vec<(usize, usize)> = vec![(g, u)];
        expected.push((w, 1));
        let expected = crate::design::GddType::new(expected)?;
        if filler.gdd_type()? != expected {
            return Err(Error::Ingredient(format!(
                "filler for weight {w} must have type {expected}, got {}",
                filler.gdd_type()?
            )));
        }
        let rep = verify_gdd(&filler.design, filler.k, &filler.groups)?;
        if !rep.valid {
            return Err(Error::Ingredient(format!(
                "filler for weight {w} failed verification: {}",
                rep.violations.join("; ")
            )));
        }
        match filler_k {
            None => filler_k = Some(filler.k),
            Some(k) if k == filler.k => {}
            Some(k) => {
                return Err(Error::Ingredient(format!(
                    "fillers disagree on block size: {k} versus {}",
                    filler.k
                )))
            }
        }
    }
    let k_out = filler_k.ok_or_else(|| Error::Ingredient("no fillers supplied".into()))?;

    // The last group in ascending-minimum order is the patched one.
    let mut groups_sorted: Vec<Vec<usize>> = base.groups.clone();
    for grp in &mut groups_sorted {
        grp.sort_unstable();
    }
    groups_sorted.sort_by_key(|grp| grp[0]);
    let patched = groups_sorted.len() - 1;

    // New labels: group i < u starts at i*g*q, g per point; the patched
    // group starts at u*g*q with per-point extents given by the weights.
    let mut new_label = vec![(0usize, 0usize); base.design.v()]; // (start, width)
    for (gi, grp) in groups_sorted.iter().enumerate() {
        if gi != patched {
            for (off, &p) in grp.iter().enumerate() {
                new_label[p] = (gi * g * q + off * g, g);
            }
        } else {
            let mut cursor = u * g * q;
            for (off, &p) in grp.iter().enumerate() {
                new_label[p] = (cursor, weights[off]);
                cursor += weights[off];
            }
        }
    }

    let mut blocks: Vec<Block> = Vec::new();
    for block in base.design.blocks() {
        // Cells of this block: g-wide everywhere except in the patched group.
        let mut wide_cells: Vec<(usize, usize)> = Vec::with_capacity(u);
        let mut patch_cell = None;
        for &p in block.points() {
            let (start, width) = new_label[p];
            if width == g && start < u * g * q {
                wide_cells.push((start, width));
            } else {
                patch_cell = Some((start, width));
            }
        }
        let (pstart, w) = patch_cell.ok_or_else(|| {
            Error::Param("a base block misses the patched group".into())
        })?;
        if wide_cells.len() != u {
            return Err(Error::Param(
                "a base block is not a transversal of the groups".into(),
            ));
        }
        let filler = fillers
            .get(&w)
            .ok_or_else(|| Error::Ingredient(format!("{k_out}-GDD of type {g}^{u} {w}^1")))?;

        // Map filler groups onto cells: the w-sized group onto the patch
        // cell, g-sized groups onto the wide cells in ascending-minimum
        // order. When w = g the last group takes the patch cell.
        let mut fgroups: Vec<Vec<usize>> = filler.groups.clone();
        for grp in &mut fgroups {
            grp.sort_unstable();
        }
        fgroups.sort_by_key(|grp| grp[0]);
        let patch_idx = if w == g {
            fgroups.len() - 1
        } else {
            fgroups
                .iter()
                .position(|grp| grp.len() == w)
                .expect("type was checked above")
        };
        let mut point_map = vec![0usize; filler.design.v()];
        let mut wide_iter = wide_cells.iter();
        for (fi, grp) in fgroups.iter().enumerate() {
            let (start, _) = if fi == patch_idx {
                (pstart, w)
            } else {
                *wide_iter.next().expect("u wide cells for u wide groups")
            };
            for (off, &p) in grp.iter().enumerate() {
                point_map[p] = start + off;
            }
        }
        for fb in filler.design.blocks() {
            blocks.push(Block::new(fb.points().iter().map(|&p| point_map[p]).collect())?);
        }
    }

    let m: usize = weights.iter().sum();
    let design = Design::new(u * g * q + m, blocks)?;
    let mut groups: Vec<Vec<usize>> = (0..u).map(|i| (i * g * q..(i + 1) * g * q).collect()).collect();
    groups.push((u * g * q..u * g * q + m).collect());
    let out = Gdd { design, groups, k: k_out };
    let report = verify_gdd(&out.design, k_out, &out.groups)?;
    if !report.valid {
        return Err(Error::Param(format!(
            "patched design failed verification: {}",
            report.violations.join("; ")
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::field::td;

    #[test]
    fn m40_preconditions() {
        assert!(matches!(m40_set(3, 43), Err(Error::Range(_))));
        assert!(matches!(m40_set(6, 43), Err(Error::Range(_))));
        assert!(matches!(m40_set(2, 39), Err(Error::Range(_))));
    }

    #[test]
    fn m40_endpoints_and_members() {
        let s = m40_set(2, 43).unwrap();
        assert_eq!(s.first().copied(), Some(86));
        assert_eq!(s.last().copied(), Some(1118));
        assert!(s.contains(&1046));
        assert!(!s.contains(&1042));
    }

    #[test]
    fn m10_preconditions_and_endpoints() {
        assert!(matches!(m10_set(5, 43), Err(Error::Range(_))));
        assert!(matches!(m10_set(30, 43), Err(Error::Range(_))));
        assert!(matches!(m10_set(10, 9), Err(Error::Range(_))));
        let s = m10_set(10, 43).unwrap();
        assert_eq!(s.first().copied(), Some(430));
        assert_eq!(s.last().copied(), Some(1290));
        assert!(!s.contains(&(10 * (5 * 43 + 2) / 5)));
        assert!(!s.contains(&(10 * (15 * 43 - 2) / 5)));
    }

    #[test]
    fn m_sets_match_brute_force() {
        let s = m40_set(2, 43).unwrap();
        assert_eq!(s, reachable_sums(&[2, 6, 26], 43));
        let t = m10_set(10, 11).unwrap();
        assert_eq!(t, reachable_sums(&[10, 18, 30], 11));
    }

    #[test]
    fn decompose_known_witness() {
        let w = sum_decompose(1890, &[2, 6, 26], 83).unwrap();
        assert_eq!(w, vec![(26, 71), (6, 5), (2, 7)]);
        let total: usize = w.iter().map(|&(p, n)| p * n).sum();
        let count: usize = w.iter().map(|&(_, n)| n).sum();
        assert_eq!((total, count), (1890, 83));
    }

    #[test]
    fn decompose_all_min_and_parity_failure() {
        assert_eq!(sum_decompose(43 * 2, &[2, 6, 26], 43), Some(vec![(2, 43)]));
        assert_eq!(sum_decompose(85, &[2, 6, 26], 43), None);
    }

    #[test]
    fn patch_uniform_weights_reduces_to_inflation() {
        // TD(5,4) patched with constant weight 4 and TD(5,4) fillers is
        // TD(5,16).
        let base = td(5, 4).unwrap();
        let filler = td(5, 4).unwrap();
        let mut fillers = BTreeMap::new();
        fillers.insert(4usize, filler);
        let out = td_patch_gdd(&base, 4, &[4, 4, 4, 4], &fillers).unwrap();
        assert_eq!(out.k, 5);
        assert_eq!(out.gdd_type().unwrap().to_string(), "16^5");
        assert_eq!(out.design.block_count(), 16 * 16);
    }

    #[test]
    fn patch_mixed_weights() {
        // Base TD(3,3), g=1, weights (1,1,2): fillers are the complete
        // graph K3 (type 1^3) and the 5-edge K4 minus an edge (1^2 2^1).
        let base = td(3, 3).unwrap();
        let k3 = Gdd {
            design: Design::new(
                3,
                vec![
                    Block::new(vec![0, 1]).unwrap(),
                    Block::new(vec![0, 2]).unwrap(),
                    Block::new(vec![1, 2]).unwrap(),
                ],
            )
            .unwrap(),
            groups: vec![vec![0], vec![1], vec![2]],
            k: 2,
        };
        let k4_minus = Gdd {
            design: Design::new(
                4,
                vec![
                    Block::new(vec![0, 1]).unwrap(),
                    Block::new(vec![0, 2]).unwrap(),
                    Block::new(vec![0, 3]).unwrap(),
                    Block::new(vec![1, 2]).unwrap(),
                    Block::new(vec![1, 3]).unwrap(),
                ],
            )
            .unwrap(),
            groups: vec![vec![0], vec![1], vec![2, 3]],
            k: 2,
        };
        let mut fillers = BTreeMap::new();
        fillers.insert(1usize, k3);
        fillers.insert(2usize, k4_minus);
        let out = td_patch_gdd(&base, 1, &[1, 1, 2], &fillers).unwrap();
        assert_eq!(out.gdd_type().unwrap().to_string(), "3^2 4^1");
        assert_eq!(out.k, 2);
    }

    #[test]
    fn patch_missing_weight_filler() {
        let base = td(3, 3).unwrap();
        let fillers = BTreeMap::new();
        assert!(matches!(
            td_patch_gdd(&base, 1, &[1, 1, 1], &fillers),
            Err(Error::Ingredient(_))
        ));
    }
}
