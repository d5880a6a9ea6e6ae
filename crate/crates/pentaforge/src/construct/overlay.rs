//! Group overlay, point inflation, and class augmentation.
//!
//! These three operations compose: inflate a GDD so its group sizes match
//! available fillers, overlay each group with a small geometry, or turn a
//! resolvable GDD into one with a larger block size first.

use std::collections::BTreeMap;

use crate::construct::field::td_any;
use crate::design::{Block, Design, Gdd, GddType, Rgdd};
use crate::error::{Error, Result};
use crate::verify::{verify_gdd, verify_pent, verify_resolution};

/// The two-line geometry on 2k points: each line is the other's opposite,
/// so it is a PENT(k, 1) with exactly one opposite line pair.
pub fn degenerate_pent(k: usize) -> Result<Design> {
    if k < 2 {
        return Err(Error::Param(format!("line size must be at least 2, got {k}")));
    }
    Design::new(
        2 * k,
        vec![Block::new((0..k).collect())?, Block::new((k..2 * k).collect())?],
    )
}

/// Replication number a filler must have to cover a group of `size` points.
fn filler_replication(size: usize, k: usize) -> Result<usize> {
    if size < k + 1 || (size - k - 1) % (k - 1) != 0 {
        return Err(Error::Param(format!(
            "group size {size} is not (k-1)r + k + 1 for any r with k={k}"
        )));
    }
    Ok((size - k - 1) / (k - 1))
}

/// Overlays every group of a k-GDD with a pentagonal geometry of matching
/// point count, producing a PENT(k, R + (N-1)(k+1)/(k-1)) where N is the
/// group count and R the sum of the fillers' replication numbers. The
/// output's opposite line pairs are exactly the fillers' pairs combined.
///
/// Fillers are keyed by group size; each filler's points map onto a group
/// in ascending order.
pub fn wfc_overlay(gdd: &Gdd, fillers: &BTreeMap<usize, Design>) -> Result<Design> {
    let k = gdd.k;
    if k < 2 {
        return Err(Error::Param(format!("block size must be at least 2, got {k}")));
    }
    let report = verify_gdd(&gdd.design, k, &gdd.groups)?;
    if !report.valid {
        return Err(Error::Param(format!(
            "overlay base is not a {k}-GDD: {}",
            report.violations.join("; ")
        )));
    }

    // One verification per distinct group size; groups of equal size share
    // a filler.
    let mut filler_r: BTreeMap<usize, usize> = BTreeMap::new();
    let mut filler_olp: BTreeMap<usize, usize> = BTreeMap::new();
    let mut n_groups = 0usize;
    let mut r_sum = 0usize;
    let mut olp_sum = 0usize;
    for group in &gdd.groups {
        let size = group.len();
        n_groups += 1;
        if let Some(&r) = filler_r.get(&size) {
            r_sum += r;
            olp_sum += filler_olp[&size];
            continue;
        }
        let filler = fillers.get(&size).ok_or_else(|| {
            Error::Ingredient(format!("pentagonal filler on {size} points"))
        })?;
        let r = filler_replication(size, k)?;
        let rep = verify_pent(filler, k, r)?;
        if !rep.is_valid() {
            return Err(Error::Ingredient(format!(
                "filler on {size} points is not a valid geometry: {}",
                rep.violations.join("; ")
            )));
        }
        let olp = rep.deficiency.olp_count;
        filler_r.insert(size, r);
        filler_olp.insert(size, olp);
        r_sum += r;
        olp_sum += olp;
    }

    if n_groups == 0 {
        return Err(Error::Param("overlay base has no groups".into()));
    }
    let extra = (n_groups - 1) * (k + 1);
    if extra % (k - 1) != 0 {
        return Err(Error::Param(format!(
            "(N-1)(k+1) = {extra} is not divisible by k-1 = {}",
            k - 1
        )));
    }
    let r = r_sum + extra / (k - 1);

    let mut blocks: Vec<Block> = gdd.design.blocks().to_vec();
    for group in &gdd.groups {
        let mut sorted = group.clone();
        sorted.sort_unstable();
        let filler = &fillers[&sorted.len()];
        for fb in filler.blocks() {
            blocks.push(Block::new(fb.points().iter().map(|&t| sorted[t]).collect())?);
        }
    }
    let out = Design::new(gdd.design.v(), blocks)?;

    let rep = verify_pent(&out, k, r)?;
    let olp = rep.deficiency.olp_count;
    if !rep.is_valid() || olp != olp_sum {
        return Err(Error::Ingredient(format!(
            "overlay output failed verification (expected {olp_sum} opposite pairs, got {olp}): {}",
            rep.violations.join("; ")
        )));
    }
    Ok(out)
}

/// Replaces every point of a k-GDD by `h` points, every block by a copy of
/// a transversal design with k groups of side h. Group sizes scale by h.
///
/// The cell filler defaults to the field/product construction; `h` values
/// it cannot reach need an explicitly supplied TD(k, h).
pub fn inflate(gdd: &Gdd, h: usize, cell_filler: Option<&Gdd>) -> Result<Gdd> {
    if h == 0 {
        return Err(Error::Param("inflation factor must be positive".into()));
    }
    if h == 1 && cell_filler.is_none() {
        return Ok(gdd.clone());
    }
    let k = gdd.k;
    let cell = match cell_filler {
        Some(c) => c.clone(),
        None => td_any(k, h)?,
    };
    let expected = GddType::new([(h, k)])?;
    if cell.k != k || cell.gdd_type()? != expected {
        return Err(Error::Param(format!(
            "cell filler must be a {k}-GDD of type {expected}, got {}",
            cell.gdd_type().map(|t| t.to_string()).unwrap_or_else(|e| e.to_string())
        )));
    }
    let cell_report = verify_gdd(&cell.design, k, &cell.groups)?;
    if !cell_report.valid {
        return Err(Error::Param(format!(
            "cell filler is not a valid {k}-GDD: {}",
            cell_report.violations.join("; ")
        )));
    }
    // Offsets of each cell block inside each cell group, in group order.
    let mut cell_sorted: Vec<Vec<usize>> = cell.groups.clone();
    for g in &mut cell_sorted {
        g.sort_unstable();
    }
    let mut point_slot = vec![(0usize, 0usize); cell.design.v()];
    for (gi, g) in cell_sorted.iter().enumerate() {
        for (off, &p) in g.iter().enumerate() {
            point_slot[p] = (gi, off);
        }
    }
    let cell_offsets: Vec<Vec<usize>> = cell
        .design
        .blocks()
        .iter()
        .map(|b| {
            let mut offs = vec![usize::MAX; k];
            for &p in b.points() {
                let (gi, off) = point_slot[p];
                offs[gi] = off;
            }
            offs
        })
        .collect();
    if cell_offsets.iter().any(|o| o.contains(&usize::MAX)) {
        return Err(Error::Param("cell filler has a non-transversal block".into()));
    }

    let mut blocks = Vec::with_capacity(gdd.design.block_count() * cell_offsets.len());
    for block in gdd.design.blocks() {
        for offs in &cell_offsets {
            let pts: Vec<usize> = block
                .points()
                .iter()
                .enumerate()
                .map(|(i, &x)| x * h + offs[i])
                .collect();
            blocks.push(Block::new(pts)?);
        }
    }
    let design = Design::new(gdd.design.v() * h, blocks)?;
    let groups: Vec<Vec<usize>> = gdd
        .groups
        .iter()
        .map(|g| g.iter().flat_map(|&x| x * h..(x + 1) * h).collect())
        .collect();
    let out = Gdd { design, groups, k };
    let report = verify_gdd(&out.design, k, &out.groups)?;
    if !report.valid {
        return Err(Error::Param(format!(
            "inflated design failed verification: {}",
            report.violations.join("; ")
        )));
    }
    Ok(out)
}

/// Adds one new point per parallel class, appended to every block of that
/// class, and collects the new points into one extra group. Block size and
/// the GDD order both grow by the class structure: a k-RGDD of type g^u
/// becomes a (k+1)-GDD of type g^u d^1 with d classes.
pub fn rgdd_to_gdd(rgdd: &Rgdd) -> Result<Gdd> {
    let base = &rgdd.gdd;
    if !verify_resolution(&base.design, &rgdd.classes) {
        return Err(Error::Resolution(
            "block classes do not partition the points into parallel classes".into(),
        ));
    }
    let v = base.design.v();
    let d = rgdd.classes.len();
    let mut blocks: Vec<Block> = base.design.blocks().to_vec();
    for (ci, class) in rgdd.classes.iter().enumerate() {
        for &bi in class {
            let mut pts = blocks[bi].points().to_vec();
            pts.push(v + ci);
            blocks[bi] = Block::new(pts)?;
        }
    }
    let design = Design::new(v + d, blocks)?;
    let mut groups = base.groups.clone();
    groups.push((v..v + d).collect());
    let out = Gdd { design, groups, k: base.k + 1 };
    let report = verify_gdd(&out.design, out.k, &out.groups)?;
    if !report.valid {
        return Err(Error::Resolution(format!(
            "augmented design is not a {}-GDD: {}",
            out.k,
            report.violations.join("; ")
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::field::{rgdd_from_mols, td};

    #[test]
    fn degenerate_shapes() {
        for k in [2, 4, 5] {
            let d = degenerate_pent(k).unwrap();
            assert_eq!(d.v(), 2 * k);
            assert_eq!(d.block_count(), 2);
            let rep = verify_pent(&d, k, 1).unwrap();
            assert!(rep.is_valid());
            assert_eq!(rep.deficiency.olp_count, 1);
        }
        assert!(degenerate_pent(1).is_err());
    }

    #[test]
    fn overlay_single_group_returns_filler() {
        // One group, no blocks: the overlay is the filler itself.
        let filler = degenerate_pent(4).unwrap();
        let gdd = Gdd {
            design: Design::new(8, vec![]).unwrap(),
            groups: vec![(0..8).collect()],
            k: 4,
        };
        let mut fillers = BTreeMap::new();
        fillers.insert(8, filler.clone());
        let out = wfc_overlay(&gdd, &fillers).unwrap();
        assert_eq!(out, filler);
    }

    #[test]
    fn overlay_missing_filler_is_an_ingredient_error() {
        let gdd = td(5, 7).unwrap();
        let fillers = BTreeMap::new();
        assert!(matches!(wfc_overlay(&gdd, &fillers), Err(Error::Ingredient(_))));
    }

    #[test]
    fn overlay_replication_formula() {
        // TD(2,5) is a 2-GDD of type 5^2; a PENT(2,2) on 5 points fills
        // each group, giving r = 2 + 2 + (2-1)(3)/1 = 7.
        let gdd = td(2, 5).unwrap();
        let pentagon = Design::new(
            5,
            (0..5)
                .map(|i| Block::new(vec![i, (i + 1) % 5]).unwrap())
                .collect(),
        )
        .unwrap();
        let mut fillers = BTreeMap::new();
        fillers.insert(5, pentagon);
        let out = wfc_overlay(&gdd, &fillers).unwrap();
        let rep = verify_pent(&out, 2, 7).unwrap();
        assert!(rep.is_valid());
        assert_eq!(rep.deficiency.olp_count, 0);
    }

    #[test]
    fn inflate_identity_and_type_scaling() {
        let base = td(4, 3).unwrap();
        let same = inflate(&base, 1, None).unwrap();
        assert_eq!(same.design, base.design);
        let big = inflate(&base, 5, None).unwrap();
        assert_eq!(big.gdd_type().unwrap().to_string(), "15^4");
        assert_eq!(big.design.block_count(), 9 * 25);
    }

    #[test]
    fn inflate_missing_td_side() {
        let base = td(5, 7).unwrap();
        assert!(matches!(inflate(&base, 6, None), Err(Error::Ingredient(_))));
    }

    #[test]
    fn inflate_accepts_explicit_cell() {
        let base = td(4, 3).unwrap();
        let cell = td(4, 3).unwrap();
        let big = inflate(&base, 3, Some(&cell)).unwrap();
        assert_eq!(big.gdd_type().unwrap().to_string(), "9^4");
    }

    #[test]
    fn rgdd_augmentation() {
        let r = rgdd_from_mols(4, 5).unwrap();
        let g = rgdd_to_gdd(&r).unwrap();
        assert_eq!(g.k, 5);
        assert_eq!(g.gdd_type().unwrap().to_string(), "5^5");

        let r = rgdd_from_mols(3, 3).unwrap();
        let g = rgdd_to_gdd(&r).unwrap();
        assert_eq!(g.k, 4);
        assert_eq!(g.gdd_type().unwrap().to_string(), "3^4");
    }

    #[test]
    fn rgdd_augmentation_rejects_fake_classes() {
        let mut r = rgdd_from_mols(4, 5).unwrap();
        r.classes[0] = r.classes[1].clone();
        assert!(matches!(rgdd_to_gdd(&r), Err(Error::Resolution(_))));
    }
}
