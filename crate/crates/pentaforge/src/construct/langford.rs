//! Difference pairings and skew triples used by the block-size-3 family.

use crate::error::{Error, Result};

/// Ordered pair (a, b) with a < b from a difference pairing.
///
/// A pairing for parameter m consists of m mutually disjoint pairs whose
/// differences b - a sweep {3, ..., m+2} exactly once and whose elements
/// exhaust the ground set returned by [`element_set`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LangfordPair {
    pub a: usize,
    pub b: usize,
}

/// Triple (0, x, z) with 0 < x < z built from a pair via x = b - a, z = b + m + 2.
///
/// Over a full set of m triples the values {x, z - x, z} cover
/// {3, ..., 3m+2} when m = 0, 1 (mod 4) and {3, ..., 3m+1, 3m+3} otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewTriple {
    pub x: usize,
    pub z: usize,
}

/// Ground set covered by the pairs: {1..2m} when m = 0, 1 (mod 4),
/// otherwise {1..2m-1} with 2m replaced by 2m+1.
pub fn element_set(m: usize) -> Vec<usize> {
    let mut set: Vec<usize> = (1..=2 * m).collect();
    if m % 4 == 2 || m % 4 == 3 {
        set[2 * m - 1] = 2 * m + 1;
    }
    set
}

fn push_run(
    out: &mut Vec<LangfordPair>,
    lo: impl Fn(usize) -> isize,
    hi: impl Fn(usize) -> isize,
    j_max: isize,
) {
    let mut j = 0isize;
    while j <= j_max {
        let (a, b) = (lo(j as usize), hi(j as usize));
        out.push(LangfordPair {
            a: a as usize,
            b: b as usize,
        });
        j += 1;
    }
}

/// The m disjoint difference pairs for parameter m.
///
/// m = 5 and m = 6 are fixed lists; larger m follows one of four closed
/// forms selected by m mod 4. Rows are emitted in the closed forms' order.
pub fn langford_pairs(m: usize) -> Result<Vec<LangfordPair>> {
    if m < 5 {
        return Err(Error::Range(format!(
            "difference pairing needs m >= 5, got {m}"
        )));
    }
    let pair = |a: usize, b: usize| LangfordPair { a, b };
    if m == 5 {
        return Ok(vec![pair(1, 8), pair(4, 10), pair(2, 7), pair(5, 9), pair(3, 6)]);
    }
    if m == 6 {
        return Ok(vec![
            pair(6, 9),
            pair(1, 5),
            pair(3, 8),
            pair(7, 13),
            pair(4, 11),
            pair(2, 10),
        ]);
    }
    let mut out = Vec::with_capacity(m);
    match m % 4 {
        0 => {
            // m = 4t, m >= 8
            let t = (m / 4) as isize;
            push_run(&mut out, |j| 2 * t - j as isize - 2, |j| 2 * t + j as isize + 2, t - 3);
            push_run(&mut out, |j| t - j as isize, |j| 3 * t + j as isize + 1, t - 1);
            push_run(&mut out, |j| 6 * t - j as isize - 1, |j| 6 * t + j as isize + 2, t - 2);
            push_run(&mut out, |j| 5 * t - j as isize, |j| 7 * t + j as isize + 2, t - 2);
            let t = t as usize;
            out.push(pair(2 * t + 1, 4 * t + 1));
            out.push(pair(3 * t, 7 * t + 1));
            out.push(pair(2 * t - 1, 6 * t + 1));
            out.push(pair(2 * t, 6 * t));
        }
        1 => {
            // m = 4t + 1, m >= 9
            let t = ((m - 1) / 4) as isize;
            let mut j = 1isize;
            while j <= t {
                out.push(pair(j as usize, (4 * t - j + 2) as usize));
                j += 1;
            }
            j = 1;
            while j <= t - 1 {
                out.push(pair((j + t + 1) as usize, (3 * t - j + 2) as usize));
                j += 1;
            }
            j = 1;
            while j <= t {
                out.push(pair((j + 4 * t + 2) as usize, (8 * t - j + 3) as usize));
                j += 1;
            }
            j = 1;
            while j <= t - 2 {
                out.push(pair((j + 5 * t + 3) as usize, (7 * t - j + 3) as usize));
                j += 1;
            }
            let t = t as usize;
            out.push(pair(2 * t + 1, 6 * t + 4));
            out.push(pair(2 * t + 2, 6 * t + 3));
            out.push(pair(4 * t + 2, 6 * t + 2));
            out.push(pair(t + 1, 5 * t + 3));
        }
        2 => {
            // m = 4t + 10, m >= 10
            let t = ((m - 10) / 4) as isize;
            push_run(&mut out, |j| 2 * t - j as isize + 1, |j| 2 * t + j as isize + 5, t);
            push_run(&mut out, |j| t - j as isize, |j| 3 * t + j as isize + 7, t - 1);
            push_run(&mut out, |j| 6 * t - j as isize + 10, |j| 6 * t + j as isize + 15, t - 1);
            push_run(&mut out, |j| 5 * t - j as isize + 10, |j| 7 * t + j as isize + 16, t);
            let t = t as usize;
            out.push(pair(3 * t + 6, 7 * t + 15));
            out.push(pair(4 * t + 7, 8 * t + 19));
            out.push(pair(2 * t + 4, 6 * t + 11));
            out.push(pair(4 * t + 9, 8 * t + 17));
            out.push(pair(4 * t + 8, 6 * t + 13));
            out.push(pair(2 * t + 2, 6 * t + 12));
            out.push(pair(2 * t + 3, 6 * t + 14));
            out.push(pair(8 * t + 18, 8 * t + 21));
        }
        _ => {
            // m = 4t + 7, m >= 7
            let t = ((m - 7) / 4) as isize;
            push_run(&mut out, |j| 2 * t - j as isize + 1, |j| 2 * t + j as isize + 4, t);
            push_run(&mut out, |j| t - j as isize, |j| 3 * t + j as isize + 6, t - 1);
            push_run(&mut out, |j| 6 * t - j as isize + 8, |j| 6 * t + j as isize + 12, t - 1);
            push_run(&mut out, |j| 5 * t - j as isize + 8, |j| 7 * t + j as isize + 13, t);
            let t = t as usize;
            out.push(pair(3 * t + 5, 7 * t + 12));
            out.push(pair(4 * t + 6, 8 * t + 15));
            out.push(pair(2 * t + 3, 6 * t + 9));
            out.push(pair(4 * t + 7, 6 * t + 11));
            out.push(pair(2 * t + 2, 6 * t + 10));
        }
    }
    check_pairs(m, &out)?;
    Ok(out)
}

/// Invariant check: m disjoint pairs, differences exactly {3..m+2},
/// elements exactly [`element_set`].
fn check_pairs(m: usize, pairs: &[LangfordPair]) -> Result<()> {
    if pairs.len() != m {
        return Err(Error::Range(format!(
            "pairing for m={m} produced {} pairs",
            pairs.len()
        )));
    }
    let mut elements = Vec::with_capacity(2 * m);
    let mut diffs = Vec::with_capacity(m);
    for p in pairs {
        if p.a >= p.b {
            return Err(Error::Range(format!("pair ({}, {}) not increasing", p.a, p.b)));
        }
        elements.push(p.a);
        elements.push(p.b);
        diffs.push(p.b - p.a);
    }
    elements.sort_unstable();
    diffs.sort_unstable();
    if elements != element_set(m) {
        return Err(Error::Range(format!("pairing for m={m} misses its ground set")));
    }
    if diffs != (3..=m + 2).collect::<Vec<_>>() {
        return Err(Error::Range(format!("pairing for m={m} has wrong differences")));
    }
    Ok(())
}

/// The m triples (0, b-a, b+m+2) derived from [`langford_pairs`].
pub fn skew_triples(m: usize) -> Result<Vec<SkewTriple>> {
    let pairs = langford_pairs(m)?;
    let triples: Vec<SkewTriple> = pairs
        .iter()
        .map(|p| SkewTriple {
            x: p.b - p.a,
            z: p.b + m + 2,
        })
        .collect();
    // Union of {x, z-x, z} must cover the shifted target set exactly.
    let mut covered: Vec<usize> = triples
        .iter()
        .flat_map(|t| [t.x, t.z - t.x, t.z])
        .collect();
    covered.sort_unstable();
    let target: Vec<usize> = element_set(m)
        .into_iter()
        .map(|e| e + m + 2)
        .chain(3..=m + 2)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    if covered != target {
        return Err(Error::Range(format!("triples for m={m} miss their target set")));
    }
    Ok(triples)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuples(m: usize) -> Vec<(usize, usize)> {
        langford_pairs(m).unwrap().iter().map(|p| (p.a, p.b)).collect()
    }

    #[test]
    fn small_cases_are_fixed() {
        assert_eq!(tuples(5), vec![(1, 8), (4, 10), (2, 7), (5, 9), (3, 6)]);
        assert_eq!(
            tuples(6),
            vec![(6, 9), (1, 5), (3, 8), (7, 13), (4, 11), (2, 10)]
        );
    }

    #[test]
    fn m_eight_matches_closed_form() {
        assert_eq!(
            tuples(8),
            vec![
                (2, 7),
                (1, 8),
                (11, 14),
                (10, 16),
                (5, 9),
                (6, 15),
                (3, 13),
                (4, 12)
            ]
        );
    }

    #[test]
    fn below_five_rejected() {
        for m in 0..5 {
            assert!(matches!(langford_pairs(m), Err(Error::Range(_))));
        }
    }

    #[test]
    fn invariants_hold_across_residues() {
        // One m per residue class plus both hard-coded cases.
        for m in [5, 6, 7, 8, 9, 10, 11, 12, 13, 47, 98, 200, 401] {
            langford_pairs(m).unwrap();
            skew_triples(m).unwrap();
        }
    }

    #[test]
    fn triple_map_example() {
        let t = skew_triples(5).unwrap();
        assert_eq!((t[0].x, t[0].z), (7, 15));
    }

    #[test]
    fn triple_targets_by_residue() {
        // m = 5: targets {3..17}; m = 6: {3..19, 21}.
        let union = |m: usize| {
            let mut u: Vec<usize> = skew_triples(m)
                .unwrap()
                .iter()
                .flat_map(|t| [t.x, t.z - t.x, t.z])
                .collect();
            u.sort_unstable();
            u.dedup();
            u
        };
        assert_eq!(union(5), (3..=17).collect::<Vec<_>>());
        let mut expect = (3..=19).collect::<Vec<_>>();
        expect.push(21);
        assert_eq!(union(6), expect);
    }
}
