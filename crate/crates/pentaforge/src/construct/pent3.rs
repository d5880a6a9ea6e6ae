//! Direct cyclic construction of PENT(3, 6m+3) for m >= 5.

use crate::autogen::{AutomorphismSpec, SegmentSpec};
use crate::construct::langford::skew_triples;
use crate::design::{Block, Design};
use crate::error::{Error, Result};
use crate::verify::{difference_census, verify_pent, Difference, PentReport};

/// A developed PENT(3, 6m+3) together with its generating data.
///
/// Points are Z_q x {0,1} flattened as x + q*j with q = 6m+5. The design
/// is the orbit of 4m+2 base blocks under x_j -> (x+1)_j; the three base
/// deficiency edges develop into the full non-collinearity graph.
#[derive(Clone, Debug)]
pub struct Pent3 {
    pub m: usize,
    pub q: usize,
    pub design: Design,
    pub base_blocks: Vec<Vec<(usize, usize)>>,
    pub opp_edges: Vec<((usize, usize), (usize, usize))>,
    pub census: Vec<Difference>,
    pub report: PentReport,
}

impl Pent3 {
    pub fn r(&self) -> usize {
        6 * self.m + 3
    }
}

/// Builds and fully re-verifies a PENT(3, 6m+3) on 12m+10 points.
///
/// Base blocks: the two opposite lines {0_1, 2_0, (q-2)_0} and
/// {0_0, 1_1, (q-1)_1}, the 3m mixed blocks {0_0, i_0, (i/2 mod q)_1}
/// for i in {1..3m+2} minus {2, 4}, and m pure part-1 blocks from the
/// skew triples. Verification failures propagate as errors.
pub fn pent3_direct(m: usize) -> Result<Pent3> {
    if m < 5 {
        return Err(Error::Range(format!("direct family needs m >= 5, got {m}")));
    }
    let q = 6 * m + 5;
    let inv2 = (q + 1) / 2; // halving map: inv2 * 2 = q + 1 = 1 mod q

    let mut base: Vec<Vec<(usize, usize)>> = Vec::with_capacity(4 * m + 2);
    base.push(vec![(0, 1), (2, 0), (q - 2, 0)]);
    base.push(vec![(0, 0), (1, 1), (q - 1, 1)]);
    for i in (1..=3 * m + 2).filter(|i| *i != 2 && *i != 4) {
        base.push(vec![(0, 0), (i, 0), (i * inv2 % q, 1)]);
    }
    for t in skew_triples(m)? {
        base.push(vec![(0, 1), (t.x, 1), (t.z, 1)]);
    }

    let opp_edges = vec![((0, 0), (0, 1)), ((0, 1), (1, 1)), ((0, 0), (2, 0))];
    let census = difference_census(&base, &opp_edges, q)?;

    let aut = AutomorphismSpec::new(
        vec![
            SegmentSpec { offset: 0, modulus: q, multiplier: 1 },
            SegmentSpec { offset: q, modulus: q, multiplier: 1 },
        ],
        q,
    )?;
    let base_blocks: Vec<Block> = base
        .iter()
        .map(|b| Block::new(b.iter().map(|&(x, j)| x + q * j).collect()))
        .collect::<Result<_>>()?;
    let design = Design::new(2 * q, aut.develop(&base_blocks)?)?;

    let report = verify_pent(&design, 3, 6 * m + 3)?;
    if !report.is_valid() {
        return Err(Error::Param(format!(
            "developed design for m={m} failed verification: {}",
            report.violations.join("; ")
        )));
    }
    Ok(Pent3 { m, q, design, base_blocks: base, opp_edges, census, report })
}
