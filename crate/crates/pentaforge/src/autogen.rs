//! Piecewise modular point maps and orbit development.
//!
//! Every catalogued design is generated from a handful of base blocks by a
//! point automorphism that acts as an independent cyclic shift on each of a
//! few label segments, e.g. `x + 4 (mod 44)` on the whole point set, or
//! `x + 2 (mod 80)` on the first 80 labels combined with `80 + (x - 80 + 3j
//! mod 6)` on the rest.

use crate::design::Block;
use crate::error::{Error, Result};

/// One segment of labels `offset .. offset+modulus` shifted by `multiplier`
/// per orbit step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SegmentSpec {
    pub offset: usize,
    pub modulus: usize,
    pub multiplier: usize,
}

/// An ordered list of segments tiling `0..v`, applied `orbit_count` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSpec {
    segments: Vec<SegmentSpec>,
    orbit_count: usize,
}

impl AutomorphismSpec {
    /// Validates the tiling and the return-to-identity condition
    /// multiplier * J = 0 (mod modulus) for every segment.
    pub fn new(segments: Vec<SegmentSpec>, orbit_count: usize) -> Result<Self> {
        if orbit_count == 0 {
            return Err(Error::Param("orbit count J must be at least 1".into()));
        }
        if segments.is_empty() {
            return Err(Error::Param("automorphism needs at least one segment".into()));
        }
        let mut next = 0;
        for seg in &segments {
            if seg.modulus == 0 {
                return Err(Error::Param("segment modulus must be at least 1".into()));
            }
            if seg.offset != next {
                return Err(Error::Param(format!(
                    "segments must tile the labels: expected offset {next}, got {}",
                    seg.offset
                )));
            }
            if (seg.multiplier * orbit_count) % seg.modulus != 0 {
                return Err(Error::Param(format!(
                    "step {} with J={orbit_count} does not return to identity mod {}",
                    seg.multiplier, seg.modulus
                )));
            }
            next += seg.modulus;
        }
        Ok(AutomorphismSpec { segments, orbit_count })
    }

    pub fn segments(&self) -> &[SegmentSpec] {
        &self.segments
    }

    /// J: the images are indexed j = 0..J.
    pub fn orbit_count(&self) -> usize {
        self.orbit_count
    }

    /// Number of labels covered by the segments.
    pub fn point_count(&self) -> usize {
        let last = self.segments.last().unwrap();
        last.offset + last.modulus
    }

    /// Image of `p` under the j-th power of the map.
    pub fn apply(&self, j: usize, p: usize) -> Result<usize> {
        if j >= self.orbit_count {
            return Err(Error::Param(format!(
                "orbit index {j} out of range, J={}",
                self.orbit_count
            )));
        }
        for seg in &self.segments {
            if p >= seg.offset && p < seg.offset + seg.modulus {
                return Ok(seg.offset + (p - seg.offset + seg.multiplier * j) % seg.modulus);
            }
        }
        Err(Error::Spec(p))
    }

    /// All J images of every base block, base-block order first and orbit
    /// index second, so the output is deterministic. Repeated blocks are
    /// kept; a short orbit is a data error for the verifier to flag.
    pub fn develop(&self, base_blocks: &[Block]) -> Result<Vec<Block>> {
        let mut out = Vec::with_capacity(base_blocks.len() * self.orbit_count);
        for base in base_blocks {
            for j in 0..self.orbit_count {
                let image: Result<Vec<usize>> =
                    base.points().iter().map(|&p| self.apply(j, p)).collect();
                out.push(Block::new(image?)?);
            }
        }
        Ok(out)
    }

    /// Parses `AUT seg=<offset>,<modulus>,<multiplier>[;...] J=<J>`.
    pub fn parse(line: &str) -> Result<Self> {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("AUT") {
            return Err(Error::Parse(format!("expected AUT line, got {line:?}")));
        }
        let mut segments = Vec::new();
        let mut orbit_count = None;
        for tok in tokens {
            match tok.split_once('=') {
                Some(("seg", val)) => {
                    for part in val.split(';') {
                        let nums: Vec<usize> = part
                            .split(',')
                            .map(|t| {
                                t.parse().map_err(|_| {
                                    Error::Parse(format!("bad segment {part:?} in {line:?}"))
                                })
                            })
                            .collect::<Result<_>>()?;
                        if nums.len() != 3 {
                            return Err(Error::Parse(format!(
                                "segment {part:?} must be offset,modulus,multiplier"
                            )));
                        }
                        segments.push(SegmentSpec {
                            offset: nums[0],
                            modulus: nums[1],
                            multiplier: nums[2],
                        });
                    }
                }
                Some(("J", val)) => {
                    orbit_count = Some(
                        val.parse()
                            .map_err(|_| Error::Parse(format!("bad J in {line:?}")))?,
                    )
                }
                _ => return Err(Error::Parse(format!("unexpected AUT token {tok:?}"))),
            }
        }
        let orbit_count =
            orbit_count.ok_or_else(|| Error::Parse(format!("AUT line missing J: {line:?}")))?;
        Self::new(segments, orbit_count)
    }

    pub fn format(&self) -> String {
        let segs = self
            .segments
            .iter()
            .map(|s| format!("{},{},{}", s.offset, s.modulus, s.multiplier))
            .collect::<Vec<_>>()
            .join(";");
        format!("AUT seg={segs} J={}", self.orbit_count)
    }
}

/// Single full-cycle shift: `x + step (mod v)` with J = v / gcd nowhere
/// needed by callers, so J is passed explicitly.
pub fn cyclic(v: usize, step: usize, orbit_count: usize) -> Result<AutomorphismSpec> {
    AutomorphismSpec::new(vec![SegmentSpec { offset: 0, modulus: v, multiplier: step }], orbit_count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_single_segment() {
        let spec = cyclic(44, 4, 11).unwrap();
        assert_eq!(spec.apply(1, 42).unwrap(), 2);
        assert_eq!(spec.apply(0, 42).unwrap(), 42);
        assert!(spec.apply(11, 0).is_err());
        assert!(matches!(spec.apply(1, 44), Err(Error::Spec(44))));
    }

    #[test]
    fn apply_fixed_tail_segment() {
        // 68 moving labels plus 2 fixed ones
        let spec = AutomorphismSpec::new(
            vec![
                SegmentSpec { offset: 0, modulus: 68, multiplier: 4 },
                SegmentSpec { offset: 68, modulus: 2, multiplier: 0 },
            ],
            17,
        )
        .unwrap();
        assert_eq!(spec.apply(3, 68).unwrap(), 68);
        assert_eq!(spec.apply(3, 1).unwrap(), 13);
    }

    #[test]
    fn apply_offset_segment() {
        let spec = AutomorphismSpec::new(
            vec![
                SegmentSpec { offset: 0, modulus: 80, multiplier: 2 },
                SegmentSpec { offset: 80, modulus: 6, multiplier: 3 },
            ],
            40,
        )
        .unwrap();
        assert_eq!(spec.apply(1, 80).unwrap(), 83);
        assert_eq!(spec.apply(2, 80).unwrap(), 80);
    }

    #[test]
    fn validation_rejects_bad_specs() {
        assert!(cyclic(44, 3, 11).is_err()); // 3*11 not 0 mod 44
        assert!(cyclic(44, 4, 0).is_err());
        let gap = AutomorphismSpec::new(
            vec![
                SegmentSpec { offset: 0, modulus: 10, multiplier: 1 },
                SegmentSpec { offset: 11, modulus: 5, multiplier: 0 },
            ],
            10,
        );
        assert!(gap.is_err());
    }

    #[test]
    fn develop_counts_and_order() {
        let spec = cyclic(5, 1, 5).unwrap();
        let base = vec![Block::new(vec![0, 1]).unwrap()];
        let blocks = spec.develop(&base).unwrap();
        assert_eq!(blocks.len(), 5);
        let expect: Vec<Block> = vec![
            Block::new(vec![0, 1]).unwrap(),
            Block::new(vec![1, 2]).unwrap(),
            Block::new(vec![2, 3]).unwrap(),
            Block::new(vec![3, 4]).unwrap(),
            Block::new(vec![0, 4]).unwrap(),
        ];
        assert_eq!(blocks, expect);
    }

    #[test]
    fn aut_line_round_trip() {
        for line in [
            "AUT seg=0,44,4 J=11",
            "AUT seg=0,68,4;68,2,0 J=17",
            "AUT seg=0,180,1;180,20,1;200,36,1 J=180",
        ] {
            let spec = AutomorphismSpec::parse(line).unwrap();
            assert_eq!(spec.format(), line);
        }
        assert!(AutomorphismSpec::parse("AUT seg=0,44 J=11").is_err());
        assert!(AutomorphismSpec::parse("AUT seg=0,44,4").is_err());
        assert!(AutomorphismSpec::parse("seg=0,44,4 J=11").is_err());
    }

    #[test]
    fn identity_at_j_zero_and_bijection() {
        let spec = AutomorphismSpec::parse("AUT seg=0,80,2;80,6,3 J=40").unwrap();
        let v = spec.point_count();
        assert_eq!(v, 86);
        for j in 0..spec.orbit_count() {
            let mut seen = vec![false; v];
            for p in 0..v {
                let q = spec.apply(j, p).unwrap();
                assert!(!seen[q]);
                seen[q] = true;
                if j == 0 {
                    assert_eq!(q, p);
                }
            }
        }
    }
}
