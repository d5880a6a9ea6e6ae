//! Line-oriented text format for designs.
//!
//! ```text
//! DESIGN v=<v> kind=<PENT|GDD|RGDD>
//! K=<k> R=<r>                # optional parameter line
//! GROUPS                     # optional, one group per line
//! <labels...>
//! BLOCKS                     # one block per line
//! <labels...>
//! ```
//!
//! `#` starts a comment anywhere on a line. Files written by [`DesignFile::format`]
//! round-trip bit-exactly through [`DesignFile::parse`]; block and group order
//! is preserved.
//!
//! The format has no explicit resolution section. For `kind=RGDD` the block
//! list is the resolution order: each parallel class is a contiguous run of
//! v/k blocks.

use std::fs;
use std::path::Path;

use crate::design::{Block, Design};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Pent,
    Gdd,
    Rgdd,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Pent => "PENT",
            Kind::Gdd => "GDD",
            Kind::Rgdd => "RGDD",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "PENT" => Ok(Kind::Pent),
            "GDD" => Ok(Kind::Gdd),
            "RGDD" => Ok(Kind::Rgdd),
            other => Err(Error::Parse(format!("unknown design kind {other:?}"))),
        }
    }
}

/// A design file: the design plus whatever metadata the header carried.
#[derive(Clone, Debug, PartialEq)]
pub struct DesignFile {
    pub kind: Kind,
    pub design: Design,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub groups: Option<Vec<Vec<usize>>>,
}

impl DesignFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let header = lines.next().ok_or_else(|| Error::Parse("empty design file".into()))?;
        let (v, kind) = parse_header(header)?;

        let mut k = None;
        let mut r = None;
        let mut groups: Option<Vec<Vec<usize>>> = None;
        let mut blocks = Vec::new();
        let mut section = Section::Header;

        for line in lines {
            match line {
                "GROUPS" => {
                    groups = Some(Vec::new());
                    section = Section::Groups;
                }
                "BLOCKS" => section = Section::Blocks,
                _ => match section {
                    Section::Header => {
                        let (pk, pr) = parse_params(line)?;
                        k = k.or(pk);
                        r = r.or(pr);
                    }
                    Section::Groups => {
                        groups.as_mut().unwrap().push(parse_labels(line)?);
                    }
                    Section::Blocks => {
                        blocks.push(Block::new(parse_labels(line)?)?);
                    }
                },
            }
        }
        if section != Section::Blocks {
            return Err(Error::Parse("missing BLOCKS section".into()));
        }
        Ok(DesignFile { kind, design: Design::new(v, blocks)?, k, r, groups })
    }

    pub fn format(&self) -> String {
        let mut out = format!("DESIGN v={} kind={}\n", self.design.v(), self.kind.as_str());
        match (self.k, self.r) {
            (Some(k), Some(r)) => out.push_str(&format!("K={k} R={r}\n")),
            (Some(k), None) => out.push_str(&format!("K={k}\n")),
            (None, Some(r)) => out.push_str(&format!("R={r}\n")),
            (None, None) => {}
        }
        if let Some(groups) = &self.groups {
            out.push_str("GROUPS\n");
            for g in groups {
                out.push_str(&join_labels(g));
                out.push('\n');
            }
        }
        out.push_str("BLOCKS\n");
        for b in self.design.blocks() {
            out.push_str(&b.to_string());
            out.push('\n');
        }
        out
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        Ok(fs::write(path, self.format())?)
    }

    /// Resolution classes of an RGDD file: consecutive runs of v/k blocks.
    pub fn classes(&self) -> Result<Vec<Vec<usize>>> {
        let k = self
            .k
            .ok_or_else(|| Error::Resolution("RGDD file is missing K=<k>".into()))?;
        let v = self.design.v();
        if k == 0 || v % k != 0 {
            return Err(Error::Resolution(format!(
                "point count {v} is not a multiple of block size {k}"
            )));
        }
        let per_class = v / k;
        let b = self.design.block_count();
        if per_class == 0 || b % per_class != 0 {
            return Err(Error::Resolution(format!(
                "{b} blocks do not split into classes of {per_class}"
            )));
        }
        Ok((0..b / per_class)
            .map(|c| (c * per_class..(c + 1) * per_class).collect())
            .collect())
    }
}

#[derive(PartialEq)]
enum Section {
    Header,
    Groups,
    Blocks,
}

/// Strips comments and blank lines, yielding trimmed content lines.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().filter_map(|line| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some(line)
        }
    })
}

/// Parses `DESIGN v=<v> kind=<KIND>`.
pub(crate) fn parse_header(line: &str) -> Result<(usize, Kind)> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("DESIGN") {
        return Err(Error::Parse(format!("expected DESIGN header, got {line:?}")));
    }
    let mut v = None;
    let mut kind = None;
    for tok in tokens {
        match tok.split_once('=') {
            Some(("v", val)) => {
                v = Some(val.parse().map_err(|_| Error::Parse(format!("bad v in {line:?}")))?)
            }
            Some(("kind", val)) => kind = Some(Kind::parse(val)?),
            _ => return Err(Error::Parse(format!("unexpected header token {tok:?}"))),
        }
    }
    match (v, kind) {
        (Some(v), Some(kind)) => Ok((v, kind)),
        _ => Err(Error::Parse(format!("header must set v and kind: {line:?}"))),
    }
}

/// Parses a `K=<k> R=<r>` line; either key may be absent.
pub(crate) fn parse_params(line: &str) -> Result<(Option<usize>, Option<usize>)> {
    let mut k = None;
    let mut r = None;
    for tok in line.split_whitespace() {
        match tok.split_once('=') {
            Some(("K", val)) => {
                k = Some(val.parse().map_err(|_| Error::Parse(format!("bad K in {line:?}")))?)
            }
            Some(("R", val)) => {
                r = Some(val.parse().map_err(|_| Error::Parse(format!("bad R in {line:?}")))?)
            }
            _ => return Err(Error::Parse(format!("unexpected line {line:?}"))),
        }
    }
    Ok((k, r))
}

pub(crate) fn parse_labels(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad point label {t:?}"))))
        .collect()
}

fn join_labels(labels: &[usize]) -> String {
    labels.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}
