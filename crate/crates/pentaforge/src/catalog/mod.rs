//! Embedded registry of explicitly published designs: base blocks plus the
//! automorphism that develops them, plus the claimed statistics each entry
//! must reproduce.
//!
//! The data lives as plain text files under `catalog/` in the repository
//! and is compiled in. Base blocks are stored verbatim (including unsorted
//! point listings); normalization happens at load so the files stay
//! diffable against their sources. A claim mismatch at instantiation is a
//! transcription error, reported as [`Error::DataCorruption`] with the
//! entry id.

mod data;

use std::sync::LazyLock;

use crate::autogen::AutomorphismSpec;
use crate::design::{parse_gdd_type, type_of_groups, Block, Design, GddType};
use crate::error::{Error, Result};
use crate::io::{content_lines, parse_header, parse_labels, parse_params, Kind};
use crate::verify::{verify_gdd, verify_pent};

/// Statistics the source claims for a pentagonal-geometry entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PentClaims {
    pub girth: usize,
    pub connected: bool,
    pub olp_count: usize,
    /// d: the first d base blocks are the opposite lines of points 0..d.
    pub opp_prefix_count: usize,
}

/// One registry entry, parsed but not developed.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub kind: Kind,
    pub v: usize,
    pub k: usize,
    pub r: Option<usize>,
    pub gdd_type: Option<GddType>,
    pub base_blocks: Vec<Block>,
    pub automorphism: AutomorphismSpec,
    pub claims: Option<PentClaims>,
    pub groups: Option<Vec<Vec<usize>>>,
    raw: &'static str,
}

impl CatalogEntry {
    /// Verbatim catalog file for this entry.
    pub fn raw_text(&self) -> &'static str {
        self.raw
    }
}

/// A developed and verified catalog design.
#[derive(Clone, Debug)]
pub struct Instantiated {
    pub design: Design,
    pub groups: Option<Vec<Vec<usize>>>,
}

static REGISTRY: LazyLock<Vec<CatalogEntry>> = LazyLock::new(|| {
    data::RAW_ENTRIES
        .iter()
        .map(|&(id, text)| {
            parse_entry(id, text).unwrap_or_else(|e| panic!("catalog entry {id}: {e}"))
        })
        .collect()
});

fn parse_entry(id: &'static str, text: &'static str) -> Result<CatalogEntry> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Parse(format!("{id}: empty entry")))?;
    let (v, kind) = parse_header(header)?;

    let mut k = None;
    let mut r = None;
    let mut gdd_type = None;
    let mut automorphism = None;
    let mut claims = None;
    let mut groups: Option<Vec<Vec<usize>>> = None;
    let mut base_blocks = Vec::new();
    let mut section = EntrySection::Header;

    for line in lines {
        if line == "GROUPS" {
            groups = Some(Vec::new());
            section = EntrySection::Groups;
        } else if line == "BASE" {
            section = EntrySection::Base;
        } else if let Some(rest) = line.strip_prefix("TYPE ") {
            gdd_type = Some(parse_gdd_type(rest)?);
        } else if line.starts_with("AUT ") {
            automorphism = Some(AutomorphismSpec::parse(line)?);
        } else if let Some(rest) = line.strip_prefix("CLAIMS ") {
            claims = Some(parse_claims(rest)?);
        } else {
            match section {
                EntrySection::Header => {
                    let (pk, pr) = parse_params(line)?;
                    k = k.or(pk);
                    r = r.or(pr);
                }
                EntrySection::Groups => groups.as_mut().unwrap().push(parse_labels(line)?),
                EntrySection::Base => base_blocks.push(Block::new(parse_labels(line)?)?),
            }
        }
    }

    let k = k.ok_or_else(|| Error::Parse(format!("{id}: missing K")))?;
    let automorphism =
        automorphism.ok_or_else(|| Error::Parse(format!("{id}: missing AUT line")))?;
    if automorphism.point_count() != v {
        return Err(Error::Parse(format!(
            "{id}: automorphism covers {} labels, entry has v={v}",
            automorphism.point_count()
        )));
    }
    Ok(CatalogEntry { id, kind, v, k, r, gdd_type, base_blocks, automorphism, claims, groups, raw: text })
}

#[derive(PartialEq)]
enum EntrySection {
    Header,
    Groups,
    Base,
}

fn parse_claims(rest: &str) -> Result<PentClaims> {
    let mut girth = None;
    let mut connected = None;
    let mut olp = None;
    let mut d = None;
    for tok in rest.split_whitespace() {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad CLAIMS token {tok:?}")))?;
        let num: usize =
            val.parse().map_err(|_| Error::Parse(format!("bad CLAIMS value {tok:?}")))?;
        match key {
            "girth" => girth = Some(num),
            "connected" => connected = Some(num != 0),
            "olp" => olp = Some(num),
            "d" => d = Some(num),
            _ => return Err(Error::Parse(format!("unknown CLAIMS key {key:?}"))),
        }
    }
    match (girth, connected, olp, d) {
        (Some(girth), Some(connected), Some(olp_count), Some(opp_prefix_count)) => {
            Ok(PentClaims { girth, connected, olp_count, opp_prefix_count })
        }
        _ => Err(Error::Parse("CLAIMS must set girth, connected, olp and d".into())),
    }
}

/// Selection criteria for [`list`]; `None` fields match everything.
#[derive(Clone, Copy, Debug, Default)]
pub struct Filter {
    pub kind: Option<Kind>,
    pub k: Option<usize>,
    pub r: Option<usize>,
}

/// Entry ids in registry order (block size 4 geometries, then block size 5,
/// then the group divisible designs by point count).
pub fn list(filter: Filter) -> Vec<&'static str> {
    REGISTRY
        .iter()
        .filter(|e| filter.kind.is_none_or(|kind| e.kind == kind))
        .filter(|e| filter.k.is_none_or(|k| e.k == k))
        .filter(|e| filter.r.is_none_or(|r| e.r == Some(r)))
        .map(|e| e.id)
        .collect()
}

/// All entries in registry order.
pub fn entries() -> &'static [CatalogEntry] {
    &REGISTRY
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::NotFound(format!("no catalog entry {id:?}")))
}

/// Develops an entry and verifies it against its claims.
pub fn instantiate(id: &str) -> Result<Instantiated> {
    let entry = entry(id)?;
    let blocks = entry.automorphism.develop(&entry.base_blocks)?;
    let design = Design::new(entry.v, blocks)?;
    let corrupt = |detail: String| Error::DataCorruption { id: entry.id.to_string(), detail };

    match entry.kind {
        Kind::Pent => {
            let r = entry.r.ok_or_else(|| corrupt("PENT entry without R".into()))?;
            let report = verify_pent(&design, entry.k, r)?;
            if !report.is_valid() {
                return Err(corrupt(format!("axiom violations: {:?}", report.violations)));
            }
            let claims =
                entry.claims.ok_or_else(|| corrupt("PENT entry without CLAIMS".into()))?;
            if report.deficiency.girth != Some(claims.girth) {
                return Err(corrupt(format!(
                    "girth {:?} does not match claimed {}",
                    report.deficiency.girth, claims.girth
                )));
            }
            if report.deficiency.connected != claims.connected {
                return Err(corrupt(format!(
                    "connectivity {} does not match claimed {}",
                    report.deficiency.connected, claims.connected
                )));
            }
            if report.deficiency.olp_count != claims.olp_count {
                return Err(corrupt(format!(
                    "olp count {} does not match claimed {}",
                    report.deficiency.olp_count, claims.olp_count
                )));
            }
            Ok(Instantiated { design, groups: None })
        }
        Kind::Gdd => {
            let groups =
                entry.groups.clone().ok_or_else(|| corrupt("GDD entry without GROUPS".into()))?;
            let report = verify_gdd(&design, entry.k, &groups)?;
            if !report.valid {
                return Err(corrupt(format!("GDD violations: {:?}", report.violations)));
            }
            let declared =
                entry.gdd_type.clone().ok_or_else(|| corrupt("GDD entry without TYPE".into()))?;
            let actual = type_of_groups(entry.v, &groups)?;
            if actual != declared {
                return Err(corrupt(format!("group type {actual} does not match declared {declared}")));
            }
            Ok(Instantiated { design, groups: Some(groups) })
        }
        Kind::Rgdd => Err(corrupt("catalog holds no resolvable entries".into())),
    }
}

/// Develops an entry and returns the full verification report.  Unlike
/// [`instantiate`], claim mismatches do not abort: they are folded into
/// the report as violations so batch runs can list every discrepancy.
pub fn verify_entry(id: &str) -> Result<crate::verify::VerifyReport> {
    use crate::verify::VerifyReport;
    let entry = entry(id)?;
    let blocks = entry.automorphism.develop(&entry.base_blocks)?;
    let design = Design::new(entry.v, blocks)?;
    match entry.kind {
        Kind::Pent => {
            let r = entry
                .r
                .ok_or_else(|| Error::Parse(format!("{id}: PENT entry without R")))?;
            let report = verify_pent(&design, entry.k, r)?;
            let mut out = VerifyReport::from_pent(&report);
            if let Some(claims) = entry.claims {
                let checks = [
                    (report.deficiency.girth == Some(claims.girth), format!(
                        "claimed girth {} but found {:?}",
                        claims.girth, report.deficiency.girth
                    )),
                    (report.deficiency.connected == claims.connected, format!(
                        "claimed connected = {} but found {}",
                        claims.connected, report.deficiency.connected
                    )),
                    (report.deficiency.olp_count == claims.olp_count, format!(
                        "claimed {} opposite line pairs but found {}",
                        claims.olp_count, report.deficiency.olp_count
                    )),
                ];
                for (ok, msg) in checks {
                    if !ok {
                        out.valid = false;
                        out.violations.push(msg);
                    }
                }
            }
            Ok(out)
        }
        Kind::Gdd => {
            let groups = entry
                .groups
                .clone()
                .ok_or_else(|| Error::Parse(format!("{id}: GDD entry without GROUPS")))?;
            let report = verify_gdd(&design, entry.k, &groups)?;
            let mut out = VerifyReport::from_gdd(&report, &design, entry.k);
            if let Some(declared) = &entry.gdd_type {
                let actual = type_of_groups(entry.v, &groups)?;
                if actual != *declared {
                    out.valid = false;
                    out.violations
                        .push(format!("group type {actual} does not match declared {declared}"));
                }
            }
            Ok(out)
        }
        Kind::Rgdd => Err(Error::Parse(format!("{id}: catalog holds no resolvable entries"))),
    }
}

/// Checks the opposite-line prefix convention: for an entry with a single
/// step-d segment, base block i is the opposite line of point i for every
/// i < d. Returns the (point, base block index) assignments.
pub fn opp_prefix(id: &str) -> Result<Vec<(usize, usize)>> {
    let entry = entry(id)?;
    if entry.kind != Kind::Pent {
        return Err(Error::Param(format!("{id} is not a pentagonal geometry")));
    }
    let claims = entry
        .claims
        .ok_or_else(|| Error::Param(format!("{id} carries no claims")))?;
    let segs = entry.automorphism.segments();
    if segs.len() != 1 || segs[0].multiplier != claims.opp_prefix_count {
        return Err(Error::Param(format!(
            "{id}: opposite-line prefix needs a single segment of step {}",
            claims.opp_prefix_count
        )));
    }
    let r = entry.r.unwrap();
    let blocks = entry.automorphism.develop(&entry.base_blocks)?;
    let design = Design::new(entry.v, blocks)?;
    let report = verify_pent(&design, entry.k, r)?;
    let orbit = entry.automorphism.orbit_count();

    let mut out = Vec::new();
    for i in 0..claims.opp_prefix_count {
        // base block i develops first at index i * J
        if report.opp_map[i] != Some(i * orbit) {
            return Err(Error::DataCorruption {
                id: entry.id.to_string(),
                detail: format!(
                    "base block {i} is not the opposite line of point {i} (opp index {:?})",
                    report.opp_map[i]
                ),
            });
        }
        out.push((i, i));
    }
    Ok(out)
}
