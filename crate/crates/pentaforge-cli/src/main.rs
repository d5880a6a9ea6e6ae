//! Command-line front end: batch verification, construction to design
//! files, spectrum queries and table replays.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid design or bad data,
//! 3 missing ingredient design.  Progress goes to standard error;
//! standard output carries only results.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use pentaforge::catalog::{self, Filter};
use pentaforge::construct::{
    degenerate_pent, inflate, m10_set, m40_set, pent3_direct, rgdd_from_mols, rgdd_to_gdd, td_any,
    wfc_overlay,
};
use pentaforge::io::{DesignFile, Kind};
use pentaforge::spectrum::{self, facts, plan_construction53, Status};
use pentaforge::verify::{verify_gdd, verify_pent, verify_resolution, VerifyReport};
use pentaforge::{Design, Error, Gdd, Result, Rgdd};

#[derive(Parser)]
#[command(name = "pentaforge", version, about = "Pentagonal geometry toolkit")]
struct Cli {
    /// Output format for reports and query results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; defaults to PENTAFORGE_JOBS, then all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the embedded design registry.
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Verify a design file or catalog entry.
    Verify(VerifyArgs),
    /// Build a design and write it as a design file.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Existence queries and table replays.
    Spectrum {
        #[command(subcommand)]
        what: SpectrumCmd,
    },
    /// Difference census of the base blocks behind a direct block size 3
    /// build.
    Diffcensus {
        /// Builds the geometry with replication number 6m + 3.
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Entry ids, optionally filtered.
    List {
        #[arg(long)]
        kind: Option<KindArg>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Header data and claims for one entry.
    Show { id: String },
    /// The developed design of one entry, in the design file format
    /// `verify` and the construct commands read.
    Emit {
        id: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Emit the stored base-block file verbatim instead.
        #[arg(long)]
        raw: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Pent,
    Gdd,
}

#[derive(Args)]
struct VerifyArgs {
    /// Design file path or catalog id.
    target: Option<String>,
    /// Verify every catalog entry.
    #[arg(long, conflicts_with = "target")]
    all_catalog: bool,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Direct block size 3 geometry with replication number 6m + 3.
    Pent3 {
        #[arg(long)]
        m: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Fill every group of a group divisible design with a pentagonal
    /// geometry of matching point count.
    Overlay {
        /// Group divisible design: file path or catalog id.
        #[arg(long)]
        gdd: String,
        /// Filler per group size, as SIZE=SOURCE.  SOURCE is a design
        /// file, a catalog id, or "degenerate".
        #[arg(long = "filler", value_name = "SIZE=SOURCE", required = true)]
        fillers: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Scale every group weight by h, replacing blocks by transversal
    /// designs.
    Inflate {
        /// Input design: file path or catalog id.
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        h: usize,
        /// Replacement cell, a GDD of type h^k; built from transversal
        /// designs when absent.
        #[arg(long)]
        cell: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Resolvable 4-group design turned into a 5-GDD by adding one point
    /// per parallel class.
    #[command(group = clap::ArgGroup::new("rgdd5_source").required(true))]
    Rgdd5 {
        /// Build the resolvable input from fields of this order.
        #[arg(long, group = "rgdd5_source")]
        q: Option<usize>,
        /// Read the resolvable input from a design file instead.
        #[arg(long = "in", group = "rgdd5_source")]
        input: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Transversal design with k groups of side q.
    Td {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Reachable patched-group sizes for the two transversal-design
    /// composition families.
    Mset {
        /// Family by uniform group count: 40 or 10.
        #[arg(long)]
        family: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        q: usize,
    },
}

#[derive(Subcommand)]
enum SpectrumCmd {
    /// What is known about the parameter pair (k, r).
    Status {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Re-derive every stored spectrum table from its production rule.
    ReplayTables,
    /// Candidate replication numbers from the transversal-design
    /// composition with weights g over u + 1 groups of side q.
    Plan53 {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r0: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Help and version exit cleanly; anything else is a usage error.
            return if e.exit_code() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };

    let jobs = cli.jobs.or_else(|| {
        std::env::var("PENTAFORGE_JOBS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    if let Some(n) = jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }

    match run(cli.command, cli.format) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Ingredient(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command, format: Format) -> Result<ExitCode> {
    match command {
        Command::Catalog { action } => catalog_cmd(action, format),
        Command::Verify(args) => verify_cmd(args, format),
        Command::Construct { what } => construct_cmd(what, format),
        Command::Spectrum { what } => spectrum_cmd(what, format),
        Command::Diffcensus { m } => diffcensus_cmd(m, format),
    }
}

fn catalog_cmd(action: CatalogCmd, format: Format) -> Result<ExitCode> {
    match action {
        CatalogCmd::List { kind, k, r } => {
            let filter = Filter {
                kind: kind.map(|ka| match ka {
                    KindArg::Pent => Kind::Pent,
                    KindArg::Gdd => Kind::Gdd,
                }),
                k,
                r,
            };
            let ids = catalog::list(filter);
            match format {
                Format::Text => {
                    for id in ids {
                        println!("{id}");
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&ids).expect("json output")),
            }
        }
        CatalogCmd::Show { id } => {
            let entry = catalog::entry(&id)?;
            match format {
                Format::Text => {
                    println!("id: {}", entry.id);
                    println!("kind: {}", entry.kind.as_str());
                    println!("v: {}", entry.v);
                    println!("k: {}", entry.k);
                    if let Some(r) = entry.r {
                        println!("r: {r}");
                    }
                    if let Some(t) = &entry.gdd_type {
                        println!("type: {t}");
                    }
                    println!("base blocks: {}", entry.base_blocks.len());
                    if let Some(c) = entry.claims {
                        println!(
                            "claims: girth {} connected {} olp {} opposite-prefix {}",
                            c.girth, c.connected, c.olp_count, c.opp_prefix_count
                        );
                    }
                }
                Format::Json => {
                    let value = json!({
                        "id": entry.id,
                        "kind": entry.kind.as_str(),
                        "v": entry.v,
                        "k": entry.k,
                        "r": entry.r,
                        "type": entry.gdd_type.as_ref().map(|t| t.to_string()),
                        "base_blocks": entry.base_blocks.len(),
                        "claims": entry.claims.map(|c| json!({
                            "girth": c.girth,
                            "connected": c.connected,
                            "olp_count": c.olp_count,
                            "opp_prefix_count": c.opp_prefix_count,
                        })),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).expect("json output"));
                }
            }
        }
        CatalogCmd::Emit { id, out, raw } => {
            let text = if raw {
                catalog::entry(&id)?.raw_text().to_string()
            } else {
                let entry = catalog::entry(&id)?;
                let inst = catalog::instantiate(&id)?;
                DesignFile {
                    kind: entry.kind,
                    design: inst.design,
                    k: Some(entry.k),
                    r: entry.r,
                    groups: inst.groups,
                }
                .format()
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: VerifyArgs, format: Format) -> Result<ExitCode> {
    if args.all_catalog {
        let ids = catalog::list(Filter::default());
        let total = ids.len();
        let reports: Vec<(String, Result<VerifyReport>)> = ids
            .par_iter()
            .map(|id| {
                let outcome = catalog::verify_entry(id);
                eprintln!(
                    "verified {id}: {}",
                    match &outcome {
                        Ok(rep) if rep.valid => "ok",
                        Ok(_) => "INVALID",
                        Err(_) => "ERROR",
                    }
                );
                (id.to_string(), outcome)
            })
            .collect();
        let mut all_ok = true;
        match format {
            Format::Text => {
                for (id, outcome) in &reports {
                    match outcome {
                        Ok(rep) if rep.valid => println!("{id} ok"),
                        Ok(rep) => {
                            all_ok = false;
                            println!("{id} INVALID: {}", rep.violations.join("; "));
                        }
                        Err(e) => {
                            all_ok = false;
                            println!("{id} ERROR: {e}");
                        }
                    }
                }
                println!("{total} entries");
            }
            Format::Json => {
                let items: Vec<_> = reports
                    .iter()
                    .map(|(id, outcome)| match outcome {
                        Ok(rep) => {
                            all_ok &= rep.valid;
                            json!({"id": id, "report": rep})
                        }
                        Err(e) => {
                            all_ok = false;
                            json!({"id": id, "error": e.to_string()})
                        }
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&items).expect("json output"));
            }
        }
        return Ok(if all_ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(2)
        });
    }

    let target = args.target.ok_or_else(|| {
        Error::Param("verify needs a design file, a catalog id, or --all-catalog".into())
    })?;
    let report = if Path::new(&target).exists() {
        verify_file(Path::new(&target))?
    } else {
        catalog::verify_entry(&target)?
    };
    print_report(&report, format);
    Ok(if report.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn verify_file(path: &Path) -> Result<VerifyReport> {
    let file = DesignFile::read(path)?;
    let k = file
        .k
        .or_else(|| file.design.blocks().first().map(|b| b.len()))
        .ok_or_else(|| Error::Param("design file carries no block size".into()))?;
    match file.kind {
        Kind::Pent => {
            let r = file
                .r
                .ok_or_else(|| Error::Param("PENT file is missing R=<r>".into()))?;
            Ok(VerifyReport::from_pent(&verify_pent(&file.design, k, r)?))
        }
        Kind::Gdd => {
            let groups = file
                .groups
                .ok_or_else(|| Error::Param("GDD file is missing GROUPS".into()))?;
            let report = verify_gdd(&file.design, k, &groups)?;
            Ok(VerifyReport::from_gdd(&report, &file.design, k))
        }
        Kind::Rgdd => {
            let groups = file
                .groups
                .clone()
                .ok_or_else(|| Error::Param("RGDD file is missing GROUPS".into()))?;
            let gdd_report = verify_gdd(&file.design, k, &groups)?;
            let mut report = VerifyReport::from_gdd(&gdd_report, &file.design, k);
            report.kind = "RGDD".into();
            if !verify_resolution(&file.design, &file.classes()?) {
                report.valid = false;
                report
                    .violations
                    .push("blocks do not resolve into parallel classes".into());
            }
            Ok(report)
        }
    }
}

fn print_report(report: &VerifyReport, format: Format) {
    match format {
        Format::Text => {
            let mut line = format!(
                "{} {} v={} b={}",
                report.kind,
                if report.valid { "valid" } else { "INVALID" },
                report.v,
                report.b
            );
            if let (Some(k), Some(r)) = (report.k, report.r) {
                line.push_str(&format!(" k={k} r={r}"));
            }
            if let Some(olp) = report.olp_count {
                line.push_str(&format!(" olp={olp}"));
            }
            if let Some(girth) = report.girth {
                line.push_str(&format!(" girth={girth}"));
            }
            if let Some(connected) = report.connected {
                line.push_str(&format!(" connected={connected}"));
            }
            println!("{line}");
            for v in &report.violations {
                println!("  violation: {v}");
            }
        }
        Format::Json => println!("{}", report.to_json()),
    }
}

/// Loads a design source: an existing path wins, otherwise the catalog.
fn load_file(src: &str) -> Result<DesignFile> {
    if Path::new(src).exists() {
        return DesignFile::read(src);
    }
    let entry = catalog::entry(src)?;
    let inst = catalog::instantiate(src)?;
    Ok(DesignFile {
        kind: entry.kind,
        design: inst.design,
        k: Some(entry.k),
        r: entry.r,
        groups: inst.groups,
    })
}

fn load_gdd(src: &str) -> Result<Gdd> {
    let file = load_file(src)?;
    if file.kind != Kind::Gdd {
        return Err(Error::Param(format!(
            "{src} is a {} design, expected a GDD",
            file.kind.as_str()
        )));
    }
    let groups = file
        .groups
        .ok_or_else(|| Error::Param(format!("{src} carries no GROUPS section")))?;
    let k = file
        .k
        .or_else(|| file.design.blocks().first().map(|b| b.len()))
        .ok_or_else(|| Error::Param(format!("{src} carries no block size")))?;
    Ok(Gdd {
        design: file.design,
        groups,
        k,
    })
}

fn load_rgdd(src: &str) -> Result<Rgdd> {
    let file = load_file(src)?;
    if file.kind != Kind::Rgdd {
        return Err(Error::Param(format!(
            "{src} is a {} design, expected an RGDD",
            file.kind.as_str()
        )));
    }
    let classes = file.classes()?;
    let groups = file
        .groups
        .ok_or_else(|| Error::Param(format!("{src} carries no GROUPS section")))?;
    let k = file
        .k
        .ok_or_else(|| Error::Param(format!("{src} carries no block size")))?;
    Ok(Rgdd {
        gdd: Gdd {
            design: file.design,
            groups,
            k,
        },
        classes,
    })
}

/// Writes a constructed design: with `-o` the file goes to disk and the
/// verification report to standard output; without it the file text goes
/// to standard output and a summary to standard error.
fn emit_design(
    file: &DesignFile,
    out: Option<PathBuf>,
    report: &VerifyReport,
    format: Format,
) -> Result<ExitCode> {
    match out {
        Some(path) => {
            file.write(&path)?;
            eprintln!("wrote {}", path.display());
            print_report(report, format);
        }
        None => {
            print!("{}", file.format());
            std::io::stdout().flush()?;
            eprintln!(
                "{} v={} b={} {}",
                report.kind,
                report.v,
                report.b,
                if report.valid { "valid" } else { "INVALID" }
            );
        }
    }
    Ok(if report.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn pent_file(design: Design, k: usize) -> Result<(DesignFile, VerifyReport)> {
    let r = design.block_count() * k / design.v();
    let report = VerifyReport::from_pent(&verify_pent(&design, k, r)?);
    let file = DesignFile {
        kind: Kind::Pent,
        design,
        k: Some(k),
        r: Some(r),
        groups: None,
    };
    Ok((file, report))
}

fn gdd_file(gdd: Gdd) -> Result<(DesignFile, VerifyReport)> {
    let report = verify_gdd(&gdd.design, gdd.k, &gdd.groups)?;
    let report = VerifyReport::from_gdd(&report, &gdd.design, gdd.k);
    let file = DesignFile {
        kind: Kind::Gdd,
        design: gdd.design,
        k: Some(gdd.k),
        r: None,
        groups: Some(gdd.groups),
    };
    Ok((file, report))
}

fn construct_cmd(what: ConstructCmd, format: Format) -> Result<ExitCode> {
    match what {
        ConstructCmd::Pent3 { m, out } => {
            let built = pent3_direct(m)?;
            let (file, report) = pent_file(built.design, 3)?;
            emit_design(&file, out, &report, format)
        }
        ConstructCmd::Overlay { gdd, fillers, out } => {
            let base = load_gdd(&gdd)?;
            let mut map = BTreeMap::new();
            for spec in &fillers {
                let (size, source) = spec.split_once('=').ok_or_else(|| {
                    Error::Param(format!("--filler expects SIZE=SOURCE, got {spec:?}"))
                })?;
                let size: usize = size
                    .parse()
                    .map_err(|_| Error::Param(format!("bad filler size in {spec:?}")))?;
                let design = if source == "degenerate" {
                    degenerate_pent(base.k)?
                } else {
                    let file = load_file(source)?;
                    if file.kind != Kind::Pent {
                        return Err(Error::Param(format!(
                            "filler {source} is a {} design, expected PENT",
                            file.kind.as_str()
                        )));
                    }
                    file.design
                };
                map.insert(size, design);
            }
            eprintln!(
                "overlaying {} groups with {} filler shapes",
                base.groups.len(),
                map.len()
            );
            let design = wfc_overlay(&base, &map)?;
            let (file, report) = pent_file(design, base.k)?;
            emit_design(&file, out, &report, format)
        }
        ConstructCmd::Inflate {
            input,
            h,
            cell,
            out,
        } => {
            let base = load_gdd(&input)?;
            let cell = cell.map(|c| load_gdd(&c)).transpose()?;
            let scaled = inflate(&base, h, cell.as_ref())?;
            let (file, report) = gdd_file(scaled)?;
            emit_design(&file, out, &report, format)
        }
        ConstructCmd::Rgdd5 { q, input, out } => {
            let rgdd = match (q, input) {
                (Some(q), None) => rgdd_from_mols(4, q)?,
                (None, Some(src)) => load_rgdd(&src)?,
                _ => {
                    return Err(Error::Param(
                        "give exactly one of --q and --in".into(),
                    ))
                }
            };
            let gdd = rgdd_to_gdd(&rgdd)?;
            let (file, report) = gdd_file(gdd)?;
            emit_design(&file, out, &report, format)
        }
        ConstructCmd::Td { k, q, out } => {
            let (file, report) = gdd_file(td_any(k, q)?)?;
            emit_design(&file, out, &report, format)
        }
        ConstructCmd::Mset { family, g, q } => {
            let set = match family {
                40 => m40_set(g, q)?,
                10 => m10_set(g, q)?,
                other => {
                    return Err(Error::Param(format!(
                        "family must be 40 or 10, got {other}"
                    )))
                }
            };
            print_values(set.iter(), format)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_values<'a>(values: impl Iterator<Item = &'a usize>, format: Format) -> Result<()> {
    let values: Vec<usize> = values.copied().collect();
    match format {
        Format::Text => {
            for v in values {
                println!("{v}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&values).expect("json output")),
    }
    Ok(())
}

fn spectrum_cmd(what: SpectrumCmd, format: Format) -> Result<ExitCode> {
    match what {
        SpectrumCmd::Status { k, r } => {
            let status = facts(k, r);
            match format {
                Format::Text => {
                    println!(
                        "PENT({k},{r}): {}",
                        if status.admissible {
                            "admissible"
                        } else {
                            "inadmissible"
                        }
                    );
                    for (name, variant) in [
                        ("any", &status.any),
                        ("no-olp", &status.no_olp),
                        ("one-olp", &status.one_olp),
                    ] {
                        let word = match variant.status {
                            Status::Exists => "exists",
                            Status::Nonexistent => "nonexistent",
                            Status::Open => "open",
                        };
                        let basis = match variant.basis {
                            Some(spectrum::Basis::Constructed) => " [constructed]",
                            Some(spectrum::Basis::Recorded) => " [recorded]",
                            None => "",
                        };
                        println!("  {name}: {word}{basis} ({})", variant.source);
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&status).expect("json output")),
            }
            Ok(ExitCode::SUCCESS)
        }
        SpectrumCmd::ReplayTables => {
            let results = spectrum::replay::replay_all();
            let all_pass = results.iter().all(|c| c.pass);
            match format {
                Format::Text => {
                    for c in &results {
                        println!(
                            "{} {} ({})",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        );
                    }
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&results).expect("json output")),
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        SpectrumCmd::Plan53 { g, u, q, r0 } => {
            let out = plan_construction53(g, u, q, r0, |s| {
                facts(5, s).no_olp.status == Status::Exists
            })?;
            print_values(out.iter(), format)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn diffcensus_cmd(m: usize, format: Format) -> Result<ExitCode> {
    let built = pent3_direct(m)?;
    eprintln!(
        "base blocks for r = {} cover {} difference classes",
        built.r(),
        built.census.len()
    );
    match format {
        Format::Text => {
            for d in &built.census {
                println!("{d}");
            }
        }
        Format::Json => {
            let items: Vec<_> = built
                .census
                .iter()
                .map(|d| json!({"value": d.value, "parts": [d.parts.0, d.parts.1]}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&items).expect("json output"));
        }
    }
    Ok(ExitCode::SUCCESS)
}
