//! Command-line surface: construct the Sidon families, verify their sum
//! graphs, reproduce the deficiency and edge-count tables, and export
//! graphs as edge lists or JSON.
//!
//! Exit codes: 0 all-pass, 1 verification failure, 2 usage or parameter
//! error, 3 size budget exceeded.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sidon_graphs::analysis::DifferenceProfile;
use sidon_graphs::report::{family_deficiency, run_verification, Level};
use sidon_graphs::{Budget, Error, SidonSet, SumGraph};

#[derive(Parser)]
#[command(name = "sidon", version, about = "Sidon sets and their C4-saturated sum graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a Sidon set and write it in the text set format.
    Construct {
        /// bose-chowla | singer | ruzsa | cart1 | cart2 | cart3
        family: String,
        #[command(flatten)]
        params: FamilyParams,
        /// Output path; stdout when omitted (stats then go to stderr).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and print a JSON report.
    Verify {
        /// Construction family; omit when using --set.
        family: Option<String>,
        #[command(flatten)]
        params: FamilyParams,
        /// Verify a set file instead of a named construction.
        #[arg(long, conflicts_with = "family")]
        set: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = LevelArg::Lemmas)]
        level: LevelArg,
        /// Omit the timestamp header for byte-reproducible output.
        #[arg(long)]
        no_meta: bool,
    },
    /// Reproduce the deficiency or edge-count table across a sweep.
    Tables {
        #[arg(long, value_enum)]
        which: WhichTable,
        /// Comma-separated prime powers for the cyclic families.
        #[arg(long, default_value = "2,3,4,5,7,8,9,11,13")]
        q: String,
        /// Comma-separated odd primes for the remaining families.
        #[arg(long, default_value = "3,5,7,11,13")]
        p: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Export the sum graph of a construction.
    Export {
        family: String,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FamilyParams {
    /// Prime power (bose-chowla, singer).
    #[arg(long)]
    q: Option<u64>,
    /// Extension degree for bose-chowla.
    #[arg(long, default_value_t = 2)]
    h: u32,
    /// Odd prime (ruzsa, cart1, cart2, cart3).
    #[arg(long)]
    p: Option<u64>,
    /// Primitive root mod p for ruzsa; smallest one when omitted.
    #[arg(long)]
    theta: Option<u64>,
    /// Nonzero shift for cart3.
    #[arg(long, default_value_t = 1)]
    alpha: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Lemmas,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichTable {
    Deficiency,
    Edges,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Edgelist,
    Json,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err.downcast_ref::<Error>() {
                Some(Error::SizeExceeded { .. }) => 3,
                Some(Error::ConstructionFailure(_)) | Some(Error::NotC4Free) => 1,
                Some(_) => 2,
                None => 2, // I/O and similar operational failures
            }
        }
    });
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let budget = Budget::from_env();
    match cli.cmd {
        Cmd::Construct {
            family,
            params,
            out,
        } => {
            let set = build_family(&family, &params, budget)?;
            let profile = DifferenceProfile::compute(&set);
            let stats = format!(
                "{}: |X|={} |A|={} d(A)={}",
                set.provenance(),
                set.group().order(),
                set.len(),
                profile.deficiency()
            );
            match out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path)?);
                    set.to_writer(&mut w)?;
                    w.flush()?;
                    println!("{stats}");
                }
                None => {
                    set.to_writer(std::io::stdout().lock())?;
                    eprintln!("{stats}");
                }
            }
            Ok(0)
        }
        Cmd::Verify {
            family,
            params,
            set,
            level,
            no_meta,
        } => {
            let set = match (family, set) {
                (Some(name), None) => build_family(&name, &params, budget)?,
                (None, Some(path)) => {
                    let reader = BufReader::new(File::open(path)?);
                    SidonSet::from_reader(reader)?
                }
                _ => anyhow::bail!("give either a construction family or --set PATH"),
            };
            let level = match level {
                LevelArg::Lemmas => Level::Lemmas,
                LevelArg::Full => Level::Full,
            };
            let report = run_verification(&set, level, !no_meta, budget)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(if report.pass { 0 } else { 1 })
        }
        Cmd::Tables {
            which,
            q,
            p,
            format,
        } => {
            let qs = parse_list(&q)?;
            let ps = parse_list(&p)?;
            let rows = match which {
                WhichTable::Deficiency => deficiency_rows(&qs, &ps, budget)?,
                WhichTable::Edges => edge_rows(&qs, &ps, budget)?,
            };
            let header: &[&str] = match which {
                WhichTable::Deficiency => {
                    &["family", "group", "|X|", "|A|", "|A-A|", "d(A)", "formula", "match"]
                }
                WhichTable::Edges => {
                    &["family", "group", "n", "|P|", "|P| formula", "|E|", "|E| formula", "match"]
                }
            };
            print_table(header, &rows, format);
            let all_match = rows.iter().all(|r| r.last().map(|s| s == "yes").unwrap_or(true));
            if all_match {
                Ok(0)
            } else {
                eprintln!("error: computed values deviate from the closed forms");
                Ok(1)
            }
        }
        Cmd::Export {
            family,
            params,
            format,
            out,
        } => {
            let set = build_family(&family, &params, budget)?;
            let graph = SumGraph::build(&set, budget)?;
            let mut w: Box<dyn Write> = match out {
                Some(path) => Box::new(BufWriter::new(File::create(path)?)),
                None => Box::new(std::io::stdout().lock()),
            };
            match format {
                ExportFormat::Edgelist => graph.write_edge_list(&mut w)?,
                ExportFormat::Json => {
                    serde_json::to_writer_pretty(&mut w, &graph.to_json())?;
                    writeln!(w)?;
                }
            }
            w.flush()?;
            Ok(0)
        }
    }
}

fn build_family(family: &str, params: &FamilyParams, budget: Budget) -> anyhow::Result<SidonSet> {
    let need = |opt: Option<u64>, flag: &str| {
        opt.ok_or_else(|| anyhow::anyhow!("{family} requires --{flag}"))
    };
    let set = match family {
        "bose-chowla" => {
            if params.h < 2 {
                anyhow::bail!("bose-chowla requires --h of at least 2");
            }
            SidonSet::bose_chowla(need(params.q, "q")?, params.h, budget)?
        }
        "singer" => SidonSet::singer(need(params.q, "q")?, budget)?,
        "ruzsa" => SidonSet::ruzsa(need(params.p, "p")?, params.theta)?,
        "cart1" => SidonSet::cartesian1(need(params.p, "p")?)?,
        "cart2" => SidonSet::cartesian2(need(params.p, "p")?)?,
        "cart3" => SidonSet::cartesian3(need(params.p, "p")?, params.alpha)?,
        other => anyhow::bail!("unknown family {other:?}"),
    };
    Ok(set)
}

fn parse_list(s: &str) -> anyhow::Result<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| anyhow::anyhow!("bad list entry {tok:?}"))
        })
        .collect()
}

fn deficiency_rows(qs: &[u64], ps: &[u64], budget: Budget) -> anyhow::Result<Vec<Vec<String>>> {
    let mut sets: Vec<SidonSet> = Vec::new();
    for &q in qs {
        sets.push(SidonSet::singer(q, budget)?);
    }
    for &q in qs {
        sets.push(SidonSet::bose_chowla(q, 2, budget)?);
    }
    for &p in ps {
        sets.push(SidonSet::ruzsa(p, None)?);
    }
    for &p in ps {
        sets.push(SidonSet::cartesian1(p)?);
    }
    for &p in ps {
        sets.push(SidonSet::cartesian2(p)?);
    }
    for &p in ps {
        sets.push(SidonSet::cartesian3(p, 1)?);
    }
    let mut rows = Vec::new();
    for set in &sets {
        let profile = DifferenceProfile::compute(set);
        let formula =
            family_deficiency(set.provenance()).expect("every built-in family has a closed form");
        let observed = profile.deficiency();
        rows.push(vec![
            set.provenance().to_string(),
            set.group().to_string(),
            set.group().order().to_string(),
            set.len().to_string(),
            (set.group().order() - observed).to_string(),
            observed.to_string(),
            formula.to_string(),
            yes_no(observed == formula),
        ]);
    }
    Ok(rows)
}

fn edge_rows(qs: &[u64], ps: &[u64], budget: Budget) -> anyhow::Result<Vec<Vec<String>>> {
    let mut sets: Vec<SidonSet> = Vec::new();
    for &q in qs {
        sets.push(SidonSet::singer(q, budget)?);
    }
    for &q in qs {
        sets.push(SidonSet::bose_chowla(q, 2, budget)?);
    }
    for &p in ps {
        sets.push(SidonSet::ruzsa(p, None)?);
    }
    for &p in ps {
        sets.push(SidonSet::cartesian1(p)?);
    }
    for &p in ps {
        sets.push(SidonSet::cartesian2(p)?);
    }
    for &p in ps {
        sets.push(SidonSet::cartesian3(p, 1)?);
    }
    let mut rows = Vec::new();
    for set in &sets {
        let graph = SumGraph::build(set, budget)?;
        let ex = graph.extremal_check()?;
        rows.push(vec![
            set.provenance().to_string(),
            set.group().to_string(),
            ex.vertex_count.to_string(),
            ex.observed_absolute.to_string(),
            ex.formula_absolute.to_string(),
            ex.observed_edges.to_string(),
            ex.formula_edges.to_string(),
            yes_no(ex.absolute_match() && ex.edges_match()),
        ]);
    }
    Ok(rows)
}

fn yes_no(b: bool) -> String {
    if b { "yes".into() } else { "NO".into() }
}

fn print_table(header: &[&str], rows: &[Vec<String>], format: TableFormat) {
    if format == TableFormat::Csv {
        println!("{}", header.join(","));
        for row in rows {
            println!("{}", row.join(","));
        }
        return;
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let fmt_row = |cells: &[String]| {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:<w$}", c, w = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let header_cells: Vec<String> = header.iter().map(|s| s.to_string()).collect();
    println!("{}", fmt_row(&header_cells));
    for row in rows {
        println!("{}", fmt_row(row));
    }
}
