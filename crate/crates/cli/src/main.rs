//! `charvar`: subalgebra tables, codimension bounds and homotopy groups of
//! free-group character varieties.
//!
//! Group arguments use the grammar `T^k x F1[iso] x F2[iso] ...`, e.g. `E8`,
//! `"T^1 x A3[sc]"`, `"A1[ad] x D5"`. Quote anything with spaces or
//! brackets so the shell passes it as one argument.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use charvar::bounds::{classify_singular_locus, codim_report};
use charvar::groups::is_ci;
use charvar::homotopy::HomotopyDatabase;
use charvar::localmodel::{homology_support, is_topologically_singular, parabolic_weights};
use charvar::rootsys::format_types;
use charvar::subalg::{bds_table, levi_table, min_bds_codim, min_levi_codim};
use charvar::{
    BdSRecord, GroupDescriptor, HomologySupport, LeviRecord, RootSystem, SimpleType, WeightProfile,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "charvar", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Homotopy database replacing the embedded one.
    #[arg(long, env = "CHARVAR_DB", global = true)]
    db: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Levi factors of the maximal parabolics, one row per deleted node.
    TableLevi { ty: SimpleType },
    /// Maximal-rank subalgebras from the extended diagram, one row per node of mark >= 2.
    TableBds { ty: SimpleType },
    /// Lower bounds on the codimension of the non-good locus.
    Codim {
        group: GroupDescriptor,
        #[arg(short = 'r', long = "free-rank")]
        r: u32,
    },
    /// π_k of the good locus via the splitting formula.
    Homotopy {
        group: GroupDescriptor,
        #[arg(short = 'r', long = "free-rank")]
        r: u32,
        #[arg(short = 'k', long = "degree")]
        k: u32,
    },
    /// Whether every irreducible subgroup has centralizer equal to the centre.
    Ci { group: GroupDescriptor },
    /// Which description of the singular locus applies.
    SingularLocus {
        group: GroupDescriptor,
        #[arg(short = 'r', long = "free-rank")]
        r: u32,
    },
    /// Weight profile and link homology of the local model at a node.
    LocalModel {
        ty: SimpleType,
        #[arg(short = 'i', long = "node")]
        node: usize,
        #[arg(short = 'r', long = "free-rank")]
        r: u32,
    },
    /// Root count, dimension and highest root.
    Roots { ty: SimpleType },
}

#[derive(Serialize, Deserialize)]
struct LeviTable {
    #[serde(rename = "type")]
    ty: SimpleType,
    dim: usize,
    rows: Vec<LeviRecord>,
    min_codim: usize,
}

#[derive(Serialize, Deserialize)]
struct BdsTable {
    #[serde(rename = "type")]
    ty: SimpleType,
    dim: usize,
    rows: Vec<BdSRecord>,
    min_codim: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct LocalModel {
    profile: WeightProfile,
    singular: bool,
    link: Option<HomologySupport>,
}

#[derive(Serialize, Deserialize)]
struct Roots {
    #[serde(rename = "type")]
    ty: SimpleType,
    rank: usize,
    positive_roots: usize,
    roots: usize,
    dimension: usize,
    highest_root: Vec<i64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| match c.downcast_ref::<io::Error>() {
        Some(io) => io.kind() == io::ErrorKind::BrokenPipe,
        None => c
            .downcast_ref::<csv::Error>()
            .is_some_and(|c| matches!(c.kind(), csv::ErrorKind::Io(io) if io.kind() == io::ErrorKind::BrokenPipe)),
    })
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows(out: &mut dyn Write, header: &[&str], rows: Vec<Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn lines(out: &mut dyn Write, rows: &[(&str, String)]) -> Result<()> {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in rows {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let loaded;
    let db = match &cli.db {
        Some(path) => {
            loaded = HomotopyDatabase::from_path(path)?;
            &loaded
        }
        None => HomotopyDatabase::embedded(),
    };
    match &cli.command {
        Command::TableLevi { ty } => {
            let mut rows = levi_table(*ty);
            rows.sort_by_key(|r| r.label);
            let table = LeviTable {
                ty: *ty,
                dim: RootSystem::new(*ty).dimension(),
                min_codim: min_levi_codim(*ty),
                rows,
            };
            match cli.format {
                OutputFormat::Json => json(out, &table)?,
                OutputFormat::Csv => csv_rows(
                    out,
                    &["k", "derived_type", "codim", "node", "levi_dim"],
                    table
                        .rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.label.to_string(),
                                format_types(&r.derived_type),
                                r.codim.to_string(),
                                r.node.to_string(),
                                r.levi_dim.to_string(),
                            ]
                        })
                        .collect(),
                )?,
                OutputFormat::Text => {
                    writeln!(out, "{}  dim {}", table.ty, table.dim)?;
                    writeln!(out, "{:<3} {:<16} {}", "k", "[l_k,l_k]", "codim")?;
                    for r in &table.rows {
                        writeln!(out, "{:<3} {:<16} {}", r.label, format_types(&r.derived_type), r.codim)?;
                    }
                    writeln!(out, "min codim {}", table.min_codim)?;
                }
            }
        }
        Command::TableBds { ty } => {
            let mut rows = bds_table(*ty);
            rows.sort_by_key(|r| r.label);
            let table = BdsTable {
                ty: *ty,
                dim: RootSystem::new(*ty).dimension(),
                min_codim: min_bds_codim(*ty),
                rows,
            };
            match cli.format {
                OutputFormat::Json => json(out, &table)?,
                OutputFormat::Csv => csv_rows(
                    out,
                    &["k", "bds_type", "codim", "node", "mark", "index_group"],
                    table
                        .rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.label.to_string(),
                                format_types(&r.bds_type),
                                r.codim.to_string(),
                                r.node.to_string(),
                                r.mark.to_string(),
                                r.index_group.to_string(),
                            ]
                        })
                        .collect(),
                )?,
                OutputFormat::Text => {
                    writeln!(out, "{}  dim {}", table.ty, table.dim)?;
                    writeln!(out, "{:<3} {:<16} {:<6} {:<5} {}", "k", "s", "codim", "mark", "index")?;
                    for r in &table.rows {
                        writeln!(
                            out,
                            "{:<3} {:<16} {:<6} {:<5} {}",
                            r.label,
                            format_types(&r.bds_type),
                            r.codim,
                            r.mark,
                            r.index_group
                        )?;
                    }
                    match table.min_codim {
                        Some(m) => writeln!(out, "min codim {m}")?,
                        None => writeln!(out, "min codim none (empty table)")?,
                    }
                }
            }
        }
        Command::Codim { group, r } => {
            let rep = codim_report(group, *r)?;
            match cli.format {
                OutputFormat::Json => json(out, &rep)?,
                OutputFormat::Csv => csv_rows(
                    out,
                    &["group", "r", "bad_lower", "red_lower", "c_pasbon_lower", "stable_k_max", "lower_bound"],
                    vec![vec![
                        rep.group.to_string(),
                        rep.r.to_string(),
                        rep.bad_lower.to_string(),
                        rep.red_lower.to_string(),
                        rep.c_pasbon_lower.to_string(),
                        rep.stable_k_max.to_string(),
                        rep.lower_bound.to_string(),
                    ]],
                )?,
                OutputFormat::Text => lines(
                    out,
                    &[
                        ("group", rep.group.to_string()),
                        ("r", rep.r.to_string()),
                        ("codim_C bad locus", format!("≥ {}", rep.bad_lower)),
                        ("codim_C reducible locus", format!("≥ {}", rep.red_lower)),
                        ("C_pasbon (real)", format!("≥ {}", rep.c_pasbon_lower)),
                        ("stable range", stable_text(rep.stable_k_max)),
                    ],
                )?,
            }
        }
        Command::Homotopy { group, r, k } => {
            let res = db.good_locus_homotopy(group, *r, *k)?;
            match cli.format {
                OutputFormat::Json => json(out, &res)?,
                OutputFormat::Csv => csv_rows(
                    out,
                    &["group", "r", "k", "value", "free_rank", "torsion", "known", "validity"],
                    vec![vec![
                        group.to_string(),
                        r.to_string(),
                        k.to_string(),
                        res.value.to_string(),
                        res.value.free_rank().to_string(),
                        res.value
                            .torsion()
                            .iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join(" "),
                        res.value.is_known().to_string(),
                        res.validity.to_string(),
                    ]],
                )?,
                OutputFormat::Text => lines(
                    out,
                    &[
                        ("group", group.to_string()),
                        ("r", r.to_string()),
                        ("k", k.to_string()),
                        ("value", res.value.to_string()),
                        ("validity", res.validity.to_string()),
                        ("formula", res.formula_trace.clone()),
                    ],
                )?,
            }
        }
        Command::Ci { group } => {
            let d = is_ci(group);
            match cli.format {
                OutputFormat::Json => json(out, &d)?,
                OutputFormat::Csv => csv_rows(
                    out,
                    &["group", "is_ci", "witness"],
                    vec![vec![group.to_string(), d.is_ci.to_string(), d.witness.clone()]],
                )?,
                OutputFormat::Text => lines(
                    out,
                    &[
                        ("group", group.to_string()),
                        ("CI", d.is_ci.to_string()),
                        ("witness", d.witness.clone()),
                    ],
                )?,
            }
        }
        Command::SingularLocus { group, r } => {
            let rep = classify_singular_locus(group, *r)?;
            match cli.format {
                OutputFormat::Json => json(out, &rep)?,
                OutputFormat::Csv => csv_rows(
                    out,
                    &["group", "r", "verdict", "statement"],
                    rep.statements
                        .iter()
                        .map(|s| {
                            vec![
                                rep.group.to_string(),
                                rep.r.to_string(),
                                verdict_name(&rep),
                                s.clone(),
                            ]
                        })
                        .collect(),
                )?,
                OutputFormat::Text => {
                    lines(
                        out,
                        &[
                            ("group", rep.group.to_string()),
                            ("r", rep.r.to_string()),
                            ("verdict", verdict_name(&rep)),
                        ],
                    )?;
                    for s in &rep.statements {
                        writeln!(out, "- {s}")?;
                    }
                }
            }
        }
        Command::LocalModel { ty, node, r } => {
            let profile = parabolic_weights(*ty, *node, *r)?;
            let report = LocalModel {
                singular: is_topologically_singular(&profile),
                link: profile.link_m().map(homology_support),
                profile,
            };
            match cli.format {
                OutputFormat::Json => json(out, &report)?,
                OutputFormat::Csv => csv_rows(
                    out,
                    &["n", "d_n"],
                    report
                        .profile
                        .d
                        .iter()
                        .map(|(n, d)| vec![n.to_string(), d.to_string()])
                        .collect(),
                )?,
                OutputFormat::Text => {
                    let weights: Vec<String> = report
                        .profile
                        .d
                        .range(1..)
                        .map(|(n, d)| format!("d_{n} = {d}"))
                        .collect();
                    let mut rows = vec![
                        ("type", ty.to_string()),
                        ("node", node.to_string()),
                        ("r", r.to_string()),
                        ("weights (d_{-n} = d_n)", weights.join(", ")),
                        ("topologically singular", report.singular.to_string()),
                    ];
                    if let Some(link) = &report.link {
                        let dims: Vec<String> = link.dims.iter().map(u64::to_string).collect();
                        rows.push(("link M", link.m.to_string()));
                        rows.push(("link rational homology in degrees", dims.join(" ")));
                        rows.push(("sphere-like", link.is_sphere_like().to_string()));
                    }
                    lines(out, &rows)?;
                }
            }
        }
        Command::Roots { ty } => {
            let system = RootSystem::new(*ty);
            let report = Roots {
                ty: *ty,
                rank: ty.rank(),
                positive_roots: system.positive_roots().len(),
                roots: 2 * system.positive_roots().len(),
                dimension: system.dimension(),
                highest_root: system.highest_root().coords().to_vec(),
            };
            let marks = report
                .highest_root
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            match cli.format {
                OutputFormat::Json => json(out, &report)?,
                OutputFormat::Csv => csv_rows(
                    out,
                    &["type", "rank", "positive_roots", "roots", "dimension", "highest_root"],
                    vec![vec![
                        ty.to_string(),
                        report.rank.to_string(),
                        report.positive_roots.to_string(),
                        report.roots.to_string(),
                        report.dimension.to_string(),
                        marks,
                    ]],
                )?,
                OutputFormat::Text => lines(
                    out,
                    &[
                        ("type", ty.to_string()),
                        ("rank", report.rank.to_string()),
                        ("roots", format!("{} ({} positive)", report.roots, report.positive_roots)),
                        ("dimension", report.dimension.to_string()),
                        ("highest root marks", marks),
                    ],
                )?,
            }
        }
    }
    out.flush().context("writing output")?;
    Ok(())
}

fn stable_text(k_max: i64) -> String {
    if k_max >= 1 {
        format!("1 ≤ k ≤ {k_max} (at least)")
    } else {
        "no degree k ≥ 1 is covered by the bound".to_string()
    }
}

fn verdict_name(rep: &charvar::SingularLocusReport) -> String {
    serde_json::to_value(rep.verdict)
        .ok()
        .and_then(|v| v.as_str().map(String::from))
        .unwrap_or_default()
}
