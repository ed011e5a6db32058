//! broadcastlab: regenerate published cloning/broadcasting results.
//!
//! Exit codes: 0 success, 2 a registered value check failed or a numeric
//! cross-check exceeded tolerance, 3 invalid arguments.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use broadcastlab_cli::region::{self, default_cloners, parse_cloner, ClonerColumn, RegionFamily};
use broadcastlab_cli::report::{clone_report, optimize_report, render_table, summarize_table};
use broadcastlab_cli::tables;
use broadcastlab_core::{
    BdsParams, ClonerConfig, FamilyParams, Flavor, Mode, NmeParams, WernerParams, NEG_TOL,
};

const EXIT_TOLERANCE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "broadcastlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Local,
    Nonlocal,
}

impl ModeArg {
    fn mode(self) -> Mode {
        match self {
            ModeArg::Local => Mode::Local,
            ModeArg::Nonlocal => Mode::NonLocal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Si,
    Ssd,
    Dsd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate one registered table and check it against the published
    /// values.
    Table {
        /// Table id or numeric alias; see `table list`.
        id: String,
    },
    /// Scan a family's parameter box and emit per-point broadcastability.
    Region {
        /// nme | werner | bds | fig2
        family: String,
        /// Comma-separated cloner tokens: silc, sinlc, dsdlc, dsdnlc,
        /// ssdlc:<lambda>, ssdnlc:<lambda>.
        #[arg(long)]
        cloners: Option<String>,
        /// Per-axis sample counts, comma-separated.
        #[arg(long)]
        res: Option<String>,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Clone one family member and report output pairs, separability and
    /// distortions as JSON.
    Clone {
        /// pure | nme | werner | bds
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        alpha2: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        p: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c1: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c2: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c3: Option<f64>,
        #[arg(long, value_enum, default_value = "local")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "si")]
        flavor: FlavorArg,
        /// Machine parameter for the ssd flavor.
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// Compare the closed-form optimal machine parameter with a numeric
    /// minimization of the matching channel-level objective.
    Optimize {
        /// pure | nme | werner | bds
        family: String,
        #[arg(long, allow_negative_numbers = true)]
        alpha2: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        p: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c1: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c2: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c3: Option<f64>,
        #[arg(long, value_enum, default_value = "local")]
        mode: ModeArg,
    },
    /// Regenerate every registered table and summarize the checks.
    Verify,
}

fn psd_eps() -> f64 {
    std::env::var("BROADCASTLAB_EPS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(NEG_TOL)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn build_family(
    family: &str,
    alpha2: Option<f64>,
    p: Option<f64>,
    c1: Option<f64>,
    c2: Option<f64>,
    c3: Option<f64>,
) -> Result<FamilyParams, String> {
    match family {
        "pure" => {
            let a2 = alpha2.ok_or("family pure requires --alpha2")?;
            Ok(FamilyParams::Pure { alpha_sq: a2 })
        }
        "nme" => {
            let a2 = alpha2.ok_or("family nme requires --alpha2")?;
            Ok(FamilyParams::Nme(
                NmeParams::new(a2).map_err(|e| e.to_string())?,
            ))
        }
        "werner" => {
            let a2 = alpha2.ok_or("family werner requires --alpha2")?;
            let p = p.ok_or("family werner requires --p")?;
            Ok(FamilyParams::Werner(
                WernerParams::new(a2, p).map_err(|e| e.to_string())?,
            ))
        }
        "bds" => {
            let (c1, c2, c3) = match (c1, c2, c3) {
                (Some(a), Some(b), Some(c)) => (a, b, c),
                _ => return Err("family bds requires --c1 --c2 --c3".into()),
            };
            Ok(FamilyParams::Bds(
                BdsParams::new(c1, c2, c3).map_err(|e| e.to_string())?,
            ))
        }
        other => Err(format!(
            "unknown family {other:?}; expected pure, nme, werner or bds"
        )),
    }
}

fn cmd_table(id: &str, eps: f64) -> ExitCode {
    if id == "list" {
        for t in tables::TABLE_IDS {
            println!("{t}");
        }
        return ExitCode::SUCCESS;
    }
    let Some(table) = tables::build(id, eps) else {
        return usage_error(&format!(
            "unknown table {id:?}; known ids: {}",
            tables::TABLE_IDS.join(", ")
        ));
    };
    let (text, pass) = render_table(&table);
    print!("{text}");
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_TOLERANCE)
    }
}

fn parse_res(arg: Option<&str>, family: RegionFamily) -> Result<Vec<usize>, String> {
    let mut res = family.default_res();
    if let Some(s) = arg {
        let parts: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse()).collect();
        let parts = parts.map_err(|_| format!("invalid --res {s:?}"))?;
        if parts.is_empty() || parts.len() > res.len() {
            return Err(format!(
                "--res takes up to {} comma-separated counts for this family",
                res.len()
            ));
        }
        if parts.iter().any(|&n| n < 2) {
            return Err("each resolution must be at least 2".into());
        }
        for (slot, v) in res.iter_mut().zip(parts.iter()) {
            *slot = *v;
        }
        // a single count applies to every axis
        if parts.len() == 1 {
            let n = parts[0];
            res.iter_mut().for_each(|slot| *slot = n);
        }
    }
    Ok(res)
}

fn parse_cloners(arg: Option<&str>) -> Result<Vec<ClonerColumn>, String> {
    match arg {
        None => Ok(default_cloners()),
        Some(s) => s
            .split(',')
            .map(|t| parse_cloner(t.trim()).ok_or_else(|| format!("unknown cloner token {t:?}")))
            .collect(),
    }
}

fn emit(out: Option<&PathBuf>, payload: &str) -> Result<(), String> {
    match out {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => std::fs::write(path, payload).map_err(|e| e.to_string()),
    }
}

fn cmd_region(
    family: &str,
    cloners: Option<&str>,
    res: Option<&str>,
    out: Option<&PathBuf>,
    format: FormatArg,
    eps: f64,
) -> ExitCode {
    let Some(fam) = RegionFamily::parse(family) else {
        return usage_error(&format!(
            "unknown region family {family:?}; expected nme, werner, bds or fig2"
        ));
    };
    let res = match parse_res(res, fam) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let payload = if let RegionFamily::Fig2 = fam {
        let rows = match region::fig2_rows(res[0], eps) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        };
        match format {
            FormatArg::Csv => region::fig2_csv(&rows),
            FormatArg::Json => format!("{:#}\n", region::fig2_json(&rows)),
        }
    } else {
        let columns = match parse_cloners(cloners) {
            Ok(c) => c,
            Err(e) => return usage_error(&e),
        };
        let spec = fam.spec(&res).unwrap();
        let rows = match region::region_rows(&spec, &columns, eps) {
            Ok(r) => r,
            Err(e) => return usage_error(&e.to_string()),
        };
        match format {
            FormatArg::Csv => region::region_csv(fam, &columns, &rows),
            FormatArg::Json => format!("{:#}\n", region::region_json(fam, &columns, &rows)),
        }
    };
    match emit(out, &payload) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_error(&e),
    }
}

fn cmd_verify(eps: f64) -> ExitCode {
    let mut all = true;
    for id in tables::TABLE_IDS {
        let table = tables::build(id, eps).unwrap();
        let (line, pass) = summarize_table(&table);
        println!("{line}");
        all &= pass;
    }
    if all {
        println!("verify: PASS");
        ExitCode::SUCCESS
    } else {
        println!("verify: FAIL");
        ExitCode::from(EXIT_TOLERANCE)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let eps = psd_eps();
    match cli.command {
        Command::Table { id } => cmd_table(&id, eps),
        Command::Region {
            family,
            cloners,
            res,
            out,
            format,
        } => cmd_region(
            &family,
            cloners.as_deref(),
            res.as_deref(),
            out.as_ref(),
            format,
            eps,
        ),
        Command::Clone {
            family,
            alpha2,
            p,
            c1,
            c2,
            c3,
            mode,
            flavor,
            lambda,
        } => {
            let family = match build_family(&family, alpha2, p, c1, c2, c3) {
                Ok(f) => f,
                Err(e) => return usage_error(&e),
            };
            let flavor = match flavor {
                FlavorArg::Si => Flavor::StateIndependent,
                FlavorArg::Dsd => Flavor::DynamicStateDependent,
                FlavorArg::Ssd => match lambda {
                    Some(l) => Flavor::StaticStateDependent(l),
                    None => return usage_error("--flavor ssd requires --lambda"),
                },
            };
            let cfg = ClonerConfig::new(mode.mode(), flavor);
            match clone_report(&family, &cfg, eps) {
                Ok(json) => {
                    println!("{json:#}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Optimize {
            family,
            alpha2,
            p,
            c1,
            c2,
            c3,
            mode,
        } => {
            let family = match build_family(&family, alpha2, p, c1, c2, c3) {
                Ok(f) => f,
                Err(e) => return usage_error(&e),
            };
            match optimize_report(&family, mode.mode()) {
                Ok(json) => {
                    let gap: f64 = json["gap"].as_str().unwrap().parse().unwrap();
                    println!("{json:#}");
                    if gap <= 1e-5 {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_TOLERANCE)
                    }
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Command::Verify => cmd_verify(eps),
    }
}
