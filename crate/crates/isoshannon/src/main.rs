//! Command-line front end: single-state entropy reports, reference-table
//! regeneration, and plot-ready density grids.
//!
//! Exit codes: 0 success (state mode additionally requires the BBM check
//! to hold), 1 reference-comparison failure (or BBM violation), 2 numerical
//! failure, 3 invalid state specification.

use clap::{Parser, ValueEnum};
use isoshannon::entropy::{bbm_check, report_for};
use isoshannon::quadrature::QuadratureConfig;
use isoshannon::tables;
use isoshannon::{Error, Sector, StateSpec};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Radial,
    Linear,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SectorArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Parser)]
#[command(
    name = "isoshannon",
    version,
    about = "Shannon entropies and the BBM uncertainty relation for two \
             conditionally exactly solvable partners of the harmonic oscillator",
    after_help = "Modes:\n  \
        state:     --family <radial|linear> --sector <plus|minus> --n N [--l L]\n  \
        table:     --table <1|2|3> [--compare]\n  \
        plot data: state flags plus --plot-data (512-point density grids)"
)]
struct Args {
    /// Model family (state / plot-data modes)
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,

    /// Partner sector
    #[arg(long, value_enum)]
    sector: Option<SectorArg>,

    /// Quantum number n (states counted from 0 within a sector)
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,

    /// Angular-momentum parameter l (radial family; default 0)
    #[arg(long, allow_hyphen_values = true)]
    l: Option<i64>,

    /// Regenerate a reference table (1, 2 or 3) instead of a single state
    #[arg(long)]
    table: Option<u8>,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Append per-cell deviations from the built-in reference values
    /// (table mode); exits 1 if any |deviation| > 0.01
    #[arg(long)]
    compare: bool,

    /// Override the relative quadrature tolerance (default 1e-10)
    #[arg(long)]
    tol: Option<f64>,

    /// Write output to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,

    /// Emit densities on fixed grids instead of an entropy report
    #[arg(long)]
    plot_data: bool,
}

enum Mode {
    State(StateSpec),
    Table(u8),
    PlotData(StateSpec),
}

struct RunRequest {
    mode: Mode,
    format: FormatArg,
    compare: bool,
    cfg: QuadratureConfig,
    out: Option<PathBuf>,
}

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_NUMERICS: i32 = 2;
const EXIT_INVALID: i32 = 3;

fn fail(code: i32, message: &str) -> i32 {
    eprintln!("error: {message}");
    code
}

fn parse_request(args: Args) -> Result<RunRequest, (i32, String)> {
    let invalid = |m: String| (EXIT_INVALID, m);

    let mut cfg = QuadratureConfig::default();
    if let Some(tol) = args.tol {
        if tol <= 0.0 || !tol.is_finite() {
            return Err(invalid(format!("invalid tolerance: {tol}")));
        }
        cfg.rel_tol = tol;
        cfg.abs_tol = (tol * 1e-2).min(cfg.abs_tol);
    }

    let mode = if let Some(id) = args.table {
        if args.family.is_some() || args.sector.is_some() || args.n.is_some() || args.plot_data {
            return Err(invalid(
                "--table cannot be combined with state-mode flags".into(),
            ));
        }
        if !(1..=3).contains(&id) {
            return Err(invalid(format!("no such table: {id} (expected 1, 2 or 3)")));
        }
        Mode::Table(id)
    } else {
        let (Some(family), Some(sector), Some(n)) = (args.family, args.sector, args.n) else {
            return Err(invalid(
                "state mode requires --family, --sector and --n (or use --table)".into(),
            ));
        };
        if n < 0 {
            return Err(invalid(format!("invalid quantum number: n = {n}")));
        }
        let l = args.l.unwrap_or(0);
        if l < 0 {
            return Err(invalid(format!("invalid quantum number: l = {l}")));
        }
        let sector = match sector {
            SectorArg::Plus => Sector::Plus,
            SectorArg::Minus => Sector::Minus,
        };
        let spec = match family {
            FamilyArg::Radial => StateSpec::radial(sector, n as u32, l as u32),
            // l is meaningless for the 1-D family and ignored
            FamilyArg::Linear => StateSpec::linear(sector, n as u32),
        };
        spec.validate().map_err(|e| invalid(e.to_string()))?;
        if args.plot_data {
            Mode::PlotData(spec)
        } else {
            Mode::State(spec)
        }
    };

    Ok(RunRequest {
        mode,
        format: args.format,
        compare: args.compare,
        cfg,
        out: args.out,
    })
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidSpec(_) | Error::Domain(_) => EXIT_INVALID,
        _ => EXIT_NUMERICS,
    }
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), (i32, String)> {
    match out {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => std::fs::write(path, payload).map_err(|e| {
            (
                EXIT_NUMERICS,
                format!("cannot write {}: {e}", path.display()),
            )
        }),
    }
}

fn run(args: Args) -> i32 {
    let req = match parse_request(args) {
        Ok(r) => r,
        Err((code, msg)) => return fail(code, &msg),
    };

    match req.mode {
        Mode::State(spec) => {
            // a printed normalization constant that fails its check is a
            // suspected erratum: warn, then continue on the renormalized
            // state (which every downstream quantity uses anyway)
            match isoshannon::wavefunctions::norm_check(spec, &req.cfg) {
                Ok(norm) if (norm - 1.0).abs() > 1e-6 => {
                    eprintln!(
                        "warning: state norm deviates from 1 by {:+.3e}: suspected \
                         erratum in the printed constant; densities renormalized",
                        norm - 1.0
                    );
                }
                Ok(_) => {}
                Err(e) => return fail(error_exit_code(&e), &e.to_string()),
            }
            let report = match report_for(spec, &req.cfg) {
                Ok(r) => r,
                Err(e) => return fail(error_exit_code(&e), &e.to_string()),
            };
            let payload = match req.format {
                FormatArg::Json => tables::report_to_json(&report),
                FormatArg::Csv => tables::report_to_csv(&report),
                FormatArg::Md => tables::report_to_markdown(&report),
            };
            if let Err((code, msg)) = emit(&req.out, &payload) {
                return fail(code, &msg);
            }
            let (satisfied, margin) = bbm_check(&report);
            if !satisfied {
                return fail(
                    EXIT_MISMATCH,
                    &format!("BBM inequality violated: margin = {margin:.3e}"),
                );
            }
            EXIT_OK
        }
        Mode::PlotData(spec) => {
            let data = match tables::plot_data(spec, &req.cfg) {
                Ok(d) => d,
                Err(e) => return fail(error_exit_code(&e), &e.to_string()),
            };
            let payload = match req.format {
                FormatArg::Json => tables::plot_to_json(&data),
                FormatArg::Csv => tables::plot_to_csv(&data),
                FormatArg::Md => tables::plot_to_markdown(&data),
            };
            if let Err((code, msg)) = emit(&req.out, &payload) {
                return fail(code, &msg);
            }
            EXIT_OK
        }
        Mode::Table(id) => {
            let table = match tables::compute_table(id, &req.cfg, req.compare) {
                Ok(t) => t,
                Err(e) => return fail(error_exit_code(&e), &e.to_string()),
            };
            let payload = match req.format {
                FormatArg::Json => tables::table_to_json(&table),
                FormatArg::Csv => tables::table_to_csv(&table),
                FormatArg::Md => tables::table_to_markdown(&table),
            };
            if let Err((code, msg)) = emit(&req.out, &payload) {
                return fail(code, &msg);
            }
            if req.compare {
                if let Some(worst) = table.max_deviation() {
                    if worst > 0.01 {
                        return fail(
                            EXIT_MISMATCH,
                            &format!(
                                "table {id} deviates from the reference values: max |dev| = {worst:.4}"
                            ),
                        );
                    }
                }
            }
            EXIT_OK
        }
    }
}

fn main() {
    // flag-level parse failures are invalid requests (exit 3), not the
    // numerical-failure code clap would exit with; --help/--version stay 0
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run(args));
}
