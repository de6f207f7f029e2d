//! Reference-table regeneration, report/plot-data serialization, and the
//! built-in golden values used by `--compare`.
//!
//! Table 1: minus-sector entropies of the radial family (l = 0, n = 0..3)
//! with the D = 3 BBM bound. Table 2: the same states next to their
//! equal-energy plus-sector partners. Table 3: the linear family, pairing
//! minus-state n with plus-state n − 1 (the unbroken-supersymmetry ladder;
//! the n = 0 singlet has no partner and its plus cells are absent).

use crate::entropy::{report_for, EntropyReport};
use crate::momentum::{momentum_radius, MomentumAmplitude};
use crate::quadrature::QuadratureConfig;
use crate::wavefunctions::BoundState;
use crate::{Error, Family, Result, Sector, StateSpec};

/// Published Table-1 values: [s_pos_minus, s_mom_minus, sum, bound] per row.
///
/// Three cells of the published table are internally inconsistent: the
/// n = 0 sum (6.917) differs from its own printed addends (3.361 + 3.646 =
/// 7.007), and the n = 1 and n = 3 position entropies disagree with
/// high-precision recomputation by several independent methods, while the
/// momentum entropies of those same states and the n = 0, 2 position
/// entries match to a milli-nat. The published values are kept verbatim
/// here for the discrepancy report.
pub const TABLE1_PUBLISHED: [[f64; 4]; 4] = [
    [3.361, 3.646, 6.917, 6.434],
    [4.015, 4.199, 8.214, 6.434],
    [4.568, 4.628, 9.196, 6.434],
    [4.822, 4.954, 9.776, 6.434],
];

/// Golden Table-1 values used by `--compare`: the published numbers where
/// consistent, recomputed values (independent oracle, 6 decimals) for the
/// five cells noted on [`TABLE1_PUBLISHED`].
pub const TABLE1_REFERENCE: [[f64; 4]; 4] = [
    [3.361, 3.646, 7.008103, 6.434],
    [4.105412, 4.199, 8.304502, 6.434],
    [4.568, 4.628, 9.196, 6.434],
    [4.911240, 4.954, 9.865587, 6.434],
];

/// Published Table-2 values: [s_pos_plus, s_pos_minus, s_mom_plus,
/// s_mom_minus]. The minus position column repeats the two Table-1 errata.
pub const TABLE2_PUBLISHED: [[f64; 4]; 4] = [
    [3.217, 3.361, 3.217, 3.646],
    [4.151, 4.015, 4.151, 4.199],
    [4.709, 4.568, 4.709, 4.628],
    [5.109, 4.822, 5.109, 4.954],
];

/// Golden Table-2 values (same corrections as Table 1).
pub const TABLE2_REFERENCE: [[f64; 4]; 4] = [
    [3.217, 3.361, 3.217, 3.646],
    [4.151, 4.105412, 4.151, 4.199],
    [4.709, 4.568, 4.709, 4.628],
    [5.109, 4.911240, 5.109, 4.954],
];

/// Table-3 values, fully consistent as published: [s_pos_plus_prev,
/// s_mom_plus_prev, sum_plus_prev, s_pos_minus, s_mom_minus, sum_minus,
/// bound]; `None` marks the absent plus-partner cells of the singlet row.
pub const TABLE3_REFERENCE: [[Option<f64>; 7]; 4] = [
    [
        None,
        None,
        None,
        Some(0.479),
        Some(1.679),
        Some(2.158),
        Some(2.144),
    ],
    [
        Some(1.072),
        Some(1.072),
        Some(2.144),
        Some(1.261),
        Some(1.607),
        Some(2.868),
        Some(2.144),
    ],
    [
        Some(1.343),
        Some(1.343),
        Some(2.686),
        Some(1.425),
        Some(1.578),
        Some(3.003),
        Some(2.144),
    ],
    [
        Some(1.499),
        Some(1.499),
        Some(2.998),
        Some(1.578),
        Some(1.748),
        Some(3.326),
        Some(2.144),
    ],
];

/// One table cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Value(f64),
    Absent,
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: u32,
    pub cells: Vec<Cell>,
    /// computed − reference, present under `--compare`; `None` per cell
    /// where the cell is absent.
    pub deviations: Option<Vec<Option<f64>>>,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub id: u8,
    pub columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
}

impl Table {
    /// Largest absolute deviation from the reference values, when computed.
    pub fn max_deviation(&self) -> Option<f64> {
        let mut worst: Option<f64> = None;
        for row in &self.rows {
            if let Some(devs) = &row.deviations {
                for d in devs.iter().flatten() {
                    worst = Some(worst.map_or(d.abs(), |w: f64| w.max(d.abs())));
                }
            }
        }
        worst
    }
}

fn reference_row(id: u8, n: usize) -> Vec<Option<f64>> {
    match id {
        1 => TABLE1_REFERENCE[n].iter().map(|&v| Some(v)).collect(),
        2 => TABLE2_REFERENCE[n].iter().map(|&v| Some(v)).collect(),
        3 => TABLE3_REFERENCE[n].to_vec(),
        _ => unreachable!(),
    }
}

fn attach_deviation(row: &mut TableRow, id: u8) {
    let reference = reference_row(id, row.n as usize);
    let devs = row
        .cells
        .iter()
        .zip(reference)
        .map(|(cell, golden)| match (cell, golden) {
            (Cell::Value(v), Some(g)) => Some(v - g),
            _ => None,
        })
        .collect();
    row.deviations = Some(devs);
}

fn table_columns(id: u8) -> Vec<&'static str> {
    match id {
        1 => vec!["s_pos_minus", "s_mom_minus", "sum", "bound"],
        2 => vec!["s_pos_plus", "s_pos_minus", "s_mom_plus", "s_mom_minus"],
        3 => vec![
            "s_pos_plus_prev",
            "s_mom_plus_prev",
            "sum_plus_prev",
            "s_pos_minus",
            "s_mom_minus",
            "sum_minus",
            "bound",
        ],
        _ => unreachable!(),
    }
}

/// Regenerates a reference table, rows computed in parallel; with
/// `compare`, per-cell deviations from the golden values are attached.
pub fn compute_table(id: u8, cfg: &QuadratureConfig, compare: bool) -> Result<Table> {
    if !(1..=3).contains(&id) {
        return Err(Error::InvalidSpec(format!(
            "no such table: {id} (expected 1, 2 or 3)"
        )));
    }
    let rows_data: Vec<Result<Vec<EntropyReport>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0u32..4)
            .map(|n| {
                scope.spawn(move || -> Result<Vec<EntropyReport>> {
                    match id {
                        1 => Ok(vec![report_for(
                            StateSpec::radial(Sector::Minus, n, 0),
                            cfg,
                        )?]),
                        2 => Ok(vec![
                            report_for(StateSpec::radial(Sector::Plus, n, 0), cfg)?,
                            report_for(StateSpec::radial(Sector::Minus, n, 0), cfg)?,
                        ]),
                        3 => {
                            let mut reports =
                                vec![report_for(StateSpec::linear(Sector::Minus, n), cfg)?];
                            if n >= 1 {
                                reports
                                    .push(report_for(StateSpec::linear(Sector::Plus, n - 1), cfg)?);
                            }
                            Ok(reports)
                        }
                        _ => unreachable!(),
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("table row thread panicked"))
            .collect()
    });

    let mut rows = Vec::with_capacity(4);
    for (n, data) in rows_data.into_iter().enumerate() {
        let reports = data?;
        let cells = match id {
            1 => {
                let r = &reports[0];
                vec![
                    Cell::Value(r.s_pos),
                    Cell::Value(r.s_mom),
                    Cell::Value(r.sum),
                    Cell::Value(r.bbm_bound),
                ]
            }
            2 => {
                let (plus, minus) = (&reports[0], &reports[1]);
                vec![
                    Cell::Value(plus.s_pos),
                    Cell::Value(minus.s_pos),
                    Cell::Value(plus.s_mom),
                    Cell::Value(minus.s_mom),
                ]
            }
            3 => {
                let minus = &reports[0];
                let mut cells = match reports.get(1) {
                    Some(plus) => vec![
                        Cell::Value(plus.s_pos),
                        Cell::Value(plus.s_mom),
                        Cell::Value(plus.sum),
                    ],
                    None => vec![Cell::Absent, Cell::Absent, Cell::Absent],
                };
                cells.extend([
                    Cell::Value(minus.s_pos),
                    Cell::Value(minus.s_mom),
                    Cell::Value(minus.sum),
                    Cell::Value(minus.bbm_bound),
                ]);
                cells
            }
            _ => unreachable!(),
        };
        let mut row = TableRow {
            n: n as u32,
            cells,
            deviations: None,
        };
        if compare {
            attach_deviation(&mut row, id);
        }
        rows.push(row);
    }
    Ok(Table {
        id,
        columns: table_columns(id),
        rows,
    })
}

fn fmt_val(v: f64) -> String {
    format!("{v:.6}")
}

/// Markdown rendering; absent cells print as "−".
pub fn table_to_markdown(t: &Table) -> String {
    let compare = t.rows.first().is_some_and(|r| r.deviations.is_some());
    let mut cols: Vec<String> = vec!["n".into()];
    cols.extend(t.columns.iter().map(|c| c.to_string()));
    if compare {
        cols.extend(t.columns.iter().map(|c| format!("dev_{c}")));
    }
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", cols.join(" | ")));
    out.push_str(&format!("|{}\n", "---|".repeat(cols.len())));
    for row in &t.rows {
        let mut fields = vec![row.n.to_string()];
        for c in &row.cells {
            fields.push(match c {
                Cell::Value(v) => fmt_val(*v),
                Cell::Absent => "−".into(),
            });
        }
        if let Some(devs) = &row.deviations {
            for d in devs {
                fields.push(match d {
                    Some(v) => format!("{v:+.6}"),
                    None => "−".into(),
                });
            }
        }
        out.push_str(&format!("| {} |\n", fields.join(" | ")));
    }
    out
}

/// CSV rendering: header row, comma separator, LF endings, absent cells
/// rendered as the empty string.
pub fn table_to_csv(t: &Table) -> String {
    let compare = t.rows.first().is_some_and(|r| r.deviations.is_some());
    let mut cols: Vec<String> = vec!["n".into()];
    cols.extend(t.columns.iter().map(|c| c.to_string()));
    if compare {
        cols.extend(t.columns.iter().map(|c| format!("dev_{c}")));
    }
    let mut out = cols.join(",");
    out.push('\n');
    for row in &t.rows {
        let mut fields = vec![row.n.to_string()];
        for c in &row.cells {
            fields.push(match c {
                Cell::Value(v) => fmt_val(*v),
                Cell::Absent => String::new(),
            });
        }
        if let Some(devs) = &row.deviations {
            for d in devs {
                fields.push(match d {
                    Some(v) => format!("{v:+.6}"),
                    None => String::new(),
                });
            }
        }
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// JSON rendering: rows as flat objects, absent cells as `null`.
pub fn table_to_json(t: &Table) -> String {
    let mut rows = Vec::with_capacity(t.rows.len());
    for row in &t.rows {
        let mut fields = vec![format!("\"n\":{}", row.n)];
        for (name, cell) in t.columns.iter().zip(&row.cells) {
            fields.push(match cell {
                Cell::Value(v) => format!("\"{name}\":{}", fmt_val(*v)),
                Cell::Absent => format!("\"{name}\":null"),
            });
        }
        if let Some(devs) = &row.deviations {
            for (name, d) in t.columns.iter().zip(devs) {
                fields.push(match d {
                    Some(v) => format!("\"dev_{name}\":{v:.6}"),
                    None => format!("\"dev_{name}\":null"),
                });
            }
        }
        rows.push(format!("{{{}}}", fields.join(",")));
    }
    format!("{{\"table\":{},\"rows\":[{}]}}\n", t.id, rows.join(","))
}

pub fn family_name(family: Family) -> &'static str {
    match family {
        Family::Radial3d => "radial",
        Family::Linear1d => "linear",
    }
}

pub fn sector_name(sector: Sector) -> &'static str {
    match sector {
        Sector::Plus => "plus",
        Sector::Minus => "minus",
    }
}

/// Flat JSON record for one state report: snake_case keys, reals with six
/// fractional digits, no NaN/Inf (errors abort before serialization).
pub fn report_to_json(r: &EntropyReport) -> String {
    format!(
        "{{\"family\":\"{}\",\"sector\":\"{}\",\"n\":{},\"l\":{},\"s_pos\":{},\"s_mom\":{},\"sum\":{},\"bound\":{},\"margin\":{},\"err_pos\":{},\"err_mom\":{}}}\n",
        family_name(r.spec.family),
        sector_name(r.spec.sector),
        r.spec.n,
        r.spec.l,
        fmt_val(r.s_pos),
        fmt_val(r.s_mom),
        fmt_val(r.sum),
        fmt_val(r.bbm_bound),
        fmt_val(r.margin),
        fmt_val(r.numerics.err_pos),
        fmt_val(r.numerics.err_mom),
    )
}

pub fn report_to_csv(r: &EntropyReport) -> String {
    format!(
        "family,sector,n,l,s_pos,s_mom,sum,bound,margin,err_pos,err_mom\n{},{},{},{},{},{},{},{},{},{},{}\n",
        family_name(r.spec.family),
        sector_name(r.spec.sector),
        r.spec.n,
        r.spec.l,
        fmt_val(r.s_pos),
        fmt_val(r.s_mom),
        fmt_val(r.sum),
        fmt_val(r.bbm_bound),
        fmt_val(r.margin),
        fmt_val(r.numerics.err_pos),
        fmt_val(r.numerics.err_mom),
    )
}

pub fn report_to_markdown(r: &EntropyReport) -> String {
    let header = "| family | sector | n | l | s_pos | s_mom | sum | bound | margin |\n|---|---|---|---|---|---|---|---|---|\n";
    format!(
        "{header}| {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
        family_name(r.spec.family),
        sector_name(r.spec.sector),
        r.spec.n,
        r.spec.l,
        fmt_val(r.s_pos),
        fmt_val(r.s_mom),
        fmt_val(r.sum),
        fmt_val(r.bbm_bound),
        fmt_val(r.margin),
    )
}

/// Position and momentum densities sampled on fixed 512-point grids over
/// the truncation domains, for external plotting.
#[derive(Debug, Clone)]
pub struct PlotData {
    pub spec: StateSpec,
    pub x: Vec<f64>,
    pub density_pos: Vec<f64>,
    pub p: Vec<f64>,
    pub density_mom: Vec<f64>,
}

pub const PLOT_POINTS: usize = 512;

pub fn plot_data(spec: StateSpec, cfg: &QuadratureConfig) -> Result<PlotData> {
    spec.validate()?;
    let state = BoundState::new(spec, cfg)?;
    let amp = MomentumAmplitude::for_state(spec, cfg)?;
    let r = cfg.truncation_radius;
    let p_max = momentum_radius(spec, cfg);
    let (x0, x1, p0, p1) = match spec.family {
        Family::Radial3d => (0.0, r, 0.0, p_max),
        Family::Linear1d => (-r, r, -p_max, p_max),
    };
    let grid = |a: f64, b: f64| -> Vec<f64> {
        (0..PLOT_POINTS)
            .map(|i| a + (b - a) * i as f64 / (PLOT_POINTS - 1) as f64)
            .collect()
    };
    let x = grid(x0, x1);
    let p = grid(p0, p1);
    let density_pos = x.iter().map(|&xi| state.eval(xi).powi(2)).collect();
    let density_mom = p.iter().map(|&pi| amp.evaluate(pi).powi(2)).collect();
    Ok(PlotData {
        spec,
        x,
        density_pos,
        p,
        density_mom,
    })
}

fn fmt_plot(v: f64) -> String {
    format!("{v:.9e}")
}

pub fn plot_to_csv(d: &PlotData) -> String {
    let mut out = String::from("x,density_pos,p,density_mom\n");
    for i in 0..d.x.len() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_plot(d.x[i]),
            fmt_plot(d.density_pos[i]),
            fmt_plot(d.p[i]),
            fmt_plot(d.density_mom[i]),
        ));
    }
    out
}

pub fn plot_to_markdown(d: &PlotData) -> String {
    let mut out = String::from("| x | density_pos | p | density_mom |\n|---|---|---|---|\n");
    for i in 0..d.x.len() {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            fmt_plot(d.x[i]),
            fmt_plot(d.density_pos[i]),
            fmt_plot(d.p[i]),
            fmt_plot(d.density_mom[i]),
        ));
    }
    out
}

pub fn plot_to_json(d: &PlotData) -> String {
    let join = |v: &[f64]| v.iter().map(|&x| fmt_plot(x)).collect::<Vec<_>>().join(",");
    format!(
        "{{\"family\":\"{}\",\"sector\":\"{}\",\"n\":{},\"l\":{},\"x\":[{}],\"density_pos\":[{}],\"p\":[{}],\"density_mom\":[{}]}}\n",
        family_name(d.spec.family),
        sector_name(d.spec.sector),
        d.spec.n,
        d.spec.l,
        join(&d.x),
        join(&d.density_pos),
        join(&d.p),
        join(&d.density_mom),
    )
}
