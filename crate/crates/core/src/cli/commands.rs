use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::bound::{self, ground_state_eval, SolverMethod};
use crate::current::{
    current_paper, curl_closed, multi_center_current, VortexCenter, VortexConfig,
};
use crate::error::Error;
use crate::params::{derive_scales, DerivedScales, UnitSystem};
use crate::special::Grid2D;
use crate::zero_field::{
    dwell_ratio, localization_ratio_exact, localization_ratio_paper, localization_length,
};

use super::config::{OutputFormat, RunConfig};
use super::format::{csv_table, json_num, json_report, json_table, sci, text_report};
use super::CliError;

pub const FIELD_HEADER: [&str; 8] = ["x", "y", "re_psi", "im_psi", "prob", "jx", "jy", "curl"];
pub const VORTEX_HEADER: [&str; 4] = ["x", "y", "jx", "jy"];

fn scales_of(cfg: &RunConfig) -> Result<DerivedScales, CliError> {
    Ok(derive_scales(&cfg.physical_params()?)?)
}

fn describe_scales(s: &DerivedScales) {
    eprintln!(
        "a = {}, omega = {}, j0 = {}, hbar*omega = {}",
        sci(s.a()),
        sci(s.omega()),
        sci(s.j0()),
        sci(s.hbar_omega())
    );
}

#[derive(Serialize)]
struct SolveReport {
    method: SolverMethod,
    units: UnitSystem,
    lambda: Box<RawValue>,
    cutoff: u64,
    b: Box<RawValue>,
    energy_hbar_omega: Box<RawValue>,
    binding_hbar_omega: Box<RawValue>,
    energy: Box<RawValue>,
    binding: Box<RawValue>,
    c_norm: Box<RawValue>,
    residual: Box<RawValue>,
}

pub fn solve_report(cfg: &RunConfig) -> Result<String, CliError> {
    let method = cfg.method()?;
    let params = cfg.physical_params()?;
    let scales = derive_scales(&params)?;
    let sol = match bound::solve(method, params.lambda(), cfg.solver.cutoff) {
        Ok(s) => s,
        Err(e @ Error::InvalidParam { .. }) => return Err(CliError::Validation(e.to_string())),
        Err(e) => return Err(CliError::Solver(e.to_string())),
    };
    let residual = sol.residual().map_err(|e| CliError::Solver(e.to_string()))?;
    if method == SolverMethod::ExactSum && !(residual.abs() <= cfg.solver.tolerance) {
        return Err(CliError::Solver(format!(
            "residual {} above tolerance {}",
            sci(residual),
            sci(cfg.solver.tolerance)
        )));
    }
    Ok(match cfg.output.format {
        OutputFormat::Json => json_report(&SolveReport {
            method,
            units: scales.units(),
            lambda: json_num(sol.lambda),
            cutoff: sol.cutoff,
            b: json_num(sol.b),
            energy_hbar_omega: json_num(sol.energy),
            binding_hbar_omega: json_num(sol.binding),
            energy: json_num(sol.energy_in(&scales)),
            binding: json_num(sol.binding_in(&scales)),
            c_norm: json_num(sol.c_norm),
            residual: json_num(residual),
        }),
        OutputFormat::Csv => {
            let unit = match scales.units() {
                UnitSystem::Natural => "hbar*omega",
                UnitSystem::GaussianPractical => "eV",
            };
            text_report(&[
                ("method", method.to_string()),
                ("lambda", sci(sol.lambda)),
                ("cutoff", sol.cutoff.to_string()),
                ("b", sci(sol.b)),
                ("energy/hbar*omega", sci(sol.energy)),
                ("binding/hbar*omega", sci(sol.binding)),
                ("energy", format!("{} {unit}", sci(sol.energy_in(&scales)))),
                ("binding", format!("{} {unit}", sci(sol.binding_in(&scales)))),
                ("c_norm", sci(sol.c_norm)),
                ("residual", sci(residual)),
            ])
        }
    })
}

pub fn solve(cfg: &RunConfig, verbose: bool) -> Result<String, CliError> {
    if verbose {
        describe_scales(&scales_of(cfg)?);
    }
    solve_report(cfg)
}

fn table(cfg: &RunConfig, header: &[&str], rows: &[Vec<f64>]) -> String {
    match cfg.output.format {
        OutputFormat::Csv => csv_table(header, rows),
        OutputFormat::Json => json_table(header, rows),
    }
}

fn grid_points(cfg: &RunConfig, scales: &DerivedScales) -> Result<Grid2D<(f64, f64)>, CliError> {
    cfg.check_grid()?;
    let extent = cfg.extent(scales.a())?;
    Ok(Grid2D::sample(extent, cfg.grid.nx, cfg.grid.ny, |x, y| (x, y))?)
}

pub fn field_rows(cfg: &RunConfig, scales: &DerivedScales) -> Result<Vec<Vec<f64>>, CliError> {
    let grid = grid_points(cfg, scales)?;
    Ok(grid
        .values()
        .iter()
        .map(|&(x, y)| {
            let psi = ground_state_eval(x, y, scales);
            let j = current_paper(x, y, scales);
            vec![x, y, psi.re, psi.im, psi.norm_sqr(), j.jx, j.jy, curl_closed(x, y, scales)]
        })
        .collect())
}

pub fn field(cfg: &RunConfig, verbose: bool) -> Result<String, CliError> {
    let scales = scales_of(cfg)?;
    if verbose {
        describe_scales(&scales);
    }
    Ok(table(cfg, &FIELD_HEADER, &field_rows(cfg, &scales)?))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CenterSpec {
    x: f64,
    y: f64,
    intensity: f64,
}

fn load_centers(path: &Path, scales: &DerivedScales) -> Result<VortexConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let specs: Vec<CenterSpec> = serde_json::from_str(&text)
        .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
    let a = scales.a();
    let unit = scales.a_scale() * a * a;
    let centers = specs
        .iter()
        .map(|c| VortexCenter::new(c.x * a, c.y * a, c.intensity * unit))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VortexConfig::new(centers, scales)?)
}

pub fn vortices(cfg: &RunConfig, centers: &Path, verbose: bool) -> Result<String, CliError> {
    let scales = scales_of(cfg)?;
    let config = load_centers(centers, &scales)?;
    if verbose {
        describe_scales(&scales);
        eprintln!("{} vortex center(s)", config.centers().len());
    }
    let grid = grid_points(cfg, &scales)?;
    let mut near_pole = 0usize;
    let mut rows = Vec::with_capacity(grid.values().len());
    for &(x, y) in grid.values() {
        let (jx, jy) = match multi_center_current(&config, Complex64::new(x, y)) {
            Ok(j) => (j.re, j.im),
            Err(Error::NearPole { .. }) => {
                near_pole += 1;
                (f64::NAN, f64::NAN)
            }
            Err(e) => return Err(e.into()),
        };
        rows.push(vec![x, y, jx, jy]);
    }
    if near_pole > 0 {
        eprintln!("warning: {near_pole} sample(s) within the pole radius set to NaN");
    }
    Ok(table(cfg, &VORTEX_HEADER, &rows))
}

#[derive(Serialize)]
struct CompareReport {
    e0_ev: Box<RawValue>,
    field_kg: Box<RawValue>,
    a_cm: Box<RawValue>,
    l0_cm: Box<RawValue>,
    ratio_exact: Box<RawValue>,
    ratio_paper: Box<RawValue>,
    deviation_percent: Box<RawValue>,
    r0_cm: Box<RawValue>,
    dwell_with_field: Box<RawValue>,
    dwell_without_field: Box<RawValue>,
}

pub fn compare(cfg: &RunConfig, e0_ev: f64, r0: Option<f64>) -> Result<String, CliError> {
    let b_kg = cfg.physics.field_kg;
    let params = crate::params::PhysicalParams::gaussian(b_kg, 1.0, 1.0)?;
    let a = derive_scales(&params)?.a();
    let l0 = localization_length(e0_ev, &params)?;
    let exact = localization_ratio_exact(e0_ev, b_kg)?;
    let paper = localization_ratio_paper(e0_ev, b_kg);
    let deviation = (exact - paper).abs() / exact * 100.0;
    let r0 = r0.unwrap_or(0.01 * a.min(l0));
    let dwell = |scale, with_field| {
        dwell_ratio(r0, scale, with_field).map_err(|e| CliError::Validation(e.to_string()))
    };
    let with_field = dwell(a, true)?;
    let without_field = dwell(l0, false)?;
    Ok(match cfg.output.format {
        OutputFormat::Json => json_report(&CompareReport {
            e0_ev: json_num(e0_ev),
            field_kg: json_num(b_kg),
            a_cm: json_num(a),
            l0_cm: json_num(l0),
            ratio_exact: json_num(exact),
            ratio_paper: json_num(paper),
            deviation_percent: json_num(deviation),
            r0_cm: json_num(r0),
            dwell_with_field: json_num(with_field),
            dwell_without_field: json_num(without_field),
        }),
        OutputFormat::Csv => text_report(&[
            ("e0", format!("{} eV", sci(e0_ev))),
            ("field", format!("{} kG", sci(b_kg))),
            ("a", format!("{} cm", sci(a))),
            ("l0", format!("{} cm", sci(l0))),
            ("a/l0 exact", sci(exact)),
            ("a/l0 estimate", sci(paper)),
            ("deviation", format!("{} %", sci(deviation))),
            ("r0", format!("{} cm", sci(r0))),
            ("dwell ratio, field", sci(with_field)),
            ("dwell ratio, no field", sci(without_field)),
        ]),
    })
}
