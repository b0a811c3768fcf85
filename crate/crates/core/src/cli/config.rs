//! Run configuration: TOML file with `[physics]`, `[solver]`, `[grid]` and
//! `[output]` sections, overridden by command-line flags.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bound::SolverMethod;
use crate::error::Result;
use crate::params::{PhysicalParams, UnitSystem};
use crate::special::Extent;

use super::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PhysicsSection {
    pub units: UnitSystem,
    /// Field in kilogauss; ignored in natural units.
    pub field_kg: f64,
    pub mass_ratio: f64,
    pub lambda: f64,
}

impl Default for PhysicsSection {
    fn default() -> Self {
        Self {
            units: UnitSystem::Natural,
            field_kg: 1.0,
            mass_ratio: 1.0,
            lambda: 4.0 * PI,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverSection {
    pub cutoff: u64,
    pub method: String,
    pub tolerance: f64,
}

impl Default for SolverSection {
    fn default() -> Self {
        Self {
            cutoff: 1_000_000,
            method: "log".into(),
            tolerance: 1e-10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSection {
    pub nx: usize,
    pub ny: usize,
    /// `[x_min, x_max, y_min, y_max]` in units of the magnetic length.
    pub extent: [f64; 4],
}

impl Default for GridSection {
    fn default() -> Self {
        Self {
            nx: 201,
            ny: 201,
            extent: [-4.0, 4.0, -4.0, 4.0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub physics: PhysicsSection,
    pub solver: SolverSection,
    pub grid: GridSection,
    pub output: OutputSection,
}

impl RunConfig {
    pub fn load(path: &Path) -> std::result::Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always serializable")
    }

    pub fn physical_params(&self) -> Result<PhysicalParams> {
        let p = &self.physics;
        match p.units {
            UnitSystem::Natural => PhysicalParams::natural_with_mass_ratio(p.lambda, p.mass_ratio),
            UnitSystem::GaussianPractical => PhysicalParams::gaussian(p.field_kg, p.mass_ratio, p.lambda),
        }
    }

    pub fn method(&self) -> std::result::Result<SolverMethod, CliError> {
        self.solver.method.parse().map_err(CliError::Validation)
    }

    /// Grid extent scaled to internal lengths.
    pub fn extent(&self, a: f64) -> std::result::Result<Extent, CliError> {
        let [x0, x1, y0, y1] = self.grid.extent;
        let e = Extent::new(x0, x1, y0, y1).map_err(|e| CliError::Validation(e.to_string()))?;
        Ok(e.scaled(a))
    }

    pub fn check_grid(&self) -> std::result::Result<(), CliError> {
        let g = &self.grid;
        if g.nx < 2 || g.ny < 2 {
            return Err(CliError::Validation(format!(
                "grid must be at least 2x2, got {}x{}",
                g.nx, g.ny
            )));
        }
        if g.nx.saturating_mul(g.ny) > 25_000_000 {
            return Err(CliError::Validation(format!("grid {}x{} is too large", g.nx, g.ny)));
        }
        Ok(())
    }
}

/// Parses `NX,NY`.
pub fn parse_grid(s: &str) -> std::result::Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("expected NX,NY, got `{s}`"));
    }
    let n = |t: &str| t.parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((n(parts[0])?, n(parts[1])?))
}

/// Parses `XMIN,XMAX,YMIN,YMAX`.
pub fn parse_extent(s: &str) -> std::result::Result<[f64; 4], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    v.try_into()
        .map_err(|_| format!("expected XMIN,XMAX,YMIN,YMAX, got `{s}`"))
}
