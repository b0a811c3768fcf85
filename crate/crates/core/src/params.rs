//! Physical constants, unit systems and the derived scales every other module
//! works in.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Result};

/// Gaussian (CGS) constants, CODATA 2018.
pub mod cgs {
    /// Reduced Planck constant, erg s.
    pub const HBAR: f64 = 1.054_571_817e-27;
    /// Speed of light, cm / s.
    pub const C: f64 = 2.997_924_58e10;
    /// Elementary charge magnitude, statcoulomb.
    pub const E_CHARGE: f64 = 4.803_204_712_570_263e-10;
    /// Free-electron mass, g.
    pub const M_ELECTRON: f64 = 9.109_383_701_5e-28;
    /// One electron-volt in erg.
    pub const ERG_PER_EV: f64 = 1.602_176_634e-12;
    /// Gauss per kilogauss.
    pub const GAUSS_PER_KG: f64 = 1.0e3;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    /// ħ = m = ω = 1, hence a = 1.
    Natural,
    /// CGS internally; field entered in kilogauss, energies reported in eV,
    /// lengths in cm.
    #[serde(rename = "gaussian")]
    GaussianPractical,
}

impl UnitSystem {
    /// Multiplier taking an internal energy to the reporting unit.
    pub fn energy_report_factor(self) -> f64 {
        match self {
            UnitSystem::Natural => 1.0,
            UnitSystem::GaussianPractical => 1.0 / cgs::ERG_PER_EV,
        }
    }
}

/// Input constants of the model. Fields are fixed once constructed.
///
/// The electron charge is `-charge`; only its magnitude is stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    units: UnitSystem,
    field: f64,
    mass: f64,
    electron_mass: f64,
    charge: f64,
    hbar: f64,
    c: f64,
    lambda: f64,
}

impl PhysicalParams {
    /// Fully explicit constructor; every quantity must be finite and positive.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        units: UnitSystem,
        field: f64,
        mass: f64,
        electron_mass: f64,
        charge: f64,
        hbar: f64,
        c: f64,
        lambda: f64,
    ) -> Result<Self> {
        Ok(Self {
            units,
            field: require_positive("B", field)?,
            mass: require_positive("m", mass)?,
            electron_mass: require_positive("m_e", electron_mass)?,
            charge: require_positive("e", charge)?,
            hbar: require_positive("hbar", hbar)?,
            c: require_positive("c", c)?,
            lambda: require_positive("lambda", lambda)?,
        })
    }

    /// Natural units with `m = m_e`.
    pub fn natural(lambda: f64) -> Result<Self> {
        Self::natural_with_mass_ratio(lambda, 1.0)
    }

    /// Natural units where the effective mass is `mass_ratio` free-electron
    /// masses. Only the spin splitting and the magneton see the ratio.
    pub fn natural_with_mass_ratio(lambda: f64, mass_ratio: f64) -> Result<Self> {
        let ratio = require_positive("mass_ratio", mass_ratio)?;
        Self::new(UnitSystem::Natural, 1.0, 1.0, 1.0 / ratio, 1.0, 1.0, 1.0, lambda)
    }

    /// Gaussian units from a field in kilogauss and `m / m_e`.
    pub fn gaussian(b_kg: f64, mass_ratio: f64, lambda: f64) -> Result<Self> {
        let b_kg = require_positive("B", b_kg)?;
        let ratio = require_positive("mass_ratio", mass_ratio)?;
        Self::new(
            UnitSystem::GaussianPractical,
            b_kg * cgs::GAUSS_PER_KG,
            ratio * cgs::M_ELECTRON,
            cgs::M_ELECTRON,
            cgs::E_CHARGE,
            cgs::HBAR,
            cgs::C,
            lambda,
        )
    }

    /// Same constants with a different field strength (internal units).
    pub fn with_field(&self, field: f64) -> Result<Self> {
        Ok(Self {
            field: require_positive("B", field)?,
            ..*self
        })
    }

    pub fn with_lambda(&self, lambda: f64) -> Result<Self> {
        Ok(Self {
            lambda: require_positive("lambda", lambda)?,
            ..*self
        })
    }

    pub fn with_electron_mass(&self, electron_mass: f64) -> Result<Self> {
        Ok(Self {
            electron_mass: require_positive("m_e", electron_mass)?,
            ..*self
        })
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }
    /// Field strength in internal units (gauss for the Gaussian system).
    pub fn field(&self) -> f64 {
        self.field
    }
    pub fn mass(&self) -> f64 {
        self.mass
    }
    pub fn electron_mass(&self) -> f64 {
        self.electron_mass
    }
    pub fn charge(&self) -> f64 {
        self.charge
    }
    pub fn hbar(&self) -> f64 {
        self.hbar
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    fn validate(&self) -> Result<()> {
        require_positive("B", self.field)?;
        require_positive("m", self.mass)?;
        require_positive("lambda", self.lambda)?;
        require_positive("e", self.charge)?;
        Ok(())
    }
}

/// Quantities derived once from [`PhysicalParams`].
///
/// Lengths and frequencies are in internal units; `mu` and `hbar_omega` are in
/// the reporting energy unit of the parameter set (eV for Gaussian).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedScales {
    units: UnitSystem,
    omega: f64,
    a: f64,
    mu: f64,
    lambda0: f64,
    d: f64,
    j0: f64,
    a_scale: f64,
    hbar: f64,
    mass: f64,
    charge: f64,
    kappa: f64,
    hbar_omega: f64,
}

/// Computes ω, the magnetic length, the magneton and the current scales.
pub fn derive_scales(params: &PhysicalParams) -> Result<DerivedScales> {
    params.validate()?;
    let p = params;
    let omega = p.charge * p.field / (p.mass * p.c);
    let a = (p.hbar * p.c / (p.charge * p.field)).sqrt();
    let a4 = (a * a) * (a * a);
    let report = p.units.energy_report_factor();
    Ok(DerivedScales {
        units: p.units,
        omega,
        a,
        mu: bohr_magneton(params),
        lambda0: p.lambda / (4.0 * PI * p.mass * omega * a),
        d: 2f64.sqrt() * a,
        j0: p.hbar / (2.0 * PI * p.mass * a4),
        a_scale: p.hbar / (p.mass * a4),
        hbar: p.hbar,
        mass: p.mass,
        charge: p.charge,
        kappa: p.charge * p.field / p.c,
        hbar_omega: p.hbar * omega * report,
    })
}

/// `|e| ħ / 2 m_e c`, in reporting energy units per internal field unit
/// (eV/G in the Gaussian system).
pub fn bohr_magneton(params: &PhysicalParams) -> f64 {
    params.charge * params.hbar / (2.0 * params.electron_mass * params.c)
        * params.units.energy_report_factor()
}

impl DerivedScales {
    pub fn units(&self) -> UnitSystem {
        self.units
    }
    /// Cyclotron frequency `|e|B / mc`.
    pub fn omega(&self) -> f64 {
        self.omega
    }
    /// Magnetic length `√(ħc / |e|B)`.
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }
    /// `λ / (4π m ω a)`, the coupling appearing in the coefficient system.
    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }
    /// Vortex length `√2 a`.
    pub fn d(&self) -> f64 {
        self.d
    }
    /// Current amplitude `ħ / (2π m a⁴)` of the ground-state current.
    pub fn j0(&self) -> f64 {
        self.j0
    }
    /// Vortex amplitude `ħ / (m a⁴)`; equals `2π j0`.
    pub fn a_scale(&self) -> f64 {
        self.a_scale
    }
    pub fn hbar(&self) -> f64 {
        self.hbar
    }
    pub fn mass(&self) -> f64 {
        self.mass
    }
    /// Elementary charge magnitude. Multiplying a probability current by
    /// `-charge()` gives the electric current of the electron.
    pub fn charge(&self) -> f64 {
        self.charge
    }
    /// `|e|B / c`, which also equals `ħ / a²`.
    pub fn kappa(&self) -> f64 {
        self.kappa
    }
    /// Landau level spacing in reporting energy units.
    pub fn hbar_omega(&self) -> f64 {
        self.hbar_omega
    }

    /// Copy with the ground-state current amplitude scaled by `factor`,
    /// leaving the vortex amplitude alone. Used for fault injection in the
    /// verification suite.
    pub(crate) fn with_perturbed_j0(&self, factor: f64) -> Self {
        Self {
            j0: self.j0 * factor,
            ..*self
        }
    }
}
