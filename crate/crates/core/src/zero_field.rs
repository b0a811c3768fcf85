//! The bound state of the same delta well without a magnetic field,
//! `Ψ ∝ K₀(r / l0)` with `l0 = √(ħ² / 2m|E₀|)`, and the length and dwell-time
//! ratios that contrast it with the magnetic case.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{require_positive, Error, Result};
use crate::params::{derive_scales, PhysicalParams};
use crate::special::{bessel_k0, simpson};

/// `∫₀^∞ t K₀(t)² dt` by Simpson's rule in `s = ln t` over `[-40, 4]`.
pub fn k0_radial_moment() -> f64 {
    static MOMENT: OnceLock<f64> = OnceLock::new();
    *MOMENT.get_or_init(|| simpson(
        |s: f64| {
            let t = s.exp();
            let k = bessel_k0(t).expect("positive argument");
            t * t * k * k
        },
        -40.0,
        4.0,
        4400,
    ))
}

/// `l0 = √(ħ² / 2m|E₀|)` with `e0_mag` in the reporting energy unit of
/// `params`.
pub fn localization_length(e0_mag: f64, params: &PhysicalParams) -> Result<f64> {
    let e0_mag = require_positive("e0", e0_mag)?;
    let internal = e0_mag / params.units().energy_report_factor();
    Ok(params.hbar() / (2.0 * params.mass() * internal).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroFieldState {
    e0_mag: f64,
    l0: f64,
    coupling: f64,
    c_prefactor: f64,
}

impl ZeroFieldState {
    /// `e0_mag` is the binding energy in the reporting unit of `params`
    /// (eV for Gaussian). The field of `params` is ignored.
    pub fn new(e0_mag: f64, params: &PhysicalParams) -> Result<Self> {
        let l0 = localization_length(e0_mag, params)?;
        let coupling = params.lambda();
        // ∫∫ K₀(r/l0)² = 2π l0² ∫ t K₀(t)² dt
        let k0_norm = 2.0 * PI * l0 * l0 * k0_radial_moment();
        let c_prefactor = 2.0 * PI / (coupling * k0_norm.sqrt());
        Ok(Self {
            e0_mag,
            l0,
            coupling,
            c_prefactor,
        })
    }

    pub fn e0_mag(&self) -> f64 {
        self.e0_mag
    }
    /// Localization length, internal length units.
    pub fn l0(&self) -> f64 {
        self.l0
    }
    pub fn coupling(&self) -> f64 {
        self.coupling
    }
    /// Normalization constant `C` of `Ψ = C (λ/2π) K₀(r/l0)`.
    pub fn c_prefactor(&self) -> f64 {
        self.c_prefactor
    }
}

/// `C (λ/2π) K₀(√(x² + y²) / l0)`; the origin is a logarithmic singularity.
pub fn zero_field_state_eval(state: &ZeroFieldState, x: f64, y: f64) -> Result<f64> {
    let r = x.hypot(y);
    if r == 0.0 {
        return Err(Error::Domain {
            function: "zero_field_state_eval (K0 diverges at the origin)",
            arg: 0.0,
        });
    }
    Ok(state.c_prefactor * state.coupling / (2.0 * PI) * bessel_k0(r / state.l0)?)
}

/// `a / l0 = √(2 m_e c |E₀| / ħ|e|B)` from CGS constants, `m = m_e`.
pub fn localization_ratio_exact(e0_ev: f64, b_kg: f64) -> Result<f64> {
    let params = PhysicalParams::gaussian(b_kg, 1.0, 1.0)?;
    let a = derive_scales(&params)?.a();
    Ok(a / localization_length(e0_ev, &params)?)
}

/// The rounded estimate `a / l0 ≈ 400 √(|E₀|[eV] / B[kG])`.
pub fn localization_ratio_paper(e0_ev: f64, b_kg: f64) -> f64 {
    400.0 * (e0_ev / b_kg).sqrt()
}

/// Ratio of the time spent inside a well of radius `r0` to the time outside.
/// With a field the state scale is `a` and the ratio is `r0²/a²`; without it
/// the scale is `l0` and the ratio is `r0² ln²(r0/l0) / l0²`.
pub fn dwell_ratio(r0: f64, state_scale: f64, with_field: bool) -> Result<f64> {
    let r0 = require_positive("r0", r0)?;
    let scale = require_positive("state_scale", state_scale)?;
    if r0 > 0.1 * scale {
        return Err(Error::OutOfRange {
            what: "r0 / state_scale",
            value: r0 / scale,
            limit: 0.1,
        });
    }
    let q = r0 / scale;
    Ok(if with_field {
        q * q
    } else {
        q * q * q.ln().powi(2)
    })
}
