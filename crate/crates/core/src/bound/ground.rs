use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::landau::apply_hamiltonian_fd;
use crate::params::DerivedScales;
use crate::special::{trapezoid_2d, Extent};

/// Closed-form ground state
/// `Ψ₀ = exp((-x² - y² + 2ixy) / 4a²) / (√(2π) a)`.
pub fn ground_state_eval(x: f64, y: f64, scales: &DerivedScales) -> Complex64 {
    let a2 = scales.a() * scales.a();
    let amplitude = (-(x * x + y * y) / (4.0 * a2)).exp() / ((2.0 * PI).sqrt() * scales.a());
    Complex64::from_polar(amplitude, x * y / (2.0 * a2))
}

/// `|Ψ₀|² = exp(-(x² + y²) / 2a²) / (2π a²)`.
pub fn ground_state_density(x: f64, y: f64, scales: &DerivedScales) -> f64 {
    let a2 = scales.a() * scales.a();
    (-(x * x + y * y) / (2.0 * a2)).exp() / (2.0 * PI * a2)
}

/// `∫∫ |Ψ₀|²` by the trapezoid rule on `[-half_width·a, half_width·a]²`
/// with `nodes × nodes` samples.
pub fn ground_state_norm(scales: &DerivedScales, half_width: f64, nodes: usize) -> Result<f64> {
    let extent = Extent::square(half_width * scales.a())?;
    Ok(trapezoid_2d(
        |x, y| ground_state_eval(x, y, scales).norm_sqr(),
        &extent,
        nodes,
        nodes,
    ))
}

/// `HΨ₀ - (ħω/2)Ψ₀` with the magnetic Hamiltonian applied by central
/// differences of step `h`. Away from the origin the closed form is an exact
/// eigenstate, so this is pure discretization error.
pub fn schrodinger_residual(x: f64, y: f64, h: f64, scales: &DerivedScales) -> Result<Complex64> {
    if x == 0.0 && y == 0.0 {
        return Err(Error::Domain {
            function: "schrodinger_residual (origin carries the delta)",
            arg: 0.0,
        });
    }
    if !(h > 0.0) {
        return Err(Error::invalid("h", h, "must be positive"));
    }
    let psi = |x: f64, y: f64| ground_state_eval(x, y, scales);
    let half = 0.5 * scales.hbar() * scales.omega();
    Ok(apply_hamiltonian_fd(psi, x, y, h, scales) - half * psi(x, y))
}
