//! Probability currents of the bound state and their vortex representation.
//!
//! Complex positions use `z = x + iy`; a current `(jx, jy)` is packed as
//! `jx + i jy`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{require_positive, Error, Result};
use crate::params::DerivedScales;
use crate::special::{fd_divergence, simpson, trapezoid_periodic, Grid2D};

/// Default finite-difference step of [`current_gauge`], in units of `a`.
pub const GAUGE_STEP: f64 = 1e-4;

/// Minimum distance to a vortex center, in units of `a`.
pub const EPS_SEP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentSample {
    pub x: f64,
    pub y: f64,
    pub jx: f64,
    pub jy: f64,
}

impl CurrentSample {
    pub fn new(x: f64, y: f64, jx: f64, jy: f64) -> Self {
        Self { x, y, jx, jy }
    }

    pub fn magnitude(&self) -> f64 {
        self.jx.hypot(self.jy)
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.jx, self.jy)
    }

    /// Both components multiplied by `charge`. Pass `-scales.charge()` to get
    /// the electric current density of the electron.
    pub fn scaled(&self, charge: f64) -> Self {
        Self {
            jx: self.jx * charge,
            jy: self.jy * charge,
            ..*self
        }
    }
}

/// Vector potential entering the gauge-covariant current.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorPotential {
    /// `A = (-yB, 0)` with the field of the given scales.
    Landau,
    /// `A = 0`.
    Zero,
}

/// Ground-state current `j = j0 e^{-r²/2a²} (-y, x)`.
pub fn current_paper(x: f64, y: f64, scales: &DerivedScales) -> CurrentSample {
    let a = scales.a();
    let e = (-(x * x + y * y) / (2.0 * a * a)).exp();
    let j0 = scales.j0();
    CurrentSample::new(x, y, -j0 * y * e, j0 * x * e)
}

/// `(1/m)[ħ Im(ψ*∇ψ) - (e/c) A |ψ|²]` with `e = -|e|`, gradients by central
/// differences of step `h`.
pub fn current_gauge<F>(
    psi: F,
    x: f64,
    y: f64,
    h: f64,
    scales: &DerivedScales,
    potential: VectorPotential,
) -> Result<CurrentSample>
where
    F: Fn(f64, f64) -> Complex64,
{
    let h = require_positive("h", h)?;
    let c = psi(x, y);
    let dx = (psi(x + h, y) - psi(x - h, y)) / (2.0 * h);
    let dy = (psi(x, y + h) - psi(x, y - h)) / (2.0 * h);
    let hbar = scales.hbar();
    let mut jx = hbar * (c.conj() * dx).im;
    let jy = hbar * (c.conj() * dy).im;
    if potential == VectorPotential::Landau {
        // -(e/c) A_x = -(-|e|/c)(-yB) = -κ y
        jx -= scales.kappa() * y * c.norm_sqr();
    }
    let m = scales.mass();
    Ok(CurrentSample::new(x, y, jx / m, jy / m))
}

/// Closed-form curl `(A/π)(1 - |z|²/d²) e^{-|z|²/d²}`.
pub fn curl_closed(x: f64, y: f64, scales: &DerivedScales) -> f64 {
    let d2 = scales.d() * scales.d();
    let rho = (x * x + y * y) / d2;
    scales.a_scale() / PI * (1.0 - rho) * (-rho).exp()
}

/// Vortex intensity `I(z) = A |z|² e^{-|z|²/d²}`.
pub fn vortex_intensity(z: Complex64, scales: &DerivedScales) -> f64 {
    let zz = z.norm_sqr();
    scales.a_scale() * zz * (-zz / (scales.d() * scales.d())).exp()
}

/// `j = i I(z) / (2π z*)`; the removable point `z = 0` gives 0.
pub fn current_complex(z: Complex64, scales: &DerivedScales) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    Complex64::i() * vortex_intensity(z, scales) / (2.0 * PI * z.conj())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VortexCenter {
    pub z: Complex64,
    pub intensity: f64,
}

impl VortexCenter {
    pub fn new(x: f64, y: f64, intensity: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::invalid("x", x, "must be finite"));
        }
        if !y.is_finite() {
            return Err(Error::invalid("y", y, "must be finite"));
        }
        if !(intensity >= 0.0) || !intensity.is_finite() {
            return Err(Error::invalid("intensity", intensity, "must be finite and non-negative"));
        }
        Ok(Self {
            z: Complex64::new(x, y),
            intensity,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VortexConfig {
    centers: Vec<VortexCenter>,
    eps_sep: f64,
}

impl VortexConfig {
    /// Centers must be non-empty and pairwise at least `EPS_SEP · a` apart.
    pub fn new(centers: Vec<VortexCenter>, scales: &DerivedScales) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::invalid("centers", 0.0, "need at least one vortex center"));
        }
        let eps_sep = EPS_SEP * scales.a();
        for (k, c) in centers.iter().enumerate() {
            for other in &centers[k + 1..] {
                let sep = (c.z - other.z).norm();
                if sep < eps_sep {
                    return Err(Error::invalid("centers", sep, "two centers coincide"));
                }
            }
        }
        Ok(Self { centers, eps_sep })
    }

    pub fn centers(&self) -> &[VortexCenter] {
        &self.centers
    }

    pub fn eps_sep(&self) -> f64 {
        self.eps_sep
    }

    pub fn total_intensity(&self) -> f64 {
        self.centers.iter().map(|c| c.intensity).sum()
    }
}

/// Superposition `(i/2π) Σ_k I_k / (z - z_k)*` of single-center vortices with
/// frozen intensities. Each term circulates the same way as
/// [`current_complex`].
pub fn multi_center_current(config: &VortexConfig, z: Complex64) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for c in &config.centers {
        let dz = z - c.z;
        if dz.norm() < config.eps_sep {
            return Err(Error::NearPole {
                x: z.re,
                y: z.im,
                radius: config.eps_sep,
            });
        }
        total += c.intensity / dz.conj();
    }
    Ok(Complex64::i() * total / (2.0 * PI))
}

/// `∮ j·dl` counter-clockwise around the circle `|z| = r`, with `n` samples.
pub fn circulation<F>(current: F, r: f64, n: usize) -> f64
where
    F: Fn(f64, f64) -> CurrentSample,
{
    trapezoid_periodic(
        |t| {
            let (s, c) = t.sin_cos();
            let j = current(r * c, r * s);
            r * (-j.jx * s + j.jy * c)
        },
        n,
    )
}

/// `∫∫ curl` over the disc `|z| ≤ r` in polar coordinates, `n` points per
/// direction.
pub fn disc_flux<F>(curl: F, r: f64, n: usize) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    simpson(
        |rho| rho * trapezoid_periodic(|t| curl(rho * t.cos(), rho * t.sin()), n),
        0.0,
        r,
        n,
    )
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuityReport {
    pub max_abs_div: f64,
    pub x: f64,
    pub y: f64,
    pub interior_points: usize,
}

/// Largest `|∂jx/∂x + ∂jy/∂y|` over interior nodes. The density is
/// stationary, so this is the whole continuity residual; `prob` only has to
/// live on the same lattice.
pub fn continuity_check(
    current: &Grid2D<CurrentSample>,
    prob: &Grid2D<f64>,
) -> Result<ContinuityReport> {
    if !current.same_shape(prob) {
        return Err(Error::GridMismatch(format!(
            "current grid {}x{} vs density grid {}x{}",
            current.nx(),
            current.ny(),
            prob.nx(),
            prob.ny()
        )));
    }
    let field = current.map(|s| [s.jx, s.jy]);
    let mut report = ContinuityReport {
        max_abs_div: 0.0,
        x: f64::NAN,
        y: f64::NAN,
        interior_points: 0,
    };
    for (i, j) in field.interior() {
        let d = fd_divergence(&field, i, j)?.abs();
        report.interior_points += 1;
        if d > report.max_abs_div || report.x.is_nan() {
            report.max_abs_div = d;
            report.x = field.x(i);
            report.y = field.y(j);
        }
    }
    Ok(report)
}
