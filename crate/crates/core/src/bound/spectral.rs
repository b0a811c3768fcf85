//! Landau-level expansion of the bound state.
//!
//! The state is `Ψ = Σ_n ∫dp C_{np} e^{ipx/ħ} U_n(y; y0(p))` with
//! `C_{np} = C_E V_n(0; y0) / (n + b)`. The momentum integral is done in the
//! orbit-center variable `y0 = p a²/ħ` (Jacobian `dp = ħ/a² dy0`), where the
//! product `U_n(y; y0) V_n(0; y0)` carries the Gaussian
//! `exp(-(y0 - y/2)²/a² - y²/4a²)`. Shifting Gauss–Hermite nodes to `y/2`
//! integrates it in standard form.

use num_complex::Complex64;

use crate::error::{require_positive, Error, Result};
use crate::landau::v_n0;
use crate::params::DerivedScales;
use crate::special::{hermite_functions, trigamma, GaussHermite, N_MAX_HERMITE};

fn check_cutoff(cutoff_n: usize) -> Result<()> {
    if cutoff_n > N_MAX_HERMITE {
        return Err(Error::OutOfRange {
            what: "spectral cutoff",
            value: cutoff_n as f64,
            limit: N_MAX_HERMITE as f64,
        });
    }
    Ok(())
}

/// Coefficients `C_{np} = C_E V_n(0)/(n+b)` of the bound state in the
/// Landau basis, kept in functional form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralCoefficients {
    b: f64,
    cutoff_n: usize,
    c_e: f64,
}

impl SpectralCoefficients {
    /// `C_E = ψ'(b)^{-1/2}`.
    pub fn new(b: f64, cutoff_n: usize) -> Result<Self> {
        let b = require_positive("b", b)?;
        check_cutoff(cutoff_n)?;
        Ok(Self {
            b,
            cutoff_n,
            c_e: trigamma(b)?.sqrt().recip(),
        })
    }

    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn cutoff_n(&self) -> usize {
        self.cutoff_n
    }
    pub fn c_e(&self) -> f64 {
        self.c_e
    }

    /// `C_{np}` for level `n` at orbit center `y0`.
    pub fn coefficient(&self, n: usize, y0: f64, a: f64) -> Result<f64> {
        Ok(self.c_e * v_n0(n, y0, a)? / (n as f64 + self.b))
    }

    /// `∫dp V_n(0)²`, which should equal `ħ/a` for every `n`.
    pub fn momentum_measure(n: usize, scales: &DerivedScales, rule: &GaussHermite) -> Result<f64> {
        // y0 = a t, dp = (ħ/a) dt, V_n(0)² = h_n(-t)²
        let mut s = 0.0;
        for (t, w) in rule.nodes().iter().zip(rule.scaled_weights()) {
            s += w * hermite_functions(n, -t)?[n].powi(2);
        }
        Ok(s * scales.hbar() / scales.a())
    }

    /// `Σ_{n,p} |C_{np}|²` with the momentum integral done by a `quad_k`-point
    /// rule for `n ≤ cutoff` and the remaining tail summed as
    /// `(ħ/a) C_E² ψ'(b + cutoff + 1)`. Equals `ħ/a`, i.e. 1 in natural units.
    pub fn normalization(&self, scales: &DerivedScales, quad_k: usize) -> Result<f64> {
        let rule = GaussHermite::new(quad_k)?;
        let mut total = 0.0;
        for n in 0..=self.cutoff_n {
            let m = Self::momentum_measure(n, scales, &rule)?;
            total += m / (n as f64 + self.b).powi(2);
        }
        total *= self.c_e * self.c_e;
        let tail = trigamma(self.b + self.cutoff_n as f64 + 1.0)?;
        Ok(total + self.c_e * self.c_e * tail * scales.hbar() / scales.a())
    }

    /// Residual of the coefficient equation
    /// `C_{np}(n+b) = λ0 Σ_{l≤N,k} C_{lk} V_l(0) V_n(0)` at level `n`, orbit
    /// center `y0`, with the `k` integral done by quadrature.
    pub fn coefficient_equation_residual(
        &self,
        n: usize,
        y0: f64,
        scales: &DerivedScales,
        quad_k: usize,
    ) -> Result<f64> {
        let rule = GaussHermite::new(quad_k)?;
        let a = scales.a();
        let lhs = self.coefficient(n, y0, a)? * (n as f64 + self.b);
        let mut inner = 0.0;
        for l in 0..=self.cutoff_n {
            let m = Self::momentum_measure(l, scales, &rule)?;
            inner += self.c_e * m / (l as f64 + self.b);
        }
        let rhs = scales.lambda0() * inner * v_n0(n, y0, a)?;
        Ok((lhs - rhs).abs())
    }
}

/// Unnormalized `Ψ(x, y) ∝ Σ_{n≤N} (n+b)^{-1} ∫dp e^{ipx/ħ} U_n(y; y0) V_n(0; y0)`.
///
/// Only ratios of the returned values are meaningful.
pub fn reconstruct_state(
    b: f64,
    cutoff_n: usize,
    quad_k: usize,
    x: f64,
    y: f64,
    scales: &DerivedScales,
) -> Result<Complex64> {
    let b = require_positive("b", b)?;
    check_cutoff(cutoff_n)?;
    let rule = GaussHermite::new(quad_k)?;
    let a = scales.a();
    let (xs, ys) = (x / a, y / a);
    let weights: Vec<f64> = (0..=cutoff_n).map(|n| 1.0 / (n as f64 + b)).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for (u, w) in rule.nodes().iter().zip(rule.scaled_weights()) {
        let t = u + 0.5 * ys;
        let along = hermite_functions(cutoff_n, ys - t)?;
        let at_origin = hermite_functions(cutoff_n, -t)?;
        let level_sum: f64 = weights
            .iter()
            .zip(along.iter().zip(&at_origin))
            .map(|(c, (p, q))| c * p * q)
            .sum();
        total += Complex64::from_polar(w * level_sum, xs * t);
    }
    // dp = (ħ/a) dt and U_n carries 1/√a
    Ok(total * (scales.hbar() / a / a.sqrt()))
}
