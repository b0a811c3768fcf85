//! Landau-gauge eigenstates of the free magnetic Hamiltonian
//! `H = [(-iħ∂x + eBy/c)² - ħ²∂y²] / 2m` with `A = (-yB, 0)` and `e < 0`.
//!
//! The spinor factor is not represented; spin only enters through the energy.
//! The momentum `p` ranges over the whole real line (no sample-size bound).

use num_complex::Complex64;

use crate::error::Result;
use crate::params::{DerivedScales, PhysicalParams};
use crate::special::{hermite_function, hermite_functions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn sign(self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }
}

/// Quantum numbers `(n, p, s)` of a Landau-gauge state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LandauQuantum {
    pub n: usize,
    /// Momentum along `x`.
    pub p: f64,
    pub spin: Spin,
}

impl LandauQuantum {
    pub fn new(n: usize, p: f64, spin: Spin) -> Self {
        Self { n, p, spin }
    }
}

/// Classical orbit center `y0 = -cp/eB`. With `e = -|e|` this is
/// `+cp/|e|B = p/κ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GuidingCenter(pub f64);

impl GuidingCenter {
    pub fn from_momentum(p: f64, scales: &DerivedScales) -> Self {
        GuidingCenter(p / scales.kappa())
    }

    pub fn momentum(self, scales: &DerivedScales) -> f64 {
        self.0 * scales.kappa()
    }
}

/// `ħω(n + 1/2) + s ħω m / 2m_e`, in reporting energy units.
pub fn landau_energy(q: LandauQuantum, scales: &DerivedScales, params: &PhysicalParams) -> f64 {
    let hw = scales.hbar_omega();
    hw * (q.n as f64 + 0.5) + q.spin.sign() * hw * params.mass() / (2.0 * params.electron_mass())
}

/// `U_n(y) = (2ⁿ n! √π a)^{-1/2} exp(-(y-y0)²/2a²) H_n((y-y0)/a)`.
pub fn basis_u(n: usize, y: f64, y0: f64, a: f64) -> Result<f64> {
    Ok(hermite_function(n, (y - y0) / a)? / a.sqrt())
}

/// `U_0 ..= U_{n_max}` at one point.
pub fn basis_u_all(n_max: usize, y: f64, y0: f64, a: f64) -> Result<Vec<f64>> {
    let norm = a.sqrt().recip();
    let mut v = hermite_functions(n_max, (y - y0) / a)?;
    v.iter_mut().for_each(|u| *u *= norm);
    Ok(v)
}

/// Dimensionless `V_n(0) = √a U_n(y = 0)` for orbit center `y0`.
pub fn v_n0(n: usize, y0: f64, a: f64) -> Result<f64> {
    hermite_function(n, -y0 / a)
}

/// Spatial part `e^{ipx/ħ} U_n(y)` of the Landau state.
pub fn landau_state_eval(q: LandauQuantum, x: f64, y: f64, scales: &DerivedScales) -> Result<Complex64> {
    let y0 = GuidingCenter::from_momentum(q.p, scales).0;
    let u = basis_u(q.n, y, y0, scales.a())?;
    Ok(Complex64::from_polar(u, q.p * x / scales.hbar()))
}

/// Applies the spinless magnetic Hamiltonian to `psi` at `(x, y)` with
/// second-order central differences of step `h`:
///
/// `Hψ = [-ħ²(ψxx + ψyy) + 2iħκ y ψx + κ² y² ψ] / 2m`, `κ = |e|B/c`.
pub fn apply_hamiltonian_fd<F>(psi: F, x: f64, y: f64, h: f64, scales: &DerivedScales) -> Complex64
where
    F: Fn(f64, f64) -> Complex64,
{
    let c = psi(x, y);
    let (xp, xm) = (psi(x + h, y), psi(x - h, y));
    let (yp, ym) = (psi(x, y + h), psi(x, y - h));
    let h2 = h * h;
    let lap = (xp - 2.0 * c + xm) / h2 + (yp - 2.0 * c + ym) / h2;
    let dx = (xp - xm) / (2.0 * h);
    let hbar = scales.hbar();
    let kappa = scales.kappa();
    let i = Complex64::i();
    (-hbar * hbar * lap + 2.0 * i * hbar * kappa * y * dx + kappa * kappa * y * y * c)
        / (2.0 * scales.mass())
}
