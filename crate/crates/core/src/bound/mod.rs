//! The delta-potential bound state below the lowest Landau level.
//!
//! Writing the energy as `E = ħω(1/2 - b)`, the bound state satisfies
//! `1 = (λ/4π) Σ_{n=0}^{N} 1/(n + b)` once the divergent Landau sum is cut
//! off at level `N`. Three solvers are provided: the exact truncated sum
//! (digamma closed form), its logarithmic large-`N` form, and the
//! exponential asymptote that exhibits dimensional transmutation.

mod ground;
mod spectral;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::params::DerivedScales;
use crate::special::{digamma, find_root_bracketed, trigamma, Bracket};

pub use ground::{ground_state_density, ground_state_eval, ground_state_norm, schrodinger_residual};
pub use spectral::{reconstruct_state, SpectralCoefficients};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverMethod {
    #[serde(rename = "exact")]
    ExactSum,
    #[serde(rename = "log")]
    LogApprox,
    Asymptotic,
}

impl SolverMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolverMethod::ExactSum => "exact",
            SolverMethod::LogApprox => "log",
            SolverMethod::Asymptotic => "asymptotic",
        }
    }
}

impl fmt::Display for SolverMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolverMethod {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exact" => Ok(SolverMethod::ExactSum),
            "log" => Ok(SolverMethod::LogApprox),
            "asymptotic" => Ok(SolverMethod::Asymptotic),
            other => Err(format!("unknown method `{other}` (expected exact, log or asymptotic)")),
        }
    }
}

/// A solved bound state. Energies are in units of `ħω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundStateSolution {
    pub lambda: f64,
    /// `b = 1/2 - E/ħω`, positive.
    pub b: f64,
    /// `E / ħω = 1/2 - b`.
    pub energy: f64,
    /// `(ħω/2 - E) / ħω`, equal to `b`.
    pub binding: f64,
    pub cutoff: u64,
    /// `C_E = (Σ_{n≥0} 1/(n+b)²)^{-1/2} = ψ'(b)^{-1/2}`.
    pub c_norm: f64,
    pub method: SolverMethod,
}

impl BoundStateSolution {
    fn from_b(lambda: f64, b: f64, cutoff: u64, method: SolverMethod) -> Result<Self> {
        if !(b > 0.0) || !b.is_normal() {
            return Err(Error::Solver(format!(
                "b = {b:e} is not a positive normal number (lambda = {lambda} too weak for this method)"
            )));
        }
        Ok(Self {
            lambda,
            b,
            energy: 0.5 - b,
            binding: b,
            cutoff,
            c_norm: trigamma(b)?.sqrt().recip(),
            method,
        })
    }

    /// Energy in the reporting unit of `scales`.
    pub fn energy_in(&self, scales: &DerivedScales) -> f64 {
        self.energy * scales.hbar_omega()
    }

    pub fn binding_in(&self, scales: &DerivedScales) -> f64 {
        self.binding * scales.hbar_omega()
    }

    /// `(λ/4π) Σ_{n=0}^{N} 1/(n+b) - 1` for this `b`, whichever method
    /// produced it.
    pub fn residual(&self) -> Result<f64> {
        energy_residual(self.lambda, self.b, self.cutoff)
    }
}

fn check_cutoff(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("cutoff", 0.0, "must be at least 1"));
    }
    Ok(())
}

/// `Σ_{n=0}^{N} 1/(n+b) = ψ(N+1+b) - ψ(b)`.
pub fn energy_sum(b: f64, n: u64) -> Result<f64> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(Error::Domain {
            function: "energy_sum",
            arg: b,
        });
    }
    Ok(digamma(n as f64 + 1.0 + b)? - digamma(b)?)
}

/// The same sum term by term, smallest terms first.
pub fn energy_sum_direct(b: f64, n: u64) -> Result<f64> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(Error::Domain {
            function: "energy_sum_direct",
            arg: b,
        });
    }
    Ok((0..=n).rev().map(|k| 1.0 / (k as f64 + b)).sum())
}

/// `(λ/4π) Σ_{n=0}^{N} 1/(n+b) - 1`.
pub fn energy_residual(lambda: f64, b: f64, n: u64) -> Result<f64> {
    Ok(lambda / (4.0 * PI) * energy_sum(b, n)? - 1.0)
}

/// Unique `b > 0` solving the truncated energy condition.
///
/// The sum decreases strictly in `b`, so a bracket starting at
/// `[1e-12 (N+1), 1e3 N]` and widened upward always contains the root unless
/// the root lies below `1e-12 (N+1)`, which is reported as out of range.
pub fn solve_b_exact(lambda: f64, n: u64) -> Result<BoundStateSolution> {
    let lambda = require_positive("lambda", lambda)?;
    check_cutoff(n)?;
    let b_min = 1e-12 * (n as f64 + 1.0);
    // solve in ln b so the stopping width is relative for every scale of b
    let g = |u: f64| energy_residual(lambda, u.exp(), n).unwrap_or(f64::NAN);
    let lo = b_min.ln();
    if g(lo) < 0.0 {
        return Err(Error::OutOfRange {
            what: "4pi/lambda against the truncated sum at b_min",
            value: 4.0 * PI / lambda,
            limit: energy_sum(b_min, n)?,
        });
    }
    let mut b_hi = 1e3 * n as f64;
    while g(b_hi.ln()) > 0.0 {
        b_hi *= 10.0;
        if !b_hi.is_finite() || b_hi > 1e300 {
            return Err(Error::Solver(format!("no upper bracket for lambda = {lambda}")));
        }
    }
    let bracket = Bracket::evaluate(g, lo, b_hi.ln())?;
    let u = find_root_bracketed(g, bracket, 1e-15)?;
    let sol = BoundStateSolution::from_b(lambda, u.exp(), n, SolverMethod::ExactSum)?;
    let r = sol.residual()?;
    if r.abs() > 1e-10 {
        return Err(Error::Solver(format!("residual {r:e} above 1e-10")));
    }
    Ok(sol)
}

/// Closed form of `1 = (λ/4π) ln(N/b + 1)`: `b = N / (e^{4π/λ} - 1)`.
pub fn solve_b_log(lambda: f64, n: u64) -> Result<BoundStateSolution> {
    let lambda = require_positive("lambda", lambda)?;
    check_cutoff(n)?;
    let b = n as f64 / (4.0 * PI / lambda).exp_m1();
    BoundStateSolution::from_b(lambda, b, n, SolverMethod::LogApprox)
}

/// Large-`N` asymptote `b = N e^{-4π/λ}`, i.e. binding `ħωN e^{-4π/λ}`.
pub fn b_asymptotic(lambda: f64, n: u64) -> Result<BoundStateSolution> {
    let lambda = require_positive("lambda", lambda)?;
    check_cutoff(n)?;
    let b = n as f64 * (-4.0 * PI / lambda).exp();
    BoundStateSolution::from_b(lambda, b, n, SolverMethod::Asymptotic)
}

pub fn solve(method: SolverMethod, lambda: f64, n: u64) -> Result<BoundStateSolution> {
    match method {
        SolverMethod::ExactSum => solve_b_exact(lambda, n),
        SolverMethod::LogApprox => solve_b_log(lambda, n),
        SolverMethod::Asymptotic => b_asymptotic(lambda, n),
    }
}

/// Bare coupling `λ(N) = 4π / ln(N/b* + 1)` that keeps the log-method
/// binding fixed at `b*` as the cutoff moves.
pub fn transmutation_lambda(n: u64, target_b: f64) -> Result<f64> {
    check_cutoff(n)?;
    let target_b = require_positive("target_b", target_b)?;
    if target_b >= n as f64 {
        return Err(Error::invalid("target_b", target_b, "must be below the cutoff"));
    }
    Ok(4.0 * PI / (n as f64 / target_b).ln_1p())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    // plain bisection on the term-by-term sum
    fn bisection_oracle(lambda: f64, n: u64) -> f64 {
        let f = |b: f64| {
            let s: f64 = (0..=n).rev().map(|k| 1.0 / (k as f64 + b)).sum();
            lambda / (4.0 * PI) * s - 1.0
        };
        let (mut lo, mut hi) = (1e-9_f64, 1e9_f64);
        for _ in 0..200 {
            let mid = (lo * hi).sqrt();
            if f(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo * hi).sqrt()
    }

    #[test]
    fn energy_sum_small_cases() {
        assert!((energy_sum(1.0, 1).unwrap() - 1.5).abs() < 1e-14);
        assert!((energy_sum_direct(1.0, 1).unwrap() - 1.5).abs() < 1e-15);
        assert_eq!(energy_sum_direct(0.5, 0).unwrap(), 2.0);
        assert!(energy_sum(0.0, 3).is_err());
        assert!(energy_sum(-1.0, 3).is_err());
    }

    #[test]
    fn closed_form_matches_direct_sum() {
        for b in [1e-3, 0.3, 1.0, 17.5] {
            let d = energy_sum(b, 10_000).unwrap() - energy_sum_direct(b, 10_000).unwrap();
            assert!(d.abs() < 1e-10, "b={b} d={d}");
        }
    }

    #[test]
    fn exact_solver_against_bisection() {
        let oracle = bisection_oracle(4.0 * PI, 1000);
        assert!(rel(oracle, 583.058_585_740_630_6) < 1e-9);
        let sol = solve_b_exact(4.0 * PI, 1000).unwrap();
        assert!(rel(sol.b, oracle) < 1e-10, "{} vs {oracle}", sol.b);
        for (lambda, n) in [(2.0, 50), (9.0, 400), (30.0, 10)] {
            let sol = solve_b_exact(lambda, n).unwrap();
            assert!(rel(sol.b, bisection_oracle(lambda, n)) < 1e-9);
        }
    }

    #[test]
    fn exact_solution_fields() {
        let sol = solve_b_exact(2.0 * PI, 1000).unwrap();
        assert!(sol.residual().unwrap().abs() <= 1e-10);
        assert!(rel(sol.binding, sol.b) < 1e-12);
        assert!((sol.energy - (0.5 - sol.b)).abs() < 1e-12);
        assert!(rel(sol.c_norm.powi(-2), trigamma(sol.b).unwrap()) < 1e-10);
        assert_eq!(sol.method, SolverMethod::ExactSum);
        assert!(solve_b_exact(4.0 * PI, 1000).unwrap().b > sol.b);
    }

    #[test]
    fn exact_residual_across_scales() {
        for lambda in [0.2, 1.0, PI, 4.0 * PI, 100.0, 1e4] {
            for n in [1, 10, 1000, 1_000_000, 100_000_000] {
                match solve_b_exact(lambda, n) {
                    Ok(sol) => assert!(sol.residual().unwrap().abs() <= 1e-10),
                    Err(Error::OutOfRange { .. }) => assert!(lambda < 1.0, "{lambda} {n}"),
                    Err(e) => panic!("{lambda} {n}: {e}"),
                }
            }
        }
    }

    #[test]
    fn weak_coupling_is_out_of_range() {
        assert!(matches!(solve_b_exact(1e-12, 10), Err(Error::OutOfRange { .. })));
        let tiny = solve_b_exact(0.1, 10).unwrap();
        // 1/b + H_10 ≈ 4π/λ once b is small
        let h10: f64 = (1..=10).map(|k| 1.0 / k as f64).sum();
        assert!(rel(tiny.b, 1.0 / (40.0 * PI - h10)) < 1e-3);
        assert!(solve_b_exact(-1.0, 10).is_err());
        assert!(solve_b_exact(1.0, 0).is_err());
    }

    #[test]
    fn log_method() {
        let sol = solve_b_log(4.0 * PI, 1000).unwrap();
        assert!(rel(sol.b, 1000.0 / (std::f64::consts::E - 1.0)) < 1e-14);
        assert!(rel(sol.b, 581.976_706_869_326_4) < 1e-12);
        let sol = solve_b_log(4.0 * PI / 2f64.ln(), 64).unwrap();
        assert!(rel(sol.b, 64.0) < 1e-14);
        for (lambda, n) in [(0.5, 10), (3.0, 1000), (50.0, 7)] {
            let b = solve_b_log(lambda, n).unwrap().b;
            let identity = lambda / (4.0 * PI) * (n as f64 / b + 1.0).ln();
            assert!((identity - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn asymptotic_method() {
        let b = b_asymptotic(2.0 * PI, 100).unwrap().b;
        assert!(rel(b, 100.0 * (-2f64).exp()) < 1e-14);
        assert!(rel(b, 13.533_528_323_661_27) < 1e-12);
        for lambda in [1.0, 2.0 * PI, 4.0 * PI, 40.0] {
            let asym = b_asymptotic(lambda, 100).unwrap().b;
            let log = solve_b_log(lambda, 100).unwrap().b;
            assert!(rel(asym / log, -(-4.0 * PI / lambda).exp_m1()) < 1e-13);
        }
        let asym = b_asymptotic(1.0, 100).unwrap().b;
        let log = solve_b_log(1.0, 100).unwrap().b;
        assert!(rel(asym, log) < 4e-6);
    }

    #[test]
    fn underflowing_b_is_an_error() {
        assert!(solve_b_log(1e-3, 10).is_err());
        assert!(b_asymptotic(1e-3, 10).is_err());
    }

    #[test]
    fn exact_and_log_gap_is_order_one_over_n() {
        // (λ/4π)[ψ(N+1+b) - ψ(b)] = 1 behaves like ln((N+b+1/2)/(b-1/2)) for
        // large b, so b_exact - b_log → (e^L + 1) / (2(e^L - 1)), L = 4π/λ,
        // and N·|Δb|/b → (e^L + 1)/2.
        for lambda in [PI, 2.0 * PI, 4.0 * PI] {
            let l = 4.0 * PI / lambda;
            let limit = 0.5 * (l.exp() + 1.0);
            for n in [10_000u64, 100_000, 1_000_000] {
                let be = solve_b_exact(lambda, n).unwrap().b;
                let bl = solve_b_log(lambda, n).unwrap().b;
                let scaled = n as f64 * (be - bl).abs() / be;
                assert!(rel(scaled, limit) < 0.05, "λ={lambda} N={n} {scaled} vs {limit}");
            }
        }
    }

    #[test]
    fn transmutation() {
        let l = transmutation_lambda(100, 1.0).unwrap();
        assert!(rel(l, 4.0 * PI / 101f64.ln()) < 1e-15);
        for (n, b) in [(1_000u64, 0.1), (1_000_000, 0.1)] {
            let l = transmutation_lambda(n, b).unwrap();
            assert!(rel(solve_b_log(l, n).unwrap().b, b) < 1e-12);
        }
        let l2 = transmutation_lambda(100, 0.1).unwrap();
        let l4 = transmutation_lambda(10_000, 0.1).unwrap();
        let l6 = transmutation_lambda(1_000_000, 0.1).unwrap();
        assert!(l2 > l4 && l4 > l6);
        assert!(transmutation_lambda(10, 10.0).is_err());
        assert!(transmutation_lambda(10, 0.0).is_err());
    }

    #[test]
    fn normalization_tail_bound() {
        for b in [0.1, 1.0, 10.0] {
            let partial: f64 = (0..=1_000_000u64).rev().map(|n| (n as f64 + b).powi(-2)).sum();
            let c = solve_like(b).c_norm;
            let diff = c.powi(-2) - partial;
            assert!(diff >= -1e-12 && diff <= 1e-6 + 1e-10, "b={b} diff={diff}");
        }
    }

    fn solve_like(b: f64) -> BoundStateSolution {
        BoundStateSolution::from_b(1.0, b, 10, SolverMethod::ExactSum).unwrap()
    }

    #[test]
    fn method_names_round_trip() {
        for m in [SolverMethod::ExactSum, SolverMethod::LogApprox, SolverMethod::Asymptotic] {
            assert_eq!(m.as_str().parse::<SolverMethod>().unwrap(), m);
        }
        assert!("newton".parse::<SolverMethod>().is_err());
    }
}
