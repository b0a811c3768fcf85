//! Built-in consistency suite run by `verify`.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::IsTerminal;

use num_complex::Complex64;

use crate::bound::{
    energy_sum_direct, ground_state_eval, ground_state_norm, reconstruct_state,
    schrodinger_residual, solve_b_exact, solve_b_log, transmutation_lambda, SpectralCoefficients,
};
use crate::current::{
    circulation, continuity_check, curl_closed, current_complex, current_gauge, current_paper,
    disc_flux, multi_center_current, VectorPotential, VortexCenter, VortexConfig, GAUGE_STEP,
};
use crate::params::{derive_scales, DerivedScales};
use crate::special::{fd_curl_z, trigamma, Extent, Grid2D};
use crate::zero_field::{localization_ratio_exact, zero_field_state_eval, ZeroFieldState};

use super::config::RunConfig;
use super::format::sci;
use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Bound {
    AtMost(f64),
    Between(f64, f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub measured: f64,
    pub bound: Bound,
    pub pass: bool,
}

impl Check {
    fn at_most(name: &'static str, measured: f64, tol: f64) -> Self {
        Self {
            name,
            measured,
            bound: Bound::AtMost(tol),
            pass: measured <= tol,
        }
    }

    fn between(name: &'static str, measured: f64, lo: f64, hi: f64) -> Self {
        Self {
            name,
            measured,
            bound: Bound::Between(lo, hi),
            pass: (lo..=hi).contains(&measured),
        }
    }

    fn tolerance_text(&self) -> String {
        match self.bound {
            Bound::AtMost(t) => format!("<= {}", sci(t)),
            Bound::Between(lo, hi) => format!("in [{}, {}]", sci(lo), sci(hi)),
        }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

// golden-angle spiral filling the disc |z| <= radius
fn spiral(n: usize, radius: f64) -> impl Iterator<Item = Complex64> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n).map(move |k| {
        let r = radius * ((k as f64 + 0.5) / n as f64).sqrt();
        Complex64::from_polar(r, golden * k as f64)
    })
}

fn max_div(scales: &DerivedScales, n: usize) -> Result<f64, CliError> {
    let ext = Extent::square(4.0 * scales.a())?;
    let j = Grid2D::sample(ext, n, n, |x, y| current_paper(x, y, scales))?;
    let p = Grid2D::sample(ext, n, n, |x, y| ground_state_eval(x, y, scales).norm_sqr())?;
    Ok(continuity_check(&j, &p)?.max_abs_div)
}

/// Runs every check at the configured parameters. `perturb_j0` rescales the
/// ground-state current amplitude to exercise the suite.
pub fn run_checks(cfg: &RunConfig, perturb_j0: f64) -> Result<Vec<Check>, CliError> {
    let params = cfg.physical_params()?;
    let scales = derive_scales(&params)?;
    let sj = scales.with_perturbed_j0(perturb_j0);
    let a = scales.a();
    let mut out = Vec::new();

    let lambda = 4.0 * PI;
    let sol = solve_b_exact(lambda, 1000)?;
    out.push(Check::at_most("energy condition residual (N=1e3)", sol.residual()?.abs(), 1e-10));

    let n = 10_000u64;
    let gap = rel(solve_b_log(lambda, n)?.b, solve_b_exact(lambda, n)?.b) * n as f64;
    out.push(Check::at_most("N |b_exact - b_log| / b_exact (N=1e4)", gap, 10.0));

    let l = transmutation_lambda(1_000_000, 0.1)?;
    out.push(Check::at_most(
        "transmutation round trip (N=1e6, b=0.1)",
        rel(solve_b_log(l, 1_000_000)?.b, 0.1),
        1e-12,
    ));

    let tail = trigamma(1.0)? - (0..=1_000_000u64).rev().map(|k| (k as f64 + 1.0).powi(-2)).sum::<f64>();
    out.push(Check::at_most("trigamma tail beyond 1e6 (b=1)", tail, 1e-6 + 1e-10));

    let direct = energy_sum_direct(sol.b, 1000)? * lambda / (4.0 * PI) - 1.0;
    out.push(Check::at_most("direct-sum residual (N=1e3)", direct.abs(), 1e-10));

    out.push(Check::at_most(
        "ground state |norm - 1|",
        (ground_state_norm(&scales, 12.0, 241)? - 1.0).abs(),
        1e-8,
    ));

    let mut worst: f64 = 0.0;
    for r in [0.1, 0.5, 1.0, 1.5, 2.0] {
        for t in [0.3, 1.9, 3.4, 5.0] {
            let (x, y) = (r * a * f64::cos(t), r * a * f64::sin(t));
            let res = schrodinger_residual(x, y, 1e-3 * a, &scales)?;
            worst = worst.max(res.norm() / ground_state_eval(x, y, &scales).norm());
        }
    }
    out.push(Check::at_most("Schrodinger residual, 20 points", worst, 1e-5));

    let coarse = schrodinger_residual(2.0 * a, a, 2e-2 * a, &scales)?.norm();
    let fine = schrodinger_residual(2.0 * a, a, 1e-2 * a, &scales)?.norm();
    out.push(Check::between("Schrodinger residual refinement ratio", coarse / fine, 3.2, 4.8));

    let d101 = max_div(&sj, 101)?;
    let d201 = max_div(&sj, 201)?;
    out.push(Check::at_most("max |div j| a / j0 (201x201)", d201 * a / scales.j0(), 1e-3));
    out.push(Check::between("div j refinement ratio", d101 / d201, 3.2, 4.8));

    let (x0, y0, h) = (0.3 * a, 0.7 * a, 1e-3 * a);
    let ext = Extent::new(x0 - h, x0 + h, y0 - h, y0 + h)?;
    let g = Grid2D::sample(ext, 3, 3, |x, y| {
        let j = current_paper(x, y, &sj);
        [j.jx, j.jy]
    })?;
    let curl_err = rel(fd_curl_z(&g, 1, 1)?, curl_closed(x0, y0, &scales));
    out.push(Check::at_most("curl of current vs closed form", curl_err, 1e-4));

    let mut stokes: f64 = 0.0;
    for r in [a, 2.0 * a, 3.0 * a] {
        let c = circulation(|x, y| current_paper(x, y, &sj), r, 256);
        let f = disc_flux(|x, y| curl_closed(x, y, &scales), r, 256);
        stokes = stokes.max(rel(c, f));
    }
    out.push(Check::at_most("Stokes circulation vs flux", stokes, 1e-3));

    let mut cplx: f64 = 0.0;
    for z in spiral(100, 4.0 * a) {
        let p = current_paper(z.re, z.im, &sj);
        let c = current_complex(z, &scales);
        cplx = cplx.max((c - p.as_complex()).norm() / p.magnitude());
    }
    out.push(Check::at_most("complex current vs components", cplx, 1e-12));

    let psi = |x: f64, y: f64| ground_state_eval(x, y, &scales);
    let gauge = current_gauge(psi, a, 0.0, GAUGE_STEP * a, &scales, VectorPotential::Landau)?;
    let audit = current_paper(a, 0.0, &sj).jy / gauge.jy;
    out.push(Check::at_most("current / gauge current - 2", (audit - 2.0).abs(), 1e-6));

    let mut recon: f64 = 0.0;
    let r0 = reconstruct_state(1e-4, 100, 64, 0.0, 0.0, &scales)?;
    let c0 = ground_state_eval(0.0, 0.0, &scales);
    for (x, y) in [(0.5 * a, 0.0), (0.0, 0.5 * a), (a, a)] {
        let r = reconstruct_state(1e-4, 100, 64, x, y, &scales)? / r0;
        let c = ground_state_eval(x, y, &scales) / c0;
        recon = recon.max((r - c).norm() / c.norm());
    }
    out.push(Check::at_most("spectral reconstruction vs closed form", recon, 1e-2));

    let cutoff = 50usize;
    let s50 = solve_b_exact(params.lambda(), cutoff as u64)?;
    let coeffs = SpectralCoefficients::new(s50.b, cutoff)?;
    let mut coeff: f64 = 0.0;
    for n in 0..=5 {
        for y0 in [-a, 0.0, 0.6 * a] {
            coeff = coeff.max(coeffs.coefficient_equation_residual(n, y0, &scales, 64)?);
        }
    }
    out.push(Check::at_most("coefficient equation residual (n<=5)", coeff, 1e-8));

    let zf = ZeroFieldState::new(0.5 * scales.hbar_omega(), &params)?;
    let l0 = zf.l0();
    let kpsi = |x: f64, y: f64| Complex64::new(zero_field_state_eval(&zf, x, y).unwrap_or(0.0), 0.0);
    let mut zmax: f64 = 0.0;
    for z in spiral(50, 4.0 * l0) {
        let j = current_gauge(kpsi, z.re, z.im, 1e-4 * l0, &scales, VectorPotential::Zero)?;
        let unit = zero_field_state_eval(&zf, l0, 0.0)?.powi(2) * scales.hbar() / (scales.mass() * l0);
        zmax = zmax.max(j.magnitude() / unit);
    }
    out.push(Check::at_most("zero-field current (scaled)", zmax, 1e-10));

    out.push(Check::between(
        "a/l0 at 1 eV, 1 kG",
        localization_ratio_exact(1.0, 1.0)?,
        395.0,
        436.0,
    ));

    let x0 = 1.5 * a;
    let amp = scales.a_scale() * a * a;
    let pair = VortexConfig::new(
        vec![VortexCenter::new(-x0, 0.0, amp)?, VortexCenter::new(x0, 0.0, amp)?],
        &scales,
    )?;
    let mid = multi_center_current(&pair, Complex64::new(0.0, 0.0))?.norm() / (amp / a);
    out.push(Check::at_most("vortex pair midpoint current", mid, 1e-10));

    let far = Complex64::new(0.0, 100.0 * x0);
    let jf = multi_center_current(&pair, far)?.norm();
    out.push(Check::at_most(
        "vortex far-field decay",
        rel(jf, pair.total_intensity() / (2.0 * PI * far.norm())),
        0.05,
    ));

    Ok(out)
}

fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal()
}

pub fn render(checks: &[Check], verbose: bool) -> String {
    let color = use_color();
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        let tag = match (c.pass, color) {
            (true, true) => "\x1b[32mPASS\x1b[0m",
            (false, true) => "\x1b[31mFAIL\x1b[0m",
            (true, false) => "PASS",
            (false, false) => "FAIL",
        };
        let _ = write!(out, "{tag}  {:<width$}  {}", c.name, sci(c.measured));
        if verbose {
            let _ = write!(out, "  ({})", c.tolerance_text());
        }
        out.push('\n');
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    let _ = writeln!(out, "{} checks, {} failed", checks.len(), failed);
    out
}
