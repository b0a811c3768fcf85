//! Modified Bessel function of the second kind, order zero (MacDonald `K0`).

use std::f64::consts::PI;

use super::gamma::EULER_GAMMA;
use crate::error::{Error, Result};

/// Below this argument the ascending series is used; above it, Steed's
/// continued fraction for `√(2z/π) e^z K0(z)`.
pub const K0_SERIES_CUTOFF: f64 = 2.0;

const MAX_TERMS: usize = 10_000;

/// `K0(z)` for `z > 0`, relative accuracy near 1e-15.
///
/// Diverges like `-ln(z/2) - γ` as `z → 0⁺` and decays like
/// `√(π/2z) e^{-z}` for large `z`.
pub fn bessel_k0(z: f64) -> Result<f64> {
    if !(z > 0.0) || z.is_nan() {
        return Err(Error::Domain {
            function: "bessel_k0",
            arg: z,
        });
    }
    if z.is_infinite() {
        return Ok(0.0);
    }
    if z <= K0_SERIES_CUTOFF {
        Ok(ascending_series(z))
    } else {
        Ok(continued_fraction(z))
    }
}

// K0(z) = -(ln(z/2) + γ) I0(z) + Σ_{k≥1} (z²/4)^k / (k!)² H_k
fn ascending_series(z: f64) -> f64 {
    let q = 0.25 * z * z;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut i0 = 1.0;
    let mut tail = 0.0;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term * harmonic < 1e-17 * tail {
            break;
        }
    }
    -((0.5 * z).ln() + EULER_GAMMA) * i0 + tail
}

// Steed's algorithm for the CF2 of Temme, specialised to order zero
// (Numerical Recipes §6.7, `bessik`).
fn continued_fraction(z: f64) -> f64 {
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + z);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_TERMS {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < f64::EPSILON {
            break;
        }
    }
    (PI / (2.0 * z)).sqrt() * (-z).exp() / s
}
