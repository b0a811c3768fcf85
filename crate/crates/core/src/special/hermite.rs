use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest polynomial degree accepted by the Hermite evaluators.
pub const N_MAX_HERMITE: usize = 200;

fn check_degree(n: usize) -> Result<()> {
    if n > N_MAX_HERMITE {
        return Err(Error::OutOfRange {
            what: "Hermite degree",
            value: n as f64,
            limit: N_MAX_HERMITE as f64,
        });
    }
    Ok(())
}

/// Physicists' Hermite polynomial `H_n(z)` by the three-term recurrence.
///
/// Large `n` with large `|z|` can still overflow to infinity; code that needs
/// the Gaussian-weighted product should use [`hermite_function`] instead.
pub fn hermite_eval(n: usize, z: f64) -> Result<f64> {
    check_degree(n)?;
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * z;
    for k in 1..n {
        let next = 2.0 * z * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Normalized Hermite functions `h_0(t) ..= h_{n_max}(t)` where
/// `h_n(t) = (2^n n! √π)^{-1/2} e^{-t²/2} H_n(t)`.
///
/// The orthonormal recurrence keeps every value O(1), so degrees up to
/// [`N_MAX_HERMITE`] never overflow.
pub fn hermite_functions(n_max: usize, t: f64) -> Result<Vec<f64>> {
    check_degree(n_max)?;
    let mut h = Vec::with_capacity(n_max + 1);
    h.push(PI.powf(-0.25) * (-0.5 * t * t).exp());
    if n_max >= 1 {
        h.push(2f64.sqrt() * t * h[0]);
    }
    for n in 1..n_max {
        let nf = n as f64;
        let next = (2.0 / (nf + 1.0)).sqrt() * t * h[n] - (nf / (nf + 1.0)).sqrt() * h[n - 1];
        h.push(next);
    }
    Ok(h)
}

/// Single normalized Hermite function `h_n(t)`.
pub fn hermite_function(n: usize, t: f64) -> Result<f64> {
    Ok(hermite_functions(n, t)?[n])
}
