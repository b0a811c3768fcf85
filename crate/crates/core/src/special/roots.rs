use crate::error::{Error, Result};

/// Hard cap on root-finder iterations.
pub const MAX_ROOT_ITERATIONS: usize = 200;

/// An interval known to enclose a sign change of some function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
    f_hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::Solver(format!("empty bracket [{lo}, {hi}]")));
        }
        if f_lo.is_nan() || f_hi.is_nan() || f_lo * f_hi > 0.0 {
            return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
        }
        Ok(Self { lo, hi, f_lo, f_hi })
    }

    /// Evaluates `f` at both ends and validates the sign change.
    pub fn evaluate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, f(lo), f(hi))
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }
    pub fn hi(&self) -> f64 {
        self.hi
    }
    pub fn f_lo(&self) -> f64 {
        self.f_lo
    }
    pub fn f_hi(&self) -> f64 {
        self.f_hi
    }
}

/// Bisection/secant hybrid on a validated bracket.
///
/// Each step tries the secant point of the current bracket ends; whenever a
/// step fails to at least halve the bracket, the next step bisects. The
/// bracket therefore shrinks by at least 2 every two iterations.
///
/// Returns once `|f(x)| ≤ tol` or the bracket width is at most
/// `tol · max(1, |x|)`.
pub fn find_root_bracketed<F: Fn(f64) -> f64>(f: F, bracket: Bracket, tol: f64) -> Result<f64> {
    let Bracket {
        mut lo,
        mut hi,
        mut f_lo,
        mut f_hi,
    } = bracket;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    let mut force_bisect = false;
    for _ in 0..MAX_ROOT_ITERATIONS {
        let width = hi - lo;
        let mid = lo + 0.5 * width;
        let mut x = mid;
        if !force_bisect {
            let secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
            if secant > lo && secant < hi && secant.is_finite() {
                x = secant;
            }
        }
        if x <= lo || x >= hi {
            // bracket is down to adjacent floats
            return Ok(if f_lo.abs() < f_hi.abs() { lo } else { hi });
        }
        let fx = f(x);
        if fx.is_nan() {
            return Err(Error::Solver(format!("function returned NaN at {x}")));
        }
        if fx.abs() <= tol {
            return Ok(x);
        }
        if (fx < 0.0) == (f_lo < 0.0) {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        force_bisect = hi - lo > 0.5 * width;
        let best = if f_lo.abs() < f_hi.abs() { lo } else { hi };
        if hi - lo <= tol * best.abs().max(1.0) {
            return Ok(best);
        }
    }
    Err(Error::Solver(format!(
        "no convergence after {MAX_ROOT_ITERATIONS} iterations, bracket [{lo}, {hi}]"
    )))
}
