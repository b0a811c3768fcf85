use std::f64::consts::PI;

use super::grid::Extent;
use crate::error::{Error, Result};

/// Largest Gauss–Hermite order supported.
pub const MAX_GAUSS_HERMITE: usize = 256;

/// Gauss–Hermite rule for the weight `e^{-t²}`, nodes ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    // w_i · e^{t_i²}, for integrands that already carry their Gaussian
    scaled_weights: Vec<f64>,
}

impl GaussHermite {
    /// Golub–Welsch: nodes are the eigenvalues of the symmetric tridiagonal
    /// Jacobi matrix (implicit QL), then polished by Newton steps on the
    /// orthonormal recurrence, which also yields the weights.
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 || k > MAX_GAUSS_HERMITE {
            return Err(Error::OutOfRange {
                what: "Gauss-Hermite order",
                value: k as f64,
                limit: MAX_GAUSS_HERMITE as f64,
            });
        }
        let pim4 = PI.powf(-0.25);
        let nf = k as f64;
        let mut diag = vec![0.0; k];
        let mut off: Vec<f64> = (1..=k).map(|j| (0.5 * j as f64).sqrt()).collect();
        off[k - 1] = 0.0;
        tridiagonal_eigenvalues(&mut diag, &mut off)?;
        diag.sort_by(|a, b| a.total_cmp(b));

        let mut nodes = vec![0.0; k];
        let mut weights = vec![0.0; k];
        let mut scaled = vec![0.0; k];
        // polish the non-negative half and mirror it
        for i in k / 2..k {
            let mut z = if 2 * i + 1 == k { 0.0 } else { diag[i] };
            for _ in 0..4 {
                let (p1, p2) = orthonormal_pair(k, z, pim4);
                let step = p1 / ((2.0 * nf).sqrt() * p2);
                if !step.is_finite() {
                    break;
                }
                z -= step;
            }
            let (_, p2) = orthonormal_pair(k, z, pim4);
            let pp = (2.0 * nf).sqrt() * p2;
            let damped = pp * (-0.5 * z * z).exp();
            let mirror = k - 1 - i;
            nodes[i] = z;
            nodes[mirror] = -z;
            weights[i] = 2.0 / (pp * pp);
            weights[mirror] = weights[i];
            scaled[i] = 2.0 / (damped * damped);
            scaled[mirror] = scaled[i];
        }
        Ok(Self {
            nodes,
            weights,
            scaled_weights: scaled,
        })
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
    /// `w_i e^{t_i²}`: use with integrands that include their own decay.
    pub fn scaled_weights(&self) -> &[f64] {
        &self.scaled_weights
    }

    /// `∫ e^{-t²} f(t) dt`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(t, w)| w * f(*t))
            .sum()
    }
}

// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
// off-diagonal `e` (e[i] couples i and i+1, last entry ignored), by the
// implicit QL algorithm. Results overwrite `d`.
fn tridiagonal_eigenvalues(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 60 {
                return Err(Error::Solver("tridiagonal QL did not converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

// Returns (p_k(z), p_{k-1}(z)) for the orthonormal Hermite polynomials.
fn orthonormal_pair(k: usize, z: f64, pim4: f64) -> (f64, f64) {
    let mut p1 = pim4;
    let mut p2 = 0.0;
    for j in 0..k {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
    }
    (p1, p2)
}

/// Nodes and weights of the `k`-point Gauss–Hermite rule.
pub fn gauss_hermite_nodes(k: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let rule = GaussHermite::new(k)?;
    Ok((rule.nodes, rule.weights))
}

/// Composite Simpson rule on `[a, b]` with `n` intervals (rounded up to even).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let n = (n.max(2) + 1) & !1;
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let x = a + h * i as f64;
        sum += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
    }
    sum * h / 3.0
}

/// Tensor-product trapezoid rule over a rectangle with `nx × ny` nodes.
/// Spectrally accurate for integrands that decay to zero at the edges.
pub fn trapezoid_2d<F: Fn(f64, f64) -> f64>(f: F, extent: &Extent, nx: usize, ny: usize) -> f64 {
    let hx = (extent.x_max - extent.x_min) / (nx - 1) as f64;
    let hy = (extent.y_max - extent.y_min) / (ny - 1) as f64;
    let edge = |k: usize, n: usize| if k == 0 || k == n - 1 { 0.5 } else { 1.0 };
    let mut total = 0.0;
    for j in 0..ny {
        let y = extent.y_min + hy * j as f64;
        let mut row = 0.0;
        for i in 0..nx {
            row += edge(i, nx) * f(extent.x_min + hx * i as f64, y);
        }
        total += edge(j, ny) * row;
    }
    total * hx * hy
}

/// Trapezoid rule for a `2π`-periodic integrand with `n` equispaced samples.
pub fn trapezoid_periodic<F: Fn(f64) -> f64>(f: F, n: usize) -> f64 {
    let h = 2.0 * PI / n as f64;
    (0..n).map(|i| f(h * i as f64)).sum::<f64>() * h
}
