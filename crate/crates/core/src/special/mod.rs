//! Numerical kernels shared by the physics modules.

mod bessel;
mod gamma;
mod grid;
mod hermite;
mod quadrature;
mod roots;

pub use bessel::{bessel_k0, K0_SERIES_CUTOFF};
pub use gamma::{digamma, trigamma, EULER_GAMMA};
pub use grid::{fd_curl_z, fd_divergence, fd_laplacian, Extent, Grid2D};
pub use hermite::{hermite_eval, hermite_function, hermite_functions, N_MAX_HERMITE};
pub use quadrature::{
    gauss_hermite_nodes, simpson, trapezoid_2d, trapezoid_periodic, GaussHermite, MAX_GAUSS_HERMITE,
};
pub use roots::{find_root_bracketed, Bracket, MAX_ROOT_ITERATIONS};
