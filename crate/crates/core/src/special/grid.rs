//! Rectangular sample grids and second-order central-difference operators.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extent {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Extent {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        let all = [x_min, x_max, y_min, y_max];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::GridMismatch("extent must be finite".into()));
        }
        if !(x_min < x_max && y_min < y_max) {
            return Err(Error::GridMismatch(format!(
                "empty extent [{x_min}, {x_max}] x [{y_min}, {y_max}]"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    /// Square `[-half, half]²`.
    pub fn square(half: f64) -> Result<Self> {
        Self::new(-half, half, -half, half)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            x_min: self.x_min * factor,
            x_max: self.x_max * factor,
            y_min: self.y_min * factor,
            y_max: self.y_max * factor,
        }
    }
}

/// Samples on an `nx × ny` lattice, stored row-major with `y` as the outer
/// index: `values[j * nx + i]` sits at `(x(i), y(j))`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2D<T> {
    extent: Extent,
    nx: usize,
    ny: usize,
    values: Vec<T>,
}

impl<T> Grid2D<T> {
    pub fn new(extent: Extent, nx: usize, ny: usize, values: Vec<T>) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::GridMismatch(format!(
                "grid needs at least 2x2 points, got {nx}x{ny}"
            )));
        }
        if values.len() != nx * ny {
            return Err(Error::GridMismatch(format!(
                "{} values for a {nx}x{ny} grid",
                values.len()
            )));
        }
        Ok(Self {
            extent,
            nx,
            ny,
            values,
        })
    }

    /// Evaluates `f(x, y)` at every node in storage order.
    pub fn sample<F: FnMut(f64, f64) -> T>(
        extent: Extent,
        nx: usize,
        ny: usize,
        mut f: F,
    ) -> Result<Self> {
        let probe = Grid2D::<()>::new(extent, nx, ny, vec![(); nx * ny])?;
        let mut values = Vec::with_capacity(nx * ny);
        for j in 0..ny {
            let y = probe.y(j);
            for i in 0..nx {
                values.push(f(probe.x(i), y));
            }
        }
        Grid2D::new(extent, nx, ny, values)
    }

    pub fn extent(&self) -> Extent {
        self.extent
    }
    pub fn nx(&self) -> usize {
        self.nx
    }
    pub fn ny(&self) -> usize {
        self.ny
    }
    pub fn values(&self) -> &[T] {
        &self.values
    }
    pub fn hx(&self) -> f64 {
        (self.extent.x_max - self.extent.x_min) / (self.nx - 1) as f64
    }
    pub fn hy(&self) -> f64 {
        (self.extent.y_max - self.extent.y_min) / (self.ny - 1) as f64
    }
    pub fn x(&self, i: usize) -> f64 {
        if i == self.nx - 1 {
            return self.extent.x_max;
        }
        self.extent.x_min + self.hx() * i as f64
    }
    pub fn y(&self, j: usize) -> f64 {
        if j == self.ny - 1 {
            return self.extent.y_max;
        }
        self.extent.y_min + self.hy() * j as f64
    }
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.values[j * self.nx + i]
    }

    /// Same lattice, values transformed by `f`.
    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Grid2D<U> {
        Grid2D {
            extent: self.extent,
            nx: self.nx,
            ny: self.ny,
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn same_shape<U>(&self, other: &Grid2D<U>) -> bool {
        self.nx == other.nx && self.ny == other.ny && self.extent == other.extent
    }

    /// Iterates `(i, j)` over interior nodes, `y` outer.
    pub fn interior(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.ny - 1).flat_map(move |j| (1..self.nx - 1).map(move |i| (i, j)))
    }

    fn check_interior(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j == 0 || i + 1 >= self.nx || j + 1 >= self.ny {
            return Err(Error::BoundaryIndex { i, j });
        }
        Ok(())
    }
}

/// `∂vx/∂x + ∂vy/∂y` at an interior node.
pub fn fd_divergence(field: &Grid2D<[f64; 2]>, i: usize, j: usize) -> Result<f64> {
    field.check_interior(i, j)?;
    let dvx = (field.get(i + 1, j)[0] - field.get(i - 1, j)[0]) / (2.0 * field.hx());
    let dvy = (field.get(i, j + 1)[1] - field.get(i, j - 1)[1]) / (2.0 * field.hy());
    Ok(dvx + dvy)
}

/// `∂vy/∂x - ∂vx/∂y` at an interior node.
pub fn fd_curl_z(field: &Grid2D<[f64; 2]>, i: usize, j: usize) -> Result<f64> {
    field.check_interior(i, j)?;
    let dvy = (field.get(i + 1, j)[1] - field.get(i - 1, j)[1]) / (2.0 * field.hx());
    let dvx = (field.get(i, j + 1)[0] - field.get(i, j - 1)[0]) / (2.0 * field.hy());
    Ok(dvy - dvx)
}

/// Five-point Laplacian at an interior node.
pub fn fd_laplacian(field: &Grid2D<f64>, i: usize, j: usize) -> Result<f64> {
    field.check_interior(i, j)?;
    let c = *field.get(i, j);
    let hx2 = field.hx() * field.hx();
    let hy2 = field.hy() * field.hy();
    Ok((field.get(i + 1, j) - 2.0 * c + field.get(i - 1, j)) / hx2
        + (field.get(i, j + 1) - 2.0 * c + field.get(i, j - 1)) / hy2)
}
