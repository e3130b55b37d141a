//! Position-space wavefunctions on the half-line.
//!
//! The basis functions are
//!
//! ```text
//! ⟨x|n,λ⟩ = (−1)ⁿ √(2 n!/Γ(n+λ+1/2)) x^λ e^{−x²/2} L_n^{λ−1/2}(x²),
//! ```
//!
//! evaluated through the orthonormal Laguerre recurrence in `u = x²`. In
//! that variable the overlap integrals carry the weight `u^{λ−1/2} e^{−u}`,
//! so generalized Gauss-Laguerre quadrature integrates products of basis
//! functions exactly up to twice the grid size.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::{FockVector, IrrepParams};
use crate::error::{Error, Result};
use crate::special::{bessel_i, ln_gamma, pfq, HypergeometricParams, DEFAULT_TOL};

const RESCALE: f64 = 1e200;

/// `φ_k(u) = ℓ_k(u) e^{−u/2} u^{a/2}` for `k < count`, with `ℓ_k` the
/// Laguerre polynomials of order `a` normalized against `u^a e^{−u}`.
fn laguerre_functions(u: f64, a: f64, count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    // Scale factors are tracked in log space so that e^{−u/2} cannot
    // underflow before the polynomial growth compensates.
    let mut log_scale = -0.5 * u + 0.5 * a * u.ln() - 0.5 * ln_gamma(a + 1.0);
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..count {
        out.push(cur * log_scale.exp());
        let kf = k as f64;
        let next =
            ((2.0 * kf + 1.0 + a - u) * cur - (kf * (kf + a)).sqrt() * prev) / ((kf + 1.0) * (kf + 1.0 + a)).sqrt();
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            prev /= RESCALE;
            cur /= RESCALE;
            log_scale += RESCALE.ln();
        }
    }
    out
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::InvalidParameter(format!("position {x} must be > 0")));
    }
    Ok(())
}

/// `⟨x|k,λ⟩` for `k < count`.
pub fn eigenfunctions(x: f64, count: usize, params: IrrepParams) -> Result<Vec<f64>> {
    check_x(x)?;
    let a = params.lambda() - 0.5;
    let root = (2.0 * x).sqrt();
    Ok(laguerre_functions(x * x, a, count)
        .into_iter()
        .enumerate()
        .map(|(k, phi)| if k % 2 == 0 { root * phi } else { -root * phi })
        .collect())
}

pub fn eigenfunction(x: f64, n: usize, params: IrrepParams) -> Result<f64> {
    Ok(eigenfunctions(x, n + 1, params)?[n])
}

/// Gauss-type nodes on `x > 0` with weights for `∫₀^∞ F(x) dx`, exact when
/// `F` is a product of two basis functions whose indices sum below `2·len`.
#[derive(Clone, Debug, PartialEq)]
pub struct PositionGrid {
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl PositionGrid {
    /// Golub-Welsch nodes for the weight `u^{λ−1/2} e^{−u}`, mapped to `x = √u`.
    pub fn gauss(size: usize, params: IrrepParams) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidParameter("quadrature grid needs at least one node".into()));
        }
        let a = params.lambda() - 0.5;
        let jacobi = DMatrix::from_fn(size, size, |i, j| {
            if i == j {
                2.0 * i as f64 + 1.0 + a
            } else if i + 1 == j || j + 1 == i {
                let k = i.max(j) as f64;
                -(k * (k + a)).sqrt()
            } else {
                0.0
            }
        });
        let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi).eigenvalues.iter().copied().collect();
        nodes.sort_by(f64::total_cmp);
        if nodes[0] <= 0.0 {
            return Err(Error::NonConvergence { terms: size });
        }
        let mut points = Vec::with_capacity(size);
        let mut weights = Vec::with_capacity(size);
        for u in nodes {
            let x = u.sqrt();
            // Christoffel numbers: 1/Σ ℓ_k(u)², moved to x through dx = du/(2x)
            // and the weight folded into the φ_k.
            let s: f64 = laguerre_functions(u, a, size).iter().map(|p| p * p).sum();
            points.push(x);
            weights.push(1.0 / (2.0 * x * s));
        }
        Ok(Self { points, weights })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn x_max(&self) -> f64 {
        *self.points.last().expect("grid is never empty")
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.points.iter().zip(&self.weights).map(|(x, w)| w * f(*x)).sum()
    }
}

/// `∫ ⟨x|n,λ⟩⟨x|n′,λ⟩ dx` on `grid`.
pub fn orthonormality_check(n: usize, n_prime: usize, params: IrrepParams, grid: &PositionGrid) -> Result<f64> {
    let count = n.max(n_prime) + 1;
    let mut total = 0.0;
    for (x, w) in grid.points().iter().zip(grid.weights()) {
        let e = eigenfunctions(*x, count, params)?;
        total += w * e[n] * e[n_prime];
    }
    Ok(total)
}

/// `Σ cₙ ⟨x|n,λ⟩`.
pub fn wavefunction(x: f64, v: &FockVector) -> Result<Complex64> {
    let basis = eigenfunctions(x, v.cutoff(), v.params())?;
    Ok(v.coeffs().iter().zip(basis).map(|(c, e)| c * e).sum())
}

pub fn wavefunction_on(xs: &[f64], v: &FockVector) -> Result<Vec<Complex64>> {
    xs.par_iter().map(|x| wavefunction(*x, v)).collect()
}

/// `∫ |ψ(x)|² dx` on a Gauss grid large enough to be exact for `v`.
pub fn parseval(v: &FockVector) -> Result<f64> {
    let grid = PositionGrid::gauss(v.cutoff() + 1, v.params())?;
    let values = wavefunction_on(grid.points(), v)?;
    Ok(values.iter().zip(grid.weights()).map(|(p, w)| w * p.norm_sqr()).sum())
}

/// Closed BGCS wavefunction
/// `√(2x) (−z/|z|)^{1/4−λ/2} J_{λ−1/2}(2ix√z) e^{−z−x²/2} / √I_{λ−1/2}(2|z|)`
/// with principal branches throughout and `J` through `₀F₁`. Its phase
/// convention is not that of the Fock series; only the modulus is comparable.
pub fn bgcs_wavefunction_closed(x: f64, z: Complex64, params: IrrepParams) -> Result<Complex64> {
    check_x(x)?;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(eigenfunction(x, 0, params)?, 0.0));
    }
    let nu = params.lambda() - 0.5;
    let half_arg = Complex64::new(0.0, x) * z.sqrt();
    let series =
        pfq(&HypergeometricParams::new(vec![], vec![nu + 1.0])?, half_arg * half_arg * -1.0, DEFAULT_TOL)?.value;
    let bessel_j = half_arg.powf(nu) * series / ln_gamma(nu + 1.0).exp();
    let branch = (-z / z.norm()).powf(0.25 - 0.5 * params.lambda());
    let envelope = (-z - 0.5 * x * x).exp();
    Ok(branch * bessel_j * envelope * ((2.0 * x).sqrt() / bessel_i(nu, 2.0 * z.norm())?.sqrt()))
}
