//! Nonlinearity functions and the operator identities behind the deformed
//! displacement.
//!
//! NBGCSs satisfy `f_m(N) J₋ |z⟩ = z |z⟩` with `f_m(n) = 1 + m/(n + λ + 1/2)`.
//! PABGCSs satisfy the analogous relation with
//!
//! ```text
//! f(n) = (n+α)/(n+α−m) · (1 − 2m(n + λ/2 + 3/4 − m/2) / ((n+1)(n+α))),   α = λ + 1/2,
//! ```
//!
//! whose prefactor has a removable `0/0` at `n = m − α`. Residuals are
//! therefore evaluated in the form multiplied through by `n + α − m`.

use num_complex::Complex64;

use crate::algebra::{lower, raise, raise_power, FockVector, IrrepParams, TruncationPolicy};
use crate::error::{Error, Result};
use crate::states::{build, pabgcs_from_diagram, Family, StateSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonlinearityKind {
    Nbgcs,
    Pabgcs,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NonlinearityFunction {
    pub kind: NonlinearityKind,
    pub m: usize,
    pub params: IrrepParams,
}

impl NonlinearityFunction {
    pub fn new(kind: NonlinearityKind, m: usize, params: IrrepParams) -> Self {
        Self { kind, m, params }
    }

    pub fn for_family(family: Family, m: usize, params: IrrepParams) -> Self {
        let kind = match family {
            Family::Pabgcs => NonlinearityKind::Pabgcs,
            Family::Bgcs | Family::Nbgcs => NonlinearityKind::Nbgcs,
        };
        Self { kind, m, params }
    }

    /// `f(n)`, or `None` where the PABGCS prefactor is `0/0`.
    pub fn eval(&self, n: usize) -> Option<f64> {
        let w = self.weight(n);
        (w != 0.0).then(|| self.weighted(n) / w)
    }

    /// `(n + α − m) f(n)` for PABGCS, `f(n)` for NBGCS; defined everywhere.
    pub fn weighted(&self, n: usize) -> f64 {
        let a = self.params.alpha();
        let nf = n as f64;
        let mf = self.m as f64;
        match self.kind {
            NonlinearityKind::Nbgcs => 1.0 + mf / (nf + a),
            NonlinearityKind::Pabgcs => {
                let l = self.params.lambda();
                (nf + a) - 2.0 * mf * (nf + 0.5 * l + 0.75 - 0.5 * mf) / (nf + 1.0)
            }
        }
    }

    /// The factor by which both sides are multiplied: `n + α − m` or 1.
    pub fn weight(&self, n: usize) -> f64 {
        match self.kind {
            NonlinearityKind::Nbgcs => 1.0,
            NonlinearityKind::Pabgcs => n as f64 + self.params.alpha() - self.m as f64,
        }
    }
}

/// `‖w(N) f(N) J₋ v − z w(N) v‖` over all indices but the last, where
/// `J₋ v` loses the contribution of the discarded tail.
pub fn eigen_residual(f: &NonlinearityFunction, v: &FockVector, z: Complex64) -> f64 {
    let jm = lower(v);
    let c = v.coeffs();
    let last = c.len() - 1;
    (0..last).map(|k| (jm.coeffs()[k] * f.weighted(k) - z * c[k] * f.weight(k)).norm_sqr()).sum::<f64>().sqrt()
}

pub fn nbgcs_eigen_residual(spec: &StateSpec, trunc: &TruncationPolicy) -> Result<f64> {
    if spec.effective_family() != Family::Nbgcs {
        return Err(Error::InvalidParameter("NBGCS eigen-relation needs an NBGCS or BGCS spec".into()));
    }
    let v = build(spec, trunc)?;
    let f = NonlinearityFunction::new(NonlinearityKind::Nbgcs, spec.m, spec.params);
    Ok(eigen_residual(&f, &v, spec.z))
}

pub fn pabgcs_eigen_residual(spec: &StateSpec, trunc: &TruncationPolicy) -> Result<f64> {
    if spec.effective_family() != Family::Pabgcs && spec.m != 0 {
        return Err(Error::InvalidParameter("PABGCS eigen-relation needs a PABGCS spec".into()));
    }
    let v = build(spec, trunc)?;
    let f = NonlinearityFunction::new(NonlinearityKind::Pabgcs, spec.m, spec.params);
    Ok(eigen_residual(&f, &v, spec.z))
}

/// The PABGCS relation evaluated on `(J₊)ᵐ` applied to the BGCS, the
/// construction from which it is derived, rather than on the series.
pub fn pabgcs_two_path_residual(spec: &StateSpec, trunc: &TruncationPolicy) -> Result<f64> {
    let v = pabgcs_from_diagram(spec, trunc)?;
    let f = NonlinearityFunction::new(NonlinearityKind::Pabgcs, spec.m, spec.params);
    Ok(eigen_residual(&f, &v, spec.z))
}

/// Subdiagonal `c·√(n(n+λ−1/2))/(n + shift)` of the raising operator
/// `c (N + shift)⁻¹ J₊`, indexed by the source state `n − 1`.
fn scaled_raising(params: IrrepParams, c: Complex64, shift: f64, cutoff: usize) -> Vec<Complex64> {
    (1..cutoff).map(|n| c * (params.ladder_amplitude(n) / (n as f64 + shift))).collect()
}

/// `exp(A)` for a single-subdiagonal `A`: element `(j+k, j)` is the product
/// of `k` consecutive entries over `k!`, the one surviving series term.
#[allow(clippy::needless_range_loop)]
fn exp_raising(sub: &[Complex64], cutoff: usize) -> Vec<Vec<Complex64>> {
    let mut e = vec![vec![Complex64::new(0.0, 0.0); cutoff]; cutoff];
    for j in 0..cutoff {
        let mut t = Complex64::new(1.0, 0.0);
        e[j][j] = t;
        for i in j + 1..cutoff {
            t *= sub[i - 1] / (i - j) as f64;
            e[i][j] = t;
        }
    }
    e
}

/// `(J₊)ᵐ` element `(j+m, j)`.
fn raise_power_entry(params: IrrepParams, m: usize, j: usize) -> f64 {
    (j + 1..=j + m).map(|n| params.ladder_amplitude(n)).product()
}

/// Largest element-wise deviation between
/// `exp(z (N+λ−1/2)⁻¹ J₊) (J₊)ᵐ` and `(J₊)ᵐ exp(z (N+λ−1/2+m)⁻¹ J₊)`
/// on a `cutoff`-dimensional space, relative to `max(|element|, 1)`.
///
/// Both operators only raise, so every truncated matrix element is exact.
pub fn shift_identity_check(m: usize, z: Complex64, params: IrrepParams, cutoff: usize) -> Result<f64> {
    if cutoff < 4 * m + 16 {
        return Err(Error::InvalidParameter(format!("cutoff {cutoff} below 4m + 16 = {}", 4 * m + 16)));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::InvalidParameter("non-finite z".into()));
    }
    Ok(shift_deviation(m, z, params, cutoff, params.lambda() - 0.5 + m as f64))
}

fn shift_deviation(m: usize, z: Complex64, params: IrrepParams, cutoff: usize, right_shift: f64) -> f64 {
    let left_exp = exp_raising(&scaled_raising(params, z, params.lambda() - 0.5, cutoff), cutoff);
    let right_exp = exp_raising(&scaled_raising(params, z, right_shift, cutoff), cutoff);

    let mut worst = 0.0f64;
    for j in 0..cutoff {
        for i in j..cutoff {
            let left = if j + m <= i {
                left_exp[i][j + m] * raise_power_entry(params, m, j)
            } else {
                Complex64::new(0.0, 0.0)
            };
            let right = if i >= m && i - m >= j {
                right_exp[i - m][j] * raise_power_entry(params, m, i - m)
            } else {
                Complex64::new(0.0, 0.0)
            };
            let scale = left.norm().max(right.norm()).max(1.0);
            worst = worst.max((left - right).norm() / scale);
        }
    }
    worst
}

/// `((N+λ−1/2+m)⁻¹ J₊)ⁿ eⱼ` against `(J₊)ⁿ (N+λ+1/2+m)ₙ⁻¹ eⱼ`; both have
/// a single nonzero coefficient at `j + n`. Returns the relative deviation.
pub fn power_identity_check(n: usize, j: usize, m: usize, params: IrrepParams) -> Result<f64> {
    // raise_power needs room for twice the power.
    let cutoff = 2 * (j + n) + 2;
    let shift = params.lambda() - 0.5 + m as f64;
    let mut left = FockVector::basis(params, cutoff, j)?;
    for _ in 0..n {
        left = raise(&left);
        let scaled: Vec<Complex64> = left
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if *c == Complex64::new(0.0, 0.0) { *c } else { c / (k as f64 + shift) })
            .collect();
        left = FockVector::from_coeffs(params, scaled, 0.0)?;
    }
    let poch: f64 = (0..n).map(|i| j as f64 + params.alpha() + m as f64 + i as f64).product();
    let right = raise_power(&FockVector::basis(params, cutoff, j)?.scaled(Complex64::new(poch.recip(), 0.0)), n)?;
    let a = left.coeffs()[j + n];
    let b = right.coeffs()[j + n];
    Ok((a - b).norm() / b.norm())
}
