//! Truncated Fock-space realization of the su(1,1) ladder operators.
//!
//! On the basis `|n, λ⟩` the positive discrete series acts as
//!
//! ```text
//! J₊ |n−1⟩ = √(n (n + λ − 1/2)) |n⟩
//! J₋ |n⟩   = √(n (n + λ − 1/2)) |n−1⟩
//! J₃ |n⟩   = (n + λ/2 + 1/4) |n⟩
//! ```
//!
//! and the Calogero-Sutherland Hamiltonian has eigenvalues `2n + λ + 1/2`.
//! Operators never fail on truncation: amplitude pushed past the cutoff is
//! accumulated in [`FockVector::tail_bound`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::log_pochhammer;

/// Representation label `λ > −1/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IrrepParams {
    lambda: f64,
}

impl IrrepParams {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= -0.5 {
            return Err(Error::InvalidParameter(format!("lambda must exceed -1/2, got {lambda}")));
        }
        Ok(Self { lambda })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `λ/2 + 1/4`, the lowest `J₃` weight.
    pub fn bargmann_shift(&self) -> f64 {
        0.5 * self.lambda + 0.25
    }

    /// `λ + 1/2`, the Pochhammer base shared by every coefficient formula.
    pub fn alpha(&self) -> f64 {
        self.lambda + 0.5
    }

    /// Ladder amplitude `√(n (n + λ − 1/2))` connecting `|n−1⟩` and `|n⟩`.
    pub fn ladder_amplitude(&self, n: usize) -> f64 {
        let n = n as f64;
        (n * (n + self.lambda - 0.5)).sqrt()
    }

    /// `J₃` eigenvalue on `|n⟩`.
    pub fn j3_eigenvalue(&self, n: usize) -> f64 {
        n as f64 + self.bargmann_shift()
    }

    /// Hamiltonian eigenvalue `2n + λ + 1/2`.
    pub fn energy(&self, n: usize) -> f64 {
        2.0 * n as f64 + self.alpha()
    }
}

/// Truncation settings for constructed states.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncationPolicy {
    cutoff: usize,
    tail_tol: f64,
}

impl TruncationPolicy {
    pub const DEFAULT_CUTOFF: usize = 32;
    pub const DEFAULT_TAIL_TOL: f64 = 1e-16;

    pub fn new(cutoff: usize, tail_tol: f64) -> Result<Self> {
        if cutoff < 2 {
            return Err(Error::InvalidParameter(format!("cutoff must be >= 2, got {cutoff}")));
        }
        if !(tail_tol > 0.0 && tail_tol <= 1e-8) {
            return Err(Error::InvalidParameter(format!("tail_tol must lie in (0, 1e-8], got {tail_tol}")));
        }
        Ok(Self { cutoff, tail_tol })
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn tail_tol(&self) -> f64 {
        self.tail_tol
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self { cutoff: Self::DEFAULT_CUTOFF, tail_tol: Self::DEFAULT_TAIL_TOL }
    }
}

/// Coefficients `cₙ` on `|n, λ⟩` for `n = 0..=cutoff`.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector {
    params: IrrepParams,
    coeffs: Vec<Complex64>,
    tail_bound: f64,
}

impl FockVector {
    pub fn zeros(params: IrrepParams, cutoff: usize) -> Self {
        Self { params, coeffs: vec![Complex64::new(0.0, 0.0); cutoff + 1], tail_bound: 0.0 }
    }

    /// Basis vector `eₙ`.
    pub fn basis(params: IrrepParams, cutoff: usize, n: usize) -> Result<Self> {
        if n > cutoff {
            return Err(Error::InvalidParameter(format!("basis index {n} exceeds cutoff {cutoff}")));
        }
        let mut v = Self::zeros(params, cutoff);
        v.coeffs[n] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn from_coeffs(params: IrrepParams, coeffs: Vec<Complex64>, tail_bound: f64) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidParameter("a Fock vector needs at least two coefficients".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite Fock coefficient".into()));
        }
        Ok(Self { params, coeffs, tail_bound })
    }

    pub fn params(&self) -> IrrepParams {
        self.params
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Copy padded with zeros up to `cutoff` (never shrinks).
    pub fn extended(&self, cutoff: usize) -> Self {
        let mut out = self.clone();
        if cutoff > self.cutoff() {
            out.coeffs.resize(cutoff + 1, Complex64::new(0.0, 0.0));
        }
        out
    }

    /// Rescaled to unit norm; the tail bound is rescaled with it.
    pub fn normalized(&self) -> Self {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return self.clone();
        }
        let s = n2.sqrt().recip();
        Self {
            params: self.params,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            tail_bound: self.tail_bound / n2,
        }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            params: self.params,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
            tail_bound: self.tail_bound * factor.norm_sqr(),
        }
    }

    /// Euclidean distance `‖self − other‖` over the common index range, with
    /// the surplus of the longer vector counted in full.
    pub fn distance(&self, other: &FockVector) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex64::new(0.0, 0.0);
        (0..len)
            .map(|n| {
                let a = self.coeffs.get(n).copied().unwrap_or(zero);
                let b = other.coeffs.get(n).copied().unwrap_or(zero);
                (a - b).norm_sqr()
            })
            .sum::<f64>()
            .sqrt()
    }

    /// Largest coefficientwise deviation `max |aₙ − bₙ|`.
    pub fn max_deviation(&self, other: &FockVector) -> f64 {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex64::new(0.0, 0.0);
        (0..len)
            .map(|n| {
                let a = self.coeffs.get(n).copied().unwrap_or(zero);
                let b = other.coeffs.get(n).copied().unwrap_or(zero);
                (a - b).norm()
            })
            .fold(0.0, f64::max)
    }
}

/// `J₊ v`; the top coefficient leaves the window and its mass joins the tail.
pub fn raise(v: &FockVector) -> FockVector {
    let p = v.params;
    let cutoff = v.cutoff();
    let mut out = FockVector::zeros(p, cutoff);
    for n in 0..cutoff {
        out.coeffs[n + 1] = v.coeffs[n] * p.ladder_amplitude(n + 1);
    }
    let lost = (v.coeffs[cutoff] * p.ladder_amplitude(cutoff + 1)).norm_sqr();
    out.tail_bound = v.tail_bound + lost;
    out
}

/// `J₋ v`; `J₋ e₀ = 0`.
pub fn lower(v: &FockVector) -> FockVector {
    let p = v.params;
    let mut out = FockVector::zeros(p, v.cutoff());
    out.tail_bound = v.tail_bound;
    for n in 1..=v.cutoff() {
        out.coeffs[n - 1] = v.coeffs[n] * p.ladder_amplitude(n);
    }
    out
}

/// `J₃ v`.
pub fn j3(v: &FockVector) -> FockVector {
    let p = v.params;
    let mut out = v.clone();
    for (n, c) in out.coeffs.iter_mut().enumerate() {
        *c *= p.j3_eigenvalue(n);
    }
    out
}

/// `(J₊)ᵐ v`, restricted to `m ≤ cutoff/2`.
pub fn raise_power(v: &FockVector, m: usize) -> Result<FockVector> {
    if m > v.cutoff() / 2 {
        return Err(Error::PowerTooLarge { m, cutoff: v.cutoff() });
    }
    let mut out = v.clone();
    for _ in 0..m {
        out = raise(&out);
    }
    Ok(out)
}

/// `√(m! (λ+1/2)ₘ)`, the norm of `(J₊)ᵐ e₀`, computed in log space.
pub fn raise_power_vacuum_norm(params: IrrepParams, m: usize) -> f64 {
    let log = log_pochhammer(1.0, m).unwrap_or(0.0) + log_pochhammer(params.alpha(), m).unwrap_or(0.0);
    (0.5 * log).exp()
}

/// `exp(−i t H) v` with `H eₙ = (2n + λ + 1/2) eₙ`.
pub fn hamiltonian_phase(v: &FockVector, t: f64) -> FockVector {
    let p = v.params;
    let mut out = v.clone();
    for (n, c) in out.coeffs.iter_mut().enumerate() {
        *c *= Complex64::from_polar(1.0, -t * p.energy(n));
    }
    out
}

/// Inner product `⟨u, v⟩ = Σ conj(uₙ) vₙ` over the common index range.
pub fn inner(u: &FockVector, v: &FockVector) -> Complex64 {
    u.coeffs.iter().zip(&v.coeffs).map(|(a, b)| a.conj() * b).sum()
}

fn sub(a: &FockVector, b: &FockVector) -> FockVector {
    let mut out = a.clone();
    for (x, y) in out.coeffs.iter_mut().zip(&b.coeffs) {
        *x -= y;
    }
    out
}

fn add_scaled(a: &FockVector, b: &FockVector, s: f64) -> FockVector {
    let mut out = a.clone();
    for (x, y) in out.coeffs.iter_mut().zip(&b.coeffs) {
        *x += y * s;
    }
    out
}

fn euclid(v: &FockVector) -> f64 {
    v.norm_sqr().sqrt()
}

/// Largest residual of `[J₊, J₋] = −2J₃` and `[J₃, J₊] = J₊` on the basis
/// vectors `eₙ`, `n ≤ cutoff − 2`; the top indices feel the truncation.
pub fn verify_commutators(cutoff: usize, params: IrrepParams) -> Result<f64> {
    if cutoff < 4 {
        return Err(Error::InvalidParameter(format!("commutator check needs cutoff >= 4, got {cutoff}")));
    }
    let mut worst = 0.0f64;
    for n in 0..=cutoff - 2 {
        let e = FockVector::basis(params, cutoff, n)?;
        let pm = raise(&lower(&e));
        let mp = lower(&raise(&e));
        let r1 = add_scaled(&sub(&pm, &mp), &j3(&e), 2.0);
        let r2 = sub(&sub(&j3(&raise(&e)), &raise(&j3(&e))), &raise(&e));
        worst = worst.max(euclid(&r1)).max(euclid(&r2));
    }
    Ok(worst)
}
