//! Construction of the three coherent-state families as normalized Fock
//! vectors, their normalization constants, overlaps and time evolution.
//!
//! With `α = λ + 1/2` the (unnormalized) expansion coefficients are
//!
//! ```text
//! NBGCS   cₙ = zⁿ / (α+m)ₙ · √((α)ₙ / n!)                 on |n⟩
//! PABGCS  dₙ = zⁿ / n!     · √((m+1)ₙ / (α+m)ₙ)           on |n+m⟩
//! ```
//!
//! and the BGCS is the `m = 0` member of either family.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::algebra::{hamiltonian_phase, inner, raise_power, FockVector, IrrepParams, TruncationPolicy};
use crate::error::{Error, Result};
use crate::special::{log_pochhammer, pfq, pfq_real, HypergeometricParams, DEFAULT_TOL};

/// Largest Fock cutoff the automatic truncation may reach.
pub const CUTOFF_CEILING: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Bgcs,
    Nbgcs,
    Pabgcs,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Bgcs => "BGCS",
            Family::Nbgcs => "NBGCS",
            Family::Pabgcs => "PABGCS",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bgcs" => Ok(Family::Bgcs),
            "nbgcs" => Ok(Family::Nbgcs),
            "pabgcs" => Ok(Family::Pabgcs),
            other => Err(Error::InvalidParameter(format!("unknown family '{other}'"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Which state to build: family, coherence parameter `z = |z| e^{iφ}`, order `m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateSpec {
    pub family: Family,
    pub z: Complex64,
    pub m: usize,
    pub params: IrrepParams,
}

impl StateSpec {
    pub fn new(family: Family, z: Complex64, m: usize, params: IrrepParams) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::InvalidParameter("coherence parameter must be finite".into()));
        }
        if family == Family::Bgcs && m != 0 {
            return Err(Error::InvalidParameter("BGCS has no deformation order; use m = 0".into()));
        }
        Ok(Self { family, z, m, params })
    }

    /// BGCS and NBGCS share one construction path.
    pub fn effective_family(&self) -> Family {
        match self.family {
            Family::Bgcs => Family::Nbgcs,
            f => f,
        }
    }
}

/// `𝔐_{m,λ}(|z|) = ₁F₂([α], [α+m, α+m], |z|²)`.
pub fn nbgcs_norm(z_abs: f64, m: usize, params: IrrepParams) -> Result<f64> {
    let a = params.alpha();
    let mf = m as f64;
    Ok(pfq_real(&[a], &[a + mf, a + mf], z_abs * z_abs, DEFAULT_TOL)?.value)
}

/// `M_{m,λ}(|z|) = ₁F₂([m+1], [1, α+m], |z|²)`.
pub fn pabgcs_norm(z_abs: f64, m: usize, params: IrrepParams) -> Result<f64> {
    let mf = m as f64;
    Ok(pfq_real(&[mf + 1.0], &[1.0, params.alpha() + mf], z_abs * z_abs, DEFAULT_TOL)?.value)
}

/// Log-magnitude model of one family's coefficient sequence.
trait CoefficientLaw {
    /// `ln |coefficient k|` without the `k ln|z|` factor.
    fn log_weight(&self, k: usize) -> f64;
    /// `|coef_{k+1} / coef_k|²` without `|z|²`.
    fn ratio_sqr(&self, k: usize) -> f64;
}

struct NbgcsLaw {
    a: f64,
    m: f64,
}

impl CoefficientLaw for NbgcsLaw {
    fn log_weight(&self, k: usize) -> f64 {
        // Arguments are positive by construction.
        let lp = |x: f64| log_pochhammer(x, k).expect("positive Pochhammer base");
        -lp(self.a + self.m) + 0.5 * (lp(self.a) - lp(1.0))
    }

    fn ratio_sqr(&self, k: usize) -> f64 {
        let k = k as f64;
        (self.a + k) / ((k + 1.0) * (self.a + self.m + k).powi(2))
    }
}

struct PabgcsLaw {
    a: f64,
    m: f64,
}

impl CoefficientLaw for PabgcsLaw {
    fn log_weight(&self, k: usize) -> f64 {
        let lp = |x: f64| log_pochhammer(x, k).expect("positive Pochhammer base");
        -lp(1.0) + 0.5 * (lp(self.m + 1.0) - lp(self.a + self.m))
    }

    fn ratio_sqr(&self, k: usize) -> f64 {
        let k = k as f64;
        (self.m + 1.0 + k) / ((k + 1.0).powi(2) * (self.a + self.m + k))
    }
}

/// Normalized coefficients `0..=terms` of a law, with the relative tail mass
/// estimate beyond the last one. The cutoff doubles from the policy's start
/// until both the last retained weight and the geometric tail fall below
/// `tail_tol`.
fn resolve_series(law: &dyn CoefficientLaw, z: Complex64, trunc: &TruncationPolicy) -> Result<(Vec<Complex64>, f64)> {
    let z_abs = z.norm();
    if z_abs == 0.0 {
        return Ok((vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], 0.0));
    }
    let ln_z = z_abs.ln();
    let phi = z.arg();
    let mut terms = trunc.cutoff().max(2);
    let mut log_mag: Vec<f64> = Vec::new();
    loop {
        while log_mag.len() <= terms {
            let k = log_mag.len();
            log_mag.push(k as f64 * ln_z + law.log_weight(k));
        }
        let peak = log_mag.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let norm2: f64 = log_mag.iter().map(|l| (2.0 * (l - peak)).exp()).sum();
        let last = (2.0 * (log_mag[terms] - peak)).exp() / norm2;
        let r = z_abs * z_abs * law.ratio_sqr(terms);
        if r < 1.0 {
            let tail = last * r / (1.0 - r);
            if last < trunc.tail_tol() && tail < trunc.tail_tol() {
                let scale = norm2.sqrt().recip();
                let coeffs = log_mag
                    .iter()
                    .enumerate()
                    .map(|(k, l)| Complex64::from_polar((l - peak).exp() * scale, k as f64 * phi))
                    .collect();
                return Ok((coeffs, tail));
            }
        }
        terms *= 2;
        if terms > CUTOFF_CEILING {
            return Err(Error::CutoffCeiling { ceiling: CUTOFF_CEILING, z_abs });
        }
    }
}

/// NBGCS `|z, f_m⟩` (BGCS for `m = 0`) as a normalized Fock vector.
pub fn nbgcs(spec: &StateSpec, trunc: &TruncationPolicy) -> Result<FockVector> {
    let law = NbgcsLaw { a: spec.params.alpha(), m: spec.m as f64 };
    let (coeffs, tail) = resolve_series(&law, spec.z, trunc)?;
    FockVector::from_coeffs(spec.params, coeffs, tail)
}

/// PABGCS `||z, m⟩` from its Fock expansion; components below `m` are zero.
pub fn pabgcs(spec: &StateSpec, trunc: &TruncationPolicy) -> Result<FockVector> {
    let law = PabgcsLaw { a: spec.params.alpha(), m: spec.m as f64 };
    let (shifted, tail) = resolve_series(&law, spec.z, trunc)?;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); spec.m];
    coeffs.extend(shifted);
    FockVector::from_coeffs(spec.params, coeffs, tail)
}

/// Dispatches on the spec's family.
pub fn build(spec: &StateSpec, trunc: &TruncationPolicy) -> Result<FockVector> {
    match spec.effective_family() {
        Family::Pabgcs => pabgcs(spec, trunc),
        _ => nbgcs(spec, trunc),
    }
}

/// PABGCS along the other side of the construction diagram: build the NBGCS
/// of the same order and apply `(J₊)ᵐ`, then renormalize.
pub fn pabgcs_from_diagram(spec: &StateSpec, trunc: &TruncationPolicy) -> Result<FockVector> {
    let nb = nbgcs(&StateSpec { family: Family::Nbgcs, ..*spec }, trunc)?;
    let top = nb.cutoff();
    let room = (top + spec.m).max(2 * spec.m);
    let raised = raise_power(&nb.extended(room), spec.m)?;
    let out = raised.normalized();
    // The tail beyond `top` is amplified at least as much as the edge element.
    let p = spec.params;
    let gain: f64 = (1..=spec.m).map(|j| p.ladder_amplitude(top + 1 + j).powi(2)).product();
    let tail = nb.tail_bound() * gain / raised.norm_sqr();
    FockVector::from_coeffs(p, out.coeffs().to_vec(), tail)
}

/// `⟨u, v⟩`; both vectors must carry the same `λ`.
pub fn overlap(u: &FockVector, v: &FockVector) -> Result<Complex64> {
    let (lu, lv) = (u.params().lambda(), v.params().lambda());
    if lu != lv {
        return Err(Error::LambdaMismatch { left: lu, right: lv });
    }
    Ok(inner(u, v))
}

/// Closed-form overlap `⟨z₁, f_{m₁} | z₂, f_{m₂}⟩`.
pub fn nbgcs_overlap_closed(
    z1: Complex64,
    m1: usize,
    z2: Complex64,
    m2: usize,
    params: IrrepParams,
) -> Result<Complex64> {
    let a = params.alpha();
    let hp = HypergeometricParams::new(vec![a], vec![a + m1 as f64, a + m2 as f64])?;
    let series = pfq(&hp, z1.conj() * z2, DEFAULT_TOL)?.value;
    let norm = (nbgcs_norm(z1.norm(), m1, params)? * nbgcs_norm(z2.norm(), m2, params)?).sqrt();
    Ok(series / norm)
}

/// Closed-form overlap `⟨z₁, m || z₂, m⟩` between equal-order PABGCS.
pub fn pabgcs_overlap_closed(z1: Complex64, z2: Complex64, m: usize, params: IrrepParams) -> Result<Complex64> {
    let mf = m as f64;
    let hp = HypergeometricParams::new(vec![mf + 1.0], vec![1.0, params.alpha() + mf])?;
    let series = pfq(&hp, z1.conj() * z2, DEFAULT_TOL)?.value;
    let norm = (pabgcs_norm(z1.norm(), m, params)? * pabgcs_norm(z2.norm(), m, params)?).sqrt();
    Ok(series / norm)
}

/// Closed-form overlap `⟨z, m_bra || z, m_ket⟩` between PABGCS of different
/// order at a common coherence parameter.
///
/// For `m_ket ≥ m_bra`, with `d = m_ket − m_bra`:
///
/// ```text
/// √((1)_{m_ket} (α)_{m_bra} / ((1)_{m_bra} (α)_{m_ket})) · z̄ᵈ
///   · Σₙ |z|²ⁿ (m_ket+1)ₙ / (n! (n+d)! (α+m_ket)ₙ) / √(M_{m_bra} M_{m_ket})
/// ```
///
/// The other ordering is the complex conjugate.
pub fn pabgcs_overlap_mixed(z: Complex64, m_bra: usize, m_ket: usize, params: IrrepParams) -> Result<Complex64> {
    if m_ket < m_bra {
        return Ok(pabgcs_overlap_mixed(z, m_ket, m_bra, params)?.conj());
    }
    let a = params.alpha();
    let d = m_ket - m_bra;
    let x = z.norm_sqr();
    let mk = m_ket as f64;
    // Σ (m_ket+1)ₙ / ((α+m_ket)ₙ (d+1)ₙ) xⁿ/n!, times 1/d!
    let series =
        pfq_real(&[mk + 1.0], &[a + mk, d as f64 + 1.0], x, DEFAULT_TOL)?.value / (log_pochhammer(1.0, d)?).exp();
    let log_prefactor = 0.5
        * (log_pochhammer(1.0, m_ket)? + log_pochhammer(a, m_bra)?
            - log_pochhammer(1.0, m_bra)?
            - log_pochhammer(a, m_ket)?);
    let norm = (pabgcs_norm(z.norm(), m_bra, params)? * pabgcs_norm(z.norm(), m_ket, params)?).sqrt();
    Ok(z.conj().powu(d as u32) * (log_prefactor.exp() * series / norm))
}

/// `‖e^{−itH}|z, f_m⟩ − e^{−it(λ+1/2)} |z e^{−2it}, f_m⟩‖`.
pub fn evolve_check(spec: &StateSpec, t: f64, trunc: &TruncationPolicy) -> Result<f64> {
    if spec.effective_family() != Family::Nbgcs {
        return Err(Error::InvalidParameter("temporal stability is checked for BGCS/NBGCS".into()));
    }
    let v = nbgcs(spec, trunc)?;
    let evolved = hamiltonian_phase(&v, t);
    let rotated = StateSpec { z: spec.z * Complex64::from_polar(1.0, -2.0 * t), ..*spec };
    let target = nbgcs(&rotated, trunc)?.scaled(Complex64::from_polar(1.0, -t * spec.params.alpha()));
    Ok(evolved.distance(&target))
}

/// Phase convention for `φ`: reduced into `[0, 2π)`.
pub fn canonical_phase(phi: f64) -> f64 {
    phi.rem_euclid(2.0 * PI)
}
