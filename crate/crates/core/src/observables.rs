//! Photon statistics and su(1,1) squeezing.
//!
//! Two independent routes produce an [`ObservableReport`]:
//!
//! - [`expectation_suite`] sums directly over Fock coefficients using the
//!   ladder actions; this is the ground truth;
//! - [`nbgcs_closed_suite`] and [`pabgcs_closed_suite`] evaluate ratios of
//!   generalized hypergeometric series.
//!
//! [`cross_check`] compares the two field by field and reports any relative
//! deviation above [`DISCREPANCY_THRESHOLD`] as a formula discrepancy.
//!
//! Quadratures are `X₁ = (J₊ + J₋)/2` and `X₂ = (J₋ − J₊)/(2i)`; squeezing
//! factors are `Sᵢ = 2 Var(Xᵢ)/|⟨J₃⟩| − 1`.

use num_complex::Complex64;

use crate::algebra::{FockVector, IrrepParams, TruncationPolicy};
use crate::error::{Error, Result};
use crate::special::{ln_gamma, pfq_real, DEFAULT_TOL};
use crate::states::{build, Family, StateSpec};

/// Relative deviation above which closed form and oracle are said to disagree.
pub const DISCREPANCY_THRESHOLD: f64 = 1e-6;

/// Below this `|⟨J₃⟩|` the squeezing factors are undefined.
const J3_FLOOR: f64 = 1e-14;

/// Raw moments from which every derived statistic follows.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Moments {
    pub exp_n: f64,
    pub exp_n2: f64,
    pub exp_jp: Complex64,
    pub exp_jp2: Complex64,
    pub exp_jp_jm: f64,
    pub exp_j3: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ObservableReport {
    pub exp_n: f64,
    pub exp_n2: f64,
    pub exp_jp: Complex64,
    pub exp_jm: Complex64,
    pub exp_jp2: Complex64,
    pub exp_jm2: Complex64,
    pub exp_jp_jm: f64,
    pub exp_j3: f64,
    pub var_x1: f64,
    pub var_x2: f64,
    /// `(⟨N²⟩ − ⟨N⟩)/⟨N⟩²`; undefined when `⟨N⟩ = 0`.
    pub g2: Option<f64>,
    /// `⟨N⟩ (g² − 1)`; zero when `⟨N⟩ = 0`.
    pub mandel_q: f64,
    pub s1: Option<f64>,
    pub s2: Option<f64>,
}

impl ObservableReport {
    pub fn from_moments(m: Moments) -> Self {
        let exp_jm = m.exp_jp.conj();
        let exp_jm2 = m.exp_jp2.conj();
        // ⟨X₁²⟩ = (⟨J₊J₋⟩ + ⟨J₋J₊⟩ + ⟨J₊²⟩ + ⟨J₋²⟩)/4, with J₋J₊ = J₊J₋ + 2J₃.
        let sym = 2.0 * m.exp_jp_jm + 2.0 * m.exp_j3;
        let x1_mean = m.exp_jp.re;
        let x2_mean = -m.exp_jp.im;
        let var_x1 = (sym + 2.0 * m.exp_jp2.re) / 4.0 - x1_mean * x1_mean;
        let var_x2 = (sym - 2.0 * m.exp_jp2.re) / 4.0 - x2_mean * x2_mean;
        let g2 = (m.exp_n > 0.0).then(|| (m.exp_n2 - m.exp_n) / (m.exp_n * m.exp_n));
        let mandel_q = g2.map_or(0.0, |g| m.exp_n * (g - 1.0));
        let j3 = m.exp_j3.abs();
        let (s1, s2) =
            if j3 < J3_FLOOR { (None, None) } else { (Some(2.0 * var_x1 / j3 - 1.0), Some(2.0 * var_x2 / j3 - 1.0)) };
        Self {
            exp_n: m.exp_n,
            exp_n2: m.exp_n2,
            exp_jp: m.exp_jp,
            exp_jm,
            exp_jp2: m.exp_jp2,
            exp_jm2,
            exp_jp_jm: m.exp_jp_jm,
            exp_j3: m.exp_j3,
            var_x1,
            var_x2,
            g2,
            mandel_q,
            s1,
            s2,
        }
    }

    /// `Var(X₁) Var(X₂) − |⟨J₃⟩|²/4`, non-negative by the uncertainty relation.
    pub fn uncertainty_slack(&self) -> f64 {
        self.var_x1 * self.var_x2 - 0.25 * self.exp_j3 * self.exp_j3
    }
}

/// All moments by explicit sums over the coefficients of `v`.
pub fn expectation_suite(v: &FockVector) -> Result<ObservableReport> {
    let norm2 = v.norm_sqr();
    if norm2 == 0.0 {
        return Err(Error::InvalidParameter("expectation values of the zero vector".into()));
    }
    let p = v.params();
    let c = v.coeffs();
    let mut exp_n = 0.0;
    let mut exp_n2 = 0.0;
    let mut exp_jp_jm = 0.0;
    let mut exp_jp = Complex64::new(0.0, 0.0);
    let mut exp_jp2 = Complex64::new(0.0, 0.0);
    for (n, cn) in c.iter().enumerate() {
        let prob = cn.norm_sqr();
        let nf = n as f64;
        exp_n += nf * prob;
        exp_n2 += nf * nf * prob;
        exp_jp_jm += p.ladder_amplitude(n).powi(2) * prob;
        if let Some(next) = c.get(n + 1) {
            exp_jp += next.conj() * cn * p.ladder_amplitude(n + 1);
        }
        if let Some(next2) = c.get(n + 2) {
            exp_jp2 += next2.conj() * cn * (p.ladder_amplitude(n + 1) * p.ladder_amplitude(n + 2));
        }
    }
    let inv = norm2.recip();
    let exp_n = exp_n * inv;
    Ok(ObservableReport::from_moments(Moments {
        exp_n,
        exp_n2: exp_n2 * inv,
        exp_jp: exp_jp * inv,
        exp_jp2: exp_jp2 * inv,
        exp_jp_jm: exp_jp_jm * inv,
        exp_j3: exp_n + p.bargmann_shift(),
    }))
}

/// A closed-form expression that could not be used as printed.
#[derive(Clone, Debug, PartialEq)]
pub struct FormulaNote {
    pub quantity: &'static str,
    /// Value of the expression exactly as printed.
    pub literal: f64,
    /// Value entering the report.
    pub used: f64,
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForms {
    pub report: ObservableReport,
    pub notes: Vec<FormulaNote>,
}

fn f(upper: &[f64], lower: &[f64], x: f64) -> Result<f64> {
    Ok(pfq_real(upper, lower, x, DEFAULT_TOL)?.value)
}

/// The printed NBGCS `⟨N̂²⟩` display:
/// `|z|⁴ (α)(α+1)/((α+m)²(α+1+m)²) · ₁F₂([α+2],[α+2+m, α+2+m],|z|²)/𝔐`.
///
/// Term by term this is `Σ n(n−1)|cₙ|²`, the factorial moment `⟨N(N−1)⟩`.
pub fn nbgcs_printed_n2(z_abs: f64, m: usize, params: IrrepParams) -> Result<f64> {
    let a = params.alpha();
    let mf = m as f64;
    let x = z_abs * z_abs;
    let norm = f(&[a], &[a + mf, a + mf], x)?;
    Ok(x * x * a * (a + 1.0) / ((a + mf).powi(2) * (a + 1.0 + mf).powi(2))
        * f(&[a + 2.0], &[a + 2.0 + mf, a + 2.0 + mf], x)?
        / norm)
}

/// NBGCS (and BGCS, `m = 0`) moments from hypergeometric ratios.
pub fn nbgcs_closed_suite(z: Complex64, m: usize, params: IrrepParams) -> Result<ClosedForms> {
    let a = params.alpha();
    let mf = m as f64;
    let x = z.norm_sqr();
    let norm = f(&[a], &[a + mf, a + mf], x)?;

    let exp_n = x * a / (a + mf).powi(2) * f(&[a + 1.0], &[a + 1.0 + mf, a + 1.0 + mf], x)? / norm;
    let factorial_moment = nbgcs_printed_n2(z.norm(), m, params)?;
    let exp_n2 = factorial_moment + exp_n;
    let exp_jp = z.conj() * (a / (a + mf) * f(&[a + 1.0], &[a + 1.0 + mf, a + mf], x)? / norm);
    let exp_jp2 = z.conj().powu(2)
        * (a * (a + 1.0) / ((a + mf) * (a + 1.0 + mf)) * f(&[a + 2.0], &[a + 2.0 + mf, a + mf], x)? / norm);
    let gamma_ratio = (a.ln() + ln_gamma(a + mf) - ln_gamma(a + 1.0 + mf)).exp();
    let exp_jp_jm = x * gamma_ratio * gamma_ratio * f(&[a + 1.0, a + 1.0], &[a, a + 1.0 + mf, a + 1.0 + mf], x)? / norm;
    let exp_j3 = exp_n + params.bargmann_shift();

    Ok(ClosedForms {
        report: ObservableReport::from_moments(Moments { exp_n, exp_n2, exp_jp, exp_jp2, exp_jp_jm, exp_j3 }),
        notes: vec![FormulaNote {
            quantity: "exp_n2",
            literal: factorial_moment,
            used: exp_n2,
            reason: "printed display sums n(n-1)|c_n|^2; <N> added to obtain <N^2>",
        }],
    })
}

/// PABGCS moments from hypergeometric ratios; `m = 0` is the BGCS and is
/// routed to [`nbgcs_closed_suite`], since the `1/(m)ₙ` factors degenerate.
pub fn pabgcs_closed_suite(z: Complex64, m: usize, params: IrrepParams) -> Result<ClosedForms> {
    if m == 0 {
        return nbgcs_closed_suite(z, 0, params);
    }
    let lambda = params.lambda();
    let mf = m as f64;
    let b = params.alpha() + mf;
    let x = z.norm_sqr();
    let norm = f(&[mf + 1.0], &[1.0, b], x)?;

    let exp_n = mf * f(&[mf + 1.0, mf + 1.0], &[1.0, mf, b], x)? / norm;
    let exp_n2 = mf * mf * f(&[mf + 1.0; 3], &[1.0, mf, mf, b], x)? / norm;
    let exp_jp = z.conj() * ((mf + 1.0) * f(&[mf + 2.0], &[2.0, b], x)? / norm);
    let exp_jp2 = z.conj().powu(2) * ((mf + 1.0) * (mf + 2.0) / 2.0 * f(&[mf + 3.0], &[3.0, b], x)? / norm);
    let exp_jp_jm = mf * (mf + lambda - 0.5) * f(&[mf + 1.0, mf + 1.0], &[1.0, mf, lambda - 0.5 + mf], x)? / norm;
    let exp_j3 = exp_n + params.bargmann_shift();

    Ok(ClosedForms {
        report: ObservableReport::from_moments(Moments { exp_n, exp_n2, exp_jp, exp_jp2, exp_jp_jm, exp_j3 }),
        notes: vec![FormulaNote {
            quantity: "exp_jp_jm",
            literal: exp_jp_jm,
            used: exp_jp_jm,
            reason: "printed label 2F4 lists three lower parameters; read as 2F3([m+1,m+1],[1,m,lambda-1/2+m])",
        }],
    })
}

/// Closed-form suite for any family.
pub fn closed_suite(spec: &StateSpec) -> Result<ClosedForms> {
    match spec.effective_family() {
        Family::Pabgcs => pabgcs_closed_suite(spec.z, spec.m, spec.params),
        _ => nbgcs_closed_suite(spec.z, spec.m, spec.params),
    }
}

/// Relative deviation of one report field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FieldDeviation {
    pub field: &'static str,
    pub oracle: f64,
    pub candidate: f64,
    pub rel_dev: f64,
}

fn rel(field: &'static str, oracle: f64, candidate: f64, scale: f64) -> FieldDeviation {
    let denom = oracle.abs().max(scale).max(f64::MIN_POSITIVE);
    FieldDeviation { field, oracle, candidate, rel_dev: (candidate - oracle).abs() / denom }
}

fn rel_c(field: &'static str, oracle: Complex64, candidate: Complex64) -> FieldDeviation {
    let denom = oracle.norm().max(f64::MIN_POSITIVE);
    FieldDeviation {
        field,
        oracle: oracle.norm(),
        candidate: candidate.norm(),
        rel_dev: (candidate - oracle).norm() / denom,
    }
}

fn rel_opt(field: &'static str, oracle: Option<f64>, candidate: Option<f64>, scale: f64) -> FieldDeviation {
    match (oracle, candidate) {
        (Some(o), Some(c)) => rel(field, o, c, scale),
        (None, None) => FieldDeviation { field, oracle: 0.0, candidate: 0.0, rel_dev: 0.0 },
        (o, c) => FieldDeviation {
            field,
            oracle: o.unwrap_or(f64::NAN),
            candidate: c.unwrap_or(f64::NAN),
            rel_dev: f64::INFINITY,
        },
    }
}

/// Field-by-field relative deviations of `candidate` from `oracle`.
///
/// Quantities formed as `x − 1` (`Q`, `S₁`, `S₂`) are compared relative to
/// `max(|oracle|, 1)`, and the variances relative to `max(|oracle|, ⟨J₃⟩/2)`,
/// the scale of the terms they are computed from.
pub fn compare_reports(oracle: &ObservableReport, candidate: &ObservableReport) -> Vec<FieldDeviation> {
    let var_scale = 0.5 * oracle.exp_j3.abs();
    vec![
        rel("exp_n", oracle.exp_n, candidate.exp_n, 0.0),
        rel("exp_n2", oracle.exp_n2, candidate.exp_n2, 0.0),
        rel_c("exp_jp", oracle.exp_jp, candidate.exp_jp),
        rel_c("exp_jm", oracle.exp_jm, candidate.exp_jm),
        rel_c("exp_jp2", oracle.exp_jp2, candidate.exp_jp2),
        rel_c("exp_jm2", oracle.exp_jm2, candidate.exp_jm2),
        rel("exp_jp_jm", oracle.exp_jp_jm, candidate.exp_jp_jm, 0.0),
        rel("exp_j3", oracle.exp_j3, candidate.exp_j3, 0.0),
        rel("var_x1", oracle.var_x1, candidate.var_x1, var_scale),
        rel("var_x2", oracle.var_x2, candidate.var_x2, var_scale),
        rel_opt("g2", oracle.g2, candidate.g2, 0.0),
        rel("mandel_q", oracle.mandel_q, candidate.mandel_q, 1.0),
        rel_opt("s1", oracle.s1, candidate.s1, 1.0),
        rel_opt("s2", oracle.s2, candidate.s2, 1.0),
    ]
}

pub fn max_rel_dev(devs: &[FieldDeviation]) -> f64 {
    devs.iter().map(|d| d.rel_dev).fold(0.0, f64::max)
}

/// Oracle and closed form side by side.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossCheck {
    pub oracle: ObservableReport,
    pub closed: ClosedForms,
    pub deviations: Vec<FieldDeviation>,
}

impl CrossCheck {
    pub fn max_rel_dev(&self) -> f64 {
        max_rel_dev(&self.deviations)
    }

    /// Fields whose closed form disagrees with the direct sum.
    pub fn discrepancies(&self) -> Vec<FieldDeviation> {
        self.deviations.iter().copied().filter(|d| !(d.rel_dev <= DISCREPANCY_THRESHOLD)).collect()
    }
}

pub fn cross_check(spec: &StateSpec, trunc: &TruncationPolicy) -> Result<CrossCheck> {
    let oracle = expectation_suite(&build(spec, trunc)?)?;
    let closed = closed_suite(spec)?;
    let deviations = compare_reports(&oracle, &closed.report);
    Ok(CrossCheck { oracle, closed, deviations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{nbgcs, pabgcs};
    use std::f64::consts::PI;

    fn lam(l: f64) -> IrrepParams {
        IrrepParams::new(l).unwrap()
    }

    fn spec(family: Family, z: Complex64, m: usize, l: f64) -> StateSpec {
        StateSpec::new(family, z, m, lam(l)).unwrap()
    }

    #[test]
    fn vacuum_statistics() {
        let e0 = FockVector::basis(lam(0.5), 4, 0).unwrap();
        let r = expectation_suite(&e0).unwrap();
        assert_eq!(r.exp_n, 0.0);
        assert_eq!(r.exp_j3, 0.5);
        assert_eq!(r.var_x1, 0.25);
        assert_eq!(r.var_x2, 0.25);
        assert_eq!(r.s1, Some(0.0));
        assert_eq!(r.s2, Some(0.0));
        assert_eq!(r.g2, None);
        assert_eq!(r.mandel_q, 0.0);
    }

    #[test]
    fn zero_vector_rejected() {
        let z = FockVector::zeros(lam(0.5), 4);
        assert!(expectation_suite(&z).is_err());
    }

    #[test]
    fn bgcs_unit_argument_oracle_values() {
        // cₙ ∝ 1/n!, so ⟨N⟩ = I₁(2)/I₀(2) and ⟨N²⟩ = Σ n²/(n!)² / I₀(2) = 1.
        let t = TruncationPolicy::default();
        let v = nbgcs(&spec(Family::Bgcs, Complex64::new(1.0, 0.0), 0, 0.5), &t).unwrap();
        let r = expectation_suite(&v).unwrap();
        let (mut i0, mut i1, mut s2, mut f) = (0.0, 0.0, 0.0, 1.0);
        for n in 0..40 {
            if n > 0 {
                f *= n as f64;
            }
            let w = 1.0 / (f * f);
            i0 += w;
            i1 += n as f64 * w;
            s2 += (n * n) as f64 * w;
        }
        assert!((r.exp_n - i1 / i0).abs() < 1e-14);
        assert!((r.exp_n2 - s2 / i0).abs() < 1e-14);
        assert!((r.exp_n - 0.697_775).abs() < 1e-6);
        assert!((r.exp_n2 - 1.0).abs() < 1e-6);
        assert!((r.mandel_q - -0.264_648).abs() < 1e-6);
        assert!((r.g2.unwrap() - 0.620_727).abs() < 1e-6);
    }

    #[test]
    fn bgcs_is_unsqueezed() {
        let t = TruncationPolicy::default();
        for &l in &[0.5, 2.5, -0.2] {
            for z in [Complex64::new(1.0, 0.0), Complex64::from_polar(3.0, PI / 3.0), Complex64::new(-0.2, 5.0)] {
                let v = nbgcs(&spec(Family::Bgcs, z, 0, l), &t).unwrap();
                let r = expectation_suite(&v).unwrap();
                assert!((r.var_x1 - r.exp_j3 / 2.0).abs() < 1e-10);
                assert!((r.var_x2 - r.exp_j3 / 2.0).abs() < 1e-10);
                assert!(r.s1.unwrap().abs() < 1e-10 && r.s2.unwrap().abs() < 1e-10);
            }
        }
    }

    #[test]
    fn fock_state_variance() {
        // On eₘ: Var(X₁) = (⟨J₊J₋⟩ + ⟨J₃⟩)/2, so S₁ = m(m + λ − 1/2)/(m + λ/2 + 1/4).
        let p = lam(0.5);
        let e1 = FockVector::basis(p, 6, 1).unwrap();
        let r = expectation_suite(&e1).unwrap();
        assert!((r.var_x1 - 1.25).abs() < 1e-15);
        assert!((r.s1.unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.mandel_q, -1.0);
    }

    #[test]
    fn closed_suites_at_origin() {
        for &l in &[0.5, 2.5] {
            let r = nbgcs_closed_suite(Complex64::new(0.0, 0.0), 3, lam(l)).unwrap().report;
            assert_eq!(r.exp_n, 0.0);
            assert_eq!(r.exp_jp, Complex64::new(0.0, 0.0));
            assert_eq!(r.exp_j3, l / 2.0 + 0.25);
            for m in 1..5 {
                let r = pabgcs_closed_suite(Complex64::new(0.0, 0.0), m, lam(l)).unwrap().report;
                assert_eq!(r.exp_n, m as f64);
            }
        }
    }

    #[test]
    fn closed_matches_oracle_small_grid() {
        let t = TruncationPolicy::default();
        for family in [Family::Nbgcs, Family::Pabgcs] {
            for &l in &[0.5, 2.5] {
                for m in 0..4 {
                    for z in [Complex64::new(1.0, 0.0), Complex64::from_polar(2.0, PI / 3.0)] {
                        let c = cross_check(&spec(family, z, m, l), &t).unwrap();
                        assert!(c.max_rel_dev() <= 1e-9, "{family} l={l} m={m} z={z}: {:?}", c.discrepancies());
                    }
                }
            }
        }
    }

    #[test]
    fn printed_n2_is_flagged_as_discrepancy() {
        let t = TruncationPolicy::default();
        let s = spec(Family::Nbgcs, Complex64::new(1.5, 0.4), 2, 0.5);
        let oracle = expectation_suite(&nbgcs(&s, &t).unwrap()).unwrap();
        let mut literal = nbgcs_closed_suite(s.z, s.m, s.params).unwrap().report;
        literal.exp_n2 = nbgcs_printed_n2(s.z.norm(), s.m, s.params).unwrap();
        let devs = compare_reports(&oracle, &literal);
        let n2 = devs.iter().find(|d| d.field == "exp_n2").unwrap();
        assert!(n2.rel_dev > DISCREPANCY_THRESHOLD);

        // The display equals the factorial moment exactly.
        let v = nbgcs(&s, &t).unwrap();
        let fm: f64 = v.coeffs().iter().enumerate().map(|(n, c)| (n * n.saturating_sub(1)) as f64 * c.norm_sqr()).sum();
        assert!((fm - literal.exp_n2).abs() <= 1e-12 * fm);
    }

    #[test]
    fn pabgcs_jpjm_two_f_three_reading() {
        let t = TruncationPolicy::default();
        for m in 1..5 {
            let s = spec(Family::Pabgcs, Complex64::new(1.0, 0.0), m, 0.5);
            let oracle = expectation_suite(&pabgcs(&s, &t).unwrap()).unwrap();
            let closed = pabgcs_closed_suite(s.z, m, s.params).unwrap().report;
            assert!((oracle.exp_jp_jm - closed.exp_jp_jm).abs() <= 1e-12 * oracle.exp_jp_jm);
        }
    }

    #[test]
    fn phase_covariance() {
        let t = TruncationPolicy::default();
        let theta = 0.9;
        let rot = Complex64::from_polar(1.0, theta);
        for family in [Family::Nbgcs, Family::Pabgcs] {
            let z = Complex64::new(1.3, 0.4);
            let a = expectation_suite(&build(&spec(family, z, 2, 0.5), &t).unwrap()).unwrap();
            let b = expectation_suite(&build(&spec(family, z * rot, 2, 0.5), &t).unwrap()).unwrap();
            for (x, y) in [
                (a.exp_n, b.exp_n),
                (a.exp_n2, b.exp_n2),
                (a.exp_jp_jm, b.exp_jp_jm),
                (a.exp_j3, b.exp_j3),
                (a.mandel_q, b.mandel_q),
                (a.g2.unwrap(), b.g2.unwrap()),
            ] {
                assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
            }
            assert!((b.exp_jp - a.exp_jp * rot.conj()).norm() <= 1e-12);
            assert!((b.exp_jp2 - a.exp_jp2 * rot.conj().powu(2)).norm() <= 1e-12);
        }
    }

    #[test]
    fn q_g2_consistency_and_uncertainty() {
        let t = TruncationPolicy::default();
        for family in [Family::Nbgcs, Family::Pabgcs] {
            for m in 0..6 {
                for &z in &[0.25, 1.0, 4.0] {
                    let s = spec(family, Complex64::from_polar(z, PI / 3.0), m, 0.5);
                    let r = expectation_suite(&build(&s, &t).unwrap()).unwrap();
                    assert!((r.mandel_q - r.exp_n * (r.g2.unwrap() - 1.0)).abs() <= 1e-12);
                    assert!(r.var_x1 >= 0.0 && r.var_x2 >= 0.0);
                    assert!(r.uncertainty_slack() >= -1e-10);
                    assert_eq!(r.exp_jm, r.exp_jp.conj());
                    assert_eq!(r.exp_jm2, r.exp_jp2.conj());
                }
            }
        }
    }

    #[test]
    fn nbgcs_order_two_is_super_poissonian_near_origin() {
        // Small-|z| expansion: Q ≈ |z|²(1/72 − 1/81) · 9 > 0 for m = 2, λ = 1/2.
        let t = TruncationPolicy::default();
        let r = expectation_suite(&nbgcs(&spec(Family::Nbgcs, Complex64::new(1.0, 0.0), 2, 0.5), &t).unwrap()).unwrap();
        assert!(r.mandel_q > 0.0);
        let m1 =
            expectation_suite(&nbgcs(&spec(Family::Nbgcs, Complex64::new(1.0, 0.0), 1, 0.5), &t).unwrap()).unwrap();
        assert!(m1.mandel_q < 0.0);
    }
}
