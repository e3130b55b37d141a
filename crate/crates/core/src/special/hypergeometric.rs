use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default relative tolerance for closed-form evaluations.
pub const DEFAULT_TOL: f64 = 1e-15;

const MAX_TERMS: usize = 1_000_000;

/// Consecutive small terms required before the tail estimate is trusted.
const SMALL_RUN: usize = 3;

/// Numerator and denominator parameters of `ₚF_q`.
#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricParams {
    upper: Vec<f64>,
    lower: Vec<f64>,
}

impl HypergeometricParams {
    pub fn new(upper: impl Into<Vec<f64>>, lower: impl Into<Vec<f64>>) -> Result<Self> {
        let upper = upper.into();
        let lower = lower.into();
        if let Some(b) = lower.iter().find(|b| !b.is_finite() || (**b <= 0.0 && b.fract() == 0.0)) {
            return Err(Error::InvalidParameter(format!("lower hypergeometric parameter {b} is a pole")));
        }
        if upper.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidParameter("non-finite upper parameter".into()));
        }
        if upper.len() > lower.len() + 1 {
            return Err(Error::InvalidParameter(format!(
                "{}F{} diverges for every nonzero argument",
                upper.len(),
                lower.len()
            )));
        }
        Ok(Self { upper, lower })
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    /// Ratio `t_{n+1} / t_n` of consecutive series terms, without the argument.
    fn term_ratio(&self, n: usize) -> f64 {
        let n = n as f64;
        let num: f64 = self.upper.iter().map(|a| a + n).product();
        let den: f64 = self.lower.iter().map(|b| b + n).product();
        num / (den * (n + 1.0))
    }
}

/// Value of a truncated series together with its relative error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesResult<T> {
    pub value: T,
    pub terms_used: usize,
    /// Geometric tail estimate relative to `|value|`.
    pub error_bound: f64,
}

/// Generalized hypergeometric series `ₚF_q(upper; lower; x)` by term recurrence.
///
/// Summation stops once three consecutive terms fall below `tol·|sum|`, the
/// term ratio has started to decrease, and the geometric tail bound
/// `|t|/(1 − r)` is itself below `tol·|sum|`.
pub fn pfq(params: &HypergeometricParams, x: Complex64, tol: f64) -> Result<SeriesResult<Complex64>> {
    if !(1e-15..=1e-6).contains(&tol) {
        return Err(Error::InvalidParameter(format!("series tolerance {tol} outside [1e-15, 1e-6]")));
    }
    if !x.re.is_finite() || !x.im.is_finite() {
        return Err(Error::InvalidParameter("non-finite series argument".into()));
    }
    if params.upper.len() == params.lower.len() + 1 && x.norm() >= 1.0 {
        return Err(Error::InvalidParameter(format!("{}F{} requires |x| < 1", params.upper.len(), params.lower.len())));
    }

    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut small_run = 0usize;
    let mut prev_ratio = f64::INFINITY;

    for n in 0..MAX_TERMS {
        let next = term * x * params.term_ratio(n);
        if next == Complex64::new(0.0, 0.0) {
            // Terminating series (zero argument or a non-positive integer
            // upper parameter): the sum is exact.
            return Ok(SeriesResult { value: sum, terms_used: n + 1, error_bound: 0.0 });
        }
        let ratio = next.norm() / term.norm();
        sum += next;
        term = next;

        let scale = sum.norm();
        if term.norm() < tol * scale {
            small_run += 1;
        } else {
            small_run = 0;
        }
        if small_run >= SMALL_RUN && ratio < 1.0 && ratio <= prev_ratio {
            let r = term.norm() * ratio / (1.0 - ratio);
            let bound = r / scale;
            if bound <= tol {
                return Ok(SeriesResult { value: sum, terms_used: n + 2, error_bound: bound });
            }
        }
        prev_ratio = ratio;
    }
    Err(Error::NonConvergence { terms: MAX_TERMS })
}

/// Real-argument convenience wrapper around [`pfq`].
pub fn pfq_real(upper: &[f64], lower: &[f64], x: f64, tol: f64) -> Result<SeriesResult<f64>> {
    let params = HypergeometricParams::new(upper, lower)?;
    let r = pfq(&params, Complex64::new(x, 0.0), tol)?;
    Ok(SeriesResult { value: r.value.re, terms_used: r.terms_used, error_bound: r.error_bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Direct summation with explicit Pochhammer products, no recurrence.
    fn brute_force(upper: &[f64], lower: &[f64], x: f64, terms: usize) -> f64 {
        use crate::special::pochhammer;
        let mut fact = 1.0;
        let mut xp = 1.0;
        let mut s = 0.0;
        for n in 0..terms {
            if n > 0 {
                fact *= n as f64;
                xp *= x;
            }
            let num: f64 = upper.iter().map(|a| pochhammer(*a, n)).product();
            let den: f64 = lower.iter().map(|b| pochhammer(*b, n)).product();
            s += num / den * xp / fact;
        }
        s
    }

    #[test]
    fn zero_argument_is_one() {
        let p = HypergeometricParams::new(vec![1.5, 2.0], vec![0.5, 3.0, 4.0]).unwrap();
        let r = pfq(&p, Complex64::new(0.0, 0.0), 1e-15).unwrap();
        assert_eq!(r.value, Complex64::new(1.0, 0.0));
        assert_eq!(r.error_bound, 0.0);
    }

    #[test]
    fn cancellation_gives_bessel_i0_of_two() {
        // ₁F₂([a],[a,1],1) = ₀F₁(;1;1) = Σ 1/(n!)² = I₀(2)
        let r = pfq_real(&[0.7], &[0.7, 1.0], 1.0, 1e-15).unwrap();
        let oracle: f64 = (0..30)
            .map(|n| {
                let f: f64 = (1..=n).map(|k| k as f64).product();
                1.0 / (f * f)
            })
            .sum();
        assert!((r.value - oracle).abs() < 1e-15 * oracle);
        assert!((r.value - 2.279_585_302_336_067).abs() < 1e-14);
    }

    #[test]
    fn two_f_three_matches_direct_sum() {
        let upper = [1.5, 2.5];
        let lower = [1.0, 3.5, 2.25];
        let r = pfq_real(&upper, &lower, 4.0, 1e-15).unwrap();
        let oracle = brute_force(&upper, &lower, 4.0, 60);
        assert!((r.value - oracle).abs() <= 1e-12 * oracle.abs(), "{} vs {}", r.value, oracle);
        assert!(r.error_bound <= 1e-15);
    }

    #[test]
    fn terminating_series_is_exact() {
        // ₂F₁(−2, 1; 1; x) = (1 − x)²
        let r = pfq_real(&[-2.0, 1.0], &[1.0], 0.3, 1e-15).unwrap();
        assert!((r.value - 0.49).abs() < 1e-15);
        assert_eq!(r.error_bound, 0.0);
    }

    #[test]
    fn complex_argument_matches_direct_sum() {
        // ₀F₁(;1; iy) by explicit complex summation.
        let x = Complex64::new(0.0, 3.0);
        let p = HypergeometricParams::new(vec![], vec![1.0]).unwrap();
        let r = pfq(&p, x, 1e-15).unwrap();
        let mut s = Complex64::new(0.0, 0.0);
        let mut f = 1.0;
        for n in 0..60 {
            if n > 0 {
                f *= n as f64;
            }
            s += x.powu(n) / (f * f);
        }
        assert!((r.value - s).norm() < 1e-14 * s.norm());
    }

    #[test]
    fn pole_in_lower_parameters_rejected() {
        assert!(HypergeometricParams::new(vec![1.0], vec![0.0]).is_err());
        assert!(HypergeometricParams::new(vec![1.0], vec![-3.0]).is_err());
        assert!(HypergeometricParams::new(vec![1.0], vec![-2.5]).is_ok());
    }

    #[test]
    fn divergent_shapes_rejected() {
        assert!(HypergeometricParams::new(vec![1.0, 1.0, 1.0], vec![1.0]).is_err());
        let p = HypergeometricParams::new(vec![1.0, 1.0], vec![2.0]).unwrap();
        assert!(pfq(&p, Complex64::new(1.5, 0.0), 1e-12).is_err());
        assert!(pfq(&p, Complex64::new(0.5, 0.0), 1e-12).is_ok());
    }

    #[test]
    fn tolerance_range_enforced() {
        let p = HypergeometricParams::new(vec![1.0], vec![2.0, 3.0]).unwrap();
        assert!(pfq(&p, Complex64::new(1.0, 0.0), 1e-17).is_err());
        assert!(pfq(&p, Complex64::new(1.0, 0.0), 1e-3).is_err());
    }

    proptest! {
        #[test]
        fn shared_parameter_cancels(
            shared in 0.1f64..6.0,
            a in 0.1f64..6.0,
            b in 0.1f64..6.0,
            c in 0.1f64..6.0,
            x in 0.0f64..20.0,
        ) {
            let with = pfq_real(&[a, shared], &[b, c, shared], x, 1e-15).unwrap().value;
            let without = pfq_real(&[a], &[b, c], x, 1e-15).unwrap().value;
            prop_assert!((with - without).abs() <= 1e-13 * without.abs());
        }

        #[test]
        fn monotone_in_positive_argument(
            a in 0.1f64..5.0,
            b in 0.1f64..5.0,
            c in 0.1f64..5.0,
            x in 0.0f64..30.0,
            dx in 1e-3f64..2.0,
        ) {
            let lo = pfq_real(&[a], &[b, c], x, 1e-15).unwrap().value;
            let hi = pfq_real(&[a], &[b, c], x + dx, 1e-15).unwrap().value;
            prop_assert!(hi > lo);
        }

        #[test]
        fn error_bound_is_honest(
            a in 0.1f64..5.0,
            a2 in 0.1f64..5.0,
            b in 0.1f64..5.0,
            c in 0.1f64..5.0,
            d in 0.1f64..5.0,
            x in 0.0f64..40.0,
        ) {
            let coarse = pfq_real(&[a, a2], &[b, c, d], x, 1e-9).unwrap();
            let fine = pfq_real(&[a, a2], &[b, c, d], x, 1e-12).unwrap();
            let diff = (coarse.value - fine.value).abs() / fine.value.abs();
            // Rounding in the accumulated sum sets a floor under the tail bound.
            prop_assert!(diff <= coarse.error_bound + 64.0 * f64::EPSILON,
                "diff {diff:e} bound {:e}", coarse.error_bound);
        }
    }
}
