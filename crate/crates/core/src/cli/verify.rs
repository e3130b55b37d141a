//! Named verification suites run by `su11-coherent verify`.
//!
//! Each check reports its worst residual against a fixed tolerance. The
//! observables suite also tests the published anti-bunching and squeezing
//! claims over the figure grids; those checks report what the states do,
//! whether or not it matches the claim.

use std::f64::consts::PI;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::config::RunConfig;
use super::output::Cell;
use super::tables::{figure_table, FIGURE_ORDERS};
use crate::algebra::{verify_commutators, FockVector, IrrepParams, TruncationPolicy};
use crate::error::{Error, Result};
use crate::measures::{nbgcs_moment_check, pabgcs_moment_check};
use crate::nonlinear::{
    nbgcs_eigen_residual, pabgcs_eigen_residual, pabgcs_two_path_residual, power_identity_check, shift_identity_check,
};
use crate::observables::{cross_check, expectation_suite};
use crate::position::{bgcs_wavefunction_closed, orthonormality_check, parseval, wavefunction, PositionGrid};
use crate::states::{build, evolve_check, nbgcs_overlap_closed, overlap, Family, StateSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Algebra,
    States,
    Observables,
    Measures,
    Position,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "algebra" => Ok(Suite::Algebra),
            "states" => Ok(Suite::States),
            "observables" => Ok(Suite::Observables),
            "measures" => Ok(Suite::Measures),
            "position" => Ok(Suite::Position),
            "all" => Ok(Suite::All),
            other => Err(Error::InvalidParameter(format!("unknown suite '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    /// Worst value of the checked quantity; the check passes when it is at
    /// most `tol`.
    pub worst: f64,
    pub tol: f64,
    pub note: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, worst: f64, tol: f64) -> Self {
        Self { name: name.into(), worst, tol, note: None }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.worst <= self.tol
    }

    pub fn line(&self) -> String {
        let mut s = format!(
            "{} {}: worst {:.3e} (tol {:.1e})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.worst,
            self.tol
        );
        if let Some(n) = &self.note {
            s.push_str("; ");
            s.push_str(n);
        }
        s
    }
}

pub const GRID_LAMBDAS: [f64; 2] = [0.5, 2.5];
pub const GRID_Z_ABS: [f64; 5] = [0.25, 0.5, 1.0, 2.0, 4.0];
pub const GRID_PHASES: [f64; 2] = [0.0, PI / 3.0];

/// Every (family, λ, m, z) of the standard observable grid.
pub fn standard_grid() -> Vec<StateSpec> {
    let mut out = Vec::new();
    for family in [Family::Nbgcs, Family::Pabgcs] {
        for &l in &GRID_LAMBDAS {
            let p = IrrepParams::new(l).expect("grid λ is valid");
            for m in FIGURE_ORDERS {
                for &r in &GRID_Z_ABS {
                    for &phi in &GRID_PHASES {
                        out.push(
                            StateSpec::new(family, Complex64::from_polar(r, phi), m, p).expect("grid spec is valid"),
                        );
                    }
                }
            }
        }
    }
    out
}

fn max_of(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(0.0, |a, b| if b.is_nan() || a.is_nan() { f64::NAN } else { a.max(b) })
}

fn par_max(specs: &[StateSpec], f: impl Fn(&StateSpec) -> Result<f64> + Sync + Send) -> Result<f64> {
    let v: Result<Vec<f64>> = specs.par_iter().map(f).collect();
    Ok(max_of(v?.into_iter()))
}

pub fn algebra_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    for l in [0.5, 2.5, 4.5] {
        worst = worst.max(verify_commutators(64, IrrepParams::new(l)?)?);
    }
    out.push(Check::new("commutators, cutoff 64, λ ∈ {1/2, 5/2, 9/2}", worst, 1e-12));

    let mut worst = 0.0f64;
    for m in 0..=3 {
        for z in [Complex64::new(1.0, 0.0), Complex64::new(1.0, 1.0)] {
            for l in GRID_LAMBDAS {
                worst = worst.max(shift_identity_check(m, z, IrrepParams::new(l)?, 64)?);
            }
        }
    }
    out.push(Check::new("displacement shift identity, m ≤ 3", worst, 1e-10));

    let mut worst = 0.0f64;
    for l in GRID_LAMBDAS {
        for m in 0..=3 {
            for n in 0..=6 {
                for j in 0..=6 {
                    worst = worst.max(power_identity_check(n, j, m, IrrepParams::new(l)?)?);
                }
            }
        }
    }
    out.push(Check::new("inverse-Pochhammer power identity, n, j ≤ 6", worst, 1e-12));
    Ok(out)
}

pub fn states_checks(seed: u64) -> Result<Vec<Check>> {
    let trunc = TruncationPolicy::default();
    let grid = standard_grid();
    let mut out = Vec::new();

    let worst = par_max(&grid, |s| Ok((build(s, &trunc)?.norm_sqr() - 1.0).abs()))?;
    out.push(Check::new("unit norm on the standard grid", worst, 1e-15 + trunc.tail_tol()));

    let mut worst = 0.0f64;
    for l in GRID_LAMBDAS {
        let p = IrrepParams::new(l)?;
        for r in GRID_Z_ABS {
            let z = Complex64::from_polar(r, 0.7);
            let b = build(&StateSpec::new(Family::Bgcs, z, 0, p)?, &trunc)?;
            let n0 = build(&StateSpec::new(Family::Nbgcs, z, 0, p)?, &trunc)?;
            let p0 = build(&StateSpec::new(Family::Pabgcs, z, 0, p)?, &trunc)?;
            worst = worst.max(b.max_deviation(&n0)).max(b.max_deviation(&p0));
        }
        for m in FIGURE_ORDERS {
            let v = build(&StateSpec::new(Family::Pabgcs, Complex64::new(0.0, 0.0), m, p)?, &trunc)?;
            worst = worst.max(v.max_deviation(&FockVector::basis(p, v.cutoff(), m)?));
        }
    }
    out.push(Check::new("m = 0 and z = 0 limits", worst, 1e-13));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let z = Complex64::from_polar(rng.gen_range(0.0..4.0), rng.gen_range(0.0..2.0 * PI));
        let m = rng.gen_range(0..=5);
        let t = rng.gen_range(-10.0..10.0);
        let l = rng.gen_range(-0.4..5.0);
        worst = worst.max(evolve_check(&StateSpec::new(Family::Nbgcs, z, m, IrrepParams::new(l)?)?, t, &trunc)?);
    }
    out.push(Check::new("temporal stability, 20 seeded draws", worst, 1e-11));

    let nb: Vec<StateSpec> = grid.iter().filter(|s| s.family == Family::Nbgcs).copied().collect();
    let pa: Vec<StateSpec> = grid.iter().filter(|s| s.family == Family::Pabgcs).copied().collect();
    out.push(Check::new("NBGCS eigen-relation", par_max(&nb, |s| nbgcs_eigen_residual(s, &trunc))?, 1e-11));
    out.push(Check::new("PABGCS eigen-relation", par_max(&pa, |s| pabgcs_eigen_residual(s, &trunc))?, 1e-11));
    out.push(Check::new(
        "PABGCS eigen-relation on raised BGCS",
        par_max(&pa, |s| pabgcs_two_path_residual(s, &trunc))?,
        1e-10,
    ));

    let worst = par_max(&nb, |s| {
        let z2 = Complex64::new(0.3, -1.1);
        let m2 = (s.m + 2) % 6;
        let other = build(&StateSpec::new(Family::Nbgcs, z2, m2, s.params)?, &trunc)?;
        let direct = overlap(&other, &build(s, &trunc)?)?;
        Ok((direct - nbgcs_overlap_closed(z2, m2, s.z, s.m, s.params)?).norm())
    })?;
    out.push(Check::new("NBGCS overlap, closed form vs Fock sum", worst, 1e-12));
    Ok(out)
}

fn figure_column_values(id: u8, column: usize) -> Result<Vec<(f64, f64)>> {
    let config = RunConfig::from_layer(Default::default())?;
    let t = figure_table(id, &config)?;
    Ok(t.rows
        .iter()
        .map(|r| {
            let v = |c: Cell| match c {
                Cell::Value(v) => v,
                _ => f64::NAN,
            };
            (v(r[0]), v(r[column]))
        })
        .collect())
}

/// Largest Mandel Q over the figure grid, for figure 2 or 4.
pub fn figure_max_q(id: u8) -> Result<Vec<(usize, f64, f64)>> {
    FIGURE_ORDERS
        .map(|m| {
            let vals = figure_column_values(id, m + 1)?;
            let (z, q) = vals.into_iter().fold((0.0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
            Ok((m, z, q))
        })
        .collect()
}

pub fn observables_checks() -> Result<Vec<Check>> {
    let trunc = TruncationPolicy::default();
    let grid = standard_grid();
    let mut out = Vec::new();

    let checks: Result<Vec<_>> = grid.par_iter().map(|s| cross_check(s, &trunc)).collect();
    let checks = checks?;
    let worst = max_of(checks.iter().map(|c| c.max_rel_dev()));
    out.push(Check::new("closed forms vs direct sums", worst, 1e-9));
    let mut notes: Vec<String> = Vec::new();
    for c in &checks {
        for n in &c.closed.notes {
            if !notes.iter().any(|x| x.starts_with(n.quantity)) {
                notes.push(format!("{}: {}", n.quantity, n.reason));
            }
        }
    }
    if !notes.is_empty() {
        let last = out.pop().expect("just pushed");
        out.push(last.with_note(notes.join("; ")));
    }
    let slack = max_of(checks.iter().map(|c| -c.oracle.uncertainty_slack()));
    out.push(Check::new("uncertainty relation deficit", slack, 1e-10));

    let bgcs = expectation_suite(&build(
        &StateSpec::new(Family::Bgcs, Complex64::new(1.0, 0.0), 0, IrrepParams::new(0.5)?)?,
        &trunc,
    )?)?;
    out.push(
        Check::new("BGCS Mandel Q at |z| = 1", (bgcs.mandel_q - -0.264_648).abs(), 1e-6)
            .with_note(format!("Q = {:.9}", bgcs.mandel_q)),
    );

    for (id, family) in [(2u8, "NBGCS"), (4u8, "PABGCS")] {
        let maxima = figure_max_q(id)?;
        let worst = maxima.iter().map(|x| x.2).fold(f64::NEG_INFINITY, f64::max);
        let offenders: Vec<String> =
            maxima.iter().filter(|x| !(x.2 < 0.0)).map(|(m, z, q)| format!("m={m} Q={q:+.3e} at |z|={z:.3}")).collect();
        let mut c = Check::new(format!("{family} sub-Poissonian (Q < 0) on 240 points, m ≤ 5"), worst, 0.0);
        if !offenders.is_empty() {
            c = c.with_note(offenders.join(", "));
        }
        // Strictly negative is required; a vanishing maximum does not pass.
        if worst == 0.0 {
            c.worst = f64::MIN_POSITIVE;
        }
        out.push(c);
    }

    for (id, family) in [(3u8, "NBGCS φ=π/3"), (5u8, "PABGCS φ=0")] {
        let m0 = figure_column_values(id, 1)?;
        out.push(Check::new(format!("{family} S1 vanishes for m = 0"), max_of(m0.iter().map(|x| x.1.abs())), 1e-10));
        let mut worst = f64::NEG_INFINITY;
        let mut offenders = Vec::new();
        for m in 1..=5 {
            let vals = figure_column_values(id, m + 1)?;
            let (z, s) = vals.into_iter().fold((0.0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
            worst = worst.max(s);
            if !(s < 0.0) {
                offenders.push(format!("m={m} S1={s:+.3e} at |z|={z:.3}"));
            }
        }
        let mut c = Check::new(format!("{family} S1 < 0 for 1 ≤ m ≤ 5"), worst, 0.0);
        if worst == 0.0 {
            c.worst = f64::MIN_POSITIVE;
        }
        if !offenders.is_empty() {
            c = c.with_note(offenders.join(", "));
        }
        out.push(c);

        let (statistic_family, phase) = if id == 3 { (Family::Nbgcs, PI / 3.0) } else { (Family::Pabgcs, 0.0) };
        let mut violation = 0.0f64;
        let mut detail = Vec::new();
        for r in [1.0, 2.0, 3.0] {
            let mut s1 = Vec::new();
            for m in 1..=5 {
                let spec =
                    StateSpec::new(statistic_family, Complex64::from_polar(r, phase), m, IrrepParams::new(0.5)?)?;
                s1.push(expectation_suite(&build(&spec, &trunc)?)?.s1.unwrap_or(f64::NAN));
            }
            for w in s1.windows(2) {
                // Deepening means each higher order is at least as negative.
                if !(w[1] <= w[0]) {
                    violation = violation.max(w[1] - w[0]);
                }
            }
            detail.push(format!("|z|={r}: [{}]", s1.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>().join(", ")));
        }
        out.push(
            Check::new(format!("{family} S1 deepens with m at |z| ∈ {{1, 2, 3}}"), violation, 0.0)
                .with_note(detail.join("; ")),
        );
    }
    Ok(out)
}

pub fn measures_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    let mut warned = false;
    for l in [0.5, 2.5, 4.5] {
        let p = IrrepParams::new(l)?;
        for m in 0..=5 {
            for n in 0..=50 {
                let r = nbgcs_moment_check(n, m, p)?;
                worst = worst.max((r.ratio - 1.0).abs());
                warned |= r.lambda_warning;
            }
        }
    }
    let mut c = Check::new("NBGCS moment ratio − 1, n ≤ 50, m ≤ 5", worst, 1e-12);
    if warned {
        c = c.with_note("λ outside the stated set");
    }
    out.push(c);

    let mut worst = 0.0f64;
    let mut constants = Vec::new();
    for l in [0.5, 2.5, 4.5] {
        let p = IrrepParams::new(l)?;
        for m in 1..=5 {
            let r0 = pabgcs_moment_check(0, m, p)?.ratio;
            for n in 1..=50 {
                worst = worst.max((pabgcs_moment_check(n, m, p)?.ratio - r0).abs());
            }
            constants.push(r0);
        }
    }
    let lo = constants.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = constants.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    out.push(
        Check::new("PABGCS moment ratio constant in n", worst, 1e-12)
            .with_note(format!("constant ratio {lo:.15} to {hi:.15} over m ≤ 5, λ ∈ {{1/2, 5/2, 9/2}}")),
    );
    Ok(out)
}

pub fn position_checks() -> Result<Vec<Check>> {
    let trunc = TruncationPolicy::default();
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    for l in GRID_LAMBDAS {
        let p = IrrepParams::new(l)?;
        let g = PositionGrid::gauss(32, p)?;
        for n in 0..=20 {
            for k in 0..=n {
                let d = if n == k { 1.0 } else { 0.0 };
                worst = worst.max((orthonormality_check(n, k, p, &g)? - d).abs());
            }
        }
    }
    out.push(Check::new("basis orthonormality, n ≤ 20", worst, 1e-8));

    let mut worst = 0.0f64;
    for family in [Family::Nbgcs, Family::Pabgcs] {
        for (z, m, l) in [(Complex64::new(1.0, 0.0), 2, 0.5), (Complex64::from_polar(2.0, 1.0), 4, 2.5)] {
            let v = build(&StateSpec::new(family, z, m, IrrepParams::new(l)?)?, &trunc)?;
            worst = worst.max((parseval(&v)? - v.norm_sqr()).abs());
        }
    }
    out.push(Check::new("Parseval", worst, 1e-7));

    let p = IrrepParams::new(0.5)?;
    let mut worst = 0.0f64;
    for r in [0.5, 1.0, 2.0] {
        let z = Complex64::new(r, 0.0);
        let v = build(&StateSpec::new(Family::Bgcs, z, 0, p)?, &trunc)?;
        for x in [0.5, 1.0, 2.0] {
            worst = worst.max((wavefunction(x, &v)?.norm() - bgcs_wavefunction_closed(x, z, p)?.norm()).abs());
        }
    }
    out.push(Check::new("closed BGCS wavefunction modulus", worst, 1e-8));
    Ok(out)
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<Vec<(&'static str, Vec<Check>)>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Algebra {
        out.push(("algebra", algebra_checks()?));
    }
    if all || suite == Suite::States {
        out.push(("states", states_checks(seed)?));
    }
    if all || suite == Suite::Observables {
        out.push(("observables", observables_checks()?));
    }
    if all || suite == Suite::Measures {
        out.push(("measures", measures_checks()?));
    }
    if all || suite == Suite::Position {
        out.push(("position", position_checks()?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        assert_eq!("ALL".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn check_lines() {
        let c = Check::new("x", 1e-13, 1e-12);
        assert!(c.passed());
        assert!(c.line().starts_with("PASS x"));
        let c = Check::new("y", f64::NAN, 1.0);
        assert!(!c.passed());
    }

    #[test]
    fn grid_size() {
        assert_eq!(standard_grid().len(), 2 * 2 * 6 * 5 * 2);
    }

    #[test]
    fn algebra_and_measures_pass() {
        for c in algebra_checks().unwrap().into_iter().chain(measures_checks().unwrap()) {
            assert!(c.passed(), "{}", c.line());
        }
    }
}
