//! Data behind each subcommand, as [`Table`]s.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::config::RunConfig;
use super::output::{Cell, Table};
use crate::error::{Error, Result};
use crate::measures::measure_pointwise_m0;
use crate::observables::expectation_suite;
use crate::position::wavefunction_on;
use crate::states::{build, Family, StateSpec};

/// Orders plotted in figures 2 to 5.
pub const FIGURE_ORDERS: std::ops::RangeInclusive<usize> = 0..=5;

/// Smallest `|z|` at which the logarithmically divergent m = 0 measure is emitted.
pub const MEASURE_CLIP: f64 = 1e-3;

fn meta(config: &RunConfig, family: &str, m: String, phase: f64) -> Vec<(String, String)> {
    vec![
        ("family".into(), family.to_ascii_lowercase()),
        ("m".into(), m),
        ("lambda".into(), config.params.lambda().to_string()),
        ("phase".into(), phase.to_string()),
    ]
}

fn spec(config: &RunConfig, family: Family, m: usize, z: Complex64) -> Result<StateSpec> {
    StateSpec::new(family, z, m, config.params)
}

/// The state selected by `family`, `m`, `lambda`, `phase` and `|z| = zmax`.
pub fn selected_spec(config: &RunConfig) -> Result<StateSpec> {
    let z = Complex64::from_polar(config.z_max, config.phase.unwrap_or(0.0));
    spec(config, config.family, config.m, z)
}

/// `n, re, im, prob` for the selected state.
pub fn state_table(config: &RunConfig) -> Result<Table> {
    let s = selected_spec(config)?;
    let v = build(&s, &config.trunc)?;
    let mut t = Table::new(
        meta(config, s.family.name(), s.m.to_string(), config.phase.unwrap_or(0.0)),
        ["n", "re", "im", "prob"].map(String::from).to_vec(),
    );
    t.meta.push(("z_abs".into(), config.z_max.to_string()));
    for (n, c) in v.coeffs().iter().enumerate() {
        t.rows.push(vec![Cell::Index(n), c.re.into(), c.im.into(), c.norm_sqr().into()]);
    }
    Ok(t)
}

/// Direct-sum observables along the `|z|` grid for the selected family and order.
pub fn observables_table(config: &RunConfig) -> Result<Table> {
    let phase = config.phase.unwrap_or(0.0);
    let columns = [
        "z_abs",
        "exp_n",
        "exp_n2",
        "g2",
        "mandel_q",
        "exp_j3",
        "exp_jp_jm",
        "re_exp_jp",
        "im_exp_jp",
        "re_exp_jp2",
        "im_exp_jp2",
        "var_x1",
        "var_x2",
        "s1",
        "s2",
    ];
    let mut t =
        Table::new(meta(config, config.family.name(), config.m.to_string(), phase), columns.map(String::from).to_vec());
    let rows: Result<Vec<Vec<Cell>>> = config
        .z_grid()
        .par_iter()
        .map(|&r| {
            let s = spec(config, config.family, config.m, Complex64::from_polar(r, phase))?;
            let o = expectation_suite(&build(&s, &config.trunc)?)?;
            Ok(vec![
                r.into(),
                o.exp_n.into(),
                o.exp_n2.into(),
                o.g2.into(),
                o.mandel_q.into(),
                o.exp_j3.into(),
                o.exp_jp_jm.into(),
                o.exp_jp.re.into(),
                o.exp_jp.im.into(),
                o.exp_jp2.re.into(),
                o.exp_jp2.im.into(),
                o.var_x1.into(),
                o.var_x2.into(),
                o.s1.into(),
                o.s2.into(),
            ])
        })
        .collect();
    t.rows = rows?;
    Ok(t)
}

/// `x, re, im, density` of the selected state's wavefunction on `(0, xmax]`.
pub fn wavefunction_table(config: &RunConfig) -> Result<Table> {
    let s = selected_spec(config)?;
    let v = build(&s, &config.trunc)?;
    let xs = config.x_grid();
    let psi = wavefunction_on(&xs, &v)?;
    let mut t = Table::new(
        meta(config, s.family.name(), s.m.to_string(), config.phase.unwrap_or(0.0)),
        ["x", "re", "im", "density"].map(String::from).to_vec(),
    );
    t.meta.push(("z_abs".into(), config.z_max.to_string()));
    for (x, p) in xs.iter().zip(psi) {
        t.rows.push(vec![(*x).into(), p.re.into(), p.im.into(), p.norm_sqr().into()]);
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Statistic {
    MandelQ,
    S1,
}

/// Family, plotted statistic and caption phase of figures 2 to 5.
fn figure_layout(id: u8) -> Option<(Family, Statistic, f64)> {
    match id {
        2 => Some((Family::Nbgcs, Statistic::MandelQ, 0.0)),
        3 => Some((Family::Nbgcs, Statistic::S1, PI / 3.0)),
        4 => Some((Family::Pabgcs, Statistic::MandelQ, 0.0)),
        5 => Some((Family::Pabgcs, Statistic::S1, 0.0)),
        _ => None,
    }
}

/// Curve data for figure `id` (1 to 5).
///
/// Figure 1 only has its m = 0 curve, the BGCS measure; the other measures
/// are checked through their moments instead.
pub fn figure_table(id: u8, config: &RunConfig) -> Result<Table> {
    if id == 1 {
        if config.m != 0 {
            return Err(Error::OutOfScope(format!(
                "figure 1 for m = {} is out of scope (Mellin-verified only)",
                config.m
            )));
        }
        let mut t = Table::new(
            meta(config, Family::Bgcs.name(), "0".into(), config.phase.unwrap_or(0.0)),
            vec!["z_abs".into(), "K_m0".into()],
        );
        let grid: Vec<f64> = config.z_grid().into_iter().filter(|r| *r >= MEASURE_CLIP).collect();
        let rows: Result<Vec<Vec<Cell>>> =
            grid.par_iter().map(|&r| Ok(vec![r.into(), measure_pointwise_m0(r, config.params)?.into()])).collect();
        t.rows = rows?;
        return Ok(t);
    }
    let (family, stat, caption_phase) =
        figure_layout(id).ok_or_else(|| Error::InvalidParameter(format!("unknown figure {id}; expected 1 to 5")))?;
    let phase = config.phase.unwrap_or(caption_phase);
    let prefix = match stat {
        Statistic::MandelQ => "Q",
        Statistic::S1 => "S1",
    };
    let mut columns = vec!["z_abs".to_string()];
    columns.extend(FIGURE_ORDERS.map(|m| format!("{prefix}_m{m}")));
    let mut t = Table::new(meta(config, family.name(), "0..5".into(), phase), columns);
    let rows: Result<Vec<Vec<Cell>>> = config
        .z_grid()
        .par_iter()
        .map(|&r| {
            let z = Complex64::from_polar(r, phase);
            let mut row = vec![Cell::Value(r)];
            for m in FIGURE_ORDERS {
                let o = expectation_suite(&build(&spec(config, family, m, z)?, &config.trunc)?)?;
                row.push(match stat {
                    Statistic::MandelQ => o.mandel_q.into(),
                    Statistic::S1 => o.s1.into(),
                });
            }
            Ok(row)
        })
        .collect();
    t.rows = rows?;
    Ok(t)
}
