//! Run configuration: command-line flags over a `key=value` file over defaults.

use std::f64::consts::TAU;
use std::path::PathBuf;
use std::str::FromStr;

use crate::algebra::{IrrepParams, TruncationPolicy};
use crate::error::{Error, Result};
use crate::states::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Svg,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            other => Err(Error::InvalidParameter(format!("unknown format '{other}'"))),
        }
    }
}

/// Partially specified configuration; every source produces one of these.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConfigLayer {
    pub family: Option<Family>,
    pub m: Option<usize>,
    pub lambda: Option<f64>,
    pub phase: Option<f64>,
    pub z_min: Option<f64>,
    pub z_max: Option<f64>,
    pub points: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub tail_tol: Option<f64>,
    pub seed: Option<u64>,
    pub x_max: Option<f64>,
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::InvalidParameter(format!("cannot parse {key}='{value}'")))
}

impl ConfigLayer {
    /// Parses flat `key=value` text; blank lines and `#` comments are skipped.
    pub fn parse_file_contents(text: &str) -> Result<Self> {
        let mut layer = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("config line {}: expected key=value", i + 1)))?;
            let key = key.trim();
            let value = value.trim();
            match key.replace('-', "_").as_str() {
                "family" => layer.family = Some(value.parse()?),
                "m" => layer.m = Some(parse(key, value)?),
                "lambda" => layer.lambda = Some(parse(key, value)?),
                "phase" => layer.phase = Some(parse(key, value)?),
                "zmin" | "z_min" => layer.z_min = Some(parse(key, value)?),
                "zmax" | "z_max" => layer.z_max = Some(parse(key, value)?),
                "points" => layer.points = Some(parse(key, value)?),
                "out" => layer.out = Some(PathBuf::from(value)),
                "format" => layer.format = Some(value.parse()?),
                "tail_tol" => layer.tail_tol = Some(parse(key, value)?),
                "seed" => layer.seed = Some(parse(key, value)?),
                "xmax" | "x_max" => layer.x_max = Some(parse(key, value)?),
                _ => return Err(Error::InvalidParameter(format!("config line {}: unknown key '{key}'", i + 1))),
            }
        }
        Ok(layer)
    }

    pub fn read_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse_file_contents(&text)
    }

    /// Fields of `self` win over those of `lower`.
    pub fn over(self, lower: ConfigLayer) -> ConfigLayer {
        ConfigLayer {
            family: self.family.or(lower.family),
            m: self.m.or(lower.m),
            lambda: self.lambda.or(lower.lambda),
            phase: self.phase.or(lower.phase),
            z_min: self.z_min.or(lower.z_min),
            z_max: self.z_max.or(lower.z_max),
            points: self.points.or(lower.points),
            out: self.out.or(lower.out),
            format: self.format.or(lower.format),
            tail_tol: self.tail_tol.or(lower.tail_tol),
            seed: self.seed.or(lower.seed),
            x_max: self.x_max.or(lower.x_max),
        }
    }
}

/// Validated configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub family: Family,
    pub m: usize,
    pub params: IrrepParams,
    /// `None` lets each figure use the phase of its caption.
    pub phase: Option<f64>,
    pub z_min: f64,
    pub z_max: f64,
    pub points: usize,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub trunc: TruncationPolicy,
    pub seed: u64,
    pub x_max: f64,
}

impl RunConfig {
    pub const DEFAULT_POINTS: usize = 240;
    pub const DEFAULT_Z_MAX: f64 = 6.0;
    pub const DEFAULT_X_MAX: f64 = 5.0;
    pub const DEFAULT_SEED: u64 = 20_160_101;

    pub fn from_layer(layer: ConfigLayer) -> Result<Self> {
        let points = layer.points.unwrap_or(Self::DEFAULT_POINTS);
        if !(2..=100_000).contains(&points) {
            return Err(Error::InvalidParameter(format!("points {points} outside [2, 100000]")));
        }
        let z_min = layer.z_min.unwrap_or(0.0);
        let z_max = layer.z_max.unwrap_or(Self::DEFAULT_Z_MAX);
        if !(z_min >= 0.0) || !z_min.is_finite() {
            return Err(Error::InvalidParameter(format!("zmin {z_min} must be >= 0")));
        }
        if !(z_max >= z_min) || !z_max.is_finite() {
            return Err(Error::InvalidParameter(format!("zmax {z_max} below zmin {z_min}")));
        }
        if let Some(p) = layer.phase {
            if !(0.0..TAU).contains(&p) {
                return Err(Error::InvalidParameter(format!("phase {p} outside [0, 2π)")));
            }
        }
        let x_max = layer.x_max.unwrap_or(Self::DEFAULT_X_MAX);
        if !(x_max > 0.0) || !x_max.is_finite() {
            return Err(Error::InvalidParameter(format!("xmax {x_max} must be > 0")));
        }
        let trunc = TruncationPolicy::new(
            TruncationPolicy::DEFAULT_CUTOFF,
            layer.tail_tol.unwrap_or(TruncationPolicy::DEFAULT_TAIL_TOL),
        )?;
        Ok(Self {
            family: layer.family.unwrap_or(Family::Nbgcs),
            m: layer.m.unwrap_or(0),
            params: IrrepParams::new(layer.lambda.unwrap_or(0.5))?,
            phase: layer.phase,
            z_min,
            z_max,
            points,
            out: layer.out,
            format: layer.format.unwrap_or(Format::Csv),
            trunc,
            seed: layer.seed.unwrap_or(Self::DEFAULT_SEED),
            x_max,
        })
    }

    /// `z_min + (z_max − z_min)·i/points` for `i = 1..=points`.
    pub fn z_grid(&self) -> Vec<f64> {
        (1..=self.points).map(|i| self.z_min + (self.z_max - self.z_min) * i as f64 / self.points as f64).collect()
    }

    /// `x_max·i/points` for `i = 1..=points`.
    pub fn x_grid(&self) -> Vec<f64> {
        (1..=self.points).map(|i| self.x_max * i as f64 / self.points as f64).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = RunConfig::from_layer(ConfigLayer::default()).unwrap();
        assert_eq!(c.points, 240);
        assert_eq!(c.params.lambda(), 0.5);
        let g = c.z_grid();
        assert_eq!(g.len(), 240);
        assert_eq!(g[0], 6.0 / 240.0);
        assert_eq!(*g.last().unwrap(), 6.0);
    }

    #[test]
    fn file_parsing() {
        let text = "# comment\nfamily = pabgcs\nm=3\nlambda=2.5\n\ntail-tol=1e-12\nzmax=4\n";
        let l = ConfigLayer::parse_file_contents(text).unwrap();
        assert_eq!(l.family, Some(Family::Pabgcs));
        assert_eq!(l.m, Some(3));
        assert_eq!(l.tail_tol, Some(1e-12));
        assert!(ConfigLayer::parse_file_contents("bogus=1").is_err());
        assert!(ConfigLayer::parse_file_contents("m").is_err());
        assert!(ConfigLayer::parse_file_contents("m=x").is_err());
    }

    #[test]
    fn precedence() {
        let file = ConfigLayer { m: Some(2), lambda: Some(2.5), ..Default::default() };
        let flags = ConfigLayer { m: Some(4), ..Default::default() };
        let c = RunConfig::from_layer(flags.over(file)).unwrap();
        assert_eq!(c.m, 4);
        assert_eq!(c.params.lambda(), 2.5);
    }

    #[test]
    fn validation() {
        let bad = [
            ConfigLayer { points: Some(1), ..Default::default() },
            ConfigLayer { points: Some(100_001), ..Default::default() },
            ConfigLayer { z_min: Some(-1.0), ..Default::default() },
            ConfigLayer { z_min: Some(3.0), z_max: Some(2.0), ..Default::default() },
            ConfigLayer { phase: Some(7.0), ..Default::default() },
            ConfigLayer { tail_tol: Some(1e-3), ..Default::default() },
            ConfigLayer { lambda: Some(-0.5), ..Default::default() },
        ];
        for layer in bad {
            assert!(RunConfig::from_layer(layer.clone()).is_err(), "{layer:?}");
        }
    }
}
