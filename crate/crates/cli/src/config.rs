//! Sweep configuration from flags and an optional `key = value` file.

use std::f64::consts::PI;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use catqubit::CodeSpec;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("{path}:{line}: {message}")]
    File {
        path: String,
        line: usize,
        message: String,
    },
    #[error("--{flag}: {message}")]
    Flag { flag: &'static str, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// Which concurrence routes a sweep evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// General, X-matrix (where the density is X-shaped) and evolution.
    #[default]
    All,
    General,
    Xmatrix,
    Evolution,
    /// General concurrence of the overlap-based reference density.
    Oracle,
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "all" => Ok(Self::All),
            "general" => Ok(Self::General),
            "xmatrix" => Ok(Self::Xmatrix),
            "evolution" => Ok(Self::Evolution),
            "oracle" => Ok(Self::Oracle),
            other => Err(format!(
                "unknown route '{other}' (expected all, general, xmatrix, evolution or oracle)"
            )),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::All => "all",
            Self::General => "general",
            Self::Xmatrix => "xmatrix",
            Self::Evolution => "evolution",
            Self::Oracle => "oracle",
        })
    }
}

/// Parses `2.5`, `pi`, `2pi`, `pi/2`, `2*pi/3`, `2/3`, `-1e-3`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty value".into());
    }
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s),
    };
    let mut value = 1.0;
    let mut op = '*';
    let mut rest = body;
    loop {
        let end = rest.find(['*', '/']).unwrap_or(rest.len());
        let factor = parse_factor(rest[..end].trim()).ok_or_else(|| format!("not a number: '{s}'"))?;
        value = if op == '*' { value * factor } else { value / factor };
        if end == rest.len() {
            break;
        }
        op = rest.as_bytes()[end] as char;
        rest = &rest[end + 1..];
    }
    if value.is_finite() {
        Ok(sign * value)
    } else {
        Err(format!("not a finite number: '{s}'"))
    }
}

fn parse_factor(f: &str) -> Option<f64> {
    if f == "pi" {
        return Some(PI);
    }
    if let Some(k) = f.strip_suffix("pi") {
        return k.trim().parse::<f64>().ok().map(|k| k * PI);
    }
    f.parse().ok()
}

/// Comma-separated values, or `start:stop:count` for evenly spaced points.
pub fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [start, stop, count] => {
            let (a, b) = (parse_real(start)?, parse_real(stop)?);
            let n: usize = count
                .trim()
                .parse()
                .map_err(|_| format!("range count must be a positive integer, got '{}'", count.trim()))?;
            if n == 0 {
                return Err("range count must be at least 1".into());
            }
            Ok(linspace(a, b, n))
        }
        [_] => s.split(',').map(parse_real).collect(),
        _ => Err(format!("expected a list or start:stop:count, got '{s}'")),
    }
}

pub fn parse_codes(s: &str) -> Result<Vec<CodeSpec>, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let n: i64 = t.trim().parse().map_err(|_| format!("not an integer: '{}'", t.trim()))?;
            CodeSpec::new(n).map_err(|e| e.to_string())
        })
        .collect()
}

/// `n` evenly spaced points from `a` to `b` inclusive; exact endpoints.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    b
                } else {
                    a + (b - a) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Settings that may come from either source; `None` means "not given".
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigLayer {
    pub alpha_min: Option<f64>,
    pub alpha_max: Option<f64>,
    pub alpha_steps: Option<usize>,
    pub eta: Option<Vec<f64>>,
    pub theta: Option<Vec<f64>>,
    pub w: Option<Vec<f64>>,
    pub code: Option<Vec<CodeSpec>>,
    pub route: Option<Route>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl ConfigLayer {
    /// Fields set in `other` win.
    pub fn overlay(self, other: ConfigLayer) -> ConfigLayer {
        ConfigLayer {
            alpha_min: other.alpha_min.or(self.alpha_min),
            alpha_max: other.alpha_max.or(self.alpha_max),
            alpha_steps: other.alpha_steps.or(self.alpha_steps),
            eta: other.eta.or(self.eta),
            theta: other.theta.or(self.theta),
            w: other.w.or(self.w),
            code: other.code.or(self.code),
            route: other.route.or(self.route),
            out: other.out.or(self.out),
            threads: other.threads.or(self.threads),
        }
    }

    /// Sets one key; the error is the bare message, without location.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let value = value.trim();
        match key.trim().replace('_', "-").as_str() {
            "alpha-min" => self.alpha_min = Some(parse_real(value)?),
            "alpha-max" => self.alpha_max = Some(parse_real(value)?),
            "alpha-steps" => {
                self.alpha_steps = Some(
                    value
                        .parse()
                        .map_err(|_| format!("alpha-steps must be a positive integer, got '{value}'"))?,
                )
            }
            "eta" => self.eta = Some(parse_list(value)?),
            "theta" => self.theta = Some(parse_list(value)?),
            "w" => self.w = Some(parse_list(value)?),
            "code" => self.code = Some(parse_codes(value)?),
            "route" => self.route = Some(value.parse()?),
            "out" => self.out = Some(PathBuf::from(value)),
            "threads" => {
                self.threads = Some(
                    value
                        .parse()
                        .map_err(|_| format!("threads must be a positive integer, got '{value}'"))?,
                )
            }
            other => return Err(format!("unknown key '{other}'")),
        }
        Ok(())
    }

    /// Reads `key = value` lines; `#` starts a comment.
    pub fn parse_file(text: &str, path: &str) -> Result<Self, ConfigError> {
        let mut layer = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConfigError::File {
                path: path.to_string(),
                line: i + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected 'key = value', got '{line}'")))?;
            layer.set(key, value).map_err(err)?;
        }
        Ok(layer)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse_file(&text, &path.display().to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_steps: usize,
    pub eta: Vec<f64>,
    pub theta: Vec<f64>,
    pub w: Vec<f64>,
    pub codes: Vec<CodeSpec>,
    pub route: Route,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            alpha_min: 0.2,
            alpha_max: 3.0,
            alpha_steps: 15,
            eta: vec![2.0 / 3.0, 0.9],
            theta: vec![0.0, PI],
            w: vec![0.5],
            codes: [1, 3, 5].map(|n| CodeSpec::new(n).expect("odd")).to_vec(),
            route: Route::All,
            out: None,
            threads: None,
        }
    }
}

impl SweepConfig {
    pub fn from_layer(layer: ConfigLayer) -> Result<Self, ConfigError> {
        let d = Self::default();
        let cfg = Self {
            alpha_min: layer.alpha_min.unwrap_or(d.alpha_min),
            alpha_max: layer.alpha_max.unwrap_or(d.alpha_max),
            alpha_steps: layer.alpha_steps.unwrap_or(d.alpha_steps),
            eta: layer.eta.unwrap_or(d.eta),
            theta: layer.theta.unwrap_or(d.theta),
            w: layer.w.unwrap_or(d.w),
            codes: layer.code.unwrap_or(d.codes),
            route: layer.route.unwrap_or(d.route),
            out: layer.out,
            threads: layer.threads,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |m: String| Err(ConfigError::Invalid(m));
        if self.alpha_steps == 0 {
            return invalid("alpha-steps must be at least 1".into());
        }
        if !(self.alpha_min >= 0.0) {
            return invalid(format!("alpha-min must be non-negative, got {}", self.alpha_min));
        }
        if !(self.alpha_max >= self.alpha_min) {
            return invalid(format!(
                "alpha-max ({}) must not be below alpha-min ({})",
                self.alpha_max, self.alpha_min
            ));
        }
        if self.codes.is_empty() {
            return invalid("at least one code required".into());
        }
        for (name, list, lo, hi) in [("eta", &self.eta, 0.0, 1.0), ("w", &self.w, 0.0, 1.0)] {
            if list.is_empty() {
                return invalid(format!("at least one {name} value required"));
            }
            if let Some(v) = list.iter().find(|v| !(lo..=hi).contains(*v)) {
                return invalid(format!("{name} values must lie in [{lo}, {hi}], got {v}"));
            }
        }
        if self.theta.is_empty() {
            return invalid("at least one theta value required".into());
        }
        if self.threads == Some(0) {
            return invalid("threads must be at least 1".into());
        }
        Ok(())
    }

    pub fn alphas(&self) -> Vec<f64> {
        linspace(self.alpha_min, self.alpha_max, self.alpha_steps)
    }
}
