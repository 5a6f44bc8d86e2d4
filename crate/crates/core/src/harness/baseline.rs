//! Frozen metric snapshots for non-regression checks.
//!
//! The document is UTF-8 text, one `metric=value` pair per line, with
//! `#` comments and a mandatory `format_version` entry.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::erf_study::{run_lattice_erf_study, theta_max_errors, LatticeSpec};
use super::iv_compare::{run_iv_comparison, IvGridSpec, ESTIMATORS};
use super::sweep::{run_moneyness_sweep, SweepSpec};
use crate::black_scholes::{bs_call, normalize, CallQuote, OptionTerms};
use crate::error::{Error, Result};
use crate::implied::{atm_implied_vol, implied_vol_tanh};
use crate::standardized::{chi_unchecked, StandardizedParam, ATM_EPSILON};
use crate::surrogate::{atm_call_exact, atm_call_hat, call_hat, coefficients, AtmSurrogateKind};

pub const BASELINE_FORMAT_VERSION: u32 = 1;

/// Relative tolerance of `baseline check`.
pub const BASELINE_SLACK: f64 = 0.10;

const VERSION_KEY: &str = "format_version";

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Baseline {
    pub metrics: BTreeMap<String, f64>,
}

impl Baseline {
    pub fn parse(text: &str) -> Result<Self> {
        let mut metrics = BTreeMap::new();
        let mut version = None;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("baseline line {}: expected metric=value", n + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            if key == VERSION_KEY {
                version = Some(value.parse::<u32>().map_err(|_| {
                    Error::Config(format!("baseline line {}: bad format_version {value:?}", n + 1))
                })?);
                continue;
            }
            let v: f64 = value
                .parse()
                .map_err(|_| Error::Config(format!("baseline line {}: bad value {value:?}", n + 1)))?;
            if metrics.insert(key.to_string(), v).is_some() {
                return Err(Error::Config(format!("baseline line {}: duplicate metric {key}", n + 1)));
            }
        }
        match version {
            Some(BASELINE_FORMAT_VERSION) => Ok(Self { metrics }),
            Some(v) => Err(Error::Config(format!("unsupported baseline format_version {v}"))),
            None => Err(Error::Config("baseline has no format_version".into())),
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::from("# tanhvol baseline\n");
        let _ = writeln!(s, "{VERSION_KEY}={BASELINE_FORMAT_VERSION}");
        for (k, v) in &self.metrics {
            let _ = writeln!(s, "{k}={v:e}");
        }
        s
    }

    /// Compares the metrics present in `current` against `self`.
    pub fn check(&self, current: &Baseline) -> BaselineCheck {
        let mut entries = Vec::new();
        let mut missing = Vec::new();
        for (name, &value) in &current.metrics {
            match self.metrics.get(name) {
                Some(&frozen) => entries.push(MetricCheck {
                    name: name.clone(),
                    frozen,
                    current: value,
                    ok: within_slack(frozen, value),
                }),
                None => missing.push(name.clone()),
            }
        }
        BaselineCheck { entries, missing }
    }
}

fn within_slack(frozen: f64, current: f64) -> bool {
    if frozen == 0.0 {
        current == 0.0
    } else {
        (current - frozen).abs() <= BASELINE_SLACK * frozen.abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricCheck {
    pub name: String,
    pub frozen: f64,
    pub current: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BaselineCheck {
    pub entries: Vec<MetricCheck>,
    /// Metrics computed now but absent from the frozen document.
    pub missing: Vec<String>,
}

impl BaselineCheck {
    pub fn passed(&self) -> bool {
        self.missing.is_empty() && self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &MetricCheck> {
        self.entries.iter().filter(|e| !e.ok)
    }
}

fn insert_all(map: &mut BTreeMap<String, f64>, items: Vec<(String, f64)>) {
    map.extend(items);
}

/// Metrics of the default implied-volatility comparison grid.
pub fn iv_comparison_metrics(workers: Option<usize>) -> Result<Baseline> {
    let report = run_iv_comparison(&IvGridSpec { workers, ..IvGridSpec::default() }, None)?;
    let mut metrics = BTreeMap::new();
    for (name, stats) in ESTIMATORS.iter().zip(&report.stats) {
        if *name == "oracle" {
            // Rounding-level residuals; accuracy is asserted directly elsewhere.
            metrics.insert("iv.oracle.unavailable".into(), stats.count_unavailable as f64);
        } else {
            insert_all(&mut metrics, stats.metrics(&format!("iv.{name}")));
        }
    }
    metrics.insert("iv.cells".into(), report.cells.len() as f64);
    metrics.insert("iv.skipped".into(), report.skipped as f64);
    Ok(Baseline { metrics })
}

/// Largest `|chi_hat - chi|` over a dense grid of `sigma in (0, 0.75]` at
/// `T = 0.25` and log-spaced `S/X in [0.5, 2]` outside the ATM band.
pub fn dense_chi_max_error() -> Result<f64> {
    let sqrt_t = 0.25f64.sqrt();
    let mut worst: f64 = 0.0;
    let n_m = 401;
    for i in 0..n_m {
        let log_m = (2.0f64.ln()) * (2.0 * i as f64 / (n_m - 1) as f64 - 1.0);
        if log_m.abs() < ATM_EPSILON {
            continue;
        }
        let alpha = StandardizedParam::new((2.0 * log_m.abs()).sqrt())?;
        let coeffs = coefficients(alpha)?;
        for j in 1..=750 {
            let x = 1e-3 * f64::from(j) * sqrt_t / alpha.value();
            worst = worst.max((coeffs.chi_hat(x) - chi_unchecked(alpha.value(), x)).abs());
        }
    }
    Ok(worst)
}

fn point_metrics(metrics: &mut BTreeMap<String, f64>) -> Result<()> {
    let coeffs = coefficients(StandardizedParam::new(0.5)?)?;
    metrics.insert("example.coeffs_a0.5.c1".into(), coeffs.c1);
    metrics.insert("example.coeffs_a0.5.c2".into(), coeffs.c2);
    metrics.insert("example.coeffs_a0.5.c3".into(), coeffs.c3);
    metrics.insert("example.chi_hat_dense_max_err".into(), dense_chi_max_error()?);

    let otm = normalize(&OptionTerms::new(100.0, 110.0, 0.0, 0.25)?)?;
    metrics.insert("example.call_hat_err.100_110_0.25_0.2".into(), (call_hat(otm, 0.2)? - bs_call(otm, 0.2)?).abs());

    let itm = normalize(&OptionTerms::new(100.0, 90.0, 0.0, 0.5)?)?;
    let quote = CallQuote::new(itm, bs_call(itm, 0.25)?)?;
    metrics.insert("example.tanh_iv_err.100_90_0.5_0.25".into(), (implied_vol_tanh(&quote)?.sigma - 0.25).abs());

    for kind in AtmSurrogateKind::ALL {
        let exact = atm_call_exact(100.0, 0.25, 0.2)?;
        let approx = atm_call_hat(kind, 100.0, 0.25, 0.2)?;
        metrics.insert(format!("example.atm_call_err.{}.100_0.25_0.2", kind.label()), (approx - exact).abs());
        let sigma = atm_implied_vol(kind, 100.0, 0.25, exact)?.sigma;
        metrics.insert(format!("example.atm_iv_err.{}.100_0.25_0.2", kind.label()), (sigma - 0.2).abs());
    }
    Ok(())
}

/// Every metric tracked by the frozen baseline: the default sweep, lattice
/// study and comparison grid, dense `Theta` errors on `[0, 4]`, and a few
/// single-point examples.
pub fn compute_metrics(workers: Option<usize>) -> Result<Baseline> {
    let mut metrics = BTreeMap::new();

    let sweep = run_moneyness_sweep(&SweepSpec { workers, ..SweepSpec::default() }, None)?;
    insert_all(&mut metrics, sweep.overall.metrics("sweep.all"));
    for (p, part) in sweep.parts.iter().enumerate() {
        insert_all(&mut metrics, part.stats.metrics(&format!("sweep.part{p}")));
    }

    let lattice = run_lattice_erf_study(&LatticeSpec { workers, ..LatticeSpec::default() }, None)?;
    for (kind, stats) in &lattice.per_kind {
        insert_all(&mut metrics, stats.metrics(&format!("erf.{}", kind.label())));
    }
    for (kind, err) in AtmSurrogateKind::ALL.iter().zip(theta_max_errors(4.0, 400_001)) {
        metrics.insert(format!("theta_dense.{}.max_abs", kind.label()), err);
    }

    metrics.extend(iv_comparison_metrics(workers)?.metrics);
    point_metrics(&mut metrics)?;
    Ok(Baseline { metrics })
}
