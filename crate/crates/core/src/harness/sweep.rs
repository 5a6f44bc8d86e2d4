//! Random sweep of `|chi_hat - chi|` over moneyness and volatility.

use std::io::Write;

use rayon::prelude::*;

use super::cache::CoefficientCache;
use super::csv::{round_sig, write_row};
use super::rng::{SampleStream, RNG_NAME};
use super::stats::ErrorStats;
use super::Workers;
use crate::error::{Error, Result};
use crate::standardized::{chi_unchecked, StandardizedParam, ATM_EPSILON};

const MONEYNESS_STREAM: u64 = 1;
const SIGMA_STREAM: u64 = 2;
/// Moneyness values handled per parallel block before rows are flushed.
const BLOCK: usize = 256;

pub const SWEEP_COLUMNS: &str = "alpha,x,sigma,T,moneyness,exact,approx,abs_err";

/// Moneyness range the surrogate is studied on; wider ranges (larger alpha)
/// still run but are marked experimental in the CSV header.
pub const STUDIED_MONEYNESS: (f64, f64) = (0.5, 2.0);

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Volatilities are drawn from `(lo, hi]`.
    pub sigma_interval: (f64, f64),
    pub sigma_samples: usize,
    /// Moneyness `S/X` is log-uniform on `moneyness_range`, minus the ATM band.
    pub moneyness_range: (f64, f64),
    pub moneyness_samples: usize,
    pub maturity: f64,
    /// Number of equal-width volatility sub-intervals reported separately.
    pub parts: usize,
    pub seed: u64,
    pub workers: Option<usize>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            sigma_interval: (0.0, 1.25),
            sigma_samples: 500,
            moneyness_range: STUDIED_MONEYNESS,
            moneyness_samples: 10_000,
            maturity: 0.25,
            parts: 5,
            seed: 20_240_601,
            workers: None,
        }
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.sigma_interval;
        if !(lo.is_finite() && hi.is_finite() && lo >= 0.0 && hi >= lo && hi > 0.0) {
            return Err(Error::Config(format!("sigma interval [{lo}, {hi}] must satisfy 0 <= lo <= hi, hi > 0")));
        }
        let (mlo, mhi) = self.moneyness_range;
        if !(mlo.is_finite() && mhi.is_finite() && mlo > 0.0 && mhi > mlo) {
            return Err(Error::Config(format!("moneyness range [{mlo}, {mhi}] must satisfy 0 < lo < hi")));
        }
        if mlo.ln().abs().max(mhi.ln().abs()) < ATM_EPSILON {
            return Err(Error::Config("moneyness range lies inside the at-the-money band".into()));
        }
        if !(self.maturity.is_finite() && self.maturity > 0.0) {
            return Err(Error::Config(format!("maturity {} must be positive", self.maturity)));
        }
        if self.sigma_samples == 0 || self.moneyness_samples == 0 {
            return Err(Error::Config("sample counts must be positive".into()));
        }
        if self.parts == 0 || !self.sigma_samples.is_multiple_of(self.parts) {
            return Err(Error::Config(format!(
                "parts must be a positive divisor of sigma_samples ({}), got {}",
                self.sigma_samples, self.parts
            )));
        }
        Ok(())
    }

    /// Bounds of sub-interval `p`.
    pub fn part_bounds(&self, p: usize) -> (f64, f64) {
        let (lo, hi) = self.sigma_interval;
        let w = (hi - lo) / self.parts as f64;
        (lo + w * p as f64, if p + 1 == self.parts { hi } else { lo + w * (p + 1) as f64 })
    }

    /// Stratified volatilities: one draw per equal-width stratum, in order.
    fn sigmas(&self) -> Vec<f64> {
        let (lo, hi) = self.sigma_interval;
        let n = self.sigma_samples as f64;
        let mut rng = SampleStream::new(self.seed, SIGMA_STREAM);
        (0..self.sigma_samples)
            .map(|j| lo + (hi - lo) * (j as f64 + rng.uniform_open_closed()) / n)
            .collect()
    }

    fn moneyness(&self) -> Vec<f64> {
        let (a, b) = (self.moneyness_range.0.ln(), self.moneyness_range.1.ln());
        let mut rng = SampleStream::new(self.seed, MONEYNESS_STREAM);
        let mut out = Vec::with_capacity(self.moneyness_samples);
        while out.len() < self.moneyness_samples {
            let log_m = a + (b - a) * rng.uniform();
            if log_m.abs() >= ATM_EPSILON {
                out.push(log_m.exp());
            }
        }
        out
    }

    /// True when the range reaches beyond `STUDIED_MONEYNESS`.
    pub fn is_experimental(&self) -> bool {
        self.moneyness_range.0 < STUDIED_MONEYNESS.0 || self.moneyness_range.1 > STUDIED_MONEYNESS.1
    }

    fn header(&self) -> String {
        let experimental = if self.is_experimental() {
            format!(
                "# experimental: moneyness outside [{},{}], alpha above {:.6}\n",
                STUDIED_MONEYNESS.0,
                STUDIED_MONEYNESS.1,
                (2.0 * STUDIED_MONEYNESS.1.ln()).sqrt()
            )
        } else {
            String::new()
        };
        format!(
            "# tanhvol sweep\n# rng={RNG_NAME} seed={}\n# T={} sigma_interval=({},{}] sigma_samples={} \
             moneyness_range=[{},{}] moneyness_samples={} parts={}\n{experimental}{SWEEP_COLUMNS}",
            self.seed,
            self.maturity,
            self.sigma_interval.0,
            self.sigma_interval.1,
            self.sigma_samples,
            self.moneyness_range.0,
            self.moneyness_range.1,
            self.moneyness_samples,
            self.parts
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartStats {
    pub sigma_lo: f64,
    pub sigma_hi: f64,
    pub stats: ErrorStats,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub overall: ErrorStats,
    pub parts: Vec<PartStats>,
}

/// Runs the sweep, streaming rows to `out` when given.
///
/// Errors are rounded to the precision written in the CSV before the
/// statistics are taken, so the trailer can be recomputed from the rows.
pub fn run_moneyness_sweep(spec: &SweepSpec, mut out: Option<&mut dyn Write>) -> Result<SweepReport> {
    spec.validate()?;
    let workers = Workers::new(spec.workers)?;
    let sigmas = spec.sigmas();
    let moneyness = spec.moneyness();
    let sqrt_t = spec.maturity.sqrt();
    let cache = CoefficientCache::new();
    let part_of: Vec<usize> = (0..sigmas.len()).map(|j| j * spec.parts / sigmas.len()).collect();

    if let Some(w) = &mut out {
        writeln!(w, "{}", spec.header())?;
    }

    let mut all = Vec::with_capacity(sigmas.len() * moneyness.len());
    let mut by_part = vec![Vec::new(); spec.parts];

    for block in moneyness.chunks(BLOCK) {
        let rows: Vec<Vec<[f64; 8]>> = workers.install(|| {
            block
                .par_iter()
                .map(|&m| -> Result<Vec<[f64; 8]>> {
                    let alpha = StandardizedParam::new((2.0 * m.ln().abs()).sqrt())?;
                    let coeffs = cache.get(alpha)?;
                    let a = alpha.value();
                    Ok(sigmas
                        .iter()
                        .map(|&sigma| {
                            let x = sigma * sqrt_t / a;
                            let exact = chi_unchecked(a, x);
                            let approx = coeffs.chi_hat(x);
                            let err = round_sig((approx - exact).abs());
                            [a, x, sigma, spec.maturity, m, exact, approx, err]
                        })
                        .collect())
                })
                .collect::<Result<Vec<_>>>()
        })?;

        for per_m in rows {
            for (j, row) in per_m.iter().enumerate() {
                all.push(row[7]);
                by_part[part_of[j]].push(row[7]);
                if let Some(w) = &mut out {
                    write_row(w, row)?;
                }
            }
        }
    }

    let overall = ErrorStats::from_abs_errors(&all, 0);
    let parts: Vec<PartStats> = by_part
        .iter()
        .enumerate()
        .map(|(p, errs)| {
            let (sigma_lo, sigma_hi) = spec.part_bounds(p);
            PartStats { sigma_lo, sigma_hi, stats: ErrorStats::from_abs_errors(errs, 0) }
        })
        .collect();

    if let Some(w) = &mut out {
        writeln!(w, "{}", overall.to_comment("all"))?;
        for part in &parts {
            writeln!(w, "{}", part.stats.to_comment(&format!("sigma({},{}]", part.sigma_lo, part.sigma_hi)))?;
        }
        w.flush()?;
    }
    Ok(SweepReport { overall, parts })
}
