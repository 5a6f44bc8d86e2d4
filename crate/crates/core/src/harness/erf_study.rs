//! Errors of the at-the-money surrogates against `erf`.

use std::io::Write;

use rayon::prelude::*;

use super::csv::{fmt_num, round_sig};
use super::rng::{SampleStream, RNG_NAME};
use super::stats::ErrorStats;
use super::Workers;
use crate::error::{Error, Result};
use crate::math::erf;
use crate::surrogate::{theta, AtmSurrogateKind};

/// Streams `LATTICE_STREAM_BASE + k` feed maturity `k / 12`.
const LATTICE_STREAM_BASE: u64 = 100;

pub const ERF_COLUMNS: &str = "theta,sigma,T,z,erf,approx,abs_err";

/// Lattice `sigma = step * j` (`j = 1..=sigma_count`) by `T = k / 12`
/// (`k = 1..=months`), sampled uniformly in `j` for each maturity.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSpec {
    pub sigma_step: f64,
    pub sigma_count: u64,
    pub months: u32,
    pub samples_per_maturity: usize,
    pub seed: u64,
    pub workers: Option<usize>,
}

impl Default for LatticeSpec {
    fn default() -> Self {
        Self {
            sigma_step: 1e-4,
            sigma_count: 10_000,
            months: 24,
            samples_per_maturity: 10_000,
            seed: 20_240_601,
            workers: None,
        }
    }
}

impl LatticeSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.sigma_step.is_finite() && self.sigma_step > 0.0) {
            return Err(Error::Config(format!("sigma step {} must be positive", self.sigma_step)));
        }
        if self.sigma_count == 0 || self.months == 0 || self.samples_per_maturity == 0 {
            return Err(Error::Config("lattice sizes must be positive".into()));
        }
        Ok(())
    }

    fn header(&self) -> String {
        format!(
            "# tanhvol erf-study\n# rng={RNG_NAME} seed={}\n# sigma_step={} sigma_count={} months={} \
             samples_per_maturity={}\n{ERF_COLUMNS}",
            self.seed, self.sigma_step, self.sigma_count, self.months, self.samples_per_maturity
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErfStudyReport {
    pub per_kind: Vec<(AtmSurrogateKind, ErrorStats)>,
}

impl ErfStudyReport {
    pub fn stats(&self, kind: AtmSurrogateKind) -> &ErrorStats {
        &self.per_kind.iter().find(|(k, _)| *k == kind).expect("every kind is reported").1
    }
}

struct LatticePoint {
    sigma: f64,
    maturity: f64,
    z: f64,
    exact: f64,
    approx: [f64; 3],
    err: [f64; 3],
}

pub fn run_lattice_erf_study(spec: &LatticeSpec, mut out: Option<&mut dyn Write>) -> Result<ErfStudyReport> {
    spec.validate()?;
    let workers = Workers::new(spec.workers)?;
    let per_maturity: Vec<Vec<LatticePoint>> = workers.install(|| {
        (1..=spec.months)
            .into_par_iter()
            .map(|k| {
                let maturity = f64::from(k) / 12.0;
                let root = (maturity / 8.0).sqrt();
                let mut rng = SampleStream::new(spec.seed, LATTICE_STREAM_BASE + u64::from(k));
                (0..spec.samples_per_maturity)
                    .map(|_| {
                        let sigma = spec.sigma_step * rng.integer_inclusive(1, spec.sigma_count) as f64;
                        let z = sigma * root;
                        let exact = erf(z);
                        let approx = AtmSurrogateKind::ALL.map(|kind| theta(kind, z));
                        let err = approx.map(|a| round_sig((a - exact).abs()));
                        LatticePoint { sigma, maturity, z, exact, approx, err }
                    })
                    .collect()
            })
            .collect()
    });

    if let Some(w) = &mut out {
        writeln!(w, "{}", spec.header())?;
        for point in per_maturity.iter().flatten() {
            for (i, kind) in AtmSurrogateKind::ALL.iter().enumerate() {
                let nums = [point.sigma, point.maturity, point.z, point.exact, point.approx[i], point.err[i]];
                let nums: Vec<String> = nums.iter().map(|&v| fmt_num(v)).collect();
                writeln!(w, "{},{}", kind.label(), nums.join(","))?;
            }
        }
    }

    let per_kind: Vec<(AtmSurrogateKind, ErrorStats)> = AtmSurrogateKind::ALL
        .iter()
        .enumerate()
        .map(|(i, &kind)| {
            let errs: Vec<f64> = per_maturity.iter().flatten().map(|p| p.err[i]).collect();
            (kind, ErrorStats::from_abs_errors(&errs, 0))
        })
        .collect();

    if let Some(w) = &mut out {
        for (kind, stats) in &per_kind {
            writeln!(w, "{}", stats.to_comment(kind.label()))?;
        }
        w.flush()?;
    }
    Ok(ErfStudyReport { per_kind })
}

/// Largest `|theta(z) - erf(z)|` over `points` equally spaced `z` in `[0, z_max]`.
pub fn theta_max_errors(z_max: f64, points: usize) -> [f64; 3] {
    let n = points.max(2);
    let step = z_max / (n - 1) as f64;
    (0..n)
        .into_par_iter()
        .map(|i| {
            let z = step * i as f64;
            let exact = erf(z);
            AtmSurrogateKind::ALL.map(|kind| (theta(kind, z) - exact).abs())
        })
        .reduce(|| [0.0; 3], |a, b| [a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])])
}
