//! Numerical studies of the surrogate and the closed-form inverses.
//!
//! Every study is driven by an explicit seed, writes CSV with a commented
//! header that echoes its configuration, and produces identical bytes for any
//! worker count: samples are drawn up front from fixed streams and results
//! are gathered in sample order before anything is reduced.

pub mod baseline;
mod cache;
pub mod csv;
pub mod erf_study;
pub mod iv_compare;
mod rng;
pub mod stats;
pub mod sweep;

pub use baseline::{compute_metrics, iv_comparison_metrics, Baseline, BaselineCheck, MetricCheck, BASELINE_SLACK};
pub use cache::CoefficientCache;
pub use erf_study::{run_lattice_erf_study, theta_max_errors, ErfStudyReport, LatticeSpec};
pub use iv_compare::{run_iv_comparison, IvCell, IvComparisonReport, IvGridSpec};
pub use rng::RNG_NAME;
pub use stats::ErrorStats;
pub use sweep::{run_moneyness_sweep, SweepReport, SweepSpec, STUDIED_MONEYNESS};

use crate::black_scholes::CallQuote;
use crate::error::{Error, Result};

/// Relative gap a quote needs from both no-arbitrage bounds before its
/// volatility is considered recoverable in double precision.
pub const RESOLUTION_GAP: f64 = 1e-5;

/// Whether `C - [S - X]^+` and `S - C` both exceed `RESOLUTION_GAP * C`.
///
/// Below that, rounding of `C` at its own magnitude dominates the distance
/// to a bound and the price no longer pins down `sigma` to 1e-9.
pub fn is_resolvable(quote: &CallQuote) -> bool {
    let c = quote.price();
    quote.time_value() >= RESOLUTION_GAP * c && quote.terms().spot() - c >= RESOLUTION_GAP * c
}

/// Thread pool for a study: a dedicated one with `workers` threads, or the
/// global rayon pool when `workers` is `None`.
pub(crate) struct Workers(Option<rayon::ThreadPool>);

impl Workers {
    pub(crate) fn new(workers: Option<usize>) -> Result<Self> {
        match workers {
            None => Ok(Self(None)),
            Some(0) => Err(Error::Config("worker count must be at least 1".into())),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map(|p| Self(Some(p)))
                .map_err(|e| Error::Config(e.to_string())),
        }
    }

    pub(crate) fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match &self.0 {
            Some(pool) => pool.install(f),
            None => f(),
        }
    }
}
