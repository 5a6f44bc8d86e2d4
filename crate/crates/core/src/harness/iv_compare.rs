//! Implied-volatility estimators compared on Black-Scholes prices.

use std::io::Write;

use rayon::prelude::*;

use super::csv::{fmt_num, round_sig};
use super::stats::ErrorStats;
use super::{is_resolvable, Workers};
use crate::black_scholes::{bs_call, iv_oracle, normalize, CallQuote, OptionTerms};
use crate::comparators::{comparator_iv, ComparatorKind};
use crate::error::{Error, Result};
use crate::implied::implied_vol;
use crate::surrogate::AtmSurrogateKind;

pub const IV_COLUMNS: &str = "S,X,T,sigma_true,C,sigma_hat,sigma_li,sigma_bs,sigma_cm,sigma_oracle,availability_flags";

/// Estimators in column order; `availability_flags` has one `1`/`0` per entry.
pub const ESTIMATORS: [&str; 5] = ["hat", "li", "bs", "cm", "oracle"];

#[derive(Debug, Clone, PartialEq)]
pub struct IvGridSpec {
    pub spot: f64,
    pub rate: f64,
    /// Moneyness values `S/X`; strikes are `S / m`.
    pub moneyness: Vec<f64>,
    pub maturities: Vec<f64>,
    pub sigmas: Vec<f64>,
    /// Formula used by `sigma_hat` inside the at-the-money band.
    pub atm_kind: AtmSurrogateKind,
    pub workers: Option<usize>,
}

impl Default for IvGridSpec {
    fn default() -> Self {
        Self {
            spot: 100.0,
            rate: 0.0,
            moneyness: vec![0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 1.0, 1.05, 1.1, 1.25, 1.5, 2.0],
            maturities: vec![0.1, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5],
            sigmas: (0..=11).map(|i| 0.15 + 0.1 * f64::from(i)).collect(),
            atm_kind: AtmSurrogateKind::default(),
            workers: None,
        }
    }
}

impl IvGridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.moneyness.is_empty() || self.maturities.is_empty() || self.sigmas.is_empty() {
            return Err(Error::Config("iv comparison grid is empty".into()));
        }
        let positive = |v: &f64| v.is_finite() && *v > 0.0;
        if !positive(&self.spot)
            || !self.rate.is_finite()
            || !self.moneyness.iter().all(positive)
            || !self.maturities.iter().all(positive)
            || !self.sigmas.iter().all(positive)
        {
            return Err(Error::Config("iv comparison grid values must be positive and finite".into()));
        }
        Ok(())
    }

    fn header(&self) -> String {
        let list = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        format!(
            "# tanhvol iv-compare\n# S={} r={} atm={}\n# moneyness={}\n# T={}\n# sigma={}\n\
             # availability_flags order: {}\n{IV_COLUMNS}",
            self.spot,
            self.rate,
            self.atm_kind.label(),
            list(&self.moneyness),
            list(&self.maturities),
            list(&self.sigmas),
            ESTIMATORS.join(",")
        )
    }
}

/// One grid cell. Estimates are `None` when the method is unavailable.
#[derive(Debug, Clone, PartialEq)]
pub struct IvCell {
    pub spot: f64,
    pub strike: f64,
    pub maturity: f64,
    pub sigma_true: f64,
    pub price: f64,
    pub sigma_hat: Option<f64>,
    pub sigma_li: Option<f64>,
    pub sigma_bs: Option<f64>,
    pub sigma_cm: Option<f64>,
    pub sigma_oracle: Option<f64>,
}

impl IvCell {
    pub fn estimates(&self) -> [Option<f64>; 5] {
        [self.sigma_hat, self.sigma_li, self.sigma_bs, self.sigma_cm, self.sigma_oracle]
    }

    pub fn flags(&self) -> String {
        self.estimates().iter().map(|e| if e.is_some() { '1' } else { '0' }).collect()
    }

    fn csv_line(&self) -> String {
        let mut fields: Vec<String> = [self.spot, self.strike, self.maturity, self.sigma_true, self.price]
            .iter()
            .map(|&v| fmt_num(v))
            .collect();
        fields.extend(self.estimates().iter().map(|e| fmt_num(e.unwrap_or(f64::NAN))));
        fields.push(self.flags());
        fields.join(",")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IvComparisonReport {
    pub cells: Vec<IvCell>,
    /// Grid points whose price sits too close to a bound to be resolvable.
    pub skipped: usize,
    /// Absolute errors against `sigma_true`, in [`ESTIMATORS`] order.
    pub stats: [ErrorStats; 5],
}

fn evaluate(spec: &IvGridSpec, m: f64, t: f64, sigma: f64) -> Result<Option<IvCell>> {
    let strike = spec.spot / m;
    let terms = normalize(&OptionTerms::new(spec.spot, strike, spec.rate, t)?)?;
    let price = bs_call(terms, sigma)?;
    let quote = match CallQuote::new(terms, price) {
        Ok(q) if is_resolvable(&q) => q,
        _ => return Ok(None),
    };
    let comp = |k| comparator_iv(k, &quote).sigma();
    Ok(Some(IvCell {
        spot: spec.spot,
        strike,
        maturity: t,
        sigma_true: sigma,
        price,
        sigma_hat: implied_vol(&quote, spec.atm_kind).ok().map(|e| e.sigma),
        sigma_li: comp(ComparatorKind::Li),
        sigma_bs: comp(ComparatorKind::BrennerSubrahmanyam),
        sigma_cm: comp(ComparatorKind::CorradoMiller),
        sigma_oracle: iv_oracle(&quote).ok(),
    }))
}

/// Prices every `(m, T, sigma)` cell with `bs_call` and inverts it with each
/// estimator. Cells are ordered by moneyness, then maturity, then volatility.
pub fn run_iv_comparison(spec: &IvGridSpec, mut out: Option<&mut dyn Write>) -> Result<IvComparisonReport> {
    spec.validate()?;
    let workers = Workers::new(spec.workers)?;
    let points: Vec<(f64, f64, f64)> = spec
        .moneyness
        .iter()
        .flat_map(|&m| spec.maturities.iter().flat_map(move |&t| spec.sigmas.iter().map(move |&s| (m, t, s))))
        .collect();
    let evaluated: Vec<Option<IvCell>> = workers.install(|| {
        points
            .par_iter()
            .map(|&(m, t, s)| evaluate(spec, m, t, s))
            .collect::<Result<Vec<_>>>()
    })?;
    let skipped = evaluated.iter().filter(|c| c.is_none()).count();
    let cells: Vec<IvCell> = evaluated.into_iter().flatten().collect();

    let stats = std::array::from_fn(|i| {
        let errs: Vec<f64> = cells
            .iter()
            .filter_map(|c| c.estimates()[i].map(|e| round_sig((e - c.sigma_true).abs())))
            .collect();
        ErrorStats::from_abs_errors(&errs, cells.len() - errs.len())
    });

    if let Some(w) = &mut out {
        writeln!(w, "{}", spec.header())?;
        for cell in &cells {
            writeln!(w, "{}", cell.csv_line())?;
        }
        writeln!(w, "# cells={} skipped_unresolvable={}", cells.len(), skipped)?;
        for (name, s) in ESTIMATORS.iter().zip(&stats) {
            writeln!(w, "{}", s.to_comment(name))?;
        }
        w.flush()?;
    }
    Ok(IvComparisonReport { cells, skipped, stats })
}
