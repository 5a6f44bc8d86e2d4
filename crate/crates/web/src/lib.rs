//! Browser bindings for the demo page in `www/`.
//!
//! Curves come back as flat `Float64Array`s of interleaved columns so the
//! page can draw them without any serialization layer.

use tanhvol::{
    atm_call_exact, atm_call_hat, bs_call, call_hat, comparator_iv, implied_vol, in_atm_band, iv_oracle, normalize,
    theta, AtmSurrogateKind, CallQuote, ComparatorKind, OptionTerms, StandardizedParam, SurrogateCoefficients,
};
use wasm_bindgen::prelude::*;

fn atm_kind(index: u32) -> AtmSurrogateKind {
    match index {
        0 => AtmSurrogateKind::Theta0,
        1 => AtmSurrogateKind::Theta1,
        _ => AtmSurrogateKind::Theta2,
    }
}

/// `[x, chi(x), chi_hat(x)]` triples for `n` points on `(0, x_max]`.
/// Empty when `alpha` or the range is invalid.
#[wasm_bindgen]
pub fn chi_curves(alpha: f64, x_max: f64, n: u32) -> Vec<f64> {
    let Ok(a) = StandardizedParam::new(alpha) else {
        return Vec::new();
    };
    let Ok(coeffs) = SurrogateCoefficients::for_alpha(a) else {
        return Vec::new();
    };
    if !(x_max.is_finite() && x_max > 0.0) || n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(3 * n as usize);
    for i in 1..=n {
        let x = x_max * f64::from(i) / f64::from(n);
        let exact = tanhvol::chi(a, x).unwrap_or(f64::NAN);
        out.extend([x, exact, coeffs.chi_hat(x)]);
    }
    out
}

/// `[z, erf - Theta0, erf - Theta1, erf - Theta2]` for `n + 1` points on `[0, z_max]`.
#[wasm_bindgen]
pub fn erf_errors(z_max: f64, n: u32) -> Vec<f64> {
    if !(z_max.is_finite() && z_max > 0.0) || n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(4 * (n as usize + 1));
    for i in 0..=n {
        let z = z_max * f64::from(i) / f64::from(n);
        let e = tanhvol::math::erf(z);
        out.push(z);
        out.extend(AtmSurrogateKind::ALL.map(|k| e - theta(k, z)));
    }
    out
}

/// Black-Scholes price of one contract and what each estimator recovers
/// from it. Unavailable estimates are NaN; `error` is empty on success.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone, Default)]
pub struct Summary {
    pub price_bs: f64,
    pub price_tanh: f64,
    pub sigma_hat: f64,
    pub sigma_oracle: f64,
    pub sigma_li: f64,
    pub sigma_bs: f64,
    pub sigma_cm: f64,
    pub method: String,
    pub error: String,
}

fn summarize(spot: f64, strike: f64, rate: f64, maturity: f64, vol: f64, atm: u32) -> tanhvol::Result<Summary> {
    let terms = normalize(&OptionTerms::new(spot, strike, rate, maturity)?)?;
    let kind = atm_kind(atm);
    let price_bs = bs_call(terms, vol)?;
    let price_tanh = if in_atm_band(terms) {
        atm_call_hat(kind, terms.spot(), maturity, vol)?
    } else {
        call_hat(terms, vol)?
    };
    let quote = CallQuote::new(terms, price_bs)?;
    let hat = implied_vol(&quote, kind)?;
    let comp = |k| comparator_iv(k, &quote).sigma().unwrap_or(f64::NAN);
    Ok(Summary {
        price_bs,
        price_tanh,
        sigma_hat: hat.sigma,
        sigma_oracle: iv_oracle(&quote).unwrap_or(f64::NAN),
        sigma_li: comp(ComparatorKind::Li),
        sigma_bs: comp(ComparatorKind::BrennerSubrahmanyam),
        sigma_cm: comp(ComparatorKind::CorradoMiller),
        method: hat.method.label().to_string(),
        error: String::new(),
    })
}

/// `atm` selects the at-the-money formula: 0, 1 or 2 for Theta0..Theta2.
#[wasm_bindgen]
pub fn price_and_invert(spot: f64, strike: f64, rate: f64, maturity: f64, vol: f64, atm: u32) -> Summary {
    summarize(spot, strike, rate, maturity, vol, atm).unwrap_or_else(|e| Summary {
        price_bs: f64::NAN,
        price_tanh: f64::NAN,
        sigma_hat: f64::NAN,
        sigma_oracle: f64::NAN,
        sigma_li: f64::NAN,
        sigma_bs: f64::NAN,
        sigma_cm: f64::NAN,
        method: String::new(),
        error: e.to_string(),
    })
}

/// Exact ATM price `S erf(sigma sqrt(T/8))`, for the page's reference line.
#[wasm_bindgen]
pub fn atm_exact(spot: f64, maturity: f64, vol: f64) -> f64 {
    atm_call_exact(spot, maturity, vol).unwrap_or(f64::NAN)
}
