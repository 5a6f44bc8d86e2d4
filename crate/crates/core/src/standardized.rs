//! The standardized call family
//!
//! `chi_a(x) = N(a/2 (x - 1/x)) - exp(a^2/2) N(-a/2 (x + 1/x))`, `x > 0`,
//!
//! to which every call with `S != X` reduces: with `a = sqrt(2 |log(S/X)|)`
//! and `x = sigma sqrt(T) / a`, the Black-Scholes price is `S chi_a(x)` when
//! `X > S` and `S - X + X chi_a(x)` when `X < S`. Each `chi_a` is a sigmoid
//! from 0 to 1, strictly increasing, with its only inflection at `x = 1`.

use std::f64::consts::PI;

use crate::black_scholes::NormalizedTerms;
use crate::error::{require_positive, Error, Result};
use crate::math::{erf, exp_neg_half_square, norm_cdf, scaled_normal_tail, INV_SQRT_2PI};

/// Half-width of the at-the-money band in `|log(S/X)|`.
pub const ATM_EPSILON: f64 = 1e-6;

/// `alpha > 0` indexing the family.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct StandardizedParam(f64);

impl StandardizedParam {
    pub fn new(alpha: f64) -> Result<Self> {
        require_positive("alpha", alpha).map(Self)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `alpha = sqrt(2 |log(S/X)|)`; fails inside the at-the-money band.
pub fn alpha_of(terms: NormalizedTerms) -> Result<StandardizedParam> {
    let log_moneyness = terms.log_moneyness();
    if log_moneyness.abs() < ATM_EPSILON {
        return Err(Error::AtmDegenerate { log_moneyness });
    }
    Ok(StandardizedParam((2.0 * log_moneyness.abs()).sqrt()))
}

fn check_point(x: f64) -> Result<f64> {
    require_positive("x", x)
}

/// `chi_a(x)` for validated inputs.
///
/// The second term is rewritten as `exp(-v^2/2) * exp(u^2/2) N(-u)` with
/// `v = a/2 (x - 1/x)` and `u = a/2 (x + 1/x)`, using
/// `a^2/2 - u^2/2 = -v^2/2`; no intermediate overflows for any `a`.
pub(crate) fn chi_unchecked(alpha: f64, x: f64) -> f64 {
    let inv = 1.0 / x;
    let v = 0.5 * alpha * (x - inv);
    let u = 0.5 * alpha * (x + inv);
    norm_cdf(v) - exp_neg_half_square(v) * scaled_normal_tail(u)
}

/// `chi_a(1) = 1/2 - exp(a^2/2) N(-a)`.
///
/// For small `a` the difference cancels; there it is evaluated as
/// `exp(a^2/2) (erf(a/sqrt 2) + expm1(-a^2/2)) / 2`, whose two terms are of
/// different order in `a`.
pub(crate) fn chi_at_one(alpha: f64) -> f64 {
    if alpha < 1.0 {
        let half_sq = 0.5 * alpha * alpha;
        0.5 * half_sq.exp() * (erf(alpha * std::f64::consts::FRAC_1_SQRT_2) + (-half_sq).exp_m1())
    } else {
        0.5 - scaled_normal_tail(alpha)
    }
}

pub(crate) fn chi_prime_unchecked(alpha: f64, x: f64) -> f64 {
    let v = 0.5 * alpha * (x - 1.0 / x);
    alpha * INV_SQRT_2PI * exp_neg_half_square(v)
}

pub fn chi(alpha: StandardizedParam, x: f64) -> Result<f64> {
    Ok(chi_unchecked(alpha.0, check_point(x)?))
}

/// `chi_a'(x) = a / sqrt(2 pi) exp(-a^2/8 (x - 1/x)^2)`.
pub fn chi_prime(alpha: StandardizedParam, x: f64) -> Result<f64> {
    Ok(chi_prime_unchecked(alpha.0, check_point(x)?))
}

/// `chi_a''(x) = a^3 / (4 sqrt(2 pi)) exp(-a^2/8 (x - 1/x)^2) (1 - x^4) / x^3`.
pub fn chi_second(alpha: StandardizedParam, x: f64) -> Result<f64> {
    let x = check_point(x)?;
    let a = alpha.0;
    let v = 0.5 * a * (x - 1.0 / x);
    let x2 = x * x;
    // (1 - x^4) / x^3 = (1 - x^2)(1 + x^2) / x^3, exact zero at x = 1.
    let shape = (1.0 - x2) * (1.0 + x2) / (x2 * x);
    Ok(a * a * a / (4.0 * (2.0 * PI).sqrt()) * exp_neg_half_square(v) * shape)
}

/// Black-Scholes price rebuilt from `chi_a`; fails inside the at-the-money band.
pub fn call_from_chi(terms: NormalizedTerms, sigma: f64) -> Result<f64> {
    require_positive("sigma", sigma)?;
    let alpha = alpha_of(terms)?;
    let x = sigma * terms.maturity().sqrt() / alpha.value();
    Ok(scale_standardized(terms, chi_unchecked(alpha.value(), x)))
}

/// Maps a standardized value back to a price: `S v` out of the money,
/// `S - X + X v` in the money.
pub(crate) fn scale_standardized(terms: NormalizedTerms, value: f64) -> f64 {
    let (s, x) = (terms.spot(), terms.discounted_strike());
    if x > s {
        s * value
    } else {
        (s - x) + x * value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::black_scholes::bs_call;

    fn alpha(a: f64) -> StandardizedParam {
        StandardizedParam::new(a).unwrap()
    }

    fn terms(s: f64, x: f64, t: f64) -> NormalizedTerms {
        NormalizedTerms::new(s, x, t).unwrap()
    }

    #[test]
    fn alpha_of_examples() {
        let a = alpha_of(terms(0.5f64.exp(), 1.0, 1.0)).unwrap();
        assert!((a.value() - 1.0).abs() < 1e-15);
        // mpmath: sqrt(2 |log(100/110)|) = 0.43660091572126795...
        let a = alpha_of(terms(100.0, 110.0, 1.0)).unwrap();
        assert!((a.value() - 0.436_600_915_721_268).abs() < 1e-14);
        assert!(matches!(alpha_of(terms(100.0, 100.0, 1.0)), Err(Error::AtmDegenerate { .. })));
        assert!(alpha_of(terms(1.0 + 1e-9, 1.0, 1.0)).is_err());
        assert!(StandardizedParam::new(0.0).is_err());
    }

    #[test]
    fn chi_at_inflection() {
        // mpmath: 1/2 - exp(1/8) N(-1/2) = 0.15038116527960193...
        let v = chi(alpha(0.5), 1.0).unwrap();
        assert!((v - 0.150_381_165_279_601_93).abs() < 1e-15, "{v}");
        for a in [0.01, 0.3, 0.99, 1.0, 1.01, 2.0, 4.5] {
            assert!((chi_at_one(a) - chi_unchecked(a, 1.0)).abs() < 1e-15, "a={a}");
        }
    }

    #[test]
    fn chi_limits() {
        for a in [0.1, 1.0, 3.0] {
            assert!(chi(alpha(a), 1e-6).unwrap() < 1e-12);
            assert!(chi(alpha(a), 1e-6).unwrap() >= 0.0);
            assert!(1.0 - chi(alpha(a), 1e8).unwrap() < 1e-12);
        }
        assert!(chi(alpha(1.0), 0.0).is_err());
        assert!(chi(alpha(1.0), -1.0).is_err());
    }

    #[test]
    fn chi_reproduces_out_of_the_money_call() {
        let t = terms(100.0, 110.0, 0.25);
        let a = alpha_of(t).unwrap();
        let via_chi = 100.0 * chi(a, 0.2 * 0.5 / a.value()).unwrap();
        assert!((via_chi - bs_call(t, 0.2).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn chi_prime_values() {
        // mpmath: 0.3 / sqrt(2 pi) = 0.11968268412042980...
        assert!((chi_prime(alpha(0.3), 1.0).unwrap() - 0.119_682_684_120_429_8).abs() < 1e-16);
        let a = alpha(0.7);
        let h = 1e-5;
        let fd = (chi(a, 1.4 + h).unwrap() - chi(a, 1.4 - h).unwrap()) / (2.0 * h);
        assert!((fd / chi_prime(a, 1.4).unwrap() - 1.0).abs() < 1e-7);
        let x = 2.7;
        assert!((chi_prime(a, x).unwrap() - chi_prime(a, 1.0 / x).unwrap()).abs() < 1e-16);
    }

    #[test]
    fn chi_second_values() {
        assert_eq!(chi_second(alpha(0.9), 1.0).unwrap(), 0.0);
        assert!(chi_second(alpha(0.5), 0.8).unwrap() > 0.0);
        assert!(chi_second(alpha(0.5), 1.3).unwrap() < 0.0);
        let a = alpha(0.4);
        let h = 1e-5;
        let fd = (chi_prime(a, 0.9 + h).unwrap() - chi_prime(a, 0.9 - h).unwrap()) / (2.0 * h);
        assert!((fd / chi_second(a, 0.9).unwrap() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn call_from_chi_both_branches() {
        for (s, x) in [(100.0, 110.0), (110.0, 100.0)] {
            let t = terms(s, x, 0.25);
            let diff = call_from_chi(t, 0.2).unwrap() - bs_call(t, 0.2).unwrap();
            assert!(diff.abs() < 1e-10, "{s}/{x}: {diff}");
        }
        assert!(call_from_chi(terms(100.0, 100.0, 0.25), 0.2).is_err());
    }

    #[test]
    fn call_at_the_inflection_point() {
        let t = terms(100.0, 110.0, 0.25);
        let a = alpha_of(t).unwrap();
        let sigma = a.value() / t.maturity().sqrt();
        let c = call_from_chi(t, sigma).unwrap();
        // mpmath: 100 chi_a(1) = 13.567956086054402...
        assert!((c - 13.567_956_086_054_403).abs() < 1e-12);
        assert!((c - 100.0 * chi(a, 1.0).unwrap()).abs() < 1e-13);
    }
}
