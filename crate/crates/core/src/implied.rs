//! Closed-form implied volatility from the tanh surrogate.
//!
//! Away from the money the surrogate equation `C_hat(sigma) = C` reduces to
//! `phi_a(sigma sqrt(T) / a) = Lambda` with
//! `Lambda = log((C - [S - X]^+) / (S - C)) / 2`, a quadratic in
//! `sigma sqrt(T) / a` with one positive root. At the money the three
//! surrogates lead to a logarithm (Theta0) or a depressed cubic (Theta1, Theta2).

use std::f64::consts::PI;

use crate::black_scholes::{CallQuote, NormalizedTerms};
use crate::error::{require_positive, Error, Result};
use crate::math::{cardano_unique_real_root, DepressedCubic};
use crate::standardized::{alpha_of, ATM_EPSILON};
use crate::surrogate::{coefficients, AtmSurrogateKind, SurrogateCoefficients};

/// Which formula produced a volatility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    TanhGeneral,
    Atm0,
    Atm1,
    Atm2,
    OracleNewton,
    BrennerSubrahmanyam,
    CorradoMiller,
    Li,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::TanhGeneral => "tanh",
            Method::Atm0 => "atm0",
            Method::Atm1 => "atm1",
            Method::Atm2 => "atm2",
            Method::OracleNewton => "oracle",
            Method::BrennerSubrahmanyam => "brenner-subrahmanyam",
            Method::CorradoMiller => "corrado-miller",
            Method::Li => "li",
        }
    }
}

impl From<AtmSurrogateKind> for Method {
    fn from(kind: AtmSurrogateKind) -> Self {
        match kind {
            AtmSurrogateKind::Theta0 => Method::Atm0,
            AtmSurrogateKind::Theta1 => Method::Atm1,
            AtmSurrogateKind::Theta2 => Method::Atm2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolEstimate {
    pub sigma: f64,
    pub method: Method,
}

/// `Lambda = log((C - [S - X]^+) / (S - C)) / 2`.
pub fn lambda_of(quote: &CallQuote) -> f64 {
    let terms = quote.terms();
    0.5 * (quote.time_value() / (terms.spot() - quote.price())).ln()
}

/// `sigma_hat = a / (2 c1 sqrt(T)) [Lambda - c3 + sqrt((Lambda - c3)^2 + 4 c1 c2)]`.
pub fn implied_vol_tanh(quote: &CallQuote) -> Result<VolEstimate> {
    let alpha = alpha_of(quote.terms())?;
    let coeffs = coefficients(alpha)?;
    Ok(implied_vol_tanh_with(&coeffs, quote))
}

pub(crate) fn implied_vol_tanh_with(coeffs: &SurrogateCoefficients, quote: &CallQuote) -> VolEstimate {
    let x = coeffs.solve_phi(lambda_of(quote));
    VolEstimate {
        sigma: coeffs.alpha().value() * x / quote.terms().maturity().sqrt(),
        method: Method::TanhGeneral,
    }
}

/// Closed-form at-the-money inverse of [`crate::atm_call_hat`].
///
/// With `L = log((S + C) / (S - C))`:
/// * Theta0: `sqrt(pi / (2T)) L`
/// * Theta1: `sqrt(2 pi / T)` times the root of `x^3 + 3px = 2q`, `p = 4/(4 - pi)`, `q = 3L/(4 - pi)`
/// * Theta2: `sqrt(8 / T)` times the root with `p = a/(3b)`, `q = L/(4b)`
///
/// `C = 0` is the boundary and returns zero.
pub fn atm_implied_vol(kind: AtmSurrogateKind, spot: f64, maturity: f64, price: f64) -> Result<VolEstimate> {
    require_positive("spot", spot)?;
    require_positive("maturity", maturity)?;
    if !(price >= 0.0 && price < spot) {
        return Err(Error::BoundViolation { price, lower: 0.0, upper: spot });
    }
    // log((1 + c) / (1 - c)) = 2 artanh(c)
    let log_ratio = 2.0 * (price / spot).atanh();
    let sigma = match kind {
        AtmSurrogateKind::Theta0 => (PI / (2.0 * maturity)).sqrt() * log_ratio,
        AtmSurrogateKind::Theta1 => {
            let cubic = DepressedCubic::new(4.0 / (4.0 - PI), 3.0 / (4.0 - PI) * log_ratio)?;
            (2.0 * PI / maturity).sqrt() * cardano_unique_real_root(cubic)
        }
        AtmSurrogateKind::Theta2 => {
            let (a, b) = (AtmSurrogateKind::THETA2_A, AtmSurrogateKind::THETA2_B);
            let cubic = DepressedCubic::new(a / (3.0 * b), log_ratio / (4.0 * b))?;
            (8.0 / maturity).sqrt() * cardano_unique_real_root(cubic)
        }
    };
    Ok(VolEstimate { sigma, method: kind.into() })
}

/// Whether the dispatcher treats these terms as at the money.
pub fn in_atm_band(terms: NormalizedTerms) -> bool {
    terms.log_moneyness().abs() < ATM_EPSILON
}

/// General formula outside the at-the-money band, the `preference` ATM
/// formula inside it (with `X` taken equal to `S`).
pub fn implied_vol(quote: &CallQuote, preference: AtmSurrogateKind) -> Result<VolEstimate> {
    let terms = quote.terms();
    if in_atm_band(terms) {
        atm_implied_vol(preference, terms.spot(), terms.maturity(), quote.price())
    } else {
        implied_vol_tanh(quote)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::black_scholes::bs_call;
    use crate::surrogate::{atm_call_exact, atm_call_hat, call_hat};

    fn terms(s: f64, x: f64, t: f64) -> NormalizedTerms {
        NormalizedTerms::new(s, x, t).unwrap()
    }

    fn quote(s: f64, x: f64, t: f64, c: f64) -> CallQuote {
        CallQuote::new(terms(s, x, t), c).unwrap()
    }

    #[test]
    fn lambda_examples() {
        // C - 0 = S - C at C = S/2 out of the money
        assert_eq!(lambda_of(&quote(100.0, 110.0, 1.0, 50.0)), 0.0);
        // in the money: C - 10 = 100 - C at C = 55
        assert_eq!(lambda_of(&quote(100.0, 90.0, 1.0, 55.0)), 0.0);
        // mpmath: log(3.9 / 96.1) / 2 = -1.6022063814203230...
        let l = lambda_of(&quote(100.0, 110.0, 0.25, 3.9));
        assert!((l + 1.602_206_381_420_323).abs() < 1e-14, "{l}");
        assert!(lambda_of(&quote(100.0, 110.0, 0.25, 100.0 - 1e-12)) > 13.0);
    }

    #[test]
    fn lambda_increasing_in_price() {
        let prices: Vec<f64> = (1..1000).map(|i| i as f64 * 0.1).collect();
        let ls: Vec<f64> = prices.iter().map(|&c| lambda_of(&quote(100.0, 110.0, 1.0, c))).collect();
        assert!(ls.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn tanh_inverse_round_trip() {
        let t = terms(100.0, 110.0, 0.25);
        let c = call_hat(t, 0.2).unwrap();
        let est = implied_vol_tanh(&CallQuote::new(t, c).unwrap()).unwrap();
        assert_eq!(est.method, Method::TanhGeneral);
        assert!((est.sigma - 0.2).abs() < 1e-9);
    }

    #[test]
    fn tanh_inverse_vanishes_at_intrinsic() {
        let near = implied_vol_tanh(&quote(110.0, 100.0, 0.25, 10.0 + 1e-10)).unwrap();
        let far = implied_vol_tanh(&quote(110.0, 100.0, 0.25, 10.0 + 1e-3)).unwrap();
        assert!(near.sigma > 0.0 && near.sigma < far.sigma && near.sigma < 0.05);
        let otm = implied_vol_tanh(&quote(100.0, 110.0, 0.25, 1e-200)).unwrap();
        assert!(otm.sigma > 0.0 && otm.sigma < 0.05);
    }

    #[test]
    fn tanh_inverse_against_exact_price() {
        let t = terms(100.0, 90.0, 0.5);
        let c = bs_call(t, 0.25).unwrap();
        let est = implied_vol_tanh(&CallQuote::new(t, c).unwrap()).unwrap();
        // Surrogate error, not rounding: the estimate is close but not exact.
        assert!((est.sigma - 0.25).abs() < 0.05, "{}", est.sigma);
    }

    #[test]
    fn atm_inverse_round_trip() {
        for kind in AtmSurrogateKind::ALL {
            assert_eq!(atm_implied_vol(kind, 100.0, 0.25, 0.0).unwrap().sigma, 0.0);
            let est = atm_implied_vol(kind, 100.0, 0.25, 3.9878).unwrap();
            let back = atm_call_hat(kind, 100.0, 0.25, est.sigma).unwrap();
            assert!((back - 3.9878).abs() < 1e-10 * 100.0, "{kind:?}");
        }
    }

    #[test]
    fn atm_inverse_against_exact_price() {
        let c = atm_call_exact(100.0, 0.25, 0.2).unwrap();
        let est = atm_implied_vol(AtmSurrogateKind::Theta1, 100.0, 0.25, c).unwrap();
        assert_eq!(est.method, Method::Atm1);
        assert!((est.sigma - 0.2).abs() < 1e-5, "{}", est.sigma);
    }

    #[test]
    fn atm_inverse_bounds() {
        for bad in [-1.0, 100.0, 150.0, f64::NAN] {
            assert!(matches!(
                atm_implied_vol(AtmSurrogateKind::Theta2, 100.0, 1.0, bad),
                Err(Error::BoundViolation { .. })
            ));
        }
    }

    #[test]
    fn dispatcher_routes_by_band() {
        let atm = implied_vol(&quote(100.0, 100.0, 1.0, 8.0), AtmSurrogateKind::Theta2).unwrap();
        assert_eq!(atm.method, Method::Atm2);
        let inside = implied_vol(&quote(1.0 + 1e-9, 1.0, 1.0, 0.08), AtmSurrogateKind::Theta1).unwrap();
        assert_eq!(inside.method, Method::Atm1);
        let general = implied_vol(&quote(1.1, 1.0, 1.0, 0.15), AtmSurrogateKind::Theta2).unwrap();
        assert_eq!(general.method, Method::TanhGeneral);
        assert!(matches!(implied_vol_tanh(&quote(100.0, 100.0, 1.0, 8.0)), Err(Error::AtmDegenerate { .. })));
    }
}
