//! Hyperbolic-tangent surrogate of the standardized call family.
//!
//! `chi_hat_a(x) = (1 + tanh(phi_a(x))) / 2` with `phi_a(x) = c1 x - c2 / x + c3`.
//! The three coefficients are fixed by requiring `chi_hat_a` to share the
//! value, slope and inflection of `chi_a` at `x = 1`; they depend only on
//! `chi_a(1)` and `chi_a'(1) = a / sqrt(2 pi)`.
//!
//! At the money the call is `S erf(sigma sqrt(T/8))` and `erf` is replaced by
//! one of three tanh-based approximations, see [`AtmSurrogateKind`].

use std::f64::consts::PI;

use crate::black_scholes::NormalizedTerms;
use crate::error::{require_positive, Error, Result};
use crate::math::{erf, scaled_normal_tail, INV_SQRT_2PI, TWO_OVER_SQRT_PI};
use crate::standardized::{alpha_of, chi_at_one, scale_standardized, StandardizedParam};

/// Below this value of `chi_a(1)` the coefficient formulas are not trusted.
pub const CHI_AT_ONE_FLOOR: f64 = 1e-12;

/// Coefficients of `phi_a(x) = c1 x - c2 / x + c3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurrogateCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    alpha: StandardizedParam,
}

/// Logistic function `1 / (1 + exp(-t))`, i.e. `(1 + tanh(t/2)) / 2`.
fn logistic(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + (-t).exp())
    } else {
        let e = t.exp();
        e / (1.0 + e)
    }
}

impl SurrogateCoefficients {
    /// Tangency coefficients for `alpha`.
    ///
    /// With `k = chi(1)`, `k' = chi'(1)`, `g = k (1 - k)` and
    /// `1 - 2k = 2 exp(a^2/2) N(-a)`:
    ///
    /// ```text
    /// c2 = (1 - 2k) k'^2 / (4 g^2)
    /// c1 = k' (2 g - (1 - 2k) k') / (4 g^2)
    /// c3 = arctanh(2k - 1) + k' ((1 - 2k) k' - g) / (2 g^2)
    /// ```
    ///
    /// `arctanh(2k - 1)` is taken as `log(k / (1 - k)) / 2`, with `k` and
    /// `1 - k = 1/2 + exp(a^2/2) N(-a)` each computed without cancellation.
    pub fn for_alpha(alpha: StandardizedParam) -> Result<Self> {
        let a = alpha.value();
        let k = chi_at_one(a);
        if k.is_nan() || k < CHI_AT_ONE_FLOOR {
            return Err(Error::Conditioning { alpha: a, chi_at_one: k });
        }
        let tail = scaled_normal_tail(a);
        let one_minus_2k = 2.0 * tail;
        let one_minus_k = 0.5 + tail;
        let slope = a * INV_SQRT_2PI;

        let g = k * one_minus_k;
        let den = 4.0 * g * g;
        let c2 = one_minus_2k * slope * slope / den;
        let c1 = slope * (2.0 * g - one_minus_2k * slope) / den;
        let c3 = 0.5 * (k / one_minus_k).ln() + slope * (one_minus_2k * slope - g) / (2.0 * g * g);
        Ok(Self { c1, c2, c3, alpha })
    }

    pub fn alpha(&self) -> StandardizedParam {
        self.alpha
    }

    pub fn phi(&self, x: f64) -> f64 {
        self.c1 * x - self.c2 / x + self.c3
    }

    pub fn phi_prime(&self, x: f64) -> f64 {
        self.c1 + self.c2 / (x * x)
    }

    pub fn chi_hat(&self, x: f64) -> f64 {
        logistic(2.0 * self.phi(x))
    }

    /// `chi_hat'(x) = 2 chi_hat (1 - chi_hat) phi'(x)`.
    pub fn chi_hat_prime(&self, x: f64) -> f64 {
        let phi = self.phi(x);
        2.0 * logistic(2.0 * phi) * logistic(-2.0 * phi) * self.phi_prime(x)
    }

    /// The unique `x > 0` with `phi(x) = level`.
    ///
    /// Positive root of `c1 x^2 - (level - c3) x - c2 = 0`; for negative
    /// `level - c3` the conjugate form avoids cancellation.
    pub fn solve_phi(&self, level: f64) -> f64 {
        let d = level - self.c3;
        let root = d.hypot(2.0 * (self.c1 * self.c2).sqrt());
        if d >= 0.0 {
            (d + root) / (2.0 * self.c1)
        } else {
            2.0 * self.c2 / (root - d)
        }
    }
}

pub fn coefficients(alpha: StandardizedParam) -> Result<SurrogateCoefficients> {
    SurrogateCoefficients::for_alpha(alpha)
}

pub fn phi(coeffs: &SurrogateCoefficients, x: f64) -> Result<f64> {
    Ok(coeffs.phi(require_positive("x", x)?))
}

pub fn chi_hat(alpha: StandardizedParam, x: f64) -> Result<f64> {
    let x = require_positive("x", x)?;
    Ok(coefficients(alpha)?.chi_hat(x))
}

/// Surrogate call price for `S != X`.
pub fn call_hat(terms: NormalizedTerms, sigma: f64) -> Result<f64> {
    require_positive("sigma", sigma)?;
    let alpha = alpha_of(terms)?;
    let coeffs = coefficients(alpha)?;
    Ok(call_hat_with(&coeffs, terms, sigma))
}

pub(crate) fn call_hat_with(coeffs: &SurrogateCoefficients, terms: NormalizedTerms, sigma: f64) -> f64 {
    let x = sigma * terms.maturity().sqrt() / coeffs.alpha().value();
    scale_standardized(terms, coeffs.chi_hat(x))
}

/// Exact at-the-money call `S erf(sigma sqrt(T/8))`.
pub fn atm_call_exact(spot: f64, maturity: f64, sigma: f64) -> Result<f64> {
    require_positive("spot", spot)?;
    require_positive("maturity", maturity)?;
    require_positive("sigma", sigma)?;
    Ok(spot * erf(sigma * (maturity / 8.0).sqrt()))
}

/// Tanh-based replacements for `erf` at the money.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum AtmSurrogateKind {
    /// `tanh(2 z / sqrt(pi))`: same slope at 0 and same limit at infinity.
    Theta0,
    /// Adds the cubic term so the Taylor expansion agrees with `erf` to order 3.
    Theta1,
    /// `tanh(a z + b z^3)` with fitted constants.
    #[default]
    Theta2,
}

impl AtmSurrogateKind {
    pub const ALL: [AtmSurrogateKind; 3] = [Self::Theta0, Self::Theta1, Self::Theta2];
    pub const THETA2_A: f64 = 1.129324;
    pub const THETA2_B: f64 = 0.100303;

    pub fn label(self) -> &'static str {
        match self {
            Self::Theta0 => "theta0",
            Self::Theta1 => "theta1",
            Self::Theta2 => "theta2",
        }
    }
}

/// `(8 - 2 pi) / (3 pi^{3/2})`, the cubic coefficient of Theta1.
fn theta1_cubic() -> f64 {
    (8.0 - 2.0 * PI) / (3.0 * PI * PI.sqrt())
}

pub fn theta(kind: AtmSurrogateKind, z: f64) -> f64 {
    let arg = match kind {
        AtmSurrogateKind::Theta0 => TWO_OVER_SQRT_PI * z,
        AtmSurrogateKind::Theta1 => TWO_OVER_SQRT_PI * z + theta1_cubic() * z * z * z,
        AtmSurrogateKind::Theta2 => {
            AtmSurrogateKind::THETA2_A * z + AtmSurrogateKind::THETA2_B * z * z * z
        }
    };
    arg.tanh()
}

/// Approximate at-the-money call. `sigma = 0` is accepted and prices to zero.
pub fn atm_call_hat(kind: AtmSurrogateKind, spot: f64, maturity: f64, sigma: f64) -> Result<f64> {
    require_positive("spot", spot)?;
    require_positive("maturity", maturity)?;
    if !(sigma.is_finite() && sigma >= 0.0) {
        return Err(Error::InvalidInput(format!("sigma must be nonnegative and finite, got {sigma}")));
    }
    let arg = match kind {
        AtmSurrogateKind::Theta0 | AtmSurrogateKind::Theta1 => {
            let y = sigma * (maturity / (2.0 * PI)).sqrt();
            if kind == AtmSurrogateKind::Theta0 {
                y
            } else {
                y + (4.0 - PI) / 12.0 * y * y * y
            }
        }
        AtmSurrogateKind::Theta2 => {
            let z = sigma * (maturity / 8.0).sqrt();
            AtmSurrogateKind::THETA2_A * z + AtmSurrogateKind::THETA2_B * z * z * z
        }
    };
    Ok(spot * arg.tanh())
}
