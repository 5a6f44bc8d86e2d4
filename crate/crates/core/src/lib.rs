//! Black-Scholes call pricing through a one-parameter standardized call
//! family, a hyperbolic-tangent surrogate of that family, and the closed-form
//! implied-volatility inverses that the surrogate admits.
//!
//! The crate is organized bottom-up:
//!
//! * [`math`] - normal CDF, error functions, `arctanh` and the depressed-cubic root.
//! * [`black_scholes`] - exact pricing, vega and a safeguarded Newton oracle.
//! * [`standardized`] - the family `chi_alpha(x)` and its derivatives.
//! * [`surrogate`] - the tanh surrogate, approximate calls and the at-the-money variants.
//! * [`implied`] - closed-form implied volatility and the branch dispatcher.
//! * [`comparators`] - literature closed-form estimators used as benchmarks.
//! * [`harness`] - seeded error sweeps, CSV output and frozen baselines.

pub mod black_scholes;
pub mod comparators;
mod error;
#[cfg(feature = "harness")]
pub mod harness;
pub mod implied;
pub mod math;
pub mod standardized;
pub mod surrogate;

pub use black_scholes::{bs_call, bs_vega, iv_oracle, normalize, CallQuote, NormalizedTerms, OptionTerms};
pub use comparators::{comparator_iv, ComparatorKind, ComparatorOutcome, Unavailable};
pub use error::{Error, Result};
pub use implied::{atm_implied_vol, implied_vol, in_atm_band, implied_vol_tanh, lambda_of, Method, VolEstimate};
pub use standardized::{alpha_of, call_from_chi, chi, chi_prime, chi_second, StandardizedParam, ATM_EPSILON};
pub use surrogate::{
    atm_call_exact, atm_call_hat, call_hat, chi_hat, coefficients, theta, AtmSurrogateKind,
    SurrogateCoefficients,
};
