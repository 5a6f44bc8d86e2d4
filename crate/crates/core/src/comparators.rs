//! Closed-form implied-volatility estimators from the literature, used as
//! benchmarks. All take the discounted strike `X` and write `sigma sqrt(T)` as
//! `v`.
//!
//! * Brenner & Subrahmanyam (1988), at-the-money expansion:
//!   `v = sqrt(2 pi) C / S`.
//! * Corrado & Miller (1996), quadratic improvement of the above:
//!   `v = sqrt(2 pi) / (S + X) [C - (S - X)/2 + sqrt((C - (S - X)/2)^2 - (S - X)^2 / pi)]`.
//!   Unavailable when the radicand is negative.
//! * Li (2005), cubic near-the-money formula. With `eta = X / S`,
//!   `a = sqrt(2 pi) / (1 + eta) (2 C / S + eta - 1)` and
//!   `z = cos(arccos(3 a / sqrt 32) / 3)`:
//!   `v = 2 sqrt(2) z - sqrt(8 z^2 - 6 a / (sqrt(2) z))`.
//!   Unavailable when `3 a / sqrt 32 > 1` or the radicand is negative.
//!
//! Li's later (2008) rational-function scheme would be a fourth
//! [`ComparatorKind`] variant; it is not implemented.

use std::f64::consts::{PI, SQRT_2};

use crate::black_scholes::CallQuote;
use crate::implied::{Method, VolEstimate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComparatorKind {
    BrennerSubrahmanyam,
    CorradoMiller,
    Li,
}

impl ComparatorKind {
    pub const ALL: [ComparatorKind; 3] = [Self::BrennerSubrahmanyam, Self::CorradoMiller, Self::Li];

    pub fn method(self) -> Method {
        match self {
            Self::BrennerSubrahmanyam => Method::BrennerSubrahmanyam,
            Self::CorradoMiller => Method::CorradoMiller,
            Self::Li => Method::Li,
        }
    }
}

/// Why a comparator produced no estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Unavailable {
    NegativeRadicand(f64),
    /// The arccos argument of Li's formula exceeded one.
    OutsideArccosDomain(f64),
}

/// An estimate, or a recorded failure of the formula's own domain condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComparatorOutcome {
    Available(VolEstimate),
    Unavailable(Unavailable),
}

impl ComparatorOutcome {
    pub fn sigma(&self) -> Option<f64> {
        match self {
            Self::Available(est) => Some(est.sigma),
            Self::Unavailable(_) => None,
        }
    }

    pub fn is_available(&self) -> bool {
        matches!(self, Self::Available(_))
    }
}

pub fn comparator_iv(kind: ComparatorKind, quote: &CallQuote) -> ComparatorOutcome {
    let terms = quote.terms();
    let (s, x, c) = (terms.spot(), terms.discounted_strike(), quote.price());
    let sqrt_t = terms.maturity().sqrt();
    let sqrt_2pi = (2.0 * PI).sqrt();

    let total_vol = match kind {
        ComparatorKind::BrennerSubrahmanyam => sqrt_2pi * c / s,
        ComparatorKind::CorradoMiller => {
            let half_gap = 0.5 * (s - x);
            let centered = c - half_gap;
            let radicand = centered * centered - (s - x) * (s - x) / PI;
            if radicand < 0.0 {
                return ComparatorOutcome::Unavailable(Unavailable::NegativeRadicand(radicand));
            }
            sqrt_2pi / (s + x) * (centered + radicand.sqrt())
        }
        ComparatorKind::Li => {
            let eta = x / s;
            let a = sqrt_2pi / (1.0 + eta) * (2.0 * c / s + eta - 1.0);
            let arg = 3.0 * a / 32f64.sqrt();
            if arg > 1.0 {
                return ComparatorOutcome::Unavailable(Unavailable::OutsideArccosDomain(arg));
            }
            let z = (arg.acos() / 3.0).cos();
            let radicand = 8.0 * z * z - 6.0 * a / (SQRT_2 * z);
            if radicand < 0.0 {
                return ComparatorOutcome::Unavailable(Unavailable::NegativeRadicand(radicand));
            }
            (2.0 * SQRT_2 * z - radicand.sqrt()).max(0.0)
        }
    };
    ComparatorOutcome::Available(VolEstimate { sigma: total_vol / sqrt_t, method: kind.method() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::black_scholes::{bs_call, NormalizedTerms};

    fn quote(s: f64, x: f64, t: f64, c: f64) -> CallQuote {
        CallQuote::new(NormalizedTerms::new(s, x, t).unwrap(), c).unwrap()
    }

    #[test]
    fn brenner_subrahmanyam_at_the_money() {
        let est = comparator_iv(ComparatorKind::BrennerSubrahmanyam, &quote(100.0, 100.0, 0.25, 3.9878));
        // sqrt(2 pi / 0.25) * 0.039878 = 0.1999186446...
        let sigma = est.sigma().unwrap();
        assert!((sigma - 0.199_918_644_67).abs() < 1e-10, "{sigma}");
    }

    #[test]
    fn corrado_miller_negative_radicand() {
        // deep out of the money, tiny price: (C + 50)^2 < 100^2 / pi
        let q = quote(100.0, 200.0, 0.1, 1e-6);
        assert_eq!(
            std::mem::discriminant(&comparator_iv(ComparatorKind::CorradoMiller, &q)),
            std::mem::discriminant(&ComparatorOutcome::Unavailable(Unavailable::NegativeRadicand(0.0)))
        );
    }

    #[test]
    fn li_outside_domain() {
        // ATM with C/S > sqrt(32) / (3 sqrt(2 pi)) ~ 0.752
        let q = quote(100.0, 100.0, 1.0, 80.0);
        assert!(matches!(
            comparator_iv(ComparatorKind::Li, &q),
            ComparatorOutcome::Unavailable(Unavailable::OutsideArccosDomain(_))
        ));
    }

    #[test]
    fn comparators_close_to_truth_at_the_money() {
        let t = NormalizedTerms::new(100.0, 100.0, 0.5).unwrap();
        let c = bs_call(t, 0.3).unwrap();
        let q = CallQuote::new(t, c).unwrap();
        for kind in ComparatorKind::ALL {
            let sigma = comparator_iv(kind, &q).sigma().unwrap();
            assert!((sigma - 0.3).abs() < 2e-3, "{kind:?}: {sigma}");
        }
        // Li's cubic is exact to third order at the money.
        let li = comparator_iv(ComparatorKind::Li, &q).sigma().unwrap();
        assert!((li - 0.3).abs() < 1e-4, "{li}");
    }
}
