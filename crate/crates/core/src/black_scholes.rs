//! Exact Black-Scholes call pricing and the iterative implied-volatility oracle
//! that every closed-form estimate is measured against.

use std::f64::consts::PI;

use crate::error::{require_finite, require_positive, Error, Result};
use crate::math::{norm_cdf, norm_pdf};

/// Lower end of the oracle's volatility bracket.
pub const ORACLE_SIGMA_MIN: f64 = 1e-8;
/// Upper end of the oracle's volatility bracket.
pub const ORACLE_SIGMA_MAX: f64 = 20.0;
pub const ORACLE_MAX_ITERATIONS: usize = 200;
/// Required price residual of the oracle, relative to spot.
pub const ORACLE_PRICE_TOLERANCE: f64 = 1e-12;

/// Raw market inputs of a European call.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptionTerms {
    pub spot: f64,
    pub strike: f64,
    /// Continuously compounded, per year.
    pub rate: f64,
    /// Years.
    pub maturity: f64,
}

impl OptionTerms {
    pub fn new(spot: f64, strike: f64, rate: f64, maturity: f64) -> Result<Self> {
        let terms = Self { spot, strike, rate, maturity };
        terms.validate()?;
        Ok(terms)
    }

    fn validate(&self) -> Result<()> {
        require_positive("spot", self.spot)?;
        require_positive("strike", self.strike)?;
        require_finite("rate", self.rate)?;
        require_positive("maturity", self.maturity)?;
        Ok(())
    }
}

/// Spot, discounted strike `X = K exp(-r T)` and maturity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedTerms {
    spot: f64,
    discounted_strike: f64,
    maturity: f64,
}

impl NormalizedTerms {
    pub fn new(spot: f64, discounted_strike: f64, maturity: f64) -> Result<Self> {
        Ok(Self {
            spot: require_positive("spot", spot)?,
            discounted_strike: require_positive("discounted strike", discounted_strike)?,
            maturity: require_positive("maturity", maturity)?,
        })
    }

    pub fn spot(&self) -> f64 {
        self.spot
    }

    pub fn discounted_strike(&self) -> f64 {
        self.discounted_strike
    }

    pub fn maturity(&self) -> f64 {
        self.maturity
    }

    /// `log(S / X)`.
    pub fn log_moneyness(&self) -> f64 {
        (self.spot / self.discounted_strike).ln()
    }

    /// `max(S - X, 0)`, the lower no-arbitrage bound of the call.
    pub fn intrinsic(&self) -> f64 {
        (self.spot - self.discounted_strike).max(0.0)
    }

    /// The same terms with `X` replaced by `S`.
    pub fn at_the_money(&self) -> Self {
        Self { discounted_strike: self.spot, ..*self }
    }
}

pub fn normalize(terms: &OptionTerms) -> Result<NormalizedTerms> {
    terms.validate()?;
    NormalizedTerms::new(
        terms.spot,
        terms.strike * (-terms.rate * terms.maturity).exp(),
        terms.maturity,
    )
}

/// A call price strictly inside `(max(S - X, 0), S)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CallQuote {
    terms: NormalizedTerms,
    price: f64,
}

impl CallQuote {
    pub fn new(terms: NormalizedTerms, price: f64) -> Result<Self> {
        let lower = terms.intrinsic();
        let upper = terms.spot;
        if !(price > lower && price < upper) {
            return Err(Error::BoundViolation { price, lower, upper });
        }
        Ok(Self { terms, price })
    }

    pub fn terms(&self) -> NormalizedTerms {
        self.terms
    }

    pub fn price(&self) -> f64 {
        self.price
    }

    /// `C - max(S - X, 0)`.
    pub fn time_value(&self) -> f64 {
        self.price - self.terms.intrinsic()
    }
}

/// Price for any `sigma >= 0`; `sigma = 0` is the payoff limit.
///
/// The in-the-money branch prices the put and adds intrinsic value, which
/// keeps the result at or above `S - X` under rounding.
pub(crate) fn call_price(terms: NormalizedTerms, sigma: f64) -> f64 {
    let NormalizedTerms { spot: s, discounted_strike: x, maturity: t } = terms;
    let sd = sigma * t.sqrt();
    if sd == 0.0 {
        return terms.intrinsic();
    }
    let d1 = (s / x).ln() / sd + 0.5 * sd;
    let d2 = d1 - sd;
    if s > x {
        let put = (x * norm_cdf(-d2) - s * norm_cdf(-d1)).max(0.0);
        (s - x) + put
    } else {
        (s * norm_cdf(d1) - x * norm_cdf(d2)).max(0.0)
    }
}

fn vega_unchecked(terms: NormalizedTerms, sigma: f64) -> f64 {
    let sqrt_t = terms.maturity.sqrt();
    let sd = sigma * sqrt_t;
    let d1 = terms.log_moneyness() / sd + 0.5 * sd;
    terms.spot * sqrt_t * norm_pdf(d1)
}

/// Black-Scholes call price `S N(d1) - X N(d2)`.
pub fn bs_call(terms: NormalizedTerms, sigma: f64) -> Result<f64> {
    require_positive("sigma", sigma)?;
    Ok(call_price(terms, sigma))
}

/// `dC/dsigma = S sqrt(T) n(d1)`.
pub fn bs_vega(terms: NormalizedTerms, sigma: f64) -> Result<f64> {
    require_positive("sigma", sigma)?;
    Ok(vega_unchecked(terms, sigma))
}

/// Implied volatility by safeguarded Newton iteration.
///
/// Starts from the Brenner-Subrahmanyam seed `sqrt(2 pi / T) C / S`,
/// keeps a bracket on `[1e-8, 20]` (widened down to zero when the quote sits
/// below the price at the lower end) and bisects whenever a Newton step would
/// leave it. Iterates until the step is at rounding level, then requires
/// `|C(sigma) - C| <= 1e-12 S`.
pub fn iv_oracle(quote: &CallQuote) -> Result<f64> {
    let terms = quote.terms;
    let target = quote.price;
    let f = |sigma: f64| call_price(terms, sigma) - target;

    let mut lo = ORACLE_SIGMA_MIN;
    let mut hi = ORACLE_SIGMA_MAX;
    if f(lo) > 0.0 {
        lo = 0.0;
    }
    if f(hi) < 0.0 {
        return Err(Error::NoConvergence { iterations: 0, residual: f(hi) });
    }

    let seed = (2.0 * PI / terms.maturity).sqrt() * target / terms.spot;
    let mut sigma = seed.clamp(ORACLE_SIGMA_MIN, hi);

    // Newton on a very flat price curve creeps; fall back to bisection
    // whenever two steps have not halved the bracket.
    let mut widths = [f64::INFINITY; 2];
    for iteration in 0..ORACLE_MAX_ITERATIONS {
        let value = f(sigma);
        if value == 0.0 {
            return Ok(sigma);
        }
        if value > 0.0 {
            hi = sigma;
        } else {
            lo = sigma;
        }

        let vega = if sigma > 0.0 { vega_unchecked(terms, sigma) } else { 0.0 };
        let newton = sigma - value / vega;
        let stalled = hi - lo > 0.5 * widths[0];
        widths = [widths[1], hi - lo];
        let next = if vega > 0.0 && newton > lo && newton < hi && !stalled {
            newton
        } else {
            0.5 * (lo + hi)
        };

        let step = (next - sigma).abs();
        let width = hi - lo;
        sigma = next;
        if step <= 4.0 * f64::EPSILON * sigma || width <= 4.0 * f64::EPSILON * hi {
            let residual = f(sigma);
            if residual.abs() <= ORACLE_PRICE_TOLERANCE * terms.spot {
                return Ok(sigma);
            }
            return Err(Error::NoConvergence { iterations: iteration + 1, residual });
        }
    }
    Err(Error::NoConvergence { iterations: ORACLE_MAX_ITERATIONS, residual: f(sigma) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(s: f64, x: f64, t: f64) -> NormalizedTerms {
        NormalizedTerms::new(s, x, t).unwrap()
    }

    #[test]
    fn normalize_discounts_the_strike() {
        let n = normalize(&OptionTerms::new(100.0, 100.0, 0.0, 0.25).unwrap()).unwrap();
        assert_eq!(n, terms(100.0, 100.0, 0.25));

        let n = normalize(&OptionTerms::new(100.0, 100.0, 0.05, 1.0).unwrap()).unwrap();
        // mpmath: 100 exp(-0.05) = 95.122942450071400909...
        assert!((n.discounted_strike() - 95.122_942_450_071_4).abs() < 1e-12);

        for t in [0.01, 1.0, 30.0] {
            let n = normalize(&OptionTerms { spot: 1.0, strike: 1.0, rate: 0.0, maturity: t }).unwrap();
            assert_eq!(n.discounted_strike(), 1.0);
        }
    }

    #[test]
    fn invalid_terms_are_rejected() {
        assert!(OptionTerms::new(0.0, 100.0, 0.0, 1.0).is_err());
        assert!(OptionTerms::new(100.0, -1.0, 0.0, 1.0).is_err());
        assert!(OptionTerms::new(100.0, 100.0, 0.0, 0.0).is_err());
        assert!(OptionTerms::new(100.0, 100.0, f64::NAN, 1.0).is_err());
        let bad = OptionTerms { spot: 100.0, strike: 100.0, rate: 0.0, maturity: -1.0 };
        assert!(matches!(normalize(&bad), Err(Error::InvalidInput(_))));
        assert!(bs_call(terms(100.0, 100.0, 1.0), 0.0).is_err());
        assert!(bs_vega(terms(100.0, 100.0, 1.0), -0.1).is_err());
    }

    #[test]
    fn atm_price_matches_extended_precision() {
        // mpmath: 100 erf(0.2 sqrt(0.25 / 8)) = 3.98776116767449254...
        let c = bs_call(terms(100.0, 100.0, 0.25), 0.2).unwrap();
        assert!((c - 3.987_761_167_674_492_5).abs() < 1e-13);
    }

    #[test]
    fn price_limits() {
        let itm = terms(110.0, 100.0, 1.0);
        assert!((bs_call(itm, 1e-6).unwrap() - 10.0).abs() < 1e-12);
        let c = bs_call(itm, 200.0).unwrap();
        assert!((c - 110.0).abs() < 1e-9 && c <= 110.0);
    }

    #[test]
    fn vega_matches_finite_difference() {
        let t = terms(100.0, 100.0, 0.25);
        let h = 1e-5;
        let fd = (bs_call(t, 0.2 + h).unwrap() - bs_call(t, 0.2 - h).unwrap()) / (2.0 * h);
        let v = bs_vega(t, 0.2).unwrap();
        assert!((fd / v - 1.0).abs() < 1e-6);
    }

    #[test]
    fn vega_is_invariant_under_spot_strike_swap() {
        // S n(d1) = X n(d2), and swapping S and X maps d1 to -d2.
        let a = bs_vega(terms(100.0, 120.0, 1.0), 0.3).unwrap();
        let b = bs_vega(terms(120.0, 100.0, 1.0), 0.3).unwrap();
        assert!((a / b - 1.0).abs() < 1e-13, "{a} vs {b}");
    }

    #[test]
    fn quote_bounds() {
        let t = terms(100.0, 110.0, 0.25);
        assert!(CallQuote::new(t, 2.0).is_ok());
        assert!(matches!(CallQuote::new(t, 0.0), Err(Error::BoundViolation { .. })));
        assert!(CallQuote::new(t, 100.0).is_err());
        assert!(CallQuote::new(terms(110.0, 100.0, 0.25), 10.0).is_err());
        assert!(CallQuote::new(t, f64::NAN).is_err());
    }

    #[test]
    fn oracle_round_trip() {
        let t = terms(100.0, 90.0, 0.5);
        let c = bs_call(t, 0.2).unwrap();
        let sigma = iv_oracle(&CallQuote::new(t, c).unwrap()).unwrap();
        assert!((sigma - 0.2).abs() < 1e-10);
    }

    #[test]
    fn oracle_residual_on_quoted_price() {
        let t = terms(100.0, 110.0, 0.25);
        let q = CallQuote::new(t, 2.0).unwrap();
        let sigma = iv_oracle(&q).unwrap();
        assert!((bs_call(t, sigma).unwrap() - 2.0).abs() <= 1e-12 * 100.0);
    }

    #[test]
    fn oracle_goes_to_zero_near_intrinsic() {
        let t = terms(110.0, 100.0, 0.25);
        let far = iv_oracle(&CallQuote::new(t, 10.0 + 1e-3).unwrap()).unwrap();
        let near = iv_oracle(&CallQuote::new(t, 10.0 + 1e-9).unwrap()).unwrap();
        assert!(near < far && near < 0.1);

        // ATM quote below the price at sigma = 1e-8: the bracket widens to zero.
        let atm = terms(100.0, 100.0, 1.0);
        let tiny = iv_oracle(&CallQuote::new(atm, 1e-8).unwrap()).unwrap();
        assert!(tiny > 0.0 && tiny < 1e-8);
        assert!((call_price(atm, tiny) - 1e-8).abs() < 1e-12 * 100.0);
    }

    #[test]
    fn oracle_converges_on_deep_otm_quotes() {
        for (strike, t, sigma) in [(500.0, 0.01, 0.5), (500.0, 0.05, 0.3), (300.0, 0.1, 0.2)] {
            let tm = terms(100.0, strike, t);
            let c = call_price(tm, sigma);
            let back = iv_oracle(&CallQuote::new(tm, c).unwrap()).unwrap();
            assert!((back - sigma).abs() < 1e-12, "{strike} {t}: {back}");
        }
    }
}
