//! Scalar special functions shared by the pricing and inversion modules.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};

/// `1 / sqrt(2 pi)`.
pub const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;

/// `2 / sqrt(pi)`, the slope of `erf` at the origin.
pub const TWO_OVER_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;

/// `exp(-x^2 / 2)` with `x^2` split exactly so the exponent carries no rounding.
pub(crate) fn exp_neg_half_square(x: f64) -> f64 {
    let hi = x * x;
    let lo = x.mul_add(x, -hi);
    (-0.5 * hi).exp() * (1.0 - 0.5 * lo)
}

/// Error function.
pub fn erf(z: f64) -> f64 {
    libm::erf(z)
}

/// Complementary error function `1 - erf(z)`, accurate in relative terms in the upper tail.
pub fn erfc(z: f64) -> f64 {
    libm::erfc(z)
}

/// Scaled complementary error function `exp(z^2) * erfc(z)`.
///
/// Finite for every `z >= 0` and decays like `1 / (z sqrt(pi))`; the
/// unscaled product would underflow past `z ~ 26.5`.
pub fn erfcx(z: f64) -> f64 {
    if z.is_nan() {
        return f64::NAN;
    }
    if z < 0.0 {
        // exp(z^2) * (2 - erfc(-z))
        let hi = z * z;
        let lo = z.mul_add(z, -hi);
        return 2.0 * hi.exp() * (1.0 + lo) - erfcx(-z);
    }
    if z < 26.0 {
        let hi = z * z;
        let lo = z.mul_add(z, -hi);
        return hi.exp() * (1.0 + lo) * erfc(z);
    }
    // Asymptotic series; at z >= 26 the ninth term is below 1e-20.
    let inv2z2 = 0.5 / (z * z);
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..10 {
        term *= -((2 * k - 1) as f64) * inv2z2;
        sum += term;
    }
    sum / (z * PI.sqrt())
}

/// Standard normal density.
pub fn norm_pdf(x: f64) -> f64 {
    INV_SQRT_2PI * exp_neg_half_square(x)
}

/// Standard normal CDF `N(x)`.
///
/// Evaluated through `erfc`; below `x = -1` the tail is rebuilt from
/// `erfcx` and an exactly split Gaussian factor, so relative accuracy holds
/// far into the lower tail.
pub fn norm_cdf(x: f64) -> f64 {
    if x >= -1.0 {
        0.5 * erfc(-x * FRAC_1_SQRT_2)
    } else if x > -40.0 {
        0.5 * erfcx(-x * FRAC_1_SQRT_2) * exp_neg_half_square(x)
    } else {
        0.0
    }
}

/// `exp(a^2 / 2) * N(-a)` for `a >= 0`, without overflow or underflow.
pub fn scaled_normal_tail(a: f64) -> f64 {
    0.5 * erfcx(a * FRAC_1_SQRT_2)
}

/// Inverse hyperbolic tangent on `(-1, 1)`.
pub fn arctanh(x: f64) -> Result<f64> {
    if x.is_nan() || x.abs() >= 1.0 {
        return Err(Error::Domain { function: "arctanh", value: x });
    }
    Ok(x.atanh())
}

/// The cubic `x^3 + 3 p x = 2 q` with `p > 0`, which has exactly one real root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedCubic {
    p: f64,
    q: f64,
}

impl DepressedCubic {
    pub fn new(p: f64, q: f64) -> Result<Self> {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::Domain { function: "depressed cubic (p must be > 0)", value: p });
        }
        if !q.is_finite() {
            return Err(Error::Domain { function: "depressed cubic (q must be finite)", value: q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `x^3 + 3 p x - 2 q`.
    pub fn residual(&self, x: f64) -> f64 {
        x * x * x + 3.0 * self.p * x - 2.0 * self.q
    }
}

/// Unique real root of `x^3 + 3 p x = 2 q`.
///
/// Cardano gives `x = A - B` with `A = cbrt(r + q)`, `B = cbrt(r - q)` and
/// `r = sqrt(p^3 + q^2)`. Since `A B = p` and `A^3 - B^3 = 2 q`, the root is
/// also `2 q / (A^2 + p + B^2)`, which has no cancellation for either sign
/// of `q`. One Newton step polishes the last ulp.
pub fn cardano_unique_real_root(cubic: DepressedCubic) -> f64 {
    let DepressedCubic { p, q } = cubic;
    if q == 0.0 {
        return 0.0;
    }
    let r = (p * p.sqrt()).hypot(q);
    let a = (r + q.abs()).cbrt();
    let b = p / a;
    let x = q.signum() * 2.0 * q.abs() / (a * a + p + b * b);

    let f = cubic.residual(x);
    let df = 3.0 * (x * x + p);
    let polished = x - f / df;
    if cubic.residual(polished).abs() <= f.abs() {
        polished
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_cdf_reference_points() {
        assert_eq!(norm_cdf(0.0), 0.5);
        // mpmath, 40 digits: 0.97500210485177956586...
        assert!((norm_cdf(1.96) - 0.975_002_104_851_779_6).abs() < 1e-15);
        let x = 0.7;
        assert!((norm_cdf(-x) - (1.0 - norm_cdf(x))).abs() <= 1e-15);
    }

    #[test]
    fn norm_cdf_deep_tail_is_relative_accurate() {
        // mpmath: N(-10) = 7.6198530241605260...e-24
        let v = norm_cdf(-10.0);
        assert!((v / 7.619_853_024_160_526e-24 - 1.0).abs() < 1e-14, "{v:e}");
        assert_eq!(norm_cdf(-50.0), 0.0);
        assert_eq!(norm_cdf(50.0), 1.0);
    }

    #[test]
    fn erf_reference_points() {
        assert_eq!(erf(0.0), 0.0);
        assert!((erf(1.0) - 0.842_700_792_949_714_9).abs() < 1e-15);
        let z = 0.5;
        assert!((erf(z) - (2.0 * norm_cdf(z * 2f64.sqrt()) - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn erfcx_is_continuous_across_branches() {
        // mpmath: erfcx(26) = 0.021685...; compare both sides of the switch.
        let left = erfcx(26.0 - 1e-12);
        let right = erfcx(26.0);
        assert!((left / right - 1.0).abs() < 1e-13);
        // mpmath: erfcx(3) = 0.17900115118138995...
        assert!((erfcx(3.0) / 0.179_001_151_181_389_95 - 1.0).abs() < 1e-14);
        // mpmath: erfcx(-1) = 5.00898008076228...
        assert!((erfcx(-1.0) / 5.008_980_080_762_283 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn arctanh_values_and_domain() {
        assert_eq!(arctanh(0.0).unwrap(), 0.0);
        assert!((arctanh(0.5).unwrap() - 0.549_306_144_334_054_8).abs() < 1e-15);
        assert!((arctanh(0.3f64.tanh()).unwrap() - 0.3).abs() < 1e-15);
        assert!(matches!(arctanh(1.0), Err(Error::Domain { .. })));
        assert!(matches!(arctanh(-1.5), Err(Error::Domain { .. })));
        assert!(arctanh(f64::NAN).is_err());
    }

    #[test]
    fn cardano_examples() {
        let root = |p, q| cardano_unique_real_root(DepressedCubic::new(p, q).unwrap());
        assert_eq!(root(1.0, 0.0), 0.0);
        assert!((root(1.0, 2.0) - 1.0).abs() < 1e-15);
        assert!((root(1.0, -2.0) + 1.0).abs() < 1e-15);

        let p = 4.0 / (4.0 - PI);
        let q = 3.0 / (4.0 - PI) * 0.1;
        let c = DepressedCubic::new(p, q).unwrap();
        let x = cardano_unique_real_root(c);
        assert!(c.residual(x).abs() <= 1e-12 * (2.0 * q).abs().max(1.0));
        assert!(x > 0.0);
    }

    #[test]
    fn cardano_rejects_nonpositive_p() {
        assert!(DepressedCubic::new(0.0, 1.0).is_err());
        assert!(DepressedCubic::new(-2.0, 1.0).is_err());
        assert!(DepressedCubic::new(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn cardano_large_q_keeps_digits() {
        // x^3 + 3x = 2q with x = 1e4: q = (1e12 + 3e4) / 2
        let c = DepressedCubic::new(1.0, (1e12 + 3e4) / 2.0).unwrap();
        let x = cardano_unique_real_root(c);
        assert!((x - 1e4).abs() < 1e-10);
    }
}
