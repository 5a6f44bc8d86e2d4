//! Reference values computed without the library: Gauss-Legendre quadrature
//! of the Gaussian density, plus a seeded sampler.

#![allow(dead_code)]

use std::f64::consts::PI;
use std::sync::OnceLock;

use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const NODES: usize = 24;

/// Nodes and weights of the `NODES`-point rule on `[-1, 1]`, by Newton
/// iteration on the Legendre polynomial.
fn rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = NODES;
        (0..n)
            .map(|i| {
                let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
                let mut dp = 0.0;
                for _ in 0..100 {
                    let (mut p0, mut p1) = (1.0, x);
                    for k in 2..=n {
                        let kf = k as f64;
                        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                        p0 = p1;
                        p1 = p2;
                    }
                    dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                    let dx = p1 / dp;
                    x -= dx;
                    if dx.abs() < 1e-16 {
                        break;
                    }
                }
                (x, 2.0 / ((1.0 - x * x) * dp * dp))
            })
            .collect()
    })
}

/// Composite Gauss-Legendre integral of `f` over `[a, b]` with `panels` panels.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + h * (p as f64 + 0.5);
        let panel: f64 = rule().iter().map(|&(x, w)| w * f(mid + 0.5 * h * x)).sum();
        total += 0.5 * h * panel;
    }
    total
}

/// `exp(a^2/2) * P(Z > a)` for `a >= 0`, as `(2 pi)^{-1/2} int_0^L exp(-s (s + 2a) / 2) ds`.
pub fn scaled_tail(a: f64) -> f64 {
    assert!(a >= 0.0);
    integrate(|s| (-0.5 * s * (s + 2.0 * a)).exp(), 0.0, 14.0, 140) / (2.0 * PI).sqrt()
}

/// Standard normal distribution function.
pub fn norm_cdf(x: f64) -> f64 {
    if x < 0.0 {
        scaled_tail(-x) * (-0.5 * x * x).exp()
    } else {
        1.0 - scaled_tail(x) * (-0.5 * x * x).exp()
    }
}

pub fn erf(z: f64) -> f64 {
    if z.abs() <= 1.0 {
        2.0 / PI.sqrt() * integrate(|t| (-t * t).exp(), 0.0, z, 8)
    } else {
        z.signum() * (1.0 - erfc(z.abs()))
    }
}

/// `erfc(z) = 2 P(Z > z sqrt 2)` for `z >= 0`.
pub fn erfc(z: f64) -> f64 {
    let a = z * std::f64::consts::SQRT_2;
    2.0 * scaled_tail(a) * (-0.5 * a * a).exp()
}

pub fn erfcx(z: f64) -> f64 {
    2.0 * scaled_tail(z * std::f64::consts::SQRT_2)
}

/// Standardized call straight from its definition; moderate arguments only.
pub fn chi(alpha: f64, x: f64) -> f64 {
    let v = 0.5 * alpha * (x - 1.0 / x);
    let u = 0.5 * alpha * (x + 1.0 / x);
    norm_cdf(v) - (0.5 * alpha * alpha).exp() * norm_cdf(-u)
}

/// Black-Scholes call with discounted strike `x`.
pub fn bs_call(s: f64, x: f64, t: f64, sigma: f64) -> f64 {
    let st = sigma * t.sqrt();
    let d1 = (s / x).ln() / st + 0.5 * st;
    s * norm_cdf(d1) - x * norm_cdf(d1 - st)
}

/// Seeded uniform sampler for the randomized suites.
pub struct Sampler(ChaCha8Rng);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform on `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform on `(lo, hi]`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        hi - (hi - lo) * self.unit()
    }

    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.uniform(lo.ln(), hi.ln()).exp()
    }
}
