use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::Result;
use crate::standardized::StandardizedParam;
use crate::surrogate::SurrogateCoefficients;

/// Surrogate coefficients memoized by the bit pattern of `alpha`.
///
/// Safe to share between worker threads. Values are pure functions of the
/// key, so a hit and a fresh computation are bit-identical.
#[derive(Debug, Default)]
pub struct CoefficientCache {
    entries: RwLock<HashMap<u64, SurrogateCoefficients>>,
}

impl CoefficientCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, alpha: StandardizedParam) -> Result<SurrogateCoefficients> {
        let key = alpha.value().to_bits();
        if let Some(hit) = self.entries.read().expect("cache lock").get(&key) {
            return Ok(*hit);
        }
        let coeffs = SurrogateCoefficients::for_alpha(alpha)?;
        self.entries.write().expect("cache lock").insert(key, coeffs);
        Ok(coeffs)
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
