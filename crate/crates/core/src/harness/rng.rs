use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Name of the generator, echoed in CSV headers.
pub const RNG_NAME: &str = "chacha8";

/// A ChaCha8 keystream selected by `(seed, stream)`.
///
/// ChaCha is a counter-mode generator, so distinct streams under one seed
/// are independent and each can be regenerated on any thread.
pub(crate) struct SampleStream(ChaCha8Rng);

impl SampleStream {
    pub(crate) fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self(rng)
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub(crate) fn uniform(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `(0, 1]`.
    pub(crate) fn uniform_open_closed(&mut self) -> f64 {
        1.0 - self.uniform()
    }

    /// Uniform on `lo..=hi`.
    pub(crate) fn integer_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        let span = (hi - lo + 1) as u128;
        lo + ((self.0.next_u64() as u128 * span) >> 64) as u64
    }
}
