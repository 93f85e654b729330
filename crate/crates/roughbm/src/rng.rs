//! Deterministic random number streams.
//!
//! Every sampling routine in the crate derives its stream from a single
//! top-level seed combined with a stable label hash and a replication index.
//! ChaCha8 is counter-based, so distinct streams never share state and the
//! same (seed, label, index) triple reproduces bit-identical draws on every
//! platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// FNV-1a. `std::hash` is not stable across releases, this is.
pub fn stable_hash(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Derive a substream seed from (seed, experiment label, replication index).
pub fn derive_seed(seed: u64, label: &str, replication: u64) -> u64 {
    let mut bytes = Vec::with_capacity(label.len() + 8);
    bytes.extend_from_slice(label.as_bytes());
    bytes.extend_from_slice(&replication.to_le_bytes());
    seed ^ stable_hash(&bytes)
}

pub fn stream(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` i.i.d. standard normal draws from the stream keyed by `seed`.
pub fn standard_normals(seed: u64, count: usize) -> Vec<f64> {
    use rand::Rng;
    let mut rng = stream(seed);
    (0..count)
        .map(|_| rng.sample(rand_distr::StandardNormal))
        .collect()
}
