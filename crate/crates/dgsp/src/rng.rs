//! Counter-based random number generation.
//!
//! Every random quantity in this crate is a pure function of `(seed, counter)`,
//! computed through a splitmix64-style bit mixer. There is no generator state to
//! advance, so parallel Monte-Carlo runs and different thread counts always see
//! the same values, and results are byte-identical across platforms.

/// Mix a seed and counter into a uniformly distributed 64-bit word
/// (splitmix64 finalizer applied to `seed + counter·golden_gamma`).
pub fn mix64(seed: u64, counter: u64) -> u64 {
    let mut z = seed.wrapping_add(counter.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform draw in the half-open interval (0, 1]; never returns 0, so it is
/// safe inside a logarithm.
pub fn uniform01(seed: u64, counter: u64) -> f64 {
    // 53 significant bits; +1 shifts the support from [0,1) to (0,1].
    ((mix64(seed, counter) >> 11) + 1) as f64 / (1u64 << 53) as f64
}

/// The i-th draw from a standard normal distribution for this seed, via the
/// Box–Muller transform over counters (2i, 2i+1).
pub fn standard_normal(seed: u64, i: u64) -> f64 {
    let u1 = uniform01(seed, 2 * i);
    let u2 = uniform01(seed, 2 * i + 1);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}
