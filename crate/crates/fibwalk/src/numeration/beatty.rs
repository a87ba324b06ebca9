/// Integer square root: the largest `r` with `r * r <= n`.
pub fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

/// `⌊n·φ⌋`, computed exactly as `⌊(n + isqrt(5n²)) / 2⌋`.
///
/// No floating point anywhere: `⌊n·φ⌋ = ⌊(n + n√5)/2⌋` and
/// `⌊n√5⌋ = isqrt(5n²)` (5n² is never a perfect square for n > 0).
pub fn floor_phi(n: u64) -> u64 {
    let n = n as u128;
    let r = isqrt(5 * n * n);
    u64::try_from((n + r) / 2).expect("floor_phi overflow")
}

/// `⌊n/φ⌋ = ⌊n·φ⌋ − n`.
pub fn floor_inv_phi(n: u64) -> u64 {
    floor_phi(n) - n
}

/// `⌊n·φ²⌋ = ⌊n·φ⌋ + n`.
pub fn floor_phi2(n: u64) -> u64 {
    floor_phi(n) + n
}
