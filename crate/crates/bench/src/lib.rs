//! Shared fixtures for the criterion benches.

use lingtruth_core::AlgebraConfig;

/// The configurations the benches sweep: LIA and a middle QLIA for each n.
pub fn sweep(max_n: u32) -> Vec<AlgebraConfig> {
    let mut out = Vec::new();
    for n in [2, 4, max_n] {
        out.push(AlgebraConfig::lia(n));
        out.push(AlgebraConfig::qlia(n, n / 2).expect("1 <= n/2 <= n-1 for n >= 2"));
    }
    out
}
