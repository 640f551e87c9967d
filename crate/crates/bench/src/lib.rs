//! Fixed inputs for the benchmarks.

use springer_sing::LinkPattern;

/// Singular maximal patterns of growing size, each with a short label.
pub fn singular_samples() -> Vec<(&'static str, LinkPattern)> {
    [
        ("n6", "n=6 (2,3)(4,5)"),
        ("n8", "n=8 (2,3)(4,5)(6,7)"),
        ("n10", "n=10 (2,3)(4,5)(6,7)(8,9)"),
        ("n12", "n=12 (2,9)(3,6)(4,5)(7,8)(10,11)"),
        ("n12-chain", "n=12 (2,3)(4,5)(6,7)(8,9)(10,11)"),
    ]
    .into_iter()
    .map(|(name, s)| (name, s.parse().expect("sample patterns parse")))
    .collect()
}

/// Every maximal pattern on `n` points, over all k.
pub fn maximal(n: usize) -> Vec<LinkPattern> {
    (0..=n / 2)
        .flat_map(|k| LinkPattern::enumerate(n, k, true).expect("k <= n/2"))
        .collect()
}
