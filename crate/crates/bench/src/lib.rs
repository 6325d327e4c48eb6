//! Shared inputs for the criterion benches under `benches/`.

use iseki_core::{builtin_semirings, named, FiniteSemiring};

/// The builtin catalog plus a few larger rings that stress the closed-set build.
pub fn bench_semirings() -> Vec<FiniteSemiring> {
    let mut v = builtin_semirings();
    v.push(named::zmod(6));
    v.push(named::chain(8));
    v.push(named::truncated(6));
    v
}
