//! Benchmark inputs shared by the criterion benches.

use squarestable::{FamilySpec, Graph};

/// A fixed, seeded random connected graph of order `n` with about `2n` edges.
pub fn random_graph(n: usize, seed: u64) -> Graph {
    let m = (2 * n).clamp(n.saturating_sub(1), n * (n - 1) / 2);
    FamilySpec::random_connected(n, m, seed)
        .build()
        .expect("valid random family parameters")
}
