//! Fixture graphs shared by the benchmarks.

use graph_energy::{generate, nanotorus, FamilySpec, Graph};

/// Nanotori of increasing size: `T[p, p]` for each `p`.
pub fn tori(ps: &[usize]) -> Vec<(String, Graph)> {
    ps.iter()
        .map(|&p| (format!("T[{p},{p}]"), nanotorus(p, p).expect("p >= 2")))
        .collect()
}

pub fn random_connected(n: usize, seed: u64) -> Graph {
    generate(&FamilySpec::RandomConnected { n, p: 0.3, seed }).expect("p = 0.3 connects quickly")
}
