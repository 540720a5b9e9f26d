//! Standard graph families, seeded random families and the achiral polyhex
//! nanotorus.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::GraphRng;

/// Resample cap for the rejection step of the random connected families.
pub const MAX_RESAMPLES: usize = 10_000;

/// A fully parameterised graph family member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `K_{1,n-1}`: `n` counts all vertices including the centre.
    Star { n: usize },
    RandomConnected { n: usize, p: f64, seed: u64 },
    RandomTree { n: usize, seed: u64 },
    /// Random connected subgraph of `K_{a,b}`, each cross edge kept with
    /// probability `p`.
    RandomBipartite { a: usize, b: usize, p: f64, seed: u64 },
    Nanotorus { p: usize, q: usize },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Star { .. } => "star",
            FamilySpec::RandomConnected { .. } => "random_connected",
            FamilySpec::RandomTree { .. } => "random_tree",
            FamilySpec::RandomBipartite { .. } => "random_bipartite",
            FamilySpec::Nanotorus { .. } => "nanotorus",
        }
    }

    /// Families whose members are vertex-transitive by construction.
    pub fn is_vertex_transitive(&self) -> bool {
        match *self {
            FamilySpec::Cycle { .. } | FamilySpec::Complete { .. } | FamilySpec::Nanotorus { .. } => true,
            FamilySpec::CompleteBipartite { a, b } => a == b,
            FamilySpec::Path { n } | FamilySpec::Star { n } => n <= 2,
            _ => false,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag();
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Star { n } => write!(f, "{tag}(n={n})"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "{tag}(a={a},b={b})"),
            FamilySpec::RandomConnected { n, p, seed } => write!(f, "{tag}(n={n},p={p},seed={seed})"),
            FamilySpec::RandomTree { n, seed } => write!(f, "{tag}(n={n},seed={seed})"),
            FamilySpec::RandomBipartite { a, b, p, seed } => {
                write!(f, "{tag}(a={a},b={b},p={p},seed={seed})")
            }
            FamilySpec::Nanotorus { p, q } => write!(f, "{tag}(p={p},q={q})"),
        }
    }
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what()))
    }
}

fn check_probability(p: f64) -> Result<()> {
    require(p > 0.0 && p <= 1.0, || format!("probability {p} not in (0, 1]"))
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path { n } => {
            require(n >= 1, || "path needs n >= 1".into())?;
            Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
        }
        FamilySpec::Cycle { n } => {
            require(n >= 3, || "cycle needs n >= 3".into())?;
            Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Complete { n } => {
            require(n >= 1, || "complete graph needs n >= 1".into())?;
            Graph::from_edge_list(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        FamilySpec::CompleteBipartite { a, b } => {
            require(a >= 1 && b >= 1, || "complete_bipartite needs a, b >= 1".into())?;
            Graph::from_edge_list(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        FamilySpec::Star { n } => {
            require(n >= 1, || "star needs n >= 1".into())?;
            Graph::from_edge_list(n, (1..n).map(|i| (0, i)))
        }
        FamilySpec::RandomConnected { n, p, seed } => {
            require(n >= 1, || "random_connected needs n >= 1".into())?;
            check_probability(p)?;
            let pairs: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            sample_connected(n, &pairs, p, seed)
        }
        FamilySpec::RandomBipartite { a, b, p, seed } => {
            require(a >= 1 && b >= 1, || "random_bipartite needs a, b >= 1".into())?;
            check_probability(p)?;
            let pairs: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
            sample_connected(a + b, &pairs, p, seed)
        }
        FamilySpec::RandomTree { n, seed } => {
            require(n >= 1, || "random_tree needs n >= 1".into())?;
            Ok(random_tree(n, seed))
        }
        FamilySpec::Nanotorus { p, q } => nanotorus(p, q),
    }
}

/// Keeps each candidate pair with probability `p`, in the given order, and
/// resamples until the result is connected.
fn sample_connected(n: usize, candidates: &[(usize, usize)], p: f64, seed: u64) -> Result<Graph> {
    let mut rng = GraphRng::new(seed);
    for _ in 0..MAX_RESAMPLES {
        let kept = candidates.iter().copied().filter(|_| rng.chance(p));
        let g = Graph::from_edge_list(n, kept.collect::<Vec<_>>())?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no connected sample after {MAX_RESAMPLES} attempts (n={n}, p={p})"
    )))
}

/// Uniform labelled tree: a Prüfer sequence of `n - 2` entries drawn with
/// `below(n)`, decoded by repeatedly joining the smallest current leaf.
fn random_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return Graph::from_edge_list(n, (1..n).map(|i| (0, i))).expect("valid tree");
    }
    let mut rng = GraphRng::new(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    decode_prufer(n, &code)
}

pub(crate) fn decode_prufer(n: usize, code: &[usize]) -> Graph {
    let mut remaining = vec![1usize; n];
    for &c in code {
        remaining[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, c));
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    edges.push((u, v));
    Graph::from_edge_list(n, edges).expect("valid tree")
}

/// Achiral polyhex nanotorus `T[p,q]` in brick-wall form.
///
/// Vertex `(i, j)` with `i < 2p`, `j < 2q` gets index `j * 2p + i`. Every
/// row is a `2p`-cycle; `(i, j)` is joined to `(i, j + 1 mod 2q)` when
/// `i + j` is even. The result has `4pq` vertices and `6pq` edges, and is
/// cubic and bipartite.
pub fn nanotorus(p: usize, q: usize) -> Result<Graph> {
    require(p >= 2 && q >= 1, || format!("nanotorus needs p >= 2, q >= 1 (got p={p}, q={q})"))?;
    let (width, height) = (2 * p, 2 * q);
    let id = |i: usize, j: usize| j * width + i;
    let mut edges = Vec::with_capacity(6 * p * q);
    for j in 0..height {
        for i in 0..width {
            edges.push((id(i, j), id((i + 1) % width, j)));
            if (i + j) % 2 == 0 {
                edges.push((id(i, j), id(i, (j + 1) % height)));
            }
        }
    }
    Graph::from_edge_list(width * height, edges)
}
