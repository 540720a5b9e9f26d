//! Mechanical checks of the energy inequalities and their equality cases.
//!
//! For a connected graph and any vertex weight `ω`:
//! `LE_ω ≤ n·MD_ω + E`, with equality exactly when `ω` is constant.
//! For bipartite graphs additionally `max{n·MD_ω, E} ≤ LE_ω`, where
//! `LE_ω = E` exactly when `ω` is constant. For vertex-transitive graphs all
//! six weighted energies coincide with `E`.

mod corpus;
mod report;

pub use corpus::{expand_entry, run_corpus, CorpusConfig, CorpusEntry, CorpusGraph, GraphSource, ReportFormat};
pub use report::{Report, Summary};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::energy::{graph_energy, KindEnergy};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::weights::{weight_vector, WeightKind};

/// Default absolute tolerance for equality detection and inequality slack.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// `LE_ω ≤ n·MD_ω + E` on connected graphs.
    UpperBound,
    /// `E ≤ LE_ω` on bipartite graphs.
    BipartiteLower,
    /// `max{n·MD_ω, E} ≤ LE_ω ≤ n·MD_ω + E` on bipartite graphs.
    Sandwich,
    /// `E = LE_ω` for all six kinds on vertex-transitive graphs.
    VtEquality,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::UpperBound,
        Theorem::BipartiteLower,
        Theorem::Sandwich,
        Theorem::VtEquality,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::UpperBound => "upper_bound",
            Theorem::BipartiteLower => "bipartite_lower",
            Theorem::Sandwich => "sandwich",
            Theorem::VtEquality => "vt_equality",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown theorem `{s}`")))
    }
}

/// One theorem instance evaluated on one graph.
///
/// `left ≤ right` is the inequality under test (for the sandwich, `middle`
/// sits between them). `consistency` compares the equality flag with
/// weight regularity and is `None` where no characterization is asserted:
/// vertex-transitive records, and weights that take the value zero.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub index: usize,
    pub graph: String,
    pub kind: Option<WeightKind>,
    pub theorem: Theorem,
    pub left: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub middle: Option<f64>,
    pub right: f64,
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    pub regular: bool,
    pub consistency: Option<bool>,
}

impl VerificationRecord {
    /// The inequality holds and no asserted characterization is contradicted.
    pub fn passed(&self) -> bool {
        self.holds && self.consistency != Some(false)
    }
}

fn base(theorem: Theorem, kind: Option<WeightKind>) -> VerificationRecord {
    VerificationRecord {
        index: 0,
        graph: String::new(),
        kind,
        theorem,
        left: 0.0,
        middle: None,
        right: 0.0,
        slack: 0.0,
        holds: false,
        equality: false,
        regular: false,
        consistency: None,
    }
}

fn consistency(k: &KindEnergy, equality: bool) -> Option<bool> {
    k.all_positive.then_some(equality == k.regular)
}

pub(crate) fn upper_bound_record(energy: f64, k: &KindEnergy, tol: f64) -> VerificationRecord {
    let left = k.laplacian_energy;
    let right = k.n_md + energy;
    let slack = right - left;
    let equality = slack.abs() <= tol;
    VerificationRecord {
        left,
        right,
        slack,
        holds: slack >= -tol,
        equality,
        regular: k.regular,
        consistency: consistency(k, equality),
        ..base(Theorem::UpperBound, Some(k.kind))
    }
}

pub(crate) fn bipartite_lower_record(energy: f64, k: &KindEnergy, tol: f64) -> VerificationRecord {
    let left = energy;
    let right = k.laplacian_energy;
    let slack = right - left;
    let equality = slack.abs() <= tol;
    VerificationRecord {
        left,
        right,
        slack,
        holds: slack >= -tol,
        equality,
        regular: k.regular,
        consistency: consistency(k, equality),
        ..base(Theorem::BipartiteLower, Some(k.kind))
    }
}

/// `slack` is the smaller of the two gaps; `equality` refers to the lower
/// bound meeting `E`.
pub(crate) fn sandwich_record(energy: f64, k: &KindEnergy, tol: f64) -> VerificationRecord {
    let le = k.laplacian_energy;
    let left = k.n_md.max(energy);
    let right = k.n_md + energy;
    let slack = (le - left).min(right - le);
    let equality = (le - energy).abs() <= tol;
    VerificationRecord {
        left,
        middle: Some(le),
        right,
        slack,
        holds: slack >= -tol,
        equality,
        regular: k.regular,
        consistency: consistency(k, equality),
        ..base(Theorem::Sandwich, Some(k.kind))
    }
}

/// `left`/`right` are the smallest and largest of `E` and the six
/// Laplacian energies; `regular` requires the deg, tr, two_degree and ecc
/// weights to be constant.
pub(crate) fn vt_record(energy: f64, kinds: &[KindEnergy], tol: f64) -> VerificationRecord {
    let values = std::iter::once(energy).chain(kinds.iter().map(|k| k.laplacian_energy));
    let (left, right) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
    let slack = right - left;
    let regular = kinds
        .iter()
        .filter(|k| matches!(k.kind, WeightKind::Deg | WeightKind::Tr | WeightKind::TwoDegree | WeightKind::Ecc))
        .all(|k| k.regular);
    VerificationRecord {
        left,
        right,
        slack,
        holds: slack <= tol,
        equality: slack <= tol,
        regular,
        ..base(Theorem::VtEquality, None)
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    match g.first_unreachable() {
        Some(v) => Err(Error::Disconnected { u: 0, v }),
        None => Ok(()),
    }
}

fn require_bipartite(g: &Graph) -> Result<()> {
    match g.bipartition() {
        Bipartition::OddCycle(witness) => Err(Error::NotBipartite { witness }),
        Bipartition::Bipartite { .. } => Ok(()),
    }
}

fn kind_energy(g: &Graph, kind: WeightKind) -> Result<KindEnergy> {
    KindEnergy::compute(g, &weight_vector(g, kind)?)
}

/// `LE_ω ≤ n·MD_ω + E`; the graph must be connected.
pub fn check_upper_bound(g: &Graph, kind: WeightKind, tol: f64) -> Result<VerificationRecord> {
    require_connected(g)?;
    Ok(upper_bound_record(graph_energy(g)?, &kind_energy(g, kind)?, tol))
}

/// `E ≤ LE_ω`; the graph must be bipartite (and connected for tr/ecc).
pub fn check_bipartite_lower(g: &Graph, kind: WeightKind, tol: f64) -> Result<VerificationRecord> {
    require_bipartite(g)?;
    Ok(bipartite_lower_record(graph_energy(g)?, &kind_energy(g, kind)?, tol))
}

/// `max{n·MD_ω, E} ≤ LE_ω ≤ n·MD_ω + E`; same preconditions as
/// [`check_bipartite_lower`].
pub fn check_sandwich(g: &Graph, kind: WeightKind, tol: f64) -> Result<VerificationRecord> {
    require_bipartite(g)?;
    Ok(sandwich_record(graph_energy(g)?, &kind_energy(g, kind)?, tol))
}

/// All six Laplacian energies equal `E`. The caller vouches for
/// vertex-transitivity; only connectivity is checked here.
pub fn check_vt_equality(g: &Graph, tol: f64) -> Result<VerificationRecord> {
    require_connected(g)?;
    let kinds = WeightKind::ALL
        .iter()
        .map(|&k| kind_energy(g, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(vt_record(graph_energy(g)?, &kinds, tol))
}

/// Amount added to one Laplacian energy by [`self_test`].
pub const SELF_TEST_PERTURBATION: f64 = 0.1;

/// Runs the checkers on `C4` with every Laplacian energy raised by
/// [`SELF_TEST_PERTURBATION`]. `C4` is regular for every kind, so a sound
/// harness must report failures: the upper bound and sandwich are violated
/// outright and the lower bound loses its equality case.
pub fn self_test(tol: f64) -> Result<Report> {
    let c4 = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let energy = graph_energy(&c4)?;
    let mut records = Vec::new();
    for kind in WeightKind::ALL {
        let mut k = kind_energy(&c4, kind)?;
        k.laplacian_energy += SELF_TEST_PERTURBATION;
        records.push(upper_bound_record(energy, &k, tol));
        records.push(bipartite_lower_record(energy, &k, tol));
        records.push(sandwich_record(energy, &k, tol));
    }
    for r in &mut records {
        r.graph = format!("self_test:cycle(n=4)+{SELF_TEST_PERTURBATION}");
    }
    Ok(Report::new(records, 1, 0))
}
