//! Ordinary graph energy and vertex-weighted Laplacian energy.

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{adjacency_matrix, symmetric_eigenvalues, weighted_laplacian, Spectrum};
use crate::weights::{
    is_regular, mean_deviation, weight_vector, weight_vector_with, IndexReport, WeightKind, WeightVector,
    REGULARITY_TOLERANCE,
};

/// `E(G) = Σ |λᵢ|` over the adjacency spectrum.
pub fn graph_energy(g: &Graph) -> Result<f64> {
    Ok(adjacency_spectrum(g)?.absolute_deviation_sum(0.0))
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    symmetric_eigenvalues(&adjacency_matrix(g))
}

pub fn laplacian_spectrum(g: &Graph, w: &WeightVector) -> Result<Spectrum> {
    symmetric_eigenvalues(&weighted_laplacian(g, w)?)
}

/// `LE_ω(G) = Σ |μᵢ − ω̄|` for the weight `kind`.
pub fn laplacian_energy(g: &Graph, kind: WeightKind) -> Result<f64> {
    laplacian_energy_of(g, &weight_vector(g, kind)?)
}

/// `LE_ω(G)` for an explicit weight vector.
pub fn laplacian_energy_of(g: &Graph, w: &WeightVector) -> Result<f64> {
    Ok(laplacian_spectrum(g, w)?.absolute_deviation_sum(w.mean()))
}

/// Laplacian energy and weight statistics for one weight kind.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KindEnergy {
    pub kind: WeightKind,
    pub laplacian_energy: f64,
    /// `ω̄`.
    pub mean_weight: f64,
    /// `Σ ω(v)`, the index the weight sums to.
    pub weight_sum: f64,
    /// `n · MD_ω(G)`.
    pub n_md: f64,
    pub regular: bool,
    /// `Σ μᵢ` as returned by the eigensolver; equals `weight_sum` up to
    /// rounding.
    #[serde(skip)]
    pub eigenvalue_sum: f64,
    #[serde(skip)]
    pub all_positive: bool,
}

impl KindEnergy {
    pub fn compute(g: &Graph, w: &WeightVector) -> Result<Self> {
        let spectrum = laplacian_spectrum(g, w)?;
        let mean = w.mean();
        let n_md = if w.is_empty() {
            0.0
        } else {
            w.len() as f64 * mean_deviation(w)?
        };
        Ok(KindEnergy {
            kind: w.kind(),
            laplacian_energy: spectrum.absolute_deviation_sum(mean),
            mean_weight: mean,
            weight_sum: w.sum(),
            n_md,
            regular: is_regular(w, REGULARITY_TOLERANCE),
            eigenvalue_sum: spectrum.sum(),
            all_positive: w.all_positive(),
        })
    }
}

/// `E(G)` together with `LE_ω(G)` for a set of weight kinds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyReport {
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub graph_energy: f64,
    pub indices: IndexReport,
    pub kinds: Vec<KindEnergy>,
}

impl EnergyReport {
    pub fn get(&self, kind: WeightKind) -> Option<&KindEnergy> {
        self.kinds.iter().find(|k| k.kind == kind)
    }
}

/// All six weight kinds; requires a connected graph.
pub fn energy_report(g: &Graph) -> Result<EnergyReport> {
    energy_report_for(g, &WeightKind::ALL)
}

/// Report restricted to `kinds`. The distance matrix is computed at most
/// once and shared by the transmission and eccentricity weights.
pub fn energy_report_for(g: &Graph, kinds: &[WeightKind]) -> Result<EnergyReport> {
    let distances = match DistanceMatrix::new(g) {
        Ok(d) => Some(d),
        Err(e) if kinds.iter().any(|k| k.is_distance_based()) => return Err(e),
        Err(_) => None,
    };
    let kinds = kinds
        .iter()
        .map(|&kind| KindEnergy::compute(g, &weight_vector_with(g, kind, distances.as_ref())))
        .collect::<Result<Vec<_>>>()?;
    Ok(EnergyReport {
        n: g.order(),
        m: g.size(),
        connected: distances.is_some(),
        bipartite: g.is_bipartite(),
        graph_energy: graph_energy(g)?,
        indices: IndexReport::with_distances(g, distances.as_ref()),
        kinds,
    })
}

/// Checks the kind/index identities of a report: `n·ω̄` must equal `2m`,
/// `2W`, `M₁`, `M₁`, `ζ`, `F` for deg, tr, two_degree, deg2, ecc, deg3.
pub fn check_index_identities(report: &EnergyReport) -> Result<()> {
    let idx = &report.indices;
    for k in &report.kinds {
        let expected = match k.kind {
            WeightKind::Deg => Some(2 * report.m as u64),
            WeightKind::Tr => idx.wiener.map(|w| 2 * w),
            WeightKind::TwoDegree | WeightKind::Deg2 => Some(idx.first_zagreb),
            WeightKind::Ecc => idx.total_eccentricity,
            WeightKind::Deg3 => Some(idx.forgotten),
        };
        if let Some(expected) = expected {
            if k.weight_sum != expected as f64 {
                return Err(Error::InvalidParameter(format!(
                    "{}: weight sum {} differs from index value {expected}",
                    k.kind, k.weight_sum
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges.iter().copied()).unwrap()
    }
    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-10
    }

    #[test]
    fn energy_examples() {
        assert!(close(graph_energy(&graph(2, &[(0, 1)])).unwrap(), 2.0));
        assert!(close(graph_energy(&graph(3, &[(0, 1), (1, 2)])).unwrap(), 2.0 * 2f64.sqrt()));
        assert!(close(graph_energy(&graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])).unwrap(), 4.0));
        assert_eq!(graph_energy(&Graph::empty(1)).unwrap(), 0.0);
    }

    #[test]
    fn p3_laplacian_energies() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        assert!(close(laplacian_energy(&p3, WeightKind::Deg).unwrap(), 10.0 / 3.0));
        assert!(close(laplacian_energy(&p3, WeightKind::Tr).unwrap(), 10.0 / 3.0));
        assert!(close(laplacian_energy(&p3, WeightKind::TwoDegree).unwrap(), 2.0 * 2f64.sqrt()));
    }

    #[test]
    fn report_examples() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let r = energy_report(&c4).unwrap();
        assert!(close(r.graph_energy, 4.0));
        for k in &r.kinds {
            assert!(close(k.laplacian_energy, 4.0), "{k:?}");
        }
        check_index_identities(&r).unwrap();

        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let r = energy_report(&star).unwrap();
        assert!(close(r.get(WeightKind::Deg).unwrap().laplacian_energy, 5.0));
        assert!(close(r.graph_energy, 2.0 * 3f64.sqrt()));

        let k2 = graph(2, &[(0, 1)]);
        let r = energy_report(&k2).unwrap();
        assert!(close(r.graph_energy, 2.0));
        assert!(r.kinds.iter().all(|k| close(k.laplacian_energy, 2.0) && k.regular));
    }

    #[test]
    fn disconnected_reports() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        assert!(matches!(energy_report(&g), Err(Error::Disconnected { .. })));
        let r = energy_report_for(&g, &[WeightKind::Deg]).unwrap();
        assert!(!r.connected);
        assert!(close(r.graph_energy, 4.0));
        // L = two copies of [[1,-1],[-1,1]]: eigenvalues 2,2,0,0 around mean 1
        assert!(close(r.kinds[0].laplacian_energy, 4.0));
    }

    #[test]
    fn single_vertex_is_all_zero() {
        let r = energy_report(&Graph::empty(1)).unwrap();
        assert_eq!(r.graph_energy, 0.0);
        assert!(r.kinds.iter().all(|k| k.laplacian_energy == 0.0));
    }

    #[test]
    fn edgeless_regular_laplacian_energy_is_zero() {
        let w = weight_vector(&Graph::empty(3), WeightKind::Deg).unwrap().shifted(2.0);
        assert_eq!(laplacian_energy_of(&Graph::empty(3), &w).unwrap(), 0.0);
    }
}
