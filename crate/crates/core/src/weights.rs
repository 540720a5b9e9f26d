//! Natural vertex weights, the topological indices they sum to, and the
//! dispersion statistics of a weight vector.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default absolute tolerance for [`is_regular`].
pub const REGULARITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightKind {
    /// Vertex degree.
    Deg,
    /// Transmission: sum of distances to all other vertices.
    Tr,
    /// Sum of the neighbours' degrees.
    TwoDegree,
    /// Squared degree.
    Deg2,
    /// Eccentricity.
    Ecc,
    /// Cubed degree.
    Deg3,
}

impl WeightKind {
    pub const ALL: [WeightKind; 6] = [
        WeightKind::Deg,
        WeightKind::Tr,
        WeightKind::TwoDegree,
        WeightKind::Deg2,
        WeightKind::Ecc,
        WeightKind::Deg3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WeightKind::Deg => "deg",
            WeightKind::Tr => "tr",
            WeightKind::TwoDegree => "two_degree",
            WeightKind::Deg2 => "deg2",
            WeightKind::Ecc => "ecc",
            WeightKind::Deg3 => "deg3",
        }
    }

    /// Transmission and eccentricity need a connected graph.
    pub fn is_distance_based(self) -> bool {
        matches!(self, WeightKind::Tr | WeightKind::Ecc)
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WeightKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown weight kind `{s}`")))
    }
}

/// A vertex weight evaluated at every vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightVector {
    kind: WeightKind,
    values: Vec<f64>,
}

impl WeightVector {
    pub fn new(kind: WeightKind, values: Vec<f64>) -> Self {
        WeightVector { kind, values }
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// `ω̄`; zero for an empty vector.
    pub fn mean(&self) -> f64 {
        exact_mean(&self.values)
    }

    /// Same kind, every value increased by `c`.
    pub fn shifted(&self, c: f64) -> Self {
        WeightVector::new(self.kind, self.values.iter().map(|x| x + c).collect())
    }

    pub fn all_positive(&self) -> bool {
        self.values.iter().all(|&x| x > 0.0)
    }
}

/// `Σx / n`, except that constant data returns its value unchanged. The
/// sum is exact for integer-valued weights, so `n·ω̄` reproduces the index.
fn exact_mean(xs: &[f64]) -> f64 {
    match xs.first() {
        None => 0.0,
        Some(&x0) if xs.iter().all(|&x| x == x0) => x0,
        Some(_) => xs.iter().sum::<f64>() / xs.len() as f64,
    }
}

/// Evaluates `kind` at every vertex. Distance-based kinds require a
/// connected graph.
pub fn weight_vector(g: &Graph, kind: WeightKind) -> Result<WeightVector> {
    if kind.is_distance_based() {
        let d = DistanceMatrix::new(g)?;
        Ok(weight_vector_with(g, kind, Some(&d)))
    } else {
        Ok(weight_vector_with(g, kind, None))
    }
}

/// Like [`weight_vector`], reusing an already computed distance matrix.
///
/// # Panics
/// If `kind` is distance-based and `distances` is `None`.
pub fn weight_vector_with(g: &Graph, kind: WeightKind, distances: Option<&DistanceMatrix>) -> WeightVector {
    let deg = g.degrees();
    let values: Vec<f64> = match kind {
        WeightKind::Deg => deg.iter().map(|&d| d as f64).collect(),
        WeightKind::Deg2 => deg.iter().map(|&d| (d * d) as f64).collect(),
        WeightKind::Deg3 => deg.iter().map(|&d| (d * d * d) as f64).collect(),
        WeightKind::TwoDegree => (0..g.order())
            .map(|u| g.neighbors(u).iter().map(|&v| deg[v]).sum::<usize>() as f64)
            .collect(),
        WeightKind::Tr => distances
            .expect("transmission needs distances")
            .transmissions()
            .into_iter()
            .map(|t| t as f64)
            .collect(),
        WeightKind::Ecc => distances
            .expect("eccentricity needs distances")
            .eccentricities()
            .into_iter()
            .map(f64::from)
            .collect(),
    };
    WeightVector::new(kind, values)
}

/// `MD = (1/n) Σ |ωᵢ − ω̄|`.
pub fn mean_deviation(w: &WeightVector) -> Result<f64> {
    mean_deviation_of(w.values())
}

/// `Var = (1/n) Σ (ωᵢ − ω̄)²`.
pub fn variance(w: &WeightVector) -> Result<f64> {
    variance_of(w.values())
}

pub fn mean_deviation_of(xs: &[f64]) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::Empty);
    }
    let mean = exact_mean(xs);
    Ok(xs.iter().map(|x| (x - mean).abs()).sum::<f64>() / xs.len() as f64)
}

pub fn variance_of(xs: &[f64]) -> Result<f64> {
    if xs.is_empty() {
        return Err(Error::Empty);
    }
    let mean = exact_mean(xs);
    Ok(xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / xs.len() as f64)
}

/// True iff every value lies within `tol` of the mean.
pub fn is_regular(w: &WeightVector, tol: f64) -> bool {
    let mean = w.mean();
    w.values().iter().all(|x| (x - mean).abs() <= tol)
}

/// Wiener index `W(G) = Σ_{u<v} d(u,v)`.
pub fn wiener(g: &Graph) -> Result<u64> {
    Ok(wiener_from(&DistanceMatrix::new(g)?))
}

fn wiener_from(d: &DistanceMatrix) -> u64 {
    let n = d.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| u64::from(d.get(u, v))))
        .sum()
}

/// First Zagreb index `M₁(G) = Σ deg(u)²`.
pub fn first_zagreb(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

/// Forgotten index `F(G) = Σ deg(u)³`.
pub fn forgotten(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d * d) as u64).sum()
}

pub fn total_eccentricity(g: &Graph) -> Result<u64> {
    let ecc = DistanceMatrix::new(g)?.eccentricities();
    Ok(ecc.iter().map(|&e| u64::from(e)).sum())
}

pub fn radius(g: &Graph) -> Result<u32> {
    let ecc = DistanceMatrix::new(g)?.eccentricities();
    Ok(ecc.into_iter().min().unwrap_or(0))
}

pub fn diameter(g: &Graph) -> Result<u32> {
    let ecc = DistanceMatrix::new(g)?.eccentricities();
    Ok(ecc.into_iter().max().unwrap_or(0))
}

/// Index values of one graph. Distance-based entries are `None` for
/// disconnected graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub wiener: Option<u64>,
    pub first_zagreb: u64,
    pub total_eccentricity: Option<u64>,
    pub forgotten: u64,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
}

impl IndexReport {
    pub fn new(g: &Graph) -> Self {
        let d = DistanceMatrix::new(g).ok();
        IndexReport::with_distances(g, d.as_ref())
    }

    pub fn with_distances(g: &Graph, d: Option<&DistanceMatrix>) -> Self {
        let ecc = d.map(DistanceMatrix::eccentricities);
        IndexReport {
            wiener: d.map(wiener_from),
            first_zagreb: first_zagreb(g),
            total_eccentricity: ecc.as_ref().map(|e| e.iter().map(|&x| u64::from(x)).sum()),
            forgotten: forgotten(g),
            radius: ecc.as_ref().map(|e| e.iter().copied().min().unwrap_or(0)),
            diameter: ecc.as_ref().map(|e| e.iter().copied().max().unwrap_or(0)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap()
    }
    fn c4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }
    fn k2() -> Graph {
        Graph::from_edge_list(2, [(0, 1)]).unwrap()
    }
    fn star4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn values(g: &Graph, kind: WeightKind) -> Vec<f64> {
        weight_vector(g, kind).unwrap().values().to_vec()
    }

    #[test]
    fn p3_weights() {
        assert_eq!(values(&p3(), WeightKind::Tr), vec![3.0, 2.0, 3.0]);
        assert_eq!(values(&p3(), WeightKind::TwoDegree), vec![2.0, 2.0, 2.0]);
        assert_eq!(values(&p3(), WeightKind::Ecc), vec![2.0, 1.0, 2.0]);
        assert_eq!(values(&star4(), WeightKind::Deg2), vec![9.0, 1.0, 1.0, 1.0]);
        assert_eq!(values(&star4(), WeightKind::Deg3), vec![27.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn distance_kinds_need_connectivity() {
        let g = Graph::empty(2);
        assert!(matches!(weight_vector(&g, WeightKind::Tr), Err(Error::Disconnected { .. })));
        assert!(matches!(weight_vector(&g, WeightKind::Ecc), Err(Error::Disconnected { .. })));
        assert_eq!(values(&g, WeightKind::Deg), vec![0.0, 0.0]);
    }

    #[test]
    fn indices() {
        assert_eq!(wiener(&p3()), Ok(4));
        assert_eq!(wiener(&c4()), Ok(8));
        assert_eq!(wiener(&k2()), Ok(1));
        assert_eq!(first_zagreb(&p3()), 6);
        assert_eq!(first_zagreb(&star4()), 12);
        assert_eq!(first_zagreb(&Graph::empty(5)), 0);
        assert_eq!(forgotten(&p3()), 10);
        assert_eq!(forgotten(&star4()), 30);
        for n in 3..9 {
            let cycle = Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
            assert_eq!(forgotten(&cycle), 8 * n as u64);
        }
    }

    #[test]
    fn eccentricity_indices() {
        assert_eq!((total_eccentricity(&p3()), radius(&p3()), diameter(&p3())), (Ok(5), Ok(1), Ok(2)));
        assert_eq!((total_eccentricity(&c4()), radius(&c4()), diameter(&c4())), (Ok(8), Ok(2), Ok(2)));
        assert_eq!((total_eccentricity(&k2()), radius(&k2()), diameter(&k2())), (Ok(2), Ok(1), Ok(1)));
        assert!(wiener(&Graph::empty(3)).is_err());
    }

    #[test]
    fn index_report_partial_when_disconnected() {
        let r = IndexReport::new(&Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(r.wiener, None);
        assert_eq!(r.first_zagreb, 4);
        let r = IndexReport::new(&p3());
        assert_eq!(r.wiener, Some(4));
        assert_eq!(r.total_eccentricity, Some(5));
    }

    #[test]
    fn dispersion_examples() {
        let tr = WeightVector::new(WeightKind::Tr, vec![3.0, 2.0, 3.0]);
        assert!((mean_deviation(&tr).unwrap() - 4.0 / 9.0).abs() < 1e-15);
        assert!((variance(&tr).unwrap() - 2.0 / 9.0).abs() < 1e-15);

        let sq = WeightVector::new(WeightKind::Deg2, vec![1.0, 4.0, 1.0]);
        assert!((mean_deviation(&sq).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((variance(&sq).unwrap() - 2.0).abs() < 1e-15);

        let constant = WeightVector::new(WeightKind::Deg, vec![0.1; 7]);
        assert_eq!(mean_deviation(&constant).unwrap(), 0.0);
        assert_eq!(variance(&constant).unwrap(), 0.0);

        assert_eq!(mean_deviation_of(&[]), Err(Error::Empty));
        assert_eq!(variance_of(&[]), Err(Error::Empty));
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&weight_vector(&c4(), WeightKind::Tr).unwrap(), REGULARITY_TOLERANCE));
        assert!(!is_regular(&weight_vector(&star4(), WeightKind::Deg).unwrap(), REGULARITY_TOLERANCE));
        assert!(is_regular(&weight_vector(&p3(), WeightKind::TwoDegree).unwrap(), REGULARITY_TOLERANCE));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in WeightKind::ALL {
            assert_eq!(k.as_str().parse::<WeightKind>().unwrap(), k);
        }
        assert!("degree".parse::<WeightKind>().is_err());
    }
}
