//! Ordinary and vertex-weighted Laplacian energies of simple graphs.
//!
//! For a vertex weight `ω` the weighted Laplacian is
//! `L_ω(G) = diag(ω) − A(G)` and its energy is `LE_ω(G) = Σ |μᵢ − ω̄|`,
//! `ω̄` being the mean weight. Six weights are provided: degree,
//! transmission, 2-degree, squared and cubed degree, and eccentricity.
//! Their sums are the classical indices `2m`, `2W`, `M₁`, `M₁`, `F`, `ζ`.
//!
//! The [`verify`] module checks the inequalities relating `LE_ω`, `E` and
//! the mean deviation of `ω` over corpora of graphs.

pub mod distance;
pub mod energy;
mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod rng;
pub mod spectra;
pub mod verify;
pub mod weights;

pub use distance::{distance_matrix, DistanceMatrix};
pub use energy::{energy_report, energy_report_for, graph_energy, laplacian_energy, EnergyReport, KindEnergy};
pub use error::{Error, Result};
pub use generators::{generate, nanotorus, FamilySpec};
pub use graph::{Bipartition, Graph};
pub use spectra::{symmetric_eigenvalues, Spectrum, SymMatrix};
pub use weights::{weight_vector, IndexReport, WeightKind, WeightVector};
