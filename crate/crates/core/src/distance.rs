//! All-pairs hop distances for connected graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense `n × n` table of shortest-path lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// One BFS per vertex. Fails on disconnected graphs, naming a pair of
    /// mutually unreachable vertices.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        let mut d = Vec::with_capacity(n * n);
        for source in 0..n {
            for (v, dist) in g.bfs_distances(source).into_iter().enumerate() {
                d.push(dist.ok_or(Error::Disconnected { u: source, v })?);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Transmission of every vertex (row sums).
    pub fn transmissions(&self) -> Vec<u64> {
        (0..self.n)
            .map(|u| self.row(u).iter().map(|&x| u64::from(x)).sum())
            .collect()
    }

    /// Eccentricity of every vertex (row maxima).
    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.n)
            .map(|u| self.row(u).iter().copied().max().unwrap_or(0))
            .collect()
    }
}

/// Convenience wrapper around [`DistanceMatrix::new`].
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let d = distance_matrix(&g).unwrap();
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.get(2, 2), 0);
    }

    #[test]
    fn c4_rows() {
        let g = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let d = distance_matrix(&g).unwrap();
        for u in 0..4 {
            let mut row = d.row(u).to_vec();
            row.sort();
            assert_eq!(row, vec![0, 1, 1, 2]);
        }
        assert_eq!(d.row(0), &[0, 1, 2, 1]);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance_matrix(&g), Err(Error::Disconnected { u: 0, v: 2 }));
    }
}
