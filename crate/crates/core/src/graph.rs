//! Immutable simple undirected graphs, connectivity and two-colouring.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted and free of duplicates, so two graphs
/// compare equal exactly when their edge sets are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from unordered vertex pairs. Repeated pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in pairs {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Ok(Graph { adj, m: twice_m / 2 })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// True iff a single BFS from vertex 0 reaches every vertex.
    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// First vertex not reachable from vertex 0, if any.
    pub(crate) fn first_unreachable(&self) -> Option<usize> {
        if self.order() == 0 {
            return None;
        }
        self.bfs_distances(0).iter().position(Option::is_none)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::Bipartite { .. })
    }

    /// Two-colours the graph by BFS layering, or returns an odd cycle.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();

        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => {
                            return Bipartition::OddCycle(odd_cycle(u, v, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }

        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Bipartition::Bipartite { left, right }
    }
}

/// Closes the BFS-tree paths from `u` and `v` to their lowest common
/// ancestor with the edge `{u, v}`. Both endpoints sit on layers of the same
/// parity, so the resulting cycle is odd.
fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut from_u = vec![a];
    let mut from_v = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        from_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_v.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        from_u.push(a);
        from_v.push(b);
    }
    // both paths end at the common ancestor; keep it once
    from_v.pop();
    from_v.reverse();
    from_u.extend(from_v);
    from_u
}

/// Result of a two-colouring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    Bipartite { left: Vec<usize>, right: Vec<usize> },
    /// Vertices of a cycle of odd length; consecutive entries (and the last
    /// and first) are adjacent.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite { .. })
    }
}
