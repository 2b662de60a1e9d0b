//! Simple undirected graphs with contiguous 0-based vertex ids.
//!
//! Adjacency is stored as sorted neighbor lists, so iteration order is
//! deterministic and every downstream search is reproducible.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is acyclic")]
    Acyclic,
}

/// Girth of a graph; acyclic graphs have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Minimum/maximum degree, regularity flag and the full degree histogram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub histogram: BTreeMap<usize, usize>,
}

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph from an edge list. Duplicate edges collapse;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    /// Builds directly from adjacency lists; debug-asserts symmetry.
    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let n = adj.len();
        let mut adj = adj;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let g = Graph { n, adj };
        debug_assert!(
            g.check_symmetric(),
            "adjacency must be symmetric and loop-free"
        );
        g
    }

    fn check_symmetric(&self) -> bool {
        (0..self.n).all(|u| {
            self.adj[u]
                .iter()
                .all(|&v| v != u && v < self.n && self.adj[v].binary_search(&u).is_ok())
        })
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph { n, adj }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let n = a + b;
        let adj = (0..n)
            .map(|u| {
                if u < a {
                    (a..n).collect()
                } else {
                    (0..a).collect()
                }
            })
            .collect();
        Graph { n, adj }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as ordered pairs (u, v) with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Returns a copy with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Induced subgraph on `keep` (ascending relabeling); returns the subgraph
    /// and the old id of each new vertex.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        (Graph { n: keep.len(), adj }, keep)
    }

    /// Exact girth by per-root BFS: for every root, every non-tree edge with
    /// both ends reachable closes a cycle of length d(u)+d(v)+1; the minimum
    /// over all roots is the girth.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // Cycles through vertices at depth >= best/2 cannot improve.
                if 2 * dist[u] >= best {
                    continue;
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[v] != u && parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// (diameter, radius) of a connected graph.
    pub fn diameter_and_radius(&self) -> Result<(usize, usize), GraphError> {
        let dm = crate::distance::DistanceMatrix::compute(self);
        if !dm.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut diameter = 0;
        let mut radius = usize::MAX;
        for v in 0..self.n {
            let ecc = dm.eccentricity(v).expect("connected");
            diameter = diameter.max(ecc);
            radius = radius.min(ecc);
        }
        Ok((diameter, radius))
    }

    /// Vertices within distance `k` of `v`, ascending.
    pub fn disk(&self, v: usize, k: usize) -> Result<Vec<usize>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        Ok(self.bounded_bfs(&[v], k))
    }

    /// Vertices within distance `k` of either endpoint of the edge (u, v).
    pub fn edge_disk(&self, u: usize, v: usize, k: usize) -> Result<Vec<usize>, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        Ok(self.bounded_bfs(&[u, v], k))
    }

    fn bounded_bfs(&self, sources: &[usize], k: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            if dist[u] == k {
                continue;
            }
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        (0..self.n).filter(|&w| dist[w] != usize::MAX).collect()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut histogram = BTreeMap::new();
        for v in 0..self.n {
            *histogram.entry(self.degree(v)).or_insert(0) += 1;
        }
        let min_degree = histogram.keys().next().copied().unwrap_or(0);
        let max_degree = histogram.keys().next_back().copied().unwrap_or(0);
        DegreeProfile {
            min_degree,
            max_degree,
            is_regular: min_degree == max_degree,
            histogram,
        }
    }
}
