//! Dense all-pairs shortest-path distances via one BFS per source.

use rayon::prelude::*;

use crate::graph::Graph;

const UNREACHABLE: u32 = u32::MAX;

/// Dense n x n matrix of hop distances. Immutable after construction and
/// safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> DistanceMatrix {
        let n = g.order();
        let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs_row(g, s)).collect();
        let mut dist = Vec::with_capacity(n * n);
        for row in rows {
            dist.extend_from_slice(&row);
        }
        DistanceMatrix { n, dist }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Hop distance, or None if unreachable.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.dist[u * self.n + v];
        (d != UNREACHABLE).then_some(d as usize)
    }

    /// Distance assuming reachability; panics on unreachable pairs.
    pub fn d(&self, u: usize, v: usize) -> usize {
        self.get(u, v).expect("unreachable pair")
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let row = &self.dist[v * self.n..(v + 1) * self.n];
        if row.contains(&UNREACHABLE) {
            return None;
        }
        row.iter().map(|&d| d as usize).max()
    }

    /// Largest finite distance in the matrix (0 for edgeless graphs).
    pub fn max_finite(&self) -> usize {
        self.dist
            .iter()
            .filter(|&&d| d != UNREACHABLE)
            .map(|&d| d as usize)
            .max()
            .unwrap_or(0)
    }
}

fn bfs_row(g: &Graph, s: usize) -> Vec<u32> {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = std::collections::VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_metric() {
        let g = Graph::cycle(7);
        let dm = DistanceMatrix::compute(&g);
        assert_eq!(dm.get(0, 3), Some(3));
        assert_eq!(dm.get(0, 4), Some(3));
        assert_eq!(dm.get(0, 0), Some(0));
    }

    #[test]
    fn unreachable_pairs() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let dm = DistanceMatrix::compute(&g);
        assert_eq!(dm.get(0, 2), None);
        assert_eq!(dm.get(1, 0), Some(1));
        assert!(!dm.is_connected());
    }

    #[test]
    fn symmetry_and_triangle_inequality() {
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (2, 5),
                (5, 6),
                (6, 0),
            ],
        )
        .unwrap();
        let dm = DistanceMatrix::compute(&g);
        for u in 0..7 {
            for v in 0..7 {
                assert_eq!(dm.get(u, v), dm.get(v, u));
                for w in 0..7 {
                    let (a, b, c) = (dm.d(u, v), dm.d(u, w), dm.d(w, v));
                    assert!(a <= b + c);
                }
            }
        }
    }
}
