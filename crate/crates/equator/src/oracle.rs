//! Brute-force reference implementations used to cross-check the fast paths.
//!
//! Everything here recomputes from first principles: distances come from
//! Floyd-Warshall rather than BFS, girth and equator come from enumerating
//! every cycle of the graph and testing the definition directly. Only usable
//! at small orders; the test suites compare these against the real
//! implementations on exhaustive families.

use crate::graph::{Girth, Graph};

/// All-pairs distances by Floyd-Warshall; `None` marks unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    const INF: usize = usize::MAX / 2;
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
        for &w in g.neighbors(v) {
            row[w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d.into_iter()
        .map(|row| row.into_iter().map(|x| (x < INF).then_some(x)).collect())
        .collect()
}

/// Calls `f` once for every cycle of `g`, as a vertex sequence in canonical
/// form: the smallest vertex first, and the second vertex smaller than the
/// last (one orientation per cycle).
pub fn for_each_cycle<F: FnMut(&[usize])>(g: &Graph, mut f: F) {
    let n = g.order();
    let mut in_path = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n {
        path.push(start);
        in_path[start] = true;
        extend_cycles(g, start, &mut path, &mut in_path, &mut f);
        in_path[start] = false;
        path.pop();
    }
}

fn extend_cycles<F: FnMut(&[usize])>(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    in_path: &mut [bool],
    f: &mut F,
) {
    let last = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(last, start) && path[1] < last {
        f(path);
    }
    for &w in g.neighbors(last) {
        if w <= start || in_path[w] {
            continue;
        }
        path.push(w);
        in_path[w] = true;
        extend_cycles(g, start, path, in_path, f);
        in_path[w] = false;
        path.pop();
    }
}

/// Girth as the length of the shortest enumerated cycle.
pub fn girth_by_enumeration(g: &Graph) -> Girth {
    let mut best: Option<usize> = None;
    for_each_cycle(g, |cycle| {
        best = Some(best.map_or(cycle.len(), |b| b.min(cycle.len())));
    });
    best.map_or(Girth::Infinite, Girth::Finite)
}

/// True iff the sequence realizes its cycle metric in the host graph.
pub fn isometric_by_definition(dist: &[Vec<Option<usize>>], cycle: &[usize]) -> bool {
    let q = cycle.len();
    for i in 0..q {
        for j in i + 1..q {
            let expected = (j - i).min(q - (j - i));
            if dist[cycle[i]][cycle[j]] != Some(expected) {
                return false;
            }
        }
    }
    true
}

/// Equator as the longest enumerated cycle that passes the isometry
/// definition; 0 when the graph is acyclic.
pub fn equator_by_enumeration(g: &Graph) -> usize {
    let dist = floyd_warshall(g);
    let mut best = 0;
    for_each_cycle(g, |cycle| {
        if cycle.len() > best && isometric_by_definition(&dist, cycle) {
            best = cycle.len();
        }
    });
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_cycles_of_k4() {
        // K4 has 4 triangles and 3 four-cycles
        let mut lens = std::collections::BTreeMap::new();
        for_each_cycle(&Graph::complete(4), |c| {
            *lens.entry(c.len()).or_insert(0) += 1;
        });
        assert_eq!(lens[&3], 4);
        assert_eq!(lens[&4], 3);
    }

    #[test]
    fn girth_matches_bfs_on_samples() {
        for g in [
            Graph::complete(5),
            Graph::cycle(8),
            Graph::complete_bipartite(2, 3),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ] {
            assert_eq!(girth_by_enumeration(&g), g.girth());
        }
    }

    #[test]
    fn equator_of_cycle_is_its_length() {
        assert_eq!(equator_by_enumeration(&Graph::cycle(9)), 9);
        assert_eq!(equator_by_enumeration(&Graph::complete(4)), 3);
        assert_eq!(equator_by_enumeration(&Graph::complete_bipartite(3, 3)), 4);
    }
}
