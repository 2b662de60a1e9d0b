//! Exact graph isomorphism by backtracking with degree and distance-profile
//! pruning. Intended for the orders handled here (up to a few hundred
//! vertices with strong invariants); no canonical-labeling dependency.

use std::collections::HashMap;

use crate::distance::DistanceMatrix;
use crate::graph::Graph;

/// Per-vertex invariant: degree plus the histogram of distances to all other
/// vertices (unreachable collapsed into one bucket).
fn profiles(g: &Graph, dm: &DistanceMatrix) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n)
        .map(|v| {
            let mut hist = vec![0usize; n + 1];
            for w in 0..n {
                match dm.get(v, w) {
                    Some(d) => hist[d] += 1,
                    None => hist[n] += 1,
                }
            }
            hist.push(g.degree(v));
            hist
        })
        .collect()
}

/// True iff the two graphs are isomorphic.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    if n == 0 {
        return true;
    }
    let dm_a = DistanceMatrix::compute(a);
    let dm_b = DistanceMatrix::compute(b);
    let prof_a = profiles(a, &dm_a);
    let prof_b = profiles(b, &dm_b);

    // intern profiles into class ids shared across both graphs
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut intern = |p: &Vec<usize>| {
        let next = ids.len();
        *ids.entry(p.clone()).or_insert(next)
    };
    let class_a: Vec<usize> = prof_a.iter().map(&mut intern).collect();
    let class_b: Vec<usize> = prof_b.iter().map(&mut intern).collect();

    let mut count_a = vec![0usize; ids.len()];
    let mut count_b = vec![0usize; ids.len()];
    for &c in &class_a {
        count_a[c] += 1;
    }
    for &c in &class_b {
        count_b[c] += 1;
    }
    if count_a != count_b {
        return false;
    }

    // map a-vertices in order of ascending class frequency (most constrained
    // first), then id for determinism
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (count_a[class_a[v]], v));

    let mut mapping = vec![usize::MAX; n]; // a -> b
    let mut used = vec![false; n];
    backtrack(
        &order,
        0,
        &class_a,
        &class_b,
        &dm_a,
        &dm_b,
        &mut mapping,
        &mut used,
    )
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    order: &[usize],
    pos: usize,
    class_a: &[usize],
    class_b: &[usize],
    dm_a: &DistanceMatrix,
    dm_b: &DistanceMatrix,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    'candidates: for w in 0..class_b.len() {
        if used[w] || class_b[w] != class_a[v] {
            continue;
        }
        for &u in &order[..pos] {
            if dm_a.get(u, v) != dm_b.get(mapping[u], w) {
                continue 'candidates;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if backtrack(order, pos + 1, class_a, class_b, dm_a, dm_b, mapping, used) {
            return true;
        }
        mapping[v] = usize::MAX;
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_petersen_is_isomorphic() {
        let p = crate::catalog::petersen();
        // relabel v -> (3v + 1) mod 10
        let edges: Vec<(usize, usize)> = p
            .edges()
            .map(|(u, v)| ((3 * u + 1) % 10, (3 * v + 1) % 10))
            .collect();
        let q = Graph::from_edges(10, edges).unwrap();
        assert!(are_isomorphic(&p, &q));
    }

    #[test]
    fn cospectral_mates_by_degree_are_distinguished() {
        // C6 vs two triangles: same degree sequence, not isomorphic
        let c6 = Graph::cycle(6);
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two));
    }

    #[test]
    fn petersen_is_not_a_twisted_prism() {
        // generalized Petersen GP(5,1) (pentagonal prism) vs GP(5,2) (Petersen)
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 1) % 5));
            edges.push((i, 5 + i));
        }
        let prism = Graph::from_edges(10, edges).unwrap();
        assert!(!are_isomorphic(&prism, &crate::catalog::petersen()));
    }

    #[test]
    fn different_sizes_fail_fast() {
        assert!(!are_isomorphic(&Graph::cycle(5), &Graph::cycle(6)));
        assert!(!are_isomorphic(
            &Graph::complete(4),
            &Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
        ));
    }

    #[test]
    fn empty_graphs_are_isomorphic() {
        assert!(are_isomorphic(&Graph::empty(0), &Graph::empty(0)));
        assert!(are_isomorphic(&Graph::empty(3), &Graph::empty(3)));
    }
}
