//! Isomorph-free exhaustive graph generation by orderly vertex augmentation.
//!
//! A labeled graph is canonical when its upper-triangle encoding (column by
//! column, earlier rows more significant) is the maximum over all vertex
//! permutations. Deleting the last vertex of a canonical graph leaves a
//! canonical graph, so augmenting canonical graphs by one vertex with every
//! neighborhood and keeping only canonical results enumerates every
//! isomorphism class exactly once. Canonicity is tested by a pruned
//! permutation scan; fine up to the n <= 12 regime this module enforces.

use crate::graph::Graph;

pub const MAX_VERTICES: usize = 12;

/// Feasibility pruning applied while graphs are grown vertex by vertex.
/// Prunes never cut a graph that could still satisfy the final filters.
#[derive(Debug, Clone, Copy, Default)]
pub struct Constraints {
    /// Discard partial graphs containing a cycle shorter than this.
    pub min_girth: Option<usize>,
    /// Final minimum degree; prunes vertices that can no longer reach it.
    pub min_degree: Option<usize>,
    /// Exact regularity; caps degrees during growth.
    pub regular: Option<usize>,
}

/// Calls `f` on every canonical graph with exactly `n` vertices compatible
/// with the constraints. Emitted graphs still need exact final filtering
/// (the constraints only prune; e.g. `min_girth` admits larger girths).
/// Returns the number of canonicity tests performed (a work measure).
pub fn for_each_canonical_graph<F: FnMut(&Graph)>(
    n: usize,
    constraints: Constraints,
    mut f: F,
) -> u64 {
    assert!(n >= 1, "need at least one vertex");
    assert!(
        n <= MAX_VERTICES,
        "exhaustive generation capped at {MAX_VERTICES}"
    );
    let mut rows = [0u16; MAX_VERTICES];
    let mut tests = 0u64;
    grow(&mut rows, 1, n, &constraints, &mut f, &mut tests);
    tests
}

fn grow<F: FnMut(&Graph)>(
    rows: &mut [u16; MAX_VERTICES],
    m: usize,
    n: usize,
    constraints: &Constraints,
    f: &mut F,
    tests: &mut u64,
) {
    if m == n {
        f(&to_graph(rows, n));
        return;
    }
    // vertex m joins with each neighborhood mask over 0..m
    'mask: for mask in 0u16..(1 << m) {
        let new_degree = mask.count_ones() as usize;
        if let Some(r) = constraints.regular {
            if new_degree > r {
                continue;
            }
            for v in 0..m {
                if mask >> v & 1 == 1 && degree(rows, v, m) + 1 > r {
                    continue 'mask;
                }
            }
        }
        // degree feasibility: every vertex can still gain at most one edge
        // per future vertex
        if let Some(d) = constraints.min_degree.or(constraints.regular) {
            let future = n - m - 1;
            if new_degree + future < d {
                continue;
            }
            for v in 0..m {
                let deg = degree(rows, v, m) + ((mask >> v & 1) as usize);
                if deg + future < d {
                    continue 'mask;
                }
            }
        }
        if let Some(girth) = constraints.min_girth {
            // cycles created through the new vertex have length
            // d_old(a, b) + 2 over chosen pairs a, b
            let shortest = shortest_new_cycle(rows, m, mask);
            if shortest != usize::MAX && shortest + 2 < girth {
                continue;
            }
        }
        for v in 0..m {
            if mask >> v & 1 == 1 {
                rows[v] |= 1 << m;
                rows[m] |= 1 << v;
            }
        }
        *tests += 1;
        if is_canonical(rows, m + 1) {
            grow(rows, m + 1, n, constraints, f, tests);
        }
        rows[m] = 0;
        for row in rows.iter_mut().take(m) {
            *row &= !(1 << m);
        }
    }
}

fn degree(rows: &[u16; MAX_VERTICES], v: usize, m: usize) -> usize {
    (rows[v] & ((1 << m) - 1)).count_ones() as usize
}

/// Minimum distance in the current graph between two chosen neighbors of the
/// incoming vertex (usize::MAX when < 2 neighbors or disconnected choices).
fn shortest_new_cycle(rows: &[u16; MAX_VERTICES], m: usize, mask: u16) -> usize {
    let mut best = usize::MAX;
    let chosen: Vec<usize> = (0..m).filter(|&v| mask >> v & 1 == 1).collect();
    for (i, &a) in chosen.iter().enumerate() {
        // BFS from a within the m-vertex graph
        let mut dist = [usize::MAX; MAX_VERTICES];
        let mut queue = std::collections::VecDeque::new();
        dist[a] = 0;
        queue.push_back(a);
        while let Some(u) = queue.pop_front() {
            for v in 0..m {
                if rows[u] >> v & 1 == 1 && dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for &b in &chosen[i + 1..] {
            best = best.min(dist[b]);
        }
    }
    best
}

/// Column bits for position j under a partial permutation `perm`.
#[inline]
fn column_under(rows: &[u16; MAX_VERTICES], perm: &[usize], vertex: usize) -> u16 {
    let mut col = 0u16;
    for &p in perm {
        col = (col << 1) | ((rows[p] >> vertex) & 1);
    }
    col
}

/// True iff the identity labeling attains the maximum encoding.
fn is_canonical(rows: &[u16; MAX_VERTICES], n: usize) -> bool {
    let reference: Vec<u16> = (1..n)
        .map(|j| {
            let mut col = 0u16;
            for row in rows.iter().take(j) {
                col = (col << 1) | ((row >> j) & 1);
            }
            col
        })
        .collect();
    let mut perm = Vec::with_capacity(n);
    let mut used = [false; MAX_VERTICES];
    !beats_reference(rows, n, &reference, &mut perm, &mut used)
}

/// DFS over permutations; true when some permutation encodes strictly above
/// the reference.
fn beats_reference(
    rows: &[u16; MAX_VERTICES],
    n: usize,
    reference: &[u16],
    perm: &mut Vec<usize>,
    used: &mut [bool; MAX_VERTICES],
) -> bool {
    let pos = perm.len();
    if pos == n {
        return false; // equal to reference all the way down
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        if pos > 0 {
            let col = column_under(rows, perm, v);
            match col.cmp(&reference[pos - 1]) {
                std::cmp::Ordering::Greater => return true,
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => {}
            }
        }
        perm.push(v);
        used[v] = true;
        if beats_reference(rows, n, reference, perm, used) {
            return true;
        }
        used[v] = false;
        perm.pop();
    }
    false
}

fn to_graph(rows: &[u16; MAX_VERTICES], n: usize) -> Graph {
    let adj = (0..n)
        .map(|v| (0..n).filter(|&w| rows[v] >> w & 1 == 1).collect())
        .collect();
    Graph::from_adjacency(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, constraints: Constraints) -> usize {
        let mut total = 0;
        for_each_canonical_graph(n, constraints, |_| total += 1);
        total
    }

    #[test]
    fn counts_all_graphs_match_oeis() {
        // OEIS A000088: graphs on n unlabeled nodes
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(count(i + 1, Constraints::default()), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn counts_connected_graphs_match_oeis() {
        // OEIS A001349: connected graphs on n nodes
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, &want) in expected.iter().enumerate() {
            let mut total = 0;
            for_each_canonical_graph(i + 1, Constraints::default(), |g| {
                if g.is_connected() {
                    total += 1;
                }
            });
            assert_eq!(total, want, "n = {}", i + 1);
        }
    }

    #[test]
    fn emitted_graphs_are_pairwise_non_isomorphic() {
        let mut graphs = Vec::new();
        for_each_canonical_graph(5, Constraints::default(), |g| graphs.push(g.clone()));
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert!(!crate::iso::are_isomorphic(&graphs[i], &graphs[j]));
            }
        }
    }

    #[test]
    fn cubic_graphs_on_eight_vertices() {
        // 5 connected cubic graphs on 8 vertices
        let mut total = 0;
        for_each_canonical_graph(
            8,
            Constraints {
                regular: Some(3),
                ..Default::default()
            },
            |g| {
                if g.is_connected()
                    && g.degree_profile().is_regular
                    && g.degree_profile().min_degree == 3
                {
                    total += 1;
                }
            },
        );
        assert_eq!(total, 5);
    }

    #[test]
    fn girth_pruning_is_safe() {
        // triangle-free graphs on 7 vertices: prune must agree with filter
        let mut pruned = Vec::new();
        for_each_canonical_graph(
            7,
            Constraints {
                min_girth: Some(4),
                ..Default::default()
            },
            |g| pruned.push(crate::io::write_graph6(g)),
        );
        let mut filtered = Vec::new();
        for_each_canonical_graph(7, Constraints::default(), |g| {
            use crate::graph::Girth;
            if !matches!(g.girth(), Girth::Finite(x) if x < 4) {
                filtered.push(crate::io::write_graph6(g));
            }
        });
        assert_eq!(pruned, filtered);
    }
}
