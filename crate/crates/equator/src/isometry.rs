//! Isometric-cycle certification and exact equator computation.
//!
//! A cycle is isometric when every pair of its vertices is as close in the
//! host graph as it is along the cycle. The equator search runs candidate
//! lengths downward from the `2*diam + 1` ceiling, growing paths that satisfy
//! the cycle metric on every prefix pair; any extension of a violating prefix
//! also violates, so pruning is exact.

use rayon::prelude::*;
use thiserror::Error;

use crate::distance::DistanceMatrix;
use crate::graph::{Girth, Graph};
use crate::structure::EquatorPartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsometryError {
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("host graph violates equatorial structure: {0}")]
    NotEquatorial(String),
}

/// An ordered vertex sequence certified to be an isometric cycle of some
/// host graph. Only produced by checks that verify the certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometricCycle {
    vertices: Vec<usize>,
}

impl IsometricCycle {
    /// Certifies a vertex sequence against a host graph, taking ownership.
    pub fn certify(
        g: &Graph,
        dm: &DistanceMatrix,
        vertices: Vec<usize>,
    ) -> Result<IsometricCycle, IsometryError> {
        if is_isometric_cycle(g, dm, &vertices)? {
            Ok(IsometricCycle { vertices })
        } else {
            Err(IsometryError::NotACycle(
                "cycle fails the isometry certificate".into(),
            ))
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Rotates/reflects so the smallest vertex comes first and its smaller
    /// neighbor second.
    pub fn canonicalize(&mut self) {
        let q = self.vertices.len();
        let pos = (0..q)
            .min_by_key(|&i| self.vertices[i])
            .expect("nonempty cycle");
        self.vertices.rotate_left(pos);
        if self.vertices[1] > self.vertices[q - 1] {
            self.vertices[1..].reverse();
        }
    }
}

/// Distance along a cycle of length `len` between positions `s` apart.
#[inline]
fn cycle_metric(len: usize, s: usize) -> usize {
    s.min(len - s)
}

/// True iff `seq` is a cycle of `g` whose pairwise graph distances all equal
/// the cycle metric. Errors if the sequence is not a cycle at all.
pub fn is_isometric_cycle(
    g: &Graph,
    dm: &DistanceMatrix,
    seq: &[usize],
) -> Result<bool, IsometryError> {
    let q = seq.len();
    if q < 3 {
        return Err(IsometryError::NotACycle(format!(
            "sequence of length {q} is too short"
        )));
    }
    if seq.iter().any(|&v| v >= g.order()) {
        return Err(IsometryError::NotACycle("vertex out of range".into()));
    }
    let mut seen = vec![false; g.order()];
    for &v in seq {
        if std::mem::replace(&mut seen[v], true) {
            return Err(IsometryError::NotACycle(format!("vertex {v} repeats")));
        }
    }
    for i in 0..q {
        let (u, v) = (seq[i], seq[(i + 1) % q]);
        if !g.has_edge(u, v) {
            return Err(IsometryError::NotACycle(format!(
                "({u}, {v}) is not an edge"
            )));
        }
    }
    for i in 0..q {
        for j in i + 1..q {
            if dm.get(seq[i], seq[j]) != Some(cycle_metric(q, j - i)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of an equator search.
#[derive(Debug, Clone)]
pub struct EquatorResult {
    /// Longest isometric cycle length found (0 for acyclic graphs). When the
    /// search was capped this is the longest length not exceeding the cap.
    pub equator: usize,
    pub witness: Option<IsometricCycle>,
    /// True iff a caller-supplied cap reduced the natural search ceiling.
    pub search_capped: bool,
}

/// Exact equator. Lengths are searched descending from
/// `min(2*diam + 1, n, cap)`, so the first hit is the answer; within a
/// length, start vertices ascend and neighbors ascend, which makes the
/// witness deterministic.
pub fn equator(g: &Graph, cap: Option<usize>) -> EquatorResult {
    let dm = DistanceMatrix::compute(g);
    equator_with(g, &dm, cap)
}

/// As [`equator`], reusing a precomputed distance matrix.
pub fn equator_with(g: &Graph, dm: &DistanceMatrix, cap: Option<usize>) -> EquatorResult {
    let girth = match g.girth() {
        Girth::Finite(girth) => girth,
        Girth::Infinite => {
            return EquatorResult {
                equator: 0,
                witness: None,
                search_capped: false,
            }
        }
    };
    let natural = (2 * dm.max_finite() + 1).min(g.order());
    let mut ceiling = natural;
    let mut search_capped = false;
    if let Some(c) = cap {
        if c < natural {
            ceiling = c;
            search_capped = true;
        }
    }
    for len in (girth..=ceiling).rev() {
        let hit = (0..g.order()).into_par_iter().find_map_first(|root| {
            let mut found = None;
            let mut path = Vec::with_capacity(len);
            path.push(root);
            extend(g, dm, len, true, &mut path, &mut |p: &[usize]| {
                found = Some(p.to_vec());
                true
            });
            found
        });
        if let Some(vertices) = hit {
            return EquatorResult {
                equator: len,
                witness: Some(IsometricCycle { vertices }),
                search_capped,
            };
        }
    }
    // Only reachable when a cap cut the search below the girth.
    EquatorResult {
        equator: 0,
        witness: None,
        search_capped,
    }
}

/// Collects isometric cycles of exactly `len`, in canonical enumeration
/// order, up to `limit`.
pub fn enumerate_isometric_cycles(
    g: &Graph,
    dm: &DistanceMatrix,
    len: usize,
    limit: usize,
) -> Vec<IsometricCycle> {
    let mut out = Vec::new();
    for root in 0..g.order() {
        if out.len() >= limit {
            break;
        }
        let mut path = Vec::with_capacity(len);
        path.push(root);
        extend(g, dm, len, true, &mut path, &mut |p: &[usize]| {
            out.push(IsometricCycle {
                vertices: p.to_vec(),
            });
            out.len() >= limit
        });
    }
    out
}

/// Isometric cycles of exactly `len` through the vertex `v`, up to `limit`.
/// Each cycle is reported once (rooted at `v`, orientation fixed).
pub fn isometric_cycles_through(
    g: &Graph,
    dm: &DistanceMatrix,
    len: usize,
    v: usize,
    limit: usize,
) -> Vec<IsometricCycle> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    path.push(v);
    extend(g, dm, len, false, &mut path, &mut |p: &[usize]| {
        out.push(IsometricCycle {
            vertices: p.to_vec(),
        });
        out.len() >= limit
    });
    out
}

/// Core DFS. Grows `path` into cycles of exactly `len` satisfying the cycle
/// metric on all prefix pairs. With `min_root`, every vertex must exceed
/// `path[0]` (canonical rooting); either way the orientation with
/// `path[1] < path[len-1]` is the only one produced. Returns true when the
/// callback stopped the search.
fn extend<F: FnMut(&[usize]) -> bool>(
    g: &Graph,
    dm: &DistanceMatrix,
    len: usize,
    min_root: bool,
    path: &mut Vec<usize>,
    on_found: &mut F,
) -> bool {
    let t = path.len();
    if t == len {
        return on_found(path);
    }
    let root = path[0];
    let last = *path.last().unwrap();
    'next: for &w in g.neighbors(last) {
        if min_root && w <= root {
            continue;
        }
        if t == len - 1 && w <= path[1] {
            continue;
        }
        for (i, &p) in path.iter().enumerate() {
            if dm.get(p, w) != Some(cycle_metric(len, t - i)) {
                continue 'next;
            }
        }
        path.push(w);
        if extend(g, dm, len, min_root, path, on_found) {
            return true;
        }
        path.pop();
    }
    false
}

/// Lexicographically least geodesic from `a` to `b`.
fn least_geodesic(g: &Graph, dm: &DistanceMatrix, a: usize, b: usize) -> Vec<usize> {
    let mut path = vec![a];
    let mut cur = a;
    let mut remaining = dm.d(a, b);
    while remaining > 0 {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| dm.get(w, b) == Some(remaining - 1))
            .expect("geodesic step must exist");
        path.push(next);
        cur = next;
        remaining -= 1;
    }
    path
}

/// Builds an isometric q-cycle through `v` from a base cycle, by swapping the
/// short arc of the base for a geodesic through `v`: if `v` sits in part
/// `L_i`, the arc from position i-k to i+k is replaced by a shortest path
/// `u_{i-k} .. v .. u_{i+k}`. Fails with `NotEquatorial` when the host does
/// not support the swap.
pub fn isometric_cycle_through(
    g: &Graph,
    dm: &DistanceMatrix,
    base: &IsometricCycle,
    v: usize,
    partition: &EquatorPartition,
) -> Result<IsometricCycle, IsometryError> {
    if base.contains(v) {
        return Ok(base.clone());
    }
    let q = base.len();
    let k = partition.disk_radius();
    let i = partition
        .part_of(v)
        .ok_or_else(|| IsometryError::NotEquatorial(format!("vertex {v} is in no part")))?;
    let a = base.vertices()[(i + q - (k % q)) % q];
    let b = base.vertices()[(i + k) % q];
    if dm.get(a, v) != Some(k) || dm.get(v, b) != Some(k) {
        return Err(IsometryError::NotEquatorial(format!(
            "vertex {v} is not midway between cycle positions {} and {}",
            (i + q - (k % q)) % q,
            (i + k) % q
        )));
    }
    let mut geodesic = least_geodesic(g, dm, a, v);
    geodesic.extend(least_geodesic(g, dm, v, b).into_iter().skip(1));
    debug_assert_eq!(geodesic.len(), 2 * k + 1);
    // geodesic covers positions i-k .. i+k; keep the rest of the base.
    let mut vertices = geodesic;
    for t in (2 * k + 1)..q {
        vertices.push(base.vertices()[(i + q - (k % q) + t) % q]);
    }
    match is_isometric_cycle(g, dm, &vertices) {
        Ok(true) => {
            let mut cycle = IsometricCycle { vertices };
            cycle.canonicalize();
            Ok(cycle)
        }
        Ok(false) => Err(IsometryError::NotEquatorial(
            "geodesic swap produced a non-isometric cycle".into(),
        )),
        Err(e) => Err(IsometryError::NotEquatorial(format!(
            "geodesic swap produced a non-cycle: {e}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn petersen() -> Graph {
        crate::catalog::petersen()
    }

    #[test]
    fn cycle_graph_is_its_own_equator() {
        for n in [3usize, 4, 5, 8, 11] {
            let g = Graph::cycle(n);
            let r = equator(&g, None);
            assert_eq!(r.equator, n);
            let w = r.witness.unwrap();
            assert_eq!(w.len(), n);
            assert!(!r.search_capped);
        }
    }

    #[test]
    fn petersen_equator_is_five() {
        let g = petersen();
        let r = equator(&g, None);
        assert_eq!(r.equator, 5);
        let dm = DistanceMatrix::compute(&g);
        assert!(is_isometric_cycle(&g, &dm, r.witness.unwrap().vertices()).unwrap());
    }

    #[test]
    fn petersen_five_cycles_pass_six_cycles_fail() {
        let g = petersen();
        let dm = DistanceMatrix::compute(&g);
        // outer five-cycle
        assert!(is_isometric_cycle(&g, &dm, &[0, 1, 2, 3, 4]).unwrap());
        // a six-cycle: 0-4-9-7-2-1-0 (antipodal pairs at cycle distance 3 > diam 2)
        assert_eq!(is_isometric_cycle(&g, &dm, &[0, 4, 9, 7, 2, 1]), Ok(false));
    }

    #[test]
    fn cube_has_an_isometric_hexagon() {
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (0, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        let dm = DistanceMatrix::compute(&g);
        // 000-001-011-111-110-100 in binary labels
        assert!(is_isometric_cycle(&g, &dm, &[0, 1, 3, 7, 6, 4]).unwrap());
        assert_eq!(equator(&g, None).equator, 6);
    }

    #[test]
    fn small_graph_equators() {
        assert_eq!(equator(&Graph::complete(4), None).equator, 3);
        assert_eq!(equator(&Graph::complete_bipartite(3, 3), None).equator, 4);
    }

    #[test]
    fn forest_has_equator_zero() {
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let r = equator(&tree, None);
        assert_eq!(r.equator, 0);
        assert!(r.witness.is_none());
        assert!(!r.search_capped);
    }

    #[test]
    fn cap_marks_result() {
        let g = Graph::cycle(12);
        let r = equator(&g, Some(6));
        assert!(r.search_capped);
        assert_eq!(r.equator, 0); // C12 has no isometric cycle shorter than 12
        let r2 = equator(&g, Some(20));
        assert!(!r2.search_capped);
        assert_eq!(r2.equator, 12);
    }

    #[test]
    fn not_a_cycle_errors() {
        let g = petersen();
        let dm = DistanceMatrix::compute(&g);
        assert!(matches!(
            is_isometric_cycle(&g, &dm, &[0, 1]),
            Err(IsometryError::NotACycle(_))
        ));
        assert!(matches!(
            is_isometric_cycle(&g, &dm, &[0, 1, 2, 2]),
            Err(IsometryError::NotACycle(_))
        ));
        // 0-1-3 is not a triangle in Petersen
        assert!(matches!(
            is_isometric_cycle(&g, &dm, &[0, 1, 3]),
            Err(IsometryError::NotACycle(_))
        ));
    }

    #[test]
    fn equator_matches_enumeration_oracle_on_samples() {
        let samples = vec![
            petersen(),
            Graph::complete(5),
            Graph::complete_bipartite(2, 4),
            Graph::cycle(7),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        for g in samples {
            assert_eq!(
                equator(&g, None).equator,
                oracle::equator_by_enumeration(&g)
            );
        }
    }

    #[test]
    fn enumerate_collects_distinct_witnesses() {
        let g = petersen();
        let dm = DistanceMatrix::compute(&g);
        let cycles = enumerate_isometric_cycles(&g, &dm, 5, 50);
        // Petersen has 12 five-cycles, all isometric
        assert_eq!(cycles.len(), 12);
        for c in &cycles {
            assert!(is_isometric_cycle(&g, &dm, c.vertices()).unwrap());
        }
    }

    #[test]
    fn cycles_through_vertex_all_contain_it() {
        let g = petersen();
        let dm = DistanceMatrix::compute(&g);
        for v in 0..10 {
            let through = isometric_cycles_through(&g, &dm, 5, v, 100);
            // every vertex of Petersen lies on six 5-cycles
            assert_eq!(through.len(), 6);
            assert!(through.iter().all(|c| c.contains(v)));
        }
    }

    #[test]
    fn swap_returns_base_when_vertex_already_on_it() {
        let seed = crate::catalog::moore_catalog(3, 4).unwrap();
        let g = crate::constructions::splice_chain(&seed, 3).unwrap();
        let cert = crate::structure::certify_equatorial(&g).unwrap();
        let dm = DistanceMatrix::compute(&g);
        let v = cert.witness.vertices()[3];
        let cycle = isometric_cycle_through(&g, &dm, &cert.witness, v, &cert.partition).unwrap();
        assert_eq!(cycle, cert.witness);
    }

    mod properties {
        use super::*;
        use crate::testutil::arbitrary_graph;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn matches_brute_force_on_random_graphs(g in arbitrary_graph(9)) {
                let fast = equator(&g, None);
                prop_assert_eq!(fast.equator, oracle::equator_by_enumeration(&g));
                prop_assert_eq!(g.girth(), oracle::girth_by_enumeration(&g));
                if let Some(w) = fast.witness {
                    let dm = DistanceMatrix::compute(&g);
                    prop_assert!(is_isometric_cycle(&g, &dm, w.vertices()).unwrap());
                }
            }
        }
    }
}
