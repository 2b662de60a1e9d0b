//! Generators for the extremal families: spliced Moore/cage chains, the
//! C4-free chains from Brown graphs, the 11-vertex gadget chain, the
//! equator-multiplying chain, the quotient back to a Moore graph, and the
//! direct layered girth-3/4 equatorial graphs.

use thiserror::Error;

use crate::catalog::{CatalogEntry, CatalogError};
use crate::distance::DistanceMatrix;
use crate::field::FieldError;
use crate::graph::Graph;
use crate::projective;
use crate::structure::{self, NotEquatorialReason};

#[derive(Debug, Clone, Error)]
pub enum ConstructionError {
    #[error("j = {j} is invalid; this family needs j >= {min}")]
    InvalidJ { j: usize, min: usize },
    #[error("delta = {0} unsupported: delta + 1 must be a prime power <= 64")]
    UnsupportedDelta(usize),
    #[error("seed {name} cannot be spliced: {reason}")]
    SeedNotSpliceable { name: String, reason: String },
    #[error("input graph is not equatorial: {0}")]
    NotEquatorial(#[from] NotEquatorialReason),
    #[error("partition has no singleton part")]
    NoSingletonPart,
    #[error("invalid part sizes: {0}")]
    InvalidSizes(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Lexicographically least girth cycle, as a vertex sequence starting at its
/// smallest vertex with the smaller neighbor second.
fn least_girth_cycle(g: &Graph, girth: usize) -> Option<Vec<usize>> {
    let dm = DistanceMatrix::compute(g);
    let mut path = Vec::with_capacity(girth);
    for root in 0..g.order() {
        path.clear();
        path.push(root);
        if extend_girth_cycle(g, &dm, girth, &mut path) {
            return Some(path);
        }
    }
    None
}

fn extend_girth_cycle(g: &Graph, dm: &DistanceMatrix, girth: usize, path: &mut Vec<usize>) -> bool {
    let t = path.len();
    if t == girth {
        return g.has_edge(path[girth - 1], path[0]);
    }
    let root = path[0];
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w <= root || path.contains(&w) {
            continue;
        }
        if t == girth - 1 && w <= path[1] {
            continue;
        }
        // must be able to close the cycle in the remaining steps
        if dm.get(w, root).is_none_or(|d| d > girth - t) {
            continue;
        }
        path.push(w);
        if extend_girth_cycle(g, dm, girth, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Chains `j` copies of `block` (order `n`) cyclically: for every (a, b) in
/// `links`, vertex a of copy i is joined to vertex b of copy i+1 (mod j).
fn chain_copies(block: &Graph, j: usize, links: &[(usize, usize)]) -> Graph {
    let n = block.order();
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(j * (block.size() + links.len()));
    for copy in 0..j {
        let offset = copy * n;
        edges.extend(block.edges().map(|(u, v)| (offset + u, offset + v)));
        let next = ((copy + 1) % j) * n;
        edges.extend(links.iter().map(|&(a, b)| (copy * n + a, next + b)));
    }
    Graph::from_edges(j * n, edges).expect("chain is simple")
}

/// Splices `j >= 3` copies of a Moore graph or cage: delete one edge `uv` of
/// a girth cycle from each copy and join the copies in a ring by edges
/// v_i u_{i+1}. The output keeps the seed's degree and girth and has equator
/// j * g. The deleted edge defaults to the least edge of the least girth
/// cycle; any edge on a girth cycle may be supplied instead.
pub fn splice_chain(seed: &CatalogEntry, j: usize) -> Result<Graph, ConstructionError> {
    splice_chain_with_edge(seed, j, None)
}

/// As [`splice_chain`] with an explicit spliced edge.
pub fn splice_chain_with_edge(
    seed: &CatalogEntry,
    j: usize,
    edge: Option<(usize, usize)>,
) -> Result<Graph, ConstructionError> {
    if j < 3 {
        return Err(ConstructionError::InvalidJ { j, min: 3 });
    }
    let fail = |reason: &str| ConstructionError::SeedNotSpliceable {
        name: seed.name.clone(),
        reason: reason.to_string(),
    };
    let girth = seed
        .graph
        .girth()
        .finite()
        .ok_or_else(|| fail("seed is acyclic"))?;
    if seed.graph.degree_profile().min_degree < 3 {
        return Err(fail("seed needs minimum degree at least 3"));
    }
    let (u, v) = match edge {
        Some((a, b)) => {
            if !seed.graph.has_edge(a, b) {
                return Err(fail("chosen edge is not in the seed"));
            }
            // the edge must lie on a girth cycle: deleting it must leave the
            // endpoints at distance g - 1
            let cut = seed.graph.without_edge(a, b).expect("edge exists");
            let dm = DistanceMatrix::compute(&cut);
            if dm.get(a, b) != Some(girth - 1) {
                return Err(fail("chosen edge lies on no girth cycle"));
            }
            (a.min(b), a.max(b))
        }
        None => {
            let cycle =
                least_girth_cycle(&seed.graph, girth).ok_or_else(|| fail("no girth cycle"))?;
            (0..girth)
                .map(|i| {
                    let (a, b) = (cycle[i], cycle[(i + 1) % girth]);
                    (a.min(b), a.max(b))
                })
                .min()
                .expect("cycle has edges")
        }
    };
    let block = seed.graph.without_edge(u, v).expect("edge exists");
    Ok(chain_copies(&block, j, &[(v, u)]))
}

/// The C4-free chain from the Brown graph B(delta + 1): pick a
/// self-orthogonal vertex x with neighbors y, z; drop x and the middle edge
/// of every y-z path of length 3; chain j >= 3 copies by edges from y of one
/// copy to z of the next. Minimum degree delta, C4-free, equator 5j, order
/// j (delta^2 + 3 delta + 2).
pub fn c4free_chain(delta: usize, j: usize) -> Result<Graph, ConstructionError> {
    if j < 3 {
        return Err(ConstructionError::InvalidJ { j, min: 3 });
    }
    let t = (delta + 1) as u64;
    let field = crate::field::GaloisField::new(t)
        .map_err(|_| ConstructionError::UnsupportedDelta(delta))?;
    let brown = projective::brown_graph(t).expect("field exists");
    let x = *projective::self_orthogonal_points(&field)
        .first()
        .expect("t + 1 self-orthogonal points exist");
    let (y, z) = (brown.neighbors(x)[0], brown.neighbors(x)[1]);
    // middle edges of y-a-b-z paths (a, b distinct from x, y, z)
    let mut trimmed = brown.clone();
    for &a in brown.neighbors(y) {
        if a == x || a == z {
            continue;
        }
        for &b in brown.neighbors(z) {
            if b == x || b == y || b == a {
                continue;
            }
            if trimmed.has_edge(a, b) {
                trimmed = trimmed.without_edge(a, b).expect("edge exists");
            }
        }
    }
    let keep: Vec<usize> = (0..brown.order()).filter(|&w| w != x).collect();
    let (block, old_ids) = trimmed.induced_subgraph(&keep);
    let new_id = |old: usize| old_ids.iter().position(|&o| o == old).expect("kept");
    Ok(chain_copies(&block, j, &[(new_id(y), new_id(z))]))
}

/// The 11-vertex gadget from the C4-free delta=3 family, transcribed from
/// its drawing: 0 is the entry u, 10 the exit v; two triangles at the ends
/// joined through a degree-4 hub (vertex 6).
const GADGET11_EDGES: [(usize, usize); 16] = [
    (0, 1),
    (0, 2),
    (1, 2),
    (1, 3),
    (2, 4),
    (3, 5),
    (3, 6),
    (4, 6),
    (4, 7),
    (5, 6),
    (5, 8),
    (6, 7),
    (7, 9),
    (8, 9),
    (8, 10),
    (9, 10),
];

/// Chains `j >= 3` copies of the fixed 11-vertex gadget by edges v_i u_{i+1}.
/// C4-free, minimum degree 3, order 11j, equator 6j.
pub fn gadget11_chain(j: usize) -> Result<Graph, ConstructionError> {
    if j < 3 {
        return Err(ConstructionError::InvalidJ { j, min: 3 });
    }
    let block = Graph::from_edges(11, GADGET11_EDGES).expect("gadget is simple");
    Ok(chain_copies(&block, j, &[(10, 0)]))
}

/// Multiplies an equatorial graph's equator by `j >= 2`: cut the edges from
/// L_{q-1} to L_0 and chain j copies cyclically by the same edges across
/// consecutive copies. The result is equatorial with equator j*q.
pub fn multiply_equatorial(g: &Graph, j: usize) -> Result<Graph, ConstructionError> {
    if j < 2 {
        return Err(ConstructionError::InvalidJ { j, min: 2 });
    }
    let cert = structure::certify_equatorial(g)?;
    let partition = &cert.partition;
    let q = partition.q();
    let mut cut: Vec<(usize, usize)> = Vec::new();
    for &u in partition.part(q - 1) {
        for &v in partition.part(0) {
            if g.has_edge(u, v) {
                cut.push((u, v));
            }
        }
    }
    let mut block = g.clone();
    for &(u, v) in &cut {
        block = block.without_edge(u, v).expect("edge exists");
    }
    Ok(chain_copies(&block, j, &cut))
}

/// Quotients an equatorial graph with a singleton part back to a Moore
/// graph: take the induced subgraph on g+1 consecutive parts starting and
/// ending at singletons (periodicity forces the far end to be a singleton
/// too) and identify the two end vertices.
pub fn quotient_to_moore(g: &Graph) -> Result<Graph, ConstructionError> {
    let cert = structure::certify_equatorial(g)?;
    let partition = &cert.partition;
    let q = partition.q();
    let girth = cert.girth;
    let start = (0..q)
        .find(|&i| partition.part(i).len() == 1)
        .ok_or(ConstructionError::NoSingletonPart)?;
    let u = partition.part(start)[0];
    let far = partition.part((start + girth) % q);
    debug_assert_eq!(far.len(), 1, "periodicity forces a singleton at distance g");
    let v = far[0];

    let mut window = Vec::new();
    for t in 0..=girth {
        window.extend_from_slice(partition.part((start + t) % q));
    }
    let keep: Vec<usize> = window.iter().copied().filter(|&w| w != v).collect();
    let (mut sub, old_ids) = g.induced_subgraph(&keep);
    let new_id = |old: usize| old_ids.iter().position(|&o| o == old).expect("kept");
    // redirect v's edges inside the window to u
    let window_set: std::collections::HashSet<usize> = window.iter().copied().collect();
    let u_new = new_id(u);
    let mut edges: Vec<(usize, usize)> = sub.edges().collect();
    for &w in g.neighbors(v) {
        if w != u && window_set.contains(&w) {
            edges.push((u_new, new_id(w)));
        }
    }
    sub = Graph::from_edges(sub.order(), edges).expect("quotient is simple");
    Ok(sub)
}

/// Layered girth-3 equatorial graph: q parts of sizes repeating
/// (n0, n1, n2), each part a clique, consecutive parts completely joined.
/// Regular of degree n0 + n1 + n2 - 1, girth 3, equator q.
pub fn girth3_equatorial(q: usize, sizes: [usize; 3]) -> Result<Graph, ConstructionError> {
    let [n0, n1, n2] = sizes;
    if n0 == 0 || n1 == 0 || n2 == 0 {
        return Err(ConstructionError::InvalidSizes(
            "all parts must be nonempty".into(),
        ));
    }
    if n0 + n1 + n2 < 4 {
        return Err(ConstructionError::InvalidSizes(
            "sizes must sum to at least 4 (delta >= 3) to force girth 3".into(),
        ));
    }
    if !q.is_multiple_of(3) && !(n0 == n1 && n1 == n2) {
        return Err(ConstructionError::InvalidSizes(format!(
            "q = {q} is not a multiple of 3, so all part sizes must be equal"
        )));
    }
    if q < 4 {
        return Err(ConstructionError::InvalidSizes("need q >= 4".into()));
    }
    Ok(layered_graph(q, &[n0, n1, n2], true))
}

/// Layered girth-4 equatorial graph: q independent parts of sizes repeating
/// (n0, n1, n2, n3) with n0 + n2 = n1 + n3 = delta, consecutive parts
/// completely joined. Regular of degree delta, girth 4, equator q.
pub fn girth4_equatorial(q: usize, sizes: [usize; 4]) -> Result<Graph, ConstructionError> {
    let [n0, n1, n2, n3] = sizes;
    if sizes.contains(&0) {
        return Err(ConstructionError::InvalidSizes(
            "all parts must be nonempty".into(),
        ));
    }
    if n0 + n2 != n1 + n3 {
        return Err(ConstructionError::InvalidSizes(format!(
            "opposite sizes must agree: n0+n2 = {} but n1+n3 = {}",
            n0 + n2,
            n1 + n3
        )));
    }
    if n0 + n2 < 3 && sizes.iter().all(|&s| s == 1) {
        return Err(ConstructionError::InvalidSizes(
            "all-singleton parts give a plain cycle, not girth 4".into(),
        ));
    }
    if !q.is_multiple_of(4) && !(n0 == n1 && n1 == n2 && n2 == n3) {
        return Err(ConstructionError::InvalidSizes(format!(
            "q = {q} is not a multiple of 4, so all part sizes must be equal"
        )));
    }
    if q < 5 {
        return Err(ConstructionError::InvalidSizes("need q >= 5".into()));
    }
    Ok(layered_graph(q, &[n0, n1, n2, n3], false))
}

fn layered_graph(q: usize, pattern: &[usize], cliques: bool) -> Graph {
    let mut parts: Vec<Vec<usize>> = Vec::with_capacity(q);
    let mut next = 0;
    for i in 0..q {
        let size = pattern[i % pattern.len()];
        parts.push((next..next + size).collect());
        next += size;
    }
    let mut edges = Vec::new();
    for i in 0..q {
        if cliques {
            for (a_idx, &a) in parts[i].iter().enumerate() {
                for &b in &parts[i][a_idx + 1..] {
                    edges.push((a, b));
                }
            }
        }
        for &a in &parts[i] {
            for &b in &parts[(i + 1) % q] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(next, edges).expect("layered graph is simple")
}
