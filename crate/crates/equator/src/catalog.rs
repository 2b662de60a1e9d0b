//! Named Moore graphs and cages used as splice seeds.

use thiserror::Error;

use crate::bounds::moore_bound;
use crate::graph::Graph;
use crate::projective::pg2_incidence_graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no known Moore graph with delta={delta}, girth={girth}")]
    NoKnownMooreGraph { delta: usize, girth: usize },
    #[error("no known cage with delta={delta}, girth={girth}")]
    NoKnownCage { delta: usize, girth: usize },
}

/// A named graph with its certified parameters.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub graph: Graph,
    pub delta: usize,
    pub girth: usize,
    /// True iff the order attains the Moore bound M(delta, girth).
    pub is_moore: bool,
}

impl CatalogEntry {
    fn new(name: &str, graph: Graph, delta: usize, girth: usize) -> CatalogEntry {
        let is_moore =
            moore_bound(delta as u64, girth as u64).is_ok_and(|m| m == graph.order() as u64);
        CatalogEntry {
            name: name.to_string(),
            graph,
            delta,
            girth,
            is_moore,
        }
    }
}

/// The Petersen graph: outer pentagon 0-4, inner pentagram 5-9, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges).unwrap()
}

/// The Hoffman-Singleton graph via the pentagon/pentagram rule: pentagons
/// P_h (vertices 5h+j, j adjacent j+-1) and pentagrams Q_i (vertices
/// 25+5i+j, j adjacent j+-2), with P_{h,j} adjacent to Q_{i,(hi+j) mod 5}.
pub fn hoffman_singleton() -> Graph {
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((5 * h + j, 5 * h + (j + 1) % 5));
            edges.push((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                edges.push((5 * h + j, 25 + 5 * i + (h * i + j) % 5));
            }
        }
    }
    Graph::from_edges(50, edges).unwrap()
}

/// The Robertson graph: the unique (4,5)-cage, order 19.
pub fn robertson() -> Graph {
    const ADJ: [[usize; 4]; 19] = [
        [1, 2, 3, 4],
        [0, 5, 6, 7],
        [0, 8, 9, 10],
        [0, 11, 12, 13],
        [0, 14, 15, 16],
        [1, 11, 15, 17],
        [1, 8, 12, 14],
        [1, 13, 16, 18],
        [2, 6, 11, 16],
        [2, 13, 14, 17],
        [2, 12, 15, 18],
        [3, 5, 8, 18],
        [3, 6, 10, 17],
        [3, 7, 9, 15],
        [4, 6, 9, 18],
        [4, 5, 10, 13],
        [4, 7, 8, 17],
        [5, 9, 12, 16],
        [7, 10, 11, 14],
    ];
    Graph::from_adjacency(ADJ.iter().map(|row| row.to_vec()).collect())
}

/// A (5,5)-cage, order 30: the Hoffman-Singleton graph with two disjoint
/// induced Petersen subgraphs (pentagon P_h plus pentagram Q_h with their
/// spoke matching) removed. Every outside vertex has exactly one neighbor in
/// each removed Petersen, so the remainder is 5-regular with girth 5.
fn cage_5_5() -> Graph {
    let hs = hoffman_singleton();
    let keep: Vec<usize> = (0..50)
        .filter(|&v| !(v < 10 || (25..35).contains(&v)))
        .collect();
    hs.induced_subgraph(&keep).0
}

/// The (6,5)-cage, order 40: Hoffman-Singleton minus one induced Petersen.
fn cage_6_5() -> Graph {
    let hs = hoffman_singleton();
    let keep: Vec<usize> = (0..50)
        .filter(|&v| !(v < 5 || (25..30).contains(&v)))
        .collect();
    hs.induced_subgraph(&keep).0
}

/// Known Moore graphs: K_{delta+1} (girth 3), K_{delta,delta} (girth 4),
/// Petersen (3,5), Hoffman-Singleton (7,5), and the PG(2, t) incidence
/// graphs (t+1, 6) for prime powers t <= 64.
pub fn moore_catalog(delta: usize, girth: usize) -> Result<CatalogEntry, CatalogError> {
    let not_found = CatalogError::NoKnownMooreGraph { delta, girth };
    match (delta, girth) {
        (d, 3) if d >= 2 => Ok(CatalogEntry::new(
            &format!("K{}", d + 1),
            Graph::complete(d + 1),
            d,
            3,
        )),
        (d, 4) if d >= 2 => Ok(CatalogEntry::new(
            &format!("K{d},{d}"),
            Graph::complete_bipartite(d, d),
            d,
            4,
        )),
        (3, 5) => Ok(CatalogEntry::new("petersen", petersen(), 3, 5)),
        (7, 5) => Ok(CatalogEntry::new(
            "hoffman-singleton",
            hoffman_singleton(),
            7,
            5,
        )),
        (d, 6) if d >= 3 => {
            let t = (d - 1) as u64;
            let graph = pg2_incidence_graph(t).map_err(|_| not_found.clone())?;
            Ok(CatalogEntry::new(
                &format!("pg2-{t}-incidence"),
                graph,
                d,
                6,
            ))
        }
        _ => Err(not_found),
    }
}

/// Known cages. Girth-5 entries beyond the Moore cases come from the
/// Hoffman-Singleton subtractions and the Robertson graph; everywhere a
/// Moore graph exists, the cage is that Moore graph.
pub fn cage_catalog(delta: usize, girth: usize) -> Result<CatalogEntry, CatalogError> {
    match (delta, girth) {
        (4, 5) => Ok(CatalogEntry::new("robertson", robertson(), 4, 5)),
        (5, 5) => Ok(CatalogEntry::new("cage-5-5", cage_5_5(), 5, 5)),
        (6, 5) => Ok(CatalogEntry::new("cage-6-5", cage_6_5(), 6, 5)),
        _ => moore_catalog(delta, girth).map_err(|_| CatalogError::NoKnownCage { delta, girth }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    fn check(entry: &CatalogEntry, order: usize, moore: bool) {
        let p = entry.graph.degree_profile();
        assert_eq!(entry.graph.order(), order, "{}", entry.name);
        assert!(p.is_regular, "{} must be regular", entry.name);
        assert_eq!(p.min_degree, entry.delta, "{}", entry.name);
        assert_eq!(
            entry.graph.girth(),
            Girth::Finite(entry.girth),
            "{}",
            entry.name
        );
        assert_eq!(entry.is_moore, moore, "{}", entry.name);
        assert!(entry.graph.is_connected(), "{}", entry.name);
    }

    #[test]
    fn moore_entries() {
        check(&moore_catalog(3, 5).unwrap(), 10, true);
        check(&moore_catalog(4, 3).unwrap(), 5, true);
        check(&moore_catalog(3, 4).unwrap(), 6, true);
        check(&moore_catalog(7, 5).unwrap(), 50, true);
        check(&moore_catalog(3, 6).unwrap(), 14, true);
        check(&moore_catalog(4, 6).unwrap(), 26, true);
        check(&moore_catalog(5, 6).unwrap(), 42, true);
    }

    #[test]
    fn missing_moore_graphs() {
        assert!(moore_catalog(4, 5).is_err());
        assert!(moore_catalog(57, 5).is_err());
        assert!(moore_catalog(5, 5).is_err());
        assert!(moore_catalog(7, 6).is_err()); // 6 is not a prime power
    }

    #[test]
    fn girth5_cages() {
        check(&cage_catalog(3, 5).unwrap(), 10, true);
        check(&cage_catalog(4, 5).unwrap(), 19, false);
        check(&cage_catalog(5, 5).unwrap(), 30, false);
        check(&cage_catalog(6, 5).unwrap(), 40, false);
        check(&cage_catalog(7, 5).unwrap(), 50, true);
        assert!(cage_catalog(8, 5).is_err());
    }

    #[test]
    fn petersen_is_the_unique_3_5_moore_graph_shape() {
        let g = petersen();
        assert_eq!(g.diameter_and_radius().unwrap(), (2, 2));
        for v in 0..10 {
            assert_eq!(g.disk(v, 1).unwrap().len(), 4);
        }
    }
}
