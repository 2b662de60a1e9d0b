//! The projective plane PG(2, t): point enumeration, Brown polarity graphs,
//! and point-line incidence graphs (the girth-6 Moore graphs).

use crate::field::{FieldElement, FieldError, GaloisField};
use crate::graph::Graph;

/// A point of PG(2, t): a coordinate triple, not all zero, normalized so the
/// first nonzero coordinate is 1. Lines are represented by their dual triples
/// with the same normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    pub coords: [FieldElement; 3],
}

/// All t^2 + t + 1 normalized points, in lexicographic coordinate order.
pub fn projective_points(field: &GaloisField) -> Vec<ProjectivePoint> {
    let t = field.order();
    let mut points = Vec::with_capacity((t * t + t + 1) as usize);
    for a in 0..t {
        for b in 0..t {
            for c in 0..t {
                let coords = [FieldElement(a), FieldElement(b), FieldElement(c)];
                let first_nonzero = coords.iter().find(|e| e.0 != 0);
                if first_nonzero == Some(&FieldElement(1)) {
                    points.push(ProjectivePoint { coords });
                }
            }
        }
    }
    points.sort();
    points
}

/// Dot product of two coordinate triples.
pub fn dot(field: &GaloisField, a: &ProjectivePoint, b: &ProjectivePoint) -> FieldElement {
    let mut acc = field.zero();
    for i in 0..3 {
        acc = field.add(acc, field.mul(a.coords[i], b.coords[i]));
    }
    acc
}

/// Indexes (into `projective_points`) of the self-orthogonal points, i.e.
/// points on their own polar line. There are exactly t + 1 of them.
pub fn self_orthogonal_points(field: &GaloisField) -> Vec<usize> {
    projective_points(field)
        .iter()
        .enumerate()
        .filter(|(_, p)| dot(field, p, p).0 == 0)
        .map(|(i, _)| i)
        .collect()
}

/// The Brown graph B(t) (Erdos-Renyi polarity graph): vertices are the
/// points of PG(2, t), two distinct points adjacent when their triples are
/// orthogonal. Self-orthogonal points get no loop. C4-free, order
/// t^2 + t + 1, with t + 1 vertices of degree t and t^2 of degree t + 1.
pub fn brown_graph(t: u64) -> Result<Graph, FieldError> {
    let field = GaloisField::new(t)?;
    let points = projective_points(&field);
    let n = points.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if dot(&field, &points[i], &points[j]).0 == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("polarity graph is simple"))
}

/// The point-line incidence graph of PG(2, t): bipartite, (t+1)-regular,
/// order 2(t^2 + t + 1), girth 6 — a Moore graph for girth 6 and degree
/// t + 1. Points come first, lines (dual triples) after.
pub fn pg2_incidence_graph(t: u64) -> Result<Graph, FieldError> {
    let field = GaloisField::new(t)?;
    let points = projective_points(&field);
    let n = points.len();
    let mut edges = Vec::new();
    for (p, point) in points.iter().enumerate() {
        for (l, line) in points.iter().enumerate() {
            if dot(&field, point, line).0 == 0 {
                edges.push((p, n + l));
            }
        }
    }
    Ok(Graph::from_edges(2 * n, edges).expect("incidence graph is simple"))
}
