//! One-stop analysis bundling the invariants of a graph: order, degrees,
//! girth, diameter, radius, equator with witness, the order bound verdict,
//! and the equatorial flag with part sizes.

use serde::Serialize;

use crate::bounds::{self, BoundReport};
use crate::distance::DistanceMatrix;
use crate::graph::Graph;
use crate::isometry;
use crate::structure;

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    /// Cap the equator search ceiling (for very large constructed inputs).
    pub cap: Option<usize>,
    /// Compute the induced partition sizes when the graph is equatorial.
    pub partition: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub connected: bool,
    /// None encodes infinite girth (acyclic).
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub radius: Option<usize>,
    pub equator: usize,
    pub search_capped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<BoundReport>,
    pub equatorial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part_sizes: Option<Vec<usize>>,
}

/// Full analysis. The equatorial flag is exactly: connected, in the
/// q > 6k + 3 regime, and order bound tight. A capped search never sets the
/// flag (the equator may be an undercount).
pub fn analyze(g: &Graph, options: AnalyzeOptions) -> AnalysisReport {
    let dm = DistanceMatrix::compute(g);
    let profile = g.degree_profile();
    let connected = dm.is_connected();
    let girth = g.girth().finite();
    let (diameter, radius) = if connected && g.order() > 0 {
        let (d, r) = g.diameter_and_radius().expect("connected");
        (Some(d), Some(r))
    } else {
        (None, None)
    };
    let result = isometry::equator_with(g, &dm, options.cap);
    let bound = girth.map(|girth| {
        bounds::equatorial_bound_check(
            g.order() as u64,
            profile.min_degree as u64,
            girth as u64,
            result.equator as u64,
        )
    });
    let equatorial = connected
        && !result.search_capped
        && bound.as_ref().is_some_and(|b| b.regime_ok && b.tight);
    let part_sizes = (options.partition && equatorial)
        .then(|| {
            let witness = result.witness.as_ref()?;
            structure::induced_partition(g, &dm, witness)
                .ok()
                .map(|p| p.sizes())
        })
        .flatten();
    AnalysisReport {
        n: g.order(),
        m: g.size(),
        delta: profile.min_degree,
        max_degree: profile.max_degree,
        regular: profile.is_regular,
        connected,
        girth,
        diameter,
        radius,
        equator: result.equator,
        search_capped: result.search_capped,
        witness: result.witness.map(|w| w.vertices().to_vec()),
        bound,
        equatorial,
        part_sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_report() {
        let g = crate::catalog::petersen();
        let r = analyze(&g, AnalyzeOptions::default());
        assert_eq!((r.n, r.m, r.delta), (10, 15, 3));
        assert_eq!(r.girth, Some(5));
        assert_eq!((r.diameter, r.radius), (Some(2), Some(2)));
        assert_eq!(r.equator, 5);
        assert!(!r.equatorial); // q = 5 is outside the regime
        assert!(r.regular && r.connected);
    }

    #[test]
    fn spliced_chain_is_equatorial_with_parts() {
        let seed = crate::catalog::moore_catalog(3, 4).unwrap();
        let g = crate::constructions::splice_chain(&seed, 3).unwrap();
        let r = analyze(
            &g,
            AnalyzeOptions {
                cap: None,
                partition: true,
            },
        );
        assert!(r.equatorial);
        assert_eq!(r.equator, 12);
        assert_eq!(
            r.part_sizes.unwrap(),
            vec![1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2, 1]
        );
        assert!(r.bound.unwrap().tight);
    }

    #[test]
    fn forest_report() {
        let tree = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = analyze(&tree, AnalyzeOptions::default());
        assert_eq!(r.girth, None);
        assert_eq!(r.equator, 0);
        assert!(!r.equatorial);
        assert!(r.bound.is_none());
    }

    #[test]
    fn capped_analysis_never_claims_equatorial() {
        let seed = crate::catalog::moore_catalog(3, 4).unwrap();
        let g = crate::constructions::splice_chain(&seed, 3).unwrap();
        let r = analyze(
            &g,
            AnalyzeOptions {
                cap: Some(8),
                partition: false,
            },
        );
        assert!(r.search_capped);
        assert!(!r.equatorial);
    }

    #[test]
    fn report_serializes_to_integer_json() {
        let g = crate::catalog::petersen();
        let r = analyze(&g, AnalyzeOptions::default());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["n"], 10);
        assert_eq!(json["equator"], 5);
        assert_eq!(json["girth"], 5);
    }
}
