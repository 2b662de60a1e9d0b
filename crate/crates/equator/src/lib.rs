//! Longest isometric cycles (equators), the equator-girth-degree order
//! bounds, and the extremal graph families attaining them.
//!
//! The crate provides:
//! - simple graphs with exact girth/diameter/disk computations ([`graph`],
//!   [`distance`]), plus edge-list and graph6 serialization ([`io`]);
//! - exact equator computation with certified witnesses ([`isometry`]);
//! - the Moore bound and the order bounds with exact integer verdicts
//!   ([`bounds`]);
//! - finite fields, projective planes, Brown polarity graphs and incidence
//!   Moore graphs ([`field`], [`projective`]);
//! - a catalog of Moore graphs and cages, and the chain constructions built
//!   from them ([`catalog`], [`constructions`]);
//! - the structure theory of the extremal ("equatorial") graphs: induced
//!   partitions, clause-level verification, uniqueness, retraction, and
//!   low-girth characterizations ([`structure`]);
//! - isomorph-free exhaustive generation and minimum-order search
//!   ([`generate`], [`search`]);
//! - brute-force reference oracles for cross-checking ([`oracle`]).

pub mod analysis;
pub mod bounds;
pub mod catalog;
pub mod constructions;
pub mod distance;
pub mod field;
pub mod generate;
pub mod graph;
pub mod io;
pub mod iso;
pub mod isometry;
pub mod oracle;
pub mod projective;
pub mod search;
pub mod structure;

#[cfg(test)]
pub(crate) mod testutil;

pub use analysis::{analyze, AnalysisReport, AnalyzeOptions};
pub use bounds::{c4free_bound_check, equatorial_bound_check, moore_bound, BoundReport};
pub use catalog::{cage_catalog, moore_catalog, CatalogEntry};
pub use distance::DistanceMatrix;
pub use graph::{DegreeProfile, Girth, Graph, GraphError};
pub use isometry::{equator, is_isometric_cycle, EquatorResult, IsometricCycle};
pub use structure::{
    certify_equatorial, characterize, induced_partition, partition_uniqueness, retraction_check,
    verify_structure, EquatorPartition, StructureReport,
};
