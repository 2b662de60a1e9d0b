//! Structure theory of equatorial graphs: the partition induced by an
//! isometric q-cycle, clause-by-clause verification of the structure
//! theorem, partition uniqueness, the retraction onto the looped q-cycle,
//! and the low-girth characterizations.
//!
//! A graph is equatorial when it is connected, has girth g, equator
//! q > 6k + 3 (k = ceil(g/2) - 1), and attains n = (q/g) M(delta, g).

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, BoundReport};
use crate::distance::DistanceMatrix;
use crate::graph::{Girth, Graph};
use crate::isometry::{self, isometric_cycle_through, isometric_cycles_through, IsometricCycle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("disk intersections do not partition the vertex set: vertex {vertex} lies in {in_parts} parts")]
    NotAPartition { vertex: usize, in_parts: usize },
    #[error("host graph is acyclic")]
    Acyclic,
    #[error("cycle vertex u_{index} is not in part L_{index}")]
    BaseCycleMisaligned { index: usize },
}

/// Why a graph failed the equatorial certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotEquatorialReason {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is acyclic")]
    Acyclic,
    #[error("equator {equator} is not above the regime threshold 6k+3 = {threshold}")]
    RegimeViolated { equator: usize, threshold: usize },
    #[error("order bound not tight: n*g = {lhs} but q*M = {rhs}")]
    BoundNotTight { lhs: u64, rhs: u64 },
    #[error("induced partition failed: {0}")]
    Partition(#[from] StructureError),
}

/// The parts L_0..L_{q-1} induced by an isometric q-cycle, via
/// L_i = D_k(u_{i-k}) cap D_k(u_{i+k}) with subscripts mod q.
#[derive(Debug, Clone)]
pub struct EquatorPartition {
    girth: usize,
    k: usize,
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
    base: IsometricCycle,
}

impl EquatorPartition {
    pub fn q(&self) -> usize {
        self.parts.len()
    }

    pub fn girth(&self) -> usize {
        self.girth
    }

    /// k = ceil(g/2) - 1.
    pub fn disk_radius(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i % self.parts.len()]
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        (self.part_of[v] != usize::MAX).then_some(self.part_of[v])
    }

    pub fn base_cycle(&self) -> &IsometricCycle {
        &self.base
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    /// The parts as an unordered family, for rotation-independent comparison.
    pub fn as_set_family(&self) -> BTreeSet<Vec<usize>> {
        self.parts.iter().cloned().collect()
    }
}

/// Computes the partition induced by an isometric cycle and validates that
/// the disk intersections really partition the vertex set; hosts outside the
/// theory (e.g. q <= 6k + 3) are refused via `NotAPartition`.
pub fn induced_partition(
    g: &Graph,
    dm: &DistanceMatrix,
    cycle: &IsometricCycle,
) -> Result<EquatorPartition, StructureError> {
    let girth = match g.girth() {
        Girth::Finite(girth) => girth,
        Girth::Infinite => return Err(StructureError::Acyclic),
    };
    let k = bounds::disk_radius(girth);
    let q = cycle.len();
    let n = g.order();
    let us = cycle.vertices();

    let mut part_of = vec![usize::MAX; n];
    let mut count = vec![0usize; n];
    let mut parts = vec![Vec::new(); q];
    for i in 0..q {
        let a = us[(i + q - (k % q)) % q];
        let b = us[(i + k) % q];
        for w in 0..n {
            if dm.get(a, w).is_some_and(|d| d <= k) && dm.get(b, w).is_some_and(|d| d <= k) {
                parts[i].push(w);
                part_of[w] = i;
                count[w] += 1;
            }
        }
    }
    for (w, &parts_hit) in count.iter().enumerate() {
        if parts_hit != 1 {
            return Err(StructureError::NotAPartition {
                vertex: w,
                in_parts: parts_hit,
            });
        }
    }
    for (i, &u) in us.iter().enumerate() {
        if part_of[u] != i {
            return Err(StructureError::BaseCycleMisaligned { index: i });
        }
    }
    Ok(EquatorPartition {
        girth,
        k,
        parts,
        part_of,
        base: cycle.clone(),
    })
}

/// Everything the equatorial certificate establishes about a graph.
#[derive(Debug, Clone)]
pub struct EquatorialCertificate {
    pub delta: usize,
    pub girth: usize,
    pub equator: usize,
    pub witness: IsometricCycle,
    pub partition: EquatorPartition,
    pub bound: BoundReport,
}

/// Certifies that a graph is equatorial: connected, cyclic, equator in the
/// q > 6k + 3 regime and order bound tight, with a valid induced partition.
pub fn certify_equatorial(g: &Graph) -> Result<EquatorialCertificate, NotEquatorialReason> {
    let dm = DistanceMatrix::compute(g);
    certify_equatorial_with(g, &dm)
}

/// As [`certify_equatorial`] with a precomputed distance matrix.
pub fn certify_equatorial_with(
    g: &Graph,
    dm: &DistanceMatrix,
) -> Result<EquatorialCertificate, NotEquatorialReason> {
    if !dm.is_connected() {
        return Err(NotEquatorialReason::Disconnected);
    }
    let girth = g.girth().finite().ok_or(NotEquatorialReason::Acyclic)?;
    let result = isometry::equator_with(g, dm, None);
    let witness = result.witness.ok_or(NotEquatorialReason::Acyclic)?;
    let delta = g.degree_profile().min_degree;
    let bound = bounds::equatorial_bound_check(
        g.order() as u64,
        delta as u64,
        girth as u64,
        result.equator as u64,
    );
    if !bound.regime_ok {
        return Err(NotEquatorialReason::RegimeViolated {
            equator: result.equator,
            threshold: 6 * bounds::disk_radius(girth) + 3,
        });
    }
    if !bound.tight {
        return Err(NotEquatorialReason::BoundNotTight {
            lhs: bound.n * bound.girth,
            rhs: bound.lower_bound_numerator,
        });
    }
    let partition = induced_partition(g, dm, &witness)?;
    Ok(EquatorialCertificate {
        delta,
        girth,
        equator: result.equator,
        witness,
        partition,
        bound,
    })
}

/// One clause of the structure theorem, with a counterexample when it fails.
#[derive(Debug, Clone, Serialize)]
pub struct ClauseReport {
    pub clause: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
}

/// Per-clause verification of the structure theorem.
#[derive(Debug, Clone, Serialize)]
pub struct StructureReport {
    pub clauses: Vec<ClauseReport>,
    pub all_pass: bool,
    /// How many isometric q-cycles the one-vertex-per-part clause examined.
    pub isometric_cycles_checked: usize,
}

impl StructureReport {
    pub fn clause(&self, id: &str) -> Option<&ClauseReport> {
        self.clauses.iter().find(|c| c.clause == id)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Budget for the cycle-enumerating clause of [`verify_structure`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Cap on isometric q-cycles enumerated per vertex of the first part.
    pub cycles_per_vertex: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cycles_per_vertex: 10_000,
        }
    }
}

/// Checks every clause of the structure theorem against a partition:
/// regularity, neighbors in both adjacent parts, closed neighborhoods inside
/// three consecutive parts, one vertex per part on every enumerated
/// isometric q-cycle, the disk-intersection identity, part-size periodicity,
/// window sums equal to M(delta, g), and every vertex lying on an isometric
/// q-cycle produced by the geodesic swap.
pub fn verify_structure(
    g: &Graph,
    dm: &DistanceMatrix,
    partition: &EquatorPartition,
    options: VerifyOptions,
) -> StructureReport {
    let q = partition.q();
    let k = partition.disk_radius();
    let girth = partition.girth();
    let n = g.order();
    let delta = g.degree_profile().min_degree;
    let mut clauses = Vec::new();
    let mut push = |clause: &str, pass: bool, counterexample: Option<Vec<usize>>| {
        clauses.push(ClauseReport {
            clause: clause.to_string(),
            pass,
            counterexample,
        });
    };

    // regularity
    let profile = g.degree_profile();
    push(
        "regular",
        profile.is_regular,
        (!profile.is_regular).then(|| {
            let lo = (0..n).find(|&v| g.degree(v) == profile.min_degree);
            let hi = (0..n).find(|&v| g.degree(v) == profile.max_degree);
            [lo, hi].into_iter().flatten().collect()
        }),
    );

    // neighbors in L_{i-1} and L_{i+1}
    let mut bad = None;
    'nb: for v in 0..n {
        let i = partition.part_of(v).expect("partition covers all vertices");
        for target in [(i + q - 1) % q, (i + 1) % q] {
            if !g
                .neighbors(v)
                .iter()
                .any(|&w| partition.part_of(w) == Some(target))
            {
                bad = Some(vec![v]);
                break 'nb;
            }
        }
    }
    push("neighbors-in-adjacent-parts", bad.is_none(), bad);

    // closed neighborhood within three consecutive parts
    let mut bad = None;
    'cn: for v in 0..n {
        let i = partition.part_of(v).expect("covered");
        for &w in g.neighbors(v) {
            let j = partition.part_of(w).expect("covered");
            let diff = (j + q - i) % q;
            if diff != 0 && diff != 1 && diff != q - 1 {
                bad = Some(vec![v, w]);
                break 'cn;
            }
        }
    }
    push("closed-neighborhood", bad.is_none(), bad);

    // every enumerated isometric q-cycle has one vertex per part
    let mut cycles_checked = 0usize;
    let mut bad = None;
    'cyc: for &v in partition.part(0) {
        for cycle in isometric_cycles_through(g, dm, q, v, options.cycles_per_vertex) {
            cycles_checked += 1;
            let mut seen = vec![0usize; q];
            for &w in cycle.vertices() {
                seen[partition.part_of(w).expect("covered")] += 1;
            }
            if seen.iter().any(|&c| c != 1) {
                bad = Some(cycle.vertices().to_vec());
                break 'cyc;
            }
        }
    }
    push("one-vertex-per-part", bad.is_none(), bad);

    // disk-intersection identity: L_i = D_k(v) cap D_k(w) for all
    // v in L_{i-k}, w in L_{i+k}
    let mut bad = None;
    'di: for i in 0..q {
        let expect = &partition.parts()[i];
        for &v in partition.part((i + q - (k % q)) % q) {
            for &w in partition.part((i + k) % q) {
                let inter: Vec<usize> = (0..n)
                    .filter(|&x| {
                        dm.get(v, x).is_some_and(|d| d <= k) && dm.get(w, x).is_some_and(|d| d <= k)
                    })
                    .collect();
                if &inter != expect {
                    bad = Some(vec![v, w]);
                    break 'di;
                }
            }
        }
    }
    push("disk-intersection", bad.is_none(), bad);

    // |L_i| = |L_{i+g}|
    let sizes = partition.sizes();
    let mut bad = None;
    for i in 0..q {
        if sizes[i] != sizes[(i + girth) % q] {
            bad = Some(vec![i, (i + girth) % q]);
            break;
        }
    }
    push("periodicity", bad.is_none(), bad);

    // window sums: |L_j| + .. + |L_{j+g-1}| = M(delta, g)
    let moore = bounds::moore_bound(delta as u64, girth as u64).ok();
    let mut bad = None;
    if let Some(m) = moore {
        for j in 0..q {
            let sum: usize = (0..girth).map(|t| sizes[(j + t) % q]).sum();
            if sum as u64 != m {
                bad = Some(vec![j, sum]);
                break;
            }
        }
    }
    push("window-sums", moore.is_some() && bad.is_none(), bad);

    // every vertex on an isometric q-cycle via the geodesic swap
    let mut bad = None;
    for v in 0..n {
        match isometric_cycle_through(g, dm, partition.base_cycle(), v, partition) {
            Ok(cycle) => {
                if !cycle.contains(v) {
                    bad = Some(vec![v]);
                    break;
                }
            }
            Err(_) => {
                bad = Some(vec![v]);
                break;
            }
        }
    }
    push("vertex-on-isometric-cycle", bad.is_none(), bad);

    let all_pass = clauses.iter().all(|c| c.pass);
    StructureReport {
        clauses,
        all_pass,
        isometric_cycles_checked: cycles_checked,
    }
}

/// True iff all given isometric q-cycles induce the same partition,
/// compared as unordered set families (rotation-independent).
pub fn partition_uniqueness(
    g: &Graph,
    dm: &DistanceMatrix,
    cycles: &[IsometricCycle],
) -> Result<bool, StructureError> {
    let mut family: Option<BTreeSet<Vec<usize>>> = None;
    for cycle in cycles {
        let partition = induced_partition(g, dm, cycle)?;
        let this = partition.as_set_family();
        match &family {
            None => family = Some(this),
            Some(first) => {
                if first != &this {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks that v -> (part index of v) is a homomorphism onto the q-cycle
/// with loops: every edge maps to a loop or a cycle edge, the base cycle
/// maps to the identity on indices, and every non-loop edge of the target
/// is hit.
pub fn retraction_check(g: &Graph, partition: &EquatorPartition) -> bool {
    let q = partition.q();
    let mut edge_hit = vec![false; q];
    for (u, v) in g.edges() {
        let (Some(i), Some(j)) = (partition.part_of(u), partition.part_of(v)) else {
            return false;
        };
        let diff = (j + q - i) % q;
        match diff {
            0 => {}
            1 => edge_hit[i] = true,
            d if d == q - 1 => edge_hit[j] = true,
            _ => return false,
        }
    }
    // identity on the base cycle indices
    for (i, &u) in partition.base_cycle().vertices().iter().enumerate() {
        if partition.part_of(u) != Some(i) {
            return false;
        }
    }
    edge_hit.into_iter().all(|hit| hit)
}

#[derive(Debug, Clone, Error)]
pub enum CharacterizeError {
    #[error("graph is not equatorial: {0}")]
    NotEquatorial(#[from] NotEquatorialReason),
    #[error("no characterization for girth {girth} with degree {delta}")]
    OutOfCharacterizedRange { girth: usize, delta: usize },
    #[error("equatorial graph violates the characterization: {0}")]
    StructureViolation(String),
}

/// What the characterization established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CharacterizeVerdict {
    /// Girth 3: parts are cliques with all consecutive parts completely
    /// joined; sizes repeat with period 3 (or are all equal).
    Girth3 {
        q: usize,
        delta: usize,
        pattern: Vec<usize>,
    },
    /// Girth 4: parts are independent sets, consecutive parts completely
    /// joined; sizes repeat with period 4 (or are all equal).
    Girth4 {
        q: usize,
        delta: usize,
        pattern: Vec<usize>,
    },
    /// Girth 5, degree 3: isomorphic to the spliced Petersen chain.
    Girth5Delta3 { q: usize, blocks: usize },
}

/// Characterizes an equatorial graph of girth 3, girth 4, or girth 5 with
/// degree 3, verifying the exact structure the theory forces.
pub fn characterize(g: &Graph) -> Result<CharacterizeVerdict, CharacterizeError> {
    let cert = certify_equatorial(g)?;
    match (cert.girth, cert.delta) {
        (3, _) => characterize_girth3(g, &cert),
        (4, _) => characterize_girth4(g, &cert),
        (5, 3) => characterize_girth5_delta3(g, &cert),
        (girth, delta) => Err(CharacterizeError::OutOfCharacterizedRange { girth, delta }),
    }
}

fn characterize_girth3(
    g: &Graph,
    cert: &EquatorialCertificate,
) -> Result<CharacterizeVerdict, CharacterizeError> {
    let partition = &cert.partition;
    let q = partition.q();
    let delta = cert.delta;
    let sizes = partition.sizes();
    let violation = |m: String| Err(CharacterizeError::StructureViolation(m));

    if !q.is_multiple_of(3) && delta % 3 != 2 {
        return violation(format!(
            "neither 3 | q nor delta = 2 mod 3 (q={q}, delta={delta})"
        ));
    }
    // parts induce cliques, consecutive parts completely joined
    for i in 0..q {
        let part = partition.part(i);
        for (a_idx, &a) in part.iter().enumerate() {
            for &b in &part[a_idx + 1..] {
                if !g.has_edge(a, b) {
                    return violation(format!("part L_{i} is not a clique: ({a}, {b}) missing"));
                }
            }
            for &b in partition.part((i + 1) % q) {
                if !g.has_edge(a, b) {
                    return violation(format!(
                        "consecutive parts L_{i}, L_{} not fully joined: ({a}, {b}) missing",
                        (i + 1) % q
                    ));
                }
            }
        }
    }
    // edge count pins the edge set exactly
    let expected: usize = (0..q)
        .map(|i| sizes[i] * (sizes[i] - 1) / 2 + sizes[i] * sizes[(i + 1) % q])
        .sum();
    if g.size() != expected {
        return violation(format!(
            "extra edges: {} found, {expected} forced",
            g.size()
        ));
    }

    let pattern =
        size_pattern(&sizes, 3, delta + 1).map_err(CharacterizeError::StructureViolation)?;
    Ok(CharacterizeVerdict::Girth3 { q, delta, pattern })
}

fn characterize_girth4(
    g: &Graph,
    cert: &EquatorialCertificate,
) -> Result<CharacterizeVerdict, CharacterizeError> {
    let partition = &cert.partition;
    let q = partition.q();
    let delta = cert.delta;
    let sizes = partition.sizes();
    let violation = |m: String| Err(CharacterizeError::StructureViolation(m));

    if !q.is_multiple_of(4) && !delta.is_multiple_of(2) {
        return violation(format!(
            "neither 4 | q nor delta even (q={q}, delta={delta})"
        ));
    }
    for i in 0..q {
        let part = partition.part(i);
        for (a_idx, &a) in part.iter().enumerate() {
            for &b in &part[a_idx + 1..] {
                if g.has_edge(a, b) {
                    return violation(format!("part L_{i} is not independent: ({a}, {b})"));
                }
            }
            for &b in partition.part((i + 1) % q) {
                if !g.has_edge(a, b) {
                    return violation(format!(
                        "consecutive parts L_{i}, L_{} not fully joined: ({a}, {b}) missing",
                        (i + 1) % q
                    ));
                }
            }
        }
    }
    let expected: usize = (0..q).map(|i| sizes[i] * sizes[(i + 1) % q]).sum();
    if g.size() != expected {
        return violation(format!(
            "extra edges: {} found, {expected} forced",
            g.size()
        ));
    }

    let pattern =
        size_pattern(&sizes, 4, 2 * delta).map_err(CharacterizeError::StructureViolation)?;
    if pattern[0] + pattern[2] != delta || pattern[1] + pattern[3] != delta {
        return violation(format!(
            "opposite part sizes must sum to delta: {pattern:?} vs delta={delta}"
        ));
    }
    Ok(CharacterizeVerdict::Girth4 { q, delta, pattern })
}

/// Checks sizes repeat with the given period; `expected_sum` 0 skips the
/// period-sum check. Returns one period of sizes.
fn size_pattern(sizes: &[usize], period: usize, expected_sum: usize) -> Result<Vec<usize>, String> {
    let q = sizes.len();
    if !q.is_multiple_of(period) {
        // sizes must all be equal in this case
        if sizes.windows(2).any(|w| w[0] != w[1]) {
            return Err(format!(
                "sizes not uniform and period {period} does not divide q={q}"
            ));
        }
        return Ok(vec![sizes[0]; period]);
    }
    let pattern: Vec<usize> = sizes[..period].to_vec();
    for (i, &s) in sizes.iter().enumerate() {
        if s != pattern[i % period] {
            return Err(format!(
                "sizes do not repeat with period {period} at index {i}"
            ));
        }
    }
    if expected_sum != 0 && pattern.iter().sum::<usize>() != expected_sum {
        return Err(format!(
            "period sizes {pattern:?} sum to {}, expected {expected_sum}",
            pattern.iter().sum::<usize>()
        ));
    }
    Ok(pattern)
}

fn characterize_girth5_delta3(
    g: &Graph,
    cert: &EquatorialCertificate,
) -> Result<CharacterizeVerdict, CharacterizeError> {
    let partition = &cert.partition;
    let q = partition.q();
    let violation = |m: String| Err(CharacterizeError::StructureViolation(m));
    if !q.is_multiple_of(5) {
        return violation(format!("equator {q} is not a multiple of 5"));
    }
    let Some(start) = (0..q).find(|&i| partition.part(i).len() == 1) else {
        return violation("no singleton part".to_string());
    };
    // each 5-part block induces a Petersen graph minus one edge
    let petersen_minus_edge = {
        let p = crate::catalog::petersen();
        let (u, v) = p.edges().next().expect("petersen has edges");
        p.without_edge(u, v).expect("edge exists")
    };
    let blocks = q / 5;
    for b in 0..blocks {
        let mut block = Vec::new();
        for t in 0..5 {
            block.extend_from_slice(partition.part((start + 5 * b + t) % q));
        }
        let (induced, _) = g.induced_subgraph(&block);
        if !crate::iso::are_isomorphic(&induced, &petersen_minus_edge) {
            return violation(format!("block {b} is not Petersen minus an edge"));
        }
    }
    // overall isomorphism to the spliced Petersen chain
    let seed = crate::catalog::moore_catalog(3, 5).expect("petersen entry");
    let reference = crate::constructions::splice_chain(&seed, blocks).expect("reference splice");
    if !crate::iso::are_isomorphic(g, &reference) {
        return violation("not isomorphic to the spliced Petersen chain".to_string());
    }
    Ok(CharacterizeVerdict::Girth5Delta3 { q, blocks })
}
