//! Structural decomposition of connected arc-locally in/out-semicomplete
//! digraphs, and an independent checker for every outcome.
//!
//! A connected arc-locally in-semicomplete digraph is diperfect, or splits
//! into `(V1, V2, V3)` around a strong component that is an odd extended
//! cycle of length at least five, or has a clique cut. The out-semicomplete
//! case is handled through the inverse digraph. For arc-locally
//! semicomplete digraphs the middle outcome collapses: the odd extended
//! cycle is the whole digraph.

use std::fmt;

use serde::Serialize;

use crate::classes::{find_pattern_violation, DigraphClass, Pattern};
use crate::config::OracleCap;
use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::oracles::brute::brute_force_is_perfect;
use crate::structure::{
    find_induced_odd_directed_cycle_ge5, induced_directed_cycle_order, is_odd_extended_cycle_ge5,
    strong_components, verify_clique_cut, CliqueCutCertificate, ExtendedCycleCertificate,
    StrongDecomposition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    In,
    Out,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Diperfect,
    /// `cert` partitions `v2` into the parts of an odd extended cycle.
    TriPartition {
        v1: VertexSet,
        v2: VertexSet,
        v3: VertexSet,
        cert: ExtendedCycleCertificate,
    },
    CliqueCut(CliqueCutCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub direction: Direction,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlsOutcome {
    Diperfect,
    /// The certificate covers every vertex.
    OddExtendedCycle(ExtendedCycleCertificate),
}

/// A strong component that induces an odd extended cycle of length at
/// least five, with its certificate in host labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleComponent {
    pub component: usize,
    pub cert: ExtendedCycleCertificate,
}

/// All strong components inducing odd extended cycles of length >= 5,
/// ordered by their smallest vertex.
pub fn odd_extended_cycle_components(d: &Digraph, sd: &StrongDecomposition) -> Vec<OddCycleComponent> {
    let mut found: Vec<OddCycleComponent> = sd
        .components()
        .iter()
        .enumerate()
        .filter(|(_, comp)| comp.len() >= 5)
        .filter_map(|(component, comp)| {
            let sub = d.induced(comp).ok()?;
            let cert = is_odd_extended_cycle_ge5(&sub.digraph)?;
            Some(OddCycleComponent {
                component,
                cert: cert.relabel(|v| sub.original(v)).canonical(),
            })
        })
        .collect();
    found.sort_by_key(|c| sd.component(c.component).min());
    found
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiperfectVerdict {
    pub diperfect: bool,
    /// An induced odd directed cycle of length >= 5, in cycle order.
    pub witness: Option<Vec<usize>>,
}

fn require_class(d: &Digraph, class: DigraphClass) -> Result<()> {
    match class.violation(d) {
        Some(w) => Err(Error::ClassViolation(w)),
        None => Ok(()),
    }
}

/// Diperfection test for arc-locally in-semicomplete digraphs: such a
/// digraph is diperfect exactly when none of its strong components is an
/// odd extended cycle of length at least five.
pub fn is_diperfect_in_class(d: &Digraph) -> Result<DiperfectVerdict> {
    require_class(d, DigraphClass::InSemicomplete)?;
    let sd = strong_components(d);
    let witness = odd_extended_cycle_components(d, &sd)
        .first()
        .map(|c| c.cert.representative_cycle());
    Ok(DiperfectVerdict {
        diperfect: witness.is_none(),
        witness,
    })
}

/// Decomposes a connected arc-locally in-semicomplete digraph.
pub fn decompose_in_semicomplete(d: &Digraph) -> Result<Decomposition> {
    require_class(d, DigraphClass::InSemicomplete)?;
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(Decomposition {
        direction: Direction::In,
        outcome: decompose_in_unchecked(d),
    })
}

fn decompose_in_unchecked(d: &Digraph) -> Outcome {
    let sd = strong_components(d);
    let Some(OddCycleComponent { component: q, cert }) =
        odd_extended_cycle_components(d, &sd).into_iter().next()
    else {
        return Outcome::Diperfect;
    };
    let v2 = sd.component(q).clone();
    let (before, after) = sd
        .reach_sets(q)
        .expect("component index from the same decomposition");
    if before.is_empty() {
        // Q is initial; everything else hangs below it.
        let v3 = d.vertex_set().difference(&v2);
        return Outcome::TriPartition {
            v1: VertexSet::new(),
            v2,
            v3,
            cert,
        };
    }
    let v1 = sd.vertices_of(&before);
    let v3 = sd.vertices_of(&after);
    if v1.len() + v2.len() + v3.len() == d.n() {
        Outcome::TriPartition { v1, v2, v3, cert }
    } else {
        Outcome::CliqueCut(CliqueCutCertificate { cut: v1 })
    }
}

/// Decomposes a connected arc-locally out-semicomplete digraph through its
/// inverse; the returned sets satisfy the mirrored relations.
pub fn decompose_out_semicomplete(d: &Digraph) -> Result<Decomposition> {
    require_class(d, DigraphClass::OutSemicomplete)?;
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let outcome = match decompose_in_unchecked(&d.inverse()) {
        Outcome::TriPartition { v1, v2, v3, cert } => Outcome::TriPartition {
            v1,
            v2,
            v3,
            cert: cert.reversed(),
        },
        other => other,
    };
    Ok(Decomposition {
        direction: Direction::Out,
        outcome,
    })
}

/// Dichotomy for connected arc-locally semicomplete digraphs.
pub fn classify_arc_locally_semicomplete(d: &Digraph) -> Result<AlsOutcome> {
    require_class(d, DigraphClass::ArcLocallySemicomplete)?;
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    let sd = strong_components(d);
    let Some(found) = odd_extended_cycle_components(d, &sd).into_iter().next() else {
        return Ok(AlsOutcome::Diperfect);
    };
    if found.cert.vertex_set().len() != d.n() {
        return Err(Error::InvariantViolation(format!(
            "odd extended cycle component {} does not cover all {} vertices",
            sd.component(found.component),
            d.n()
        )));
    }
    Ok(AlsOutcome::OddExtendedCycle(found.cert))
}

/// Why a decomposition was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationFailure(pub String);

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for VerificationFailure {}

fn fail<T>(reason: impl Into<String>) -> std::result::Result<T, VerificationFailure> {
    Err(VerificationFailure(reason.into()))
}

/// Checks a decomposition against `d` from first principles.
///
/// For a diperfect outcome the strong components are re-examined; when
/// `d` is within `cap` the induced odd cycles are also searched directly
/// and the perfection of `U(d)` is checked by brute force.
pub fn verify_decomposition(
    d: &Digraph,
    decomposition: &Decomposition,
    cap: OracleCap,
) -> std::result::Result<(), VerificationFailure> {
    match &decomposition.outcome {
        Outcome::Diperfect => verify_diperfect(d, cap),
        Outcome::CliqueCut(cert) => {
            if verify_clique_cut(d, &cert.cut) {
                Ok(())
            } else {
                fail(format!("{} is not a clique cut", cert.cut))
            }
        }
        Outcome::TriPartition { v1, v2, v3, cert } => {
            verify_tri_partition(d, decomposition.direction, [v1, v2, v3], cert)
        }
    }
}

fn verify_diperfect(d: &Digraph, cap: OracleCap) -> std::result::Result<(), VerificationFailure> {
    let sd = strong_components(d);
    for comp in sd.components() {
        if comp.len() >= 5 {
            let sub = d.induced(comp).map_err(|e| VerificationFailure(e.to_string()))?;
            if is_odd_extended_cycle_ge5(&sub.digraph).is_some() {
                return fail(format!("strong component {comp} is an odd extended cycle"));
            }
        }
    }
    if cap.allows(d.n()) {
        if let Ok(Some(cycle)) = find_induced_odd_directed_cycle_ge5(d, cap) {
            return fail(format!("induced odd directed cycle on {cycle}"));
        }
        match brute_force_is_perfect(&d.underlying_graph(), cap) {
            Ok(verdict) if !verdict.perfect => {
                return fail(format!(
                    "underlying graph is not perfect: {}",
                    verdict.witness.map(|w| w.to_string()).unwrap_or_default()
                ));
            }
            _ => {}
        }
    }
    Ok(())
}

fn relation(
    d: &Digraph,
    x: &VertexSet,
    y: &VertexSet,
) -> std::result::Result<crate::digraph::SetRelation, VerificationFailure> {
    d.set_relation(x, y)
        .map_err(|e| VerificationFailure(e.to_string()))
}

fn verify_tri_partition(
    d: &Digraph,
    direction: Direction,
    [v1, v2, v3]: [&VertexSet; 3],
    cert: &ExtendedCycleCertificate,
) -> std::result::Result<(), VerificationFailure> {
    for (name, set) in [("V1", v1), ("V2", v2), ("V3", v3)] {
        if let Some(&v) = set.as_slice().last() {
            if v >= d.n() {
                return fail(format!("{name} holds vertex {v} outside the digraph"));
            }
        }
    }
    for (a, b, x, y) in [("V1", "V2", v1, v2), ("V1", "V3", v1, v3), ("V2", "V3", v2, v3)] {
        if let Some(v) = x.first_common(y) {
            return fail(format!("{a} and {b} share vertex {v}"));
        }
    }
    if v1.len() + v2.len() + v3.len() != d.n() {
        return fail("V1, V2, V3 do not cover V(D)");
    }
    let sub = |set: &VertexSet| {
        d.induced(set)
            .map(|s| s.digraph)
            .map_err(|e| VerificationFailure(e.to_string()))
    };
    if !sub(v1)?.is_semicomplete() {
        return fail("D[V1] is not semicomplete");
    }
    if let Err(reason) = cert.validate_on(d, v2) {
        return fail(format!("V2 certificate invalid: {reason}"));
    }
    if !cert.is_odd_ge5() {
        return fail(format!(
            "V2 is an extended cycle of length {}, not odd and at least 5",
            cert.k()
        ));
    }
    if !sub(v3)?.is_bipartite() {
        return fail("D[V3] is not bipartite");
    }
    match direction {
        Direction::In => {
            if !relation(d, v1, v2)?.strictly_dominates {
                return fail("V1 ↦ V2 violated");
            }
            if !relation(d, v1, v3)?.no_back_arc {
                return fail("V1 ⇒ V3 violated");
            }
            if !relation(d, v2, v3)?.no_back_arc {
                return fail("V2 ⇒ V3 violated");
            }
        }
        Direction::Out => {
            if !relation(d, v2, v1)?.strictly_dominates {
                return fail("V2 ↦ V1 violated");
            }
            if !relation(d, v3, v1)?.no_back_arc {
                return fail("V3 ⇒ V1 violated");
            }
            if !relation(d, v3, v2)?.no_back_arc {
                return fail("V3 ⇒ V2 violated");
            }
        }
    }
    Ok(())
}

/// Checks an arc-locally semicomplete outcome: a diperfect claim is
/// checked as for [`verify_decomposition`], an odd extended cycle must
/// cover the whole digraph.
pub fn verify_als_outcome(
    d: &Digraph,
    outcome: &AlsOutcome,
    cap: OracleCap,
) -> std::result::Result<(), VerificationFailure> {
    match outcome {
        AlsOutcome::Diperfect => verify_diperfect(d, cap),
        AlsOutcome::OddExtendedCycle(cert) => {
            if let Err(reason) = cert.validate(d) {
                return fail(format!("certificate invalid: {reason}"));
            }
            if !cert.is_odd_ge5() {
                return fail(format!(
                    "extended cycle of length {} is not odd and at least 5",
                    cert.k()
                ));
            }
            Ok(())
        }
    }
}

/// Replays an odd-cycle witness: an induced directed cycle, odd, length >= 5.
pub fn is_valid_odd_cycle_witness(d: &Digraph, cycle: &[usize]) -> bool {
    let set: VertexSet = cycle.iter().copied().collect();
    set.len() == cycle.len()
        && cycle.len() >= 5
        && cycle.len() % 2 == 1
        && cycle.iter().all(|&v| v < d.n())
        && (0..cycle.len()).all(|i| d.arc(cycle[i], cycle[(i + 1) % cycle.len()]))
        && induced_directed_cycle_order(d, set.as_slice()).is_some()
}

/// The first `H1` (or `H2`) violation, for error reporting.
pub fn class_witness(d: &Digraph, direction: Direction) -> Option<crate::classes::PatternWitness> {
    find_pattern_violation(
        d,
        match direction {
            Direction::In => Pattern::H1,
            Direction::Out => Pattern::H2,
        },
    )
}
