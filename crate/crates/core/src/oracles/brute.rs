//! Exhaustive subset searches. Exponential; bounded by an [`OracleCap`].

use std::fmt;

use serde::Serialize;

use crate::config::{find_subset, mask_members, OracleCap};
use crate::digraph::{Digraph, UndirectedGraph, VertexSet};
use crate::error::Result;
use crate::structure::{verify_clique_cut, CliqueCutCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ObstructionKind {
    /// A chordless odd cycle of length >= 5.
    Hole,
    /// The complement of one.
    Antihole,
}

/// An odd hole or antihole, with the vertices in cycle order (for an
/// antihole, the order of the cycle in the complement).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub cycle: Vec<usize>,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ObstructionKind::Hole => "odd hole",
            ObstructionKind::Antihole => "odd antihole",
        };
        write!(f, "{kind} on")?;
        for v in &self.cycle {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectionVerdict {
    pub perfect: bool,
    pub witness: Option<Obstruction>,
}

/// Perfection by the forbidden-subgraph characterization: `g` is perfect
/// exactly when no vertex subset induces an odd hole or an odd antihole.
/// Holes are searched before antiholes, smaller sizes first.
pub fn brute_force_is_perfect(g: &UndirectedGraph, cap: OracleCap) -> Result<PerfectionVerdict> {
    cap.check(g.n())?;
    let complement = g.complement();
    for (kind, graph) in [
        (ObstructionKind::Hole, g),
        (ObstructionKind::Antihole, &complement),
    ] {
        let found = (5..=g.n())
            .step_by(2)
            .find_map(|k| find_subset(g.n(), k, |mask| graph.chordless_cycle_order(&mask_members(mask))));
        if let Some(cycle) = found {
            return Ok(PerfectionVerdict {
                perfect: false,
                witness: Some(Obstruction { kind, cycle }),
            });
        }
    }
    Ok(PerfectionVerdict {
        perfect: true,
        witness: None,
    })
}

/// The first clique cut in order of size, then of bitmask value.
pub fn brute_force_has_clique_cut(d: &Digraph, cap: OracleCap) -> Result<Option<CliqueCutCertificate>> {
    cap.check(d.n())?;
    let n = d.n();
    // D - B must keep at least two vertices to be disconnected.
    Ok((0..=n.saturating_sub(2)).find_map(|k| {
        find_subset(n, k, |mask| {
            let cut = VertexSet::from(mask_members(mask));
            verify_clique_cut(d, &cut).then_some(CliqueCutCertificate { cut })
        })
    }))
}
