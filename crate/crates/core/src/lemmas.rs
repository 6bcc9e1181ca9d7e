//! Checkable structural properties of the classes, used by the
//! enumeration sweeps and the acceptance suite.
//!
//! Every check takes an arbitrary digraph, returns `Ok(())` when its
//! hypotheses do not apply, and otherwise reports a counterexample as
//! `Err(reason)`.

use std::fmt;
use std::str::FromStr;

use crate::classes::{is_arc_locally_in_semicomplete, is_arc_locally_out_semicomplete, DigraphClass};
use crate::config::OracleCap;
use crate::decomposition::{
    classify_arc_locally_semicomplete, decompose_in_semicomplete, decompose_out_semicomplete,
    is_diperfect_in_class, is_valid_odd_cycle_witness, odd_extended_cycle_components, verify_als_outcome,
    verify_decomposition, Outcome,
};
use crate::digraph::{Digraph, VertexSet};
use crate::oracles::brute::brute_force_is_perfect;
use crate::structure::{
    find_induced_directed_cycle_ge5, find_induced_nonoriented_odd_cycle_ge5, recognize_extended_cycle,
    strong_components,
};

pub type Check = std::result::Result<(), String>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    /// Connected in-semicomplete digraphs decompose, and the result verifies.
    MainTheorem,
    /// The same for out-semicomplete digraphs.
    Dual,
    /// Connected arc-locally semicomplete digraphs are diperfect or a
    /// spanning odd extended cycle.
    Dichotomy,
    /// The class-specific diperfection test agrees with brute force.
    Diperfect,
    /// No induced non-oriented odd cycle of length >= 5 in the class.
    NonOriented,
    /// A vertex reaching a non-trivial strong component dominates into it.
    ReachImpliesDominates,
    /// Two non-trivial components joined by an arc: `K1 ↦ K2` or bipartite union.
    ComponentPairs,
    /// A vertex dominating into a non-bipartite non-trivial component
    /// strictly dominates all of it.
    DominatorOfNonBipartite,
    /// Several initial components in a connected non-strong member are all trivial.
    InitialComponents,
    /// The four consequences for a non-initial odd extended cycle component.
    NonInitialOddCycle,
    /// A strong member with an induced cycle of length >= 5 is an extended cycle.
    CycleImpliesExtended,
    /// In-semicomplete membership of `D` equals out-semicomplete membership of its inverse.
    Duality,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::MainTheorem,
        Property::Dual,
        Property::Dichotomy,
        Property::Diperfect,
        Property::NonOriented,
        Property::ReachImpliesDominates,
        Property::ComponentPairs,
        Property::DominatorOfNonBipartite,
        Property::InitialComponents,
        Property::NonInitialOddCycle,
        Property::CycleImpliesExtended,
        Property::Duality,
    ];

    /// The structural lemmas about strong components.
    pub const LEMMAS: [Property; 6] = [
        Property::ReachImpliesDominates,
        Property::ComponentPairs,
        Property::DominatorOfNonBipartite,
        Property::InitialComponents,
        Property::NonInitialOddCycle,
        Property::CycleImpliesExtended,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::MainTheorem => "main-theorem",
            Property::Dual => "dual",
            Property::Dichotomy => "dichotomy",
            Property::Diperfect => "diperfect",
            Property::NonOriented => "non-oriented",
            Property::ReachImpliesDominates => "reach-dominates",
            Property::ComponentPairs => "component-pairs",
            Property::DominatorOfNonBipartite => "dominator",
            Property::InitialComponents => "initial-components",
            Property::NonInitialOddCycle => "non-initial-odd-cycle",
            Property::CycleImpliesExtended => "cycle-extended",
            Property::Duality => "duality",
        }
    }

    pub fn check(self, d: &Digraph, cap: OracleCap) -> Check {
        match self {
            Property::MainTheorem => check_main_theorem(d, cap),
            Property::Dual => check_dual(d, cap),
            Property::Dichotomy => check_dichotomy(d, cap),
            Property::Diperfect => check_diperfect_agreement(d, cap),
            Property::NonOriented => check_no_nonoriented_odd_cycle(d, cap),
            Property::ReachImpliesDominates => check_reach_implies_dominates(d),
            Property::ComponentPairs => check_component_pairs(d),
            Property::DominatorOfNonBipartite => check_dominator_of_nonbipartite(d),
            Property::InitialComponents => check_initial_components(d),
            Property::NonInitialOddCycle => check_noninitial_odd_cycle(d),
            Property::CycleImpliesExtended => check_cycle_implies_extended(d, cap),
            Property::Duality => check_duality(d),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
            format!("unknown property `{s}` (expected one of {})", names.join(", "))
        })
    }
}

fn in_class(d: &Digraph) -> bool {
    DigraphClass::InSemicomplete.contains(d)
}

pub fn check_main_theorem(d: &Digraph, cap: OracleCap) -> Check {
    if !in_class(d) || !d.is_connected() {
        return Ok(());
    }
    let dec = decompose_in_semicomplete(d).map_err(|e| format!("decomposition failed: {e}"))?;
    verify_decomposition(d, &dec, cap).map_err(|e| format!("verification failed: {e}"))?;
    if let Outcome::TriPartition { cert, .. } = &dec.outcome {
        let cycle = cert.representative_cycle();
        if !is_valid_odd_cycle_witness(d, &cycle) {
            return Err(format!(
                "representative cycle {cycle:?} is not an induced odd cycle"
            ));
        }
    }
    Ok(())
}

pub fn check_dual(d: &Digraph, cap: OracleCap) -> Check {
    if !DigraphClass::OutSemicomplete.contains(d) || !d.is_connected() {
        return Ok(());
    }
    let dec = decompose_out_semicomplete(d).map_err(|e| format!("decomposition failed: {e}"))?;
    verify_decomposition(d, &dec, cap).map_err(|e| format!("verification failed: {e}"))
}

pub fn check_dichotomy(d: &Digraph, cap: OracleCap) -> Check {
    if !DigraphClass::ArcLocallySemicomplete.contains(d) || !d.is_connected() {
        return Ok(());
    }
    let outcome = classify_arc_locally_semicomplete(d).map_err(|e| format!("dichotomy failed: {e}"))?;
    verify_als_outcome(d, &outcome, cap).map_err(|e| format!("verification failed: {e}"))
}

pub fn check_diperfect_agreement(d: &Digraph, cap: OracleCap) -> Check {
    if !in_class(d) || !d.is_connected() || !cap.allows(d.n()) {
        return Ok(());
    }
    let fast = is_diperfect_in_class(d).map_err(|e| e.to_string())?;
    let brute = brute_force_is_perfect(&d.underlying_graph(), cap).map_err(|e| e.to_string())?;
    if fast.diperfect != brute.perfect {
        return Err(format!(
            "class test says diperfect = {}, brute force says perfect = {} ({:?})",
            fast.diperfect, brute.perfect, brute.witness
        ));
    }
    if let Some(cycle) = fast.witness {
        if !is_valid_odd_cycle_witness(d, &cycle) {
            return Err(format!("odd cycle witness {cycle:?} does not replay"));
        }
    }
    Ok(())
}

pub fn check_no_nonoriented_odd_cycle(d: &Digraph, cap: OracleCap) -> Check {
    if d.n() < 5 || !in_class(d) || !cap.allows(d.n()) {
        return Ok(());
    }
    match find_induced_nonoriented_odd_cycle_ge5(d, cap).map_err(|e| e.to_string())? {
        Some(set) => Err(format!("induced non-oriented odd cycle on {set}")),
        None => Ok(()),
    }
}

pub fn check_reach_implies_dominates(d: &Digraph) -> Check {
    if !in_class(d) {
        return Ok(());
    }
    let sd = strong_components(d);
    for (c, comp) in sd.components().iter().enumerate() {
        if sd.is_trivial(c) {
            continue;
        }
        for v in d.vertices().filter(|&v| !comp.contains(v)) {
            let reach = d.bfs_from(v);
            let reaches = comp.iter().any(|x| reach[x].is_some());
            if reaches && !comp.iter().any(|x| d.arc(v, x)) {
                return Err(format!("{v} reaches component {comp} without dominating into it"));
            }
        }
    }
    Ok(())
}

pub fn check_component_pairs(d: &Digraph) -> Check {
    if !in_class(d) {
        return Ok(());
    }
    let sd = strong_components(d);
    for (a, ka) in sd.components().iter().enumerate() {
        for (b, kb) in sd.components().iter().enumerate() {
            if a == b || sd.is_trivial(a) || sd.is_trivial(b) || !sd.condensation().arc(a, b) {
                continue;
            }
            let strict = d
                .set_relation(ka, kb)
                .map_err(|e| e.to_string())?
                .strictly_dominates;
            let union = d.induced(&ka.union(kb)).map_err(|e| e.to_string())?;
            if !strict && !union.digraph.is_bipartite() {
                return Err(format!("components {ka} -> {kb}: neither ↦ nor bipartite union"));
            }
        }
    }
    Ok(())
}

pub fn check_dominator_of_nonbipartite(d: &Digraph) -> Check {
    if !in_class(d) {
        return Ok(());
    }
    let sd = strong_components(d);
    for (c, comp) in sd.components().iter().enumerate() {
        if sd.is_trivial(c) {
            continue;
        }
        let sub = d.induced(comp).map_err(|e| e.to_string())?;
        if sub.digraph.is_bipartite() {
            continue;
        }
        for v in d.vertices().filter(|&v| !comp.contains(v)) {
            if comp.iter().any(|x| d.arc(v, x)) {
                let rel = d
                    .set_relation(&VertexSet::singleton(v), comp)
                    .map_err(|e| e.to_string())?;
                if !rel.strictly_dominates {
                    return Err(format!("{v} dominates into non-bipartite {comp} but not ↦ it"));
                }
            }
        }
    }
    Ok(())
}

pub fn check_initial_components(d: &Digraph) -> Check {
    if !in_class(d) || !d.is_connected() {
        return Ok(());
    }
    let sd = strong_components(d);
    let initial = sd.initial_components();
    if sd.is_strong() || initial.len() < 2 {
        return Ok(());
    }
    match initial.iter().find(|&&c| !sd.is_trivial(c)) {
        Some(&c) => Err(format!(
            "non-trivial initial component {} among {}",
            sd.component(c),
            initial.len()
        )),
        None => Ok(()),
    }
}

pub fn check_noninitial_odd_cycle(d: &Digraph) -> Check {
    if !in_class(d) {
        return Ok(());
    }
    let sd = strong_components(d);
    if sd.is_strong() {
        return Ok(());
    }
    let initial = sd.initial_components();
    for found in odd_extended_cycle_components(d, &sd) {
        let q = found.component;
        let (before, after) = sd.reach_sets(q).map_err(|e| e.to_string())?;
        if before.is_empty() {
            continue;
        }
        let qset = sd.component(q);
        if let Some(&k) = after.iter().find(|&&k| !sd.is_trivial(k)) {
            return Err(format!(
                "(i) non-trivial component {} below {qset}",
                sd.component(k)
            ));
        }
        let w = sd.vertices_of(&before);
        if !d
            .set_relation(&w, qset)
            .map_err(|e| e.to_string())?
            .strictly_dominates
        {
            return Err(format!("(ii) {w} does not ↦ {qset}"));
        }
        if !d
            .induced(&w)
            .map_err(|e| e.to_string())?
            .digraph
            .is_semicomplete()
        {
            return Err(format!("(iii) D[{w}] is not semicomplete"));
        }
        let reaching = before.iter().filter(|c| initial.contains(c)).count();
        if reaching != 1 {
            return Err(format!("(iv) {reaching} initial components reach {qset}"));
        }
    }
    Ok(())
}

pub fn check_cycle_implies_extended(d: &Digraph, cap: OracleCap) -> Check {
    if !in_class(d) {
        return Ok(());
    }
    let sd = strong_components(d);
    for comp in sd.components() {
        if comp.len() < 5 || !cap.allows(comp.len()) {
            continue;
        }
        let sub = d.induced(comp).map_err(|e| e.to_string())?;
        let cycle = find_induced_directed_cycle_ge5(&sub.digraph, cap).map_err(|e| e.to_string())?;
        if cycle.is_some() && recognize_extended_cycle(&sub.digraph).is_none() {
            return Err(format!(
                "strong component {comp} has an induced long cycle but is no extended cycle"
            ));
        }
    }
    Ok(())
}

pub fn check_duality(d: &Digraph) -> Check {
    let direct = is_arc_locally_in_semicomplete(d).holds;
    let mirrored = is_arc_locally_out_semicomplete(&d.inverse()).holds;
    if direct == mirrored {
        Ok(())
    } else {
        Err(format!(
            "in-semicomplete = {direct}, out-semicomplete of inverse = {mirrored}"
        ))
    }
}
