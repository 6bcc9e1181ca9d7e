//! Recognition of the classes defined by forbidden oriented `P4`s.
//!
//! Each pattern is three arcs on four distinct vertices `(v1, v2, v3, v4)`
//! sharing a middle arc between `v2` and `v3`:
//!
//! | pattern | arcs                         | violated when          |
//! |---------|------------------------------|------------------------|
//! | `H1`    | v1→v2, v2→v3, v4→v3          | v1, v4 non-adjacent    |
//! | `H2`    | v2→v1, v2→v3, v3→v4          | v1, v4 non-adjacent    |
//! | `H3`    | v1→v2, v2→v3, v3→v4          | v1, v4 non-adjacent    |
//! | `H4`    | v2→v1, v2→v3, v4→v3          | v1, v4 non-adjacent    |
//! | anti    | v1→v2, v3→v2, v3→v4          | no arc v4→v1           |
//!
//! Occurrences are subdigraph occurrences: other arcs among the four
//! vertices do not excuse them. The scan walks every middle arc and pairs
//! the matching neighborhoods of its two ends, so the cost is bounded by
//! the sum over arcs of the product of the two degrees.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Pattern {
    H1,
    H2,
    H3,
    H4,
    AntiCirculant,
}

#[derive(Clone, Copy)]
enum Side {
    In,
    Out,
}

impl Pattern {
    pub const ORIENTED_P4: [Pattern; 4] = [Pattern::H1, Pattern::H2, Pattern::H3, Pattern::H4];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::H1 => "H1",
            Pattern::H2 => "H2",
            Pattern::H3 => "H3",
            Pattern::H4 => "H4",
            Pattern::AntiCirculant => "AntiCirculant",
        }
    }

    pub fn from_name(name: &str) -> Option<Pattern> {
        [
            Pattern::H1,
            Pattern::H2,
            Pattern::H3,
            Pattern::H4,
            Pattern::AntiCirculant,
        ]
        .into_iter()
        .find(|p| p.name() == name)
    }

    /// Which neighborhood of `v2` holds `v1`, and of `v3` holds `v4`.
    fn sides(self) -> (Side, Side) {
        match self {
            Pattern::H1 => (Side::In, Side::In),
            Pattern::H2 => (Side::Out, Side::Out),
            Pattern::H3 => (Side::In, Side::Out),
            Pattern::H4 => (Side::Out, Side::In),
            Pattern::AntiCirculant => (Side::In, Side::Out),
        }
    }

    /// The three arcs of the pattern on `(v1, v2, v3, v4)`.
    pub fn arcs(self, [v1, v2, v3, v4]: [usize; 4]) -> [(usize, usize); 3] {
        match self {
            Pattern::H1 => [(v1, v2), (v2, v3), (v4, v3)],
            Pattern::H2 => [(v2, v1), (v2, v3), (v3, v4)],
            Pattern::H3 => [(v1, v2), (v2, v3), (v3, v4)],
            Pattern::H4 => [(v2, v1), (v2, v3), (v4, v3)],
            Pattern::AntiCirculant => [(v1, v2), (v3, v2), (v3, v4)],
        }
    }

    /// Whether the pattern's three arcs are present and its closing
    /// condition fails, i.e. the tuple is a violation.
    pub fn violated_by(self, d: &Digraph, v: [usize; 4]) -> bool {
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| v[i] != v[j]));
        if !distinct || v.iter().any(|&x| x >= d.n()) {
            return false;
        }
        if !self.arcs(v).iter().all(|&(a, b)| d.arc(a, b)) {
            return false;
        }
        match self {
            Pattern::AntiCirculant => !d.arc(v[3], v[0]),
            _ => !d.is_adjacent(v[0], v[3]),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Four vertices realizing a violation of `pattern`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub vertices: [usize; 4],
}

impl PatternWitness {
    /// Replays the witness against `d`.
    pub fn is_valid_for(&self, d: &Digraph) -> bool {
        self.pattern.violated_by(d, self.vertices)
    }

    /// Relabels through `map` (e.g. from a subdigraph back to its host).
    pub fn map(self, map: impl Fn(usize) -> usize) -> PatternWitness {
        PatternWitness {
            pattern: self.pattern,
            vertices: self.vertices.map(map),
        }
    }
}

/// `H1 0 1 2 3`
impl fmt::Display for PatternWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.vertices;
        write!(f, "{} {a} {b} {c} {d}", self.pattern)
    }
}

/// First violation of `pattern`, scanning `v2`, then `v3`, then `v1`, then
/// `v4` in increasing order.
pub fn find_pattern_violation(d: &Digraph, pattern: Pattern) -> Option<PatternWitness> {
    let (side1, side4) = pattern.sides();
    let hood = |v: usize, side: Side| match side {
        Side::In => d.in_neighbors(v),
        Side::Out => d.out_neighbors(v),
    };
    for v2 in d.vertices() {
        let middle = match pattern {
            Pattern::AntiCirculant => d.in_neighbors(v2),
            _ => d.out_neighbors(v2),
        };
        for &v3 in middle {
            for &v1 in hood(v2, side1) {
                if v1 == v3 {
                    continue;
                }
                for &v4 in hood(v3, side4) {
                    if v4 == v1 || v4 == v2 {
                        continue;
                    }
                    let violated = match pattern {
                        Pattern::AntiCirculant => !d.arc(v4, v1),
                        _ => !d.is_adjacent(v1, v4),
                    };
                    if violated {
                        return Some(PatternWitness {
                            pattern,
                            vertices: [v1, v2, v3, v4],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Membership in a class, with a violation when membership fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub holds: bool,
    pub witness: Option<PatternWitness>,
}

impl Membership {
    fn from_witness(witness: Option<PatternWitness>) -> Self {
        Self {
            holds: witness.is_none(),
            witness,
        }
    }

    fn plain(holds: bool) -> Self {
        Self { holds, witness: None }
    }
}

/// Orientedly `{H1}`-free.
pub fn is_arc_locally_in_semicomplete(d: &Digraph) -> Membership {
    Membership::from_witness(find_pattern_violation(d, Pattern::H1))
}

/// Orientedly `{H2}`-free.
pub fn is_arc_locally_out_semicomplete(d: &Digraph) -> Membership {
    Membership::from_witness(find_pattern_violation(d, Pattern::H2))
}

/// Orientedly `{H1, H2}`-free; an `H1` violation is reported first.
pub fn is_arc_locally_semicomplete(d: &Digraph) -> Membership {
    Membership::from_witness(
        find_pattern_violation(d, Pattern::H1).or_else(|| find_pattern_violation(d, Pattern::H2)),
    )
}

pub fn is_3_quasi_transitive(d: &Digraph) -> Membership {
    Membership::from_witness(find_pattern_violation(d, Pattern::H3))
}

pub fn is_3_anti_quasi_transitive(d: &Digraph) -> Membership {
    Membership::from_witness(find_pattern_violation(d, Pattern::H4))
}

pub fn is_3_anti_circulant(d: &Digraph) -> Membership {
    Membership::from_witness(find_pattern_violation(d, Pattern::AntiCirculant))
}

/// The classes a decomposition can be requested for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DigraphClass {
    #[serde(rename = "in")]
    InSemicomplete,
    #[serde(rename = "out")]
    OutSemicomplete,
    #[serde(rename = "als")]
    ArcLocallySemicomplete,
}

impl DigraphClass {
    pub fn short_name(self) -> &'static str {
        match self {
            DigraphClass::InSemicomplete => "in",
            DigraphClass::OutSemicomplete => "out",
            DigraphClass::ArcLocallySemicomplete => "als",
        }
    }

    pub fn violation(self, d: &Digraph) -> Option<PatternWitness> {
        match self {
            DigraphClass::InSemicomplete => find_pattern_violation(d, Pattern::H1),
            DigraphClass::OutSemicomplete => find_pattern_violation(d, Pattern::H2),
            DigraphClass::ArcLocallySemicomplete => is_arc_locally_semicomplete(d).witness,
        }
    }

    pub fn contains(self, d: &Digraph) -> bool {
        self.violation(d).is_none()
    }
}

impl fmt::Display for DigraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DigraphClass::InSemicomplete => "arc-locally in-semicomplete",
            DigraphClass::OutSemicomplete => "arc-locally out-semicomplete",
            DigraphClass::ArcLocallySemicomplete => "arc-locally semicomplete",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub arc_locally_in_semicomplete: Membership,
    pub arc_locally_out_semicomplete: Membership,
    pub arc_locally_semicomplete: Membership,
    pub three_quasi_transitive: Membership,
    pub three_anti_quasi_transitive: Membership,
    pub three_anti_circulant: Membership,
    pub semicomplete: Membership,
    pub semicomplete_bipartite: Membership,
    pub bipartite: Membership,
}

impl ClassReport {
    /// `(label, membership)` rows in report order.
    pub fn rows(&self) -> [(&'static str, &Membership); 9] {
        [
            ("arc_locally_in_semicomplete", &self.arc_locally_in_semicomplete),
            ("arc_locally_out_semicomplete", &self.arc_locally_out_semicomplete),
            ("arc_locally_semicomplete", &self.arc_locally_semicomplete),
            ("three_quasi_transitive", &self.three_quasi_transitive),
            ("three_anti_quasi_transitive", &self.three_anti_quasi_transitive),
            ("three_anti_circulant", &self.three_anti_circulant),
            ("semicomplete", &self.semicomplete),
            ("semicomplete_bipartite", &self.semicomplete_bipartite),
            ("bipartite", &self.bipartite),
        ]
    }
}

pub fn classify(d: &Digraph) -> ClassReport {
    let h1 = find_pattern_violation(d, Pattern::H1);
    let h2 = find_pattern_violation(d, Pattern::H2);
    ClassReport {
        arc_locally_in_semicomplete: Membership::from_witness(h1),
        arc_locally_out_semicomplete: Membership::from_witness(h2),
        arc_locally_semicomplete: Membership::from_witness(h1.or(h2)),
        three_quasi_transitive: is_3_quasi_transitive(d),
        three_anti_quasi_transitive: is_3_anti_quasi_transitive(d),
        three_anti_circulant: is_3_anti_circulant(d),
        semicomplete: Membership::plain(d.is_semicomplete()),
        semicomplete_bipartite: Membership::plain(d.is_semicomplete_bipartite()),
        bipartite: Membership::plain(d.is_bipartite()),
    }
}
