//! Text, JSON and DOT renderings of reports, decompositions and digraphs.
//!
//! JSON is the machine interface and is byte-stable: keys come out in
//! declaration order and sets are sorted. Text is a short summary, DOT is
//! for viewing only.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classes::{ClassReport, DigraphClass, PatternWitness};
use crate::decomposition::{AlsOutcome, Decomposition, Direction, Outcome};
use crate::digraph::{Digraph, VertexSet};
use crate::structure::{strong_components, ExtendedCycleCertificate};

const PALETTE: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];
const V1_COLOR: &str = "#a6cee3";
const V3_COLOR: &str = "#d9d9d9";
const CUT_COLOR: &str = "#e31a1c";

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn set_text(set: &VertexSet) -> String {
    set.to_string()
}

fn list_text(items: &[usize]) -> String {
    items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// A DOT digraph; `fill[v]` colors vertex `v` and `tag[v]` is appended to
/// its label.
pub fn digraph_dot(d: &Digraph, fill: &[Option<&str>], tag: &[Option<String>]) -> String {
    let mut out = String::from("digraph D {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in d.vertices() {
        let label = match tag.get(v).and_then(|t| t.as_deref()) {
            Some(t) => format!("{v} {t}"),
            None => v.to_string(),
        };
        let color = fill.get(v).copied().flatten().unwrap_or("white");
        writeln!(out, "  {v} [label=\"{label}\", fillcolor=\"{color}\"];").unwrap();
    }
    for (u, v) in d.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn plain_dot(d: &Digraph) -> String {
    digraph_dot(d, &[], &[])
}

/// Colors vertices by strong component.
pub fn components_dot(d: &Digraph) -> String {
    let sd = strong_components(d);
    let fill: Vec<_> = d
        .vertices()
        .map(|v| Some(PALETTE[sd.component_of(v) % PALETTE.len()]))
        .collect();
    let tag: Vec<_> = d
        .vertices()
        .map(|v| Some(format!("(K{})", sd.component_of(v))))
        .collect();
    digraph_dot(d, &fill, &tag)
}

/// Colors vertices by extended cycle part.
pub fn certificate_dot(d: &Digraph, cert: &ExtendedCycleCertificate) -> String {
    let mut fill = vec![None; d.n()];
    let mut tag = vec![None; d.n()];
    paint_parts(cert, &mut fill, &mut tag);
    digraph_dot(d, &fill, &tag)
}

fn paint_parts(cert: &ExtendedCycleCertificate, fill: &mut [Option<&str>], tag: &mut [Option<String>]) {
    for (i, part) in cert.parts().iter().enumerate() {
        for v in part.iter() {
            fill[v] = Some(PALETTE[i % PALETTE.len()]);
            tag[v] = Some(format!("(X{i})"));
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

pub fn class_report_text(report: &ClassReport) -> String {
    let mut out = String::new();
    for (label, m) in report.rows() {
        match m.witness {
            Some(w) => writeln!(out, "{label:<30} {:<3}  witness {w}", yes_no(m.holds)),
            None => writeln!(out, "{label:<30} {}", yes_no(m.holds)),
        }
        .unwrap();
    }
    out
}

pub fn class_report_json(report: &ClassReport) -> String {
    to_json(report)
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum WitnessJson {
    OddCycle(Vec<usize>),
}

#[derive(Serialize)]
struct OutcomeJson {
    class: &'static str,
    outcome: &'static str,
    #[serde(rename = "V1")]
    v1: Vec<usize>,
    #[serde(rename = "V2_parts")]
    v2_parts: Vec<Vec<usize>>,
    #[serde(rename = "V3")]
    v3: Vec<usize>,
    cut: Option<Vec<usize>>,
    witness: Option<WitnessJson>,
}

impl OutcomeJson {
    fn empty(class: DigraphClass, outcome: &'static str) -> Self {
        Self {
            class: class.short_name(),
            outcome,
            v1: Vec::new(),
            v2_parts: Vec::new(),
            v3: Vec::new(),
            cut: None,
            witness: None,
        }
    }

    fn with_cycle(mut self, cert: &ExtendedCycleCertificate) -> Self {
        self.v2_parts = cert.parts().iter().map(|p| p.as_slice().to_vec()).collect();
        self.witness = Some(WitnessJson::OddCycle(cert.representative_cycle()));
        self
    }
}

fn decomposition_class(dec: &Decomposition) -> DigraphClass {
    match dec.direction {
        Direction::In => DigraphClass::InSemicomplete,
        Direction::Out => DigraphClass::OutSemicomplete,
    }
}

pub fn decomposition_json(dec: &Decomposition) -> String {
    let class = decomposition_class(dec);
    let record = match &dec.outcome {
        Outcome::Diperfect => OutcomeJson::empty(class, "diperfect"),
        Outcome::TriPartition { v1, v3, cert, .. } => OutcomeJson {
            v1: v1.as_slice().to_vec(),
            v3: v3.as_slice().to_vec(),
            ..OutcomeJson::empty(class, "tripartition")
        }
        .with_cycle(cert),
        Outcome::CliqueCut(c) => OutcomeJson {
            cut: Some(c.cut.as_slice().to_vec()),
            ..OutcomeJson::empty(class, "clique_cut")
        },
    };
    to_json(&record)
}

pub fn als_json(outcome: &AlsOutcome) -> String {
    let class = DigraphClass::ArcLocallySemicomplete;
    let record = match outcome {
        AlsOutcome::Diperfect => OutcomeJson::empty(class, "diperfect"),
        AlsOutcome::OddExtendedCycle(cert) => {
            OutcomeJson::empty(class, "odd_extended_cycle").with_cycle(cert)
        }
    };
    to_json(&record)
}

fn parts_text(cert: &ExtendedCycleCertificate) -> String {
    cert.parts().iter().map(set_text).collect::<Vec<_>>().join(" ")
}

pub fn decomposition_text(dec: &Decomposition) -> String {
    let mut out = format!("class: {}\n", decomposition_class(dec));
    match &dec.outcome {
        Outcome::Diperfect => out.push_str("outcome: diperfect\n"),
        Outcome::TriPartition { v1, v3, cert, .. } => {
            out.push_str("outcome: tripartition\n");
            writeln!(out, "V1: {}", set_text(v1)).unwrap();
            writeln!(out, "V2 parts: {}", parts_text(cert)).unwrap();
            writeln!(out, "V3: {}", set_text(v3)).unwrap();
            writeln!(out, "odd cycle: {}", list_text(&cert.representative_cycle())).unwrap();
        }
        Outcome::CliqueCut(c) => {
            out.push_str("outcome: clique_cut\n");
            writeln!(out, "cut: {}", set_text(&c.cut)).unwrap();
        }
    }
    out.push_str("verified: yes\n");
    out
}

pub fn als_text(outcome: &AlsOutcome) -> String {
    let mut out = format!("class: {}\n", DigraphClass::ArcLocallySemicomplete);
    match outcome {
        AlsOutcome::Diperfect => out.push_str("outcome: diperfect\n"),
        AlsOutcome::OddExtendedCycle(cert) => {
            out.push_str("outcome: odd_extended_cycle\n");
            writeln!(out, "parts: {}", parts_text(cert)).unwrap();
            writeln!(out, "part sizes: {}", list_text(&cert.part_sizes())).unwrap();
            writeln!(out, "odd cycle: {}", list_text(&cert.representative_cycle())).unwrap();
        }
    }
    out.push_str("verified: yes\n");
    out
}

pub fn decomposition_dot(d: &Digraph, dec: &Decomposition) -> String {
    let mut fill = vec![None; d.n()];
    let mut tag = vec![None; d.n()];
    match &dec.outcome {
        Outcome::Diperfect => return components_dot(d),
        Outcome::TriPartition { v1, v3, cert, .. } => {
            for (set, color, name) in [(v1, V1_COLOR, "V1"), (v3, V3_COLOR, "V3")] {
                for v in set.iter() {
                    fill[v] = Some(color);
                    tag[v] = Some(format!("({name})"));
                }
            }
            paint_parts(cert, &mut fill, &mut tag);
        }
        Outcome::CliqueCut(c) => {
            for v in c.cut.iter() {
                fill[v] = Some(CUT_COLOR);
                tag[v] = Some("(cut)".to_string());
            }
        }
    }
    digraph_dot(d, &fill, &tag)
}

pub fn als_dot(d: &Digraph, outcome: &AlsOutcome) -> String {
    match outcome {
        AlsOutcome::Diperfect => components_dot(d),
        AlsOutcome::OddExtendedCycle(cert) => certificate_dot(d, cert),
    }
}

#[derive(Serialize)]
struct RejectionJson<'a> {
    class: &'static str,
    rejected: &'a str,
    witness: Option<PatternWitness>,
}

/// Why an input was refused by `decompose`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    OutOfClass(PatternWitness),
    Disconnected,
}

pub fn rejection_text(class: DigraphClass, r: Rejection) -> String {
    match r {
        Rejection::OutOfClass(w) => format!("rejected: not {class}\nwitness: {w}\n"),
        Rejection::Disconnected => "rejected: disconnected\n".to_string(),
    }
}

pub fn rejection_json(class: DigraphClass, r: Rejection) -> String {
    let (rejected, witness) = match r {
        Rejection::OutOfClass(w) => ("out_of_class", Some(w)),
        Rejection::Disconnected => ("disconnected", None),
    };
    to_json(&RejectionJson {
        class: class.short_name(),
        rejected,
        witness,
    })
}

#[derive(Serialize)]
struct DigraphJson<'a> {
    n: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    parts: Option<&'a ExtendedCycleCertificate>,
}

pub fn digraph_json(d: &Digraph, cert: Option<&ExtendedCycleCertificate>) -> String {
    to_json(&DigraphJson {
        n: d.n(),
        arcs: d.arcs().map(|(u, v)| [u, v]).collect(),
        parts: cert,
    })
}

pub fn json<T: Serialize>(value: &T) -> String {
    to_json(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{classify_arc_locally_semicomplete, decompose_in_semicomplete};
    use crate::oracles::generate::make_extended_cycle;

    #[test]
    fn figure_two_json() {
        let (d, _) = make_extended_cycle(&[2, 1, 3, 2, 1]).unwrap();
        let out = als_json(&classify_arc_locally_semicomplete(&d).unwrap());
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["outcome"], "odd_extended_cycle");
        assert_eq!(
            v["V2_parts"],
            serde_json::json!([[0, 1], [2], [3, 4, 5], [6, 7], [8]])
        );
        assert_eq!(v["witness"]["odd_cycle"], serde_json::json!([0, 2, 3, 6, 8]));
        assert!(v["cut"].is_null());
        let keys: Vec<_> = out
            .lines()
            .filter_map(|l| l.trim().strip_prefix('"')?.split('"').next())
            .collect();
        assert_eq!(&keys[..3], ["class", "outcome", "V1"]);
    }

    #[test]
    fn apex_tripartition_text() {
        let d = Digraph::new(6, (1..=5).map(|i| (i, i % 5 + 1)).chain((1..=5).map(|i| (0, i)))).unwrap();
        let text = decomposition_text(&decompose_in_semicomplete(&d).unwrap());
        assert!(text.contains("outcome: tripartition\nV1: {0}\n"), "{text}");
    }

    #[test]
    fn dot_lists_every_arc() {
        let d = Digraph::new(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        let dot = plain_dot(&d);
        assert!(dot.starts_with("digraph D {"));
        assert_eq!(dot.matches("->").count(), 3);
    }
}
