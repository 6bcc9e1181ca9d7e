//! Class membership with replayable witnesses.
//!
//! `cargo run --example classify -- [edge-list file]`

use arclocal::classes::classify;
use arclocal::digraph::Digraph;
use arclocal::{edgelist, render};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = match std::env::args().nth(1) {
        Some(path) => edgelist::parse(&std::fs::read_to_string(path)?)?,
        // The oriented path 0 -> 1 -> 2 <- 3.
        None => Digraph::new(4, [(0, 1), (1, 2), (3, 2)])?,
    };
    let report = classify(&d);
    print!("{}", render::class_report_text(&report));
    if let Some(w) = report.arc_locally_in_semicomplete.witness {
        assert!(w.is_valid_for(&d));
        println!(
            "\nreplayed {w}: arcs {:?}, ends {} and {} non-adjacent",
            w.pattern.arcs(w.vertices),
            w.vertices[0],
            w.vertices[3]
        );
    }
    Ok(())
}
