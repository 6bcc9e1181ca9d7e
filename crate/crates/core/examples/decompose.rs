//! The three decomposition outcomes, each checked by the verifier.
//!
//! `cargo run --example decompose`

use arclocal::config::OracleCap;
use arclocal::decomposition::{decompose_in_semicomplete, decompose_out_semicomplete, verify_decomposition};
use arclocal::digraph::Digraph;
use arclocal::render;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = (1..=5).map(|i| (i, i % 5 + 1));
    let apex = Digraph::new(6, c5.clone().chain((1..=5).map(|i| (0, i))))?;
    let pendant = Digraph::new(7, apex.arcs().chain([(0, 6)]))?;
    let hanging = Digraph::new(7, c5.chain([(1, 0), (2, 6)]))?;
    let transitive = Digraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;

    for (name, d) in [
        ("apex over a 5-cycle", &apex),
        ("apex with a pendant vertex", &pendant),
        ("5-cycle with out-hanging vertices", &hanging),
        ("transitive tournament", &transitive),
    ] {
        println!("== {name}");
        match decompose_in_semicomplete(d) {
            Ok(dec) => {
                verify_decomposition(d, &dec, OracleCap::DEFAULT)?;
                print!("{}", render::decomposition_text(&dec));
            }
            Err(e) => println!("in: {e}"),
        }
    }

    println!("== inverse of the apex digraph, out direction");
    let inverse = apex.inverse();
    let dec = decompose_out_semicomplete(&inverse)?;
    verify_decomposition(&inverse, &dec, OracleCap::DEFAULT)?;
    print!("{}", render::decomposition_text(&dec));
    Ok(())
}
