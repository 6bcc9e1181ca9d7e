//! Builds the extended cycle with part sizes 2, 1, 3, 2, 1, recognizes it
//! after shuffling its labels, and classifies it as an arc-locally
//! semicomplete digraph.
//!
//! `cargo run --example extended_cycle -- [sizes, e.g. 2,1,3,2,1]`

use arclocal::config::OracleCap;
use arclocal::decomposition::{classify_arc_locally_semicomplete, verify_als_outcome};
use arclocal::digraph::Digraph;
use arclocal::oracles::generate::make_extended_cycle;
use arclocal::structure::recognize_extended_cycle;
use arclocal::{edgelist, render};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sizes: Vec<usize> = match std::env::args().nth(1) {
        Some(arg) => arg.split(',').map(str::parse).collect::<Result<_, _>>()?,
        None => vec![2, 1, 3, 2, 1],
    };
    let (d, cert) = make_extended_cycle(&sizes)?;
    print!("{}", edgelist::serialize(&d));
    assert_eq!(recognize_extended_cycle(&d).as_ref(), Some(&cert));

    let n = d.n();
    let perm: Vec<usize> = (0..n).map(|v| (v * 4 + 3) % n).collect();
    let shuffled = Digraph::new(n, d.arcs().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>())?;
    let found = recognize_extended_cycle(&shuffled).ok_or("relabeled copy not recognized")?;
    println!(
        "relabeled parts: {:?}",
        found.parts().iter().map(|p| p.as_slice()).collect::<Vec<_>>()
    );

    match classify_arc_locally_semicomplete(&d) {
        Ok(outcome) => {
            verify_als_outcome(&d, &outcome, OracleCap::DEFAULT)?;
            print!("{}", render::als_json(&outcome));
        }
        Err(e) => println!("not classified: {e}"),
    }
    Ok(())
}
