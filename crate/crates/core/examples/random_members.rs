//! Samples connected arc-locally in-semicomplete digraphs, decomposes each
//! one and tallies the outcomes.
//!
//! `cargo run --release --example random_members -- [count] [seed]`

use std::collections::BTreeMap;

use arclocal::classes::DigraphClass;
use arclocal::config::OracleCap;
use arclocal::decomposition::{decompose_in_semicomplete, verify_decomposition, Outcome};
use arclocal::oracles::generate::random_connected_members;

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|a| a.parse().ok()).unwrap_or(1000);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);

    let members = random_connected_members(DigraphClass::InSemicomplete, 6..=10, count, seed);
    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for d in &members {
        let dec = decompose_in_semicomplete(d).expect("sampled digraphs are connected members");
        verify_decomposition(d, &dec, OracleCap::DEFAULT).expect("decomposition verifies");
        let key = match dec.outcome {
            Outcome::Diperfect => "diperfect",
            Outcome::TriPartition { ref v1, .. } if v1.is_empty() => "tripartition (initial cycle)",
            Outcome::TriPartition { .. } => "tripartition",
            Outcome::CliqueCut(_) => "clique cut",
        };
        *tally.entry(key).or_default() += 1;
    }
    println!("{} members, seed {seed}", members.len());
    for (outcome, n) in tally {
        println!("  {outcome:<30} {n}");
    }
}
