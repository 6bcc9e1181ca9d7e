//! The brute-force perfection oracle next to the class-specific
//! diperfection test.
//!
//! `cargo run --example perfection_oracle`

use arclocal::config::OracleCap;
use arclocal::decomposition::is_diperfect_in_class;
use arclocal::digraph::{Digraph, UndirectedGraph};
use arclocal::oracles::brute::{brute_force_has_clique_cut, brute_force_is_perfect};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cap = OracleCap::from_env()?;
    let cycle = |k: usize| UndirectedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k)));
    for (name, g) in [
        ("C5", cycle(5)?),
        ("C6", cycle(6)?),
        ("complement of C7", cycle(7)?.complement()),
    ] {
        let v = brute_force_is_perfect(&g, cap)?;
        match v.witness {
            Some(w) => println!("{name}: imperfect, {w}"),
            None => println!("{name}: perfect"),
        }
    }

    let c5 = Digraph::new(5, (0..5).map(|i| (i, (i + 1) % 5)))?;
    let apex = Digraph::new(6, (1..=5).map(|i| (i, i % 5 + 1)).chain((1..=5).map(|i| (0, i))))?;
    let path = Digraph::new(4, [(0, 1), (1, 2), (2, 3)])?;
    for (name, d) in [
        ("directed C5", &c5),
        ("apex over C5", &apex),
        ("directed path", &path),
    ] {
        let fast = is_diperfect_in_class(d)?;
        let brute = brute_force_is_perfect(&d.underlying_graph(), cap)?;
        assert_eq!(fast.diperfect, brute.perfect);
        let cut = brute_force_has_clique_cut(d, cap)?;
        println!(
            "{name}: diperfect {} (odd cycle {:?}), smallest clique cut {}",
            fast.diperfect,
            fast.witness,
            cut.map_or("none".into(), |c| c.cut.to_string())
        );
    }
    Ok(())
}
