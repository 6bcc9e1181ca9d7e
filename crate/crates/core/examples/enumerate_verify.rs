//! Checks every property over all labeled digraphs on up to `n` vertices.
//!
//! `cargo run --release --example enumerate_verify -- [n]`

use arclocal::classes::DigraphClass;
use arclocal::lemmas::Property;
use arclocal::sweep::{run_exhaustive, SweepSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse())
        .transpose()?
        .unwrap_or(4);
    let runs = [
        (
            Some(DigraphClass::InSemicomplete),
            vec![Property::MainTheorem, Property::Diperfect],
        ),
        (Some(DigraphClass::OutSemicomplete), vec![Property::Dual]),
        (
            Some(DigraphClass::ArcLocallySemicomplete),
            vec![Property::Dichotomy],
        ),
        (Some(DigraphClass::InSemicomplete), Property::LEMMAS.to_vec()),
        (None, vec![Property::Duality]),
    ];
    for (class, properties) in runs {
        let spec = SweepSpec::new(n, class, properties.clone());
        let summary = run_exhaustive(&spec)?;
        let names: Vec<_> = properties.iter().map(|p| p.name()).collect();
        let class = class.map_or("all".to_string(), |c| c.to_string());
        println!("n={n} {class:<30} [{}] {summary}", names.join(", "));
        if let Some(f) = summary.first_failure {
            println!("  first failure: index {} {}: {}", f.index, f.property, f.reason);
        }
    }
    Ok(())
}
