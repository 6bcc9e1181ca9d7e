//! Recognition and certified decomposition of arc-locally semicomplete
//! digraphs.
//!
//! A digraph is *arc-locally in-semicomplete* when for every pair of
//! adjacent vertices `x`, `y`, every in-neighbor of `x` and every
//! in-neighbor of `y` are adjacent or equal; *out*-semicomplete is the
//! mirror condition and *arc-locally semicomplete* asks for both.
//!
//! The crate provides
//!
//! * the [`Digraph`](digraph::Digraph) value type and an edge-list format
//!   ([`edgelist`]);
//! * class recognizers with replayable violation witnesses ([`classes`]);
//! * strong components, extended cycle recognition and clique cuts
//!   ([`structure`]);
//! * the decomposition of connected arc-locally in-semicomplete digraphs
//!   into a tri-partition around an odd extended cycle, a clique cut, or a
//!   diperfection verdict, each checked by an independent verifier
//!   ([`decomposition`]);
//! * brute-force oracles, exhaustive enumeration and generators
//!   ([`oracles`]), the checkable structural lemmas ([`lemmas`]) and the
//!   sweeps that run them ([`sweep`]);
//! * renderings to text, JSON and DOT ([`render`]) and the `arclocal`
//!   command line ([`cli`]).
//!
//! ```
//! use arclocal::decomposition::{decompose_in_semicomplete, verify_decomposition, Outcome};
//! use arclocal::{config::OracleCap, digraph::Digraph};
//!
//! // Vertex 0 dominates every vertex of the directed 5-cycle 1..=5.
//! let d = Digraph::new(6, (1..=5).map(|i| (i, i % 5 + 1)).chain((1..=5).map(|i| (0, i)))).unwrap();
//! let dec = decompose_in_semicomplete(&d).unwrap();
//! assert!(matches!(dec.outcome, Outcome::TriPartition { .. }));
//! verify_decomposition(&d, &dec, OracleCap::DEFAULT).unwrap();
//! ```

pub mod classes;
pub mod cli;
pub mod config;
pub mod decomposition;
pub mod digraph;
pub mod edgelist;
pub mod error;
pub mod lemmas;
pub mod oracles;
pub mod render;
pub mod structure;
pub mod sweep;

pub use error::{Error, Result};
