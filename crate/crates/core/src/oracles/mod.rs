//! Independent reference computations: brute-force searches, exhaustive
//! enumeration and random or constructive generators.

pub mod brute;
pub mod enumerate;
pub mod generate;
