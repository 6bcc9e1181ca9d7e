//! Exhaustive enumeration of labeled digraphs.
//!
//! A digraph on `n` vertices corresponds to the integer whose base-4 digits
//! describe the unordered pairs `(u, v)`, `u < v`, taken in lexicographic
//! order `(0,1), (0,2), ..., (n-2,n-1)` with the first pair as the least
//! significant digit. Digit `0` is no arc, `1` is `u -> v`, `2` is `v -> u`
//! and `3` is a digon. A failing case can therefore be reported as a single
//! index and rebuilt with [`digraph_from_index`].

use crate::classes::DigraphClass;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest `n` for exhaustive sweeps (`4^10` digraphs at `n = 5`).
pub const EXHAUSTIVE_CAP: usize = 5;

/// Largest `n` whose index fits in a `u64`.
pub const INDEX_CAP: usize = 8;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `4^(n(n-1)/2)`, the number of labeled digraphs on `n` vertices.
pub fn digraph_count(n: usize) -> Result<u64> {
    if n > INDEX_CAP {
        return Err(Error::EnumerationCap { n, cap: INDEX_CAP });
    }
    Ok(1u64 << (2 * pair_count(n)))
}

pub fn digraph_from_index(n: usize, index: u64) -> Result<Digraph> {
    let count = digraph_count(n)?;
    if index >= count {
        return Err(Error::InvalidArgument(format!(
            "index {index} out of range for n = {n} ({count} digraphs)"
        )));
    }
    let mut adj = vec![false; n * n];
    let mut rest = index;
    for u in 0..n {
        for v in u + 1..n {
            let digit = rest & 3;
            rest >>= 2;
            adj[u * n + v] = digit & 1 == 1;
            adj[v * n + u] = digit & 2 == 2;
        }
    }
    Ok(Digraph::from_matrix(n, adj))
}

pub fn index_of(d: &Digraph) -> Result<u64> {
    let n = d.n();
    digraph_count(n)?;
    let mut index = 0u64;
    let mut shift = 0;
    for u in 0..n {
        for v in u + 1..n {
            let digit = u64::from(d.arc(u, v)) | u64::from(d.arc(v, u)) << 1;
            index |= digit << shift;
            shift += 2;
        }
    }
    Ok(index)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub filter: Option<DigraphClass>,
    pub connected_only: bool,
}

impl EnumerationSpec {
    pub fn all(n: usize) -> Self {
        Self {
            n,
            filter: None,
            connected_only: false,
        }
    }

    pub fn accepts(&self, d: &Digraph) -> bool {
        (!self.connected_only || d.is_connected()) && self.filter.is_none_or(|c| c.contains(d))
    }
}

/// Every digraph on `spec.n` labeled vertices passing the filter, with its
/// enumeration index.
pub fn enumerate_digraphs(spec: EnumerationSpec) -> Result<impl Iterator<Item = (u64, Digraph)>> {
    if spec.n > EXHAUSTIVE_CAP {
        return Err(Error::EnumerationCap {
            n: spec.n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    enumerate_range(spec, 0..digraph_count(spec.n)?)
}

/// Like [`enumerate_digraphs`] restricted to an index range, for sharding.
pub fn enumerate_range(
    spec: EnumerationSpec,
    range: std::ops::Range<u64>,
) -> Result<impl Iterator<Item = (u64, Digraph)>> {
    if spec.n > EXHAUSTIVE_CAP {
        return Err(Error::EnumerationCap {
            n: spec.n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let count = digraph_count(spec.n)?;
    let range = range.start.min(count)..range.end.min(count);
    Ok(range.filter_map(move |i| {
        let d = digraph_from_index(spec.n, i).expect("index within range");
        spec.accepts(&d).then_some((i, d))
    }))
}
