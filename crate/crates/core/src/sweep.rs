//! Property sweeps over exhaustive enumerations and sampled populations.
//!
//! Index ranges are split into shards that run on a rayon pool; shard
//! summaries merge order-independently (counts add, the failure with the
//! smallest index wins).

use std::fmt;
use std::ops::Range;

use rayon::prelude::*;
use serde::Serialize;

use crate::classes::DigraphClass;
use crate::config::OracleCap;
use crate::decomposition::odd_extended_cycle_components;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::lemmas::Property;
use crate::oracles::enumerate::{digraph_count, enumerate_range, EnumerationSpec, EXHAUSTIVE_CAP};
use crate::structure::strong_components;

const SHARD: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub n: usize,
    pub class: Option<DigraphClass>,
    pub connected_only: bool,
    pub properties: Vec<Property>,
    pub cap: OracleCap,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
}

impl SweepSpec {
    pub fn new(n: usize, class: Option<DigraphClass>, properties: Vec<Property>) -> Self {
        Self {
            n,
            class,
            connected_only: true,
            properties,
            cap: OracleCap::DEFAULT,
            jobs: 0,
        }
    }

    fn enumeration(&self) -> EnumerationSpec {
        EnumerationSpec {
            n: self.n,
            filter: self.class,
            connected_only: self.connected_only,
        }
    }
}

/// A counterexample, located by enumeration index or population position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub index: u64,
    pub property: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub scanned: u64,
    pub filtered: u64,
    pub failures: u64,
    pub first_failure: Option<SweepFailure>,
    /// Members with two or more odd extended cycle components.
    pub several_odd_components: u64,
}

impl SweepSummary {
    pub fn is_clean(&self) -> bool {
        self.failures == 0
    }

    fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.scanned += other.scanned;
        self.filtered += other.filtered;
        self.failures += other.failures;
        self.several_odd_components += other.several_odd_components;
        self.first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(if b.index < a.index { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }

    fn record(&mut self, index: u64, d: &Digraph, properties: &[Property], cap: OracleCap) {
        self.filtered += 1;
        if odd_extended_cycle_components(d, &strong_components(d)).len() > 1 {
            self.several_odd_components += 1;
        }
        for &p in properties {
            if let Err(reason) = p.check(d, cap) {
                self.failures += 1;
                if self.first_failure.as_ref().is_none_or(|f| index < f.index) {
                    self.first_failure = Some(SweepFailure {
                        index,
                        property: p.name().into(),
                        reason,
                    });
                }
            }
        }
    }
}

/// `4096 scanned, 128 filtered, 0 failures`
impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} scanned, {} filtered, {} failures",
            self.scanned, self.filtered, self.failures
        )
    }
}

fn shard(spec: &SweepSpec, range: Range<u64>) -> Result<SweepSummary> {
    let mut summary = SweepSummary {
        scanned: range.end - range.start,
        ..SweepSummary::default()
    };
    for (index, d) in enumerate_range(spec.enumeration(), range)? {
        summary.record(index, &d, &spec.properties, spec.cap);
    }
    Ok(summary)
}

fn in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(work))
}

/// Checks `spec.properties` on every enumerated digraph passing the filter.
pub fn run_exhaustive(spec: &SweepSpec) -> Result<SweepSummary> {
    if spec.n > EXHAUSTIVE_CAP {
        return Err(Error::EnumerationCap {
            n: spec.n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let total = digraph_count(spec.n)?;
    let shards: Vec<Range<u64>> = (0..total.div_ceil(SHARD))
        .map(|i| i * SHARD..((i + 1) * SHARD).min(total))
        .collect();
    in_pool(spec.jobs, || {
        shards
            .into_par_iter()
            .map(|range| shard(spec, range))
            .try_reduce(SweepSummary::default, |a, b| Ok(a.merge(b)))
    })?
}

/// Checks `properties` on a fixed population; failures are located by
/// position in `digraphs`. Every member counts as both scanned and filtered.
pub fn run_population(
    digraphs: &[Digraph],
    properties: &[Property],
    cap: OracleCap,
    jobs: usize,
) -> Result<SweepSummary> {
    in_pool(jobs, || {
        digraphs
            .par_iter()
            .enumerate()
            .map(|(i, d)| {
                let mut s = SweepSummary {
                    scanned: 1,
                    ..SweepSummary::default()
                };
                s.record(i as u64, d, properties, cap);
                s
            })
            .reduce(SweepSummary::default, SweepSummary::merge)
    })
}
