use crate::error::{Error, Result};

/// Environment variable that overrides the default subset-search cap.
pub const ORACLE_CAP_ENV: &str = "ARCLOCAL_ORACLE_CAP";

/// Largest vertex count on which exponential subset searches will run.
///
/// Above the cap those searches return [`Error::NotComputed`] instead of
/// running for an unbounded time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleCap(usize);

impl OracleCap {
    pub const DEFAULT: OracleCap = OracleCap(12);
    /// Subsets are enumerated as `u64` masks.
    pub const MAX: usize = 63;

    pub fn new(cap: usize) -> Result<Self> {
        if cap > Self::MAX {
            return Err(Error::InvalidArgument(format!(
                "oracle cap {cap} exceeds the supported maximum {}",
                Self::MAX
            )));
        }
        Ok(Self(cap))
    }

    /// The cap from `ARCLOCAL_ORACLE_CAP`, or the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ORACLE_CAP_ENV) {
            Ok(raw) => {
                let cap = raw.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidArgument(format!("{ORACLE_CAP_ENV}={raw:?} is not a count"))
                })?;
                Self::new(cap)
            }
            Err(_) => Ok(Self::DEFAULT),
        }
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn allows(self, n: usize) -> bool {
        n <= self.0
    }

    pub fn check(self, n: usize) -> Result<()> {
        if self.allows(n) {
            Ok(())
        } else {
            Err(Error::NotComputed { n, cap: self.0 })
        }
    }
}

impl Default for OracleCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Calls `f` on every `k`-subset of `0..n` as a bitmask, in increasing
/// numeric order, until `f` returns `Some`.
pub(crate) fn find_subset<T>(n: usize, k: usize, mut f: impl FnMut(u64) -> Option<T>) -> Option<T> {
    debug_assert!(n <= OracleCap::MAX);
    if k > n {
        return None;
    }
    if k == 0 {
        return f(0);
    }
    let limit = 1u64 << n;
    let mut mask = (1u64 << k) - 1;
    while mask < limit {
        if let Some(found) = f(mask) {
            return Some(found);
        }
        // Gosper's hack: next mask with the same popcount.
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    None
}

pub(crate) fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_enumerated_once_in_order() {
        let mut seen = Vec::new();
        let none: Option<()> = find_subset(5, 2, |m| {
            seen.push(m);
            None
        });
        assert!(none.is_none());
        assert_eq!(seen.len(), 10);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert!(seen.iter().all(|m| m.count_ones() == 2 && *m < 32));
    }

    #[test]
    fn cap_bounds() {
        assert!(OracleCap::new(64).is_err());
        let cap = OracleCap::new(5).unwrap();
        assert!(cap.check(5).is_ok());
        assert_eq!(cap.check(6), Err(Error::NotComputed { n: 6, cap: 5 }));
        assert_eq!(OracleCap::default().get(), 12);
    }
}
