//! Size guards for the exponential routines.
//!
//! Defaults can be raised or lowered with the `DEGENCRIT_MAX_N` environment
//! variable; canonical labelling never goes above [`CANON_HARD_CAP`].

use std::sync::OnceLock;

pub const CANON_HARD_CAP: usize = 12;
pub const BRUTEFORCE_PERMUTATION_LIMIT: usize = 9;
pub const SUBSET_SWEEP_LIMIT: usize = 7;
pub const CENSUS_LIMIT: usize = 10;
pub const CENSUS_LIMIT_DENSE: usize = 11;

pub const ENV_MAX_N: &str = "DEGENCRIT_MAX_N";

fn env_override() -> Option<usize> {
    static CELL: OnceLock<Option<usize>> = OnceLock::new();
    *CELL.get_or_init(|| std::env::var(ENV_MAX_N).ok()?.trim().parse().ok())
}

fn pick(default: usize) -> usize {
    env_override().unwrap_or(default)
}

pub fn canon_cap() -> usize {
    pick(CANON_HARD_CAP).min(CANON_HARD_CAP)
}

pub fn bruteforce_permutation_limit() -> usize {
    pick(BRUTEFORCE_PERMUTATION_LIMIT)
}

pub fn subset_sweep_limit() -> usize {
    pick(SUBSET_SWEEP_LIMIT)
}

/// Vertex-count guard for exhaustive enumeration. Minimum degree 4 or more
/// collapses the search space enough to allow one extra vertex.
pub fn census_limit(min_degree: usize) -> usize {
    let base = if min_degree >= 4 {
        CENSUS_LIMIT_DENSE
    } else {
        CENSUS_LIMIT
    };
    pick(base).min(CANON_HARD_CAP)
}

pub const SWEEP_LIMIT: usize = 8;

pub fn sweep_limit() -> usize {
    pick(SWEEP_LIMIT).min(CENSUS_LIMIT)
}
