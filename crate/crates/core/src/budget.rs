//! Resource caps for the enumeration-shaped operations.

/// Caps honored by `enumerate`, the norm search, and the brute-force
/// oracle. The `SCHREIER_BUDGET` environment variable overrides
/// `max_subsets` for CLI runs.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Largest number of candidate subsets an enumeration may visit.
    pub max_subsets: u64,
    /// Largest vector support the norm search accepts.
    pub max_support: usize,
    /// Largest vector support the brute-force norm oracle accepts.
    pub oracle_max_support: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_subsets: 1 << 22,
            max_support: 20,
            oracle_max_support: 16,
        }
    }
}

impl Budget {
    /// Reads `SCHREIER_BUDGET` on top of the defaults.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var("SCHREIER_BUDGET") {
            if let Ok(n) = v.trim().parse::<u64>() {
                b.max_subsets = n;
            }
        }
        b
    }
}
