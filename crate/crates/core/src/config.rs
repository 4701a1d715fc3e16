//! Enumeration caps.

/// Environment variable overriding [`Limits::max_n`].
pub const MAX_N_ENV: &str = "DYCK_MAX_N";

/// Largest order enumerated by default (`C_8 = 1430` elements).
pub const DEFAULT_MAX_N: usize = 8;

/// Default cap on the number of subsets visited by ideal/antichain searches.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 50_000_000;

/// Fixed seed for the pseudorandom evaluation points of the partition sum.
pub const DEFAULT_POINT_SEED: u64 = 0x5eed_d1c4_2008;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub enumeration_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
            enumeration_budget: DEFAULT_ENUMERATION_BUDGET,
        }
    }
}

impl Limits {
    /// Defaults, with `max_n` overridden by `DYCK_MAX_N` when it parses.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(max_n) = std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_n = max_n;
        }
        limits
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.enumeration_budget = budget;
        self
    }

    pub fn check_order(&self, n: usize) -> crate::Result<()> {
        if n > self.max_n {
            Err(crate::Error::LimitExceeded {
                requested: n,
                max: self.max_n,
            })
        } else {
            Ok(())
        }
    }
}
