//! Size guards for the exhaustive operations.
//!
//! Every guarded operation has a default cap chosen so that it finishes
//! interactively. Exceeding a cap is a typed error, never silent truncation.
//! A single override (the `SGACH_MAX_N` environment variable, or
//! [`Limits::with_max`]) replaces the threshold of every guard uniformly;
//! each guard still measures its own quantity (vertices or edges).

use thiserror::Error;

/// Environment variable read by [`Limits::from_env`].
pub const ENV_MAX_N: &str = "SGACH_MAX_N";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("size guard exceeded: {measured} {quantity} > limit {limit} (override with {ENV_MAX_N})")]
pub struct GuardError {
    pub quantity: &'static str,
    pub measured: usize,
    pub limit: usize,
}

/// Guard configuration. `max = None` keeps the per-operation defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Limits {
    max: Option<usize>,
}

/// Default caps, per operation family.
pub mod caps {
    /// `chi2`, `psi2`, `psi` partition searches (vertices).
    pub const PARTITION: usize = 12;
    /// `chis`, `psis` and the per-class extremes: partition search times a
    /// switching enumeration (vertices).
    pub const SWITCHING: usize = 10;
    /// `psi_max_graph` / `psi_min_graph` signature enumeration (edges).
    pub const SIGNATURES: usize = 14;
    /// `psi_max_signed_graph` / `psi_min_signed_graph` (edges).
    pub const SIGNED_SIGNATURES: usize = 10;
    /// Pairwise clique recognition and diamond-freeness (vertices).
    pub const CLIQUE: usize = 20000;
    /// Gadget construction (vertices).
    pub const BUILD: usize = 20000;
    /// Exhaustive 3-partition solving (number of triples m).
    pub const THREE_PARTITION: usize = 3;
}

impl Limits {
    /// Per-operation defaults, no override.
    pub const DEFAULT: Limits = Limits { max: None };

    pub fn with_max(max: usize) -> Limits {
        Limits { max: Some(max) }
    }

    /// No guard at all — for internal calls on sizes already vetted.
    pub fn unbounded() -> Limits {
        Limits::with_max(usize::MAX)
    }

    /// Reads `SGACH_MAX_N`; unset or unparsable values keep the defaults.
    pub fn from_env() -> Limits {
        Limits {
            max: std::env::var(ENV_MAX_N)
                .ok()
                .and_then(|v| v.trim().parse().ok()),
        }
    }

    pub fn check(
        &self,
        quantity: &'static str,
        measured: usize,
        default_cap: usize,
    ) -> Result<(), GuardError> {
        let limit = self.max.unwrap_or(default_cap);
        if measured > limit {
            Err(GuardError {
                quantity,
                measured,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
