//! Exact (exponential-time) solvers. They double as the oracles every
//! polynomial algorithm and reduction in the crate is checked against.

mod cover;
mod domination;
mod equality;
mod wrd;

pub use cover::{min_red_blue_cover, rbd_exact, rxc3_exact};
pub use domination::{dominating_sets_of_size, gamma_exact};
pub use equality::{gamma_equals_gamma_r, satisfies_equality_conditions};
pub use wrd::{gamma_r_bruteforce, gamma_r_exact, wrd_within, BRUTEFORCE_CAP};

use crate::error::{Error, Result};
use crate::par::Parallelism;

pub const DEFAULT_CAP: usize = 20;
/// Hard ceiling: the searches work on 64-bit vertex masks.
pub const MAX_CAP: usize = 64;
pub const RBD_CAP: usize = 20;
pub const RXC3_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest vertex count an exact search will accept.
    pub cap: usize,
    pub parallelism: Parallelism,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            parallelism: Parallelism::default(),
        }
    }
}

impl SolverConfig {
    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap,
            ..Self::default()
        }
    }

    pub fn sequential(self) -> Self {
        Self {
            parallelism: Parallelism::Sequential,
            ..self
        }
    }

    pub(crate) fn admit(&self, size: usize) -> Result<()> {
        let cap = self.cap.min(MAX_CAP);
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(())
    }
}
