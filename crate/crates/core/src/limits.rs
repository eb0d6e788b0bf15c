use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Caps that keep the exponential enumerations tractable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by any enumeration over set compositions or partitions.
    pub max_n: usize,
    /// Largest raw orientation product enumerated by the per-flat brute force.
    pub max_orientations: u64,
}

impl Limits {
    pub const DEFAULT_MAX_N: usize = 10;
    pub const DEFAULT_MAX_ORIENTATIONS: u64 = 1_000_000;

    pub fn with_max_n(max_n: usize) -> Self {
        Limits {
            max_n,
            ..Limits::default()
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > VertexSet::MAX_ELEMENT {
            return Err(Error::TooManyVertices {
                n,
                max: VertexSet::MAX_ELEMENT,
            });
        }
        if n > self.max_n {
            return Err(Error::BoundExceeded {
                n,
                max_n: self.max_n,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: Self::DEFAULT_MAX_N,
            max_orientations: Self::DEFAULT_MAX_ORIENTATIONS,
        }
    }
}
