use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource caps shared by every engine. Exceeding a cap is always reported
/// as an error; nothing is truncated silently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", default)]
pub struct Caps {
    /// Largest S-pair lcm degree Buchberger will process.
    pub degree_cap: usize,
    /// Largest number of pending S-pairs.
    pub pair_cap: usize,
    /// Largest number of tables a fiber BFS may visit.
    pub bfs_cap: usize,
    /// Largest linear-algebra basis (monomials per slice, chain-group size).
    pub memory_cap: usize,
    /// Largest number of cycles an enumeration may return.
    pub cycle_cap: usize,
    /// Largest |V(C)| for admissible-set enumeration.
    pub admissible_vertex_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            degree_cap: 12,
            pair_cap: 1_000_000,
            bfs_cap: 1_000_000,
            memory_cap: 4_000_000,
            cycle_cap: 100_000,
            admissible_vertex_cap: 16,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("degreeCap", self.degree_cap),
            ("pairCap", self.pair_cap),
            ("bfsCap", self.bfs_cap),
            ("memoryCap", self.memory_cap),
            ("cycleCap", self.cycle_cap),
            ("admissibleVertexCap", self.admissible_vertex_cap),
        ];
        for (name, v) in fields {
            if v == 0 {
                return Err(Error::Validation(format!("{name} must be positive")));
            }
        }
        Ok(())
    }
}
