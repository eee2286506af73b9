//! Size budgets keeping tables and adjacency structures in memory.

/// Caps on the two memory-hungry structures: field log tables and dense
/// adjacency bitmaps. Exceeding a cap is a hard error, never truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of field elements (log/exp tables are this long).
    pub field_elements: u64,
    /// Maximum number of sum-graph vertices (adjacency is `n*n` bits).
    pub graph_vertices: u64,
}

impl Budget {
    pub const DEFAULT_FIELD_ELEMENTS: u64 = 1 << 20;
    pub const DEFAULT_GRAPH_VERTICES: u64 = 1 << 16;

    /// Reads `SIDON_BUDGET` from the environment; a bare number overrides
    /// both caps. Unset or unparsable values fall back to the defaults.
    pub fn from_env() -> Self {
        match std::env::var("SIDON_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
        {
            Some(n) => Budget {
                field_elements: n,
                graph_vertices: n,
            },
            None => Budget::default(),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            field_elements: Self::DEFAULT_FIELD_ELEMENTS,
            graph_vertices: Self::DEFAULT_GRAPH_VERTICES,
        }
    }
}
