pub mod canon;
pub mod coloring;
pub mod construction;
pub mod error;
pub mod export;
pub mod harness;
pub mod links;
pub mod minors;
pub mod multigraph;

pub use error::{Error, Result};

/// Size caps shared by enumeration and the exact oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Limits {
    /// Maximum number of links (or arcs) any single enumeration may produce.
    pub links: usize,
    /// Largest vertex count handed to the exact chromatic oracle.
    pub chromatic_oracle: usize,
    /// Largest vertex count handed to the exact Hadwiger oracle.
    pub hadwiger_oracle: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { links: 1_000_000, chromatic_oracle: 64, hadwiger_oracle: 12 }
    }
}
