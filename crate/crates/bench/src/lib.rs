//! Shared helpers for the engine benchmarks.

use gstar_core::{find_builtin, GroupTable};

/// Builds a builtin corpus group, panicking on any setup problem.
pub fn build(name: &str) -> GroupTable {
    find_builtin(name)
        .and_then(|e| e.build())
        .unwrap_or_else(|e| panic!("benchmark setup for {name}: {e}"))
}
