//! Shared fixtures for the criterion benches.

use std::sync::Arc;

use tripts_core::generators::random_general_position;
use tripts_core::PointSet;

/// Seeded random set used by every bench at size `n`.
pub fn fixture(n: usize) -> Arc<PointSet> {
    Arc::new(random_general_position(n, 0xbe7c4, 1 << 20).expect("grid is large enough"))
}
