//! Shared fixture: a worked (3,2) example of order 38, big enough to
//! exercise every decomposition piece at once. The colored path carries a
//! hump `UHD` at step 12 colored 2; its image is the super path whose
//! crossing up step runs from (7,-1) to (8,2) with return point A = (14,0)
//! and lowest point B = (30,-4).

// Each test target uses its own subset of the fixtures.
#![allow(dead_code)]

use kapath::path::{HorizontalWidth, LatticePath, PathParams};

pub const EXAMPLE_K: u32 = 3;
pub const EXAMPLE_A: u32 = 2;

/// The colored (3,2)-path of order 38.
pub const EXAMPLE_COLORED_WORD: &str = "UDDDUDUDDDUDUHDUDDDDDDUDDDDUDDDDDUDDD";
/// Index of the distinguished hump's up step, and its horizontal run.
pub const EXAMPLE_HUMP_UP: usize = 12;
pub const EXAMPLE_HUMP_RUN: usize = 1;
pub const EXAMPLE_COLOR: u32 = 2;

/// The super (3,2)-path the hump maps to.
pub const EXAMPLE_SUPER_WORD: &str = "HDDDDUUUDDDDDDUDDDDUDDDDDUDDDUDUDDDUD";

pub fn example_params() -> PathParams {
    PathParams::new(EXAMPLE_K, HorizontalWidth::Finite(EXAMPLE_A)).unwrap()
}

pub fn example_colored_path() -> LatticePath {
    LatticePath::parse(EXAMPLE_COLORED_WORD, example_params()).unwrap()
}

pub fn example_super_path() -> LatticePath {
    LatticePath::parse(EXAMPLE_SUPER_WORD, example_params()).unwrap()
}
