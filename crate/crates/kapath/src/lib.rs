//! (k,a)-lattice paths: representation, exhaustive enumeration, hump/peak
//! statistics, the hump-coloring bijection onto super paths, and executable
//! verification of the counting identities that relate them.
//!
//! A `(k,a)`-path of order `n` runs from `(0,0)` to `(n,0)` using up steps
//! `(1,k)`, down steps `(1,-1)` and horizontal steps `(a,0)` without going
//! below the x-axis; dropping the sign restriction gives the super paths.
//! Dyck, Motzkin, Schroeder and k-ary paths are the special cases
//! `(1,inf)`, `(1,1)`, `(1,2)` and `(k,inf)`.

pub mod bijection;
pub mod enumerate;
pub mod identities;
pub mod path;

pub use bijection::{phi, psi, BijectionError, CaseTag};
pub use enumerate::{
    enumerate_colored, enumerate_paths, enumerate_restricted, enumerate_super, ColoredHumpPath,
    StatisticKind, SuperSubset,
};
pub use path::{HorizontalWidth, Hump, LatticePath, LatticePoint, PathError, PathParams, StepKind};
