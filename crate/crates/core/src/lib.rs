//! Binary G-spaces: a group `G` acting on a set `X` through maps
//! `g(x1, x2)` with `gh(x1, x2) = g(x1, h(x1, x2))` and `e(x1, x2) = x2`.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`] finite groups given by Cayley tables, subgroups, normalizers,
//!   commutator subgroups and cosets;
//! * [`catalog`] the small named groups used throughout the checks;
//! * [`matrix`] exact 2x2 rational matrices and structural subgroups of GL(2);
//! * [`word`] normal forms in the infinite dihedral group `<h, x | h^2, x^2>`;
//! * [`action`] binary and unary actions, their constructors and axiom checks;
//! * [`orbit`] image sets, orbit layers `G^n(x, x)` and bi-invariance;
//! * [`laws`] executable criteria for distributivity and bi-invariance.

pub mod action;
pub mod catalog;
pub mod group;
pub mod laws;
pub mod matrix;
pub mod orbit;
pub mod word;

pub use action::{ActionError, BinaryAction, UnaryAction};
pub use group::{FiniteGroup, GroupElement, GroupError, Subgroup};
pub use laws::{LawError, LawReport, Verdict};
pub use matrix::{Mat2, MatrixError, SubgroupPredicate};
pub use orbit::{OrbitClass, OrbitLayers, PointSet};
pub use word::{DWord, Shape};
