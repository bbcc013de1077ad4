//! Numerical semigroups: construction, invariants, Wilf and Eliahou
//! numbers, parametrized families, classification predicates, exhaustive
//! genus-tree exploration, and grid pictures.
//!
//! A numerical semigroup is a subset of the nonnegative integers that
//! contains 0, is closed under addition, and misses only finitely many
//! integers. The missing ones are its *gaps*; the number of gaps is the
//! *genus*. Wilf's conjecture (1978) asks whether
//! `|P| * |L| >= c` for every numerical semigroup, where `P` is the set of
//! minimal generators, `L` the set of elements below the conductor `c`.
//! This crate computes everything needed to study that question at desk
//! scale and to hunt for counterexamples.
//!
//! ```
//! use numsgps::NumericalSemigroup;
//!
//! let s = NumericalSemigroup::with_tail(&[5, 13], 20).unwrap();
//! assert_eq!(s.minimal_generators(), &[5, 13, 21, 22, 24]);
//! assert_eq!(numsgps::wilf_number(&s), 10);
//! ```

mod bits;

pub mod classify;
pub mod explore;
pub mod families;
pub mod metrics;
pub mod render;
pub mod semigroup;

pub use classify::{classify, property, quasi_compare, ClassificationRecord, PropertyId};
pub use explore::{enumerate, oracle_enumerate, EnumerateOptions, ExplorationStats, TreeNode};
pub use metrics::{eliahou_number, threshold_partition, wilf_number, ThresholdPartition};
pub use render::{emit_svg, emit_tikz, grid_model, GridModel, Palette, RenderOptions};
pub use semigroup::{
    AperyVector, GeneratorSpec, InvariantRecord, NumericalSemigroup, SpecError,
};
