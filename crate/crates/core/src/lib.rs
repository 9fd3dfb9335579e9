//! Exact combinatorics of fully commutative elements in the type `A_n`
//! Coxeter group.
//!
//! The crate is organised bottom-up:
//!
//! * [`coxeter`]: words, permutations of `S_{n+1}`, commutation classes and
//!   the reflection action on roots.
//! * [`canonical`]: decreasing segments `T_i^m` and the canonical
//!   factorisation of fully commutative elements.
//! * [`dyck`]: Dyck paths, peaks, the statistic `k` and the `T(n, k)`
//!   triangle.
//! * [`bijection`]: the maps between canonical forms of rank `n` and Dyck
//!   paths of semilength `n + 1`.
//! * [`homogeneity`]: homogeneous words, weight graphs and components.
//! * [`dimension`]: reduced-word counts from Dyck path hook products.
//! * [`klr`]: explicit homogeneous modules over KLR algebras and a checker
//!   for their defining relations.

pub mod bijection;
pub mod canonical;
pub mod coxeter;
pub mod dimension;
pub mod dyck;
mod error;
pub mod homogeneity;
pub mod klr;

pub use bijection::{phi, psi, segment_of_peak, PeakBlock};
pub use canonical::{
    canonical_form_of, enumerate_fc, general_normal_form, CanonicalForm, NormalForm, Segment,
};
pub use coxeter::{Permutation, Root, Word};
pub use dimension::{dimension, DimensionMethod, DimensionResult};
pub use dyck::{count_t, enumerate_paths, t_row, t_table, DyckPath, Peak, Step};
pub use error::{Error, Result};
pub use homogeneity::{component_of, is_homogeneous_word, Component, Content, HeightGuard};
pub use klr::{
    build_module, check_relations, psi_degree, sweep, verify_relations, verify_single_degree,
    ModuleAction, Quiver, Relation, RelationOutcome, RelationReport, SweepReport,
};
