//! Exact computations in the free 2-rig on one generator.
//!
//! The free 2-rig on an object `x` is modelled semisimply: its simple objects
//! are labelled by partitions, objects are multiplicity vectors and morphisms
//! are block matrices over the rationals. On top of that model the crate
//! provides
//!
//! - partition and tableau combinatorics ([`partitions`]),
//! - symmetric group characters ([`characters`]),
//! - truncated symmetric functions with products and plethysms ([`symfunc`]),
//! - the semisimple 2-rig, its 2-ideals and quotients ([`rig`]),
//! - the evaluation into vector spaces through Young symmetrizers
//!   ([`schur_eval`]),
//! - the coordinate bialgebra of `n x n` matrices ([`bialgebra`]),
//! - the coend of the evaluation functor, degree by degree ([`coend`]).
//!
//! All arithmetic is exact.

pub mod bialgebra;
pub mod cache;
pub mod characters;
pub mod coend;
mod error;
pub mod linalg;
pub mod partitions;
pub mod perm;
pub mod poly;
pub mod rig;
pub mod schur_eval;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{Matrix, Q};
pub use partitions::Partition;

/// Size limits shared by the resource-bounded operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest symmetric-function degree kept by products and plethysms.
    pub degree_bound: usize,
    /// Largest tensor space `n^m` on which Young symmetrizers are built.
    pub tensor_coords: usize,
    /// Largest ambient dimension `n^(2m)` for brute-force coend ranks.
    pub coend_ambient: usize,
    /// Largest `m` for which a character table of `S_m` is computed.
    pub table_degree: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_bound: 8,
            tensor_coords: 10_000,
            coend_ambient: 6561,
            table_degree: characters::DEFAULT_TABLE_BOUND,
        }
    }
}
