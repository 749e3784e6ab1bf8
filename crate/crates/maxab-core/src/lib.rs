//! Exact-arithmetic machinery for abelian subgroups of compact classical
//! groups: cyclotomic scalars, projective matrix groups, Clifford/Spin
//! elements, commutator pairings and their block invariants, symplectic
//! metric spaces over F2, fixed-subalgebra dimensions, and root-system
//! computations with Bourbaki numbering.

pub mod catalog;
pub mod clifford;
pub mod cyclotomic;
pub mod error;
pub mod f2struct;
pub mod fixedspace;
pub mod group;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod pairing;
pub mod rootsys;
pub mod spin;
pub mod verify;

pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{FiniteSubgroup, GroupContext, ProjElement};
pub use matrix::{CycMatrix, QuatCycMatrix};
