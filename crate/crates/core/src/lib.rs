//! Exact computation of canonical bases of level-`ℓ` Fock spaces for the
//! quantum affine algebra of type `A^(1)_{e-1}`.
//!
//! The crate is `no_std` (it needs `alloc`). Layout:
//!
//! * [`multipartition`]: partitions, multipartitions, nodes, residues, dominance.
//! * [`roots`]: root and weight bookkeeping, the Cartan pairing, defect, blocks.
//! * [`laurent`]: integer Laurent polynomials in `q` with the bar involution.
//! * [`fock`]: the Fock space as a sparse module, `F_i`/`E_i` and divided powers.
//! * [`crystal`]: Kashiwara operators, Kleshchev multipartitions, the Mullineux map.
//! * [`canonical`]: the canonical basis engine and the degree-bound verification.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod canonical;
pub mod crystal;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod multipartition;
pub mod roots;

pub use canonical::{
    canonical_basis, canonical_basis_with, verify_degree_bounds, DecompositionMatrix, Monomial,
    PeelStrategy, Report,
};
pub use error::{ConventionFault, Error, Result};
pub use fock::{FockContext, FockVector};
pub use laurent::LaurentPoly;
pub use multipartition::{Characteristic, Charge, Multipartition, Node, Partition, Residue};
pub use roots::{RootVector, Weight};

/// Identifies every convention choice the engine is pinned to. Persisted
/// artifacts must be keyed by this value.
pub const CONVENTION_FINGERPRINT: &str =
    "reading=comp-row-col;f-exp=after;e-exp=before-neg;sig=cancel-minus-plus;pairing=sym-a2;v1";
