//! Exact branching-rule machinery for unitary-equivariant tensor valuations,
//! plus the floating-point hermitian geometry that certifies the vector-valued
//! basis.
//!
//! The integer side runs bottom-up: [`partition`] → [`lr`] → [`rep_ring`] →
//! [`branching`] → [`valuation`]. The [`geometry`] module is independent of
//! it. [`fixtures`] checks committed reference tables against both.

pub mod branching;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod lr;
pub mod partition;
pub mod rep_ring;
pub mod valuation;

pub use nalgebra;

pub use branching::{
    branch, branch_orth_to_unitary, branch_raw, sym_power_branch, BranchResult, OrthLabel, RawTerm,
};
pub use error::{Error, Result};
pub use fixtures::{builtin_tables, reproduce, FixtureTable, ReproductionReport};
pub use geometry::{
    independence_certificate, kahler_cosines, klain_mu, Ambient, KahlerProfile, RealSubspace,
    SimplexBody, Unitary,
};
pub use lr::{lr_coefficient, lr_oracle, schur_product_covariant};
pub use partition::Partition;
pub use rep_ring::{normalize_label, weyl_dim_u, SignedTerm, ULabel, VirtualURep};
pub use valuation::{
    closed_form_dim, closed_form_hom_spherical, closed_form_val_mult, hom_dim_spherical,
    hom_dim_sym, val_irrep_multiplicity, ValContext,
};
