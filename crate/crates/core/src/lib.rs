//! Quandles for monodromy: finite and geometric quandles, braid and torus
//! Dehn twist augmentations, monodromy tuple validation, Hurwitz orbits,
//! counting invariants and rack/quandle homology.

pub mod error;
pub mod bigint_json;
pub mod braid;
pub mod catalog;
pub mod free_group;
pub mod group_quandles;
pub mod homology;
pub mod io;
pub mod linear;
pub mod monodromy;
pub mod perm;
pub mod quandle;
pub mod torus;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use quandle::{
    achiral_double, check_augmentation, check_axioms, check_axioms_on, enumerate_homs, find_isomorphism,
    subquandle_generated, AugmentedQuandle, Axiom, AxiomReport, FiniteQuandle, Group, Quandle,
    QuandleHom,
};
