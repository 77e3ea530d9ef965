//! Word problems, normal forms, homomorphisms and transvections for Artin
//! groups of spherical types `A`, `B`, `I₂(m)`, `F₄` and affine types `Ã`, `C̃`.
//!
//! Generators are numbered from 1. A word is a list of nonzero integers,
//! `i` for `s_i` and `-i` for `s_i⁻¹`.

pub mod braid;
pub mod cli;
pub mod dihedral;
pub mod error;
pub mod freegroup;
pub mod harness;
pub mod morphisms;
pub mod presentations;
pub mod transvections;

pub use error::{ArtinError, Result};
pub use presentations::{ArtinType, Word};
