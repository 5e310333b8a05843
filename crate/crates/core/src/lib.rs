//! Combinatorics of Brauer trees and special gendo-Brauer tree algebras.
//!
//! A Brauer tree (a planar tree with at most one exceptional vertex) together
//! with a special set `W` of hook labels determines a representation-finite
//! gendo-symmetric biserial algebra `Γ^W`. This crate builds the quiver
//! presentations of these algebras, computes their dominant, Gorenstein and
//! global dimensions from the Green's walk, reduces them to a derived
//! equivalence invariant (a binary necklace) and counts the resulting classes.
//!
//! Everything that can be checked by brute force is: the [`nakayama::oracle`]
//! module resolves uniserial modules over arbitrary cyclic Nakayama algebras
//! and solves Hom spaces by exact rational linear algebra, independently of
//! the walk-based formulas.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod enumeration;
pub mod error;
pub mod homdim;
pub mod nakayama;
pub mod necklace;
pub mod orbits;
pub mod presentation;
pub mod tree;
pub mod walk;

pub use error::{Error, Result};
pub use homdim::{Dim, DimensionReport};
pub use necklace::{Bead, Necklace};
pub use tree::{BrauerTree, EdgeId, HookLabel, PlanarTree, SpecialSubset, VertexId};
pub use walk::GreenWalk;
