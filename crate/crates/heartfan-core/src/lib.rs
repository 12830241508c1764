//! Exact convex geometry for abelian categories.
//!
//! This crate computes the convex-geometric invariants attached to a finitely
//! presented length abelian category over a lattice: effective cones and heart
//! cones of tilted hearts, the heart cofan and heart fan, the virtual g-fan
//! with its c- and g-vector bases, King-semistability wall-and-chamber data,
//! stability fans and phase slices. Closed-form generators for the standard
//! infinite rank-2 families (projective line, n-Kronecker, rank-2 tube,
//! semisimple over Z, elliptic) live in [`families`].
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals
//! throughout, no floating point anywhere. Cones are kept in canonical form so
//! that structural equality decides geometric equality.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the companion CLI
//! crate carries IO, file formats and rendering.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod abcat;
pub mod cone;
pub mod error;
pub mod families;
pub mod fan;
pub mod heart;
pub mod lattice;
pub mod linalg;
pub mod sample;

pub use error::{Error, Result};
pub use lattice::{DualVector, Lattice, LatticeHom, LatticeVector};
