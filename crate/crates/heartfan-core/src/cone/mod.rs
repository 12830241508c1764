//! The cone calculus: integral cones (monoids), closed rational cones,
//! duality, faces, cofaces, saturation and Minkowski operations.

pub mod dd;
mod int;
mod rat;

pub use int::{ConeProps, IntCone, IntFace, IntFacePoset};
pub use rat::{Face, FacePoset, RatCone};
