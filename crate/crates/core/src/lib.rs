//! Square-tiled surfaces (origamis), their SL(2,Z) orbit graphs, McMullen /
//! Lanneau-Nguyen prototypes with butterfly moves, and the Hubert-Lelièvre
//! reduction algorithm.

pub mod arith;
pub mod census;
pub mod error;
pub mod h2;
pub mod h2_surface;
pub mod hl;
pub mod invariants;
pub mod orbit;
pub mod origami;
pub mod perm;
pub mod prym;
pub mod prym_surface;
pub mod sweep;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use origami::{Cylinder, CylinderDecomposition, Origami, OrigamiRecord};
pub use perm::Permutation;
pub use words::{Gen, Sl2Word};
