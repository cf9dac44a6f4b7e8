//! Exact projective kernel for cevian-triangle geometry: points, lines,
//! collineations, conics and the configuration built from a triangle and a
//! point `P`, plus a randomized theorem-checking suite.

pub mod collineations;
pub mod conics;
pub mod constructions;
pub mod error;
pub mod frame;
pub mod linalg;
pub mod projective;
pub mod suite;

pub use collineations::ProjMap;
pub use conics::Conic;
pub use constructions::{CevianConfig, Guard, Guards, Hypothesis, Triangle};
pub use error::{GeometryError, Result};
pub use frame::{Cartesian, Frame};
pub use projective::{ExtRat, ProjLine, ProjPoint, Rat};
