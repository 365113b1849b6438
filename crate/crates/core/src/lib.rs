//! Lattice path matroid polytopes.
//!
//! Bases, snakes and fences, the snake triangulation and its dual graph,
//! Ehrhart counting, Gorenstein tests and rank-two formulas.

pub mod ehrhart;
pub mod error;
pub mod fence;
pub mod gorenstein;
pub mod graph;
pub mod lpm;
pub mod polytope;
pub mod rank2;
pub mod triangulation;

pub use error::{Error, Result};
pub use lpm::{Cell, Composition, LatticePath, Lpm, Step};
