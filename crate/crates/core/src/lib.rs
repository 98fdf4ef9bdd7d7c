//! Strong edge geodetic sets on grid graphs `P_n □ P_m`.
//!
//! A set `S` of vertices is strong edge geodetic if one shortest path can be chosen for each
//! pair of its members so that the chosen paths cover every edge. This crate builds such sets
//! for grids ([`construct`]), checks them ([`certificate::verify`]), evaluates the closed
//! forms for their minimum size ([`formulas`]) and computes that minimum exactly on small
//! graphs ([`solver`]).

pub mod certificate;
pub mod column_type;
pub mod construct;
pub mod error;
pub mod fmax;
pub mod formulas;
pub mod graph;
pub mod grid;
pub mod solver;

pub use certificate::{from_json, to_json, verify, Certificate, Cover, Pair};
pub use error::{DecodeError, FormulaError, GraphError, GridError, PathError, SolveError};
pub use grid::{GridSpec, Path, Vertex};
