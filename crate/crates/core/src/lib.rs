//! Graded Betti tables of determinantal ideals and exact checks of
//! shift-based bounds on their Betti numbers and multiplicities.
//!
//! Four resolution families are modelled purely through their degree data:
//! maximal minors of a `t x (t+c-1)` matrix (Eagon–Northcott), submaximal
//! minors of a symmetric matrix (Józefiak), submaximal minors of a square
//! matrix (Gulliksen–Negård), and ACM divisors on varieties of minimal
//! degree. Every number produced is exact.

pub mod acceptance;
pub mod bounds;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod input;
pub mod model;
pub mod render;
pub mod resolutions;
pub mod scan;
pub mod table;

pub use bounds::{check_table, BoundsReport};
pub use error::{Error, Result};
pub use model::{
    DegreeData, DivisorData, PositivityPolicy, SquareDegreeData, StandardDegreeData,
    SymmetricDegreeData,
};
pub use resolutions::{build_table, closed_form, ClosedForm, Note};
pub use table::BettiTable;
