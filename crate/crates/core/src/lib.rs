//! Weight combinatorics and cohomology tables for the Suzuki and Ree groups.

pub mod audit;
pub mod bounds;
pub mod chevalley;
pub mod error;
pub mod isogeny;
pub mod lattice;
pub mod module_expr;
pub mod tables;
pub mod weight;

pub use error::{Error, Result};
pub use lattice::SystemId;
pub use module_expr::{CohomologyAnswer, ModuleExpr, Summand, SummandKind};
pub use weight::Weight;
