//! Command-line front end for the monomial ideal engine: an expression
//! parser, a line-oriented command language, and round-trip stable
//! serialization.

pub mod doc;
pub mod parse;
pub mod render;
pub mod session;

pub use doc::{deserialize, serialize, IdealDoc};
pub use parse::eval_expr;
pub use session::{cit_tables, default_vars, CliError, CommandOutput, ExponentTable, Workspace};
