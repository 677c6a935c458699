//! Expression language and command surface over `cuntz-core`.

pub mod session;
pub mod syntax;

pub use session::{CliError, Session, Value};
pub use syntax::{parse, parse_stmt, Expr, ParseError, Stmt};
