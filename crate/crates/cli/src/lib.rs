//! Front end for `summand-core`: a declaration language for rings, ideals,
//! modules, extensions and complexes, a verb dispatcher over the checkers,
//! and deterministic text or JSON reports.

pub mod ast;
pub mod commands;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod report;
pub mod workspace;

pub use commands::{execute, Outcome, Settings, VERBS};
pub use error::{CliError, CliResult};
pub use report::Report;
pub use workspace::{InputFormat, Workspace};
