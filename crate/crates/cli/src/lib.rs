//! Command-line front end: group spec parsing, commands and JSON reports.

pub mod commands;
pub mod report;
pub mod spec;

pub use commands::{run, Cli, CliError, Command, Outcome, Suite};
pub use report::{Report, Status};
pub use spec::{parse_spec, GroupSpec, SyntaxError};
