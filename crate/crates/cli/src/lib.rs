//! Command-line front end: expression parsing, reports and commands.

pub mod commands;
pub mod expr;
pub mod report;

pub use commands::run;
