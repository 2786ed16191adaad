//! Command-line entry points and the HTTP facade.

pub mod commands;
pub mod server;

pub use commands::{run, Cli, Command};
