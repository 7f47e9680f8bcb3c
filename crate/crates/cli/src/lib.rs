//! Library side of the `qgwalk` command: config parsing, command bodies and
//! report rendering, kept out of `main` so they can be tested directly.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use config::{parse_config, WalkConfig};
pub use error::{CliError, Result};
