//! Library side of the `walkreg` command-line tool.

pub mod commands;
pub mod record;

pub use commands::{EXIT_DISAGREEMENT, EXIT_OK, EXIT_PARSE, EXIT_USAGE};
pub use record::AnalysisRecord;
