//! Report types and drivers behind the `cyclocode` binary.

pub mod report;
pub mod run;
pub mod verify;
