//! Library surface of the CLI: the bundle expression language and report
//! rendering, shared between the binary and its tests.

pub mod parser;
pub mod report;
