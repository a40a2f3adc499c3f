//! Library surface of the `tww` command line tool: file formats, the
//! sparse-regime classifier, and the Monte-Carlo experiment harness.

pub mod classify;
pub mod experiment;
pub mod formats;
