//! Library surface of the command-line tool: parsing, reports, the result
//! cache, named images, and the verification suites (shared between the
//! binary and the acceptance tests).

pub mod cache;
pub mod groups;
pub mod parse;
pub mod report;
pub mod suites;
