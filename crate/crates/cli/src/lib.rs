//! Library half of the command-line front end: the expression parser,
//! the machine-readable vector documents, and conversion routing.

pub mod doc;
pub mod parser;
pub mod spaces;
