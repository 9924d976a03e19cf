//! Command-line plumbing for latticelab: the JSON document format, DOT
//! export, random lattices, and the theorem and table verification harness.

pub mod document;
pub mod dot;
pub mod random;
pub mod report;
pub mod tables;
pub mod theorems;
pub mod verify;
