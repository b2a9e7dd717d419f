pub mod charmap;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod formal;
pub mod fqsym;
pub mod group;
pub mod json;
pub mod linalg;
pub mod nsym;
pub mod qsym;
pub mod scalars;
pub mod sym;
pub mod verify;
