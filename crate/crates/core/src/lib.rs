pub mod bimodule;
pub mod cli;
pub mod error;
pub mod fodc;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod structure;

pub use error::{Error, Result};
