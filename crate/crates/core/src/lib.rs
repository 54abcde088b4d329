pub mod error;
pub mod exact;

pub use error::{Error, Result};
pub mod cli;
pub mod cyclotomic;
pub mod enumerate;
pub mod qstirling;
pub mod symfun;
pub mod zeta;
