pub mod adjoint;
pub mod builtins;
pub mod cli;
pub mod ends;
pub mod error;
pub mod exactla;
pub mod group;
pub mod hopf;
pub mod rep;
pub mod schema;
pub mod verify;

pub use error::{Error, Result};
