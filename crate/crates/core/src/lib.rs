pub mod dyck;
pub mod error;
pub mod linalg;
pub mod operators;
pub mod par;
pub mod spaces;
pub mod structure;
pub mod superpoly;
pub mod verify;

pub use error::{Error, Result};
