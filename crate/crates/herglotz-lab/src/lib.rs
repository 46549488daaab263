pub mod asym;
pub mod cli;
pub mod error;
pub mod herglotz;
pub mod identities;
pub mod lambert;
pub mod quadrature;
pub mod special;

pub use error::{HerglotzError, Result};
