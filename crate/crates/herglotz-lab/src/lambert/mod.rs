//! Generalized Lambert series and the Ramanujan-type transformations.

mod kernel;
mod series;
mod transform;

pub use kernel::lambert_kernel;
pub use series::{lambert_sum, LambertSpec};
pub use transform::{check_companion, check_ramanujan, check_thm211, check_thm212, check_zetagen_a, dual_beta};
