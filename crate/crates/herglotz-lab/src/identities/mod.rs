//! Numerical verification of the functional equations and transformations.
//! Every check returns an [`IdentityReport`] with both sides, their error
//! estimates and the residual.

mod corrections;
mod odd;
mod raabe;
mod report;
mod val;
mod zagier;

pub use corrections::{CorrectionB, CorrectionBranch, CorrectionC};
pub use odd::{
    check_cor24, check_equivalence, check_modular, check_thm21, check_thm21_k1, check_thm22, check_thm23,
    check_trans4m1, digamma_pair_sum,
};
pub use raabe::{check_raabe, cosine_integral, raabe_rhs};
pub use report::{json_str, num, reports_to_json, IdentityReport, ParamValue, Params, DEFAULT_TOLERANCE};
pub use val::Val;
pub use zagier::{check_vz1, check_vz2, check_zagier_fe1, check_zagier_fe2, f_at_one};
