//! Error-probability estimation, the Chebyshev comparators, converse-side
//! validators and the `n log n`-scale rate formulas.

mod bounds;
mod converse;
mod monte_carlo;
mod rate;

pub use bounds::{e0_bound, e1_structural_check, type1_chebyshev_bound, E1Check, Type1Variant};
pub use converse::{
    converse_count_upper, converse_ratio_check, converse_ratio_check_with, f_taylor_bound_check,
    ConverseParams, TaylorCheck,
};
pub use monte_carlo::{
    estimate_type1, estimate_type1_with, estimate_type2, estimate_type2_with, sample_ordered_pairs,
    TrialReport, MIN_TRIALS,
};
pub use rate::{achievable_rate_curve, converse_rate_curve, RateReport};
