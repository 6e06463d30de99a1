//! Numeric primitives shared by every other module.

mod poisson;
mod special;
mod sphere;

pub use poisson::{
    poisson_central_moment4, poisson_pmf, poisson_raw_moment4, poisson_sample, PoissonMean,
};
pub use special::{erf, erfc, ln_gamma, log2_gamma, upper_incomplete_gamma};
pub use sphere::{log2_sphere_volume, sphere_volume, Dimension};

/// `log2` values beyond this magnitude are never exponentiated.
pub const LOG2_LINEAR_LIMIT: f64 = 900.0;
