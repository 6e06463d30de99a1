//! Deterministic identification (DI) over the discrete-time Poisson channel.
//!
//! The crate is organised bottom-up:
//!
//! - [`math`]: log-gamma, erf, incomplete gamma, hypersphere volumes and the
//!   Poisson law (pmf, exact sampling, fourth moments).
//! - [`channel`]: the memoryless channel `Y_t ~ Pois(λ + x_t)`.
//! - [`codebook`]: sphere-packing codebooks inside the power-constraint cube.
//! - [`identification`]: the threshold distance decoder.
//! - [`analysis`]: Monte-Carlo error estimates, Chebyshev comparators,
//!   converse-side validators and the `n log n`-scale rate formulas.
//! - [`capacity`]: closed-form and 1-D-optimised Shannon capacity bounds.
//!
//! Monte-Carlo loops run on rayon when the `parallel` feature is enabled
//! (the default). Every trial draws from its own stream derived from
//! `(seed, experiment, index)`, so results do not depend on the schedule.

pub mod analysis;
pub mod capacity;
pub mod channel;
pub mod codebook;
mod error;
pub mod exec;
pub mod identification;
pub mod math;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};
pub use exec::Exec;
