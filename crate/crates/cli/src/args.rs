use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "poisson-di",
    version,
    about = "Deterministic identification over the discrete-time Poisson channel",
    long_about = "Codebook construction, Monte-Carlo error estimation, rate curves and capacity \
                  bounds for deterministic identification over the discrete-time Poisson channel.\n\n\
                  All randomness flows from --seed. Every emitted row carries schema_version, \
                  the command, the seed and the configuration that produced it. Doubles are \
                  written with 17 significant digits."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a codebook and write it as versioned JSON (or one CSV row per word).
    #[command(after_help = CONSTRUCT_COLUMNS)]
    Construct(ConstructArgs),
    /// Check power constraints, sphere separation and (with --lambda) the converse ratio condition.
    #[command(after_help = VALIDATE_COLUMNS)]
    Validate(ValidateArgs),
    /// Estimate type-I and type-II error probabilities of a codebook.
    #[command(after_help = ERROR_COLUMNS)]
    Simulate(SimulateArgs),
    /// Evaluate a capacity bound from the registry.
    #[command(after_help = BOUND_COLUMNS)]
    Bounds(BoundsArgs),
    /// Run a sweep over explicit comma-separated axes.
    Sweep(SweepArgs),
}

pub const CONSTRUCT_COLUMNS: &str = "CSV columns: schema_version, command, seed, construction, n, b, p_max, p_ave, \
a, r0, delta_n, word, x (letters separated by ';')";
pub const VALIDATE_COLUMNS: &str = "CSV columns: schema_version, command, seed, codebook, construction, n, b, \
p_max, p_ave, r0, words, min_distance, required_distance, packing_ok, constraints_ok, peak_violations, \
average_violations, cube_violations, e1_holds, lambda, eps_prime, converse_violations";
pub const ERROR_COLUMNS: &str = "CSV columns: schema_version, command, seed, experiment_id, estimate_seed, n, b, \
lambda, p_max, p_ave, r0, delta_n, construction, words, trials, kind, sent, tested, p_hat, ci_low, ci_high, \
statistic_mean, statistic_sd, analytic_bound, analytic_bound_literal";
pub const BOUND_COLUMNS: &str = "CSV columns: schema_version, command, seed, name, value, asymptotic, params, \
free_params, notes (values in bits per channel use; maps written as key=value;key=value)";
pub const SWEEP_BOUND_COLUMNS: &str = "CSV columns: schema_version, command, seed, axis, axis_value, name, value, \
asymptotic, params, free_params, notes";
pub const RATE_COLUMNS: &str = "CSV columns: schema_version, command, seed, b, a, lambda, p_max, n, \
achievable_log2_count, achievable_rate, converse_log2_count, converse_rate (rates per n·log2(n) channel uses)";

/// Flags shared by every command.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Block length(s), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<u64>,
    /// Slack exponent(s) in (0, 1), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub b: Vec<f64>,
    /// Dark current(s), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub lambda: Vec<f64>,
    /// Peak power.
    #[arg(long = "p-max")]
    pub p_max: Option<f64>,
    /// Average power.
    #[arg(long = "p-ave")]
    pub p_ave: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Monte-Carlo trials per estimate.
    #[arg(long)]
    pub trials: Option<u64>,
    /// Maximum number of codewords.
    #[arg(long = "l-cap")]
    pub l_cap: Option<usize>,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionKind {
    SaturatedRandom,
    Lattice,
    BlockLattice,
    BalancedBlockLattice,
}

#[derive(Debug, Clone, Args)]
pub struct BuildArgs {
    #[arg(long, value_enum, default_value = "saturated-random")]
    pub construction: ConstructionKind,
    /// Consecutive rejections that count as saturation.
    #[arg(long, default_value_t = poisson_di::codebook::DEFAULT_REJECTION_BUDGET)]
    pub budget: u64,
    /// Override the sphere radius r0 (keeps delta_n = r0²/(3n)).
    #[arg(long)]
    pub radius: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub build: BuildArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub common: Common,
    /// Codebook JSON to check (read only).
    #[arg(long)]
    pub codebook: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub build: BuildArgs,
    /// Use this codebook instead of constructing one.
    #[arg(long)]
    pub codebook: Option<PathBuf>,
    /// Message whose type-I error is estimated.
    #[arg(long, default_value_t = 0)]
    pub message: usize,
    /// Random ordered pairs for type-II estimates.
    #[arg(long, default_value_t = 8)]
    pub pairs: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BoundParams {
    /// Lapidoth auxiliary p in (0, 1).
    #[arg(long)]
    pub p: Option<f64>,
    /// Lapidoth auxiliary beta > 0.
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub snr: Option<f64>,
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long = "p-eps")]
    pub p_eps: Option<f64>,
    /// Average-to-peak ratio (alpha_regime) or peak scale (fading_no_csi).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Fading duty ratio in [0, 1].
    #[arg(long)]
    pub sigma: Option<f64>,
    /// Fading atoms as s:prob pairs, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub atoms: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub common: Common,
    /// Registry name: lapidoth_low_ub, wang_ub, martinez_ub, brady_lb, brady_ub, alpha_regime,
    /// aminian_peak_ub, fading_no_csi (aminian_covariance_ub, fading_perfect_csi are not implemented).
    #[arg(long)]
    pub name: String,
    #[command(flatten)]
    pub bound: BoundParams,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(subcommand)]
    pub kind: SweepKind,
}

#[derive(Debug, Subcommand)]
pub enum SweepKind {
    /// Achievable and converse rates over --n at one b.
    #[command(after_help = RATE_COLUMNS)]
    RateCurve(RateCurveArgs),
    /// One bound over a list of values of one parameter.
    #[command(after_help = SWEEP_BOUND_COLUMNS)]
    Bound(SweepBoundArgs),
    /// Type-I/type-II estimates over the grid --n × --b × --lambda.
    #[command(after_help = ERROR_COLUMNS)]
    Error(SweepErrorArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RateCurveArgs {
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    Lambda,
    PAve,
    PMax,
    P,
    Beta,
    Snr,
    Eps,
    PEps,
    Alpha,
    Sigma,
}

impl Axis {
    pub fn as_str(self) -> &'static str {
        match self {
            Axis::Lambda => "lambda",
            Axis::PAve => "p_ave",
            Axis::PMax => "p_max",
            Axis::P => "p",
            Axis::Beta => "beta",
            Axis::Snr => "snr",
            Axis::Eps => "eps",
            Axis::PEps => "p_eps",
            Axis::Alpha => "alpha",
            Axis::Sigma => "sigma",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SweepBoundArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub name: String,
    #[command(flatten)]
    pub bound: BoundParams,
    /// Parameter to sweep.
    #[arg(long, value_enum)]
    pub axis: Axis,
    /// Values of the swept parameter, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct SweepErrorArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub build: BuildArgs,
    #[arg(long, default_value_t = 0)]
    pub message: usize,
    #[arg(long, default_value_t = 8)]
    pub pairs: usize,
}
