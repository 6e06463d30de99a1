//! Codebook constructions.

use rand::Rng;

use super::{distance_sq, Codebook, Construction, PackingParams};
use crate::channel::Codeword;
use crate::error::{Error, Result};
use crate::rng::{experiment, stream};

/// Consecutive rejections treated as saturation.
pub const DEFAULT_REJECTION_BUDGET: u64 = 100_000;
pub const DEFAULT_L_CAP: usize = 4096;

/// Outcome of the random saturated packing.
#[derive(Debug, Clone)]
pub struct RandomPacking {
    pub codebook: Codebook,
    /// True when the rejection budget ran out before `l_cap` was reached.
    pub saturated: bool,
    pub candidates_drawn: u64,
}

/// Random sequential packing with the default rejection budget.
pub fn construct_saturated_random(params: &PackingParams, l_cap: usize, seed: u64) -> Result<Codebook> {
    saturated_random(params, l_cap, DEFAULT_REJECTION_BUDGET, seed).map(|p| p.codebook)
}

/// Draws uniform centres in `(0, A]ⁿ` and keeps each one whose distance to
/// every accepted centre is at least `2·r0`. Stops after `l_cap`
/// acceptances or `budget` consecutive rejections.
///
/// When `2·r0` exceeds the cube diameter no second centre can fit; the
/// single first draw is returned and marked saturated.
pub fn saturated_random(
    params: &PackingParams,
    l_cap: usize,
    budget: u64,
    seed: u64,
) -> Result<RandomPacking> {
    if l_cap == 0 {
        return Err(crate::error::invalid("l_cap", 0.0, "must be at least 1"));
    }
    let n = params.n.as_usize();
    let a = params.a;
    let min_sq = 4.0 * params.r0 * params.r0;
    let mut rng = stream(seed, experiment::CODEBOOK, 0);
    let draw = |rng: &mut crate::rng::StreamRng| -> Vec<f64> {
        (0..n).map(|_| a * (1.0 - rng.random::<f64>())).collect()
    };

    let mut centres: Vec<Vec<f64>> = vec![draw(&mut rng)];
    let mut drawn = 1u64;
    let mut saturated = 2.0 * params.r0 > params.cube_diameter();
    let mut rejections = 0u64;
    while !saturated && centres.len() < l_cap {
        let candidate = draw(&mut rng);
        drawn += 1;
        if centres.iter().all(|c| distance_sq(c, &candidate) >= min_sq) {
            centres.push(candidate);
            rejections = 0;
        } else {
            rejections += 1;
            if rejections >= budget {
                saturated = true;
            }
        }
    }

    // Coordinates are ≤ A ≤ P_ave, so the average constraint always holds.
    let n_f = n as f64;
    centres.retain(|c| c.iter().sum::<f64>() / n_f <= params.p_ave);
    let words = centres
        .into_iter()
        .map(Codeword::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(RandomPacking {
        codebook: Codebook::new(*params, words, Construction::SaturatedRandom, seed)?,
        saturated,
        candidates_drawn: drawn,
    })
}

fn unpackable(params: &PackingParams, reason: &'static str) -> Error {
    Error::UnpackableGeometry {
        r0: params.r0,
        edge: params.a,
        diameter: params.cube_diameter(),
        reason,
    }
}

/// Enumerates `index` in row-major order over `levels^n` (last coordinate fastest).
fn grid_word(mut index: u64, levels: &[f64], slots: usize) -> Vec<f64> {
    let q = levels.len() as u64;
    let mut digits = vec![0usize; slots];
    for d in digits.iter_mut().rev() {
        *d = (index % q) as usize;
        index /= q;
    }
    digits.into_iter().map(|d| levels[d]).collect()
}

fn grid_size(q: usize, slots: usize, l_cap: usize) -> usize {
    let mut total: usize = 1;
    for _ in 0..slots {
        total = total.saturating_mul(q);
        if total >= l_cap {
            return l_cap;
        }
    }
    total
}

/// Cubic grid `{r0·(2k+1) ≤ A}ⁿ`, row-major, truncated to `l_cap` words.
///
/// Axis neighbours are exactly `2·r0` apart.
pub fn construct_lattice(params: &PackingParams, l_cap: usize) -> Result<Codebook> {
    let (a, r0) = (params.a, params.r0);
    if r0 > a {
        return Err(unpackable(params, "no grid point r0·(2k+1) lies in (0, A]"));
    }
    let per_axis = ((a / r0 - 1.0) / 2.0 + 1e-9).floor() as usize + 1;
    if per_axis < 2 && l_cap > 1 {
        return Err(unpackable(params, "lattice needs 2·r0 < A for more than one word"));
    }
    let levels: Vec<f64> = (0..per_axis)
        .map(|k| (r0 * (2 * k + 1) as f64).min(a))
        .collect();
    let n = params.n.as_usize();
    let count = grid_size(per_axis, n, l_cap);
    let words = (0..count as u64)
        .map(|i| Codeword::new(grid_word(i, &levels, n)))
        .collect::<Result<Vec<_>>>()?;
    Codebook::new(*params, words, Construction::Lattice, 0)
}

/// Grid over coordinate blocks, for radii where `r0 ≥ A/2`.
///
/// The `n` slots are split into `m` blocks of `k = ⌊4r0²/A²⌋ + 1` slots.
/// A word is constant on each block and takes a level from
/// `{A − j·s : j ≥ 0, A − j·s > 0}` with `s = 2·r0/√k < A`; slots past the
/// last full block are held at `A`. Words differing by one step in one block
/// are exactly `s·√k = 2·r0` apart.
pub fn construct_block_lattice(params: &PackingParams, l_cap: usize) -> Result<Codebook> {
    let n = params.n.as_usize();
    let (a, r0) = (params.a, params.r0);
    let k = (4.0 * r0 * r0 / (a * a)).floor() as usize + 1;
    let blocks = n / k;
    if blocks == 0 {
        if l_cap > 1 {
            return Err(unpackable(params, "a block of ⌊4r0²/A²⌋+1 slots exceeds n"));
        }
        let word = Codeword::new(vec![a; n])?;
        return Codebook::new(*params, vec![word], Construction::BlockLattice, 0);
    }
    let step = 2.0 * r0 / (k as f64).sqrt();
    let levels: Vec<f64> = (0..)
        .map(|j| a - j as f64 * step)
        .take_while(|&v| v > 0.0)
        .collect();
    let count = grid_size(levels.len(), blocks, l_cap);
    let words = (0..count as u64)
        .map(|i| {
            let block_levels = grid_word(i, &levels, blocks);
            let mut w = Vec::with_capacity(n);
            for level in block_levels {
                w.extend(std::iter::repeat_n(level, k));
            }
            w.resize(n, a);
            Codeword::new(w)
        })
        .collect::<Result<Vec<_>>>()?;
    Codebook::new(*params, words, Construction::BlockLattice, 0)
}

/// Constant-sum grid over coordinate blocks.
///
/// The `n` slots are split into `m` blocks of `k = ⌊2r0²/A²⌋ + 1` slots; each
/// word lowers exactly `⌊m/2⌋` blocks from `A` to `A − s`, `s = r0·√(2/k) < A`,
/// enumerating the lowered subsets in lexicographic order. Every word has the
/// same letter sum, so for any ordered pair the decoder statistic has mean
/// `‖u_i − u_j‖²/n` with no first-order term. Two distinct subsets differ in
/// at least two blocks, giving distance `≥ s·√(2k) = 2·r0`.
pub fn construct_balanced_block_lattice(params: &PackingParams, l_cap: usize) -> Result<Codebook> {
    let n = params.n.as_usize();
    let (a, r0) = (params.a, params.r0);
    let k = (2.0 * r0 * r0 / (a * a)).floor() as usize + 1;
    let blocks = n / k;
    if blocks < 2 {
        if l_cap > 1 {
            return Err(unpackable(params, "fewer than two blocks of ⌊2r0²/A²⌋+1 slots fit in n"));
        }
        let word = Codeword::new(vec![a; n])?;
        return Codebook::new(*params, vec![word], Construction::BalancedBlockLattice, 0);
    }
    let low = a - r0 * (2.0 / k as f64).sqrt();
    let lowered = blocks / 2;
    let mut subset: Vec<usize> = (0..lowered).collect();
    let mut words = Vec::new();
    while words.len() < l_cap {
        let mut w = vec![a; n];
        for &blk in &subset {
            w[blk * k..(blk + 1) * k].fill(low);
        }
        words.push(Codeword::new(w)?);
        // next combination in lexicographic order
        let Some(pos) = (0..lowered).rev().find(|&p| subset[p] < blocks - lowered + p) else {
            break;
        };
        subset[pos] += 1;
        for q in pos + 1..lowered {
            subset[q] = subset[q - 1] + 1;
        }
    }
    Codebook::new(*params, words, Construction::BalancedBlockLattice, 0)
}
