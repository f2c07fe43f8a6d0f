//! Sampling experiments on the manifold family.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constructions::{build_manifold, random_params, random_permutation, ConstructionParams};

/// `H_k = 1 + 1/2 + … + 1/k`.
pub fn harmonic(k: usize) -> f64 {
    (1..=k).map(|i| 1.0 / i as f64).sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct VnRow {
    pub k: usize,
    pub n: usize,
    /// Vertex counts of `X(G)`, one per sample.
    pub vn: Vec<usize>,
    /// Cycles of `στ⁻¹`, one per sample.
    pub cycles: Vec<usize>,
    pub mean_vn: f64,
    pub median_vn: f64,
    pub p90_vn: f64,
    pub n_over_ln_n: f64,
    pub mean_cycles: f64,
    /// Expectation of the cycle count under the sampling distribution.
    pub expected_cycles: f64,
}

impl VnRow {
    pub fn mean_vn_over_n(&self) -> f64 {
        self.mean_vn / self.n as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatsReport {
    pub d: usize,
    pub seed: u64,
    pub samples: usize,
    pub rows: Vec<VnRow>,
}

impl StatsReport {
    /// Comma-separated rows with a header line.
    pub fn rows_csv(&self) -> String {
        let mut out = String::from("k,n,samples,mean_vn,median_vn,p90_vn,n_over_ln_n,mean_cycles,expected_cycles\n");
        for r in &self.rows {
            out += &format!(
                "{},{},{},{:.4},{:.1},{:.1},{:.4},{:.4},{:.4}\n",
                r.k,
                r.n,
                r.vn.len(),
                r.mean_vn,
                r.median_vn,
                r.p90_vn,
                r.n_over_ln_n,
                r.mean_cycles,
                r.expected_cycles
            );
        }
        out
    }
}

fn mean(xs: &[usize]) -> f64 {
    xs.iter().sum::<usize>() as f64 / xs.len().max(1) as f64
}

fn median(sorted: &[usize]) -> f64 {
    match sorted.len() {
        0 => 0.0,
        m if m % 2 == 1 => sorted[m / 2] as f64,
        m => (sorted[m / 2 - 1] + sorted[m / 2]) as f64 / 2.0,
    }
}

/// Nearest-rank 90th percentile.
fn p90(sorted: &[usize]) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = (9 * sorted.len()).div_ceil(10);
    sorted[rank.max(1) - 1] as f64
}

/// One stream per `k` so rows do not depend on which other `k` are run.
fn stream(seed: u64, k: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    rng
}

/// Samples `G(σ, τ)` for each `k` and records the number of vertices of
/// `X(G)`, i.e. the sum of `κ_J` over the `d`-subsets `J`.
///
/// Permutations are drawn uniformly among those the construction accepts;
/// for odd `d` these are the parity-preserving ones, where `στ⁻¹` is uniform
/// on odd and even indices separately and the expected cycle count is
/// `H_⌈k/2⌉ + H_⌊k/2⌋`.
pub fn vn_experiment(d: usize, ks: &[usize], samples: usize, seed: u64) -> StatsReport {
    let rows = ks
        .iter()
        .map(|&k| {
            let mut rng = stream(seed, k);
            let params: Vec<ConstructionParams> = (0..samples).map(|_| random_params(d, k, &mut rng)).collect();
            let pairs: Vec<(usize, usize)> = params
                .par_iter()
                .map(|p| {
                    let g = build_manifold(p).expect("sampled parameters are valid");
                    let vn = g.colours().subsets_of_size(d).map(|j| g.component_count(j)).sum();
                    (vn, p.sigma_tau_inv_cycles())
                })
                .collect();
            let (vn, cycles): (Vec<usize>, Vec<usize>) = pairs.into_iter().unzip();
            let mut sorted = vn.clone();
            sorted.sort_unstable();
            let n = 4 * k * d;
            let expected_cycles = if d % 2 == 1 {
                harmonic(k.div_ceil(2)) + harmonic(k / 2)
            } else {
                harmonic(k)
            };
            VnRow {
                k,
                n,
                mean_vn: mean(&vn),
                median_vn: median(&sorted),
                p90_vn: p90(&sorted),
                n_over_ln_n: n as f64 / (n as f64).ln(),
                mean_cycles: mean(&cycles),
                expected_cycles,
                vn,
                cycles,
            }
        })
        .collect();
    StatsReport {
        d,
        seed,
        samples,
        rows,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleStats {
    pub k: usize,
    pub samples: usize,
    pub mean: f64,
    /// `H_k`, the exact expectation.
    pub harmonic: f64,
}

/// Mean number of cycles of `στ⁻¹` for independent uniform `σ, τ`.
pub fn cycle_statistics(k: usize, samples: usize, seed: u64) -> CycleStats {
    let mut rng = stream(seed, k);
    let total: usize = (0..samples)
        .map(|_| {
            let p = ConstructionParams {
                d: 4,
                k,
                sigma: random_permutation(k, &mut rng),
                tau: random_permutation(k, &mut rng),
            };
            p.sigma_tau_inv_cycles()
        })
        .sum();
    CycleStats {
        k,
        samples,
        mean: total as f64 / samples.max(1) as f64,
        harmonic: harmonic(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_block_has_one_cycle() {
        let r = vn_experiment(3, &[1], 5, 0);
        assert!(r.rows[0].cycles.iter().all(|&c| c == 1));
        assert_eq!(r.rows[0].n, 12);
        assert_eq!(cycle_statistics(1, 10, 0).mean, 1.0);
    }

    #[test]
    fn percentiles() {
        assert_eq!(median(&[1, 2, 3, 4]), 2.5);
        assert_eq!(p90(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]), 9.0);
        assert_eq!(p90(&[7]), 7.0);
    }

    #[test]
    fn reproducible() {
        assert_eq!(vn_experiment(3, &[4, 6], 10, 3), vn_experiment(3, &[4, 6], 10, 3));
    }
}
