//! Exact uniform sampling of paths, used for Monte Carlo checks of the
//! limit laws.
//!
//! A [`Sampler`] holds backward completion counts `W(rem, a)`, the number of
//! ways to finish a path from altitude `a` with `rem` steps left. A path is
//! drawn by picking one integer `X` uniformly below the family size and
//! decoding it step by step: at each position the admissible steps are
//! visited in a fixed order and `X` is reduced by the completion counts of the
//! skipped ones. Every path corresponds to exactly one `X`, so the draw is
//! uniform with no floating point involved.
//!
//! The generator is xoshiro256\*\*. Trial `i` of a batch with base seed `s`
//! uses the seed `mix(s, i) = splitmix64(s ^ splitmix64(i))`, so batches are
//! reproducible regardless of thread count.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use rayon::prelude::*;
use statrs::function::erf::erfc;

use crate::asymptotics::{meander_constants, structural_constants};
use crate::error::{Error, Result};
use crate::path::{LatticePath, PathKind, Step};
use crate::stepset::StepSet;

/// Fewest trials accepted by [`normality_check`].
pub const MIN_NORMALITY_TRIALS: usize = 100;

/// splitmix64 finaliser.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `i` in a batch with base seed `seed`.
pub fn trial_seed(seed: u64, i: u64) -> u64 {
    splitmix64(seed ^ splitmix64(i))
}

/// Uniform integer in `[0, bound)` by rejection on the bit length of
/// `bound`; needs fewer than two attempts on average.
pub fn uniform_below<G: Rng>(rng: &mut G, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "empty range");
    let bits = bound.bits();
    let words = bits.div_ceil(64) as usize;
    let top_bits = bits - 64 * (words as u64 - 1);
    let mask = if top_bits == 64 {
        u64::MAX
    } else {
        (1u64 << top_bits) - 1
    };
    loop {
        let mut digits: Vec<u64> = (0..words).map(|_| rng.next_u64()).collect();
        digits[words - 1] &= mask;
        let x = BigUint::from_slice(
            &digits
                .iter()
                .flat_map(|d| [*d as u32, (*d >> 32) as u32])
                .collect::<Vec<_>>(),
        );
        if &x < bound {
            return x;
        }
    }
}

/// Completion table for one `(S, kind, n)`.
#[derive(Debug, Clone)]
pub struct Sampler {
    steps: Vec<Step>,
    kind: PathKind,
    n: usize,
    /// `table[rem][a]` for the stored altitudes: `a <= rem` when the path has
    /// to return to zero, `a < rem` for meanders.
    table: Vec<Vec<BigUint>>,
    /// `|S|^rem`, the completion count of a meander at altitude `a >= rem`.
    free: Vec<BigUint>,
    zero: BigUint,
}

impl Sampler {
    pub fn new(s: &StepSet, kind: PathKind, n: usize) -> Result<Sampler> {
        kind.check(s)?;
        let mut steps: Vec<Step> = std::iter::once(Step::Down)
            .chain(s.ups().iter().map(|&b| Step::Up(b)))
            .collect();
        if kind == PathKind::Dispersed {
            steps.push(Step::Flat);
        }
        let size = BigUint::from(s.size());
        let mut free = vec![BigUint::one()];
        for rem in 1..=n {
            let next = &free[rem - 1] * &size;
            free.push(next);
        }
        let mut sampler = Sampler {
            steps,
            kind,
            n,
            table: Vec::with_capacity(n + 1),
            free,
            zero: BigUint::zero(),
        };
        for rem in 0..=n {
            let stored = if kind.returns_to_zero() { rem + 1 } else { rem };
            let row: Vec<BigUint> = (0..stored)
                .map(|a| {
                    if rem == 0 {
                        return if a == 0 {
                            BigUint::one()
                        } else {
                            BigUint::zero()
                        };
                    }
                    let mut w = BigUint::zero();
                    for &step in &sampler.steps {
                        if let Some(next) = sampler.target(a, step) {
                            w += sampler.completions(rem - 1, next);
                        }
                    }
                    w
                })
                .collect();
            sampler.table.push(row);
        }
        if sampler.total().is_zero() {
            return Err(Error::EmptyFamily);
        }
        Ok(sampler)
    }

    /// Altitude after `step` from `a`, if the step is admissible there.
    fn target(&self, a: usize, step: Step) -> Option<usize> {
        match step {
            Step::Down => a.checked_sub(1),
            Step::Up(b) => Some(a + b as usize),
            Step::Flat => (a == 0).then_some(0),
        }
    }

    fn completions(&self, rem: usize, a: usize) -> &BigUint {
        match self.table[rem].get(a) {
            Some(w) => w,
            None if self.kind.returns_to_zero() => &self.zero,
            None => &self.free[rem],
        }
    }

    /// Size of the family.
    pub fn total(&self) -> &BigUint {
        self.completions(self.n, 0)
    }

    /// The path with index `x` in `0..total()`, in the order induced by the
    /// step order `-1 < ups < H`.
    pub fn unrank(&self, mut x: BigUint) -> LatticePath {
        assert!(&x < self.total(), "rank out of range");
        let mut a = 0usize;
        let mut out = Vec::with_capacity(self.n);
        for rem in (0..self.n).rev() {
            for &step in &self.steps {
                let Some(next) = self.target(a, step) else {
                    continue;
                };
                let w = self.completions(rem, next);
                if x < *w {
                    out.push(step);
                    a = next;
                    break;
                }
                x -= w;
            }
        }
        LatticePath {
            kind: self.kind,
            steps: out,
        }
    }

    pub fn sample<G: Rng>(&self, rng: &mut G) -> LatticePath {
        self.unrank(uniform_below(rng, self.total()))
    }

    pub fn sample_seeded(&self, seed: u64) -> LatticePath {
        self.sample(&mut Xoshiro256StarStar::seed_from_u64(seed))
    }

    /// Ascent counts of `trials` independent draws, trial `i` seeded with
    /// [`trial_seed`]`(seed, i)`.
    pub fn ascent_counts(&self, r: usize, trials: usize, seed: u64) -> Vec<usize> {
        (0..trials as u64)
            .into_par_iter()
            .map(|i| self.sample_seeded(trial_seed(seed, i)).ascents(r))
            .collect()
    }
}

/// Uniformly random path of the family, determined by `seed`.
pub fn sample_path(s: &StepSet, kind: PathKind, n: usize, seed: u64) -> Result<LatticePath> {
    Ok(Sampler::new(s, kind, n)?.sample_seeded(seed))
}

/// Sample mean and unbiased sample variance of the number of `r`-ascents.
pub fn empirical_moments(
    s: &StepSet,
    kind: PathKind,
    n: usize,
    r: usize,
    trials: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    if r == 0 {
        return Err(Error::ZeroAscentLength);
    }
    let counts = Sampler::new(s, kind, n)?.ascent_counts(r, trials, seed);
    Ok(mean_variance(&counts))
}

fn mean_variance(xs: &[usize]) -> (f64, f64) {
    let m = xs.len() as f64;
    let mean = xs.iter().map(|&x| x as f64).sum::<f64>() / m;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = xs.iter().map(|&x| (x as f64 - mean).powi(2)).sum();
    (mean, ss / (m - 1.0))
}

/// Standard normal distribution function.
pub fn std_normal_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// Kolmogorov–Smirnov distance between the empirical distribution of
/// `samples` and a continuous CDF. Ties are handled by comparing both sides
/// of every jump.
pub fn ks_statistic(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let mut xs = samples.to_vec();
    xs.sort_by(f64::total_cmp);
    let m = xs.len() as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < xs.len() {
        let mut j = i;
        while j < xs.len() && xs[j] == xs[i] {
            j += 1;
        }
        let f = cdf(xs[i]);
        d = d
            .max((f - i as f64 / m).abs())
            .max((j as f64 / m - f).abs());
        i = j;
    }
    d
}

/// KS distance of `(M_{n,r} - μn) / √(σ²n)` from the standard normal, over
/// `trials` sampled meanders, with `μ` and `σ²` from the meander constants.
pub fn normality_check(s: &StepSet, r: usize, n: usize, trials: usize, seed: u64) -> Result<f64> {
    let k = structural_constants::<f64>(s, ())?;
    let m = meander_constants(s, &k, (), r)?;
    normality_check_with(s, r, n, trials, seed, m.mu, m.sigma2)
}

/// [`normality_check`] with caller supplied `μ` and `σ²`, e.g. for the
/// `τ = 1` step sets.
pub fn normality_check_with(
    s: &StepSet,
    r: usize,
    n: usize,
    trials: usize,
    seed: u64,
    mu: f64,
    sigma2: f64,
) -> Result<f64> {
    if trials < MIN_NORMALITY_TRIALS {
        return Err(Error::TooFewTrials {
            min: MIN_NORMALITY_TRIALS,
            got: trials,
        });
    }
    if r == 0 {
        return Err(Error::ZeroAscentLength);
    }
    if n == 0 || sigma2 <= 0.0 {
        return Err(Error::NonPositiveArgument);
    }
    let counts = Sampler::new(s, PathKind::Meander, n)?.ascent_counts(r, trials, seed);
    let nf = n as f64;
    let scale = (sigma2 * nf).sqrt();
    let z: Vec<f64> = counts
        .iter()
        .map(|&c| (c as f64 - mu * nf) / scale)
        .collect();
    Ok(ks_statistic(&z, std_normal_cdf))
}

/// Number of draws that hit each rank, for goodness-of-fit tests on small
/// families.
pub fn rank_histogram(sampler: &Sampler, trials: usize, seed: u64) -> Vec<u64> {
    let total = sampler.total().to_usize().expect("small family");
    let mut hist = vec![0u64; total];
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    for _ in 0..trials {
        let x = uniform_below(&mut rng, sampler.total());
        hist[x.to_usize().expect("small family")] += 1;
    }
    hist
}
