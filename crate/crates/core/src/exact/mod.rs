//! Exact enumeration of excursions, dispersed excursions and meanders by
//! length, refined by the number of `r`-ascents.
//!
//! The dynamic program walks over states `(altitude, run)` where `run` is the
//! length of the current maximal run of up steps clipped to `r + 1`. A run is
//! closed by a down step, by a dispersed horizontal step, or by the end of the
//! path, and it is an `r`-ascent iff the clipped length equals `r` at that
//! point. The payload carried by each state is abstracted by [`Weight`], so
//! the same sweep produces plain counts, full distributions, or the first two
//! moments.

mod brute;
mod weight;

pub use brute::{brute_force_distribution, brute_force_distribution_with_cap, BRUTE_FORCE_CAP};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::path::PathKind;
use crate::stepset::StepSet;

pub(crate) use weight::Weight;
use weight::{Counted, Distribution, MomentSums};

/// Largest possible number of `r`-ascents in a path of length `n`.
pub fn max_ascents(n: usize, r: usize) -> usize {
    (n + 1) / (r + 1)
}

/// Exact counts of paths of length `n` by number of `r`-ascents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AscentDistribution {
    pub n: usize,
    pub r: usize,
    pub kind: PathKind,
    /// `counts[k]` is the number of paths with exactly `k` ascents; the length
    /// is always `max_ascents(n, r) + 1`.
    pub counts: Vec<BigUint>,
}

impl AscentDistribution {
    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Mean and variance computed directly from the counts.
    pub fn moments(&self) -> Result<Moments> {
        let mut sums = MomentSums::default();
        for (k, c) in self.counts.iter().enumerate() {
            let k = BigUint::from(k);
            sums.count += c;
            sums.first += c * &k;
            sums.second += c * &k * &k;
        }
        sums.into_moments()
    }
}

/// Count, mean and variance of the number of ascents under the uniform model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moments {
    pub count: BigUint,
    pub mean: BigRational,
    pub variance: BigRational,
}

/// Knobs for the dynamic program.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Worker threads for the altitude sweep; `1` runs inline. Results are
    /// identical for every value.
    pub threads: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { threads: 1 }
    }
}

/// Number of paths of the given kind and length.
pub fn count(s: &StepSet, kind: PathKind, n: usize) -> Result<BigUint> {
    kind.check(s)?;
    let total = sweep::<Counted>(s, kind, n, 1, ExactOptions::default());
    Ok(total.0)
}

/// Full distribution of the number of `r`-ascents.
pub fn distribution(s: &StepSet, kind: PathKind, n: usize, r: usize) -> Result<AscentDistribution> {
    distribution_with(s, kind, n, r, ExactOptions::default())
}

pub fn distribution_with(
    s: &StepSet,
    kind: PathKind,
    n: usize,
    r: usize,
    opts: ExactOptions,
) -> Result<AscentDistribution> {
    check_args(s, kind, r)?;
    let raw = sweep::<Distribution>(s, kind, n, r, opts);
    Ok(AscentDistribution {
        n,
        r,
        kind,
        counts: raw.into_dense(max_ascents(n, r) + 1),
    })
}

/// Count, exact mean and exact variance of the number of `r`-ascents,
/// propagating `(count, Σk, Σk²)` through the sweep.
pub fn moments(s: &StepSet, kind: PathKind, n: usize, r: usize) -> Result<Moments> {
    moments_with(s, kind, n, r, ExactOptions::default())
}

pub fn moments_with(
    s: &StepSet,
    kind: PathKind,
    n: usize,
    r: usize,
    opts: ExactOptions,
) -> Result<Moments> {
    check_args(s, kind, r)?;
    sweep::<MomentSums>(s, kind, n, r, opts).into_moments()
}

fn check_args(s: &StepSet, kind: PathKind, r: usize) -> Result<()> {
    kind.check(s)?;
    if r == 0 {
        return Err(Error::ZeroAscentLength);
    }
    Ok(())
}

/// Runs the `(altitude, run)` sweep and returns the aggregated weight of all
/// complete paths of length `n`.
fn sweep<W: Weight>(s: &StepSet, kind: PathKind, n: usize, r: usize, opts: ExactOptions) -> W {
    let max_up = s.max_up() as usize;
    let bounded = kind.returns_to_zero();

    let mut start = vec![W::zero(); r + 2];
    start[0] = W::unit();
    let mut layer: Vec<Vec<W>> = vec![start];

    let pool = (opts.threads > 1).then(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool")
    });

    for i in 0..n {
        let remaining = n - i - 1;
        let mut top = (i + 1) * max_up;
        if bounded {
            top = top.min(remaining);
        }
        let cur = &layer;
        let row = |a: usize| next_row(s, kind, r, cur, a);
        layer = match &pool {
            Some(pool) => pool.install(|| (0..=top).into_par_iter().map(row).collect()),
            None => (0..=top).map(row).collect(),
        };
    }

    let mut total = W::zero();
    let last = if bounded { 0 } else { layer.len() - 1 };
    for cells in layer.iter().take(last + 1) {
        for (u, w) in cells.iter().enumerate() {
            if u == r {
                total.add_ascent(w);
            } else {
                total.add(w);
            }
        }
    }
    total
}

/// Weights of the states at altitude `a` after one more step, pulled from
/// their predecessors in `cur`.
fn next_row<W: Weight>(s: &StepSet, kind: PathKind, r: usize, cur: &[Vec<W>], a: usize) -> Vec<W> {
    let mut row = vec![W::zero(); r + 2];

    // Down step from a + 1 closes the run.
    if let Some(prev) = cur.get(a + 1) {
        close_runs(&mut row[0], prev, r);
    }
    // Dispersed horizontal step on altitude 0 closes the run too.
    if kind == PathKind::Dispersed && a == 0 {
        close_runs(&mut row[0], &cur[0], r);
    }
    for &b in s.ups() {
        let b = b as usize;
        if b > a {
            break;
        }
        let Some(prev) = cur.get(a - b) else { continue };
        for u in 1..=r {
            row[u].add(&prev[u - 1]);
        }
        row[r + 1].add(&prev[r]);
        row[r + 1].add(&prev[r + 1]);
    }
    row
}

fn close_runs<W: Weight>(target: &mut W, prev: &[W], r: usize) {
    for (u, w) in prev.iter().enumerate() {
        if u == r {
            target.add_ascent(w);
        } else {
            target.add(w);
        }
    }
}

impl MomentSums {
    fn into_moments(self) -> Result<Moments> {
        if self.count.is_zero() {
            return Err(Error::EmptyFamily);
        }
        let c = BigInt::from(self.count.clone());
        let s1 = BigInt::from(self.first);
        let s2 = BigInt::from(self.second);
        let mean = BigRational::new(s1.clone(), c.clone());
        // Var = (c Σk² - (Σk)²) / c²
        let variance = BigRational::new(&c * &s2 - &s1 * &s1, &c * &c);
        Ok(Moments {
            count: self.count,
            mean,
            variance,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn set(s: &str) -> StepSet {
        s.parse().unwrap()
    }

    fn counts(d: &AscentDistribution) -> Vec<u64> {
        d.counts.iter().map(|c| c.to_u64().unwrap()).collect()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            count(&set("-1,1"), PathKind::Excursion, 6).unwrap(),
            5u32.into()
        );
        assert_eq!(
            count(&set("-1,1"), PathKind::Excursion, 5).unwrap(),
            0u32.into()
        );
        assert_eq!(
            count(&set("-1,2"), PathKind::Dispersed, 4).unwrap(),
            3u32.into()
        );
        assert_eq!(
            count(&set("-1,1"), PathKind::Meander, 4).unwrap(),
            6u32.into()
        );
        for kind in PathKind::ALL {
            assert_eq!(count(&set("-1,1,3"), kind, 0).unwrap(), 1u32.into());
        }
        assert_eq!(
            count(&set("-1,0,1"), PathKind::Dispersed, 3),
            Err(Error::DispersedNeedsNoZeroStep)
        );
    }

    #[test]
    fn distribution_examples() {
        let d = distribution(&set("-1,1"), PathKind::Excursion, 6, 1).unwrap();
        assert_eq!(counts(&d), [1, 3, 0, 1]);
        let d = distribution(&set("-1,1"), PathKind::Meander, 2, 1).unwrap();
        assert_eq!(counts(&d), [1, 1]);
        for kind in PathKind::ALL {
            let d = distribution(&set("-1,2"), kind, 0, 3).unwrap();
            assert_eq!(counts(&d), [1]);
        }
        assert_eq!(
            distribution(&set("-1,1"), PathKind::Meander, 2, 0),
            Err(Error::ZeroAscentLength)
        );
    }

    #[test]
    fn horizontal_steps_of_the_set_count_as_up_steps() {
        // The excursion "0" of length 1 is a single 1-ascent.
        let d = distribution(&set("-1,0,1"), PathKind::Excursion, 1, 1).unwrap();
        assert_eq!(counts(&d), [0, 1]);
    }

    #[test]
    fn moments_examples() {
        let m = moments(&set("-1,1"), PathKind::Excursion, 6, 1).unwrap();
        assert_eq!(m.count, 5u32.into());
        assert_eq!(m.mean, q(6, 5));
        assert_eq!(m.variance, q(24, 25));
        let m = moments(&set("-1,0,2"), PathKind::Meander, 0, 2).unwrap();
        assert_eq!(
            (m.count, m.mean, m.variance),
            (1u32.into(), q(0, 1), q(0, 1))
        );
        assert_eq!(
            moments(&set("-1,1"), PathKind::Excursion, 7, 1),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn moment_sweep_agrees_with_distribution() {
        for s in ["-1,1", "-1,0,2", "-1,1,3"] {
            for kind in PathKind::ALL {
                if !kind.applies_to(&set(s)) {
                    continue;
                }
                for r in 1..=3 {
                    let n = 18;
                    let d = distribution(&set(s), kind, n, r).unwrap();
                    let m = moments(&set(s), kind, n, r);
                    match d.moments() {
                        Ok(dm) => assert_eq!(dm, m.unwrap()),
                        Err(e) => assert_eq!(Err(e), m),
                    }
                }
            }
        }
    }

    #[test]
    fn threaded_sweep_is_identical() {
        let s = set("-1,0,1,2,3");
        let opts = ExactOptions { threads: 4 };
        for kind in [PathKind::Excursion, PathKind::Meander] {
            assert_eq!(
                distribution(&s, kind, 30, 2).unwrap(),
                distribution_with(&s, kind, 30, 2, opts).unwrap()
            );
            assert_eq!(
                moments(&s, kind, 40, 1).unwrap(),
                moments_with(&s, kind, 40, 1, opts).unwrap()
            );
        }
    }

    #[test]
    fn period_gate() {
        for s in ["-1,1", "-1,2", "-1,1,3", "-1,0,2"] {
            let s = set(s);
            let p = s.period() as usize;
            for n in 1..=20 {
                let zero = count(&s, PathKind::Excursion, n).unwrap().is_zero();
                assert_eq!(zero, n % p != 0, "{s} n={n}");
            }
        }
    }

    #[test]
    fn support_bound_and_marginal() {
        let s = set("-1,0,1,2,3");
        for kind in [PathKind::Excursion, PathKind::Meander] {
            for n in 0..=14 {
                for r in 1..=3 {
                    let d = distribution(&s, kind, n, r).unwrap();
                    assert_eq!(d.counts.len(), max_ascents(n, r) + 1);
                    assert_eq!(d.total(), count(&s, kind, n).unwrap());
                }
            }
        }
    }
}
