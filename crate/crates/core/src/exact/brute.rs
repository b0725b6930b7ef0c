//! Exhaustive enumeration oracle, independent of the state-space sweep.
//!
//! Every step sequence over the alphabet (the step set, plus the horizontal
//! marker for dispersed excursions) is generated depth first. Prefixes that
//! already went below zero, or excursion prefixes that can no longer return
//! to zero, are cut since none of their extensions survives the final filter.
//! Ascents are counted on the explicit sequence with [`count_ascents`].

use num_bigint::BigUint;
use num_traits::Zero;

use super::{max_ascents, AscentDistribution};
use crate::error::{Error, Result};
use crate::path::{count_ascents, PathKind, Step};
use crate::stepset::StepSet;

/// Default length cap of the brute force oracle.
pub const BRUTE_FORCE_CAP: usize = 14;

pub fn brute_force_distribution(
    s: &StepSet,
    kind: PathKind,
    n: usize,
    r: usize,
) -> Result<AscentDistribution> {
    brute_force_distribution_with_cap(s, kind, n, r, BRUTE_FORCE_CAP)
}

pub fn brute_force_distribution_with_cap(
    s: &StepSet,
    kind: PathKind,
    n: usize,
    r: usize,
    cap: usize,
) -> Result<AscentDistribution> {
    kind.check(s)?;
    if r == 0 {
        return Err(Error::ZeroAscentLength);
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut alphabet: Vec<Step> = std::iter::once(Step::Down)
        .chain(s.ups().iter().map(|&b| Step::Up(b)))
        .collect();
    if kind == PathKind::Dispersed {
        alphabet.push(Step::Flat);
    }

    let mut counts = vec![BigUint::zero(); max_ascents(n, r) + 1];
    let mut path = Vec::with_capacity(n);
    let mut tally = vec![0u64; counts.len()];
    visit(&alphabet, kind, n, r, 0, &mut path, &mut tally);
    for (c, t) in counts.iter_mut().zip(tally) {
        *c = BigUint::from(t);
    }
    Ok(AscentDistribution { n, r, kind, counts })
}

fn visit(
    alphabet: &[Step],
    kind: PathKind,
    n: usize,
    r: usize,
    altitude: i64,
    path: &mut Vec<Step>,
    tally: &mut [u64],
) {
    if path.len() == n {
        if kind.returns_to_zero() && altitude != 0 {
            return;
        }
        tally[count_ascents(path, r)] += 1;
        return;
    }
    let remaining = (n - path.len() - 1) as i64;
    for &step in alphabet {
        if step == Step::Flat && altitude != 0 {
            continue;
        }
        let next = altitude + step.height();
        if next < 0 || (kind.returns_to_zero() && next > remaining) {
            continue;
        }
        path.push(step);
        visit(alphabet, kind, n, r, next, path, tally);
        path.pop();
    }
}
