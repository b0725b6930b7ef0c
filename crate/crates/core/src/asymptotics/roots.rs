use crate::error::{Error, Result};
use crate::real::Real;

/// Direction of a strictly monotone function on the search interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotone {
    Increasing,
    Decreasing,
}

const MAX_ITERATIONS: usize = 400;
/// Width below which bisection hands over to Newton.
const BISECTION_WIDTH: f64 = 1e-3;

/// Root of a strictly monotone `f` on `(lo, hi]`. `f` returns the value and
/// the derivative.
///
/// If `f(lo)` does not have the sign required for a bracket, `lo` is halved
/// towards `0` until it does (both callers have `f → ±∞` at `0⁺`). Then
/// bisection narrows the bracket to width `1e-3` and Newton steps finish the
/// job; any Newton step leaving the bracket is replaced by a bisection step.
/// Terminates once a step is below `tol` relative to the iterate.
pub fn bracketed_root<R: Real>(
    ctx: R::Context,
    f: impl Fn(&R) -> Result<(R, R)>,
    dir: Monotone,
    lo: R,
    hi: R,
    tol: &R,
) -> Result<R> {
    let zero = R::from_i64(ctx, 0);
    let half = R::from_f64(ctx, 0.5);
    // Normalise to an increasing function: g = ±f.
    let sign = |v: R| if dir == Monotone::Increasing { v } else { -v };
    let g = |u: &R| -> Result<(R, R)> {
        let (v, d) = f(u)?;
        Ok((sign(v), sign(d)))
    };

    let (mut lo, mut hi) = (lo, hi);
    if lo <= zero {
        lo = hi.clone() * half.clone();
    }
    let mut budget = MAX_ITERATIONS;
    while g(&lo)?.0 >= zero {
        lo = lo * half.clone();
        budget = budget
            .checked_sub(1)
            .ok_or(Error::NoConvergence(MAX_ITERATIONS))?;
    }
    if g(&hi)?.0 <= zero {
        if g(&hi)?.0 == zero {
            return Ok(hi);
        }
        return Err(Error::NoConvergence(0));
    }

    let width = R::from_f64(ctx, BISECTION_WIDTH);
    while hi.clone() - lo.clone() > width {
        let mid = (lo.clone() + hi.clone()) * half.clone();
        if g(&mid)?.0 < zero {
            lo = mid;
        } else {
            hi = mid;
        }
        budget = budget
            .checked_sub(1)
            .ok_or(Error::NoConvergence(MAX_ITERATIONS))?;
    }

    let mut u = (lo.clone() + hi.clone()) * half.clone();
    loop {
        let (v, d) = g(&u)?;
        if v == zero {
            return Ok(u);
        }
        if v < zero {
            lo = u.clone();
        } else {
            hi = u.clone();
        }
        let newton = u.clone() - v / d.clone();
        let next = if d > zero && newton > lo && newton < hi {
            newton
        } else {
            (lo.clone() + hi.clone()) * half.clone()
        };
        let step = (next.clone() - u.clone()).abs();
        u = next;
        if step <= tol.clone() * u.abs() {
            return Ok(u);
        }
        budget = budget
            .checked_sub(1)
            .ok_or(Error::NoConvergence(MAX_ITERATIONS))?;
    }
}
