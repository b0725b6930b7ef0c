//! Łukasiewicz step sets: `{-1} ∪ ups` with every up step `b >= 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::real::Real;

/// A validated step set. The down step `-1` is implicit and never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepSet {
    ups: Vec<u32>,
}

impl StepSet {
    /// Builds a step set from any list of integers containing `-1`.
    /// Duplicates are collapsed and the up steps sorted.
    pub fn new(steps: &[i64]) -> Result<StepSet> {
        let mut has_down = false;
        let mut ups = Vec::new();
        for &s in steps {
            match s {
                -1 => has_down = true,
                s if s < -1 => return Err(Error::IllegalStep(s)),
                s => ups.push(u32::try_from(s).map_err(|_| Error::IllegalStep(s))?),
            }
        }
        if !has_down {
            return Err(Error::MissingDownStep);
        }
        ups.sort_unstable();
        ups.dedup();
        match ups.as_slice() {
            [] => Err(Error::EmptyUps),
            [0] => Err(Error::DegenerateSet),
            _ => Ok(StepSet { ups }),
        }
    }

    /// `{-1, 1}`.
    pub fn dyck() -> StepSet {
        StepSet { ups: vec![1] }
    }

    /// `{-1, 0, 1}`.
    pub fn motzkin() -> StepSet {
        StepSet { ups: vec![0, 1] }
    }

    /// The non-negative steps, strictly increasing.
    pub fn ups(&self) -> &[u32] {
        &self.ups
    }

    pub fn max_up(&self) -> u32 {
        *self.ups.last().expect("non-empty by construction")
    }

    /// Number of steps including `-1`, i.e. `S(1)`.
    pub fn size(&self) -> usize {
        self.ups.len() + 1
    }

    pub fn has_zero_step(&self) -> bool {
        self.ups[0] == 0
    }

    pub fn is_dyck(&self) -> bool {
        self.ups == [1]
    }

    pub fn is_motzkin(&self) -> bool {
        self.ups == [0, 1]
    }

    /// Largest `p` such that `u S(u)` is a polynomial in `u^p`.
    pub fn period(&self) -> u32 {
        self.ups.iter().fold(0u32, |g, &b| g.gcd(&(b + 1)))
    }

    /// `S'(1) = (sum of up steps) - 1`.
    pub fn drift(&self) -> i64 {
        self.ups.iter().map(|&b| i64::from(b)).sum::<i64>() - 1
    }

    /// True exactly for `{-1, 1}` and `{-1, 0, 1}`, the two sets whose
    /// structural constant equals 1.
    pub fn is_tau_one(&self) -> bool {
        self.is_dyck() || self.is_motzkin()
    }

    fn terms(&self) -> impl Iterator<Item = i64> + '_ {
        std::iter::once(-1).chain(self.ups.iter().map(|&b| i64::from(b)))
    }

    /// `order`-th derivative of `S(u) = Σ u^s` at `u > 0`.
    pub fn eval<R: Real>(&self, ctx: R::Context, u: &R, order: u32) -> Result<R> {
        if order > 4 {
            return Err(Error::UnsupportedOrder(order));
        }
        let zero = R::from_i64(ctx, 0);
        if *u <= zero {
            return Err(Error::NonPositiveArgument);
        }
        let mut acc = zero;
        for s in self.terms() {
            let coeff = falling_factorial(s, order);
            if coeff != 0 {
                acc = acc + R::from_i64(ctx, coeff) * u.powi(s - i64::from(order));
            }
        }
        Ok(acc)
    }

    /// Same as [`StepSet::eval`] in exact rational arithmetic.
    pub fn eval_exact(&self, u: &BigRational, order: u32) -> Result<BigRational> {
        if order > 4 {
            return Err(Error::UnsupportedOrder(order));
        }
        if !u.is_positive() {
            return Err(Error::NonPositiveArgument);
        }
        let mut acc = BigRational::zero();
        for s in self.terms() {
            let coeff = falling_factorial(s, order);
            if coeff != 0 {
                let e = s - i64::from(order);
                let pow = if e >= 0 {
                    num_traits::pow(u.clone(), e as usize)
                } else {
                    BigRational::one() / num_traits::pow(u.clone(), (-e) as usize)
                };
                acc += BigRational::from_integer(BigInt::from(coeff)) * pow;
            }
        }
        Ok(acc)
    }
}

/// `s (s-1) ... (s-k+1)`.
fn falling_factorial(s: i64, k: u32) -> i64 {
    (0..i64::from(k)).map(|j| s - j).product()
}

impl fmt::Display for StepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("-1")?;
        for b in &self.ups {
            write!(f, ",{b}")?;
        }
        Ok(())
    }
}

impl FromStr for StepSet {
    type Err = Error;

    /// Comma separated integers in any order, e.g. `"2,-1,0"`.
    fn from_str(s: &str) -> Result<StepSet> {
        let steps = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::StepSetSyntax(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        StepSet::new(&steps)
    }
}
