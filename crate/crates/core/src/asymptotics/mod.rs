//! Numeric evaluation of the structural constants and of the asymptotic
//! expansions for counts, means and variances of `r`-ascents.
//!
//! Everything is generic over [`Real`], so the same code runs in `f64` or in
//! [`crate::BigFloat`] of any precision. The two step sets with `τ = 1`,
//! `{-1, 1}` and `{-1, 0, 1}`, get dedicated expansions wherever the general
//! formula does not apply.

mod dispersed;
mod excursion;
mod meander;
mod report;
mod roots;

pub use dispersed::{dispersed_count_asym, dispersed_expectation_asym, dispersed_mu};
pub use excursion::{
    excursion_c0, excursion_count_asym, excursion_expectation_asym, excursion_mu, excursion_sigma2,
    excursion_variance_asym,
};
pub use meander::{
    meander_constants, meander_count_asym, meander_expectation_asym, meander_variance_asym,
    MeanderConstants,
};
pub use report::{
    asymptotic_value, compare_report, fit_exponent, CompareReport, CompareRow, Quantity,
};
pub use roots::{bracketed_root, Monotone};

use crate::error::Result;
use crate::real::Real;
use crate::stepset::StepSet;

/// Constants of the square-root singularity of `V(z)` at `z = ρ`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructuralConstants<R> {
    /// Positive root of `S'(u) = 0`.
    pub tau: R,
    /// `1 / S(τ)`, radius of convergence of `V`.
    pub rho: R,
    /// `τ S(τ)`.
    pub c: R,
    pub period: u32,
    pub drift: i64,
    /// `S(τ), S'(τ), ..., S''''(τ)`.
    pub s_derivs: [R; 5],
    pub tau_exact_one: bool,
    /// `V(z) = d0 - d1 (1 - z/ρ)^{1/2} - d2 (1 - z/ρ) + ...`
    pub d0: R,
    pub d1: R,
    pub d2: R,
}

impl<R: Real> StructuralConstants<R> {
    pub fn s(&self, order: usize) -> &R {
        &self.s_derivs[order]
    }
}

pub(crate) fn int<R: Real>(ctx: R::Context, v: i64) -> R {
    R::from_i64(ctx, v)
}

/// `(-1)^n`.
pub(crate) fn alt_sign<R: Real>(ctx: R::Context, n: usize) -> R {
    int(ctx, if n.is_multiple_of(2) { 1 } else { -1 })
}

/// `n^e` for a half-integer exponent `e = k/2`.
pub(crate) fn half_pow<R: Real>(ctx: R::Context, n: usize, halves: i64) -> R {
    let x = int::<R>(ctx, n as i64);
    let whole = x.powi(halves.div_euclid(2));
    if halves.rem_euclid(2) == 1 {
        whole * x.sqrt()
    } else {
        whole
    }
}

/// Positive root `τ` of `S'`. Exactly `1` for `{-1, 1}` and `{-1, 0, 1}`.
///
/// `S'` is strictly increasing on `(0, ∞)`, tends to `-∞` at `0` and is
/// non-negative at `1`, so `[lo, 1]` with `S'(lo) < 0` brackets the root.
pub fn solve_tau<R: Real>(s: &StepSet, ctx: R::Context, tol: &R) -> Result<R> {
    let one = int::<R>(ctx, 1);
    if s.is_tau_one() {
        return Ok(one);
    }
    let f = |u: &R| Ok((s.eval(ctx, u, 1)?, s.eval(ctx, u, 2)?));
    bracketed_root(ctx, f, Monotone::Increasing, int(ctx, 0), one, tol)
}

/// Assembles [`StructuralConstants`] with the default tolerance of `R`.
pub fn structural_constants<R: Real>(
    s: &StepSet,
    ctx: R::Context,
) -> Result<StructuralConstants<R>> {
    let tau = solve_tau(s, ctx, &R::tolerance(ctx))?;
    let d = |k| s.eval(ctx, &tau, k);
    let s_derivs = [d(0)?, d(1)?, d(2)?, d(3)?, d(4)?];
    let rho = int::<R>(ctx, 1) / s_derivs[0].clone();
    let c = tau.clone() * s_derivs[0].clone();
    let d1 = (int::<R>(ctx, 2) * s_derivs[0].clone() / s_derivs[2].clone()).sqrt();
    let d2 = s_derivs[0].clone() * s_derivs[3].clone()
        / (int::<R>(ctx, 3) * s_derivs[2].clone() * s_derivs[2].clone());
    Ok(StructuralConstants {
        d0: tau.clone(),
        tau,
        rho,
        c,
        period: s.period(),
        drift: s.drift(),
        s_derivs,
        tau_exact_one: s.is_tau_one(),
        d1,
        d2,
    })
}
