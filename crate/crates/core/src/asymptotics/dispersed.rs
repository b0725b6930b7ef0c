use super::{alt_sign, half_pow, int, StructuralConstants};
use crate::error::Result;
use crate::path::PathKind;
use crate::real::Real;
use crate::stepset::StepSet;

/// Number of dispersed excursions of length `n`.
///
/// For `τ < 1` the main term carries a factor depending on `k = n mod p`.
/// For `{-1, 1}` the count is the central binomial coefficient and two terms
/// of its expansion are returned.
pub fn dispersed_count_asym<R: Real>(
    s: &StepSet,
    k: &StructuralConstants<R>,
    ctx: R::Context,
    n: usize,
) -> Result<R> {
    PathKind::Dispersed.check(s)?;
    let i = |v: i64| int::<R>(ctx, v);
    let pi = R::pi(ctx);
    if s.is_dyck() {
        let two_n = i(2).powi(n as i64);
        let a = (i(2) / pi.clone()).sqrt() * half_pow(ctx, n, -1);
        let b = (i(2) - alt_sign(ctx, n)) / (i(2) * (i(2) * pi).sqrt()) * half_pow(ctx, n, -3);
        return Ok(two_n * (a - b));
    }
    let p = k.period as i64;
    let rem = (n as i64) % p;
    let tau = k.tau.clone();
    let tp = tau.powi(p);
    let residue =
        i(p) * tau.powi(rem) * (tp.clone() * i(p - rem - 1) + i(rem + 1)) / (i(1) - tp).powi(2);
    let sc = k.s(0).clone();
    let shape = (sc.powi(3) / k.s(2).clone()).sqrt() / (i(2) * pi).sqrt();
    Ok(residue * shape * sc.powi(n as i64) * half_pow(ctx, n, -3))
}

/// Slope `(τS(τ) - 1)^r / (τS(τ))^{r+2}` of the dispersed mean.
pub fn dispersed_mu<R: Real>(k: &StructuralConstants<R>, ctx: R::Context, r: usize) -> R {
    super::excursion_mu(k, ctx, r)
}

/// Mean number of `r`-ascents in dispersed excursions: `μ n` for `τ < 1`,
/// four terms for `{-1, 1}`.
pub fn dispersed_expectation_asym<R: Real>(
    s: &StepSet,
    k: &StructuralConstants<R>,
    ctx: R::Context,
    r: usize,
    n: usize,
) -> Result<R> {
    PathKind::Dispersed.check(s)?;
    let i = |v: i64| int::<R>(ctx, v);
    if !s.is_dyck() {
        return Ok(dispersed_mu(k, ctx, r) * i(n as i64));
    }
    let r = r as i64;
    let p2 = i(2).powi(r);
    let sq = (R::pi(ctx) / i(2)).sqrt();
    let t0 = i(n as i64) / (p2.clone() * i(4));
    let t1 = sq.clone() * i(r - 2) / (p2.clone() * i(4)) * half_pow(ctx, n, 1);
    let t2 = i((r - 1) * (r - 4)) / (p2.clone() * i(8));
    let t3 = sq * i(r - 2) * (i(2) - alt_sign(ctx, n)) / (p2 * i(16)) * half_pow(ctx, n, -1);
    Ok(t0 - t1 + t2 - t3)
}
