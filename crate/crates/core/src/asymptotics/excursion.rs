use super::{half_pow, int, StructuralConstants};
use crate::error::{Error, Result};
use crate::real::Real;

fn check_period<R>(k: &StructuralConstants<R>, n: usize) -> Result<()> {
    if !n.is_multiple_of(k.period as usize) {
        return Err(Error::PeriodMismatch {
            n,
            period: k.period,
        });
    }
    Ok(())
}

/// Number of excursions of length `n`: the `n^{-3/2}` and `n^{-5/2}` terms,
/// and exactly `0` when the period does not divide `n`.
pub fn excursion_count_asym<R: Real>(k: &StructuralConstants<R>, ctx: R::Context, n: usize) -> R {
    if n == 0 || !n.is_multiple_of(k.period as usize) {
        return int(ctx, 0);
    }
    let (s, s2, s3, s4) = (
        k.s(0).clone(),
        k.s(2).clone(),
        k.s(3).clone(),
        k.s(4).clone(),
    );
    let p = int::<R>(ctx, k.period as i64);
    let two_pi = int::<R>(ctx, 2) * R::pi(ctx);
    let growth = s.powi(n as i64);
    let s_cubed = s.powi(3);

    let lead = p.clone() * (s_cubed.clone() / (two_pi.clone() * s2.clone())).sqrt();
    let bracket = int::<R>(ctx, 45) * s2.powi(3) + int::<R>(ctx, 5) * s.clone() * s3.powi(2)
        - int::<R>(ctx, 3) * s.clone() * s2.clone() * s4;
    let second = p / int(ctx, 24) * (s_cubed / (two_pi * s2.powi(7))).sqrt() * bracket;

    growth * (lead * half_pow(ctx, n, -3) - second * half_pow(ctx, n, -5))
}

/// `μ = (c - 1)^r / c^{r+2}`, slope of the mean.
pub fn excursion_mu<R: Real>(k: &StructuralConstants<R>, ctx: R::Context, r: usize) -> R {
    let c = k.c.clone();
    let r = r as i64;
    (c.clone() - int(ctx, 1)).powi(r) / c.powi(r + 2)
}

/// Constant term `c₀` of the mean.
pub fn excursion_c0<R: Real>(k: &StructuralConstants<R>, ctx: R::Context, r: usize) -> R {
    let i = |v: i64| int::<R>(ctx, v);
    let (c, tau) = (k.c.clone(), k.tau.clone());
    let (s, s2, s3) = (k.s(0).clone(), k.s(2).clone(), k.s(3).clone());
    let r = r as i64;
    let ri = i(r);

    let pre = (c.clone() - i(1)).powi(r - 2) / (i(2) * tau.powi(2) * c.powi(r + 2) * s2.powi(2));
    let t1 = s2.powi(2)
        * tau.powi(2)
        * (i(4) * c.powi(2) - (ri.clone() + i(8)) * c.clone() + ri.clone() + i(4));
    let t2 =
        s2 * s * (i(6) * c.powi(2) - i(6) * (ri.clone() + i(2)) * c.clone() + i(r * r + 5 * r + 6));
    let t3 = s3 * c.clone() * (i(2) * c.powi(2) - (ri.clone() + i(4)) * c + ri + i(2));
    pre * (t1 - t2 - t3)
}

/// `σ²`, slope of the variance.
pub fn excursion_sigma2<R: Real>(k: &StructuralConstants<R>, ctx: R::Context, r: usize) -> R {
    let i = |v: i64| int::<R>(ctx, v);
    let (c, tau, s2) = (k.c.clone(), k.tau.clone(), k.s(2).clone());
    let r = r as i64;
    let cm = c.clone() - i(1);
    let a = cm.powi(r) / c.powi(r + 2);
    let b = (i(2) * c.clone() - i(2 * r + 3)) * cm.powi(2 * r) / c.powi(2 * r + 4);
    let d = cm.powi(2 * r - 2) * (i(2) * c.clone() - i(r + 2)).powi(2)
        / (c.powi(2 * r + 3) * tau.powi(3) * s2);
    a + b - d
}

/// `E E_{n,r} ≈ μ n + c₀` for `p | n`.
pub fn excursion_expectation_asym<R: Real>(
    k: &StructuralConstants<R>,
    ctx: R::Context,
    r: usize,
    n: usize,
) -> Result<R> {
    check_period(k, n)?;
    Ok(excursion_mu(k, ctx, r) * int(ctx, n as i64) + excursion_c0(k, ctx, r))
}

/// `V E_{n,r} ≈ σ² n` for `p | n`.
pub fn excursion_variance_asym<R: Real>(
    k: &StructuralConstants<R>,
    ctx: R::Context,
    r: usize,
    n: usize,
) -> Result<R> {
    check_period(k, n)?;
    Ok(excursion_sigma2(k, ctx, r) * int(ctx, n as i64))
}
