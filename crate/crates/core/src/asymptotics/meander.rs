use super::{alt_sign, bracketed_root, half_pow, int, Monotone, StructuralConstants};
use crate::error::{Error, Result};
use crate::real::Real;
use crate::stepset::StepSet;

/// Constants at the simple pole `ξ = 1/S(1)` of the meander generating
/// function, for step sets with `τ < 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanderConstants<R> {
    pub xi: R,
    /// `V(ξ)`, the root of `S(u) = S(1)` in `(0, τ)`.
    pub v_xi: R,
    /// `V_z(ξ) = -S(1)^2 / S'(V(ξ))`.
    pub vz_xi: R,
    /// `V_t(ξ) = -ξ (V(ξ) - ξ)^r / (V(ξ)^{r+2} S'(V(ξ)))`.
    pub vt_xi: R,
    pub mu: R,
    pub c0: R,
    pub sigma2: R,
}

/// Evaluates [`MeanderConstants`] for ascent length `r`.
///
/// `V_z` follows from differentiating `z S(V(z)) = 1`:
/// `S(V) + z S'(V) V_z = 0`, so `V_z(ξ) = -S(1) / (ξ S'(V(ξ)))`.
///
/// The constant term is extracted from the double pole of `∂F/∂t` at `ξ`:
/// `c₀ = c^r (2S(1) - 1 - r) / S(1)^{r+2} + c^r V_z(ξ) / (S(1)^{r+3} (1 - V(ξ)))
/// - V_t(ξ) / (1 - V(ξ))` with `c = S(1) - 1`.
pub fn meander_constants<R: Real>(
    s: &StepSet,
    k: &StructuralConstants<R>,
    ctx: R::Context,
    r: usize,
) -> Result<MeanderConstants<R>> {
    if k.tau_exact_one {
        return Err(Error::TauIsOne);
    }
    let i = |v: i64| int::<R>(ctx, v);
    let s1 = i(s.size() as i64);
    let target = s1.clone();
    let f = |u: &R| Ok((s.eval(ctx, u, 0)? - target.clone(), s.eval(ctx, u, 1)?));
    let v = bracketed_root(
        ctx,
        f,
        Monotone::Decreasing,
        i(0),
        k.tau.clone(),
        &R::tolerance(ctx),
    )?;

    let xi = i(1) / s1.clone();
    let sp = s.eval(ctx, &v, 1)?;
    let vz = -(s1.clone() * s1.clone()) / sp.clone();
    let ri = r as i64;
    let vt = -(xi.clone() * (v.clone() - xi.clone()).powi(ri)) / (v.powi(ri + 2) * sp);

    let c = s1.clone() - i(1);
    let cr = c.powi(ri);
    let mu = cr.clone() / s1.powi(ri + 2);
    let one_minus_v = i(1) - v.clone();
    let c0 = cr.clone() * (i(2) * s1.clone() - i(1 + ri)) / s1.powi(ri + 2)
        + cr * vz.clone() / (s1.powi(ri + 3) * one_minus_v.clone())
        - vt.clone() / one_minus_v;
    let sigma2 =
        mu.clone() + c.powi(2 * ri) * (i(2) * s1.clone() - i(3 + 2 * ri)) / s1.powi(2 * ri + 4);
    Ok(MeanderConstants {
        xi,
        v_xi: v,
        vz_xi: vz,
        vt_xi: vt,
        mu,
        c0,
        sigma2,
    })
}

/// Mean number of `r`-ascents in meanders of length `n`.
pub fn meander_expectation_asym<R: Real>(
    s: &StepSet,
    k: &StructuralConstants<R>,
    ctx: R::Context,
    r: usize,
    n: usize,
) -> Result<R> {
    let i = |v: i64| int::<R>(ctx, v);
    let nn = i(n as i64);
    let ri = r as i64;
    if s.is_dyck() {
        let p = i(2).powi(ri);
        let sq = (i(2) * R::pi(ctx)).sqrt();
        let t0 = nn / (p.clone() * i(4));
        let t1 = sq.clone() * i(ri - 2) / (p.clone() * i(8)) * half_pow(ctx, n, 1);
        let t2 = i(ri * ri - ri - 8) / (p.clone() * i(8));
        let t3 = sq * (i(2) - alt_sign(ctx, n)) * i(ri - 2) / (p * i(32)) * half_pow(ctx, n, -1);
        return Ok(t0 + t1 - t2 + t3);
    }
    if s.is_motzkin() {
        let p2 = |e: i64| i(2).powi(e);
        let p3 = |e: i64| i(3).powi(e);
        let sq = (i(3) * R::pi(ctx)).sqrt();
        let t0 = p2(ri) / p3(ri + 2) * nn;
        let t1 = sq.clone() * i(ri - 4) * p2(ri - 2) / p3(ri + 2) * half_pow(ctx, n, 1);
        let t2 = i(3 * ri * ri - ri - 96) * p2(ri - 4) / p3(ri + 2);
        let t3 = sq * i(ri - 4) * p2(ri - 6) / p3(ri) * half_pow(ctx, n, -1);
        return Ok(t0 + t1 - t2 + t3);
    }
    let m = meander_constants(s, k, ctx, r)?;
    Ok(m.mu * nn + m.c0)
}

/// Variance of the number of `r`-ascents in meanders of length `n`.
pub fn meander_variance_asym<R: Real>(
    s: &StepSet,
    k: &StructuralConstants<R>,
    ctx: R::Context,
    r: usize,
    n: usize,
) -> Result<R> {
    let i = |v: i64| int::<R>(ctx, v);
    let nn = i(n as i64);
    let ri = r as i64;
    let pi = R::pi(ctx);
    if s.is_dyck() {
        let den = i(2).powi(2 * ri + 5);
        let lead = (i(2).powi(ri + 3) - i(ri * ri) * (pi.clone() - i(2))
            + i(4 * ri) * (pi.clone() - i(3))
            - i(4) * pi.clone()
            + i(10))
            / den.clone();
        let half = (i(2) * pi).sqrt()
            * (i(2).powi(ri + 2) * i(ri - 2) - i(ri * ri * ri) + i(3 * ri * ri) - i(2 * ri) + i(4))
            / den;
        return Ok(lead * nn + half * half_pow(ctx, n, 1));
    }
    if s.is_motzkin() {
        let p3 = i(3).powi(2 * ri + 4);
        let four_r = i(2).powi(2 * ri);
        let lead = (i(3).powi(ri + 2) * i(2).powi(ri + 4)
            - four_r.clone()
                * (i(3 * ri * ri) * (pi.clone() - i(2)) - i(8 * ri) * (i(3) * pi.clone() - i(10))
                    + i(48) * pi.clone()
                    - i(144)))
            / (i(16) * p3.clone());
        let half = (i(3) * pi).sqrt()
            * (i(72) * i(ri - 4) * i(6).powi(ri)
                - four_r * i(3 * ri * ri * ri - 9 * ri * ri - 28 * ri - 32))
            / (i(32) * p3);
        return Ok(lead * nn + half * half_pow(ctx, n, 1));
    }
    let m = meander_constants(s, k, ctx, r)?;
    Ok(m.sigma2 * nn)
}

/// Number of meanders of length `n`.
///
/// For `τ < 1` this is the pole contribution `(1 - V(ξ)) S(1)^n`. For
/// `{-1, 1}` three terms of the expansion at `z = ±1/2` are used. For
/// `{-1, 0, 1}` the generating function is
/// `((1 + z) / (1 - 3z))^{1/2} / (2z) - 1/(2z)`, whose expansion at `z = 1/3`
/// gives `√(3/π) 3^n (n^{-1/2} - 9/16 n^{-3/2} + 253/512 n^{-5/2})`.
pub fn meander_count_asym<R: Real>(
    s: &StepSet,
    k: &StructuralConstants<R>,
    ctx: R::Context,
    n: usize,
) -> Result<R> {
    let i = |v: i64| int::<R>(ctx, v);
    let pi = R::pi(ctx);
    if s.is_dyck() {
        let pre = (i(2) / pi).sqrt() * i(2).powi(n as i64);
        let sign = alt_sign::<R>(ctx, n);
        let a = half_pow::<R>(ctx, n, -1);
        let b = (i(2) - sign.clone()) / i(4) * half_pow(ctx, n, -3);
        let c = (i(13) - i(12) * sign) / i(32) * half_pow(ctx, n, -5);
        return Ok(pre * (a - b + c));
    }
    if s.is_motzkin() {
        let pre = (i(3) / pi).sqrt() * i(3).powi(n as i64);
        let a = half_pow::<R>(ctx, n, -1);
        let b = i(9) / i(16) * half_pow(ctx, n, -3);
        let c = i(253) / i(512) * half_pow(ctx, n, -5);
        return Ok(pre * (a - b + c));
    }
    let m = meander_constants(s, k, ctx, 1)?;
    Ok((i(1) - m.v_xi) * i(s.size() as i64).powi(n as i64))
}
