//! Truncated exact power series and the path generating functions built on
//! them. This is an oracle independent of [`crate::exact`]: coefficients come
//! from the fixed point `V = z L(z, t, V)` instead of a walk over states.

mod ring;
mod truncated;

pub use ring::{Ring, TPoly};
pub use truncated::Series;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::path::PathKind;
use crate::stepset::StepSet;

/// Series in `z` whose coefficients are polynomials in `t`, the marker of
/// `r`-ascents.
pub type BivariateSeries = Series<TPoly>;
/// Series in `z` with exact rational coefficients.
pub type UnivariateSeries = Series<BigRational>;

/// `S₊(X) = Σ_{b ∈ ups} X^b` for a series `X`.
fn s_plus<R: Ring>(s: &StepSet, x: &Series<R>, order: usize) -> Series<R> {
    let mut acc = Series::zero(order);
    let mut power = Series::constant(R::one(), order);
    let mut e = 0;
    for &b in s.ups() {
        while e < b {
            power = power.mul(x).truncate(order);
            e += 1;
        }
        acc = acc.add(&power);
    }
    acc
}

/// `L(z, t, X) = 1 / (1 - z S₊(X)) + (t - 1) (z S₊(X))^r`.
fn kernel_l(s: &StepSet, r: usize, x: &BivariateSeries, order: usize) -> BivariateSeries {
    let zs = s_plus(s, x, order).shift_up(1).truncate(order);
    let one = Series::constant(TPoly::one(), order);
    let geo = one.sub(&zs).inverse().expect("constant term 1");
    let marked = zs.pow(r).truncate(order).scale(&TPoly::t_minus_one());
    geo.add(&marked)
}

/// One application of `V ↦ z L(z, t, V)`, known to `order`.
fn step_v(s: &StepSet, r: usize, v: &BivariateSeries, order: usize) -> BivariateSeries {
    kernel_l(s, r, v, order).shift_up(1).truncate(order)
}

/// `V(z, t)` to order `n`. `V/z` enumerates excursions with `t` marking
/// `r`-ascents.
///
/// Runs exactly `n + 1` fixed point steps. Each step gains at least one
/// correct order, so the truncation order of the working series grows with
/// the iteration count.
pub fn solve_v(s: &StepSet, r: usize, n: usize) -> BivariateSeries {
    assert!(r >= 1, "ascent length must be at least 1");
    let mut v = Series::zero(0);
    for j in 0..=n {
        v = step_v(s, r, &v, (j + 1).min(n));
    }
    v.truncate(n)
}

/// All fixed point iterates `V_0 = 0, V_1, ..., V_{n+1}` at full order `n`.
pub fn solve_v_iterates(s: &StepSet, r: usize, n: usize) -> Vec<BivariateSeries> {
    assert!(r >= 1, "ascent length must be at least 1");
    let mut out = vec![Series::zero(n)];
    for _ in 0..=n {
        let next = step_v(s, r, out.last().expect("non-empty"), n);
        out.push(next);
    }
    out
}

/// `V(z) = V(z, 1)`, solving `V = z V S(V) = z (1 + Σ_b V^{b+1})`.
pub fn v_univariate(s: &StepSet, n: usize) -> UnivariateSeries {
    let mut v: UnivariateSeries = Series::zero(0);
    for j in 0..=n {
        let order = (j + 1).min(n);
        let one = Series::constant(<BigRational as Ring>::one(), order);
        let sum = one.add(&s_plus(s, &v, order).mul(&v).truncate(order));
        v = sum.shift_up(1).truncate(order);
    }
    v.truncate(n)
}

/// `V_t(z) = ∂V/∂t` at `t = 1`, from the closed form
/// `-z (V - z)^r / (V^{r+2} S'(V))`.
pub fn v_t_series(s: &StepSet, r: usize, n: usize) -> UnivariateSeries {
    assert!(r >= 1, "ascent length must be at least 1");
    let work = n + r + 2;
    let v = v_univariate(s, work);
    let z = Series::monomial(<BigRational as Ring>::one(), 1, work);
    let num = v.sub(&z).pow(r).shift_up(1).neg();
    // V^{r+2} S'(V) = -V^r + Σ_b b V^{r+b+1}
    let vr = v.pow(r);
    let mut den = vr.neg();
    for &b in s.ups().iter().filter(|&&b| b > 0) {
        let term = vr.mul(&v.pow(b as usize + 1));
        den = den.add(&term.scale(&BigRational::from_integer(b.into())));
    }
    let q = num
        .div(&den)
        .expect("denominator has valuation r with unit leading term");
    assert!(q.order() >= n);
    q.truncate(n)
}

/// `F(z, t, 1) = (1 - V) L(z, t, 1) / (1 - z L(z, t, 1))`, the meander
/// generating function.
pub fn meander_series(s: &StepSet, r: usize, n: usize) -> BivariateSeries {
    let v = solve_v(s, r, n);
    let m = BigInt::from(s.ups().len());
    // L(z, t, 1) = Σ_j (mz)^j + (t - 1)(mz)^r
    let mut l: Vec<TPoly> = Vec::with_capacity(n + 1);
    let mut mj = BigInt::from(1);
    for _ in 0..=n {
        l.push(TPoly::new(vec![mj.clone()]));
        mj *= &m;
    }
    if r <= n {
        let bump = TPoly::t_minus_one().mul(&TPoly::new(vec![num_traits::Pow::pow(&m, r as u32)]));
        l[r] = l[r].add(&bump);
    }
    let l = Series::from_coeffs(l, n);
    let one = Series::constant(TPoly::one(), n);
    let num = one.sub(&v).mul(&l);
    let den = one.sub(&l.shift_up(1).truncate(n));
    num.div(&den).expect("constant term 1").truncate(n)
}

/// `D(z, t) = V / (z (1 - V))`, dispersed excursions.
pub fn dispersed_series(s: &StepSet, r: usize, n: usize) -> Result<BivariateSeries> {
    PathKind::Dispersed.check(s)?;
    let v = solve_v(s, r, n + 1);
    let one = Series::constant(TPoly::one(), n + 1);
    let q = v.div(&one.sub(&v)).expect("constant term 1");
    Ok(q.shift_down(1).expect("V(0) = 0").truncate(n))
}

/// Series of the path family `kind`, i.e. `V/z`, `D` or `F(z, t, 1)`.
pub fn family_series(s: &StepSet, kind: PathKind, r: usize, n: usize) -> Result<BivariateSeries> {
    if r == 0 {
        return Err(Error::ZeroAscentLength);
    }
    match kind {
        PathKind::Excursion => Ok(solve_v(s, r, n + 1).shift_down(1).expect("V(0) = 0")),
        PathKind::Dispersed => dispersed_series(s, r, n),
        PathKind::Meander => Ok(meander_series(s, r, n)),
    }
}

/// `Σ_k k(k-1)...(k-j+1) c_{n,k}` for every `n`: the `j`-th `t`-derivative at
/// `t = 1`. `j = 0` collapses to the counts.
pub fn factorial_moment(series: &BivariateSeries, j: usize) -> Series<BigInt> {
    series.map(|p| p.derivative_at_one(j))
}

/// Integer series viewed over the rationals.
pub fn to_rational(series: &Series<BigInt>) -> UnivariateSeries {
    series.map(|c| BigRational::from_integer(c.clone()))
}
