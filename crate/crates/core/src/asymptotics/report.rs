use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{
    dispersed_count_asym, dispersed_expectation_asym, excursion_count_asym,
    excursion_expectation_asym, excursion_variance_asym, meander_count_asym,
    meander_expectation_asym, meander_variance_asym, structural_constants, StructuralConstants,
};
use crate::error::{Error, Result};
use crate::exact::{self, ExactOptions};
use crate::path::PathKind;
use crate::real::Real;
use crate::stepset::StepSet;

/// The compared statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// Number of paths; residual is the relative error.
    Count,
    /// Mean number of ascents; residual is the absolute error.
    Mean,
    /// Variance; residual is the absolute error divided by `n`.
    Variance,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Count => "count",
            Quantity::Mean => "mean",
            Quantity::Variance => "variance",
        })
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "count" => Ok(Quantity::Count),
            "mean" => Ok(Quantity::Mean),
            "variance" => Ok(Quantity::Variance),
            _ => Err(Error::Syntax {
                what: "quantity",
                detail: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareRow<R> {
    pub n: usize,
    pub exact: BigRational,
    pub asymptotic: R,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CompareReport<R> {
    pub kind: PathKind,
    pub quantity: Quantity,
    pub r: usize,
    pub rows: Vec<CompareRow<R>>,
    /// Least squares slope of `log residual` against `log n`, if at least two
    /// rows have a positive residual.
    pub exponent: Option<f64>,
}

/// Evaluates the asymptotic formula for one `(kind, quantity)` pair.
pub fn asymptotic_value<R: Real>(
    s: &StepSet,
    k: &StructuralConstants<R>,
    ctx: R::Context,
    kind: PathKind,
    quantity: Quantity,
    r: usize,
    n: usize,
) -> Result<R> {
    use PathKind::*;
    use Quantity::*;
    kind.check(s)?;
    match (kind, quantity) {
        (Excursion, Count) => {
            if !n.is_multiple_of(k.period as usize) {
                return Err(Error::PeriodMismatch {
                    n,
                    period: k.period,
                });
            }
            Ok(excursion_count_asym(k, ctx, n))
        }
        (Excursion, Mean) => excursion_expectation_asym(k, ctx, r, n),
        (Excursion, Variance) => excursion_variance_asym(k, ctx, r, n),
        (Dispersed, Count) => dispersed_count_asym(s, k, ctx, n),
        (Dispersed, Mean) => dispersed_expectation_asym(s, k, ctx, r, n),
        (Dispersed, Variance) => Err(Error::NoFormula("variance of dispersed excursions")),
        (Meander, Count) => meander_count_asym(s, k, ctx, n),
        (Meander, Mean) => meander_expectation_asym(s, k, ctx, r, n),
        (Meander, Variance) => meander_variance_asym(s, k, ctx, r, n),
    }
}

/// Exact values from the dynamic program next to the asymptotic formula, for
/// every `n` in `ns`.
pub fn compare_report<R: Real>(
    s: &StepSet,
    kind: PathKind,
    quantity: Quantity,
    r: usize,
    ns: &[usize],
    ctx: R::Context,
    opts: ExactOptions,
) -> Result<CompareReport<R>> {
    let k = structural_constants::<R>(s, ctx)?;
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let asymptotic = asymptotic_value(s, &k, ctx, kind, quantity, r, n)?;
        let (exact, residual) = match quantity {
            Quantity::Count => {
                let c = BigRational::from_integer(BigInt::from(exact::count(s, kind, n)?));
                let rel = R::from_ratio(ctx, &c) / asymptotic.clone() - R::from_i64(ctx, 1);
                (c, rel.abs().to_f64())
            }
            Quantity::Mean => {
                let m = exact::moments_with(s, kind, n, r, opts)?.mean;
                let d = R::from_ratio(ctx, &m) - asymptotic.clone();
                (m, d.abs().to_f64())
            }
            Quantity::Variance => {
                let v = exact::moments_with(s, kind, n, r, opts)?.variance;
                let d = (R::from_ratio(ctx, &v) - asymptotic.clone()) / R::from_i64(ctx, n as i64);
                (v, d.abs().to_f64())
            }
        };
        rows.push(CompareRow {
            n,
            exact,
            asymptotic,
            residual,
        });
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|row| (row.n as f64, row.residual))
        .collect();
    Ok(CompareReport {
        kind,
        quantity,
        r,
        exponent: fit_exponent(&points),
        rows,
    })
}

/// Slope of the least squares line through `(log x, log y)` over the points
/// with finite positive coordinates.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0 && x.is_finite() && y.is_finite())
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let m = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / m;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
