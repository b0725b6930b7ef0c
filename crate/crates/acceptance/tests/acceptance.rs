//! Acceptance criteria 1 to 13. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use lukasiewicz::asymptotics::{
    asymptotic_value, dispersed_count_asym, excursion_c0, excursion_count_asym, excursion_mu,
    excursion_sigma2, fit_exponent, meander_constants, meander_expectation_asym,
    structural_constants, Quantity,
};
use lukasiewicz::bijection::{path_to_tree, tree_ascent_count, tree_to_path};
use lukasiewicz::exact::{
    self, brute_force_distribution, brute_force_distribution_with_cap, Moments,
};
use lukasiewicz::sampler::normality_check;
use lukasiewicz::series::family_series;
use lukasiewicz::{LatticePath, PathKind, Step, StepSet};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

const CORPUS: [&str; 6] = ["-1,1", "-1,0,1", "-1,2", "-1,0,2", "-1,1,3", "-1,0,1,2,3"];

fn corpus() -> Vec<StepSet> {
    CORPUS.iter().map(|s| s.parse().unwrap()).collect()
}

fn set(s: &str) -> StepSet {
    s.parse().unwrap()
}

fn kinds(s: &StepSet) -> impl Iterator<Item = PathKind> + '_ {
    PathKind::ALL.into_iter().filter(|k| k.applies_to(s))
}

fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn f64_of(q: &BigRational) -> f64 {
    q.to_f64().unwrap()
}

/// Outcome of one criterion: verdict plus the measured values.
struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            pass: true,
            detail: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.pass &= ok;
        if !self.detail.is_empty() {
            self.detail.push_str("; ");
        }
        self.detail.push_str(&what.into());
        if !ok {
            self.detail.push_str(" [fails]");
        }
    }

    fn budget(&mut self, elapsed: Duration, limit_secs: u64) {
        self.check(
            elapsed.as_secs_f64() < limit_secs as f64,
            format!("runtime {:.1}s < {limit_secs}s", elapsed.as_secs_f64()),
        )
    }
}

fn oracle_equivalence() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut cases = 0;
    let mut mismatches = 0;
    for s in corpus() {
        for kind in kinds(&s) {
            for n in 0..=12 {
                for r in 1..=3 {
                    cases += 1;
                    if exact::distribution(&s, kind, n, r).unwrap()
                        != brute_force_distribution(&s, kind, n, r).unwrap()
                    {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    v.check(
        mismatches == 0,
        format!("{cases} (S, kind, n, r) cases, {mismatches} mismatches"),
    );
    v.budget(start.elapsed(), 120);
    v
}

fn series_dp_equivalence() -> Verdict {
    const N: usize = 25;
    let mut v = Verdict::new();
    let start = Instant::now();
    let mut coefficients = 0;
    let mut mismatches = 0;
    for s in corpus() {
        for kind in kinds(&s) {
            for r in 1..=3 {
                let f = family_series(&s, kind, r, N).unwrap();
                for n in 0..=N {
                    let dp = exact::distribution(&s, kind, n, r).unwrap().counts;
                    let gf = f.coeff(n).unwrap();
                    for (k, c) in dp.iter().enumerate() {
                        coefficients += 1;
                        if gf.coeff(k) != BigInt::from(c.clone()) {
                            mismatches += 1;
                        }
                    }
                    if gf.degree().is_some_and(|d| d >= dp.len()) {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    v.check(
        mismatches == 0,
        format!("{coefficients} coefficients, {mismatches} mismatches"),
    );
    v.budget(start.elapsed(), 60);
    v
}

fn dyck_exact_formula() -> Verdict {
    let mut v = Verdict::new();
    let s = StepSet::dyck();
    let mut bad = Vec::new();
    for n in 1..=100i64 {
        let catalan = binomial(2 * n, n) / BigUint::from((n + 1) as u64);
        for r in 1..=8i64 {
            let mean = exact::moments(&s, PathKind::Excursion, 2 * n as usize, r as usize)
                .unwrap()
                .mean;
            let want = BigRational::new(
                binomial(2 * n - r - 1, n - 1).into(),
                catalan.clone().into(),
            );
            if mean != want {
                bad.push((n, r));
            }
        }
    }
    v.check(
        bad.is_empty(),
        format!("800 (n, r) pairs with 2n <= 200, r <= 8; mismatches {bad:?}"),
    );
    v
}

fn dispersed_dyck_counts() -> Verdict {
    let mut v = Verdict::new();
    let s = StepSet::dyck();
    let bad: Vec<usize> = (0..=200)
        .filter(|&n| {
            exact::count(&s, PathKind::Dispersed, n).unwrap() != binomial(n as i64, n as i64 / 2)
        })
        .collect();
    v.check(bad.is_empty(), format!("n = 0..=200, mismatches {bad:?}"));
    v
}

fn known_sequences() -> Verdict {
    let mut v = Verdict::new();
    let motzkin = StepSet::motzkin();
    let dyck = StepSet::dyck();
    let brute = |s: &StepSet, n| {
        brute_force_distribution_with_cap(s, PathKind::Excursion, n, 1, 16)
            .unwrap()
            .total()
    };
    let m: Vec<BigUint> = (0..=16).map(|n| brute(&motzkin, n)).collect();
    let head: Vec<u64> = m.iter().take(8).map(|x| x.to_u64().unwrap()).collect();
    v.check(
        head == [1, 1, 2, 4, 9, 21, 51, 127],
        format!("Motzkin prefix {head:?}"),
    );
    // M_{n+1} = M_n + Σ M_k M_{n-1-k}
    let recurrence =
        (1..16).all(|n| m[n + 1] == &m[n] + (0..n).map(|k| &m[k] * &m[n - 1 - k]).sum::<BigUint>());
    v.check(recurrence, "Motzkin recurrence up to n = 16");
    let dp_motzkin =
        (0..=16).all(|n| exact::count(&motzkin, PathKind::Excursion, n).unwrap() == m[n]);
    v.check(dp_motzkin, "DP = brute force for Motzkin, n <= 16");
    let aerated = (0..=16usize).all(|n| {
        let want = if n % 2 == 1 {
            BigUint::zero()
        } else {
            let h = (n / 2) as i64;
            binomial(2 * h, h) / BigUint::from((h + 1) as u64)
        };
        let b = brute(&dyck, n);
        b == want && exact::count(&dyck, PathKind::Excursion, n).unwrap() == b
    });
    v.check(
        aerated,
        "aerated Catalan for {-1,1}, n <= 16 (brute force and DP)",
    );
    v
}

type MomentTable = (Vec<(usize, usize, Moments)>, Duration);

/// Exact moments of {-1,2} excursions at n = 300, 1200, 4800 for r = 1, 2,
/// shared by criteria 6 and 7.
fn excursion_moment_table() -> &'static MomentTable {
    static CELL: OnceLock<MomentTable> = OnceLock::new();
    CELL.get_or_init(|| {
        let s = set("-1,2");
        let start = Instant::now();
        let mut out = Vec::new();
        for r in [1, 2] {
            for n in [300, 1200, 4800] {
                out.push((r, n, exact::moments(&s, PathKind::Excursion, n, r).unwrap()));
            }
        }
        (out, start.elapsed())
    })
}

fn excursion_expectation() -> Verdict {
    let mut v = Verdict::new();
    let k = structural_constants::<f64>(&set("-1,2"), ()).unwrap();
    let mu1 = excursion_mu(&k, (), 1);
    v.check(
        (mu1 - 4.0 / 27.0).abs() < 1e-12,
        format!("mu(r=1) = {mu1:.15} vs 4/27"),
    );
    let (rows, elapsed) = excursion_moment_table();
    for r in [1, 2] {
        let (mu, c0) = (excursion_mu(&k, (), r), excursion_c0(&k, (), r));
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter(|row| row.0 == r)
            .map(|(_, n, m)| (*n as f64, (f64_of(&m.mean) - (mu * *n as f64 + c0)).abs()))
            .collect();
        let decreasing = pts.windows(2).all(|w| w[1].1 < w[0].1);
        let slope = fit_exponent(&pts).unwrap_or(f64::NAN);
        let res: Vec<String> = pts.iter().map(|p| format!("{:.2e}", p.1)).collect();
        v.check(
            decreasing && (-1.0..=-0.2).contains(&slope),
            format!("r={r}: residuals {res:?}, exponent {slope:.3}"),
        );
    }
    v.budget(*elapsed, 120);
    v
}

fn excursion_variance() -> Verdict {
    let mut v = Verdict::new();
    let k = structural_constants::<f64>(&set("-1,2"), ()).unwrap();
    let (rows, _) = excursion_moment_table();
    for r in [1, 2] {
        let s2 = excursion_sigma2(&k, (), r);
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter(|row| row.0 == r)
            .map(|(_, n, m)| {
                let n = *n as f64;
                (n, (f64_of(&m.variance) - s2 * n).abs() / n)
            })
            .collect();
        let slope = fit_exponent(&pts).unwrap_or(f64::NAN);
        let res: Vec<String> = pts.iter().map(|p| format!("{:.2e}", p.1)).collect();
        v.check(
            slope <= -0.2,
            format!("r={r}: |V - sigma2 n|/n {res:?}, exponent {slope:.3}"),
        );
    }
    v
}

fn excursion_counts() -> Verdict {
    let mut v = Verdict::new();
    for (s, n) in [("-1,2", 60), ("-1,1", 40)] {
        let st = set(s);
        let k = structural_constants::<f64>(&st, ()).unwrap();
        let rel = |n: usize| {
            let exact = exact::count(&st, PathKind::Excursion, n)
                .unwrap()
                .to_f64()
                .unwrap();
            (exact / excursion_count_asym(&k, (), n) - 1.0).abs()
        };
        let (e1, e4) = (rel(n), rel(4 * n));
        v.check(e1 < 0.01, format!("{{{s}}} n={n}: rel err {e1:.2e}"));
        v.check(
            e4 <= e1 / 2.0,
            format!("n={}: {e4:.2e} (shrink x{:.1})", 4 * n, e1 / e4),
        );
    }
    v
}

fn dispersed_checks() -> Verdict {
    let mut v = Verdict::new();
    let s = set("-1,2");
    let k = structural_constants::<f64>(&s, ()).unwrap();
    for (base, tol) in [(60usize, 0.10), (240, 0.04)] {
        for residue in 0..k.period as usize {
            let n = base + residue;
            let exact = exact::count(&s, PathKind::Dispersed, n)
                .unwrap()
                .to_f64()
                .unwrap();
            let rel = (exact / dispersed_count_asym(&s, &k, (), n).unwrap() - 1.0).abs();
            v.check(
                rel < tol,
                format!("n={n} (k={residue}): rel err {rel:.3} < {tol}"),
            );
        }
    }
    for r in [1, 2] {
        let mean = f64_of(
            &exact::moments(&s, PathKind::Dispersed, 1200, r)
                .unwrap()
                .mean,
        ) / 1200.0;
        let mu = excursion_mu(&k, (), r);
        let rel = (mean / mu - 1.0).abs();
        v.check(
            rel < 0.02,
            format!("r={r}: mean/n vs mu rel diff {rel:.4} at n=1200"),
        );
    }
    v
}

fn meander_checks() -> Verdict {
    let mut v = Verdict::new();
    let s = set("-1,2");
    let k = structural_constants::<f64>(&s, ()).unwrap();
    let m = meander_constants(&s, &k, (), 1).unwrap();
    let e80 = f64_of(&exact::moments(&s, PathKind::Meander, 80, 1).unwrap().mean);
    let d = (e80 - (m.mu * 80.0 + m.c0)).abs();
    v.check(
        d < 1e-6,
        format!("|E - (mu n + c0)| = {d:.2e} at n=80 (needs < 1e-6)"),
    );
    let var = f64_of(
        &exact::moments(&s, PathKind::Meander, 400, 1)
            .unwrap()
            .variance,
    ) / 400.0;
    let d = (var - m.sigma2).abs();
    v.check(d < 1e-3, format!("|V/n - sigma2| = {d:.2e} at n=400"));
    for special in [StepSet::dyck(), StepSet::motzkin()] {
        let ks = structural_constants::<f64>(&special, ()).unwrap();
        for r in 1..=3 {
            let exact = f64_of(
                &exact::moments(&special, PathKind::Meander, 400, r)
                    .unwrap()
                    .mean,
            );
            let rel =
                (meander_expectation_asym(&special, &ks, (), r, 400).unwrap() / exact - 1.0).abs();
            v.check(
                rel < 0.02,
                format!("{{{special}}} r={r}: rel err {rel:.1e}"),
            );
        }
    }
    v
}

fn clt() -> Verdict {
    let mut v = Verdict::new();
    let start = Instant::now();
    let d = normality_check(&set("-1,2"), 1, 400, 10_000, 7).unwrap();
    v.check(d < 0.05, format!("KS = {d:.4}"));
    v.budget(start.elapsed(), 60);
    v
}

fn excursions(s: &StepSet, n: usize) -> Vec<LatticePath> {
    let steps: Vec<Step> = std::iter::once(Step::Down)
        .chain(s.ups().iter().map(|&b| Step::Up(b)))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<Step>, i64)> = vec![(Vec::new(), 0)];
    while let Some((prefix, alt)) = stack.pop() {
        if prefix.len() == n {
            if alt == 0 {
                out.push(LatticePath {
                    kind: PathKind::Excursion,
                    steps: prefix,
                });
            }
            continue;
        }
        for &st in &steps {
            let next = alt + st.height();
            if next >= 0 && next <= (n - prefix.len() - 1) as i64 {
                let mut p = prefix.clone();
                p.push(st);
                stack.push((p, next));
            }
        }
    }
    out
}

fn bijection() -> Verdict {
    let mut v = Verdict::new();
    let mut paths = 0usize;
    let mut failures = 0usize;
    for s in corpus() {
        for n in 0..=10 {
            let all = excursions(&s, n);
            if BigUint::from(all.len()) != exact::count(&s, PathKind::Excursion, n).unwrap() {
                failures += 1;
            }
            for p in all {
                paths += 1;
                let Ok(tree) = path_to_tree(&s, &p) else {
                    failures += 1;
                    continue;
                };
                let ok = tree.node_count() == n + 1
                    && tree_to_path(&s, &tree).as_ref() == Ok(&p)
                    && (1..=3).all(|r| tree_ascent_count(&tree, r) == Ok(p.ascents(r)));
                failures += usize::from(!ok);
            }
        }
    }
    v.check(
        failures == 0,
        format!("{paths} excursions, {failures} failures"),
    );
    v
}

fn desk_scale(total: Duration) -> Verdict {
    let mut v = Verdict::new();
    // A formula evaluation outside the tested range, as a sanity check that
    // the evaluators run at sizes no table would list.
    let s = set("-1,0,1,2,3");
    let k = structural_constants::<f64>(&s, ()).unwrap();
    let mean = asymptotic_value(
        &s,
        &k,
        (),
        PathKind::Excursion,
        Quantity::Mean,
        2,
        1_000_000,
    )
    .unwrap();
    v.check(
        mean.is_finite() && mean > 0.0,
        "no published tables; covered by criteria 1-12",
    );
    v.budget(total, 600);
    v
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Verdict);
    let criteria: [Criterion; 12] = [
        ("oracle equivalence (DP = brute force)", oracle_equivalence),
        ("series = DP, n <= 25", series_dp_equivalence),
        ("Dyck exact mean formula", dyck_exact_formula),
        (
            "dispersed Dyck counts = central binomials",
            dispersed_dyck_counts,
        ),
        ("Motzkin and aerated Catalan counts", known_sequences),
        ("excursion expectation mu n + c0", excursion_expectation),
        ("excursion variance sigma2 n", excursion_variance),
        ("two-term excursion count", excursion_counts),
        ("dispersed count and slope", dispersed_checks),
        ("meander expectation and variance", meander_checks),
        ("meander CLT (KS)", clt),
        ("path/tree bijection", bijection),
    ];
    let suite = Instant::now();
    let mut failed = Vec::new();
    let mut report = |id: usize, title: &str, run: &dyn Fn() -> Verdict| {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Verdict {
                pass: false,
                detail: format!("panicked: {}", msg.unwrap_or_default()),
            }
        });
        let tag = if verdict.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {id:>2}: {tag}  {title} ({:.1}s)",
            start.elapsed().as_secs_f64()
        );
        println!("              {}", verdict.detail);
        if !verdict.pass {
            failed.push(id);
        }
    };
    for (i, (title, f)) in criteria.iter().enumerate() {
        report(i + 1, title, f);
    }
    let total = suite.elapsed();
    report(13, "desk-scale reproduction", &|| desk_scale(total));
    if failed.is_empty() {
        println!("acceptance: all 13 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!(
            "acceptance: {} of 13 criteria fail: {failed:?}",
            failed.len()
        );
        ExitCode::FAILURE
    }
}
