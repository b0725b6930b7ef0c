use lukasiewicz::asymptotics::{
    asymptotic_value, compare_report, dispersed_mu, excursion_c0, excursion_mu, excursion_sigma2,
    meander_constants, structural_constants,
};
use lukasiewicz::bijection::{path_to_tree, tree_ascent_count, tree_to_path};
use lukasiewicz::sampler::{empirical_moments, normality_check, sample_path};
use lukasiewicz::series::family_series;
use lukasiewicz::{
    exact, BigFloat, Bits, Error, ExactOptions, LatticePath, PathKind, PlaneTree, Real,
};
use serde_json::{json, Map, Value};

use crate::output::{
    approx, approx_f64, exact_int, exact_ratio, exact_small, exact_uint, ratio_text, Precision,
    Report,
};
use crate::{Command, Context, Failure};

/// Calls `$f::<R>(ctx, digits, ...)` with the backend selected by `$prec`.
macro_rules! with_real {
    ($prec:expr, $f:ident($($arg:expr),*)) => {
        match $prec {
            Precision::F64 => $f::<f64>((), Precision::F64.digits(), $($arg),*),
            Precision::Digits(d) => $f::<BigFloat>(Bits::for_digits(d), d, $($arg),*),
        }
    };
}

pub fn dispatch(cmd: &Command, c: &Context, stdin: &str) -> Result<Report, Failure> {
    let opts = ExactOptions { threads: c.threads };
    match cmd {
        Command::Count => {
            let n = exact::count(&c.steps, c.kind, c.n)?;
            Ok(Report::new(
                json!({ "kind": c.kind, "n": c.n, "count": exact_uint(&n) }),
                vec!["n", "count"],
            )
            .row(vec![c.n.to_string(), n.to_string()]))
        }
        Command::Dist => {
            let d = exact::distribution_with(&c.steps, c.kind, c.n, c.r, opts)?;
            let mut report = Report::new(Value::Null, vec!["k", "count"]);
            let mut entries = Vec::new();
            for (k, count) in d.counts.iter().enumerate() {
                entries.push(json!({ "k": k, "count": exact_uint(count) }));
                report = report.row(vec![k.to_string(), count.to_string()]);
            }
            report.payload = json!({
                "kind": c.kind, "n": c.n, "r": c.r,
                "total": exact_uint(&d.total()),
                "distribution": entries,
            });
            Ok(report)
        }
        Command::Moments => {
            let m = exact::moments_with(&c.steps, c.kind, c.n, c.r, opts)?;
            let payload = json!({
                "kind": c.kind, "n": c.n, "r": c.r,
                "count": exact_uint(&m.count),
                "mean": exact_ratio(&m.mean),
                "variance": exact_ratio(&m.variance),
            });
            Ok(
                Report::new(payload, vec!["count", "mean", "variance"]).row(vec![
                    m.count.to_string(),
                    ratio_text(&m.mean),
                    ratio_text(&m.variance),
                ]),
            )
        }
        Command::Constants => with_real!(c.precision, constants(c)),
        Command::Series => series(c),
        Command::Asym { quantity } => {
            let q = (*quantity).into();
            with_real!(c.precision, asym(c, q))
        }
        Command::Compare { quantity, ns } => {
            let q = (*quantity).into();
            with_real!(c.precision, compare(c, q, ns, opts))
        }
        Command::Sample { ks } => sample(c, *ks),
        Command::Tree => tree(c, stdin),
    }
}

fn constants<R: Real>(ctx: R::Context, digits: usize, c: &Context) -> Result<Report, Failure> {
    let k = structural_constants::<R>(&c.steps, ctx)?;
    let mut named: Vec<(&'static str, Value, String)> = Vec::new();
    let mut put =
        |name: &'static str, x: &R| named.push((name, approx(x, digits), x.to_decimal(digits)));
    put("tau", &k.tau);
    put("rho", &k.rho);
    put("c", &k.c);
    for (j, name) in ["s_tau", "s1_tau", "s2_tau", "s3_tau", "s4_tau"]
        .into_iter()
        .enumerate()
    {
        put(name, k.s(j));
    }
    put("d0", &k.d0);
    put("d1", &k.d1);
    put("d2", &k.d2);
    put("excursion_mu", &excursion_mu(&k, ctx, c.r));
    put("excursion_c0", &excursion_c0(&k, ctx, c.r));
    put("excursion_sigma2", &excursion_sigma2(&k, ctx, c.r));
    if PathKind::Dispersed.applies_to(&c.steps) {
        put("dispersed_mu", &dispersed_mu(&k, ctx, c.r));
    }
    let meander = match meander_constants(&c.steps, &k, ctx, c.r) {
        Ok(m) => Some(m),
        Err(Error::TauIsOne) => None,
        Err(e) => return Err(e.into()),
    };
    if let Some(m) = &meander {
        put("meander_xi", &m.xi);
        put("meander_v_xi", &m.v_xi);
        put("meander_vz_xi", &m.vz_xi);
        put("meander_vt_xi", &m.vt_xi);
        put("meander_mu", &m.mu);
        put("meander_c0", &m.c0);
        put("meander_sigma2", &m.sigma2);
    }
    let mut payload = Map::new();
    payload.insert("r".into(), json!(c.r));
    payload.insert("period".into(), exact_small(k.period.into()));
    payload.insert("drift".into(), exact_small(k.drift));
    payload.insert("tau_exact_one".into(), json!(k.tau_exact_one));
    let mut report = Report::new(Value::Null, vec!["name", "value"])
        .row(vec!["period".into(), k.period.to_string()])
        .row(vec!["drift".into(), k.drift.to_string()]);
    for (name, value, text) in named {
        payload.insert(name.into(), value);
        report = report.row(vec![name.into(), text]);
    }
    report.payload = Value::Object(payload);
    Ok(report)
}

fn series(c: &Context) -> Result<Report, Failure> {
    let f = family_series(&c.steps, c.kind, c.r, c.n)?;
    let mut report = Report::new(Value::Null, vec!["n", "k", "coefficient"]);
    let mut rows = Vec::new();
    for (m, poly) in f.coeffs().iter().enumerate().take(c.n + 1) {
        rows.push(Value::Array(poly.coeffs().iter().map(exact_int).collect()));
        for (k, a) in poly.coeffs().iter().enumerate() {
            report = report.row(vec![m.to_string(), k.to_string(), a.to_string()]);
        }
    }
    report.payload = json!({
        "kind": c.kind, "r": c.r, "order": c.n,
        "coefficients": rows,
    });
    Ok(report)
}

fn asym<R: Real>(
    ctx: R::Context,
    digits: usize,
    c: &Context,
    quantity: lukasiewicz::asymptotics::Quantity,
) -> Result<Report, Failure> {
    let k = structural_constants::<R>(&c.steps, ctx)?;
    let v = asymptotic_value(&c.steps, &k, ctx, c.kind, quantity, c.r, c.n)?;
    let payload = json!({
        "kind": c.kind, "quantity": quantity.to_string(), "n": c.n, "r": c.r,
        "value": approx(&v, digits),
    });
    Ok(Report::new(payload, vec!["n", "value"]).row(vec![c.n.to_string(), v.to_decimal(digits)]))
}

fn compare<R: Real>(
    ctx: R::Context,
    digits: usize,
    c: &Context,
    quantity: lukasiewicz::asymptotics::Quantity,
    ns: &[usize],
    opts: ExactOptions,
) -> Result<Report, Failure> {
    let rep = compare_report::<R>(&c.steps, c.kind, quantity, c.r, ns, ctx, opts)?;
    let mut report = Report::new(Value::Null, vec!["n", "exact", "asymptotic", "residual"]);
    let mut rows = Vec::new();
    for row in &rep.rows {
        rows.push(json!({
            "n": row.n,
            "exact": exact_ratio(&row.exact),
            "asymptotic": approx(&row.asymptotic, digits),
            "residual": approx_f64(row.residual),
        }));
        report = report.row(vec![
            row.n.to_string(),
            ratio_text(&row.exact),
            row.asymptotic.to_decimal(digits),
            format!("{:e}", row.residual),
        ]);
    }
    report.payload = json!({
        "kind": rep.kind, "quantity": rep.quantity.to_string(), "r": rep.r,
        "rows": rows,
        "exponent": rep.exponent.map(approx_f64),
    });
    Ok(report)
}

fn sample(c: &Context, ks: bool) -> Result<Report, Failure> {
    let Some(trials) = c.trials else {
        if ks {
            return Err(Failure::Input("--ks needs --trials".into()));
        }
        let p = sample_path(&c.steps, c.kind, c.n, c.seed)?;
        let a = p.ascents(c.r);
        let payload = json!({
            "kind": c.kind, "n": c.n, "r": c.r, "seed": c.seed,
            "path": p.to_string(),
            "ascents": exact_small(a as i64),
        });
        return Ok(
            Report::new(payload, vec!["path", "ascents"]).row(vec![p.to_string(), a.to_string()])
        );
    };
    let (mean, variance) = empirical_moments(&c.steps, c.kind, c.n, c.r, trials, c.seed)?;
    let mut payload = json!({
        "kind": c.kind, "n": c.n, "r": c.r, "seed": c.seed, "trials": trials,
        "mean": approx_f64(mean),
        "variance": approx_f64(variance),
    });
    let mut report = Report::new(Value::Null, vec!["statistic", "value"])
        .row(vec!["mean".into(), mean.to_string()])
        .row(vec!["variance".into(), variance.to_string()]);
    if ks {
        if c.kind != PathKind::Meander {
            return Err(Failure::Input("--ks applies to meanders only".into()));
        }
        let d = normality_check(&c.steps, c.r, c.n, trials, c.seed)?;
        payload["ks"] = approx_f64(d);
        report = report.row(vec!["ks".into(), d.to_string()]);
    }
    report.payload = payload;
    Ok(report)
}

fn tree(c: &Context, stdin: &str) -> Result<Report, Failure> {
    let text = stdin.trim();
    let (path, tree) = if text.starts_with('(') {
        let tree: PlaneTree = text.parse()?;
        (tree_to_path(&c.steps, &tree)?, tree)
    } else {
        let path = LatticePath::parse(PathKind::Excursion, text)?;
        let tree = path_to_tree(&c.steps, &path)?;
        (path, tree)
    };
    let ascents = tree_ascent_count(&tree, c.r)?;
    let payload = json!({
        "r": c.r,
        "path": path.to_string(),
        "tree": tree.to_string(),
        "nodes": tree.node_count(),
        "ascents": exact_small(ascents as i64),
    });
    Ok(
        Report::new(payload, vec!["path", "tree", "nodes", "ascents"]).row(vec![
            path.to_string(),
            tree.to_string(),
            tree.node_count().to_string(),
            ascents.to_string(),
        ]),
    )
}
