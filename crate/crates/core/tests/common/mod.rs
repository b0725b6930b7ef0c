#![allow(dead_code)]

use lukasiewicz::{LatticePath, PathKind, Step, StepSet};
use num_bigint::BigUint;

pub const CORPUS: [&str; 6] = ["-1,1", "-1,0,1", "-1,2", "-1,0,2", "-1,1,3", "-1,0,1,2,3"];

pub fn corpus() -> Vec<StepSet> {
    CORPUS.iter().map(|s| s.parse().unwrap()).collect()
}

/// Every path of the family, by depth first search over step sequences.
pub fn enumerate(s: &StepSet, kind: PathKind, n: usize) -> Vec<LatticePath> {
    let mut steps: Vec<Step> = std::iter::once(Step::Down)
        .chain(s.ups().iter().map(|&b| Step::Up(b)))
        .collect();
    if kind == PathKind::Dispersed {
        steps.push(Step::Flat);
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    fn go(
        steps: &[Step],
        kind: PathKind,
        n: usize,
        alt: i64,
        prefix: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
    ) {
        let rem = (n - prefix.len()) as i64;
        if kind.returns_to_zero() && alt > rem {
            return;
        }
        if rem == 0 {
            if !kind.returns_to_zero() || alt == 0 {
                out.push(LatticePath {
                    kind,
                    steps: prefix.clone(),
                });
            }
            return;
        }
        for &st in steps {
            if st == Step::Flat && alt != 0 {
                continue;
            }
            let next = alt + st.height();
            if next < 0 {
                continue;
            }
            prefix.push(st);
            go(steps, kind, n, next, prefix, out);
            prefix.pop();
        }
    }
    go(&steps, kind, n, 0, &mut prefix, &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}
