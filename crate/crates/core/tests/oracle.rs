mod common;

use common::{corpus, enumerate};
use lukasiewicz::exact::{
    self, brute_force_distribution, brute_force_distribution_with_cap, ExactOptions,
};
use lukasiewicz::{Error, PathKind, StepSet};
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn dp_matches_brute_force_on_corpus() {
    for s in corpus() {
        for kind in PathKind::ALL.into_iter().filter(|k| k.applies_to(&s)) {
            for n in 0..=10 {
                for r in 1..=3 {
                    let dp = exact::distribution(&s, kind, n, r).unwrap();
                    let bf = brute_force_distribution(&s, kind, n, r).unwrap();
                    assert_eq!(dp, bf, "{s} {kind} n={n} r={r}");
                }
            }
        }
    }
}

#[test]
fn brute_force_matches_plain_enumeration() {
    for s in corpus() {
        for kind in PathKind::ALL.into_iter().filter(|k| k.applies_to(&s)) {
            for n in 0..=8 {
                let paths = enumerate(&s, kind, n);
                for r in 1..=3 {
                    let bf = brute_force_distribution(&s, kind, n, r).unwrap();
                    let mut counts = vec![BigUint::from(0u32); bf.counts.len()];
                    for p in &paths {
                        counts[p.ascents(r)] += 1u32;
                    }
                    assert_eq!(bf.counts, counts, "{s} {kind} n={n} r={r}");
                }
            }
        }
    }
}

#[test]
fn moments_agree_with_distribution() {
    for s in corpus() {
        for kind in PathKind::ALL.into_iter().filter(|k| k.applies_to(&s)) {
            for (n, r) in [(17, 1), (23, 2), (30, 3)] {
                let d = exact::distribution(&s, kind, n, r).unwrap();
                let Ok(dm) = d.moments() else {
                    assert_eq!(exact::count(&s, kind, n).unwrap(), BigUint::from(0u32));
                    assert_eq!(exact::moments(&s, kind, n, r), Err(Error::EmptyFamily));
                    continue;
                };
                let m = exact::moments(&s, kind, n, r).unwrap();
                assert_eq!(dm, m);
                assert_eq!(m.count, exact::count(&s, kind, n).unwrap());
            }
        }
    }
}

#[test]
fn threads_do_not_change_results() {
    let s: StepSet = "-1,0,1,2,3".parse().unwrap();
    for kind in [PathKind::Excursion, PathKind::Meander] {
        let one = exact::distribution_with(&s, kind, 60, 2, ExactOptions { threads: 1 }).unwrap();
        let four = exact::distribution_with(&s, kind, 60, 2, ExactOptions { threads: 4 }).unwrap();
        assert_eq!(one, four);
    }
}

#[test]
fn argument_errors() {
    let m: StepSet = "-1,0,1".parse().unwrap();
    assert_eq!(
        exact::count(&m, PathKind::Dispersed, 4),
        Err(Error::DispersedNeedsNoZeroStep)
    );
    assert_eq!(
        exact::distribution(&m, PathKind::Meander, 4, 0),
        Err(Error::ZeroAscentLength)
    );
    assert_eq!(
        brute_force_distribution(&m, PathKind::Meander, 15, 1),
        Err(Error::CapExceeded { n: 15, cap: 14 })
    );
    assert!(brute_force_distribution_with_cap(&m, PathKind::Excursion, 15, 1, 15).is_ok());
}

fn step_set() -> impl Strategy<Value = StepSet> {
    (
        any::<bool>(),
        proptest::collection::btree_set(1i64..6, 1..4),
    )
        .prop_map(|(zero, ups)| {
            let mut steps = vec![-1];
            if zero {
                steps.push(0);
            }
            steps.extend(ups);
            StepSet::new(&steps).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_sets_agree_with_brute_force(s in step_set(), n in 0usize..10, r in 1usize..4) {
        for kind in PathKind::ALL.into_iter().filter(|k| k.applies_to(&s)) {
            let dp = exact::distribution(&s, kind, n, r).unwrap();
            prop_assert_eq!(&dp, &brute_force_distribution(&s, kind, n, r).unwrap());
            prop_assert_eq!(dp.total(), exact::count(&s, kind, n).unwrap());
        }
    }
}
