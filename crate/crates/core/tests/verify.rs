mod common;

use std::collections::BTreeSet;

use hajos_ramsey::construct::ConstructionError;
use hajos_ramsey::detect::{find_blue_star, find_hajos};
use hajos_ramsey::extract::Target;
use hajos_ramsey::graph6;
use hajos_ramsey::verify::{
    enumerate_path_cycle_graphs, labelled_path_cycle_count, path_cycle_shapes, random_sweep, verify_all_colorings,
    verify_construction, verify_star_upper_via_structure, ConstructionKind, VerifyError,
};

#[test]
fn exhaustive_examples() {
    let r = verify_all_colorings(6, Target::Star(2)).unwrap();
    assert_eq!((r.total, r.passed, r.failed), (32768, 32768, 0));
    assert!(r.certified() && r.counterexamples.is_empty());
    for order in [4, 5] {
        let r = verify_all_colorings(order, Target::Star(2)).unwrap();
        assert!(r.failed > 0 && !r.certified());
        for s in &r.counterexamples {
            let g = graph6::decode(s).unwrap();
            assert_eq!(g.order(), order);
            assert!(find_hajos(&g).is_none() && find_blue_star(&g, 2).is_none());
        }
    }
    assert_eq!(
        verify_all_colorings(9, Target::Star(3)),
        Err(VerifyError::TooManyColorings { edges: 36 })
    );
}

#[test]
fn exhaustive_matches_oracle_count() {
    for order in 2..=6usize {
        let r = verify_all_colorings(order, Target::Star(2)).unwrap();
        let edges = order * (order - 1) / 2;
        let avoiders = (0..1u64 << edges)
            .filter(|&m| {
                let g = common::from_mask(order, m);
                !common::has_hajos(&g) && !common::has_blue_star(&g, 2)
            })
            .count() as u64;
        assert_eq!(r.failed, avoiders, "order {order}");
        assert_eq!(r.total, 1 << edges);
    }
}

#[test]
fn fan_target_scan() {
    let r = verify_all_colorings(5, Target::Fan(1)).unwrap();
    assert_eq!(r.total, 1024);
    let avoiders = (0..1u64 << 10)
        .filter(|&m| {
            let g = common::from_mask(5, m);
            !common::has_hajos(&g) && !common::has_blue_fan(&g, 1)
        })
        .count() as u64;
    assert_eq!(r.failed, avoiders);
}

#[test]
fn path_cycle_examples() {
    assert_eq!(path_cycle_shapes(3).unwrap().len(), 4);
    assert_eq!(path_cycle_shapes(4).unwrap().len(), 7);
    assert_eq!(enumerate_path_cycle_graphs(4).unwrap().count(), 7);
    assert!(matches!(
        enumerate_path_cycle_graphs(33),
        Err(VerifyError::Unsupported(_))
    ));
}

#[test]
fn path_cycle_classes_match_brute_force() {
    for order in 1..=6usize {
        let perms = common::permutations(order);
        let edges = order * (order - 1) / 2;
        let mut classes = BTreeSet::new();
        let mut labelled = 0u128;
        for m in 0..1u64 << edges {
            let g = common::from_mask(order, m);
            if g.max_degree() <= 2 {
                labelled += 1;
                classes.insert(common::canonical(&g, &perms));
            }
        }
        let generated: Vec<_> = enumerate_path_cycle_graphs(order).unwrap().collect();
        assert!(generated.iter().all(|g| g.max_degree() <= 2 && g.order() == order));
        let forms: BTreeSet<u64> = generated.iter().map(|g| common::canonical(g, &perms)).collect();
        assert_eq!(forms.len(), generated.len(), "duplicate class at order {order}");
        assert_eq!(forms, classes, "order {order}");
        assert_eq!(labelled_path_cycle_count(order).unwrap(), labelled, "order {order}");
    }
}

fn double_factorial_odd(k: u64) -> u64 {
    (1..=k).filter(|i| i % 2 == 1).product()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn structure_examples() {
    let expected: u64 = (0..=3)
        .map(|k| binomial(6, 2 * k) * double_factorial_odd(2 * k - (k > 0) as u64))
        .sum();
    assert_eq!(expected, 76);
    let r = verify_star_upper_via_structure(2).unwrap();
    assert_eq!((r.total, r.passed), (76, 76));
    let r = verify_star_upper_via_structure(3).unwrap();
    assert!(r.certified());
    assert_eq!(r.total, path_cycle_shapes(9).unwrap().len() as u64);
    assert!(matches!(
        verify_star_upper_via_structure(4),
        Err(VerifyError::Unsupported(_))
    ));
}

#[test]
fn construction_examples() {
    for (n, kind, order) in [
        (2, ConstructionKind::StarEven, 5),
        (3, ConstructionKind::StarOdd, 8),
        (111, ConstructionKind::Fan, 445),
    ] {
        let r = verify_construction(n, kind).unwrap();
        assert!(r.certified(), "{}", r.statement);
        assert!(r.statement.contains(&format!("order {order}")));
    }
    assert_eq!(
        verify_construction(3, ConstructionKind::StarEven),
        Err(VerifyError::Construction(ConstructionError::ParityError {
            n: 3,
            expected: "even"
        }))
    );
}

#[test]
fn sweeps_are_reproducible() {
    let a = random_sweep(Target::Star(20), 300, 9).unwrap();
    let b = random_sweep(Target::Star(20), 300, 9).unwrap();
    assert!(a.wall_ms.is_some());
    assert_eq!(a.clone().without_timing(), b.without_timing());
    assert!(a.certified());
    assert_eq!(a.case_histogram.values().sum::<u64>(), 300);
    assert!(matches!(
        random_sweep(Target::Fan(300), 1, 0),
        Err(VerifyError::Unsupported(_))
    ));
}

#[test]
fn report_json_fields() {
    let r = verify_construction(2, ConstructionKind::StarEven).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        BTreeSet::from([
            "statement",
            "total",
            "passed",
            "failed",
            "counterexamples",
            "case_histogram",
            "wall_ms"
        ])
    );
    let v = serde_json::to_value(r.without_timing()).unwrap();
    assert!(v.get("wall_ms").is_none());
}
