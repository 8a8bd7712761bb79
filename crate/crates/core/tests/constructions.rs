mod common;

use hajos_ramsey::construct::{
    burr_construction, burr_threshold, chromatic_info, complete_multipartite, disjoint_union, fan_graph, fan_lower,
    hajos_graph, join, repeat, star_even_lower, star_graph, star_odd_lower, wheel_w4, ChromaticInfo, ConstructionError,
};
use hajos_ramsey::detect::{find_blue_fan, find_blue_star, find_hajos};
use hajos_ramsey::Graph;

fn chromatic_oracle(g: &Graph) -> ChromaticInfo {
    let n = g.order();
    for k in 1..=n.max(1) {
        let mut best: Option<usize> = None;
        for code in 0..k.pow(n as u32) {
            let colors: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
            if g.edges().any(|e| colors[e.u] == colors[e.v]) {
                continue;
            }
            let smallest = (0..k)
                .map(|c| colors.iter().filter(|&&x| x == c).count())
                .min()
                .unwrap();
            if smallest > 0 {
                best = Some(best.map_or(smallest, |b| b.min(smallest)));
            }
        }
        if let Some(surplus) = best {
            return ChromaticInfo { chi: k, surplus };
        }
    }
    unreachable!()
}

#[test]
fn burr_examples() {
    let g = burr_construction(3, 2, 3).unwrap();
    assert!(common::isomorphic(&g, &complete_multipartite(&[2, 2, 1]).unwrap()));
    assert_eq!(g.order(), 5);
    for n in 1..30 {
        let g = burr_construction(3, 2, 2 * n + 1).unwrap();
        assert_eq!(g, complete_multipartite(&[2 * n, 2 * n, 1]).unwrap());
        assert_eq!(g.order(), 4 * n + 1);
    }
    for m in 1..12 {
        // one part of size m - 1 and an empty part: no red edges, blue complete
        let g = burr_construction(2, 1, m).unwrap();
        assert_eq!(g, Graph::empty(m - 1).unwrap());
        assert_eq!(g.complement(), Graph::complete(m - 1).unwrap());
    }
    assert!(matches!(
        burr_construction(1, 1, 3),
        Err(ConstructionError::InvalidParameters(_))
    ));
    assert!(matches!(
        burr_construction(3, 0, 3),
        Err(ConstructionError::InvalidParameters(_))
    ));
    assert!(matches!(
        burr_construction(3, 4, 3),
        Err(ConstructionError::InvalidParameters(_))
    ));
    assert!(matches!(
        burr_construction(3, 2, 600),
        Err(ConstructionError::OrderTooLarge(1199))
    ));
}

#[test]
fn burr_order_formula() {
    for chi in 2..6 {
        for s in 1..5 {
            for m in s..40 {
                let g = burr_construction(chi, s, m).unwrap();
                assert_eq!(g.order(), (chi - 1) * (m - 1) + s - 1);
                assert_eq!(burr_threshold(chi, s, m), g.order() + 1);
            }
        }
    }
}

#[test]
fn star_even_examples() {
    let g = star_even_lower(2).unwrap();
    assert_eq!((g.order(), g.edge_count()), (5, 8));
    let g = star_even_lower(4).unwrap();
    assert_eq!(g.order(), 9);
    assert_eq!(find_hajos(&g), None);
    assert!(!common::has_hajos(&g));
    assert_eq!(find_blue_star(&g, 4), None);
    let g = star_even_lower(100).unwrap();
    assert_eq!(g.order(), 201);
    assert_eq!(find_hajos(&g), None);
    assert_eq!(find_blue_star(&g, 100), None);
    assert_eq!(
        star_even_lower(3),
        Err(ConstructionError::ParityError { n: 3, expected: "even" })
    );
    assert!(star_even_lower(0).is_err());
}

#[test]
fn star_odd_examples() {
    let g = star_odd_lower(3).unwrap();
    assert_eq!((g.order(), g.edge_count()), (8, 20));
    assert!((0..8).all(|v| g.complement().degree(v) == 2 && g.degree(v) == 5));
    assert_eq!(find_hajos(&g), None);
    assert!(!common::has_hajos(&g));
    let g = star_odd_lower(111).unwrap();
    assert_eq!(g.order(), 224);
    assert!((0..224).all(|v| g.complement().degree(v) == 110 && g.degree(v) == 113));
    assert_eq!(find_hajos(&g), None);
    assert_eq!(find_blue_star(&g, 111), None);
    assert_eq!(
        star_odd_lower(4),
        Err(ConstructionError::ParityError { n: 4, expected: "odd" })
    );
    assert!(star_odd_lower(1).is_err());
}

#[test]
fn fan_lower_examples() {
    assert_eq!(fan_lower(1).unwrap(), star_even_lower(2).unwrap());
    let g = fan_lower(5).unwrap();
    assert_eq!(g.order(), 21);
    assert_eq!(find_hajos(&g), None);
    assert_eq!(find_blue_fan(&g, 5), None);
    let g = fan_lower(111).unwrap();
    assert_eq!(g.order(), 445);
    assert_eq!(find_hajos(&g), None);
    assert_eq!(find_blue_fan(&g, 111), None);
    assert!(fan_lower(0).is_err());
}

#[test]
fn joins_and_unions() {
    let k1 = Graph::empty(1).unwrap();
    let k2 = Graph::complete(2).unwrap();
    for n in 1..=3 {
        let fan = join(&k1, &repeat(&k2, n).unwrap()).unwrap();
        assert!(common::isomorphic(&fan, &fan_graph(n).unwrap()));
        assert_eq!(fan.edge_count(), 3 * n);
        let star = join(&k1, &Graph::empty(n).unwrap()).unwrap();
        assert!(common::isomorphic(&star, &star_graph(n).unwrap()));
    }
    let k3 = Graph::complete(3).unwrap();
    let two = disjoint_union(&k3, &k3).unwrap();
    assert_eq!((two.order(), two.edge_count()), (6, 6));
    assert!(two.has_edge(3, 5) && !two.has_edge(2, 3));
    let big = Graph::empty(600).unwrap();
    assert_eq!(join(&big, &big), Err(ConstructionError::OrderTooLarge(1200)));
    assert_eq!(disjoint_union(&big, &big), Err(ConstructionError::OrderTooLarge(1200)));
}

#[test]
fn chromatic_examples() {
    assert_eq!(
        chromatic_info(&hajos_graph()).unwrap(),
        ChromaticInfo { chi: 3, surplus: 2 }
    );
    assert_eq!(
        chromatic_info(&Graph::complete(3).unwrap()).unwrap(),
        ChromaticInfo { chi: 3, surplus: 1 }
    );
    assert_eq!(
        chromatic_info(&wheel_w4()).unwrap(),
        ChromaticInfo { chi: 3, surplus: 1 }
    );
    assert_eq!(chromatic_oracle(&wheel_w4()), ChromaticInfo { chi: 3, surplus: 1 });
    for m in 3..=6 {
        let g = burr_construction(3, 2, m).unwrap();
        assert_eq!(chromatic_info(&g).unwrap(), ChromaticInfo { chi: 3, surplus: 1 });
    }
    assert_eq!(
        chromatic_info(&Graph::empty(13).unwrap()),
        Err(ConstructionError::OrderTooLargeForExact(13))
    );
}

#[test]
fn chromatic_matches_oracle() {
    let mut rng = common::rng(77);
    for _ in 0..300 {
        let g = common::random_small_graph(&mut rng, 1, 7);
        assert_eq!(
            chromatic_info(&g).unwrap(),
            chromatic_oracle(&g),
            "{}",
            hajos_ramsey::graph6::encode(&g)
        );
    }
}

#[test]
fn lower_bounds_avoid_both_patterns() {
    for n in (2..=40).step_by(2) {
        let g = star_even_lower(n).unwrap();
        assert!(find_hajos(&g).is_none() && find_blue_star(&g, n).is_none());
    }
    for n in (3..=41).step_by(2) {
        let g = star_odd_lower(n).unwrap();
        assert!(find_hajos(&g).is_none() && find_blue_star(&g, n).is_none());
        assert_eq!(g.complement().max_degree(), n - 1);
    }
    for n in 1..=2 {
        let g = fan_lower(n).unwrap();
        assert!(!common::has_hajos(&g) && !common::has_blue_fan(&g, n));
    }
}
