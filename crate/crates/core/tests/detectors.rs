mod common;

use hajos_ramsey::construct::{complete_multipartite, fan_graph, fan_lower, hajos_graph, star_odd_lower, wheel_w4};
use hajos_ramsey::detect::{
    find_blue_fan, find_blue_star, find_hajos, find_k4, find_k5_minus_e, find_triangle, find_w4, verify_witness,
};
use hajos_ramsey::{graph6, Edge, FanWitness, Graph, HajosEmbedding, StarWitness, Witness};
use rand::seq::SliceRandom;
use rand::Rng;

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn k222() -> Graph {
    complete_multipartite(&[2, 2, 2]).unwrap()
}

#[test]
fn triangle_examples() {
    assert_eq!(find_triangle(&Graph::complete(3).unwrap()), Some([0, 1, 2]));
    assert_eq!(find_triangle(&cycle(5)), None);
    assert_eq!(find_triangle(&hajos_graph()), Some([0, 1, 2]));
}

#[test]
fn clique_examples() {
    let k5 = Graph::complete(5).unwrap();
    assert!(find_k4(&k5).is_some());
    let (q, fifth) = find_k5_minus_e(&k5).unwrap();
    assert!(q.iter().filter(|&&v| k5.has_edge(v, fifth)).count() >= 3);
    let pendant = Graph::from_edges(5, common::K4_EDGES.iter().copied().chain([(3, 4)])).unwrap();
    assert_eq!(find_k4(&pendant), Some([0, 1, 2, 3]));
    assert_eq!(find_k5_minus_e(&pendant), None);
    assert_eq!(find_k4(&k222()), None);
    assert!(!common::red_contains(&k222(), 4, &common::K4_EDGES));
}

#[test]
fn wheel_examples() {
    for g in [wheel_w4(), Graph::complete(5).unwrap(), k222()] {
        let w = find_w4(&g).unwrap();
        assert!(w.is_valid_in(&g));
        assert!(common::red_contains(&g, 5, &common::W4_EDGES));
    }
}

#[test]
fn hajos_examples() {
    let h = find_hajos(&hajos_graph()).unwrap();
    assert_eq!(
        h,
        HajosEmbedding {
            triangle: [0, 1, 2],
            apexes: [3, 4, 5]
        }
    );
    assert!(find_hajos(&k222()).unwrap().is_valid_in(&k222()));
    let k331 = complete_multipartite(&[3, 3, 1]).unwrap();
    assert_eq!(find_hajos(&k331), None);
    assert!(!common::has_hajos(&k331));
}

#[test]
fn blue_star_examples() {
    for n in 1..8 {
        let s = find_blue_star(&Graph::empty(n + 1).unwrap(), n).unwrap();
        assert_eq!(
            s,
            StarWitness {
                center: 0,
                leaves: (1..=n).collect()
            }
        );
        assert_eq!(find_blue_star(&Graph::complete(n + 1).unwrap(), n), None);
    }
    assert_eq!(find_blue_star(&star_odd_lower(3).unwrap(), 3), None);
}

fn component_sizes(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut sizes = Vec::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for w in g.neighbors(v).iter() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

#[test]
fn blue_fan_examples() {
    let f = find_blue_fan(&Graph::empty(9).unwrap(), 4).unwrap();
    assert_eq!(f.center, 0);
    for n in 1..6 {
        let blue = fan_graph(n).unwrap();
        assert!(find_blue_fan(&blue.complement(), n).is_some());
    }
    let g = fan_lower(5).unwrap();
    assert_eq!(find_blue_fan(&g, 5), None);
    // a blue F_5 needs 11 vertices in one blue component
    assert_eq!(component_sizes(&g.complement()), vec![1, 10, 10]);
}

#[test]
fn witness_validation() {
    let h = hajos_graph();
    assert!(verify_witness(&h, &Witness::RedHajos(find_hajos(&h).unwrap()), 1));
    let e = Graph::empty(7).unwrap();
    let overlapping = Witness::BlueFan(FanWitness {
        center: 0,
        blades: vec![Edge::new(1, 2), Edge::new(2, 3)],
    });
    assert!(!verify_witness(&e, &overlapping, 2));
    let short = Witness::BlueStar(StarWitness {
        center: 0,
        leaves: vec![1, 2],
    });
    assert!(verify_witness(&e, &short, 2));
    assert!(!verify_witness(&e, &short, 3));
    assert!(!verify_witness(&Graph::complete(7).unwrap(), &short, 2));
}

#[test]
fn witness_json_fields() {
    let h = Witness::RedHajos(HajosEmbedding {
        triangle: [0, 1, 2],
        apexes: [3, 4, 5],
    });
    assert_eq!(
        serde_json::to_string(&h).unwrap(),
        r#"{"kind":"red_hajos","vertices":{"triangle":[0,1,2],"apexes":[3,4,5]}}"#
    );
    let s = Witness::BlueStar(StarWitness {
        center: 4,
        leaves: vec![0, 1],
    });
    assert_eq!(
        serde_json::to_string(&s).unwrap(),
        r#"{"kind":"blue_star","vertices":{"center":4,"leaves":[0,1]}}"#
    );
    let f = Witness::BlueFan(FanWitness {
        center: 0,
        blades: vec![Edge::new(1, 2)],
    });
    let text = serde_json::to_string(&f).unwrap();
    assert_eq!(text, r#"{"kind":"blue_fan","vertices":{"center":0,"blades":[[1,2]]}}"#);
    assert_eq!(serde_json::from_str::<Witness>(&text).unwrap(), f);
}

/// Every detector against the embedding oracle.
fn check_against_oracle(g: &Graph) {
    let ctx = graph6::encode(g);
    assert_eq!(
        find_triangle(g).is_some(),
        common::red_contains(g, 3, &[(0, 1), (0, 2), (1, 2)]),
        "{ctx}"
    );
    assert_eq!(
        find_k4(g).is_some(),
        common::red_contains(g, 4, &common::K4_EDGES),
        "{ctx}"
    );
    assert_eq!(
        find_k5_minus_e(g).is_some(),
        common::red_contains(g, 5, &common::K5E_EDGES),
        "{ctx}"
    );
    assert_eq!(
        find_w4(g).is_some(),
        common::red_contains(g, 5, &common::W4_EDGES),
        "{ctx}"
    );
    let h = find_hajos(g);
    assert_eq!(h.is_some(), common::has_hajos(g), "{ctx}");
    if let Some(h) = h {
        assert!(verify_witness(g, &Witness::RedHajos(h), 1));
    }
    for n in 1..=3 {
        let s = find_blue_star(g, n);
        assert_eq!(s.is_some(), common::has_blue_star(g, n), "{ctx}");
        if let Some(s) = s {
            assert!(verify_witness(g, &Witness::BlueStar(s), n));
        }
        let f = find_blue_fan(g, n);
        assert_eq!(f.is_some(), common::has_blue_fan(g, n), "{ctx} n={n}");
        if let Some(f) = f {
            assert!(verify_witness(g, &Witness::BlueFan(f), n));
        }
    }
}

#[test]
fn complete_on_all_graphs_up_to_six() {
    for order in 0..=6usize {
        let edges = order * order.saturating_sub(1) / 2;
        for mask in 0..1u64 << edges {
            check_against_oracle(&common::from_mask(order, mask));
        }
    }
}

#[test]
fn complete_on_random_graphs_up_to_nine() {
    let mut rng = common::rng(9);
    for _ in 0..1500 {
        let g = common::random_small_graph(&mut rng, 7, 9);
        check_against_oracle(&g);
    }
}

#[test]
fn triangle_is_lexicographically_least() {
    let mut rng = common::rng(3);
    for _ in 0..500 {
        let g = common::random_small_graph(&mut rng, 0, 12);
        let n = g.order();
        let brute = (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
            .find(|&[a, b, c]| g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c));
        assert_eq!(find_triangle(&g), brute);
    }
}

#[test]
fn blue_fan_matches_neighbourhood_matching() {
    let mut rng = common::rng(12);
    for _ in 0..400 {
        let g = common::random_small_graph(&mut rng, 1, 12);
        let n = g.order();
        for k in 1..=4 {
            let oracle = (0..n).any(|v| {
                let nb: Vec<usize> = (0..n).filter(|&w| w != v && !g.has_edge(v, w)).collect();
                common::matching_number(nb.len(), &|a, b| !g.has_edge(nb[a], nb[b])) >= k
            });
            assert_eq!(find_blue_fan(&g, k).is_some(), oracle);
        }
    }
}

#[test]
fn invariant_under_relabelling() {
    let mut rng = common::rng(5);
    for _ in 0..300 {
        let g = common::random_small_graph(&mut rng, 5, 14);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        let p = g.permute(&perm);
        assert_eq!(find_hajos(&g).is_some(), find_hajos(&p).is_some());
        assert_eq!(find_k4(&g).is_some(), find_k4(&p).is_some());
        assert_eq!(find_k5_minus_e(&g).is_some(), find_k5_minus_e(&p).is_some());
        assert_eq!(find_w4(&g).is_some(), find_w4(&p).is_some());
        assert_eq!(find_blue_star(&g, 3).is_some(), find_blue_star(&p, 3).is_some());
        assert_eq!(find_blue_fan(&g, 2).is_some(), find_blue_fan(&p, 2).is_some());
    }
}

#[test]
fn monotone_under_edge_changes() {
    let mut rng = common::rng(8);
    for _ in 0..300 {
        let g = common::random_small_graph(&mut rng, 6, 14);
        let n = g.order();
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u == v {
            continue;
        }
        let more = g.with_edge(u, v);
        let fewer = g.without_edge(u, v);
        if find_hajos(&g).is_some() {
            assert!(find_hajos(&more).is_some());
        }
        if find_w4(&g).is_some() {
            assert!(find_w4(&more).is_some());
        }
        if find_blue_fan(&g, 2).is_some() {
            assert!(find_blue_fan(&fewer, 2).is_some());
        }
        if find_blue_star(&g, 3).is_some() {
            assert!(find_blue_star(&fewer, 3).is_some());
        }
    }
}
