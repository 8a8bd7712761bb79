//! Blossom matching against the brute-force oracle, and blue matchings.

use hajos_ramsey::matching::{brute_force_maximum_matching, matching_of_size, maximum_matching};
use hajos_ramsey::Graph;

fn main() {
    let petersen = Graph::from_edges(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    )
    .unwrap();
    let m = maximum_matching(&petersen);
    println!("Petersen: {:?}", m.edges());
    println!(
        "oracle size: {}",
        brute_force_maximum_matching(&petersen).unwrap().len()
    );

    let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    println!("C5: {}", maximum_matching(&c5).len());

    // a blue matching is a matching in the complement
    let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3)).unwrap();
    let blue = k33.complement();
    println!(
        "blue matching of size 2 in K_3,3: {:?}",
        matching_of_size(&blue, 2).map(|m| m.into_edges())
    );
    println!("blue matching of size 3: {:?}", matching_of_size(&blue, 3));
}
