//! graph6 encoding and decoding.

use hajos_ramsey::construct::hajos_graph;
use hajos_ramsey::{graph6, Graph};

fn main() {
    for g in [Graph::empty(1).unwrap(), Graph::complete(2).unwrap(), hajos_graph()] {
        let s = graph6::encode(&g);
        println!("order {} with {} edges -> {s}", g.order(), g.edge_count());
        assert_eq!(graph6::decode(&s).unwrap(), g);
    }
    let big = Graph::from_fn(446, |u, v| (u * 7 + v * 3) % 5 == 0).unwrap();
    let s = graph6::encode(&big);
    println!("446 vertices: {} bytes, starts {}", s.len(), &s[..8]);
    println!("bad input: {}", graph6::decode("A~").unwrap_err());
}
