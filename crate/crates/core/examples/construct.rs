//! Lower-bound colorings and the thresholds they witness.

use hajos_ramsey::construct::{
    burr_threshold, chromatic_info, fan_lower, hajos_graph, star_even_lower, star_odd_lower,
};
use hajos_ramsey::graph6;

fn main() {
    let info = chromatic_info(&hajos_graph()).unwrap();
    println!("Hajos graph: chi = {}, surplus = {}", info.chi, info.surplus);

    for n in [2, 4, 6] {
        let g = star_even_lower(n).unwrap();
        println!(
            "K_1,{n}: K_{{n,n,1}} on {} vertices, bound {}  {}",
            g.order(),
            burr_threshold(info.chi, info.surplus, n + 1),
            graph6::encode(&g)
        );
    }
    for n in [3, 5] {
        let g = star_odd_lower(n).unwrap();
        println!(
            "K_1,{n}: two matchings joined, {} vertices, blue degree {}  {}",
            g.order(),
            g.complement().max_degree(),
            graph6::encode(&g)
        );
    }
    let g = fan_lower(111).unwrap();
    println!(
        "F_111: {} vertices, bound {}",
        g.order(),
        burr_threshold(3, 2, 2 * 111 + 1)
    );
}
