//! Pattern detectors on a few small graphs.

use hajos_ramsey::construct::{fan_lower, hajos_graph, star_odd_lower};
use hajos_ramsey::detect::{find_blue_fan, find_blue_star, find_hajos, find_k4, find_w4, verify_witness};
use hajos_ramsey::{Graph, Witness};

fn main() {
    let h = find_hajos(&hajos_graph()).unwrap();
    println!(
        "Hajos graph contains itself: triangle {:?}, apexes {:?}",
        h.triangle, h.apexes
    );

    let g = star_odd_lower(3).unwrap();
    println!(
        "star_odd_lower(3): hajos {:?}, blue K_1,3 {:?}",
        find_hajos(&g),
        find_blue_star(&g, 3)
    );
    println!(
        "  but a K4: {:?}, and a blue K_1,2: {:?}",
        find_k4(&g),
        find_blue_star(&g, 2)
    );

    let g = fan_lower(2).unwrap();
    println!(
        "fan_lower(2): W4 {:?}, blue F_2 {:?}",
        find_w4(&g),
        find_blue_fan(&g, 2)
    );

    let empty = Graph::empty(7).unwrap();
    let fan = find_blue_fan(&empty, 3).unwrap();
    let w = Witness::BlueFan(fan);
    println!(
        "empty 7-vertex graph: {} valid = {}",
        serde_json::to_string(&w).unwrap(),
        verify_witness(&empty, &w, 3)
    );
}
