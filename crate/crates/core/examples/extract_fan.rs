//! Witness extraction for the fan on 446-vertex hosts.

use std::time::Instant;

use hajos_ramsey::construct::{disjoint_union, fan_lower};
use hajos_ramsey::extract::{extract_fan, replay_trace, Target};
use hajos_ramsey::verify::sweep_graph;
use hajos_ramsey::Graph;

fn main() {
    let n = 111;
    let g = disjoint_union(&fan_lower(n).unwrap(), &Graph::empty(1).unwrap()).unwrap();
    let out = extract_fan(&g, n).unwrap();
    println!(
        "lower bound plus a vertex: {} via {}",
        out.witness.kind(),
        out.trace.terminal.unwrap()
    );

    for trial in [0, 4, 8] {
        let g = sweep_graph(Target::Fan(n), trial, 7);
        let start = Instant::now();
        let out = extract_fan(&g, n).unwrap();
        println!(
            "trial {trial}: {} via {} in {:?}, replay {}",
            out.witness.kind(),
            out.trace.terminal.unwrap(),
            start.elapsed(),
            replay_trace(&g, &out.trace)
        );
    }

    // below 111 the extractor is best effort
    let g = sweep_graph(Target::Fan(5), 3, 7);
    match extract_fan(&g, 5) {
        Ok(out) => println!("n = 5: {}", out.trace.terminal.unwrap()),
        Err(e) => println!("n = 5: {e}"),
    }
}
