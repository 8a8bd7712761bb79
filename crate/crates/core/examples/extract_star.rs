//! Witness extraction for the star at the threshold order, with its trace.

use hajos_ramsey::extract::{extract_star, replay_trace, Target};
use hajos_ramsey::verify::sweep_graph;

fn main() {
    let n = 100;
    for trial in 0..3 {
        let g = sweep_graph(Target::Star(n), trial, 42);
        let out = extract_star(&g, n).expect("threshold host");
        println!(
            "trial {trial}: {} edges, case {}, {} trace events, replay {}",
            g.edge_count(),
            out.trace.terminal.unwrap(),
            out.trace.events.len(),
            replay_trace(&g, &out.trace)
        );
        println!("  {}", serde_json::to_string(&out.witness).unwrap());
    }

    let g = sweep_graph(Target::Star(3), 4, 1);
    let out = extract_star(&g, 3).unwrap();
    print!("{}", out.trace.to_json_lines());
}
