//! DIMACS emission and evaluation of the star arrowing formula.

use hajos_ramsey::construct::{star_even_lower, star_odd_lower};
use hajos_ramsey::sat::{
    assignment_from_graph, emit_star_arrowing_cnf, eval_cnf, hajos_automorphism_count, CnfFormula,
};

fn main() {
    println!("|Aut(H_a)| = {}", hajos_automorphism_count());
    for (order, n) in [(5, 2), (6, 2), (8, 3), (9, 3)] {
        let (f, map) = emit_star_arrowing_cnf(order, n).unwrap();
        println!(
            "N = {order}, n = {n}: {} vars ({} edges), {} clauses",
            f.num_vars,
            map.edge_count(),
            f.clauses.len()
        );
    }

    let (f, map) = emit_star_arrowing_cnf(5, 2).unwrap();
    let a = assignment_from_graph(&star_even_lower(2).unwrap(), &map).unwrap();
    println!("K_2,2,1 satisfies N = 5: {}", eval_cnf(&f, &a).unwrap());

    let (f, map) = emit_star_arrowing_cnf(8, 3).unwrap();
    let a = assignment_from_graph(&star_odd_lower(3).unwrap(), &map).unwrap();
    println!("two joined matchings satisfy N = 8: {}", eval_cnf(&f, &a).unwrap());

    let text = f.to_dimacs();
    assert_eq!(CnfFormula::parse_dimacs(&text).unwrap(), f);
    for line in text
        .lines()
        .filter(|l| l.starts_with('p') || l.starts_with("c edge 0 "))
    {
        println!("{line}");
    }
}
