//! Exhaustive and structural certification of the small star cases.

use hajos_ramsey::construct::star_even_lower;
use hajos_ramsey::extract::Target;
use hajos_ramsey::graph6;
use hajos_ramsey::verify::{
    random_sweep, verify_all_colorings, verify_construction, verify_star_upper_via_structure, ConstructionKind,
};

fn main() {
    let upper = verify_all_colorings(6, Target::Star(2)).unwrap();
    println!(
        "{}: {}/{} {:?}",
        upper.statement, upper.passed, upper.total, upper.case_histogram
    );

    let lower = verify_all_colorings(5, Target::Star(2)).unwrap();
    println!(
        "order 5: {} colorings avoid both, e.g. {}",
        lower.failed, lower.counterexamples[0]
    );
    println!("K_2,2,1 is {}", graph6::encode(&star_even_lower(2).unwrap()));

    let structure = verify_star_upper_via_structure(3).unwrap();
    println!("{}: {}/{}", structure.statement, structure.passed, structure.total);
    let c = verify_construction(3, ConstructionKind::StarOdd).unwrap();
    println!("{}: {}", c.statement, c.certified());

    let sweep = random_sweep(Target::Star(10), 200, 5).unwrap().without_timing();
    println!("{}", serde_json::to_string_pretty(&sweep).unwrap());
}
