use super::{check_input, Outcome, Run, Target};
use crate::detect::{
    find_blue_star, find_k4, find_k5_minus_e, find_triangle, hajos_on_triangle, HajosEmbedding, Witness,
};
use crate::extract::trace::{CaseTag, Check, EventKind};
use crate::graph::{Edge, Graph};

/// Red Hajós graph or blue `K_{1,n}` in a host of order `2n + 2` (even `n`)
/// or `2n + 3` (odd `n`).
pub fn extract_star(g: &Graph, n: usize) -> Outcome {
    check_input(g, Target::Star(n))?;
    let mut run = Run::new(g, n);
    let odd = n % 2;
    run.event(EventKind::CaseEntered, "host at threshold order")
        .vertices("order", [g.order()]);

    if let Some(s) = find_blue_star(g, n) {
        return run.finish(CaseTag::StarDirectBlue, Witness::BlueStar(s));
    }
    run.event(EventKind::ClaimChecked, "no blue star, so red degrees are large")
        .check(Check::MaxComplementDegreeAtMost { at_most: n - 1 })
        .check(Check::MinDegreeAtLeast { at_least: n + 2 + odd });

    if n == 2 {
        return special_n2(&mut run);
    }
    match find_k4(g) {
        None => case1(&mut run),
        Some(q) => match find_k5_minus_e(g) {
            Some((clique, fifth)) => case2(&mut run, clique, fifth, CaseTag::StarCase2K5e),
            None if odd == 0 => case3_even(&mut run, q),
            None => case3_odd(&mut run, q),
        },
    }
}

/// Order 6 with blue degrees at most one: pair up blue edges, then the
/// leftover vertices, and read the Hajós graph off the resulting `K_{2,2,2}`.
fn special_n2(run: &mut Run) -> Outcome {
    let g = run.g;
    let mut parts: Vec<Edge> = g.complement().edges().collect();
    let mut left = g.vertices();
    for e in &parts {
        left.remove(e.u);
        left.remove(e.v);
    }
    let rest = left.to_vec();
    parts.extend(rest.chunks(2).map(|c| Edge::new(c[0], c[1])));
    let [a, b, c] = [parts[0], parts[1], parts[2]];
    run.event(EventKind::SetBuilt, "parts of K_2,2,2")
        .pairs("parts", parts.iter().copied())
        .vertices("all", parts.iter().flat_map(|e| [e.u, e.v]))
        .check(Check::Distinct { set: "all".into() })
        .check(Check::SizeAtLeast {
            set: "all".into(),
            min: 6,
        });
    let h = HajosEmbedding {
        triangle: [a.u, b.u, c.u],
        apexes: [c.v, b.v, a.v],
    };
    run.finish(CaseTag::StarSpecialN2, Witness::RedHajos(h))
}

fn case1(run: &mut Run) -> Outcome {
    let g = run.g;
    run.event(EventKind::CaseEntered, "no K4");
    let Some(t) = find_triangle(g) else {
        return Err(run.gap("no triangle"));
    };
    let ev = run.event(EventKind::SetBuilt, "triangle and edge neighborhoods");
    ev.vertices("triangle", t)
        .check(Check::RedClique { set: "triangle".into() });
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let mut common = g.common_neighbors(&[t[i], t[j]]);
        common.remove(t[k]);
        let key = format!("n{}{}", i + 1, j + 1);
        let of = format!("of{}{}", i + 1, j + 1);
        let ex = format!("not{}", k + 1);
        ev.set(&key, &common)
            .vertices(&of, [t[i], t[j]])
            .vertices(&ex, [t[k]])
            .check(Check::CommonNeighbors {
                set: key.clone(),
                of,
                excluding: Some(ex),
            })
            .check(Check::SizeAtLeast { set: key, min: 1 });
    }
    match hajos_on_triangle(g, t) {
        Some(h) => run.finish(CaseTag::StarCase1NoK4, Witness::RedHajos(h)),
        None => Err(run.gap("edge neighborhoods have no distinct representatives")),
    }
}

/// `clique` is a K4 and `fifth` is adjacent to at least three of its vertices.
fn case2(run: &mut Run, clique: [usize; 4], fifth: usize, tag: CaseTag) -> Outcome {
    let g = run.g;
    run.event(EventKind::CaseEntered, "K5 - e present")
        .vertices("clique", clique)
        .vertices("fifth", [fifth])
        .check(Check::RedClique { set: "clique".into() });
    let mut outside = g.vertices();
    for v in clique.iter().chain([&fifth]) {
        outside.remove(*v);
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let mut common = g.common_neighbors(&[clique[i], clique[j]]);
            common.intersect_with(&outside);
            if let Some(v6) = common.first() {
                run.event(EventKind::SetBuilt, "outside common neighbor of a clique pair")
                    .vertices("pair", [clique[i], clique[j]])
                    .vertices("v6", [v6])
                    .check(Check::AdjacentToAll {
                        vertices: "v6".into(),
                        set: "pair".into(),
                    });
                let mut support = clique.to_vec();
                support.extend([fifth, v6]);
                return run.hajos_from(tag, &support, "K5 - e plus v6");
            }
        }
    }
    Err(run.gap("no clique pair shares an outside neighbor"))
}

fn case3_even(run: &mut Run, q: [usize; 4]) -> Outcome {
    let g = run.g;
    run.event(EventKind::CaseEntered, "K4 present, no K5 - e, n even")
        .vertices("clique", q)
        .check(Check::RedClique { set: "clique".into() });
    let mut rest = g.vertices();
    for v in q {
        rest.remove(v);
    }
    let mut found = None;
    'pairs: for i in 0..4 {
        for j in i + 1..4 {
            let common = &g.common_neighbors(&[q[i], q[j]]) & &rest;
            if let Some(w5) = common.first() {
                found = Some((i, j, w5));
                break 'pairs;
            }
        }
    }
    let Some((i, j, w5)) = found else {
        return Err(run.gap("no pair of the K4 shares an outside neighbor"));
    };
    let others: Vec<usize> = (0..4).filter(|&k| k != i && k != j).map(|k| q[k]).collect();
    let (w1, w2, w3, w4) = (q[i], q[j], others[0], others[1]);
    if g.has_edge(w3, w5) || g.has_edge(w4, w5) {
        return Err(run.gap("w5 sees three clique vertices"));
    }
    let mut x = rest.clone();
    x.remove(w5);
    run.event(EventKind::SetBuilt, "relabelled K4 and X")
        .vertices("w", [w1, w2, w3, w4, w5])
        .vertices("w5", [w5])
        .vertices("w12", [w1, w2])
        .set("X", &x)
        .check(Check::AdjacentToAll {
            vertices: "w5".into(),
            set: "w12".into(),
        })
        .check(Check::Disjoint {
            a: "w".into(),
            b: "X".into(),
        });
    for wa in [w1, w2] {
        let common = &(g.neighbors(wa) & g.neighbors(w3)) & &x;
        if let Some(w6) = common.first() {
            return run.hajos_from(CaseTag::StarCase3K4Even, &[w1, w2, w3, w4, w5, w6], "w1..w6");
        }
    }
    let common = g.common_neighbors(&[w1, w2]);
    run.event(EventKind::ClaimChecked, "w3 shares no X-neighbor with w1 or w2")
        .set("cn12", &common)
        .vertices("of", [w1, w2])
        .check(Check::CommonNeighbors {
            set: "cn12".into(),
            of: "of".into(),
            excluding: None,
        });
    // red path x - y - z inside the common neighborhood
    for y in common.iter() {
        let around = g.neighbors(y) & &common;
        let mut it = around.iter();
        if let (Some(xv), Some(z)) = (it.next(), it.next()) {
            run.event(EventKind::Reroute, "red P3 in common neighborhood of w1, w2")
                .vertices("path", [xv, y, z]);
            return case2(run, [w1, w2, xv, y], z, CaseTag::StarCase2K5e);
        }
    }
    Err(run.gap("common neighborhood of w1, w2 has no red P3"))
}

fn case3_odd(run: &mut Run, q: [usize; 4]) -> Outcome {
    let g = run.g;
    let [w1, w2, w3, w4] = q;
    let mut y = g.vertices();
    for v in q {
        y.remove(v);
    }
    run.event(EventKind::CaseEntered, "K4 present, no K5 - e, n odd")
        .vertices("clique", q)
        .set("Y", &y)
        .check(Check::RedClique { set: "clique".into() });
    let Some(w5) = (&g.common_neighbors(&[w1, w2]) & &y).first() else {
        return Err(run.gap("w1, w2 share no neighbor in Y"));
    };
    let mut c23 = &g.common_neighbors(&[w2, w3]) & &y;
    c23.remove(w5);
    let Some(w6) = c23.first() else {
        run.event(EventKind::Reroute, "w5 sees w1, w2, w3").vertices("w5", [w5]);
        return case2(run, q, w5, CaseTag::StarCase2K5e);
    };
    run.event(EventKind::SetBuilt, "w5 and w6")
        .vertices("w5", [w5])
        .vertices("w6", [w6])
        .vertices("w12", [w1, w2])
        .vertices("w23", [w2, w3])
        .check(Check::AdjacentToAll {
            vertices: "w5".into(),
            set: "w12".into(),
        })
        .check(Check::AdjacentToAll {
            vertices: "w6".into(),
            set: "w23".into(),
        });
    let h = HajosEmbedding {
        triangle: [w1, w2, w3],
        apexes: [w5, w4, w6],
    };
    run.finish(CaseTag::StarCase3K4Odd, Witness::RedHajos(h))
}
