use super::trace::components;
use super::{check_input, Outcome, Run, Target};
use crate::detect::{find_blue_fan, find_triangle, find_w4, FanWitness, Witness};
use crate::extract::trace::{CaseTag, Check, EventKind};
use crate::graph::{Edge, Graph, VertexSet};
use crate::matching::{distinct_representatives, matching_of_size, maximum_matching, Matching};

const CASE1: CaseTag = CaseTag::FanCase1BigBlueDegree;
const CASE2: CaseTag = CaseTag::FanCase2MinDegree;

/// Red Hajós graph or blue `F_n` in a host of order `4n + 2`.
///
/// Every step is guaranteed for `n >= 111`; smaller `n` may end in a gap.
pub fn extract_fan(g: &Graph, n: usize) -> Outcome {
    check_input(g, Target::Fan(n))?;
    let mut run = Run::new(g, n);
    run.event(EventKind::CaseEntered, "host at threshold order")
        .vertices("order", [g.order()]);
    let mut u = 0;
    for v in 1..g.order() {
        if g.complement_degree(v) > g.complement_degree(u) {
            u = v;
        }
    }
    if g.complement_degree(u) >= 2 * n + 2 {
        case1(&mut run, u)
    } else {
        case2(&mut run)
    }
}

fn case1(run: &mut Run, u: usize) -> Outcome {
    let g = run.g;
    let n = run.n();
    let hp = g.complement_neighbors(u);
    run.event(EventKind::CaseEntered, "blue degree at least 2n + 2")
        .vertices("u", [u])
        .set("H'", &hp)
        .check(Check::MaxComplementDegreeAt { vertex: "u".into() })
        .check(Check::ComplementNeighbors {
            set: "H'".into(),
            center: "u".into(),
        })
        .check(Check::SizeAtLeast {
            set: "H'".into(),
            min: 2 * n + 2,
        });
    let (h, map) = g.complement_induced(&hp);
    let m = maximum_matching(&h).mapped(&map);
    let covered = m.vertex_set(g.order());
    run.event(EventKind::MatchingBuilt, "maximum blue matching M in H'")
        .pairs("M", m.edges().iter().copied())
        .set("V(M)", &covered)
        .set("H'", &hp)
        .check(Check::Matching {
            pairs: "M".into(),
            blue: true,
        })
        .check(Check::Subset {
            a: "V(M)".into(),
            b: "H'".into(),
        });
    if m.len() >= n {
        let blades = m.edges()[..n].to_vec();
        return run.finish(CASE1, Witness::BlueFan(FanWitness { center: u, blades }));
    }
    let mut left = hp.clone();
    left.difference_with(&covered);
    let l = left.to_vec();
    run.event(EventKind::SetBuilt, "vertices of H' missed by M")
        .set("L", &left)
        .check(Check::RedClique { set: "L".into() })
        .check(Check::SizeAtLeast {
            set: "L".into(),
            min: 4,
        });
    match l.len() {
        6.. => run.hajos_from(CASE1, &l[..6], "six vertices of L"),
        5 => {
            let y = m
                .edges()
                .iter()
                .find_map(|e| [e.u, e.v].into_iter().find(|&y| g.degree_in(y, &left) >= 4));
            match y {
                Some(y) => {
                    let mut vs = l.clone();
                    vs.push(y);
                    run.hajos_from(CASE1, &vs, "L plus an endpoint seeing four of L")
                }
                None => Err(run.gap("no matched endpoint sees four vertices of L")),
            }
        }
        4 => {
            let ys: Vec<usize> = m
                .edges()
                .iter()
                .filter_map(|e| [e.u, e.v].into_iter().find(|&y| g.degree_in(y, &left) >= 3))
                .take(2)
                .collect();
            if ys.len() < 2 {
                return Err(run.gap("fewer than two matching edges reach three vertices of L"));
            }
            let mut vs = l.clone();
            vs.extend(ys);
            run.hajos_from(CASE1, &vs, "L plus two endpoints seeing three of L")
        }
        _ => Err(run.gap("M leaves fewer than four vertices of H'")),
    }
}

fn case2(run: &mut Run) -> Outcome {
    let g = run.g;
    let n = run.n();
    run.event(EventKind::CaseEntered, "red minimum degree at least 2n")
        .check(Check::MinDegreeAtLeast { at_least: 2 * n });
    let Some(w) = find_w4(g) else {
        return match find_blue_fan(g, n) {
            Some(f) => run.finish(CaseTag::FanNoW4DirectBlue, Witness::BlueFan(f)),
            None => Err(run.gap("no W4 and no blue fan")),
        };
    };
    let u0 = w.hub;
    let rim = w.rim;
    let wheel = [u0, rim[0], rim[1], rim[2], rim[3]];
    run.event(EventKind::SetBuilt, "W4 with hub u0 and rim u1 u2 u3 u4")
        .vertices("hub", [u0])
        .vertices("rim", rim)
        .check(Check::Wheel {
            hub: "hub".into(),
            rim: "rim".into(),
        });

    let mut outside = g.vertices();
    for v in wheel {
        outside.remove(v);
    }
    for (a, b, c) in [(rim[0], rim[1], rim[2]), (rim[1], rim[2], rim[3])] {
        if !g.has_edge(a, c) {
            continue;
        }
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let common = &g.common_neighbors(&[x, y]) & &outside;
            if let Some(u5) = common.first() {
                let mut vs = wheel.to_vec();
                vs.push(u5);
                return run.hajos_from(CASE2, &vs, "rim chord with an outside common neighbor");
            }
        }
        return Err(run.gap("rim chord but no outside common neighbor"));
    }
    run.event(EventKind::ClaimChecked, "rim diagonals are blue")
        .pairs("diagonals", [Edge::new(rim[0], rim[2]), Edge::new(rim[1], rim[3])])
        .check(Check::BlueEdges {
            pairs: "diagonals".into(),
        });

    for i in 0..4 {
        let (a, b) = (rim[i], rim[(i + 1) % 4]);
        let mut common = g.common_neighbors(&[a, b]);
        common.remove(u0);
        if let Some(u5) = common.first() {
            let mut vs = wheel.to_vec();
            vs.push(u5);
            return run.hajos_from(CASE2, &vs, "adjacent rim vertices share a second neighbor");
        }
    }
    let ev = run.event(EventKind::ClaimChecked, "adjacent rim vertices share only the hub");
    ev.vertices("hub", [u0]).vertices("none", []);
    for i in 0..4 {
        let key = format!("u{}u{}", i + 1, (i + 1) % 4 + 1);
        ev.vertices(&key, [rim[i], rim[(i + 1) % 4]])
            .check(Check::CommonNeighbors {
                set: "none".into(),
                of: key,
                excluding: Some("hub".into()),
            });
    }
    side(run, u0, rim, true)
}

/// Everything after the rim checks, for one labelling of the rim.
fn side(run: &mut Run, u0: usize, rim: [usize; 4], may_rotate: bool) -> Outcome {
    let g = run.g;
    let n = run.n();
    let [u1, u2, u3, u4] = rim;
    let mut us1 = g.common_neighbors(&[u2, u4]);
    us1.remove(u0);
    let mut us2 = g.common_neighbors(&[u1, u3]);
    us2.remove(u0);
    run.event(EventKind::SetBuilt, "U1 and U2")
        .vertices("hub", [u0])
        .vertices("u24", [u2, u4])
        .vertices("u13", [u1, u3])
        .set("U1", &us1)
        .set("U2", &us2)
        .check(Check::CommonNeighbors {
            set: "U1".into(),
            of: "u24".into(),
            excluding: Some("hub".into()),
        })
        .check(Check::CommonNeighbors {
            set: "U2".into(),
            of: "u13".into(),
            excluding: Some("hub".into()),
        })
        .check(Check::Disjoint {
            a: "U1".into(),
            b: "U2".into(),
        })
        .check(Check::Subset {
            a: "u13".into(),
            b: "U1".into(),
        })
        .check(Check::Subset {
            a: "u24".into(),
            b: "U2".into(),
        });
    let floor = (2 * n).saturating_sub(4);
    if us1.len() < floor || us2.len() < floor {
        return Err(run.gap("U1 or U2 smaller than 2n - 4"));
    }
    run.event(EventKind::ClaimChecked, "U1 and U2 have at least 2n - 4 vertices")
        .set("U1", &us1)
        .set("U2", &us2)
        .check(Check::SizeAtLeast {
            set: "U1".into(),
            min: floor,
        })
        .check(Check::SizeAtLeast {
            set: "U2".into(),
            min: floor,
        });

    for (us, inner, outer) in [(&us1, [u1, u3], [u2, u4]), (&us2, [u2, u4], [u1, u3])] {
        let mut core = us.clone();
        core.remove(inner[0]);
        core.remove(inner[1]);
        if let Some(out) = star_forest_claim(run, &core, outer) {
            return out;
        }
    }
    for (us, center, partner) in [(&us1, u1, u3), (&us2, u2, u4)] {
        if us.len() > 2 * n {
            return cyclic_fan(run, us, center, partner);
        }
    }
    run.event(EventKind::ClaimChecked, "U1 and U2 have at most 2n vertices")
        .set("U1", &us1)
        .set("U2", &us2)
        .check(Check::SizeAtMost {
            set: "U1".into(),
            max: 2 * n,
        })
        .check(Check::SizeAtMost {
            set: "U2".into(),
            max: 2 * n,
        });

    let order = g.order();
    let mut w = g.vertices();
    w.difference_with(&us1);
    w.difference_with(&us2);
    w.remove(u0);
    let mut parts = [(); 4].map(|_| VertexSet::new(order));
    for x in w.iter() {
        let to_even = g.has_edge(x, u2) || g.has_edge(x, u4);
        let to_odd = g.has_edge(x, u1) || g.has_edge(x, u3);
        let idx = match (to_even, to_odd) {
            (true, true) => return Err(run.gap("W vertex adjacent to both rim classes")),
            (true, false) => 0,
            (false, true) => 1,
            (false, false) if g.degree_in(x, &us2) >= g.degree_in(x, &us1) => 2,
            (false, false) => 3,
        };
        parts[idx].insert(x);
    }
    let [w1, w2, w3, w4] = &parts;
    run.event(EventKind::SetBuilt, "W and its parts W1 W2 W3 W4")
        .set("W", &w)
        .set("W1", w1)
        .set("W2", w2)
        .set("W3", w3)
        .set("W4", w4)
        .vertices("rim", rim)
        .vertices("u24", [u2, u4])
        .vertices("u13", [u1, u3])
        .check(Check::Disjoint {
            a: "W1".into(),
            b: "W2".into(),
        })
        .check(Check::SizeAtMost {
            set: "W".into(),
            max: 9,
        })
        .check(Check::NonAdjacentToAll {
            vertices: "W1".into(),
            set: "u13".into(),
        })
        .check(Check::NonAdjacentToAll {
            vertices: "W2".into(),
            set: "u24".into(),
        })
        .check(Check::NonAdjacentToAll {
            vertices: "W3".into(),
            set: "rim".into(),
        })
        .check(Check::NonAdjacentToAll {
            vertices: "W4".into(),
            set: "rim".into(),
        });
    if us1.len() + w1.len() + w3.len() < 2 * n + 1 {
        if may_rotate {
            run.event(EventKind::Reroute, "U1 side too small, relabel the rim")
                .vertices("rim", [u2, u3, u4, u1]);
            return side(run, u0, [u2, u3, u4, u1], false);
        }
        return Err(run.gap("neither side reaches 2n + 1 vertices"));
    }
    let t = 2 * n + 1 - us1.len();
    if !(1..=5).contains(&t) {
        return Err(run.gap("t outside 1..=5"));
    }
    let w13 = w1 | w3;
    let wsel: Vec<usize> = w13.iter().take(t).collect();
    let mut upool = us1.clone();
    upool.remove(u1);
    upool.remove(u3);
    let m1 = best_cover(g, &wsel, &upool);
    let covered = m1.vertex_set(order);
    let mut pool = upool.clone();
    pool.union_with(&run.set(wsel.iter().copied()));
    run.event(EventKind::MatchingBuilt, "M1 covering most of w1..wt")
        .set("W1+W3", &w13)
        .vertices("wsel", wsel.iter().copied())
        .set("pool", &pool)
        .set("V(M1)", &covered)
        .pairs("M1", m1.edges().iter().copied())
        .check(Check::Subset {
            a: "wsel".into(),
            b: "W1+W3".into(),
        })
        .check(Check::SizeAtLeast {
            set: "wsel".into(),
            min: t,
        })
        .check(Check::Matching {
            pairs: "M1".into(),
            blue: true,
        })
        .check(Check::Subset {
            a: "V(M1)".into(),
            b: "pool".into(),
        });

    let uncovered: Vec<usize> = wsel.iter().copied().filter(|&x| !covered.contains(x)).collect();
    let mut r = upool.clone();
    r.difference_with(&covered);
    run.event(
        EventKind::ClaimChecked,
        "uncovered w-vertices are red to each other and to R",
    )
    .vertices("uncovered", uncovered.iter().copied())
    .set("R", &r)
    .check(Check::RedClique {
        set: "uncovered".into(),
    })
    .check(Check::AdjacentToAll {
        vertices: "uncovered".into(),
        set: "R".into(),
    });
    let ctx = Sides {
        rim,
        us2: &us2,
        w1,
        r: &r,
    };
    if uncovered.len() >= 2 {
        return uncovered_exit(run, &ctx, &uncovered);
    }
    let lone = uncovered.first().copied();

    let m2 = match high_degree_cover(run, &ctx, lone) {
        Ok(m2) => m2,
        Err(done) => return done,
    };

    let mut rem = us1.clone();
    rem.union_with(&run.set(wsel.iter().copied()));
    rem.remove(u1);
    rem.difference_with(&covered);
    for e in &m2 {
        rem.remove(e.u);
        rem.remove(e.v);
    }
    run.event(EventKind::MatchingBuilt, "M2 covering the high-degree vertices")
        .pairs("M2", m2.iter().copied())
        .set("rest", &rem)
        .check(Check::Matching {
            pairs: "M2".into(),
            blue: true,
        })
        .check(Check::MaxDegreeWithin {
            set: "rest".into(),
            at_most: 1,
        });

    let mut blades: Vec<Edge> = m1.edges().iter().chain(&m2).copied().collect();
    let need = n.saturating_sub(blades.len());
    let (h, map) = g.complement_induced(&rem);
    let Some(m3) = matching_of_size(&h, need) else {
        return Err(run.gap("residual too small for M3"));
    };
    let m3 = m3.mapped(&map);
    run.event(EventKind::MatchingBuilt, "M3 in the residual")
        .pairs("M3", m3.edges().iter().copied())
        .check(Check::Matching {
            pairs: "M3".into(),
            blue: true,
        });
    blades.extend(m3.edges());
    blades.truncate(n);
    run.finish(CASE2, Witness::BlueFan(FanWitness { center: u1, blades }))
}

struct Sides<'a> {
    rim: [usize; 4],
    us2: &'a VertexSet,
    w1: &'a VertexSet,
    r: &'a VertexSet,
}

/// Blue matching covering every vertex of degree above one in what is left
/// of `U1` after `M1`, plus the lone uncovered `w` if any. `Err` carries a
/// finished outcome.
#[allow(clippy::result_large_err)]
fn high_degree_cover(run: &mut Run, s: &Sides, lone: Option<usize>) -> Result<Vec<Edge>, Outcome> {
    let g = run.g;
    let [_, u2, u3, u4] = s.rim;
    let mut m2: Vec<Edge> = Vec::new();
    let comps = components(g, s.r);
    let comp_sets: Vec<VertexSet> = comps.iter().map(|c| run.set(c.iter().copied())).collect();
    let high = |i: usize| comps[i].iter().copied().find(|&v| g.degree_in(v, &comp_sets[i]) > 1);
    if comps.len() >= 2 {
        for i in 0..comps.len() {
            if let Some(c) = high(i) {
                let j = (i + 1) % comps.len();
                let low = comps[j]
                    .iter()
                    .copied()
                    .find(|&v| g.degree_in(v, &comp_sets[j]) <= 1)
                    .expect("a star has a vertex of degree at most one");
                m2.push(Edge::new(c, low));
            }
        }
        if let Some(x) = lone {
            m2.push(Edge::new(x, u3));
        }
    } else if let Some(v0) = comps.first().and_then(|_| high(0)) {
        let leaves: Vec<usize> = (g.neighbors(v0) & s.r).iter().take(2).collect();
        let (v1, v2) = (leaves[0], leaves[1]);
        match lone {
            None => m2.push(Edge::new(v0, u3)),
            Some(x) if s.w1.contains(x) => {
                return Err(run.hajos_from(CASE2, &[x, v0, v1, v2, u2, u4], "lone w in W1 with the star of R"));
            }
            Some(x) => {
                let cand = &(g.neighbors(x) & g.neighbors(v2)) & s.us2;
                let Some(up) = cand.first() else {
                    return Err(Err(run.gap("lone w in W3 shares no U2-neighbor with a leaf")));
                };
                return Err(run.hajos_from(CASE2, &[x, v0, v1, v2, up, u2], "lone w in W3 with the star of R"));
            }
        }
    } else if let Some(x) = lone {
        m2.push(Edge::new(x, u3));
    }

    Ok(m2)
}

/// At least two of `w1..wt` are left uncovered by `M1`.
fn uncovered_exit(run: &mut Run, s: &Sides, uncovered: &[usize]) -> Outcome {
    let g = run.g;
    let [_, u2, _, u4] = s.rim;
    let rv = s.r.to_vec();
    if uncovered.len() >= 3 {
        if rv.len() < 3 {
            return Err(run.gap("fewer than three vertices left in U1"));
        }
        let mut vs = uncovered[..3].to_vec();
        vs.extend(&rv[..3]);
        return run.hajos_from(CASE2, &vs, "three uncovered w-vertices and three of R");
    }
    let (a, b) = (uncovered[0], uncovered[1]);
    let low_u2 = |x: usize| g.degree_in(x, s.us2) <= 1;
    match (s.w1.contains(a), s.w1.contains(b)) {
        (true, true) => {
            if let Some(u) = [u2, u4].into_iter().find(|&u| g.has_edge(a, u) && g.has_edge(b, u)) {
                if rv.len() < 3 {
                    return Err(run.gap("fewer than three vertices left in U1"));
                }
                return run.hajos_from(
                    CASE2,
                    &[a, b, u, rv[0], rv[1], rv[2]],
                    "two W1 vertices on a common rim vertex",
                );
            }
            if rv.len() < 2 {
                return Err(run.gap("fewer than two vertices left in U1"));
            }
            run.hajos_from(
                CASE2,
                &[a, b, u2, u4, rv[0], rv[1]],
                "two W1 vertices on different rim vertices",
            )
        }
        (false, false) => {
            let cand = &g.common_neighbors(&[a, b]) & s.us2;
            let pick = cand.iter().filter(|&z| low_u2(z)).find_map(|z| {
                let reach: Vec<usize> = (g.neighbors(z) & s.r).iter().take(3).collect();
                (reach.len() == 3).then_some((z, reach))
            });
            match pick {
                Some((z, reach)) => {
                    let mut vs = vec![z, a, b];
                    vs.extend(reach);
                    run.hajos_from(CASE2, &vs, "two W3 vertices with a low-degree U2 neighbor")
                }
                None => Err(run.gap("two W3 vertices lack a suitable U2 neighbor")),
            }
        }
        (in_w1, _) => {
            let (x1, x3) = if in_w1 { (a, b) } else { (b, a) };
            let u = if g.has_edge(x1, u2) { u2 } else { u4 };
            let cand = g.neighbors(x3) & s.us2;
            let pick = cand.iter().filter(|&z| low_u2(z)).find_map(|z| {
                let reach: Vec<usize> = (g.neighbors(z) & s.r).iter().take(2).collect();
                (reach.len() == 2).then_some((z, reach))
            });
            match pick {
                Some((z, reach)) => {
                    let mut vs = vec![z, x1, x3, u];
                    vs.extend(reach);
                    run.hajos_from(CASE2, &vs, "W1 and W3 vertex with a low-degree U2 neighbor")
                }
                None => Err(run.gap("W3 vertex lacks a suitable U2 neighbor")),
            }
        }
    }
}

/// Checks that `G[core]` is a star forest, or finishes with a Hajós graph
/// built on `outer`, both of whose vertices see all of `core`.
fn star_forest_claim(run: &mut Run, core: &VertexSet, outer: [usize; 2]) -> Option<Outcome> {
    let g = run.g;
    if let Some(p) = find_p4(g, core) {
        let vs = [outer[0], outer[1], p[0], p[1], p[2], p[3]];
        return Some(run.hajos_from(CASE2, &vs, "red P4 inside a U-set"));
    }
    let (sub, map) = g.induced(core);
    if let Some(t) = find_triangle(&sub) {
        let t = t.map(|v| map[v]);
        let mut outside = g.vertices();
        for v in t.iter().chain(&outer) {
            outside.remove(*v);
        }
        for (x, y) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let common = &g.common_neighbors(&[x, y]) & &outside;
            if let Some(x4) = common.first() {
                let vs = [t[0], t[1], t[2], x4, outer[0], outer[1]];
                return Some(run.hajos_from(CASE2, &vs, "red triangle inside a U-set"));
            }
        }
        return Some(Err(run.gap("triangle in a U-set without an outside common neighbor")));
    }
    run.event(EventKind::ClaimChecked, "U-set minus its rim pair is a star forest")
        .set("core", core)
        .check(Check::StarForest { set: "core".into() });
    None
}

/// A path `a b c d` of four distinct vertices in `G[s]`.
fn find_p4(g: &Graph, s: &VertexSet) -> Option<[usize; 4]> {
    for b in s.iter() {
        let nb = g.neighbors(b) & s;
        for c in nb.iter() {
            let nc = g.neighbors(c) & s;
            for a in nb.iter().filter(|&a| a != c) {
                if let Some(d) = nc.iter().find(|&d| d != b && d != a) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Blue fan at `center` inside `us`, which has at least `2n + 1` vertices
/// and whose graph minus `center` is a star forest with `partner` isolated.
fn cyclic_fan(run: &mut Run, us: &VertexSet, center: usize, partner: usize) -> Outcome {
    let g = run.g;
    let n = run.n();
    let mut rest = us.clone();
    rest.remove(center);
    let comps: Vec<Vec<usize>> = components(g, &rest).into_iter().filter(|c| c.len() > 1).collect();
    let hubs: Vec<usize> = comps
        .iter()
        .map(|c| {
            let cs = run.set(c.iter().copied());
            let mut best = c[0];
            for &v in c {
                if g.degree_in(v, &cs) > g.degree_in(best, &cs) {
                    best = v;
                }
            }
            best
        })
        .collect();
    let mut blades = Vec::new();
    match comps.len() {
        0 => {}
        1 => blades.push(Edge::new(hubs[0], partner)),
        k => {
            for i in 0..k {
                let next = (i + 1) % k;
                let leaf = comps[next]
                    .iter()
                    .copied()
                    .find(|&v| v != hubs[next])
                    .expect("component has two vertices");
                blades.push(Edge::new(hubs[i], leaf));
            }
        }
    }
    let mut left = rest.clone();
    for e in &blades {
        left.remove(e.u);
        left.remove(e.v);
    }
    let lv = left.to_vec();
    blades.extend(lv.chunks_exact(2).map(|p| Edge::new(p[0], p[1])));
    run.event(
        EventKind::MatchingBuilt,
        "cyclic component matching in an oversized U-set",
    )
    .vertices("center", [center])
    .set("U", us)
    .pairs("matching", blades.iter().copied())
    .check(Check::SizeAtLeast {
        set: "U".into(),
        min: 2 * n + 1,
    })
    .check(Check::Matching {
        pairs: "matching".into(),
        blue: true,
    });
    if blades.len() < n {
        return Err(run.gap("cyclic matching shorter than n"));
    }
    blades.truncate(n);
    run.finish(CASE2, Witness::BlueFan(FanWitness { center, blades }))
}

/// Blue matching in `wsel + upool`, each edge touching `wsel`, covering as
/// many of `wsel` as possible. Ties go to the lexicographically first
/// covered subset.
fn best_cover(g: &Graph, wsel: &[usize], upool: &VertexSet) -> Matching {
    let t = wsel.len();
    for size in (0..=t).rev() {
        let mut subsets: Vec<Vec<usize>> = (0u32..1 << t)
            .filter(|m| m.count_ones() as usize == size)
            .map(|m| (0..t).filter(|&i| m >> i & 1 == 1).collect())
            .collect();
        subsets.sort();
        for idx in subsets {
            let chosen: Vec<usize> = idx.iter().map(|&i| wsel[i]).collect();
            let mut singles = Vec::new();
            let mut pairs = Vec::new();
            if let Some(m) = cover(g, &chosen, upool, &mut singles, &mut pairs) {
                return Matching::from_edges(m);
            }
        }
    }
    Matching::new()
}

/// Pairs some of `rest` with each other (blue) and sends the others to
/// distinct blue neighbors in `upool`.
fn cover(
    g: &Graph,
    rest: &[usize],
    upool: &VertexSet,
    singles: &mut Vec<usize>,
    pairs: &mut Vec<Edge>,
) -> Option<Vec<Edge>> {
    let Some((&x, tail)) = rest.split_first() else {
        let sets: Vec<VertexSet> = singles.iter().map(|&w| &g.complement_neighbors(w) & upool).collect();
        let reps = distinct_representatives(&sets)?;
        let mut out = pairs.clone();
        out.extend(singles.iter().zip(reps).map(|(&w, u)| Edge::new(w, u)));
        return Some(out);
    };
    singles.push(x);
    let found = cover(g, tail, upool, singles, pairs);
    singles.pop();
    if found.is_some() {
        return found;
    }
    for (j, &y) in tail.iter().enumerate() {
        if g.has_complement_edge(x, y) {
            let mut others = tail.to_vec();
            others.remove(j);
            pairs.push(Edge::new(x, y));
            let found = cover(g, &others, upool, singles, pairs);
            pairs.pop();
            if found.is_some() {
                return found;
            }
        }
    }
    None
}
