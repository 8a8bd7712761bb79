//! Fixed-pattern detectors and witness validation.
//!
//! All searches use subgraph (not induced) semantics and scan vertices in
//! ascending order, so every detector returns the lexicographically first
//! embedding its scan meets.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, VertexSet};
use crate::matching::matching_of_size;

/// Hajós graph on a triangle `a, b, c` with apexes `d_ab, d_ac, d_bc`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HajosEmbedding {
    pub triangle: [usize; 3],
    pub apexes: [usize; 3],
}

impl HajosEmbedding {
    pub fn vertices(&self) -> [usize; 6] {
        let [a, b, c] = self.triangle;
        let [x, y, z] = self.apexes;
        [a, b, c, x, y, z]
    }

    /// The nine edges of the embedding.
    pub fn edges(&self) -> [(usize, usize); 9] {
        let [a, b, c] = self.triangle;
        let [dab, dac, dbc] = self.apexes;
        [
            (a, b),
            (a, c),
            (b, c),
            (dab, a),
            (dab, b),
            (dac, a),
            (dac, c),
            (dbc, b),
            (dbc, c),
        ]
    }

    pub fn mapped(&self, map: &[usize]) -> HajosEmbedding {
        HajosEmbedding {
            triangle: self.triangle.map(|v| map[v]),
            apexes: self.apexes.map(|v| map[v]),
        }
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = self.vertices();
        distinct_in_range(&vs, g.order()) && self.edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// Wheel `W_4`: `hub` joined to the 4-cycle `rim[0] rim[1] rim[2] rim[3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct W4Embedding {
    pub hub: usize,
    pub rim: [usize; 4],
}

impl W4Embedding {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut vs = vec![self.hub];
        vs.extend(self.rim);
        distinct_in_range(&vs, g.order())
            && self.rim.iter().all(|&r| g.has_edge(self.hub, r))
            && (0..4).all(|i| g.has_edge(self.rim[i], self.rim[(i + 1) % 4]))
    }
}

/// Blue star: `center` joined in the complement to every leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarWitness {
    pub center: usize,
    pub leaves: Vec<usize>,
}

/// Blue fan: `center` plus `blades`, each blade a complement edge whose
/// endpoints are complement-adjacent to the center.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FanWitness {
    pub center: usize,
    pub blades: Vec<Edge>,
}

/// One side of the arrowing dichotomy.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertices", rename_all = "snake_case")]
pub enum Witness {
    RedHajos(HajosEmbedding),
    BlueStar(StarWitness),
    BlueFan(FanWitness),
}

impl Witness {
    pub fn kind(&self) -> &'static str {
        match self {
            Witness::RedHajos(_) => "red_hajos",
            Witness::BlueStar(_) => "blue_star",
            Witness::BlueFan(_) => "blue_fan",
        }
    }

    pub fn is_red(&self) -> bool {
        matches!(self, Witness::RedHajos(_))
    }
}

fn distinct_in_range(vs: &[usize], order: usize) -> bool {
    vs.iter().all(|&v| v < order) && vs.iter().enumerate().all(|(i, v)| !vs[..i].contains(v))
}

/// Restricts `s` to members strictly greater than `v`.
fn above(s: &VertexSet, v: usize) -> impl Iterator<Item = usize> + '_ {
    s.iter().skip_while(move |&x| x <= v)
}

pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for a in 0..g.order() {
        for b in above(g.neighbors(a), a) {
            let common = g.neighbors(a) & g.neighbors(b);
            let c = above(&common, b).next();
            if let Some(c) = c {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// All triangles `a < b < c` in lexicographic order.
pub fn triangles(g: &Graph) -> impl Iterator<Item = [usize; 3]> + '_ {
    (0..g.order()).flat_map(move |a| {
        above(g.neighbors(a), a).flat_map(move |b| {
            let common = g.neighbors(a) & g.neighbors(b);
            let cs: Vec<usize> = above(&common, b).collect();
            cs.into_iter().map(move |c| [a, b, c])
        })
    })
}

/// All 4-cliques `a < b < c < d` in lexicographic order.
fn k4s(g: &Graph) -> impl Iterator<Item = [usize; 4]> + '_ {
    triangles(g).flat_map(move |[a, b, c]| {
        let common = g.common_neighbors(&[a, b, c]);
        let ds: Vec<usize> = above(&common, c).collect();
        ds.into_iter().map(move |d| [a, b, c, d])
    })
}

pub fn find_k4(g: &Graph) -> Option<[usize; 4]> {
    k4s(g).next()
}

/// A `K_5 - e`, reported as a 4-clique plus a fifth vertex adjacent to at
/// least three of its members.
pub fn find_k5_minus_e(g: &Graph) -> Option<([usize; 4], usize)> {
    k4s(g).find_map(|q| {
        let mut cand = VertexSet::new(g.order());
        for skip in 0..4 {
            let others: Vec<usize> = (0..4).filter(|&i| i != skip).map(|i| q[i]).collect();
            cand.union_with(&g.common_neighbors(&others));
        }
        for &v in &q {
            cand.remove(v);
        }
        cand.first().map(|v| (q, v))
    })
}

pub fn find_w4(g: &Graph) -> Option<W4Embedding> {
    for hub in 0..g.order() {
        let nh = g.neighbors(hub);
        if nh.len() < 4 {
            continue;
        }
        for a in nh.iter() {
            let around_a = g.neighbors(a) & nh;
            if around_a.len() < 2 {
                continue;
            }
            for c in above(nh, a) {
                let common = &around_a & g.neighbors(c);
                let mut it = common.iter();
                if let (Some(b), Some(d)) = (it.next(), it.next()) {
                    return Some(W4Embedding { hub, rim: [a, b, c, d] });
                }
            }
        }
    }
    None
}

/// Completes triangle `t` to a Hajós graph if distinct apexes exist.
pub fn hajos_on_triangle(g: &Graph, t: [usize; 3]) -> Option<HajosEmbedding> {
    let [a, b, c] = t;
    let mut ab = g.neighbors(a) & g.neighbors(b);
    ab.remove(c);
    if ab.is_empty() {
        return None;
    }
    let mut ac = g.neighbors(a) & g.neighbors(c);
    ac.remove(b);
    if ac.is_empty() {
        return None;
    }
    let mut bc = g.neighbors(b) & g.neighbors(c);
    bc.remove(a);
    if bc.is_empty() {
        return None;
    }
    // size-3 system of distinct representatives, first in ascending order
    for x in ab.iter() {
        for y in ac.iter().filter(|&y| y != x) {
            if let Some(z) = bc.iter().find(|&z| z != x && z != y) {
                return Some(HajosEmbedding {
                    triangle: t,
                    apexes: [x, y, z],
                });
            }
        }
    }
    None
}

pub fn find_hajos(g: &Graph) -> Option<HajosEmbedding> {
    triangles(g).find_map(|t| hajos_on_triangle(g, t))
}

/// Hajós embedding inside `G[within]`, reported in host indices.
pub fn find_hajos_within(g: &Graph, within: &VertexSet) -> Option<HajosEmbedding> {
    let (sub, map) = g.induced(within);
    find_hajos(&sub).map(|h| h.mapped(&map))
}

pub fn find_blue_star(g: &Graph, n: usize) -> Option<StarWitness> {
    assert!(n >= 1, "star size must be at least 1");
    (0..g.order())
        .find(|&v| g.complement_degree(v) >= n)
        .map(|center| StarWitness {
            center,
            leaves: g.complement_neighbors(center).iter().take(n).collect(),
        })
}

/// Blue fan centred at `v`, if the complement neighborhood of `v` has a
/// complement matching of size `n`.
pub fn blue_fan_at(g: &Graph, v: usize, n: usize) -> Option<FanWitness> {
    if g.complement_degree(v) < 2 * n {
        return None;
    }
    let (h, map) = g.complement_induced(&g.complement_neighbors(v));
    matching_of_size(&h, n).map(|m| FanWitness {
        center: v,
        blades: m.mapped(&map).into_edges(),
    })
}

pub fn find_blue_fan(g: &Graph, n: usize) -> Option<FanWitness> {
    assert!(n >= 1, "fan size must be at least 1");
    (0..g.order()).find_map(|v| blue_fan_at(g, v, n))
}

/// Structural check of `w` against host `g`; `n` is the star or fan size.
pub fn verify_witness(g: &Graph, w: &Witness, n: usize) -> bool {
    match w {
        Witness::RedHajos(h) => h.is_valid_in(g),
        Witness::BlueStar(s) => {
            let mut vs = vec![s.center];
            vs.extend(&s.leaves);
            s.leaves.len() == n
                && distinct_in_range(&vs, g.order())
                && s.leaves.iter().all(|&l| g.has_complement_edge(s.center, l))
        }
        Witness::BlueFan(f) => {
            let mut vs = vec![f.center];
            vs.extend(f.blades.iter().flat_map(|e| [e.u, e.v]));
            f.blades.len() == n
                && distinct_in_range(&vs, g.order())
                && f.blades.iter().all(|e| {
                    g.has_complement_edge(e.u, e.v)
                        && g.has_complement_edge(f.center, e.u)
                        && g.has_complement_edge(f.center, e.v)
                })
        }
    }
}
