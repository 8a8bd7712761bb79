//! Brute-force oracles shared by the integration tests. None of them call
//! the library's detectors or matching code.

#![allow(dead_code)]

use hajos_ramsey::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const HAJOS_EDGES: [(usize, usize); 9] = [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)];
pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
pub const W4_EDGES: [(usize, usize); 8] = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)];
pub const K5E_EDGES: [(usize, usize); 9] = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)];

/// Whether some injective map of the pattern into `0..order` sends every
/// pattern edge to a pair accepted by `adj`.
pub fn embeds(order: usize, adj: &dyn Fn(usize, usize) -> bool, k: usize, pattern: &[(usize, usize)]) -> bool {
    fn go(
        i: usize,
        k: usize,
        order: usize,
        adj: &dyn Fn(usize, usize) -> bool,
        pattern: &[(usize, usize)],
        image: &mut Vec<usize>,
    ) -> bool {
        if i == k {
            return true;
        }
        for v in 0..order {
            if image.contains(&v) {
                continue;
            }
            let fits = pattern.iter().all(|&(a, b)| {
                let (lo, hi) = (a.min(b), a.max(b));
                hi != i || adj(image[lo], v)
            });
            if fits {
                image.push(v);
                if go(i + 1, k, order, adj, pattern, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    go(0, k, order, adj, pattern, &mut Vec::new())
}

pub fn red_contains(g: &Graph, k: usize, pattern: &[(usize, usize)]) -> bool {
    embeds(g.order(), &|u, v| g.has_edge(u, v), k, pattern)
}

pub fn blue_contains(g: &Graph, k: usize, pattern: &[(usize, usize)]) -> bool {
    embeds(g.order(), &|u, v| u != v && !g.has_edge(u, v), k, pattern)
}

pub fn has_hajos(g: &Graph) -> bool {
    red_contains(g, 6, &HAJOS_EDGES)
}

pub fn has_blue_star(g: &Graph, n: usize) -> bool {
    (0..g.order()).any(|v| (0..g.order()).filter(|&w| w != v && !g.has_edge(v, w)).count() >= n)
}

/// Fan on `2n + 1` vertices: center 0, blades `(2i+1, 2i+2)`.
pub fn fan_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| [(0, 2 * i + 1), (0, 2 * i + 2), (2 * i + 1, 2 * i + 2)])
        .collect()
}

pub fn has_blue_fan(g: &Graph, n: usize) -> bool {
    blue_contains(g, 2 * n + 1, &fan_edges(n))
}

/// Size of a maximum matching by plain recursion on the lowest vertex.
pub fn matching_number(order: usize, adj: &dyn Fn(usize, usize) -> bool) -> usize {
    fn go(free: u64, adj: &dyn Fn(usize, usize) -> bool) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(rest, adj);
        let mut others = rest;
        while others != 0 {
            let w = others.trailing_zeros() as usize;
            others &= others - 1;
            if adj(v, w) {
                best = best.max(1 + go(rest & !(1 << w), adj));
            }
        }
        best
    }
    assert!(order <= 64);
    let all = if order == 64 { u64::MAX } else { (1u64 << order) - 1 };
    go(all, adj)
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn mask_of(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.order();
    let mut mask = 0u64;
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(perm[u], perm[v]) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// Canonical form for small graphs: least edge mask over all relabellings.
pub fn canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| mask_of(g, p)).min().unwrap_or(0)
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let perms = permutations(a.order());
    canonical(a, &perms) == canonical(b, &perms)
}

/// Graph with edge `(u, v)` at its lexicographic bit of `mask`.
pub fn from_mask(order: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..order {
        for v in u + 1..order {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(order, edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, order: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, edges).unwrap()
}

/// Random order in `lo..=hi` and edge probability in `[0, 1]`.
pub fn random_small_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let order = rng.random_range(lo..=hi);
    let p = rng.random_range(0.0..=1.0);
    random_graph(rng, order, p)
}

/// Graph whose lexicographic edge bits are `bits`.
pub fn from_mask_bits(order: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..order {
        for v in u + 1..order {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(order, edges).unwrap()
}
