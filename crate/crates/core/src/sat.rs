//! CNF for "some coloring of `K_N` has no red Hajós graph and no blue
//! `K_{1,n}`", in DIMACS form.
//!
//! Edge `(u, v)` is variable `k + 1` where `k` is its lexicographic index;
//! true means red. Each vertex gets a sequential counter bounding its blue
//! degree by `n - 1`; counter variables follow the edge variables.

use std::fmt::Write as _;

use thiserror::Error;

use crate::construct::hajos_graph;
use crate::graph::{Edge, Graph};

pub const SAT_MIN_ORDER: usize = 2;
pub const SAT_MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SatError {
    #[error("order {0} outside {SAT_MIN_ORDER}..={SAT_MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("star size must be at least 1")]
    InvalidStar,
    #[error("assignment has {found} values, formula needs {expected}")]
    IncompleteAssignment { expected: usize, found: usize },
    #[error("graph has order {graph}, variable map has order {map}")]
    OrderMismatch { graph: usize, map: usize },
    #[error("DIMACS parse error: {0}")]
    Parse(String),
}

/// Bijection between edges of `K_N` and variables `1..=C(N, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeVarMap {
    order: usize,
}

impl EdgeVarMap {
    pub fn new(order: usize) -> Result<Self, SatError> {
        if !(SAT_MIN_ORDER..=SAT_MAX_ORDER).contains(&order) {
            return Err(SatError::OrderTooLarge(order));
        }
        Ok(EdgeVarMap { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.order * (self.order - 1) / 2
    }

    pub fn var(&self, u: usize, v: usize) -> i32 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        Graph::edge_mask_index(self.order, a, b) as i32 + 1
    }

    pub fn edge(&self, var: i32) -> Option<Edge> {
        if var < 1 || var as usize > self.edge_count() {
            return None;
        }
        self.edges().nth(var as usize - 1)
    }

    /// Edges in variable order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> {
        let n = self.order;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| Edge::new(u, v)))
    }
}

/// One at-most-`k` sequential counter over `lits`. Its register bit
/// `(i, j)` is variable `first_aux + i * k + j` and means "at least `j + 1`
/// of the first `i + 1` literals are true".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counter {
    pub lits: Vec<i32>,
    pub k: usize,
    pub first_aux: i32,
}

impl Counter {
    fn aux_count(&self) -> usize {
        if self.k == 0 || self.k >= self.lits.len() {
            0
        } else {
            (self.lits.len() - 1) * self.k
        }
    }

    fn reg(&self, i: usize, j: usize) -> i32 {
        self.first_aux + (i * self.k + j) as i32
    }

    fn clauses(&self, out: &mut Vec<Vec<i32>>) {
        let (m, k) = (self.lits.len(), self.k);
        let x = &self.lits;
        if k == 0 {
            out.extend(x.iter().map(|&l| vec![-l]));
            return;
        }
        if k >= m {
            return;
        }
        out.push(vec![-x[0], self.reg(0, 0)]);
        for j in 1..k {
            out.push(vec![-self.reg(0, j)]);
        }
        for (i, &xi) in x.iter().enumerate().take(m - 1).skip(1) {
            out.push(vec![-xi, self.reg(i, 0)]);
            out.push(vec![-self.reg(i - 1, 0), self.reg(i, 0)]);
            for j in 1..k {
                out.push(vec![-xi, -self.reg(i - 1, j - 1), self.reg(i, j)]);
                out.push(vec![-self.reg(i - 1, j), self.reg(i, j)]);
            }
            out.push(vec![-xi, -self.reg(i - 1, k - 1)]);
        }
        out.push(vec![-x[m - 1], -self.reg(m - 2, k - 1)]);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    /// Counter layout, needed to complete partial assignments.
    pub counters: Vec<Counter>,
    /// Number of leading variables that are edge variables.
    pub edge_vars: usize,
}

/// Truth value per edge variable, in variable order; true means red.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment(pub Vec<bool>);

/// Number of permutations of the six Hajós vertices that preserve its edges.
pub fn hajos_automorphism_count() -> usize {
    let h = hajos_graph();
    permutations6().filter(|p| h.permute(p) == h).count()
}

fn permutations6() -> impl Iterator<Item = [usize; 6]> {
    (0..6usize.pow(6)).filter_map(|mut code| {
        let mut p = [0; 6];
        let mut seen = 0u8;
        for slot in &mut p {
            *slot = code % 6;
            code /= 6;
            if seen >> *slot & 1 == 1 {
                return None;
            }
            seen |= 1 << *slot;
        }
        Some(p)
    })
}

/// The distinct edge sets of Hajós copies on vertices `0..6`, each as nine
/// pairs, sorted.
pub fn hajos_copies() -> Vec<Vec<(usize, usize)>> {
    let h = hajos_graph();
    let mut copies: Vec<Vec<(usize, usize)>> = permutations6()
        .map(|p| {
            let mut es: Vec<(usize, usize)> = h.permute(&p).edges().map(|e| (e.u, e.v)).collect();
            es.sort_unstable();
            es
        })
        .collect();
    copies.sort_unstable();
    copies.dedup();
    copies
}

fn six_subsets(order: usize) -> impl Iterator<Item = [usize; 6]> {
    let mut cur = [0, 1, 2, 3, 4, 5];
    let mut done = order < 6;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        // advance to the next combination in lexicographic order
        match (0..6).rev().find(|&i| cur[i] < order - 6 + i) {
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..6 {
                    cur[j] = cur[j - 1] + 1;
                }
            }
            None => done = true,
        }
        Some(out)
    })
}

pub fn emit_star_arrowing_cnf(order: usize, n: usize) -> Result<(CnfFormula, EdgeVarMap), SatError> {
    let map = EdgeVarMap::new(order)?;
    if n == 0 {
        return Err(SatError::InvalidStar);
    }
    let mut clauses = Vec::new();
    let copies = hajos_copies();
    for s in six_subsets(order) {
        for copy in &copies {
            clauses.push(copy.iter().map(|&(a, b)| -map.var(s[a], s[b])).collect());
        }
    }
    let mut next = map.edge_count() as i32 + 1;
    let mut counters = Vec::with_capacity(order);
    for v in 0..order {
        let lits: Vec<i32> = (0..order).filter(|&w| w != v).map(|w| -map.var(v, w)).collect();
        let c = Counter {
            lits,
            k: n - 1,
            first_aux: next,
        };
        next += c.aux_count() as i32;
        c.clauses(&mut clauses);
        counters.push(c);
    }
    let f = CnfFormula {
        num_vars: next as usize - 1,
        clauses,
        counters,
        edge_vars: map.edge_count(),
    };
    Ok((f, map))
}

fn lit_value(values: &[bool], lit: i32) -> bool {
    let v = values[lit.unsigned_abs() as usize - 1];
    if lit > 0 {
        v
    } else {
        !v
    }
}

/// Evaluates `f` on an edge assignment, completing the counter registers
/// from their prefix counts.
pub fn eval_cnf(f: &CnfFormula, a: &Assignment) -> Result<bool, SatError> {
    if a.0.len() != f.edge_vars {
        return Err(SatError::IncompleteAssignment {
            expected: f.edge_vars,
            found: a.0.len(),
        });
    }
    let mut values = a.0.clone();
    values.resize(f.num_vars, false);
    for c in &f.counters {
        if c.aux_count() == 0 {
            continue;
        }
        let mut count = 0;
        for i in 0..c.lits.len() - 1 {
            count += lit_value(&values, c.lits[i]) as usize;
            for j in 0..c.k {
                values[c.reg(i, j) as usize - 1] = count > j;
            }
        }
    }
    Ok(f.clauses.iter().all(|cl| cl.iter().any(|&l| lit_value(&values, l))))
}

pub fn assignment_from_graph(g: &Graph, map: &EdgeVarMap) -> Result<Assignment, SatError> {
    if g.order() != map.order() {
        return Err(SatError::OrderMismatch {
            graph: g.order(),
            map: map.order(),
        });
    }
    Ok(Assignment(map.edges().map(|e| g.has_edge(e.u, e.v)).collect()))
}

pub fn graph_from_assignment(a: &Assignment, map: &EdgeVarMap) -> Result<Graph, SatError> {
    if a.0.len() != map.edge_count() {
        return Err(SatError::IncompleteAssignment {
            expected: map.edge_count(),
            found: a.0.len(),
        });
    }
    let edges = map.edges().zip(&a.0).filter(|(_, &red)| red).map(|(e, _)| (e.u, e.v));
    Ok(Graph::from_edges(map.order(), edges).expect("map edges are in range"))
}

/// Reads a solver model (`v` lines or bare literals, `0` ignored) back into
/// a graph; unmentioned edge variables are blue.
pub fn graph_from_model(model: &str, map: &EdgeVarMap) -> Result<Graph, SatError> {
    let mut values = vec![false; map.edge_count()];
    for line in model.lines() {
        let body = line.trim();
        let body = body.strip_prefix('v').unwrap_or(body);
        if body.starts_with(['c', 's']) {
            continue;
        }
        for tok in body.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| SatError::Parse(format!("bad literal {tok:?}")))?;
            let var = lit.unsigned_abs() as usize;
            if lit > 0 && var <= values.len() {
                values[var - 1] = true;
            }
        }
    }
    graph_from_assignment(&Assignment(values), map)
}

impl CnfFormula {
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        if self.edge_vars > 0 {
            let map = EdgeVarMap {
                order: (1..=SAT_MAX_ORDER)
                    .find(|n| n * (n - 1) / 2 == self.edge_vars)
                    .unwrap_or(0),
            };
            for (i, e) in map.edges().enumerate() {
                let _ = writeln!(out, "c edge {} {} var {}", e.u, e.v, i + 1);
            }
        }
        for c in &self.counters {
            let lits: Vec<String> = c.lits.iter().map(i32::to_string).collect();
            let _ = writeln!(out, "c counter k {} aux {} lits {}", c.k, c.first_aux, lits.join(" "));
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for cl in &self.clauses {
            for l in cl {
                let _ = write!(out, "{l} ");
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn parse_dimacs(text: &str) -> Result<CnfFormula, SatError> {
        let bad = |m: String| SatError::Parse(m);
        let mut f = CnfFormula::default();
        let mut declared = None;
        let mut cur = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.starts_with("c edge ") {
                f.edge_vars += 1;
                continue;
            }
            if let Some(rest) = line.strip_prefix("c counter ") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let num = |i: usize| -> Result<i64, SatError> {
                    toks.get(i)
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| bad(format!("malformed counter line {line:?}")))
                };
                if toks.first() != Some(&"k") || toks.get(2) != Some(&"aux") || toks.get(4) != Some(&"lits") {
                    return Err(bad(format!("malformed counter line {line:?}")));
                }
                let lits = (5..toks.len())
                    .map(|i| num(i).map(|v| v as i32))
                    .collect::<Result<_, _>>()?;
                f.counters.push(Counter {
                    lits,
                    k: num(1)? as usize,
                    first_aux: num(3)? as i32,
                });
                continue;
            }
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("p cnf") {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| bad(format!("bad header {line:?}"))))
                    .collect::<Result<_, _>>()?;
                let [v, c] = nums[..] else {
                    return Err(bad(format!("bad header {line:?}")));
                };
                f.num_vars = v;
                declared = Some(c);
                continue;
            }
            if declared.is_none() {
                return Err(bad("clause before header".into()));
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok.parse().map_err(|_| bad(format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    f.clauses.push(std::mem::take(&mut cur));
                } else if lit.unsigned_abs() as usize > f.num_vars {
                    return Err(bad(format!("literal {lit} exceeds {} variables", f.num_vars)));
                } else {
                    cur.push(lit);
                }
            }
        }
        if !cur.is_empty() {
            return Err(bad("unterminated clause".into()));
        }
        match declared {
            Some(c) if c == f.clauses.len() => Ok(f),
            Some(c) => Err(bad(format!("header declares {c} clauses, found {}", f.clauses.len()))),
            None => Err(bad("missing header".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn var_map_is_lexicographic() {
        let m = EdgeVarMap::new(4).unwrap();
        assert_eq!(m.var(0, 1), 1);
        assert_eq!(m.var(0, 3), 3);
        assert_eq!(m.var(2, 1), 4);
        assert_eq!(m.var(2, 3), 6);
        assert_eq!(m.edge(6), Some(Edge::new(2, 3)));
        assert_eq!(m.edge(7), None);
        assert_eq!(EdgeVarMap::new(65), Err(SatError::OrderTooLarge(65)));
        assert_eq!(EdgeVarMap::new(1), Err(SatError::OrderTooLarge(1)));
    }

    #[test]
    fn automorphisms_and_copies() {
        assert_eq!(hajos_automorphism_count(), 6);
        assert_eq!(hajos_copies().len(), 720 / 6);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(six_subsets(5).count(), 0);
        assert_eq!(six_subsets(6).count(), 1);
        assert_eq!(six_subsets(9).count(), 84);
    }

    #[test]
    fn counter_bounds_exactly() {
        // at most 2 of 5 free variables
        let c = Counter {
            lits: (1..=5).collect(),
            k: 2,
            first_aux: 6,
        };
        let mut clauses = Vec::new();
        c.clauses(&mut clauses);
        let f = CnfFormula {
            num_vars: 5 + c.aux_count(),
            clauses,
            counters: vec![c],
            edge_vars: 5,
        };
        for mask in 0u32..32 {
            let a = Assignment((0..5).map(|i| mask >> i & 1 == 1).collect());
            assert_eq!(eval_cnf(&f, &a).unwrap(), mask.count_ones() <= 2, "mask {mask:05b}");
        }
    }

    #[test]
    fn small_formulas() {
        let (f, m) = emit_star_arrowing_cnf(5, 2).unwrap();
        assert!(f.clauses.iter().all(|c| c.len() <= 3));
        let g = construct::star_even_lower(2).unwrap();
        assert!(eval_cnf(&f, &assignment_from_graph(&g, &m).unwrap()).unwrap());
        let (f6, m6) = emit_star_arrowing_cnf(6, 2).unwrap();
        let red = Assignment(vec![true; 15]);
        assert!(!eval_cnf(&f6, &red).unwrap());
        assert_eq!(
            eval_cnf(&f6, &Assignment(vec![true; 3])),
            Err(SatError::IncompleteAssignment { expected: 15, found: 3 })
        );
        assert_eq!(
            assignment_from_graph(&g, &m6),
            Err(SatError::OrderMismatch { graph: 5, map: 6 })
        );
        assert!(eval_cnf(&CnfFormula::default(), &Assignment(vec![])).unwrap());
    }

    #[test]
    fn dimacs_roundtrip_and_model() {
        let (f, m) = emit_star_arrowing_cnf(7, 3).unwrap();
        let text = f.to_dimacs();
        assert!(text.contains("c edge 0 1 var 1\n"));
        assert_eq!(CnfFormula::parse_dimacs(&text).unwrap(), f);
        let g = construct::star_odd_lower(3).unwrap();
        let m8 = EdgeVarMap::new(8).unwrap();
        let a = assignment_from_graph(&g, &m8).unwrap();
        let model: String =
            a.0.iter()
                .enumerate()
                .map(|(i, &b)| format!("{} ", if b { i as i32 + 1 } else { -(i as i32 + 1) }))
                .collect();
        assert_eq!(
            graph_from_model(&format!("s SATISFIABLE\nv {model}0\n"), &m8).unwrap(),
            g
        );
        assert!(CnfFormula::parse_dimacs("p cnf 2 1\n1 3 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 2 2\n1 0\n").is_err());
        assert_eq!(m.edge_count(), 21);
    }
}
