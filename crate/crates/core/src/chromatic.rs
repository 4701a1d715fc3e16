//! Chromatic polynomials by memoized deletion-contraction.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use crate::poly::UniPoly;
use crate::poset::Poset;
use crate::{Error, Result};

/// Largest vertex count handled by [`chromatic_polynomial`].
pub const MAX_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn empty(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    /// Duplicate edges collapse; loops and out-of-range endpoints are errors.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(Error::OutOfRange {
                    value: w,
                    n: self.vertex_count.saturating_sub(1),
                });
            }
        }
        if u == v {
            return Err(Error::InvalidLabelling(format!("loop at vertex {u}")));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }
}

/// Vertices are the poset elements, edges its cover pairs.
pub fn hasse_graph(p: &Poset) -> SimpleGraph {
    SimpleGraph {
        vertex_count: p.len(),
        edges: p.cover_edges().into_iter().collect(),
    }
}

type Adj = Vec<u128>;

fn t_poly() -> UniPoly {
    UniPoly::from_coeffs(&[0, 1])
}

fn t_minus(k: i64) -> UniPoly {
    UniPoly::from_coeffs(&[BigInt::from(-k), BigInt::from(1)])
}

fn falling(n: usize) -> UniPoly {
    (0..n).fold(UniPoly::one(), |acc, k| &acc * &t_minus(k as i64))
}

pub fn chromatic_polynomial(g: &SimpleGraph) -> Result<UniPoly> {
    if g.vertex_count > MAX_VERTICES {
        return Err(Error::LimitExceeded {
            requested: g.vertex_count,
            max: MAX_VERTICES,
        });
    }
    let mut adj = vec![0u128; g.vertex_count];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut solver = Solver { memo: HashMap::new() };
    Ok(solver.solve(adj))
}

struct Solver {
    memo: HashMap<Adj, UniPoly>,
}

fn degree(adj: &Adj, v: usize) -> u32 {
    adj[v].count_ones()
}

fn edge_count(adj: &Adj) -> usize {
    adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
}

/// Drops vertex `v`, shifting higher indices down by one.
fn remove_vertex(adj: &Adj, v: usize) -> Adj {
    let low = (1u128 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, &m)| (m & low) | (m.checked_shr(v as u32 + 1).unwrap_or(0) << v))
        .collect()
}

fn induced(adj: &Adj, vertices: &[usize]) -> Adj {
    vertices
        .iter()
        .map(|&v| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &w)| adj[v] >> w & 1 == 1)
                .fold(0u128, |m, (i, _)| m | 1 << i)
        })
        .collect()
}

fn components(adj: &Adj) -> Vec<Vec<usize>> {
    let mut seen = 0u128;
    let mut out = Vec::new();
    for start in 0..adj.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u128 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push((0..adj.len()).filter(|&v| comp >> v & 1 == 1).collect());
    }
    out
}

/// Relabels vertices by descending degree (ties by original index) so that
/// graphs differing only in such a relabelling share a memo entry.
fn canonical(adj: &Adj) -> Adj {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degree(adj, v)), v));
    induced(adj, &order)
}

impl Solver {
    fn solve(&mut self, adj: Adj) -> UniPoly {
        let n = adj.len();
        if n == 0 {
            return UniPoly::one();
        }
        let comps = components(&adj);
        if comps.len() > 1 {
            return comps
                .iter()
                .fold(UniPoly::one(), |acc, c| &acc * &self.solve(induced(&adj, c)));
        }
        let m = edge_count(&adj);
        if m + 1 == n {
            return &t_poly() * &t_minus(1).pow(m as u32);
        }
        if m == n * (n - 1) / 2 {
            return falling(n);
        }
        if let Some(leaf) = (0..n).find(|&v| degree(&adj, v) == 1) {
            return &t_minus(1) * &self.solve(remove_vertex(&adj, leaf));
        }
        let key = canonical(&adj);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let result = self.split(&key);
        self.memo.insert(key, result.clone());
        result
    }

    /// `P(G) = P(G - e) - P(G / e)` on an edge at a vertex of largest degree.
    fn split(&mut self, adj: &Adj) -> UniPoly {
        let u = (0..adj.len()).max_by_key(|&v| (degree(adj, v), std::cmp::Reverse(v))).expect("graph is non-empty");
        let v = adj[u].trailing_zeros() as usize;
        let mut deleted = adj.clone();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        let mut merged = deleted.clone();
        // merge v into u; parallel edges collapse in the bitmask
        merged[u] |= merged[v];
        for w in 0..merged.len() {
            if merged[v] >> w & 1 == 1 {
                merged[w] |= 1 << u;
            }
        }
        let contracted = remove_vertex(&merged, v);
        &self.solve(deleted) - &self.solve(contracted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs)
    }

    #[test]
    fn small_families() {
        let tri = SimpleGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(chromatic_polynomial(&tri).unwrap(), poly(&[0, 2, -3, 1]));
        let c4 = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(chromatic_polynomial(&c4).unwrap(), poly(&[0, -3, 6, -4, 1]));
        assert_eq!(chromatic_polynomial(&SimpleGraph::empty(3)).unwrap(), poly(&[0, 0, 0, 1]));
        assert_eq!(chromatic_polynomial(&SimpleGraph::empty(0)).unwrap(), UniPoly::one());
    }

    #[test]
    fn path_tree_on_five() {
        let tree = SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(chromatic_polynomial(&tree).unwrap(), &t_poly() * &t_minus(1).pow(4));
    }

    #[test]
    fn rejects_loops() {
        assert!(SimpleGraph::new(2, &[(1, 1)]).is_err());
        assert!(SimpleGraph::new(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn wheel_needs_contraction() {
        // hub 0 joined to every vertex of the 5-cycle 1..=5
        let mut edges = vec![];
        for i in 1..=5 {
            edges.push((0, i));
            edges.push((i, i % 5 + 1));
        }
        let w = SimpleGraph::new(6, &edges).unwrap();
        let p = chromatic_polynomial(&w).unwrap();
        // no 3-colouring; with 4 colours the hub leaves 3 for an odd cycle: 4 * 30
        assert_eq!(p.eval_int(&3.into()), 0.into());
        assert_eq!(p.eval_int(&4.into()), 120.into());
    }
}
