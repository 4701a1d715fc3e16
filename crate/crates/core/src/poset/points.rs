//! The staircase point poset `P_n` and the identification of Dyck paths with
//! its order ideals.
//!
//! The area cell with lower-left corner at column `x`, row `y` (0-based,
//! `x < y`) corresponds to the point `(x, n - 1 - y)`. Cells further right or
//! further down are smaller points, so the area cells of a path form an ideal.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{OrderRelation, Poset};
use crate::config::Limits;
use crate::path::{enumerate_paths, DyckPath};
use crate::Result;

pub type Point = (usize, usize);

#[derive(Debug, Clone)]
pub struct PointPoset {
    n: usize,
    points: Vec<Point>,
    relation: OrderRelation,
}

impl PointPoset {
    /// All `(a, b)` with `a + b <= n - 2`, minimal points first.
    pub fn build(n: usize) -> PointPoset {
        let mut points: Vec<Point> = (0..n.saturating_sub(1))
            .flat_map(|a| (0..n.saturating_sub(1)).map(move |b| (a, b)))
            .filter(|&(a, b)| a + b + 2 <= n)
            .collect();
        points.sort_by_key(|p| std::cmp::Reverse((p.0 + p.1, p.0)));
        let relation = OrderRelation::from_leq(points.len(), |i, j| point_leq(points[i], points[j]));
        PointPoset { n, points, relation }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn relation(&self) -> &OrderRelation {
        &self.relation
    }

    pub fn leq(&self, p: Point, q: Point) -> bool {
        point_leq(p, q)
    }

    pub fn ideals(&self, limits: &Limits) -> Result<Vec<BTreeSet<Point>>> {
        Ok(self
            .relation
            .order_ideals(limits.enumeration_budget)?
            .iter()
            .map(|set| set.iter().map(|i| self.points[i]).collect())
            .collect())
    }

    /// Checks that sending each ideal to the path with exactly those area
    /// cells is an order isomorphism onto `D_n`.
    pub fn isomorphism_check(&self, limits: &Limits) -> Result<bool> {
        let ideals = self.ideals(limits)?;
        let mut images = Vec::with_capacity(ideals.len());
        for ideal in &ideals {
            let path = match ideal_to_path(ideal, self.n) {
                Some(path) => path,
                None => return Ok(false),
            };
            if path_to_ideal(&path) != *ideal {
                return Ok(false);
            }
            images.push(path);
        }
        let mut sorted = images.clone();
        sorted.sort_by(|a, b| a.canonical_cmp(b));
        sorted.dedup();
        if sorted != enumerate_paths(self.n, limits)? {
            return Ok(false);
        }
        for (i, a) in ideals.iter().enumerate() {
            for (j, b) in ideals.iter().enumerate() {
                if a.is_subset(b) != images[i].is_below(&images[j])? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn point_leq(p: Point, q: Point) -> bool {
    p.0 >= q.0 && p.1 >= q.1
}

/// The points of `P_n` under the area cells of `path`.
pub fn path_to_ideal(path: &DyckPath) -> BTreeSet<Point> {
    let n = path.order();
    path.columns()
        .into_iter()
        .enumerate()
        .flat_map(|(y, c)| (c..y).map(move |x| (x, n - 1 - y)))
        .collect()
}

/// The path whose area cells are exactly `ideal`, if there is one.
pub fn ideal_to_path(ideal: &BTreeSet<Point>, n: usize) -> Option<DyckPath> {
    let mut per_row = vec![0usize; n];
    for &(a, b) in ideal {
        if a + b + 2 > n {
            return None;
        }
        per_row[n - 1 - b] += 1;
    }
    let columns: Vec<usize> = per_row
        .iter()
        .enumerate()
        .map(|(y, &count)| y.checked_sub(count))
        .collect::<Option<_>>()?;
    let path = DyckPath::from_columns(&columns).ok()?;
    (path_to_ideal(&path) == *ideal).then_some(path)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MobiusEntry {
    pub value: i8,
    /// False when `x` is not below `y`; the value is then 0 by convention.
    pub related: bool,
    /// Whether the cell difference has two cells sharing an edge.
    pub stacked: bool,
}

/// Whether two points are adjacent in the grid, i.e. one covers the other.
fn adjacent(p: Point, q: Point) -> bool {
    (p.0 == q.0 && p.1.abs_diff(q.1) == 1) || (p.1 == q.1 && p.0.abs_diff(q.0) == 1)
}

pub(super) fn mobius_direct(poset: &Poset, x: usize, y: usize) -> MobiusEntry {
    if !poset.leq(x, y) {
        return MobiusEntry {
            value: 0,
            related: false,
            stacked: false,
        };
    }
    let lower = path_to_ideal(&poset.elements()[x]);
    let upper = path_to_ideal(&poset.elements()[y]);
    let diff: Vec<Point> = upper.difference(&lower).copied().collect();
    let is_antichain = diff.iter().enumerate().all(|(k, &p)| {
        diff[k + 1..]
            .iter()
            .all(|&q| !point_leq(p, q) && !point_leq(q, p))
    });
    let stacked = diff
        .iter()
        .enumerate()
        .any(|(k, &p)| diff[k + 1..].iter().any(|&q| adjacent(p, q)));
    let value = match (is_antichain, diff.len() % 2) {
        (false, _) => 0,
        (true, 0) => 1,
        (true, _) => -1,
    };
    MobiusEntry {
        value,
        related: true,
        stacked,
    }
}
