//! Parking functions and labelled Dyck paths.
//!
//! Rows and columns are numbered from 1, rows bottom to top. The label of a
//! north step sits in the cell to its right, so the north step in row `i`
//! carries the label of row `i`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::config::Limits;
use crate::path::{enumerate_paths, DyckPath};
use crate::{Error, Result};

/// Largest order for which parking functions are enumerated.
pub const ENUMERATION_GATE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ParkingFunction {
    prefs: Vec<usize>,
}

/// Sorted preferences `s` must satisfy `s[i] <= i` (1-based).
pub fn is_parking_function(prefs: &[usize]) -> Result<bool> {
    let n = prefs.len();
    if let Some(&bad) = prefs.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::OutOfRange { value: bad, n });
    }
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().enumerate().all(|(i, &s)| s <= i + 1))
}

impl ParkingFunction {
    pub fn new(prefs: Vec<usize>) -> Result<Self> {
        if is_parking_function(&prefs)? {
            Ok(ParkingFunction { prefs })
        } else {
            Err(Error::InvalidParkingFunction(prefs))
        }
    }

    pub fn order(&self) -> usize {
        self.prefs.len()
    }

    /// `prefs()[x - 1]` is the space car `x` prefers.
    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }
}

/// `(n+1)^{n-1}`, with the empty function counted once at `n = 0`.
pub fn count_parking_functions(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    BigUint::from(n as u64 + 1).pow(n as u32 - 1)
}

/// All parking functions of order `n` in lexicographic order, found by
/// filtering the `n^n` preference vectors.
pub fn enumerate_parking_functions(n: usize) -> Result<Vec<ParkingFunction>> {
    if n > ENUMERATION_GATE {
        return Err(Error::LimitExceeded {
            requested: n,
            max: ENUMERATION_GATE,
        });
    }
    let mut out = Vec::new();
    let mut prefs = vec![1; n];
    loop {
        if is_parking_function(&prefs)? {
            out.push(ParkingFunction { prefs: prefs.clone() });
        }
        // odometer increment, last position fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if prefs[k] < n {
                prefs[k] += 1;
                break;
            }
            prefs[k] = 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LabelledDyckPath {
    path: DyckPath,
    /// Label of each north step, bottom row first.
    labels: Vec<usize>,
}

impl LabelledDyckPath {
    pub fn new(path: DyckPath, labels: Vec<usize>) -> Result<Self> {
        let n = path.order();
        if labels.len() != n {
            return Err(Error::InvalidLabelling(format!(
                "{} labels for a path of order {n}",
                labels.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidLabelling(format!("{labels:?} is not a permutation of 1..={n}")));
        }
        let columns = path.columns();
        for i in 1..n {
            if columns[i] == columns[i - 1] && labels[i] < labels[i - 1] {
                return Err(Error::InvalidLabelling(format!(
                    "labels decrease up column {} at row {}",
                    columns[i] + 1,
                    i + 1
                )));
            }
        }
        Ok(LabelledDyckPath { path, labels })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

/// Places the cars preferring space `j` in column `j`, increasing upwards,
/// starting from the lowest empty row.
pub fn parking_to_labelled(f: &ParkingFunction) -> LabelledDyckPath {
    let n = f.order();
    let mut by_space: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (car, &space) in f.prefs.iter().enumerate() {
        by_space.entry(space).or_default().push(car + 1);
    }
    let mut columns = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for (space, cars) in by_space {
        for car in cars {
            columns.push(space - 1);
            labels.push(car);
        }
    }
    let path = DyckPath::from_columns(&columns).expect("a parking function never dips below the diagonal");
    LabelledDyckPath { path, labels }
}

/// `f(i)` is the column holding label `i`.
pub fn labelled_to_parking(l: &LabelledDyckPath) -> ParkingFunction {
    let mut prefs = vec![0; l.labels.len()];
    for (&label, column) in l.labels.iter().zip(l.path.columns()) {
        prefs[label - 1] = column + 1;
    }
    ParkingFunction { prefs }
}

/// `n(n+1)/2 - sum f(i)`.
pub fn area_from_parking(f: &ParkingFunction) -> usize {
    let n = f.order();
    n * (n + 1) / 2 - f.prefs.iter().sum::<usize>()
}

/// Area vector `g` and row label vector `p` of a labelled path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AreaLabelPair {
    pub g: Vec<usize>,
    pub p: Vec<usize>,
}

/// `cols[i - 1]` is the column containing label `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColumnLabelVector {
    pub cols: Vec<usize>,
}

impl AreaLabelPair {
    /// The six admissibility conditions on an area/label pair.
    pub fn satisfies_conditions(&self) -> bool {
        let n = self.g.len();
        if self.p.len() != n {
            return false;
        }
        if n > 0 && self.g[0] != 0 {
            return false;
        }
        let mut sorted = self.p.clone();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return false;
        }
        (1..n).all(|i| {
            let rising = self.g[i] == self.g[i - 1] + 1;
            self.g[i] <= self.g[i - 1] + 1 && (!rising || self.p[i - 1] < self.p[i])
        })
    }

    /// Rebuilds the labelled path; fails unless the conditions hold.
    pub fn to_labelled(&self) -> Result<LabelledDyckPath> {
        if !self.satisfies_conditions() {
            return Err(Error::InvalidLabelling(format!("{self:?} violates the area/label conditions")));
        }
        let columns: Vec<usize> = self.g.iter().enumerate().map(|(row, &g)| row - g).collect();
        let path = DyckPath::from_columns(&columns)?;
        LabelledDyckPath::new(path, self.p.clone())
    }

    /// Every pair of sequences of length `n` meeting the conditions.
    pub fn all(n: usize) -> Vec<AreaLabelPair> {
        let mut area_vectors = Vec::new();
        grow_area_vectors(n, &mut Vec::new(), &mut area_vectors);
        let perms = permutations(n);
        let mut out = Vec::new();
        for g in &area_vectors {
            for p in &perms {
                let pair = AreaLabelPair { g: g.clone(), p: p.clone() };
                if pair.satisfies_conditions() {
                    out.push(pair);
                }
            }
        }
        out
    }
}

/// All `g` with `g_1 = 0` and `0 <= g_{i+1} <= g_i + 1`.
pub fn area_vectors(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    grow_area_vectors(n, &mut Vec::new(), &mut out);
    out
}

fn grow_area_vectors(n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == n {
        out.push(current.clone());
        return;
    }
    let top = current.last().map_or(0, |&g| g + 1);
    for g in 0..=top {
        current.push(g);
        grow_area_vectors(n, current, out);
        current.pop();
    }
}

/// Permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    permute(n, &mut current, &mut used, &mut out);
    out
}

fn permute(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if current.len() == n {
        out.push(current.clone());
        return;
    }
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            current.push(v);
            permute(n, current, used, out);
            current.pop();
            used[v] = false;
        }
    }
}

pub fn vectors_of(l: &LabelledDyckPath) -> (AreaLabelPair, ColumnLabelVector) {
    let pair = AreaLabelPair {
        g: l.path.area_vector(),
        p: l.labels.clone(),
    };
    let cols = ColumnLabelVector {
        cols: labelled_to_parking(l).prefs,
    };
    (pair, cols)
}

/// Every labelled path of order `n`: each permutation of `1..=n` placed on
/// each path, kept when labels increase up every column.
pub fn enumerate_labelled_paths(n: usize, limits: &Limits) -> Result<Vec<LabelledDyckPath>> {
    if n > ENUMERATION_GATE {
        return Err(Error::LimitExceeded {
            requested: n,
            max: ENUMERATION_GATE,
        });
    }
    let perms = permutations(n);
    let mut out = Vec::new();
    for path in enumerate_paths(n, limits)? {
        for p in &perms {
            if let Ok(l) = LabelledDyckPath::new(path.clone(), p.clone()) {
                out.push(l);
            }
        }
    }
    Ok(out)
}

/// The least column label vector of each content group, in lexicographic
/// order.
pub fn content_group_representatives(n: usize) -> Result<Vec<ColumnLabelVector>> {
    let mut least: BTreeMap<Vec<usize>, ColumnLabelVector> = BTreeMap::new();
    for f in enumerate_parking_functions(n)? {
        let (_, cols) = vectors_of(&parking_to_labelled(&f));
        let mut content = cols.cols.clone();
        content.sort_unstable();
        least
            .entry(content)
            .and_modify(|best| {
                if cols < *best {
                    *best = cols.clone();
                }
            })
            .or_insert(cols);
    }
    let mut reps: Vec<ColumnLabelVector> = least.into_values().collect();
    reps.sort();
    Ok(reps)
}

/// Checks that the representatives correspond one-to-one with `D_n` and that
/// `D_1 >= D_2` exactly when the first representative is componentwise at
/// most the second.
pub fn content_order_check(n: usize, limits: &Limits) -> Result<bool> {
    let reps = content_group_representatives(n)?;
    let mut paths = Vec::with_capacity(reps.len());
    for rep in &reps {
        let f = ParkingFunction::new(rep.cols.clone())?;
        paths.push(parking_to_labelled(&f).path);
    }
    let mut sorted = paths.clone();
    sorted.sort_by(|a, b| a.canonical_cmp(b));
    sorted.dedup();
    if sorted != enumerate_paths(n, limits)? {
        return Ok(false);
    }
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            let componentwise = a.cols.iter().zip(&b.cols).all(|(x, y)| x <= y);
            if componentwise != paths[j].is_below(&paths[i])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
