//! Vendored integer-sequence snapshots and the verifier that recomputes them.
//!
//! Snapshot files use the b-file layout: one `index value` pair per line,
//! `#` starting a comment line. The manifest records how each sequence's
//! indices line up with the order `n`.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::catalan::{catalan_closed, catalan_recurrence};
use crate::chromatic::{chromatic_polynomial, hasse_graph};
use crate::config::Limits;
use crate::incidence::{interval_count, maximal_chain_count, total_chains};
use crate::parking::{count_parking_functions, enumerate_parking_functions, ENUMERATION_GATE};
use crate::path::enumerate_paths;
use crate::poset::{rank_sizes, CensusMode, Poset};
use crate::{Error, Result};

const MANIFEST: &str = include_str!("../data/manifest.toml");

const SNAPSHOTS: &[(&str, &str)] = &[
    ("A000108.txt", include_str!("../data/A000108.txt")),
    ("A000272.txt", include_str!("../data/A000272.txt")),
    ("A005118.txt", include_str!("../data/A005118.txt")),
    ("A005700.txt", include_str!("../data/A005700.txt")),
    ("A129176.txt", include_str!("../data/A129176.txt")),
    ("A141622.txt", include_str!("../data/A141622.txt")),
    ("A143672.txt", include_str!("../data/A143672.txt")),
    ("A143673.txt", include_str!("../data/A143673.txt")),
    ("A143674.txt", include_str!("../data/A143674.txt")),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSnapshot {
    pub id: String,
    pub terms: Vec<(usize, BigInt)>,
}

impl SequenceSnapshot {
    pub fn parse(id: &str, text: &str) -> Result<Self> {
        let mut terms: Vec<(usize, BigInt)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::SnapshotParse(format!("{id} line {}: {line:?}", lineno + 1));
            let mut fields = line.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(bad());
            };
            let index: usize = index.parse().map_err(|_| bad())?;
            let value: BigInt = value.parse().map_err(|_| bad())?;
            if terms.last().is_some_and(|&(prev, _)| prev >= index) {
                return Err(Error::SnapshotParse(format!(
                    "{id} line {}: index {index} is not increasing",
                    lineno + 1
                )));
            }
            terms.push((index, value));
        }
        Ok(SequenceSnapshot {
            id: id.to_string(),
            terms,
        })
    }

    pub fn get(&self, index: usize) -> Option<&BigInt> {
        self.terms
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.terms[k].1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    /// One term per order.
    Scalar,
    /// One row of terms per order, rows concatenated.
    Triangle,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
pub struct ManifestEntry {
    pub id: String,
    pub file: String,
    pub quantity: String,
    pub layout: Layout,
    pub offset: usize,
    pub min_n: usize,
    pub max_n: usize,
}

#[derive(Debug, Deserialize)]
struct Manifest {
    sequence: Vec<ManifestEntry>,
}

pub fn manifest() -> Vec<ManifestEntry> {
    toml::from_str::<Manifest>(MANIFEST)
        .expect("bundled manifest is valid")
        .sequence
}

pub fn manifest_entry(id: &str) -> Result<ManifestEntry> {
    manifest()
        .into_iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownSequence(id.to_string()))
}

/// The bundled snapshot for `id`.
pub fn bundled_snapshot(id: &str) -> Result<SequenceSnapshot> {
    let entry = manifest_entry(id)?;
    let text = SNAPSHOTS
        .iter()
        .find(|(file, _)| *file == entry.file)
        .map(|(_, text)| *text)
        .ok_or_else(|| Error::UnknownSequence(id.to_string()))?;
    SequenceSnapshot::parse(&entry.id, text)
}

/// Reads the snapshot for `id` from `dir` instead of the bundled copy.
pub fn snapshot_from_dir(id: &str, dir: &Path) -> Result<SequenceSnapshot> {
    let entry = manifest_entry(id)?;
    let text = std::fs::read_to_string(dir.join(&entry.file))
        .map_err(|e| Error::SnapshotParse(format!("{}: {e}", entry.file)))?;
    SequenceSnapshot::parse(&entry.id, &text)
}

fn int(x: BigUint) -> BigInt {
    BigInt::from(x)
}

fn agree(quantity: &'static str, left: BigUint, right: BigUint) -> Result<BigUint> {
    if left == right {
        Ok(left)
    } else {
        Err(Error::RouteMismatch {
            quantity,
            left: left.to_string(),
            right: right.to_string(),
        })
    }
}

/// The terms contributed by order `n`: one for scalar sequences, a whole row
/// for triangles.
pub fn compute_terms(quantity: &str, n: usize, limits: &Limits) -> Result<Vec<BigInt>> {
    let poset = || Poset::build(n, limits);
    let one = |x: BigUint| Ok(vec![int(x)]);
    match quantity {
        "catalan" => {
            let closed = agree("catalan", catalan_closed(n), catalan_recurrence(n))?;
            if n <= limits.max_n {
                let listed = BigUint::from(enumerate_paths(n, limits)?.len());
                agree("catalan", closed.clone(), listed)?;
            }
            one(closed)
        }
        "intervals" => one(interval_count(&poset()?)),
        "total-chains" => one(total_chains(&poset()?)?),
        "maximal-chains" => one(maximal_chain_count(&poset()?)?),
        "antichains" => one(poset()?.antichain_census(CensusMode::All, limits)?.total),
        "maximal-antichains" => one(poset()?.antichain_census(CensusMode::Maximal, limits)?.total),
        "rank-sizes" => Ok(rank_sizes(n).into_iter().map(int).collect()),
        "chromatic" => {
            let p = chromatic_polynomial(&hasse_graph(&poset()?))?;
            let top = p.degree().unwrap_or(0);
            Ok((1..=top).rev().map(|e| p.coeff(e).abs()).collect())
        }
        "parking" => {
            let closed = count_parking_functions(n);
            if n <= ENUMERATION_GATE {
                let listed = BigUint::from(enumerate_parking_functions(n)?.len());
                agree("parking functions", closed.clone(), listed)?;
            }
            one(closed)
        }
        other => Err(Error::UnknownSequence(other.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyEntry {
    pub n: usize,
    pub index: usize,
    pub expected: Option<String>,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub quantity: String,
    pub entries: Vec<VerifyEntry>,
    pub pass: bool,
}

/// Recomputes the sequence for orders `min_n..=max_n` (the manifest range
/// when `max_n` is `None`) and compares term by term.
pub fn verify_sequence(
    id: &str,
    max_n: Option<usize>,
    snapshot: &SequenceSnapshot,
    limits: &Limits,
) -> Result<VerifyReport> {
    let entry = manifest_entry(id)?;
    let max_n = max_n.unwrap_or(entry.max_n);
    let mut entries = Vec::new();
    let mut next_index = 0;
    for n in entry.min_n..=max_n {
        let terms = compute_terms(&entry.quantity, n, limits)?;
        for computed in terms {
            let index = match entry.layout {
                Layout::Scalar => n + entry.offset,
                Layout::Triangle => {
                    next_index += 1;
                    next_index - 1 + entry.offset
                }
            };
            let expected = snapshot.get(index);
            entries.push(VerifyEntry {
                n,
                index,
                expected: expected.map(BigInt::to_string),
                computed: computed.to_string(),
                pass: expected == Some(&computed),
            });
        }
    }
    let pass = entries.iter().all(|e| e.pass);
    Ok(VerifyReport {
        id: entry.id,
        quantity: entry.quantity,
        entries,
        pass,
    })
}

/// Terms of the snapshot grouped by order, for display.
pub fn terms_by_order(report: &VerifyReport) -> BTreeMap<usize, Vec<String>> {
    let mut out: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for e in &report.entries {
        out.entry(e.n).or_default().push(e.computed.clone());
    }
    out
}
