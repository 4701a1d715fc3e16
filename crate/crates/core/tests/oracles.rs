//! Brute-force oracles that share no code with the library routes they check.

mod common;

use std::collections::{BTreeSet, HashMap};

use dyck_poset::catalan::{catalan_closed, count_bad_paths};
use dyck_poset::chromatic::{chromatic_polynomial, SimpleGraph};
use dyck_poset::incidence::{chain_polynomial, interval_count, maximal_chain_count, mobius_matrix, total_chains};
use dyck_poset::parking::{content_group_representatives, count_parking_functions};
use dyck_poset::path::enumerate_paths;
use dyck_poset::poset::{rank_sizes, CensusMode};
use dyck_poset::qt::{cn_area, cn_maj, q_binomial, qt_catalan};
use dyck_poset::tableau::{staircase_maxchain, syt_count};
use dyck_poset::{DyckPath, Limits, Partition, Poset, Step, UniPoly};
use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{bipoly, count_colourings, unipoly};

/// Every N/E word with `n` of each letter, as booleans (true = N).
fn all_words(n: usize) -> Vec<Vec<bool>> {
    (0u32..1 << (2 * n))
        .filter(|m| m.count_ones() as usize == n)
        .map(|m| (0..2 * n).map(|i| m >> (2 * n - 1 - i) & 1 == 1).collect())
        .collect()
}

fn stays_above(word: &[bool]) -> bool {
    let mut h = 0i32;
    word.iter().all(|&north| {
        h += if north { 1 } else { -1 };
        h >= 0
    })
}

fn word_string(word: &[bool]) -> String {
    word.iter().map(|&north| if north { 'N' } else { 'E' }).collect()
}

/// Unit cells `(x, y)` (lower-left corners) strictly above the diagonal and
/// under the path, found by walking the path.
fn cells_under(d: &DyckPath) -> BTreeSet<(usize, usize)> {
    let (mut x, mut y) = (0, 0);
    let mut cells = BTreeSet::new();
    for step in d.steps() {
        match step {
            Step::North => y += 1,
            Step::East => {
                for row in x + 1..y {
                    cells.insert((x, row));
                }
                x += 1;
            }
        }
    }
    cells
}

/// Bounce path walked on the grid from `(n, n)`: west along the current row
/// until the path's north step into that row, then south to the diagonal.
fn bounce_by_walking(d: &DyckPath) -> usize {
    let mut points = Vec::new();
    let (mut x, mut y) = (0, 0);
    for step in d.steps() {
        let from = (x, y);
        match step {
            Step::North => y += 1,
            Step::East => x += 1,
        }
        points.push((from, (x, y)));
    }
    let mut k = d.order();
    let mut total = 0;
    while k > 0 {
        let entry = points
            .iter()
            .find(|(a, b)| b.1 == k && a.1 == k - 1 && a.0 == b.0)
            .expect("the path climbs through every row");
        k = entry.0 .0;
        total += k;
    }
    total
}

fn maj_by_definition(word: &[bool]) -> usize {
    (1..word.len()).filter(|&i| !word[i - 1] && word[i]).sum()
}

#[test]
fn parser_reads_reference_forms() {
    let p = bipoly("q^{10} + 2q^6t^2 - qt");
    assert_eq!(p.coeff(10, 0), BigInt::from(1));
    assert_eq!(p.coeff(6, 2), BigInt::from(2));
    assert_eq!(p.coeff(1, 1), BigInt::from(-1));
    assert_eq!(unipoly("1 + 5t - 3499t").coeff(1), BigInt::from(-3494));
}

#[test]
fn bad_paths_and_catalan_by_filtering_words() {
    for n in 0..=10 {
        let words = all_words(n);
        let good = words.iter().filter(|w| stays_above(w)).count();
        let bad = words.len() - good;
        assert_eq!(BigUint::from(good), catalan_closed(n), "n={n}");
        assert_eq!(BigUint::from(bad), count_bad_paths(n), "n={n}");
    }
}

#[test]
fn enumeration_matches_filtered_words_in_canonical_order() {
    let limits = Limits::default();
    for n in 0..=7 {
        let mut expected: Vec<(usize, Vec<bool>, String)> = all_words(n)
            .into_iter()
            .filter(|w| stays_above(w))
            .map(|w| {
                let d: DyckPath = word_string(&w).parse().unwrap();
                // false < true would put E first, so compare the negation
                let key: Vec<bool> = w.iter().map(|&north| !north).collect();
                (cells_under(&d).len(), key, word_string(&w))
            })
            .collect();
        expected.sort();
        let got: Vec<String> = enumerate_paths(n, &limits).unwrap().iter().map(|d| d.to_string()).collect();
        let expected: Vec<String> = expected.into_iter().map(|(_, _, w)| w).collect();
        assert_eq!(got, expected, "n={n}");
    }
}

#[test]
fn statistics_by_geometry() {
    let limits = Limits::default();
    for n in 0..=7usize {
        let top: usize = n * n.saturating_sub(1) / 2;
        for d in enumerate_paths(n, &limits).unwrap() {
            let word: Vec<bool> = d.steps().iter().map(|s| *s == Step::North).collect();
            let stats = d.stats();
            let cells = cells_under(&d);
            assert_eq!(stats.area, cells.len(), "{d}");
            assert_eq!(stats.inv, top - cells.len(), "{d}");
            assert_eq!(stats.maj, maj_by_definition(&word), "{d}");
            assert_eq!(stats.bounce, bounce_by_walking(&d), "{d}");
            // row i of the area vector counts the cells in that row
            for (i, &g) in stats.area_vector.iter().enumerate() {
                let row = i;
                assert_eq!(g, cells.iter().filter(|c| c.1 == row).count(), "{d} row {row}");
            }
        }
    }
}

#[test]
fn order_is_containment_of_cell_sets() {
    let limits = Limits::default();
    let expected_pairs = [(0, 0, 0), (1, 0, 0), (2, 1, 1), (3, 9, 5), (4, 70, 21), (5, 552, 84)];
    for (n, strict, covers) in expected_pairs {
        let p = Poset::build(n, &limits).unwrap();
        let cells: Vec<_> = p.elements().iter().map(cells_under).collect();
        let leq = |i: usize, j: usize| cells[i].is_subset(&cells[j]);
        let mut strict_count = 0;
        let mut cover_count = 0;
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert_eq!(p.leq(i, j), leq(i, j), "n={n} {i} {j}");
                if i != j && leq(i, j) {
                    strict_count += 1;
                    let between = (0..p.len()).any(|k| k != i && k != j && leq(i, k) && leq(k, j));
                    assert_eq!(p.covers(i, j), !between, "n={n} {i} {j}");
                    cover_count += usize::from(!between);
                }
            }
        }
        assert_eq!((strict_count, cover_count), (strict, covers), "n={n}");
        assert_eq!(p.strict_pair_count(), strict);
    }
}

#[test]
fn intervals_by_pair_count() {
    let limits = Limits::default();
    for n in 0..=6 {
        let p = Poset::build(n, &limits).unwrap();
        let pairs = (0..p.len()).flat_map(|i| (0..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p.leq(i, j)).count();
        assert_eq!(interval_count(&p), BigUint::from(pairs), "n={n}");
    }
}

/// Chains counted by length through a dynamic program over the canonical
/// order, which is a linear extension.
#[allow(clippy::needless_range_loop)]
fn chain_poly_by_dp(p: &Poset) -> UniPoly {
    let m = p.len();
    // ending[x][k]: chains with k+1 elements whose top is x
    let mut ending: Vec<Vec<BigInt>> = vec![Vec::new(); m];
    for x in 0..m {
        let mut counts = vec![BigInt::from(1)];
        for y in 0..x {
            if p.leq(y, x) {
                for (k, c) in ending[y].iter().enumerate() {
                    if counts.len() <= k + 1 {
                        counts.resize(k + 2, BigInt::from(0));
                    }
                    counts[k + 1] += c;
                }
            }
        }
        ending[x] = counts;
    }
    let mut poly = UniPoly::one();
    for counts in &ending {
        for (k, c) in counts.iter().enumerate() {
            poly.add_term(k as u32 + 1, c.clone());
        }
    }
    poly
}

#[test]
fn chains_by_dynamic_programming() {
    let limits = Limits::default();
    for n in 0..=6 {
        let p = Poset::build(n, &limits).unwrap();
        let by_dp = chain_poly_by_dp(&p);
        assert_eq!(chain_polynomial(&p), by_dp, "n={n}");
        let total: BigInt = by_dp.coeffs().iter().sum();
        assert_eq!(BigInt::from(total_chains(&p).unwrap()), total, "n={n}");
    }
}

/// Standard Young tableaux by removing a corner cell in every possible way.
fn syt_by_corners(parts: &[usize], memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    if parts.iter().sum::<usize>() == 0 {
        return BigUint::from(1u32);
    }
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let mut total = BigUint::from(0u32);
    for r in 0..parts.len() {
        let next = parts.get(r + 1).copied().unwrap_or(0);
        if parts[r] > next {
            let mut smaller = parts.to_vec();
            smaller[r] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += syt_by_corners(&smaller, memo);
        }
    }
    memo.insert(parts.to_vec(), total.clone());
    total
}

#[test]
fn tableaux_by_corner_removal() {
    let mut memo = HashMap::new();
    for size in 0..=10 {
        for lambda in Partition::all_of(size) {
            assert_eq!(syt_count(&lambda), syt_by_corners(lambda.parts(), &mut memo), "{lambda:?}");
        }
    }
    for n in 0..=7 {
        let stair: Vec<usize> = (1..n).rev().collect();
        assert_eq!(staircase_maxchain(n), syt_by_corners(&stair, &mut memo), "n={n}");
    }
    assert_eq!(staircase_maxchain(6), BigUint::from(292_864u32));
}

#[test]
fn maximal_chains_by_hasse_walks() {
    let limits = Limits::default();
    for n in 0..=6 {
        let p = Poset::build(n, &limits).unwrap();
        // walks from the minimum along covers, in canonical order
        let mut walks = vec![BigUint::from(0u32); p.len()];
        walks[0] = BigUint::from(1u32);
        for j in 1..p.len() {
            walks[j] = (0..j).filter(|&i| p.covers(i, j)).map(|i| walks[i].clone()).sum();
        }
        assert_eq!(maximal_chain_count(&p).unwrap(), walks[p.len() - 1], "n={n}");
        assert_eq!(staircase_maxchain(n), walks[p.len() - 1], "n={n}");
    }
}

#[test]
fn mobius_by_recursion() {
    let limits = Limits::default();
    for n in 0..=5 {
        let p = Poset::build(n, &limits).unwrap();
        let mu = mobius_matrix(&p).unwrap();
        let m = p.len();
        for x in 0..m {
            let mut row = vec![0i64; m];
            for y in x..m {
                if !p.leq(x, y) {
                    continue;
                }
                row[y] = if x == y {
                    1
                } else {
                    -(x..y).filter(|&z| p.leq(x, z) && p.leq(z, y)).map(|z| row[z]).sum::<i64>()
                };
                assert_eq!(*mu.get(x, y), BigInt::from(row[y]), "n={n} ({x},{y})");
                assert_eq!(i64::from(p.mobius_direct(x, y).value), row[y], "n={n} ({x},{y})");
            }
        }
    }
}

#[test]
fn antichains_by_subsets() {
    let limits = Limits::default();
    for n in 0..=4 {
        let p = Poset::build(n, &limits).unwrap();
        let m = p.len();
        let antichains: Vec<u32> = (0u32..1 << m)
            .filter(|&s| {
                (0..m).all(|i| (0..m).all(|j| i == j || s >> i & 1 == 0 || s >> j & 1 == 0 || !p.leq(i, j)))
            })
            .collect();
        let width = antichains.iter().map(|s| s.count_ones()).max().unwrap() as usize;
        let maximal: Vec<u32> = antichains
            .iter()
            .copied()
            .filter(|&s| (0..m).all(|x| s >> x & 1 == 1 || (0..m).any(|y| s >> y & 1 == 1 && (p.leq(x, y) || p.leq(y, x)))))
            .collect();
        let histogram = |sets: &[u32]| {
            let mut h = vec![0u64; width + 1];
            for s in sets {
                h[s.count_ones() as usize] += 1;
            }
            h
        };
        let all = p.antichain_census(CensusMode::All, &limits).unwrap();
        assert_eq!(all.by_size, histogram(&antichains), "n={n}");
        let max = p.antichain_census(CensusMode::Maximal, &limits).unwrap();
        let mut expected = histogram(&maximal);
        while expected.last() == Some(&0) {
            expected.pop();
        }
        assert_eq!(max.by_size, expected, "n={n}");
        let widest = p.antichain_census(CensusMode::Maximum, &limits).unwrap();
        assert_eq!(widest.largest, width);
        assert_eq!(widest.total, BigUint::from(histogram(&antichains)[width]), "n={n}");
    }
}

#[test]
fn rank_sizes_by_area_histogram() {
    let limits = Limits::default();
    for n in 0..=8usize {
        let top: usize = n * n.saturating_sub(1) / 2;
        let mut by_rank = vec![0u64; top + 1];
        for d in enumerate_paths(n, &limits).unwrap() {
            by_rank[top - cells_under(&d).len()] += 1;
        }
        let got: Vec<BigUint> = rank_sizes(n);
        let expected: Vec<BigUint> = by_rank.into_iter().map(BigUint::from).collect();
        assert_eq!(got, expected, "n={n}");
    }
}

#[test]
fn q_analogs_by_direct_sums() {
    let limits = Limits::default();
    for n in 0..=7 {
        let mut area = UniPoly::zero();
        let mut maj = UniPoly::zero();
        for w in all_words(n).into_iter().filter(|w| stays_above(w)) {
            let d: DyckPath = word_string(&w).parse().unwrap();
            area.add_term(cells_under(&d).len() as u32, BigInt::from(1));
            maj.add_term(maj_by_definition(&w) as u32, BigInt::from(1));
        }
        assert_eq!(cn_area(n, &limits).unwrap(), area, "n={n}");
        assert_eq!(cn_maj(n, &limits).unwrap(), maj, "n={n}");
    }
}

#[test]
fn q_binomial_by_subset_sums() {
    for n in 0..=9usize {
        for k in 0..=n {
            let mut expected = UniPoly::zero();
            for s in 0u32..1 << n {
                if s.count_ones() as usize == k {
                    let sum: usize = (0..n).filter(|i| s >> i & 1 == 1).map(|i| i + 1).sum();
                    expected.add_term((sum - k * (k + 1) / 2) as u32, BigInt::from(1));
                }
            }
            assert_eq!(q_binomial(n, k).unwrap(), expected, "n={n} k={k}");
        }
    }
}

#[test]
fn qt_catalan_by_geometric_statistics() {
    let limits = Limits::default();
    for n in 0..=6 {
        let mut expected = dyck_poset::BiPoly::zero();
        for d in enumerate_paths(n, &limits).unwrap() {
            expected.add_term(cells_under(&d).len() as u32, bounce_by_walking(&d) as u32, BigInt::from(1));
        }
        assert_eq!(qt_catalan(n, &limits).unwrap(), expected, "n={n}");
    }
}

fn check_graph(vertices: usize, edges: &[(usize, usize)], max_k: usize) {
    let g = SimpleGraph::new(vertices, edges).unwrap();
    let poly = chromatic_polynomial(&g).unwrap();
    for k in 0..=max_k {
        let expected = count_colourings(vertices, edges, k);
        assert_eq!(
            poly.eval_int(&BigInt::from(k)),
            BigInt::from(expected),
            "{vertices} vertices, edges {edges:?}, k={k}"
        );
    }
}

#[test]
fn colourings_of_every_graph_up_to_six_vertices() {
    for vertices in 0..=6 {
        let pairs: Vec<(usize, usize)> = (0..vertices).flat_map(|u| (u + 1..vertices).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            check_graph(vertices, &edges, 3);
        }
    }
}

#[test]
fn colourings_of_sampled_graphs_on_seven_and_eight_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00C0_1002);
    for vertices in [7, 8] {
        let pairs: Vec<(usize, usize)> = (0..vertices).flat_map(|u| (u + 1..vertices).map(move |v| (u, v))).collect();
        for _ in 0..3000 {
            let density: f64 = rng.gen_range(0.05..0.95);
            let edges: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(density)).collect();
            check_graph(vertices, &edges, 3);
        }
        // the empty and complete graphs are always included
        check_graph(vertices, &[], 3);
        check_graph(vertices, &pairs, 3);
    }
}

#[test]
fn labelled_paths_by_brute_force() {
    let limits = Limits::default();
    for n in 0..=5 {
        let perms = permutations(n);
        let mut count = 0u64;
        for d in enumerate_paths(n, &limits).unwrap() {
            let cols = d.columns();
            for perm in &perms {
                // consecutive north steps in one column carry increasing labels
                if (1..n).all(|i| cols[i] != cols[i - 1] || perm[i] > perm[i - 1]) {
                    count += 1;
                }
            }
        }
        assert_eq!(BigUint::from(count), count_parking_functions(n), "n={n}");
        assert_eq!(count, (n as u64 + 1).pow(n.saturating_sub(1) as u32), "n={n}");
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out
}

#[test]
fn content_representatives_rebuild_the_poset() {
    let limits = Limits::default();
    for n in 1..=5 {
        let p = Poset::build(n, &limits).unwrap();
        let reps = content_group_representatives(n).unwrap();
        assert_eq!(BigUint::from(reps.len()), catalan_closed(n));
        // a sorted representative puts labels 1..n bottom-up, so the i-th
        // north step sits in column cols[i] - 1
        let index: Vec<usize> = reps
            .iter()
            .map(|r| {
                let columns: Vec<usize> = r.cols.iter().map(|c| c - 1).collect();
                p.index_of(&DyckPath::from_columns(&columns).unwrap()).unwrap()
            })
            .collect();
        for (a, ra) in reps.iter().enumerate() {
            for (b, rb) in reps.iter().enumerate() {
                let componentwise = ra.cols.iter().zip(&rb.cols).all(|(x, y)| x <= y);
                // smaller columns mean a higher path
                assert_eq!(componentwise, p.leq(index[b], index[a]), "n={n}");
            }
        }
    }
}
