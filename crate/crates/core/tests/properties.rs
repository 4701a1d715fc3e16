mod common;

use dyck_poset::chromatic::{chromatic_polynomial, SimpleGraph};
use dyck_poset::parking::{
    area_from_parking, labelled_to_parking, parking_to_labelled, vectors_of, AreaLabelPair, ParkingFunction,
};
use dyck_poset::partition::{partition_to_path, path_to_partition};
use dyck_poset::poset::{ideal_to_path, path_to_ideal};
use dyck_poset::qt::{find_pole, gh_evaluate};
use dyck_poset::{BiPoly, DyckPath, ExactMatrix, Limits, Poset, UniPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::count_colourings;

/// A Dyck path of order `0..=max_n` from a weakly increasing column sequence.
fn dyck_path(max_n: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(0..=n, n))
        .prop_map(|raw| {
            let n = raw.len();
            let mut cols: Vec<usize> = Vec::with_capacity(n);
            for (i, &c) in raw.iter().enumerate() {
                let lo = cols.last().copied().unwrap_or(0);
                // column of the i-th north step lies in lo..=i
                cols.push(lo + c % (i + 1 - lo));
            }
            DyckPath::from_columns(&cols).unwrap()
        })
}

fn path_pair(max_n: usize) -> impl Strategy<Value = (DyckPath, DyckPath)> {
    (1..=max_n).prop_flat_map(|n| (dyck_path_of(n), dyck_path_of(n)))
}

fn dyck_path_of(n: usize) -> impl Strategy<Value = DyckPath> {
    proptest::collection::vec(0..=n, n).prop_map(move |raw| {
        let mut cols: Vec<usize> = Vec::with_capacity(n);
        for (i, &c) in raw.iter().enumerate() {
            let lo = cols.last().copied().unwrap_or(0);
            cols.push(lo + c % (i + 1 - lo));
        }
        DyckPath::from_columns(&cols).unwrap()
    })
}

fn parking_function(max_n: usize) -> impl Strategy<Value = ParkingFunction> {
    // sorted s with s[i] <= i+1, then shuffled
    (1..=max_n)
        .prop_flat_map(|n| (proptest::collection::vec(0usize..1000, n), Just(n)))
        .prop_map(|(raw, n)| {
            let mut prefs: Vec<usize> = Vec::with_capacity(n);
            for (i, &r) in raw.iter().enumerate() {
                let lo = prefs.last().copied().unwrap_or(1);
                prefs.push(lo + r % (i + 2 - lo));
            }
            prefs
        })
        .prop_shuffle()
        .prop_map(|prefs| ParkingFunction::new(prefs).unwrap())
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-20i64..=20, 0..6).prop_map(|c| UniPoly::from_coeffs(&c))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((0u32..4, 0u32..4, -9i64..=9), 0..6).prop_map(|t| BiPoly::from_terms(&t))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=7).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

fn graph(max_v: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_v).prop_flat_map(|v| {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        let m = pairs.len();
        (Just(v), proptest::sample::subsequence(pairs, 0..=m))
    })
}

proptest! {
    #[test]
    fn statistics_are_consistent(d in dyck_path(9)) {
        let n = d.order();
        let s = d.stats();
        prop_assert_eq!(s.area + s.inv, n * n.saturating_sub(1) / 2);
        prop_assert_eq!(s.area, s.area_vector.iter().sum::<usize>());
        if n > 0 {
            prop_assert_eq!(s.area_vector[0], 0);
        }
        prop_assert!(s.area_vector.windows(2).all(|w| w[1] <= w[0] + 1));
        prop_assert!(s.bounce <= n * n.saturating_sub(1) / 2);
        prop_assert_eq!(d.to_string().parse::<DyckPath>().unwrap(), d.clone());
        prop_assert_eq!(DyckPath::from_columns(&d.columns()).unwrap(), d);
    }

    #[test]
    fn partition_and_ideal_round_trips(d in dyck_path(9)) {
        let n = d.order();
        let lambda = path_to_partition(&d);
        prop_assert_eq!(lambda.area(), d.inv());
        prop_assert_eq!(partition_to_path(&lambda, n).unwrap(), d.clone());
        let ideal = path_to_ideal(&d);
        prop_assert_eq!(ideal.len(), d.area());
        prop_assert_eq!(ideal_to_path(&ideal, n), Some(d));
    }

    #[test]
    fn below_matches_partition_and_ideal_containment((a, b) in path_pair(8)) {
        let below = a.is_below(&b).unwrap();
        let la = path_to_partition(&a);
        let lb = path_to_partition(&b);
        let contains = la.len() >= lb.len() && lb.parts().iter().zip(la.parts()).all(|(x, y)| x <= y);
        prop_assert_eq!(below, contains);
        prop_assert_eq!(below, path_to_ideal(&a).is_subset(&path_to_ideal(&b)));
        if below && b.is_below(&a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if below {
            prop_assert!(a.area() <= b.area());
        }
    }

    #[test]
    fn parking_round_trip(f in parking_function(7)) {
        let l = parking_to_labelled(&f);
        prop_assert_eq!(labelled_to_parking(&l), f.clone());
        prop_assert_eq!(area_from_parking(&f), l.path().area());
        let (pair, cols) = vectors_of(&l);
        prop_assert!(pair.satisfies_conditions());
        prop_assert_eq!(pair.to_labelled().unwrap(), l.clone());
        // the column vector is the preference vector
        prop_assert_eq!(cols.cols, f.prefs().to_vec());
        let again = AreaLabelPair { g: pair.g.clone(), p: pair.p.clone() };
        prop_assert_eq!(again, pair);
    }

    #[test]
    fn polynomial_ring_laws(a in unipoly(), b in unipoly(), c in unipoly(), x in -5i64..=5) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a - &a, UniPoly::zero());
        let x = BigInt::from(x);
        prop_assert_eq!((&a * &b).eval_int(&x), a.eval_int(&x) * b.eval_int(&x));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }
    }

    #[test]
    fn bivariate_evaluation_is_a_homomorphism(a in bipoly(), b in bipoly(), q in rational(), t in rational()) {
        prop_assert_eq!((&a * &b).eval(&q, &t), a.eval(&q, &t) * b.eval(&q, &t));
        prop_assert_eq!((&a + &b).eval(&q, &t), a.eval(&q, &t) + b.eval(&q, &t));
        prop_assert_eq!(a.swap().eval(&q, &t), a.eval(&t, &q));
        prop_assert_eq!(a.swap().swap(), a);
    }

    #[test]
    fn unitriangular_inverse(entries in proptest::collection::vec(-4i64..=4, 36)) {
        let m = ExactMatrix::from_fn(6, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => BigInt::from(entries[i * 6 + j]),
            std::cmp::Ordering::Equal => BigInt::from(1),
            std::cmp::Ordering::Greater => BigInt::from(0),
        });
        let inv = m.invert_unitriangular().unwrap();
        prop_assert_eq!(&m * &inv, ExactMatrix::identity(6));
        prop_assert_eq!(&inv * &m, ExactMatrix::identity(6));
    }

    #[test]
    fn deletion_contraction_and_colourings((v, edges) in graph(7)) {
        let g = SimpleGraph::new(v, &edges).unwrap();
        let p = chromatic_polynomial(&g).unwrap();
        prop_assert_eq!(p.degree(), Some(v as u32));
        prop_assert_eq!(p.leading_coeff(), BigInt::from(1));
        prop_assert_eq!(p.coeff(0), BigInt::from(0));
        prop_assert!(p.signs_alternate());
        for k in 0..=3 {
            prop_assert_eq!(p.eval_int(&BigInt::from(k)), BigInt::from(count_colourings(v, &edges, k)));
        }
        if let Some(&(a, b)) = edges.first() {
            // P(G) = P(G - e) - P(G / e)
            let rest: Vec<_> = edges[1..].to_vec();
            let deleted = chromatic_polynomial(&SimpleGraph::new(v, &rest).unwrap()).unwrap();
            let relabel = |x: usize| if x == b { a } else if x > b { x - 1 } else { x };
            let mut merged: Vec<(usize, usize)> = rest
                .iter()
                .map(|&(x, y)| (relabel(x), relabel(y)))
                .filter(|(x, y)| x != y)
                .map(|(x, y)| (x.min(y), x.max(y)))
                .collect();
            merged.sort();
            merged.dedup();
            let contracted = chromatic_polynomial(&SimpleGraph::new(v - 1, &merged).unwrap()).unwrap();
            prop_assert_eq!(p, &deleted - &contracted);
        }
    }

    #[test]
    fn partition_sum_is_symmetric(n in 0usize..=4, q in rational(), t in rational()) {
        prop_assume!(find_pole(n, &q, &t).is_none() && find_pole(n, &t, &q).is_none());
        prop_assert_eq!(gh_evaluate(n, &q, &t).unwrap(), gh_evaluate(n, &t, &q).unwrap());
    }
}

#[test]
fn order_relation_is_a_partial_order() {
    let limits = Limits::default();
    for n in 0..=5 {
        let p = Poset::build(n, &limits).unwrap();
        let m = p.len();
        for i in 0..m {
            assert!(p.leq(i, i));
            assert!(p.leq(p.minimum(), i) && p.leq(i, p.maximum()));
            for j in 0..m {
                if i != j && p.leq(i, j) {
                    assert!(!p.leq(j, i));
                    assert!(i < j, "canonical order is a linear extension");
                    assert!(p.rank(i) < p.rank(j));
                }
                for k in 0..m {
                    if p.leq(i, j) && p.leq(j, k) {
                        assert!(p.leq(i, k));
                    }
                }
            }
        }
        for (i, j) in p.cover_edges() {
            assert_eq!(p.rank(j), p.rank(i) + 1, "graded by area");
        }
    }
}
