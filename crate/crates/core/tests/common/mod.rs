#![allow(dead_code)]

use dyck_poset::{BiPoly, UniPoly};
use num_bigint::BigInt;

/// Parses sums such as `q^{10} + 2q^6t^2 - 3499t` into (coefficient,
/// q-exponent, t-exponent) terms. Exponents of absent variables are 0.
fn parse_terms(text: &str) -> Vec<(BigInt, u32, u32)> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}' && *c != '$')
        .collect();
    let mut terms = Vec::new();
    let mut chars = cleaned.chars().peekable();
    while chars.peek().is_some() {
        let mut sign = BigInt::from(1);
        while let Some(&c) = chars.peek() {
            match c {
                '+' => {}
                '-' => sign = -sign,
                _ => break,
            }
            chars.next();
        }
        let mut digits = String::new();
        while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
            digits.push(c);
            chars.next();
        }
        let coeff: BigInt = if digits.is_empty() { BigInt::from(1) } else { digits.parse().unwrap() };
        let (mut q, mut t) = (0, 0);
        while let Some(&var) = chars.peek().filter(|c| c.is_ascii_alphabetic()) {
            chars.next();
            let mut exp = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut e = String::new();
                while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                    e.push(c);
                    chars.next();
                }
                exp = e.parse().unwrap();
            }
            match var {
                'q' => q += exp,
                't' => t += exp,
                other => panic!("unexpected variable {other}"),
            }
        }
        terms.push((sign * coeff, q, t));
    }
    terms
}

pub fn bipoly(text: &str) -> BiPoly {
    let mut p = BiPoly::zero();
    for (c, q, t) in parse_terms(text) {
        p.add_term(q, t, c);
    }
    p
}

/// Single-variable polynomial in either `q` or `t`.
pub fn unipoly(text: &str) -> UniPoly {
    let mut p = UniPoly::zero();
    for (c, q, t) in parse_terms(text) {
        assert!(q == 0 || t == 0, "two variables in {text}");
        p.add_term(q + t, c);
    }
    p
}

/// q,t-Catalan polynomials for n = 0..=5 (reference values).
pub const QT_TABLE: [&str; 6] = [
    "1",
    "1",
    "q + t",
    "q^3 + q^2t + qt^2 + qt + t^3",
    "q^6 + q^5t + q^4t + q^4t^2 + q^3t + q^3t^2 + q^3t^3 + q^2t^2 + q^2t^3 + \
     q^2t^4 + qt^3 + qt^4 + qt^5 + t^6",
    "q^{10} + q^9t + q^8t + q^8t^2 + q^7t + q^7t^2 + q^7t^3 + q^6t + 2q^6t^2 + q^6t^3 + \
     q^6t^4 + q^5t^2 + 2q^5t^3 + q^5t^4 + q^5t^5 + q^4t^2 + 2q^4t^3 + 2q^4t^4 + q^4t^5 + \
     q^4t^6 + q^3t^3 + 2q^3t^4 + 2q^3t^5 + q^3t^6 + q^3t^7 + q^2t^4 + q^2t^5 + 2q^2t^6 + \
     q^2t^7 + q^2t^8 + qt^6 + qt^7 + qt^8 + qt^9 + t^{10}",
];

/// Chain polynomials for n = 3, 4, 5 (reference values).
pub const CHAIN_POLY_TABLE: [(usize, &str); 3] = [
    (3, "1 + 5t + 9t^2 + 7t^3 + 2t^4"),
    (4, "1+14t+70t^2+176t^3+249t^4+202t^5+88t^6+16t^7"),
    (
        5,
        "1+42t+552t^2+3573t^3+13609t^4+33260t^5+54430t^6+\
         60517t^7+45248t^8+21824t^9+6144t^{10}+768t^{11}",
    ),
];

/// Chromatic polynomials of the Hasse diagrams for n = 0..=4 (reference values).
pub const CHROMATIC_TABLE: [&str; 5] = [
    "t",
    "t",
    "t^2 - t",
    "t^5 - 5t^4 + 10t^3 - 9t^2 + 3t",
    "t^{14} - 21t^{13} + 210t^{12} - 1321t^{11} + 5823t^{10} - 18968t^9+46908t^8-89034t^7\
     +129490t^6-142270t^5 + 114532t^4 - 63791t^3 + 21940t^2 - 3499t",
];

/// Path counts by decreasing rank for n = 0..=7.
pub const RANK_TABLE: [&[u64]; 8] = [
    &[1],
    &[1],
    &[1, 1],
    &[1, 1, 2, 1],
    &[1, 1, 2, 3, 3, 3, 1],
    &[1, 1, 2, 3, 5, 5, 7, 7, 6, 4, 1],
    &[1, 1, 2, 3, 5, 7, 9, 11, 14, 16, 16, 17, 14, 10, 5, 1],
    &[1, 1, 2, 3, 5, 7, 11, 13, 18, 22, 28, 32, 37, 40, 44, 43, 40, 35, 25, 15, 6, 1],
];

pub const D3_ZETA: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [0, 1, 0, 1, 1],
    [0, 0, 1, 1, 1],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
];

pub const D3_MOBIUS: [[i64; 5]; 5] = [
    [1, -1, -1, 1, 0],
    [0, 1, 0, -1, 0],
    [0, 0, 1, -1, 0],
    [0, 0, 0, 1, -1],
    [0, 0, 0, 0, 1],
];

pub fn rows(m: &[[i64; 5]; 5]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

/// Proper colourings of a graph on `vertices` vertices with `k` colours,
/// counted by plain backtracking over vertex assignments.
pub fn count_colourings(vertices: usize, edges: &[(usize, usize)], k: usize) -> u64 {
    let mut adj = vec![Vec::new(); vertices];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn go(v: usize, colour: &mut Vec<usize>, adj: &[Vec<usize>], k: usize) -> u64 {
        if v == adj.len() {
            return 1;
        }
        let mut total = 0;
        for c in 0..k {
            if adj[v].iter().all(|&u| u >= v || colour[u] != c) {
                colour[v] = c;
                total += go(v + 1, colour, adj, k);
            }
        }
        total
    }
    go(0, &mut vec![usize::MAX; vertices], &adj, k)
}
