//! q-analogs of the Catalan numbers, the q,t-Catalan polynomial and exact
//! evaluation of the Garsia-Haiman partition sum.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Limits;
use crate::partition::Partition;
use crate::path::enumerate_paths;
use crate::poly::{BiPoly, UniPoly};
use crate::poset::inv_recurrence;
use crate::{Error, Result};

fn pair(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// `[n]_q = (1 - q^n) / (1 - q)`.
pub fn q_int(n: usize) -> UniPoly {
    let one_minus_q = UniPoly::from_coeffs(&[1, -1]);
    let numerator = &UniPoly::one() - &UniPoly::monomial(n as u32, 1);
    numerator
        .div_exact(&one_minus_q)
        .expect("1 - q divides 1 - q^n")
}

pub fn q_factorial(n: usize) -> UniPoly {
    (1..=n).fold(UniPoly::one(), |acc, k| &acc * &q_int(k))
}

/// `[n]! / ([k]! [n-k]!)` by exact division.
pub fn q_binomial(n: usize, k: usize) -> Result<UniPoly> {
    if k > n {
        return Err(Error::OutOfRange { value: k, n });
    }
    q_factorial(n)
        .div_exact(&q_factorial(k))?
        .div_exact(&q_factorial(n - k))
}

/// `sum q^{area(D)}` over the paths of order `n`.
pub fn cn_area_by_paths(n: usize, limits: &Limits) -> Result<UniPoly> {
    let mut poly = UniPoly::zero();
    for d in enumerate_paths(n, limits)? {
        poly.add_term(d.area() as u32, BigInt::one());
    }
    Ok(poly)
}

/// First-return recurrence `C_{m+1} = sum_k q^k C_k C_{m-k}`.
pub fn cn_area_by_recurrence(n: usize) -> UniPoly {
    let mut table = vec![UniPoly::one()];
    for m in 0..n {
        let mut next = UniPoly::zero();
        for k in 0..=m {
            next = &next + &(&table[k] * &table[m - k]).shift(k as u32);
        }
        table.push(next);
    }
    table.swap_remove(n)
}

fn agree(quantity: &'static str, left: UniPoly, right: UniPoly) -> Result<UniPoly> {
    if left == right {
        Ok(left)
    } else {
        Err(Error::RouteMismatch {
            quantity,
            left: left.display_in("q"),
            right: right.display_in("q"),
        })
    }
}

/// Area generating function, checked against the recurrence.
pub fn cn_area(n: usize, limits: &Limits) -> Result<UniPoly> {
    agree("area q-analog", cn_area_by_paths(n, limits)?, cn_area_by_recurrence(n))
}

/// Inversion generating function: the area polynomial reversed about
/// `binom(n,2)`, checked against the inversion recurrence.
pub fn cn_inv(n: usize, limits: &Limits) -> Result<UniPoly> {
    let reversed = cn_area(n, limits)?.reverse(pair(n));
    agree("inv q-analog", reversed, inv_recurrence(n))
}

pub fn cn_maj_by_paths(n: usize, limits: &Limits) -> Result<UniPoly> {
    let mut poly = UniPoly::zero();
    for d in enumerate_paths(n, limits)? {
        poly.add_term(d.maj() as u32, BigInt::one());
    }
    Ok(poly)
}

/// `[2n choose n]_q / [n+1]_q`.
pub fn cn_maj_by_quotient(n: usize) -> Result<UniPoly> {
    q_binomial(2 * n, n)?.div_exact(&q_int(n + 1))
}

pub fn cn_maj(n: usize, limits: &Limits) -> Result<UniPoly> {
    agree("maj q-analog", cn_maj_by_paths(n, limits)?, cn_maj_by_quotient(n)?)
}

/// `sum q^{area(D)} t^{bounce(D)}`.
pub fn qt_catalan(n: usize, limits: &Limits) -> Result<BiPoly> {
    let mut poly = BiPoly::zero();
    for d in enumerate_paths(n, limits)? {
        poly.add_term(d.area() as u32, d.bounce() as u32, BigInt::one());
    }
    Ok(poly)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Specialization {
    /// `t = 1`.
    Area,
    /// `q^{binom(n,2)} C_n(q, 1/q)`.
    Maj,
    /// `q = t = 1`.
    Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Specialized {
    Poly(UniPoly),
    Count(BigInt),
}

pub fn qt_specialize(n: usize, mode: Specialization, limits: &Limits) -> Result<Specialized> {
    let poly = qt_catalan(n, limits)?;
    Ok(match mode {
        Specialization::Area => Specialized::Poly(poly.at_t_one()),
        Specialization::Maj => Specialized::Poly(
            poly.at_t_inverse_q(pair(n))
                .expect("bounce never exceeds binom(n,2) + area"),
        ),
        Specialization::Count => Specialized::Count(poly.coeff_sum()),
    })
}

/// Swapping `q` and `t` leaves the polynomial unchanged.
pub fn symmetry_check(n: usize, limits: &Limits) -> Result<bool> {
    let poly = qt_catalan(n, limits)?;
    Ok(poly.swap() == poly)
}

fn rpow(x: &BigRational, e: usize) -> BigRational {
    Pow::pow(x, e as u32)
}

/// Returns a description of the first vanishing denominator factor.
pub fn find_pole(n: usize, q: &BigRational, t: &BigRational) -> Option<String> {
    for mu in Partition::all_of(n) {
        for cell in mu.cell_stats() {
            let (a, l) = (cell.arm, cell.leg);
            if rpow(q, a) == rpow(t, l + 1) {
                return Some(format!("q^{a} = t^{} for {:?}", l + 1, mu.parts()));
            }
            if rpow(t, l) == rpow(q, a + 1) {
                return Some(format!("t^{l} = q^{} for {:?}", a + 1, mu.parts()));
            }
        }
    }
    None
}

/// Exact value of the partition sum at `(q, t)`:
///
/// `sum_mu t^{2 sum l} q^{2 sum a} (1-t)(1-q) prod'(1 - q^{a'} t^{l'})
/// sum q^{a'} t^{l'} / prod (q^a - t^{l+1})(t^l - q^{a+1})`,
///
/// where `prod'` skips the corner cell `a' = l' = 0`. The sum is an identity
/// for `n >= 1` only; the empty partition contributes 0, so `n = 0` returns
/// `C_0 = 1` directly.
pub fn gh_evaluate(n: usize, q: &BigRational, t: &BigRational) -> Result<BigRational> {
    if let Some(pole) = find_pole(n, q, t) {
        return Err(Error::PoleDetected(pole));
    }
    let one = BigRational::one();
    if n == 0 {
        return Ok(one);
    }
    let mut total = BigRational::zero();
    for mu in Partition::all_of(n) {
        let cells = mu.cell_stats();
        let sum_a: usize = cells.iter().map(|c| c.arm).sum();
        let sum_l: usize = cells.iter().map(|c| c.leg).sum();
        let mut term = rpow(t, 2 * sum_l) * rpow(q, 2 * sum_a) * (&one - t) * (&one - q);
        let mut b = BigRational::zero();
        for c in &cells {
            let weight = rpow(q, c.coarm) * rpow(t, c.coleg);
            if c.coarm != 0 || c.coleg != 0 {
                term *= &one - &weight;
            }
            b += weight;
        }
        term *= b;
        for c in &cells {
            let first = rpow(q, c.arm) - rpow(t, c.leg + 1);
            let second = rpow(t, c.leg) - rpow(q, c.arm + 1);
            term /= first * second;
        }
        total += term;
    }
    Ok(total)
}

/// `count` seeded rational points at which the partition sum of order `n`
/// has no pole.
pub fn admissible_points(n: usize, count: usize, seed: u64) -> Vec<(BigRational, BigRational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut random = || {
        let num: i64 = rng.gen_range(-12..=12);
        let den: i64 = rng.gen_range(1..=7);
        BigRational::new(num.into(), den.into())
    };
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let (q, t) = (random(), random());
        if find_pole(n, &q, &t).is_none() && !points.contains(&(q.clone(), t.clone())) {
            points.push((q, t));
        }
    }
    points
}
