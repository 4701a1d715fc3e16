//! Sparse integer polynomials in one variable and in two variables `(q, t)`.
//!
//! Zero coefficients are never stored, so structural equality is polynomial
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: u32, coeff: impl Into<BigInt>) -> Self {
        let mut p = UniPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Coefficients listed from the constant term upwards.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = UniPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(e as u32, c.clone().into());
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.values().next_back().cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Dense coefficient list from the constant term up to the degree.
    pub fn coeffs(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, c * factor);
        }
        out
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: u32) -> UniPoly {
        UniPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `x^d p(1/x)`; every exponent must be at most `d`.
    pub fn reverse(&self, d: u32) -> UniPoly {
        assert!(self.degree().is_none_or(|deg| deg <= d), "reversal degree too small");
        UniPoly {
            terms: self.terms.iter().map(|(&e, c)| (d - e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        (0..k).fold(UniPoly::one(), |acc, _| &acc * self)
    }

    /// Long division that must leave no remainder and stay integral.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let d_deg = divisor.degree().ok_or(Error::InexactDivision)?;
        let lead = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut quot = UniPoly::zero();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                return Err(Error::InexactDivision);
            }
            let r_lead = rem.leading_coeff();
            if !(&r_lead % &lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let factor = UniPoly::monomial(r_deg - d_deg, r_lead / &lead);
            rem = &rem - &(&factor * divisor);
            quot = &quot + &factor;
        }
        Ok(quot)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        // Horner from the top exponent down
        let mut acc = BigInt::zero();
        let mut prev = self.degree().unwrap_or(0);
        for (&e, c) in self.terms.iter().rev() {
            acc *= Pow::pow(x, prev - e);
            acc += c;
            prev = e;
        }
        acc * Pow::pow(x, prev)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&e, c)| Pow::pow(x, e) * BigRational::from_integer(c.clone()))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// True iff coefficients alternate in sign going down from the top.
    pub fn signs_alternate(&self) -> bool {
        let top = match self.degree() {
            Some(d) => d,
            None => return true,
        };
        self.terms.iter().all(|(&e, c)| {
            let even = (top - e) % 2 == 0;
            c.is_positive() == even
        })
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        let terms: Vec<(String, bool)> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, c)| {
                let mono = match e {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{e}"),
                };
                (format_term(c.abs(), mono), c.is_negative())
            })
            .collect();
        join_signed(terms)
    }
}

fn format_term(abs: BigInt, mono: String) -> String {
    if mono.is_empty() {
        abs.to_string()
    } else if abs.is_one() {
        mono
    } else {
        format!("{abs}{mono}")
    }
}

fn join_signed(terms: Vec<(String, bool)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (body, negative)) in terms.into_iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl<'a> Add<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        self.scale(&BigInt::from(-1))
    }
}

#[derive(Serialize)]
struct UniTerm {
    exp: u32,
    coeff: String,
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&exp, c) in &self.terms {
            seq.serialize_element(&UniTerm {
                exp,
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

/// Polynomial in `q` and `t`, keyed by `(q-exponent, t-exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(q: u32, t: u32, coeff: impl Into<BigInt>) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(q, t, coeff.into());
        p
    }

    /// Builds from `(q-exponent, t-exponent, coefficient)` triples.
    pub fn from_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = BiPoly::zero();
        for &(q, t, c) in terms {
            p.add_term(q, t, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, q: u32, t: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((q, t)).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&(q, t));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        self.terms.get(&(q, t)).cloned().unwrap_or_default()
    }

    /// Nonzero terms ordered by q-exponent, then t-exponent, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(q, t), c)| ((t, q), c.clone())).collect(),
        }
    }

    /// Sets `t = 1`, leaving a polynomial in `q`.
    pub fn at_t_one(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(q, _), c) in &self.terms {
            out.add_term(q, c.clone());
        }
        out
    }

    /// `q^shift * p(q, 1/q)` as a polynomial in `q`. Fails if a term would
    /// get a negative exponent.
    pub fn at_t_inverse_q(&self, shift: u32) -> Option<UniPoly> {
        let mut out = UniPoly::zero();
        for (&(q, t), c) in &self.terms {
            let e = (shift + q).checked_sub(t)?;
            out.add_term(e, c.clone());
        }
        Some(out)
    }

    pub fn eval(&self, q: &BigRational, t: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(a, b), c)| Pow::pow(q, a) * Pow::pow(t, b) * BigRational::from_integer(c.clone()))
            .fold(BigRational::zero(), |x, y| x + y)
    }

    pub fn all_coeffs_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl From<&UniPoly> for BiPoly {
    /// Embeds a polynomial in `q`.
    fn from(p: &UniPoly) -> Self {
        BiPoly {
            terms: p.terms.iter().map(|(&e, c)| ((e, 0), c.clone())).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    /// Terms by descending q-exponent, then ascending t-exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let terms = keys
            .into_iter()
            .map(|&(q, t)| {
                let c = &self.terms[&(q, t)];
                let mut mono = String::new();
                for (var, e) in [("q", q), ("t", t)] {
                    match e {
                        0 => {}
                        1 => mono.push_str(var),
                        _ => mono.push_str(&format!("{var}^{e}")),
                    }
                }
                (format_term(c.abs(), mono), c.is_negative())
            })
            .collect();
        f.write_str(&join_signed(terms))
    }
}

impl<'a> Add<&'a BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(q, t), c) in &rhs.terms {
            out.add_term(q, t, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(q, t), c) in &rhs.terms {
            out.add_term(q, t, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term(a + c, b + d, x * y);
            }
        }
        out
    }
}

#[derive(Serialize)]
struct BiTerm {
    q: u32,
    t: u32,
    coeff: String,
}

impl Serialize for BiPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&(q, t), c) in &self.terms {
            seq.serialize_element(&BiTerm {
                q,
                t,
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}
