//! Matrices of the incidence algebra of `D_n` and the chain counts they
//! produce.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::matrix::ExactMatrix;
use crate::poly::UniPoly;
use crate::poset::Poset;
use crate::{Error, Result};

/// `zeta(x, y) = 1` iff `x <= y`.
pub fn zeta_matrix(p: &Poset) -> ExactMatrix {
    ExactMatrix::from_fn(p.len(), |i, j| indicator(p.leq(i, j)))
}

pub fn delta_matrix(p: &Poset) -> ExactMatrix {
    ExactMatrix::identity(p.len())
}

/// `eta(x, y) = 1` iff `y` covers `x`.
pub fn eta_matrix(p: &Poset) -> ExactMatrix {
    ExactMatrix::from_fn(p.len(), |i, j| indicator(p.covers(i, j)))
}

fn indicator(b: bool) -> BigInt {
    if b {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

pub fn mobius_matrix(p: &Poset) -> Result<ExactMatrix> {
    zeta_matrix(p).invert_unitriangular()
}

/// `(zeta - delta)^k`: entry `(x, y)` counts chains `x = x_0 < ... < x_k = y`.
pub fn chains_of_length(p: &Poset, k: u32) -> ExactMatrix {
    (&zeta_matrix(p) - &delta_matrix(p)).pow(k)
}

/// `(2 delta - zeta)^{-1}`: entry `(x, y)` counts all chains from `x` to `y`.
pub fn total_chain_matrix(p: &Poset) -> Result<ExactMatrix> {
    let two_delta = delta_matrix(p).scale(&BigInt::from(2));
    (&two_delta - &zeta_matrix(p)).invert_unitriangular()
}

/// All chains, the empty chain included.
pub fn total_chains(p: &Poset) -> Result<BigUint> {
    let sum: BigInt = total_chain_matrix(p)?.entry_sum() + 1;
    Ok(sum.to_biguint().expect("chain counts are non-negative"))
}

/// `1 + sum_k c_k t^{k+1}` where `c_k` is the entry sum of `(zeta - delta)^k`.
///
/// The entry sums are accumulated as `1^T N^k 1` with a row vector, so no
/// matrix power is ever formed.
pub fn chain_polynomial(p: &Poset) -> UniPoly {
    let strict = &zeta_matrix(p) - &delta_matrix(p);
    let mut poly = UniPoly::one();
    let mut v = vec![BigInt::one(); p.len()];
    let mut k = 0u32;
    loop {
        let c: BigInt = v.iter().sum();
        if c.is_zero() {
            break;
        }
        poly.add_term(k + 1, c);
        v = strict.left_apply(&v);
        k += 1;
    }
    poly
}

/// Number of maximal chains, by two routes that must agree: entry
/// `(min, max)` of `(delta - eta)^{-1}`, and the entry sum of
/// `(zeta - delta)^{l}` with `l` the length of a maximal chain.
pub fn maximal_chain_count(p: &Poset) -> Result<BigUint> {
    let via_cover = (&delta_matrix(p) - &eta_matrix(p))
        .invert_unitriangular()?
        .get(p.minimum(), p.maximum())
        .clone();
    let via_strict = chains_of_length(p, p.height() as u32).entry_sum();
    if via_cover != via_strict {
        return Err(Error::RouteMismatch {
            quantity: "maximal chains",
            left: via_cover.to_string(),
            right: via_strict.to_string(),
        });
    }
    Ok(via_cover.to_biguint().expect("chain counts are non-negative"))
}

/// Pairs `x <= y`, the dimension of the incidence algebra.
pub fn interval_count(p: &Poset) -> BigUint {
    zeta_matrix(p)
        .entry_sum()
        .to_biguint()
        .expect("zeta entries are 0 or 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Limits;

    fn d(n: usize) -> Poset {
        Poset::build(n, &Limits::default()).unwrap()
    }

    #[test]
    fn order_three_matrices() {
        let p = d(3);
        let zeta = ExactMatrix::from_rows(&[
            vec![1, 1, 1, 1, 1],
            vec![0, 1, 0, 1, 1],
            vec![0, 0, 1, 1, 1],
            vec![0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(zeta_matrix(&p), zeta);
        let mu = mobius_matrix(&p).unwrap();
        let expected = ExactMatrix::from_rows(&[
            vec![1, -1, -1, 1, 0],
            vec![0, 1, 0, -1, 0],
            vec![0, 0, 1, -1, 0],
            vec![0, 0, 0, 1, -1],
            vec![0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(mu, expected);
        assert_eq!(eta_matrix(&p).entry_sum(), BigInt::from(5));
    }

    #[test]
    fn chain_counts_order_three() {
        let p = d(3);
        assert_eq!(chains_of_length(&p, 0), ExactMatrix::identity(5));
        assert_eq!(chains_of_length(&p, 1).entry_sum(), BigInt::from(9));
        assert_eq!(chains_of_length(&p, 2).entry_sum(), BigInt::from(7));
        assert_eq!(total_chains(&p).unwrap(), BigUint::from(24u32));
        assert_eq!(chain_polynomial(&p), UniPoly::from_coeffs(&[1, 5, 9, 7, 2]));
        assert_eq!(maximal_chain_count(&p).unwrap(), BigUint::from(2u32));
        assert_eq!(interval_count(&p), BigUint::from(14u32));
    }

    #[test]
    fn single_element() {
        let p = d(1);
        assert_eq!(total_chains(&p).unwrap(), BigUint::from(2u32));
        assert_eq!(chain_polynomial(&p), UniPoly::from_coeffs(&[1, 1]));
        assert_eq!(maximal_chain_count(&p).unwrap(), BigUint::one());
    }
}
