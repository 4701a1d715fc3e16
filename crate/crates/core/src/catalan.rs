//! Catalan numbers by closed form, by the first-return recurrence and by the
//! reflection count of bad paths.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan_closed(n: usize) -> BigUint {
    let n = n as u64;
    binomial(2 * n, n) / (n + 1)
}

static RECURRENCE_MEMO: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// `E_0 = 1`, `E_n = sum_{k=1..n} E_{k-1} E_{n-k}`, memoized across calls.
pub fn catalan_recurrence(n: usize) -> BigUint {
    let mut memo = RECURRENCE_MEMO.lock().unwrap_or_else(|e| e.into_inner());
    if memo.is_empty() {
        memo.push(BigUint::one());
    }
    while memo.len() <= n {
        let m = memo.len();
        let next = (1..=m).fold(BigUint::zero(), |acc, k| acc + &memo[k - 1] * &memo[m - k]);
        memo.push(next);
    }
    memo[n].clone()
}

/// Monotone lattice words of order `n` that dip below the diagonal, counted
/// through the reflection bijection onto an `(n+1) x (n-1)` grid.
pub fn count_bad_paths(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    binomial(2 * n as u64, n as u64 - 1)
}
