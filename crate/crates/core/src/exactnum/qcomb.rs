//! q-special combinatorics: q-numbers, q-factorials, Gaussian q-binomials.
//!
//! Conventions for out-of-range arguments follow the usual ones: the
//! q-number of a nonpositive integer is the empty sum 0, the q-factorial the
//! empty product 1, and the q-binomial vanishes outside `0 <= p <= n`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qpoly::QPoly;

/// `{n}_q = 1 + q + ... + q^(n-1)`; 0 for `n <= 0`.
pub fn q_number(n: i64) -> QPoly {
    if n <= 0 {
        return QPoly::zero();
    }
    QPoly::new(vec![BigRational::one(); n as usize])
}

/// `{n}_{q^k}` — the q-number taken in the base `q^k`.
pub fn q_number_base(n: i64, k: u32) -> QPoly {
    if n <= 0 {
        return QPoly::zero();
    }
    if k == 0 {
        return QPoly::from_int(n);
    }
    let mut coeffs = vec![BigRational::zero(); (n as usize - 1) * k as usize + 1];
    for l in 0..n as usize {
        coeffs[l * k as usize] = BigRational::one();
    }
    QPoly::new(coeffs)
}

/// `{n}_q! = {1}_q {2}_q ... {n}_q`; 1 for `n <= 0`.
pub fn q_factorial(n: i64) -> QPoly {
    let mut acc = QPoly::one();
    for l in 1..=n.max(0) {
        acc = &acc * &q_number(l);
    }
    acc
}

/// Gaussian q-binomial coefficient, by the Pascal recurrence
/// `[n+1, p] = [n, p-1] + q^p [n, p]` with memoization.
///
/// Zero for `p < 0` or `p > n`; 1 for `p = 0` or `p = n`.
pub fn q_binomial(n: i64, p: i64) -> QPoly {
    if p < 0 || p > n {
        return QPoly::zero();
    }
    if p == 0 || p == n {
        return QPoly::one();
    }
    static MEMO: Mutex<Option<HashMap<(i64, i64), QPoly>>> = Mutex::new(None);
    let mut guard = MEMO.lock().unwrap();
    let memo = guard.get_or_insert_with(HashMap::new);
    fn compute(memo: &mut HashMap<(i64, i64), QPoly>, n: i64, p: i64) -> QPoly {
        if p <= 0 || p >= n {
            return q_binomial_unmemoized(n, p);
        }
        if let Some(hit) = memo.get(&(n, p)) {
            return hit.clone();
        }
        let left = compute(memo, n - 1, p - 1);
        let right = compute(memo, n - 1, p);
        let value = &left + &(&QPoly::q_pow(p as usize) * &right);
        memo.insert((n, p), value.clone());
        value
    }
    compute(memo, n, p)
}

fn q_binomial_unmemoized(n: i64, p: i64) -> QPoly {
    if p < 0 || p > n {
        QPoly::zero()
    } else {
        QPoly::one()
    }
}

/// The defining quotient `{n}_q! / ({p}_q! {n-p}_q!)`, kept as the
/// independent cross-check for [`q_binomial`].
///
/// Panics if the division is inexact, which would indicate a broken
/// invariant in the polynomial arithmetic.
pub fn q_binomial_by_factorials(n: i64, p: i64) -> QPoly {
    if p < 0 || p > n {
        return QPoly::zero();
    }
    let den = &q_factorial(p) * &q_factorial(n - p);
    q_factorial(n)
        .checked_div(&den)
        .expect("q-factorial quotient must divide exactly")
}
