//! Exact binomial coefficients by two independent routes, plus the
//! monotonicity check C(n,k) <= C(n,k+1) for k < n/2.
//!
//! The recurrence route and the factorial route never share code; agreement
//! between them is one of the verification targets, not an assumption.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BinomialError {
    #[error("k={k} outside 0..={n} for the factorial form")]
    KOutOfRange { n: u32, k: i64 },
}

/// Default memoization bound for [`BinomialTable`].
pub const DEFAULT_TABLE_SIZE: u32 = 64;

/// Triangular table of C(n,k) built from the addition recurrence
/// f(n,k) = f(n-1,k-1) + f(n-1,k), f(0,k) = [k = 0].
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl Default for BinomialTable {
    fn default() -> Self {
        Self::new(DEFAULT_TABLE_SIZE)
    }
}

impl BinomialTable {
    pub fn new(n_max: u32) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max as usize + 1);
        rows.push(vec![BigUint::one()]);
        for n in 1..=n_max as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigUint::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    pub fn row(&self, n: u32) -> &[BigUint] {
        &self.rows[n as usize]
    }

    /// C(n,k), with the recurrence's natural extension: 0 outside 0..=n.
    pub fn get(&self, n: u32, k: i64) -> BigUint {
        if k < 0 || k > i64::from(n) {
            BigUint::zero()
        } else {
            self.rows[n as usize][k as usize].clone()
        }
    }
}

/// C(n,k) from the Pascal recurrence alone. k outside 0..=n yields 0.
pub fn binomial_pascal(n: u32, k: i64) -> BigUint {
    if k < 0 || k > i64::from(n) {
        return BigUint::zero();
    }
    // Roll a single row of the triangle.
    let mut row = vec![BigUint::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::one());
        for j in 1..row.len() {
            next.push(&row[j - 1] + &row[j]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row[k as usize].clone()
}

pub fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// C(n,k) = n! / (k! (n-k)!), with the divisions checked to be exact.
pub fn binomial_factorial(n: u32, k: i64) -> Result<BigUint, BinomialError> {
    if k < 0 || k > i64::from(n) {
        return Err(BinomialError::KOutOfRange { n, k });
    }
    let k = k as u32;
    let numerator = factorial(n);
    let denominator = factorial(k) * factorial(n - k);
    let (quotient, remainder) = num_integer::div_rem(numerator, denominator);
    assert!(remainder.is_zero(), "factorial ratio C({n},{k}) left a remainder");
    Ok(quotient)
}

/// One row entry of the monotonicity report for a fixed n.
#[derive(Debug, Clone)]
pub struct MonotoneCheck {
    pub k: u32,
    /// C(n,k)
    pub lower: BigUint,
    /// C(n,k+1)
    pub upper: BigUint,
    /// C(n,k) <= C(n,k+1)
    pub le_ok: bool,
    /// C(n,k+1) * (k+1) == C(n,k) * (n-k), the cross-multiplied ratio identity
    pub ratio_ok: bool,
    /// C(n,k) == C(n,k+1); expected exactly when n = 2k+1
    pub equality: bool,
}

impl MonotoneCheck {
    pub fn pass(&self) -> bool {
        self.le_ok && self.ratio_ok
    }
}

/// Checks C(n,k) <= C(n,k+1) for every integer k < n/2, together with the
/// exact identity C(n,k+1)(k+1) = C(n,k)(n-k).
pub fn verify_monotone(n: u32) -> Vec<MonotoneCheck> {
    let table = BinomialTable::new(n);
    let row = table.row(n);
    let mut checks = Vec::new();
    let mut k = 0u32;
    while u64::from(2 * k) < u64::from(n) {
        let lower = row[k as usize].clone();
        let upper = row[k as usize + 1].clone();
        let le_ok = lower <= upper;
        let ratio_ok = &upper * (k + 1) == &lower * (n - k);
        let equality = lower == upper;
        checks.push(MonotoneCheck { k, lower, upper, le_ok, ratio_ok, equality });
        k += 1;
    }
    checks
}
