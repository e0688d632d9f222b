//! Chebyshev's route from the central binomial coefficient to a prime
//! bound: every prime in (n, 2n] divides C(2n,n), so their product is at
//! most 4^n; taking logs and telescoping gives theta(n) <= (2 ln 2) n, the
//! same constant that shows up against pi(x).
//!
//! Divisibility and product claims stay in exact integers; theta lives in
//! floating point with a fixed relative tolerance.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// Relative tolerance for the floating-point theta comparisons.
pub const THETA_RELATIVE_EPS: f64 = 1e-6;

/// The constant 2 ln 2 = 1.386..., the slope of both bounds.
pub fn chebyshev_constant() -> f64 {
    2.0 * std::f64::consts::LN_2
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChebyshevError {
    #[error("sieve limit must be at least 2, got {0}")]
    LimitTooSmall(u64),
    #[error("n must be at least {min}, got {n}")]
    NTooSmall { n: u64, min: u64 },
    #[error("prime table reaches {limit} but {needed} is required")]
    TableTooSmall { needed: u64, limit: u64 },
}

/// Primes up to a limit with running theta values: theta_cumulative[i] is
/// the sum of ln p over the first i+1 primes.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
    theta_cumulative: Vec<f64>,
}

/// Sieve of Eratosthenes up to `limit` inclusive.
pub fn sieve(limit: u64) -> Result<PrimeTable, ChebyshevError> {
    if limit < 2 {
        return Err(ChebyshevError::LimitTooSmall(limit));
    }
    let size = limit as usize + 1;
    let mut composite = vec![false; size];
    let mut primes = Vec::new();
    for p in 2..size {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        let mut multiple = p * p;
        while multiple < size {
            composite[multiple] = true;
            multiple += p;
        }
    }
    let mut theta_cumulative = Vec::with_capacity(primes.len());
    let mut acc = 0.0f64;
    for &p in &primes {
        acc += (p as f64).ln();
        theta_cumulative.push(acc);
    }
    Ok(PrimeTable { limit, primes, theta_cumulative })
}

/// Independent second sieve (Sundaram's): marks i + j + 2ij and reads the
/// odd primes off what survives. Shares nothing with [`sieve`].
pub fn sieve_sundaram(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let k = ((limit - 1) / 2) as usize;
    let mut marked = vec![false; k + 1];
    for i in 1..=k {
        let mut j = i;
        loop {
            let idx = i + j + 2 * i * j;
            if idx > k {
                break;
            }
            marked[idx] = true;
            j += 1;
        }
    }
    let mut primes = vec![2];
    primes.extend(
        marked
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &m)| !m)
            .map(|(i, _)| 2 * i as u64 + 1),
    );
    primes
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    fn count_up_to(&self, x: u64) -> usize {
        self.primes.partition_point(|&p| p <= x)
    }

    /// pi(x): the number of primes <= x.
    pub fn pi(&self, x: u64) -> u64 {
        assert!(x <= self.limit, "pi({x}) beyond the sieve limit {}", self.limit);
        self.count_up_to(x) as u64
    }

    /// theta(x) = sum of ln p over primes p <= x.
    pub fn theta(&self, x: u64) -> f64 {
        assert!(x <= self.limit, "theta({x}) beyond the sieve limit {}", self.limit);
        match self.count_up_to(x) {
            0 => 0.0,
            idx => self.theta_cumulative[idx - 1],
        }
    }

    /// Exact product of the primes in the half-open range (lo, hi].
    pub fn primorial_range(&self, lo: u64, hi: u64) -> BigUint {
        assert!(hi <= self.limit, "range beyond the sieve limit");
        let start = self.primes.partition_point(|&p| p <= lo);
        let end = self.primes.partition_point(|&p| p <= hi);
        self.primes[start..end].iter().fold(BigUint::one(), |acc, &p| acc * p)
    }
}

/// C(2n,n) by the exact multiplicative formula.
pub fn central_binomial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 1..=n {
        acc *= n + i;
        acc /= i;
    }
    acc
}

/// One n of the central-binomial argument: the product of primes in
/// (n, 2n], whether it divides C(2n,n), and whether it stays below 4^n.
#[derive(Debug, Clone)]
pub struct CentralCheck {
    pub n: u64,
    pub prime_product: BigUint,
    pub central_binomial: BigUint,
    pub divides: bool,
    pub below_four_to_n: bool,
}

impl CentralCheck {
    fn build(n: u64, prime_product: BigUint, central: BigUint) -> Self {
        let divides = (&central % &prime_product).is_zero();
        let below = prime_product <= (BigUint::one() << (2 * n as usize));
        Self {
            n,
            prime_product,
            central_binomial: central,
            divides,
            below_four_to_n: below,
        }
    }
}

fn require(n: u64, min: u64, table: &PrimeTable, needed: u64) -> Result<(), ChebyshevError> {
    if n < min {
        return Err(ChebyshevError::NTooSmall { n, min });
    }
    if needed > table.limit() {
        return Err(ChebyshevError::TableTooSmall { needed, limit: table.limit() });
    }
    Ok(())
}

/// Every prime in (n, 2n] divides the integer C(2n,n).
pub fn central_divisibility(n: u64, table: &PrimeTable) -> Result<CentralCheck, ChebyshevError> {
    require(n, 1, table, 2 * n)?;
    Ok(CentralCheck::build(n, table.primorial_range(n, 2 * n), central_binomial(n)))
}

/// The product of the primes in (n, 2n] is at most 4^n.
pub fn product_bound(n: u64, table: &PrimeTable) -> Result<CentralCheck, ChebyshevError> {
    central_divisibility(n, table)
}

/// The full range 1..=n_max of central checks, maintained incrementally:
/// C(2n,n) picks up the factor 2(2n+1)/(n+1) each step, and the prime
/// product trades n+1 out for 2n+1 when those are prime.
pub fn central_sweep(n_max: u64, table: &PrimeTable) -> Result<Vec<CentralCheck>, ChebyshevError> {
    require(n_max, 1, table, 2 * n_max)?;
    let prime = |x: u64| table.primes.binary_search(&x).is_ok();
    let mut checks = Vec::with_capacity(n_max as usize);
    let mut central = BigUint::from(2u32); // C(2,1)
    let mut product = BigUint::from(2u32); // primes in (1, 2]
    checks.push(CentralCheck::build(1, product.clone(), central.clone()));
    for n in 1..n_max {
        central *= 2 * (2 * n + 1);
        central /= n + 1;
        if prime(2 * n + 1) {
            product *= 2 * n + 1;
        }
        if prime(n + 1) {
            product /= n + 1;
        }
        checks.push(CentralCheck::build(n + 1, product.clone(), central.clone()));
    }
    Ok(checks)
}

/// theta(2n) - theta(n) <= 2n ln 2, within the floating-point tolerance.
#[derive(Debug, Clone)]
pub struct ThetaGap {
    pub n: u64,
    pub gap: f64,
    pub bound: f64,
    pub pass: bool,
}

pub fn theta_gap(n: u64, table: &PrimeTable) -> Result<ThetaGap, ChebyshevError> {
    require(n, 1, table, 2 * n)?;
    let gap = table.theta(2 * n) - table.theta(n);
    let bound = 2.0 * n as f64 * std::f64::consts::LN_2;
    Ok(ThetaGap { n, gap, bound, pass: gap <= bound * (1.0 + THETA_RELATIVE_EPS) })
}

/// One rung of the telescoping ladder theta(n) = sum of consecutive gaps.
#[derive(Debug, Clone)]
pub struct TelescopeStep {
    pub upper: u64,
    pub lower: u64,
    pub term: f64,
    pub term_bound: f64,
}

/// theta(n) <= (2 ln 2) n, with the halving decomposition reported.
#[derive(Debug, Clone)]
pub struct ThetaLinear {
    pub n: u64,
    pub theta: f64,
    pub bound: f64,
    pub telescope: Vec<TelescopeStep>,
    pub pass: bool,
}

pub fn theta_linear(n: u64, table: &PrimeTable) -> Result<ThetaLinear, ChebyshevError> {
    require(n, 1, table, n)?;
    let theta = table.theta(n);
    let bound = chebyshev_constant() * n as f64;
    let mut telescope = Vec::new();
    let mut upper = n;
    while upper >= 2 {
        let lower = upper / 2;
        telescope.push(TelescopeStep {
            upper,
            lower,
            term: table.theta(upper) - table.theta(lower),
            term_bound: upper as f64 * std::f64::consts::LN_2,
        });
        upper = lower;
    }
    Ok(ThetaLinear { n, theta, bound, telescope, pass: theta <= bound * (1.0 + THETA_RELATIVE_EPS) })
}

/// Summary of a full theta sweep over 1..=n_max.
#[derive(Debug, Clone)]
pub struct ThetaSweep {
    pub n_max: u64,
    pub gap_violations: u64,
    pub linear_violations: u64,
    /// Largest gap/bound ratio observed and where.
    pub max_gap_ratio: f64,
    pub max_gap_n: u64,
    /// Largest theta(n)/bound ratio observed and where.
    pub max_linear_ratio: f64,
    pub max_linear_n: u64,
}

impl ThetaSweep {
    pub fn pass(&self) -> bool {
        self.gap_violations == 0 && self.linear_violations == 0
    }
}

/// Checks both theta bounds for every n up to n_max. The table must reach
/// 2 * n_max.
pub fn theta_sweep(n_max: u64, table: &PrimeTable) -> Result<ThetaSweep, ChebyshevError> {
    require(n_max, 1, table, 2 * n_max)?;
    let mut sweep = ThetaSweep {
        n_max,
        gap_violations: 0,
        linear_violations: 0,
        max_gap_ratio: 0.0,
        max_gap_n: 0,
        max_linear_ratio: 0.0,
        max_linear_n: 0,
    };
    let tolerance = 1.0 + THETA_RELATIVE_EPS;
    for n in 1..=n_max {
        let gap = table.theta(2 * n) - table.theta(n);
        let gap_bound = 2.0 * n as f64 * std::f64::consts::LN_2;
        if gap > gap_bound * tolerance {
            sweep.gap_violations += 1;
        }
        if gap / gap_bound > sweep.max_gap_ratio {
            sweep.max_gap_ratio = gap / gap_bound;
            sweep.max_gap_n = n;
        }
        let theta = table.theta(n);
        let linear_bound = chebyshev_constant() * n as f64;
        if theta > linear_bound * tolerance {
            sweep.linear_violations += 1;
        }
        if theta / linear_bound > sweep.max_linear_ratio {
            sweep.max_linear_ratio = theta / linear_bound;
            sweep.max_linear_n = n;
        }
    }
    Ok(sweep)
}

/// pi(x) against C x / ln x at one checkpoint. The theta bound only gives
/// this asymptotically, so checkpoints over the line are flagged, never
/// failed.
#[derive(Debug, Clone)]
pub struct PiCheckpoint {
    pub x: u64,
    pub pi: u64,
    pub bound: f64,
    pub ratio: f64,
    pub within: bool,
}

#[derive(Debug, Clone)]
pub struct PiComparison {
    pub checkpoints: Vec<PiCheckpoint>,
    pub flagged: usize,
}

/// Tabulates pi(x) versus (2 ln 2) x / ln x at logarithmically spaced
/// checkpoints up to `limit`.
pub fn pi_comparison(limit: u64, table: &PrimeTable) -> Result<PiComparison, ChebyshevError> {
    if limit < 3 {
        return Err(ChebyshevError::NTooSmall { n: limit, min: 3 });
    }
    if limit > table.limit() {
        return Err(ChebyshevError::TableTooSmall { needed: limit, limit: table.limit() });
    }
    let mut xs = vec![3u64];
    let mut x = 10f64;
    while (x as u64) < limit {
        xs.push(x as u64);
        x *= 10f64.sqrt();
    }
    xs.push(limit);
    xs.dedup();

    let checkpoints: Vec<PiCheckpoint> = xs
        .into_iter()
        .map(|x| {
            let pi = table.pi(x);
            let bound = chebyshev_constant() * x as f64 / (x as f64).ln();
            PiCheckpoint { x, pi, bound, ratio: pi as f64 / bound, within: (pi as f64) <= bound }
        })
        .collect();
    let flagged = checkpoints.iter().filter(|c| !c.within).count();
    Ok(PiComparison { checkpoints, flagged })
}

/// ln of a big natural number, good to a few ulps: enough to tie the float
/// theta to the exact primorial.
pub fn ln_biguint(value: &BigUint) -> f64 {
    let bits = value.bits();
    if bits <= 64 {
        let v: u64 = value.try_into().expect("fits in u64");
        return (v as f64).ln();
    }
    let shift = bits - 53;
    let top: u64 = (value >> shift).try_into().expect("53 bits fit");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}
