//! Antichains in the Boolean lattice: the LYM/Lubell counting bound, the
//! exhaustive maximum-antichain search at desk scale, and the
//! chain-decomposition route to the same bound.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use thiserror::Error;

use crate::binomial::binomial_pascal;
use crate::chains::{recursive_scd, ChainDecomposition};
use crate::subset::Subset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpernerError {
    #[error("family is not an antichain: {inner} is contained in {outer}")]
    NotAntichain { inner: String, outer: String },
    #[error("ground size mismatch: expected {expected}, found {found}")]
    GroundSizeMismatch { expected: u8, found: u8 },
    #[error("n={n} exceeds the exhaustive enumeration bound {limit}")]
    TooLargeForEnumeration { n: u8, limit: u8 },
}

/// Bound for exhaustive antichain enumeration; beyond it the count explodes
/// (the n=6 count already runs to 7.8 million).
pub const ENUMERATION_LIMIT: u8 = 6;

/// Largest n for the chain-decomposition bound check.
pub const CHAIN_BOUND_LIMIT: u8 = 16;

/// True iff no member of the family properly contains another. All members
/// must share the ground size n; a stray size makes the family invalid.
pub fn is_antichain(n: u8, family: &[Subset]) -> bool {
    if family.iter().any(|s| s.n() != n) {
        return false;
    }
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            if a.is_proper_subset_of(b) || b.is_proper_subset_of(a) {
                return false;
            }
        }
    }
    true
}

/// A validated antichain: distinct members, none containing another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antichain {
    n: u8,
    members: Vec<Subset>,
}

impl Antichain {
    pub fn new(n: u8, members: Vec<Subset>) -> Result<Self, SpernerError> {
        let mut members = members;
        members.sort();
        members.dedup();
        if let Some(bad) = members.iter().find(|s| s.n() != n) {
            return Err(SpernerError::GroundSizeMismatch { expected: n, found: bad.n() });
        }
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if a.is_proper_subset_of(b) {
                    return Err(SpernerError::NotAntichain {
                        inner: a.to_string(),
                        outer: b.to_string(),
                    });
                }
                if b.is_proper_subset_of(a) {
                    return Err(SpernerError::NotAntichain {
                        inner: b.to_string(),
                        outer: a.to_string(),
                    });
                }
            }
        }
        Ok(Self { n, members })
    }

    /// The full level of all k-subsets.
    pub fn full_level(n: u8, k: u32) -> Self {
        let members =
            Subset::masks_of_rank(n, k).into_iter().map(|m| Subset::new(n, m).unwrap()).collect();
        Self { n, members }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Lubell's two counts for an antichain: the number of top-to-bottom chains
/// its members block, sum |S|!(n-|S|)!, and the same sum normalized by n!.
/// The first never exceeds n! and the second never exceeds 1; both bounds
/// are asserted because they are theorems for a valid antichain.
pub fn lubell_sum(a: &Antichain) -> (BigUint, BigRational) {
    let n = u32::from(a.n());
    let mut fact = Vec::with_capacity(n as usize + 1);
    fact.push(BigUint::one());
    for i in 1..=n {
        fact.push(&fact[i as usize - 1] * i);
    }
    let blocked: BigUint = a
        .members()
        .iter()
        .map(|s| &fact[s.rank() as usize] * &fact[(n - s.rank()) as usize])
        .sum();
    let total = fact[n as usize].clone();
    let normalized = BigRational::new(BigInt::from(blocked.clone()), BigInt::from(total.clone()));
    assert!(blocked <= total, "an antichain cannot block more than n! chains");
    assert!(normalized <= BigRational::one(), "the normalized Lubell sum exceeds 1");
    (blocked, normalized)
}

fn masks_comparable(a: u64, b: u64) -> bool {
    let meet = a & b;
    meet == a || meet == b
}

/// Depth-first enumeration of every antichain over the given candidates, in
/// candidate order. The visitor sees the size of each nonempty antichain.
fn explore(candidates: &[u64], size: u32, visit: &mut impl FnMut(u32)) {
    for (i, &mask) in candidates.iter().enumerate() {
        visit(size + 1);
        let rest: Vec<u64> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&c| !masks_comparable(c, mask))
            .collect();
        explore(&rest, size + 1, visit);
    }
}

fn check_enumeration_bound(n: u8) -> Result<(), SpernerError> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(SpernerError::TooLargeForEnumeration { n, limit: ENUMERATION_LIMIT });
    }
    Ok(())
}

/// Maximum cardinality over all antichains of B_n, by brute enumeration.
pub fn max_antichain_exhaustive(n: u8) -> Result<u32, SpernerError> {
    check_enumeration_bound(n)?;
    let candidates: Vec<u64> = (0..(1u64 << n)).collect();
    let mut max = 0;
    explore(&candidates, 0, &mut |size| max = max.max(size));
    Ok(max)
}

/// Number of antichains of B_n, the empty one included, by the same
/// depth-first enumeration that backs [`max_antichain_exhaustive`].
pub fn count_antichains(n: u8) -> Result<u64, SpernerError> {
    check_enumeration_bound(n)?;
    let candidates: Vec<u64> = (0..(1u64 << n)).collect();
    let mut count = 1u64;
    explore(&candidates, 0, &mut |_| count += 1);
    Ok(count)
}

/// Independent second count: delete an element x and split on whether the
/// antichain uses it. Shares no code with the depth-first enumerator.
pub fn count_antichains_by_deletion(n: u8) -> Result<u64, SpernerError> {
    check_enumeration_bound(n)?;
    let size = 1usize << n;
    // comparable[x] marks every subset related to x by inclusion, x itself included.
    let comparable: Vec<u64> = (0..size as u64)
        .map(|x| {
            (0..size as u64)
                .filter(|&y| masks_comparable(x, y))
                .fold(0u64, |acc, y| acc | (1u64 << y))
        })
        .collect();

    fn count(alive: u64, comparable: &[u64]) -> u64 {
        if alive == 0 {
            return 1;
        }
        let x = alive.trailing_zeros() as usize;
        count(alive & !(1u64 << x), comparable) + count(alive & !comparable[x], comparable)
    }

    let alive = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
    Ok(count(alive, &comparable))
}

/// How a symmetric chain decomposition pins down an antichain: each chain
/// meets it at most once, so the antichain is no larger than the number of
/// chains, which is C(n, floor(n/2)).
#[derive(Debug, Clone)]
pub struct ChainBoundReport {
    pub n: u8,
    /// Hits per chain of the recursive decomposition, in chain order.
    pub hits: Vec<u32>,
    pub antichain_size: usize,
    /// C(n, floor(n/2)), the number of chains.
    pub bound: BigUint,
    /// First chain meeting the antichain twice, if any.
    pub violation: Option<usize>,
}

impl ChainBoundReport {
    pub fn pass(&self) -> bool {
        self.violation.is_none() && BigUint::from(self.antichain_size) <= self.bound
    }
}

/// Intersects an antichain with the recursive symmetric chain decomposition
/// and reports the per-chain hit counts.
pub fn sperner_via_chains(n: u8, a: &Antichain) -> Result<ChainBoundReport, SpernerError> {
    if n == 0 || n > CHAIN_BOUND_LIMIT {
        return Err(SpernerError::TooLargeForEnumeration { n, limit: CHAIN_BOUND_LIMIT });
    }
    let dec = recursive_scd(n).expect("n is within range");
    let chain_of = chain_index(&dec);
    sperner_via_chains_with(&dec, &chain_of, a)
}

/// Same check against a prebuilt decomposition; for sweeps that test many
/// antichains against one lattice.
pub fn sperner_via_chains_with(
    dec: &ChainDecomposition,
    chain_of: &[usize],
    a: &Antichain,
) -> Result<ChainBoundReport, SpernerError> {
    let n = dec.n();
    if a.n() != n {
        return Err(SpernerError::GroundSizeMismatch { expected: n, found: a.n() });
    }
    let mut hits = vec![0u32; dec.chains().len()];
    for s in a.members() {
        hits[chain_of[s.mask() as usize]] += 1;
    }
    let violation = hits.iter().position(|&h| h > 1);
    Ok(ChainBoundReport {
        n,
        hits,
        antichain_size: a.len(),
        bound: binomial_pascal(u32::from(n), i64::from(n / 2)),
        violation,
    })
}

/// Maps every subset mask to the index of its chain in the decomposition.
pub fn chain_index(dec: &ChainDecomposition) -> Vec<usize> {
    let mut index = vec![usize::MAX; 1 << dec.n()];
    for (i, chain) in dec.chains().iter().enumerate() {
        for s in chain.subsets() {
            index[s.mask() as usize] = i;
        }
    }
    index
}

/// Draws a random antichain: sample a family of masks, keep its maximal
/// members, and optionally push more incomparable sets in greedily. The
/// distribution is a coverage device, nothing more.
pub fn random_antichain<R: Rng + ?Sized>(n: u8, rng: &mut R, extend: bool) -> Antichain {
    let universe = 1u64 << n;
    let family_size = rng.random_range(1..=3 * usize::from(n));
    let mut masks: Vec<u64> = (0..family_size).map(|_| rng.random_range(0..universe)).collect();
    masks.sort_unstable();
    masks.dedup();

    let mut maximal: Vec<u64> = masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&other| other != m && m & other == m))
        .collect();

    if extend {
        for _ in 0..4 * usize::from(n) {
            let candidate = rng.random_range(0..universe);
            if maximal.iter().all(|&m| !masks_comparable(m, candidate)) {
                maximal.push(candidate);
            }
        }
    }

    let members = maximal.into_iter().map(|m| Subset::new(n, m).unwrap()).collect();
    Antichain::new(n, members).expect("maximal members of a family form an antichain")
}
