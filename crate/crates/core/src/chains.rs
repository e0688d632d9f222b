//! Symmetric chain decompositions of the Boolean lattice: the recursive
//! doubling construction, Aigner's lexicographic greed, and the
//! Greene-Kleitman bracket partition, plus a validator that checks the
//! partition, saturation, and rank-symmetry requirements explicitly.

use std::fmt;

use thiserror::Error;

use crate::binomial::binomial_pascal;
use crate::injections::{gk_chain_of, gk_predecessor};
use crate::subset::Subset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("ground set size must be at least 1, got {0}")]
    GroundSizeTooSmall(u8),
    #[error("ground set size {0} too large for an exhaustive decomposition")]
    GroundSizeTooLarge(u8),
}

/// A sequence of subsets meant to climb one rank per step. Construction is
/// unchecked so that the validator can be exercised on broken inputs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    subsets: Vec<Subset>,
}

impl Chain {
    pub fn from_subsets(subsets: Vec<Subset>) -> Self {
        assert!(!subsets.is_empty(), "a chain holds at least one subset");
        Self { subsets }
    }

    pub fn subsets(&self) -> &[Subset] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn first(&self) -> &Subset {
        &self.subsets[0]
    }

    pub fn last(&self) -> &Subset {
        self.subsets.last().expect("chains are nonempty")
    }

    /// Consecutive entries differ by inserting exactly one element.
    pub fn is_saturated(&self) -> bool {
        self.subsets.windows(2).all(|w| {
            w[0].n() == w[1].n() && w[0].is_proper_subset_of(&w[1]) && w[1].rank() == w[0].rank() + 1
        })
    }

    /// First rank plus last rank equals n.
    pub fn is_symmetric(&self) -> bool {
        u32::from(self.first().n()) == self.first().rank() + self.last().rank()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.subsets.iter().enumerate() {
            if i > 0 {
                write!(f, " -> ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A family of chains intended to partition all of B_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    n: u8,
    chains: Vec<Chain>,
}

impl ChainDecomposition {
    pub fn from_chains(n: u8, chains: Vec<Chain>) -> Self {
        Self { n, chains }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    /// Order-insensitive equality: the same chains as sets of sequences.
    pub fn same_chains(&self, other: &ChainDecomposition) -> bool {
        if self.n != other.n || self.chains.len() != other.chains.len() {
            return false;
        }
        let mut a = self.chains.clone();
        let mut b = other.chains.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// Applies i -> n+1-i to every element of every subset.
    pub fn relabel_reverse(&self) -> ChainDecomposition {
        let chains = self
            .chains
            .iter()
            .map(|c| Chain::from_subsets(c.subsets.iter().map(Subset::relabel_reverse).collect()))
            .collect();
        ChainDecomposition { n: self.n, chains }
    }
}

/// Applies i -> n+1-i to a whole decomposition; an SCD stays an SCD.
pub fn relabel_reverse(dec: &ChainDecomposition) -> ChainDecomposition {
    dec.relabel_reverse()
}

const EXHAUSTIVE_LIMIT: u8 = 24;

fn check_ground_size(n: u8) -> Result<(), ChainError> {
    if n == 0 {
        Err(ChainError::GroundSizeTooSmall(n))
    } else if n > EXHAUSTIVE_LIMIT {
        Err(ChainError::GroundSizeTooLarge(n))
    } else {
        Ok(())
    }
}

/// Recursive doubling: each chain of B_{n-1} spawns one chain extended by
/// its top set plus n, and a second chain of the remaining sets with n
/// adjoined, the last member cut off. The second chain is dropped when the
/// cut leaves it empty.
pub fn recursive_scd(n: u8) -> Result<ChainDecomposition, ChainError> {
    check_ground_size(n)?;
    let widen = |s: &Subset, m: u8| Subset::new(m, s.mask()).expect("mask fits the wider ground set");
    let mut chains = vec![Chain::from_subsets(vec![
        Subset::empty(1).unwrap(),
        Subset::full(1).unwrap(),
    ])];
    for m in 2..=n {
        let mut next = Vec::with_capacity(2 * chains.len());
        for chain in &chains {
            let lifted: Vec<Subset> = chain.subsets.iter().map(|s| widen(s, m)).collect();
            let with_new = |s: &Subset| s.with_element(u32::from(m)).expect("m is in range");

            let mut first = lifted.clone();
            first.push(with_new(lifted.last().expect("chains are nonempty")));
            next.push(Chain::from_subsets(first));

            let second: Vec<Subset> =
                lifted[..lifted.len() - 1].iter().map(with_new).collect();
            if !second.is_empty() {
                next.push(Chain::from_subsets(second));
            }
        }
        chains = next;
    }
    Ok(ChainDecomposition { n, chains })
}

/// Aigner's lexicographic greed: repeatedly start a chain at the
/// minimum-rank, lexicographically first uncommitted subset, then extend by
/// the lexicographically first uncommitted superset one rank up until stuck.
pub fn aigner_scd(n: u8) -> Result<ChainDecomposition, ChainError> {
    check_ground_size(n)?;
    let size = 1usize << n;
    let mut committed = vec![false; size];

    // Per-rank lex-sorted subsets; a cursor per rank skips committed prefixes.
    let by_rank: Vec<Vec<Subset>> = (0..=u32::from(n))
        .map(|k| {
            let mut level: Vec<Subset> = Subset::masks_of_rank(n, k)
                .into_iter()
                .map(|m| Subset::new(n, m).unwrap())
                .collect();
            level.sort_by(Subset::lex_cmp);
            level
        })
        .collect();
    let mut cursors = vec![0usize; by_rank.len()];

    let mut chains = Vec::new();
    loop {
        let mut start = None;
        for (rank, level) in by_rank.iter().enumerate() {
            let cursor = &mut cursors[rank];
            while *cursor < level.len() && committed[level[*cursor].mask() as usize] {
                *cursor += 1;
            }
            if *cursor < level.len() {
                start = Some(level[*cursor]);
                break;
            }
        }
        let Some(start) = start else { break };

        let mut chain = vec![start];
        committed[start.mask() as usize] = true;
        loop {
            let tail = *chain.last().expect("chain has a start");
            let next = tail
                .covers_above()
                .into_iter()
                .filter(|c| !committed[c.mask() as usize])
                .min_by(Subset::lex_cmp);
            match next {
                Some(next) => {
                    committed[next.mask() as usize] = true;
                    chain.push(next);
                }
                None => break,
            }
        }
        chains.push(Chain::from_subsets(chain));
    }
    Ok(ChainDecomposition { n, chains })
}

/// Partition of B_n into the chains the bracket-matching successor traces
/// out. Chain starts are the subsets with no predecessor, visited in
/// ascending mask order.
pub fn gk_scd(n: u8) -> Result<ChainDecomposition, ChainError> {
    check_ground_size(n)?;
    let mut chains = Vec::new();
    for mask in 0..(1u64 << n) {
        let s = Subset::new(n, mask).expect("mask below 2^n");
        if gk_predecessor(&s).is_none() {
            chains.push(gk_chain_of(&s));
        }
    }
    Ok(ChainDecomposition { n, chains })
}

/// One named check in a decomposition report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationItem {
    pub pass: bool,
    pub witness: Option<String>,
}

impl ValidationItem {
    fn ok() -> Self {
        Self { pass: true, witness: None }
    }

    fn fail(witness: String) -> Self {
        Self { pass: false, witness: Some(witness) }
    }
}

/// Itemized validation of a chain decomposition.
#[derive(Debug, Clone)]
pub struct ScdValidation {
    pub n: u8,
    /// Every subset of {1..n} appears in exactly one chain.
    pub partition: ValidationItem,
    /// Every chain climbs one rank per step.
    pub saturation: ValidationItem,
    /// Every chain has first rank + last rank = n.
    pub symmetry: ValidationItem,
    /// The number of chains equals C(n, floor(n/2)).
    pub chain_count: ValidationItem,
    pub chains: usize,
}

impl ScdValidation {
    pub fn pass(&self) -> bool {
        self.partition.pass && self.saturation.pass && self.symmetry.pass && self.chain_count.pass
    }
}

pub fn validate_scd(dec: &ChainDecomposition) -> ScdValidation {
    let n = dec.n();
    let size = 1usize << n;

    let mut seen = vec![0u32; size];
    let mut partition = ValidationItem::ok();
    for chain in dec.chains() {
        for s in chain.subsets() {
            if s.n() != n {
                partition = ValidationItem::fail(format!("{s} has ground size {}", s.n()));
            } else {
                seen[s.mask() as usize] += 1;
            }
        }
    }
    if partition.pass {
        if let Some(mask) = (0..size).find(|&m| seen[m] != 1) {
            let s = Subset::new(n, mask as u64).unwrap();
            partition = ValidationItem::fail(format!("{s} appears {} times", seen[mask]));
        }
    }

    let saturation = match dec.chains().iter().find(|c| !c.is_saturated()) {
        None => ValidationItem::ok(),
        Some(c) => ValidationItem::fail(format!("chain {c} is not saturated")),
    };

    let symmetry = match dec.chains().iter().find(|c| !c.is_symmetric()) {
        None => ValidationItem::ok(),
        Some(c) => ValidationItem::fail(format!(
            "chain {c} has rank sum {} != {n}",
            c.first().rank() + c.last().rank()
        )),
    };

    let expected = binomial_pascal(u32::from(n), i64::from(n / 2));
    let chains = dec.chains().len();
    let chain_count = if expected == chains.into() {
        ValidationItem::ok()
    } else {
        ValidationItem::fail(format!("{chains} chains, expected {expected}"))
    };

    ScdValidation { n, partition, saturation, symmetry, chain_count, chains }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u8, elems: &[u32]) -> Subset {
        Subset::from_elements(n, elems).unwrap()
    }

    fn chain(n: u8, sets: &[&[u32]]) -> Chain {
        Chain::from_subsets(sets.iter().map(|e| s(n, e)).collect())
    }

    #[test]
    fn recursive_base_case() {
        let dec = recursive_scd(1).unwrap();
        assert_eq!(dec.chains(), &[chain(1, &[&[], &[1]])]);
    }

    #[test]
    fn recursive_matches_displayed_chains() {
        let dec = recursive_scd(2).unwrap();
        assert_eq!(dec.chains(), &[chain(2, &[&[], &[1], &[1, 2]]), chain(2, &[&[2]])]);

        let dec = recursive_scd(3).unwrap();
        assert_eq!(
            dec.chains(),
            &[
                chain(3, &[&[], &[1], &[1, 2], &[1, 2, 3]]),
                chain(3, &[&[3], &[1, 3]]),
                chain(3, &[&[2], &[2, 3]]),
            ]
        );
    }

    #[test]
    fn aigner_reproduces_recursive_small() {
        for n in 1..=3u8 {
            let a = aigner_scd(n).unwrap();
            let r = recursive_scd(n).unwrap();
            assert!(a.same_chains(&r), "n={n}: {:?} vs {:?}", a.chains(), r.chains());
        }
    }

    #[test]
    fn gk_decomposition_small() {
        let dec = gk_scd(2).unwrap();
        let expected = vec![chain(2, &[&[], &[2], &[1, 2]]), chain(2, &[&[1]])];
        assert!(dec.same_chains(&ChainDecomposition::from_chains(2, expected)));

        let dec = gk_scd(3).unwrap();
        let expected = vec![
            chain(3, &[&[], &[3], &[2, 3], &[1, 2, 3]]),
            chain(3, &[&[1], &[1, 3]]),
            chain(3, &[&[2], &[1, 2]]),
        ];
        assert!(dec.same_chains(&ChainDecomposition::from_chains(3, expected)));

        assert_eq!(gk_scd(1).unwrap().chains(), &[chain(1, &[&[], &[1]])]);
    }

    #[test]
    fn validator_passes_constructions() {
        for n in 1..=8u8 {
            for dec in [recursive_scd(n).unwrap(), aigner_scd(n).unwrap(), gk_scd(n).unwrap()] {
                let v = validate_scd(&dec);
                assert!(v.pass(), "n={n}: {v:?}");
            }
        }
        assert_eq!(validate_scd(&recursive_scd(3).unwrap()).chains, 3);
        assert_eq!(validate_scd(&recursive_scd(1).unwrap()).chains, 1);
    }

    #[test]
    fn validator_flags_truncated_chain() {
        let mut chains = recursive_scd(3).unwrap().chains().to_vec();
        // Cut the top of the long chain: symmetry breaks (and the partition).
        let cut = Chain::from_subsets(chains[0].subsets()[..3].to_vec());
        chains[0] = cut;
        let v = validate_scd(&ChainDecomposition::from_chains(3, chains));
        assert!(!v.symmetry.pass);
        assert!(v.symmetry.witness.is_some());
        assert!(!v.partition.pass);
        assert!(!v.pass());
    }

    #[test]
    fn relabel_maps_gk_onto_recursive() {
        let relabeled = relabel_reverse(&gk_scd(2).unwrap());
        assert!(relabeled.same_chains(&recursive_scd(2).unwrap()));

        let relabeled = relabel_reverse(&gk_scd(3).unwrap());
        assert!(relabeled.same_chains(&recursive_scd(3).unwrap()));

        let dec = recursive_scd(1).unwrap();
        assert!(relabel_reverse(&dec).same_chains(&dec));
    }

    #[test]
    fn constructions_reject_zero() {
        assert!(recursive_scd(0).is_err());
        assert!(aigner_scd(0).is_err());
        assert!(gk_scd(0).is_err());
    }
}
