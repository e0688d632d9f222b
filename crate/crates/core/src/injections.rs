//! Successor rules on subsets: the prefix-swap injection from k-sets to
//! (k+1)-sets, and the bracket-matching rule of Greene and Kleitman.

use thiserror::Error;

use crate::chains::Chain;
use crate::subset::Subset;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InjectionError {
    #[error("prefix-swap requires |S| < n/2, got |S|={rank} with n={n}")]
    RankTooLarge { n: u8, rank: u32 },
}

/// Result of the prefix-swap rule: the image set and the pivot r it used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixSwap {
    pub image: Subset,
    pub r: u32,
}

/// Maps a k-subset (k < n/2) to a (k+1)-subset: find the smallest odd r with
/// |S ∩ {1..r}| = (r-1)/2, then complement S inside {1..r} and keep the rest.
///
/// The image does not contain the input in general; the point of the rule is
/// injectivity, not containment.
pub fn prefix_swap_successor(s: &Subset) -> Result<PrefixSwap, InjectionError> {
    let n = s.n();
    if u64::from(2 * s.rank()) >= u64::from(n) {
        return Err(InjectionError::RankTooLarge { n, rank: s.rank() });
    }
    let mut count = 0u32;
    for r in 1..=u32::from(n) {
        if s.contains(r) {
            count += 1;
        }
        if r % 2 == 1 && 2 * count == r - 1 {
            let prefix = (1u64 << r) - 1;
            let mask = (prefix & !s.mask()) | (s.mask() & !prefix);
            let image = Subset::new(n, mask).expect("swap stays inside the ground set");
            debug_assert_eq!(image.rank(), s.rank() + 1);
            return Ok(PrefixSwap { image, r });
        }
    }
    unreachable!("an odd pivot r always exists when |S| < n/2")
}

/// Bracket word of a subset: position i reads '[' exactly when i is a member.
pub fn bracket_word(s: &Subset) -> String {
    (1..=u32::from(s.n())).map(|i| if s.contains(i) { '[' } else { ']' }).collect()
}

/// Stack-matching of a subset's bracket word. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchAnalysis {
    /// Properly nested (open, close) pairs.
    pub pairs: Vec<(u32, u32)>,
    /// Positions of ']' with no partner, ascending.
    pub unmatched_closes: Vec<u32>,
    /// Positions of '[' with no partner, ascending.
    pub unmatched_opens: Vec<u32>,
}

/// Matches brackets with a stack; what survives is a run of ]'s followed by
/// a run of ['s, interleaved with fully matched clusters.
pub fn gk_analyze(s: &Subset) -> MatchAnalysis {
    let mut pairs = Vec::new();
    let mut unmatched_closes = Vec::new();
    let mut open_stack: Vec<u32> = Vec::new();
    for i in 1..=u32::from(s.n()) {
        if s.contains(i) {
            open_stack.push(i);
        } else {
            match open_stack.pop() {
                Some(open) => pairs.push((open, i)),
                None => unmatched_closes.push(i),
            }
        }
    }
    MatchAnalysis { pairs, unmatched_closes, unmatched_opens: open_stack }
}

impl MatchAnalysis {
    /// Every leftover close precedes every leftover open.
    pub fn residue_is_ordered(&self) -> bool {
        match (self.unmatched_closes.last(), self.unmatched_opens.first()) {
            (Some(close), Some(open)) => close < open,
            _ => true,
        }
    }
}

/// Adds one element: flips the last unmatched ']' to '['. Returns `None`
/// when the word is fully compiled and the chain ends here.
pub fn gk_successor(s: &Subset) -> Option<Subset> {
    let analysis = gk_analyze(s);
    let position = *analysis.unmatched_closes.last()?;
    Some(s.with_element(position).expect("position is inside the ground set"))
}

/// Inverse step: flips the first unmatched '[' back to ']', but only if the
/// successor rule maps the result to `s` again. `None` means `s` starts its
/// chain.
pub fn gk_predecessor(s: &Subset) -> Option<Subset> {
    let analysis = gk_analyze(s);
    let position = *analysis.unmatched_opens.first()?;
    let candidate = s.without_element(position).expect("position is inside the ground set");
    if gk_successor(&candidate) == Some(*s) {
        Some(candidate)
    } else {
        None
    }
}

/// The full saturated chain through `s`: walk predecessors to the start,
/// then successors to the end.
pub fn gk_chain_of(s: &Subset) -> Chain {
    let mut start = *s;
    while let Some(previous) = gk_predecessor(&start) {
        start = previous;
    }
    let mut subsets = vec![start];
    let mut current = start;
    while let Some(next) = gk_successor(&current) {
        subsets.push(next);
        current = next;
    }
    Chain::from_subsets(subsets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u8, elems: &[u32]) -> Subset {
        Subset::from_elements(n, elems).unwrap()
    }

    #[test]
    fn prefix_swap_worked_example() {
        // n=11: {1,2,4,11} maps to {3,5,6,7,11} with pivot r=7.
        let out = prefix_swap_successor(&s(11, &[1, 2, 4, 11])).unwrap();
        assert_eq!(out.image, s(11, &[3, 5, 6, 7, 11]));
        assert_eq!(out.r, 7);
        // The image does not contain the input set.
        assert!(!s(11, &[1, 2, 4, 11]).is_subset_of(&out.image));
    }

    #[test]
    fn prefix_swap_small_cases() {
        let out = prefix_swap_successor(&Subset::empty(1).unwrap()).unwrap();
        assert_eq!(out.image, s(1, &[1]));
        assert_eq!(out.r, 1);

        // |S ∩ {1}| = 0 = (1-1)/2, so r=1 and position 1 flips in.
        let out = prefix_swap_successor(&s(4, &[2])).unwrap();
        assert_eq!(out.image, s(4, &[1, 2]));
        assert_eq!(out.r, 1);
    }

    #[test]
    fn prefix_swap_rejects_large_sets() {
        assert!(prefix_swap_successor(&s(4, &[1, 2])).is_err());
        assert!(prefix_swap_successor(&s(3, &[1, 2])).is_err());
        // k = (n-1)/2 is allowed for odd n.
        assert!(prefix_swap_successor(&s(3, &[1])).is_ok());
    }

    #[test]
    fn analyze_empty_set() {
        // "]]]]": no opens at all.
        let a = gk_analyze(&Subset::empty(4).unwrap());
        assert!(a.pairs.is_empty());
        assert_eq!(a.unmatched_closes, vec![1, 2, 3, 4]);
        assert!(a.unmatched_opens.is_empty());
    }

    #[test]
    fn analyze_stack_simulation_cases() {
        // {1,2} at n=4 is "[[]]": nested pairs, nothing left over.
        let a = gk_analyze(&s(4, &[1, 2]));
        assert_eq!(a.pairs, vec![(2, 3), (1, 4)]);
        assert!(a.unmatched_closes.is_empty());
        assert!(a.unmatched_opens.is_empty());

        // {2} at n=4 is "][]]": pair (2,3), closes 1 and 4 survive.
        let a = gk_analyze(&s(4, &[2]));
        assert_eq!(a.pairs, vec![(2, 3)]);
        assert_eq!(a.unmatched_closes, vec![1, 4]);
        assert!(a.unmatched_opens.is_empty());
        assert!(a.residue_is_ordered());
    }

    #[test]
    fn successor_flips_last_unmatched_close() {
        assert_eq!(gk_successor(&Subset::empty(4).unwrap()), Some(s(4, &[4])));
        assert_eq!(gk_successor(&s(4, &[1, 2])), None);
        assert_eq!(gk_successor(&s(4, &[2])), Some(s(4, &[2, 4])));
    }

    #[test]
    fn predecessor_inverts_successor() {
        assert_eq!(gk_predecessor(&s(4, &[4])), Some(Subset::empty(4).unwrap()));
        assert_eq!(gk_predecessor(&s(4, &[2])), None);
        assert_eq!(gk_predecessor(&s(3, &[1])), None);
    }

    #[test]
    fn chain_walks() {
        let chain = gk_chain_of(&s(3, &[1]));
        assert_eq!(chain.subsets(), &[s(3, &[1]), s(3, &[1, 3])]);

        let chain = gk_chain_of(&Subset::empty(3).unwrap());
        assert_eq!(
            chain.subsets(),
            &[Subset::empty(3).unwrap(), s(3, &[3]), s(3, &[2, 3]), s(3, &[1, 2, 3])]
        );

        // "[]" is fully matched, so {1} sits alone in its chain at n=2.
        let chain = gk_chain_of(&s(2, &[1]));
        assert_eq!(chain.subsets(), &[s(2, &[1])]);
    }

    #[test]
    fn successor_grows_by_exactly_one_element() {
        for n in 1..=10u8 {
            for mask in 0..(1u64 << n) {
                let sub = Subset::new(n, mask).unwrap();
                if let Some(next) = gk_successor(&sub) {
                    assert!(sub.is_proper_subset_of(&next));
                    assert_eq!(next.rank(), sub.rank() + 1);
                }
            }
        }
    }

    #[test]
    fn successor_preserves_matched_pairs() {
        for n in 1..=10u8 {
            for mask in 0..(1u64 << n) {
                let sub = Subset::new(n, mask).unwrap();
                if let Some(next) = gk_successor(&sub) {
                    let before = gk_analyze(&sub).pairs;
                    let after = gk_analyze(&next).pairs;
                    assert!(before.iter().all(|p| after.contains(p)), "n={n} mask={mask:b}");
                }
            }
        }
    }

    #[test]
    fn round_trip_holds_exhaustively() {
        for n in 1..=12u8 {
            for mask in 0..(1u64 << n) {
                let sub = Subset::new(n, mask).unwrap();
                if let Some(next) = gk_successor(&sub) {
                    assert_eq!(gk_predecessor(&next), Some(sub), "n={n} mask={mask:b}");
                }
            }
        }
    }
}
