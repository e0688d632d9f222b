//! Subsets of {1, ..., n} as fixed-width bitmasks.
//!
//! Bit `i - 1` of the mask is set exactly when `i` is a member. The ground
//! set size is capped at 63 so every subset of every supported lattice fits
//! in a `u64`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Largest supported ground-set size.
pub const MAX_GROUND_SIZE: u8 = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubsetError {
    #[error("ground set size {0} out of range 1..=63")]
    GroundSizeOutOfRange(u8),
    #[error("mask {mask:#x} has bits outside a ground set of size {n}")]
    MaskOutOfRange { n: u8, mask: u64 },
    #[error("element {element} outside ground set of size {n}")]
    ElementOutOfRange { n: u8, element: u32 },
}

/// A subset of {1, ..., n}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    n: u8,
    mask: u64,
}

impl Subset {
    pub fn new(n: u8, mask: u64) -> Result<Self, SubsetError> {
        if n == 0 || n > MAX_GROUND_SIZE {
            return Err(SubsetError::GroundSizeOutOfRange(n));
        }
        if mask >> n != 0 {
            return Err(SubsetError::MaskOutOfRange { n, mask });
        }
        Ok(Self { n, mask })
    }

    pub fn empty(n: u8) -> Result<Self, SubsetError> {
        Self::new(n, 0)
    }

    pub fn full(n: u8) -> Result<Self, SubsetError> {
        if n == 0 || n > MAX_GROUND_SIZE {
            return Err(SubsetError::GroundSizeOutOfRange(n));
        }
        Ok(Self { n, mask: (1u64 << n) - 1 })
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements(n: u8, elements: &[u32]) -> Result<Self, SubsetError> {
        let mut mask = 0u64;
        for &e in elements {
            if e == 0 || e > u32::from(n) {
                return Err(SubsetError::ElementOutOfRange { n, element: e });
            }
            mask |= 1 << (e - 1);
        }
        Self::new(n, mask)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Cardinality; the rank in the Boolean lattice.
    pub fn rank(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn contains(&self, element: u32) -> bool {
        element >= 1 && element <= u32::from(self.n) && self.mask & (1 << (element - 1)) != 0
    }

    pub fn with_element(&self, element: u32) -> Result<Self, SubsetError> {
        if element == 0 || element > u32::from(self.n) {
            return Err(SubsetError::ElementOutOfRange { n: self.n, element });
        }
        Ok(Self { n: self.n, mask: self.mask | (1 << (element - 1)) })
    }

    pub fn without_element(&self, element: u32) -> Result<Self, SubsetError> {
        if element == 0 || element > u32::from(self.n) {
            return Err(SubsetError::ElementOutOfRange { n: self.n, element });
        }
        Ok(Self { n: self.n, mask: self.mask & !(1 << (element - 1)) })
    }

    /// 1-based elements in ascending order.
    pub fn elements(&self) -> Vec<u32> {
        (1..=u32::from(self.n)).filter(|&e| self.contains(e)).collect()
    }

    pub fn complement(&self) -> Self {
        Self { n: self.n, mask: !self.mask & ((1u64 << self.n) - 1) }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.n == other.n && self.mask & other.mask == self.mask
    }

    pub fn is_proper_subset_of(&self, other: &Self) -> bool {
        self.is_subset_of(other) && self.mask != other.mask
    }

    /// Relabels every element i to n + 1 - i.
    pub fn relabel_reverse(&self) -> Self {
        let mut mask = 0u64;
        for e in 1..=u32::from(self.n) {
            if self.contains(e) {
                mask |= 1 << (u32::from(self.n) - e);
            }
        }
        Self { n: self.n, mask }
    }

    /// Lexicographic order on the ascending element sequences. A proper
    /// prefix sorts before its extensions, so {1} < {1,2} < {1,3} < {2}.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        let mut a = self.mask;
        let mut b = other.mask;
        while a != 0 && b != 0 {
            let ea = a.trailing_zeros();
            let eb = b.trailing_zeros();
            match ea.cmp(&eb) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                unequal => return unequal,
            }
        }
        (a != 0).cmp(&(b != 0))
    }

    /// All subsets of size `rank() + 1` containing `self`.
    pub fn covers_above(&self) -> Vec<Self> {
        (1..=u32::from(self.n))
            .filter(|&e| !self.contains(e))
            .map(|e| Self { n: self.n, mask: self.mask | (1 << (e - 1)) })
            .collect()
    }

    /// All masks of subsets of {1..n} with exactly k elements, ascending.
    pub fn masks_of_rank(n: u8, k: u32) -> Vec<u64> {
        assert!((1..=MAX_GROUND_SIZE).contains(&n));
        if k > u32::from(n) {
            return Vec::new();
        }
        if k == 0 {
            return vec![0];
        }
        // Gosper's hack walks the k-bit masks in ascending order.
        let mut out = Vec::new();
        let limit = 1u64 << n;
        let mut v = (1u64 << k) - 1;
        while v < limit {
            out.push(v);
            let t = v | (v - 1);
            v = (t + 1) | (((!t & t.wrapping_add(1)) - 1) >> (v.trailing_zeros() + 1));
        }
        out
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset(n={}, {})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u8, elems: &[u32]) -> Subset {
        Subset::from_elements(n, elems).unwrap()
    }

    #[test]
    fn mask_width_is_enforced() {
        assert!(Subset::new(4, 0b10000).is_err());
        assert!(Subset::new(0, 0).is_err());
        assert!(Subset::new(64, 0).is_err());
        assert!(Subset::new(63, 1 << 62).is_ok());
    }

    #[test]
    fn element_round_trip() {
        let sub = s(11, &[1, 2, 4, 11]);
        assert_eq!(sub.elements(), vec![1, 2, 4, 11]);
        assert_eq!(sub.rank(), 4);
        assert!(sub.contains(4));
        assert!(!sub.contains(3));
        assert_eq!(sub.to_string(), "{1,2,4,11}");
        assert_eq!(Subset::empty(4).unwrap().to_string(), "{}");
    }

    #[test]
    fn lex_order_uses_element_sequences_not_masks() {
        // {1,4} precedes {2,3} lexicographically even though its mask is larger.
        let a = s(4, &[1, 4]);
        let b = s(4, &[2, 3]);
        assert!(a.mask() > b.mask());
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        // Prefix sorts first.
        assert_eq!(s(4, &[1]).lex_cmp(&s(4, &[1, 2])), Ordering::Less);
        assert_eq!(s(4, &[1, 2]).lex_cmp(&s(4, &[1, 3])), Ordering::Less);
        assert_eq!(s(4, &[1, 3]).lex_cmp(&s(4, &[2])), Ordering::Less);
    }

    #[test]
    fn relabel_reverse_is_involutive() {
        let sub = s(5, &[1, 3, 4]);
        assert_eq!(sub.relabel_reverse().elements(), vec![2, 3, 5]);
        assert_eq!(sub.relabel_reverse().relabel_reverse(), sub);
    }

    #[test]
    fn rank_masks_are_complete_and_ascending() {
        let masks = Subset::masks_of_rank(5, 2);
        assert_eq!(masks.len(), 10);
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
        assert!(masks.iter().all(|m| m.count_ones() == 2));
        assert_eq!(Subset::masks_of_rank(5, 0), vec![0]);
        assert_eq!(Subset::masks_of_rank(5, 6), Vec::<u64>::new());
    }
}
