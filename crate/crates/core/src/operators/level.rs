//! Level spaces of the Boolean lattice and the sparse linear maps between
//! them. A level basis is the set of k-subsets in ascending bitmask order,
//! so every matrix here is deterministic.

use std::collections::BTreeMap;

use crate::operators::scalar::{FieldSpec, Scalar};
use crate::subset::Subset;

/// C(n,k) as a machine integer; levels here stay far below usize range.
pub fn level_dim(n: u8, k: i16) -> usize {
    if k < 0 || k > i16::from(n) {
        return 0;
    }
    let (n, k) = (u64::from(n), k as u64);
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc as usize
}

/// The k-subsets of {1..n} in ascending bitmask order.
#[derive(Debug, Clone)]
pub struct LevelBasis {
    n: u8,
    k: u8,
    masks: Vec<u64>,
}

impl LevelBasis {
    pub fn new(n: u8, k: u8) -> Self {
        Self { n, k, masks: Subset::masks_of_rank(n, u32::from(k)) }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.masks.len()
    }

    pub fn mask(&self, index: usize) -> u64 {
        self.masks[index]
    }

    pub fn subset(&self, index: usize) -> Subset {
        Subset::new(self.n, self.masks[index]).expect("basis masks are valid")
    }

    pub fn index_of(&self, mask: u64) -> usize {
        self.masks.binary_search(&mask).expect("mask belongs to this level")
    }
}

/// A formal sum over the k-subsets: dense coordinates in basis order.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelVector {
    pub n: u8,
    pub k: u8,
    pub entries: Vec<Scalar>,
}

impl LevelVector {
    pub fn zero(field: FieldSpec, n: u8, k: u8) -> Self {
        Self { n, k, entries: vec![field.zero(); level_dim(n, i16::from(k))] }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { n: self.n, k: self.k, entries: self.entries.iter().map(|e| e.mul(c)).collect() }
    }
}

/// A sparse matrix between adjacent (or iterated) levels, stored by column.
/// Column j lists (row, value) pairs in ascending row order.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelMap {
    field: FieldSpec,
    n: u8,
    source_k: i16,
    target_k: i16,
    source_dim: usize,
    target_dim: usize,
    cols: Vec<Vec<(u32, Scalar)>>,
}

impl LevelMap {
    pub fn zero(field: FieldSpec, n: u8, source_k: i16, target_k: i16) -> Self {
        let source_dim = level_dim(n, source_k);
        let target_dim = level_dim(n, target_k);
        Self { field, n, source_k, target_k, source_dim, target_dim, cols: vec![Vec::new(); source_dim] }
    }

    pub(crate) fn from_cols(
        field: FieldSpec,
        n: u8,
        source_k: i16,
        target_k: i16,
        cols: Vec<Vec<(u32, Scalar)>>,
    ) -> Self {
        let source_dim = level_dim(n, source_k);
        let target_dim = level_dim(n, target_k);
        debug_assert_eq!(cols.len(), source_dim);
        Self { field, n, source_k, target_k, source_dim, target_dim, cols }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn source_k(&self) -> i16 {
        self.source_k
    }

    pub fn target_k(&self) -> i16 {
        self.target_k
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn columns(&self) -> &[Vec<(u32, Scalar)>] {
        &self.cols
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &LevelMap) -> LevelMap {
        assert_eq!(self.field, other.field, "mixed fields in composition");
        assert_eq!(self.source_dim, other.target_dim, "composition dimension mismatch");
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
                for (mid, v) in col {
                    for (row, w) in &self.cols[*mid as usize] {
                        let term = v.mul(w);
                        acc.entry(*row)
                            .and_modify(|cell| *cell = cell.add(&term))
                            .or_insert(term);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        LevelMap {
            field: self.field,
            n: self.n,
            source_k: other.source_k,
            target_k: self.target_k,
            source_dim: other.source_dim,
            target_dim: self.target_dim,
            cols,
        }
    }

    pub fn sub(&self, other: &LevelMap) -> LevelMap {
        assert_eq!(self.field, other.field, "mixed fields in subtraction");
        assert_eq!(self.source_dim, other.source_dim);
        assert_eq!(self.target_dim, other.target_dim);
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
                for (row, v) in a {
                    acc.insert(*row, v.clone());
                }
                for (row, v) in b {
                    acc.entry(*row)
                        .and_modify(|cell| *cell = cell.sub(v))
                        .or_insert_with(|| v.neg());
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        LevelMap { cols, ..self.clone() }
    }

    pub fn scale(&self, c: &Scalar) -> LevelMap {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .map(|(row, v)| (*row, v.mul(c)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        LevelMap { cols, ..self.clone() }
    }

    pub fn transpose(&self) -> LevelMap {
        let mut cols: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.target_dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (row, v) in col {
                cols[*row as usize].push((j as u32, v.clone()));
            }
        }
        LevelMap {
            field: self.field,
            n: self.n,
            source_k: self.target_k,
            target_k: self.source_k,
            source_dim: self.target_dim,
            target_dim: self.source_dim,
            cols,
        }
    }

    pub fn apply(&self, vec: &LevelVector) -> LevelVector {
        assert_eq!(vec.entries.len(), self.source_dim, "vector dimension mismatch");
        let mut out = vec![self.field.zero(); self.target_dim];
        for (j, col) in self.cols.iter().enumerate() {
            let c = &vec.entries[j];
            if c.is_zero() {
                continue;
            }
            for (row, v) in col {
                let cell = &mut out[*row as usize];
                *cell = cell.add(&c.mul(v));
            }
        }
        LevelVector {
            n: self.n,
            k: u8::try_from(self.target_k.max(0)).expect("target level fits"),
            entries: out,
        }
    }

    /// Checks self == c * I on a square map; returns the first offending
    /// entry as a witness.
    pub fn equals_scalar_identity(&self, c: &Scalar) -> Result<(), String> {
        assert_eq!(self.source_dim, self.target_dim, "identity comparison needs a square map");
        for (j, col) in self.cols.iter().enumerate() {
            let expected: Vec<(u32, Scalar)> =
                if c.is_zero() { Vec::new() } else { vec![(j as u32, c.clone())] };
            if col != &expected {
                return Err(format!("column {j} is {col:?}, expected {expected:?}"));
            }
        }
        Ok(())
    }

    /// Dense rows of the matrix; for the elimination backends.
    pub fn dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field.zero(); self.source_dim]; self.target_dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (row, v) in col {
                rows[*row as usize][j] = v.clone();
            }
        }
        rows
    }
}
