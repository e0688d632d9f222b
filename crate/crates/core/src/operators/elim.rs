//! Exact elimination backends. Rank over the rationals runs fraction-free
//! on integer rows with gcd normalization (machine integers first, big
//! integers if anything overflows); rank over GF(p) runs a plain modular
//! elimination. Kernel bases use an exact Gauss-Jordan over the scalar
//! field itself.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::operators::scalar::{FieldSpec, Scalar};

/// Rank of an integer matrix, exactly. The i64 path bails out to BigInt on
/// any overflow, so the result never depends on machine word width.
pub fn rank_integer(rows: &[Vec<i64>]) -> usize {
    match rank_i64(rows.to_vec()) {
        Some(rank) => rank,
        None => rank_bigint(
            rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(),
        ),
    }
}

fn normalize_row_i64(row: &mut [i64]) {
    let mut g = 0i64;
    for &v in row.iter() {
        g = g.gcd(&v);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
}

fn rank_i64(mut rows: Vec<Vec<i64>>) -> Option<usize> {
    if rows.is_empty() {
        return Some(0);
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        // Smallest nonzero pivot keeps the cross-multiplications tame.
        let pivot_row = rows[rank..]
            .iter()
            .enumerate()
            .filter(|(_, r)| r[col] != 0)
            .min_by_key(|(_, r)| r[col].unsigned_abs())
            .map(|(i, _)| rank + i);
        let Some(pivot_row) = pivot_row else { continue };
        rows.swap(rank, pivot_row);
        let (pivot, rest) = rows[rank..].split_first_mut().expect("rank row exists");
        let p = pivot[col];
        for row in rest {
            let q = row[col];
            if q == 0 {
                continue;
            }
            let g = p.gcd(&q);
            let pm = p / g;
            let qm = q / g;
            for j in col..ncols {
                let a = row[j].checked_mul(pm)?;
                let b = pivot[j].checked_mul(qm)?;
                row[j] = a.checked_sub(b)?;
            }
            normalize_row_i64(&mut row[col..]);
        }
        rank += 1;
    }
    Some(rank)
}

fn normalize_row_big(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        g = g.gcd(v);
    }
    if g > BigInt::from(1) {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
}

fn rank_bigint(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pivot_row = rows[rank..]
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| r[col].abs())
            .map(|(i, _)| rank + i);
        let Some(pivot_row) = pivot_row else { continue };
        rows.swap(rank, pivot_row);
        let (pivot, rest) = rows[rank..].split_first_mut().expect("rank row exists");
        let p = pivot[col].clone();
        for row in rest {
            let q = row[col].clone();
            if q.is_zero() {
                continue;
            }
            let g = p.gcd(&q);
            let pm = &p / &g;
            let qm = &q / &g;
            for j in col..ncols {
                row[j] = &row[j] * &pm - &pivot[j] * &qm;
            }
            normalize_row_big(&mut row[col..]);
        }
        rank += 1;
    }
    rank
}

/// Rank of a matrix over GF(p).
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> =
        rows.iter().map(|r| r.iter().map(|&v| v % p).collect()).collect();
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let pw = u128::from(p);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot_row) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, pivot_row);
        let inv = super::scalar::pow_mod(rows[rank][col], p - 2, p);
        for cell in &mut rows[rank][col..] {
            *cell = (u128::from(*cell) * u128::from(inv) % pw) as u64;
        }
        let (pivot, rest) = rows[rank..].split_first_mut().expect("rank row exists");
        for row in rest {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for j in col..ncols {
                let sub = u128::from(factor) * u128::from(pivot[j]) % pw;
                row[j] = ((u128::from(row[j]) + pw - sub) % pw) as u64;
            }
        }
        rank += 1;
    }
    rank
}

/// Kernel basis of an integer matrix with integer coordinates, by
/// fraction-free Gauss-Jordan. Scalar multiples of basis vectors are fine
/// for every identity checked downstream. `None` on i64 overflow.
pub fn kernel_basis_integer(rows: &[Vec<i64>], ncols: usize) -> Option<Vec<Vec<i64>>> {
    let mut rows = rows.to_vec();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let pivot_row = rows[rank..]
            .iter()
            .enumerate()
            .filter(|(_, r)| r[col] != 0)
            .min_by_key(|(_, r)| r[col].unsigned_abs())
            .map(|(i, _)| rank + i);
        let Some(pivot_row) = pivot_row else { continue };
        rows.swap(rank, pivot_row);
        let pivot_copy = rows[rank].clone();
        let p = pivot_copy[col];
        for (i, row) in rows.iter_mut().enumerate() {
            let q = row[col];
            if i == rank || q == 0 {
                continue;
            }
            let g = p.gcd(&q);
            let pm = p / g;
            let qm = q / g;
            for (cell, pivot) in row.iter_mut().zip(&pivot_copy) {
                *cell = cell.checked_mul(pm)?.checked_sub(pivot.checked_mul(qm)?)?;
            }
            normalize_row_i64(row);
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }

    let free: Vec<usize> = (0..ncols).filter(|&c| pivot_of_col[c].is_none()).collect();
    let mut scale = 1i64;
    for col in 0..ncols {
        if let Some(row) = pivot_of_col[col] {
            let p = rows[row][col].abs();
            scale = scale.checked_mul(p / scale.gcd(&p))?;
        }
    }

    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![0i64; ncols];
        v[f] = scale;
        for col in 0..ncols {
            if let Some(row) = pivot_of_col[col] {
                let entry = rows[row][f].checked_mul(scale)?;
                debug_assert_eq!(entry % rows[row][col], 0);
                v[col] = -(entry / rows[row][col]);
            }
        }
        basis.push(v);
    }
    Some(basis)
}

/// Kernel basis of a matrix over the scalar field, by exact Gauss-Jordan.
/// Returns one vector per free column; empty when the map is injective.
pub fn kernel_basis(field: FieldSpec, mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(pivot_row) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        for cell in &mut rows[rank][col..] {
            *cell = cell.mul(&inv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (cell, pivot) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let sub = factor.mul(pivot);
                *cell = cell.sub(&sub);
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }

    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (col, pivot) in pivot_of_col.iter().enumerate() {
            if let Some(row) = pivot {
                v[col] = rows[*row][free].neg();
            }
        }
        basis.push(v);
    }
    basis
}
