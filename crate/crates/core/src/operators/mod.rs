//! The raising operator M (adjoin one element, summed over all choices) and
//! the lowering operator L (delete one element, summed over all choices) on
//! the levels of the Boolean lattice, with exact verification of their
//! commutator identities, the iterated commutator, rank/injectivity below
//! the middle level, and the kernel scalar identity that drives the
//! injectivity argument.

mod elim;
mod level;
mod scalar;

pub use elim::{kernel_basis, kernel_basis_integer, rank_integer, rank_mod_p};
pub use level::{level_dim, LevelBasis, LevelMap, LevelVector};
pub use scalar::{is_prime, scalar_to_bigint, FieldSpec, Scalar};

use thiserror::Error;

/// Cap on the lattice size; C(20,10) already means 184756-dimensional levels.
pub const MAX_OPERATOR_N: u8 = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OperatorError {
    #[error("n={0} exceeds the operator-module bound {MAX_OPERATOR_N}")]
    GroundSizeTooLarge(u8),
    #[error("level k={k} invalid for {what} with n={n}")]
    InvalidLevel { n: u8, k: u8, what: &'static str },
    #[error("r={r} outside 1..={max} for n={n}, k={k}")]
    InvalidIterate { n: u8, k: u8, r: u8, max: u8 },
    #[error("GF({p}) needs a prime p > 2n = {min}")]
    BadPrimeField { p: u64, min: u64 },
}

fn validate(field: FieldSpec, n: u8) -> Result<(), OperatorError> {
    if n == 0 || n > MAX_OPERATOR_N {
        return Err(OperatorError::GroundSizeTooLarge(n));
    }
    if let FieldSpec::GfP(p) = field {
        // p > 2n keeps every partial-sum factor j(2k-n-j+1) nonzero mod p.
        if !is_prime(p) || p <= 2 * u64::from(n) {
            return Err(OperatorError::BadPrimeField { p, min: 2 * u64::from(n) });
        }
    }
    Ok(())
}

/// The commutator eigenvalue on level k: mu(k) = 2k - n.
pub fn mu(n: u8, k: u8) -> i64 {
    2 * i64::from(k) - i64::from(n)
}

/// M: V_k -> V_{k+1}; entry (T,S) = 1 exactly when T covers S.
pub fn up_map(field: FieldSpec, n: u8, k: u8) -> Result<LevelMap, OperatorError> {
    validate(field, n)?;
    if k >= n {
        return Err(OperatorError::InvalidLevel { n, k, what: "raising map" });
    }
    let source = LevelBasis::new(n, k);
    let target = LevelBasis::new(n, k + 1);
    let one = field.one();
    let cols = (0..source.dim())
        .map(|j| {
            let s = source.mask(j);
            (0..u64::from(n))
                .filter(|e| s & (1 << e) == 0)
                .map(|e| (target.index_of(s | (1 << e)) as u32, one.clone()))
                .collect()
        })
        .collect();
    Ok(LevelMap::from_cols(field, n, i16::from(k), i16::from(k) + 1, cols))
}

/// L: V_k -> V_{k-1}; entry (T,S) = 1 exactly when S covers T. L on V_0 is
/// the empty sum, handled by callers as an explicit zero map.
pub fn down_map(field: FieldSpec, n: u8, k: u8) -> Result<LevelMap, OperatorError> {
    validate(field, n)?;
    if k == 0 || k > n {
        return Err(OperatorError::InvalidLevel { n, k, what: "lowering map" });
    }
    let source = LevelBasis::new(n, k);
    let target = LevelBasis::new(n, k - 1);
    let one = field.one();
    let cols = (0..source.dim())
        .map(|j| {
            let s = source.mask(j);
            // Dropping higher elements gives smaller masks; walk bits from the top.
            (0..u64::from(n))
                .rev()
                .filter(|e| s & (1 << e) != 0)
                .map(|e| (target.index_of(s & !(1 << e)) as u32, one.clone()))
                .collect()
        })
        .collect();
    Ok(LevelMap::from_cols(field, n, i16::from(k), i16::from(k) - 1, cols))
}

/// L^r on V_k (r = 0 gives the identity).
fn lower_power(field: FieldSpec, n: u8, k: u8, r: u8) -> LevelMap {
    assert!(r <= k, "L^{r} undefined on V_{k} as a nonzero map");
    let mut acc = identity(field, n, k);
    for step in 0..r {
        let l = down_map(field, n, k - step).expect("levels validated by caller");
        acc = l.compose(&acc);
    }
    acc
}

fn identity(field: FieldSpec, n: u8, k: u8) -> LevelMap {
    let dim = level_dim(n, i16::from(k));
    let cols = (0..dim).map(|j| vec![(j as u32, field.one())]).collect();
    LevelMap::from_cols(field, n, i16::from(k), i16::from(k), cols)
}

/// Outcome of checking M L - L M = mu(k) I on V_k.
#[derive(Debug, Clone)]
pub struct Eq1Report {
    pub n: u8,
    pub k: u8,
    pub mu: i64,
    pub dim: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Forms M L - L M on V_k as an explicit matrix and compares it with
/// (2k - n) I, entry by entry.
pub fn check_eq1(field: FieldSpec, n: u8, k: u8) -> Result<Eq1Report, OperatorError> {
    validate(field, n)?;
    if k > n {
        return Err(OperatorError::InvalidLevel { n, k, what: "commutator" });
    }
    let dim = level_dim(n, i16::from(k));
    let ml = if k == 0 {
        LevelMap::zero(field, n, 0, 0)
    } else {
        up_map(field, n, k - 1)?.compose(&down_map(field, n, k)?)
    };
    let lm = if k == n {
        LevelMap::zero(field, n, i16::from(k), i16::from(k))
    } else {
        down_map(field, n, k + 1)?.compose(&up_map(field, n, k)?)
    };
    let commutator = ml.sub(&lm);
    let expected = field.from_i64(mu(n, k));
    let outcome = commutator.equals_scalar_identity(&expected);
    Ok(Eq1Report {
        n,
        k,
        mu: mu(n, k),
        dim,
        pass: outcome.is_ok(),
        witness: outcome.err(),
    })
}

/// Outcome of checking M L^r - L^r M = s L^(r-1) on V_k, where s is the
/// partial sum mu(k) + ... + mu(k-r+1) with closed form r(2k - n - r + 1).
#[derive(Debug, Clone)]
pub struct Eq2Report {
    pub n: u8,
    pub k: u8,
    pub r: u8,
    pub partial_sum: i64,
    pub closed_form: i64,
    pub pass: bool,
    pub witness: Option<String>,
}

pub fn check_eq2(field: FieldSpec, n: u8, k: u8, r: u8) -> Result<Eq2Report, OperatorError> {
    validate(field, n)?;
    if k > n {
        return Err(OperatorError::InvalidLevel { n, k, what: "iterated commutator" });
    }
    if r < 1 || r > k {
        return Err(OperatorError::InvalidIterate { n, k, r, max: k });
    }

    let partial_sum: i64 = (0..r).map(|j| mu(n, k - j)).sum();
    let closed_form = i64::from(r) * (2 * i64::from(k) - i64::from(n) - i64::from(r) + 1);

    let m_lr = up_map(field, n, k - r)?.compose(&lower_power(field, n, k, r));
    let lr_m = if k == n {
        LevelMap::zero(field, n, i16::from(k), i16::from(k - r) + 1)
    } else {
        lower_power(field, n, k + 1, r).compose(&up_map(field, n, k)?)
    };
    let difference = m_lr.sub(&lr_m);
    let expected = lower_power(field, n, k, r - 1).scale(&field.from_i64(partial_sum));

    let pass = partial_sum == closed_form && difference == expected;
    let witness = if pass {
        None
    } else if partial_sum != closed_form {
        Some(format!("partial sum {partial_sum} != closed form {closed_form}"))
    } else {
        Some("M L^r - L^r M differs from the scaled L^(r-1)".to_string())
    };
    Ok(Eq2Report { n, k, r, partial_sum, closed_form, pass, witness })
}

/// Outcome of the rank computation for M on V_k: full column rank below the
/// middle (injective), full row rank at or above it.
#[derive(Debug, Clone)]
pub struct RankReport {
    pub n: u8,
    pub k: u8,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub expected_rank: usize,
    pub kernel_dim: usize,
    /// True when k < n/2, where full column rank is the claim.
    pub below_middle: bool,
    pub pass: bool,
}

/// Rank of M on V_k by exact elimination: fraction-free integer elimination
/// over the rationals, modular elimination over GF(p).
pub fn check_injectivity(field: FieldSpec, n: u8, k: u8) -> Result<RankReport, OperatorError> {
    validate(field, n)?;
    if k >= n {
        return Err(OperatorError::InvalidLevel { n, k, what: "raising map" });
    }
    let map = up_map(field, n, k)?;
    let rank = match field {
        FieldSpec::Rational => {
            let mut rows = vec![vec![0i64; map.source_dim()]; map.target_dim()];
            for (j, col) in map.columns().iter().enumerate() {
                for (row, _) in col {
                    rows[*row as usize][j] = 1;
                }
            }
            rank_integer(&rows)
        }
        FieldSpec::GfP(p) => {
            let mut rows = vec![vec![0u64; map.source_dim()]; map.target_dim()];
            for (j, col) in map.columns().iter().enumerate() {
                for (row, _) in col {
                    rows[*row as usize][j] = 1;
                }
            }
            rank_mod_p(&rows, p)
        }
    };
    let below_middle = 2 * u32::from(k) < u32::from(n);
    let expected_rank = if below_middle { map.source_dim() } else { map.target_dim() };
    Ok(RankReport {
        n,
        k,
        rows: map.target_dim(),
        cols: map.source_dim(),
        rank,
        expected_rank,
        kernel_dim: map.source_dim() - rank,
        below_middle,
        pass: rank == expected_rank,
    })
}

/// Outcome of the kernel scalar identity M^r L^r f = (prod_j j(2k-n-j+1)) f.
#[derive(Debug, Clone)]
pub struct KernelScalarReport {
    pub n: u8,
    pub k: u8,
    pub r: u8,
    /// Kernel dimension when k >= n/2; `None` on the no-kernel side.
    pub kernel_dim: Option<usize>,
    /// (r', scalar) for each checked iterate.
    pub scalars: Vec<(u8, i128)>,
    pub pass: bool,
    pub witness: Option<String>,
}

fn iterate_product(n: u8, k: u8, r: u8) -> i128 {
    (1..=i128::from(r))
        .map(|j| j * (2 * i128::from(k) - i128::from(n) - j + 1))
        .product()
}

/// Kernel basis of a 0/1 map. Over the rationals the fraction-free integer
/// path is far faster than field elimination; it yields integer-scaled
/// basis vectors, which is all the linear identity checks need.
fn kernel_of_zero_one_map(field: FieldSpec, map: &LevelMap) -> Vec<Vec<Scalar>> {
    if field == FieldSpec::Rational {
        let mut rows = vec![vec![0i64; map.source_dim()]; map.target_dim()];
        for (j, col) in map.columns().iter().enumerate() {
            for (row, _) in col {
                rows[*row as usize][j] = 1;
            }
        }
        if let Some(basis) = kernel_basis_integer(&rows, map.source_dim()) {
            return basis
                .into_iter()
                .map(|v| v.into_iter().map(|x| field.from_i64(x)).collect())
                .collect();
        }
    }
    kernel_basis(field, map.dense_rows(), map.source_dim())
}

/// Applies L r times and then M r times to a vector of V_k, using maps
/// prebuilt per level (`downs[j]` lowers from level j+1, `ups[j]` raises
/// from level j). Once the walk falls off the bottom of the lattice
/// everything is zero.
fn m_r_l_r(
    field: FieldSpec,
    n: u8,
    k: u8,
    r: u8,
    downs: &[LevelMap],
    ups: &[LevelMap],
    f: &LevelVector,
) -> LevelVector {
    let mut v = f.clone();
    let mut level = k;
    for _ in 0..r {
        if level == 0 {
            return LevelVector::zero(field, n, k);
        }
        v = downs[usize::from(level) - 1].apply(&v);
        level -= 1;
    }
    for _ in 0..r {
        v = ups[usize::from(level)].apply(&v);
        level += 1;
    }
    v
}

/// For k >= n/2: verifies the scalar identity on a kernel basis of M|V_k
/// for every iterate r' <= r. For k < n/2: verifies the products are all
/// nonzero, which is what makes M injective there.
pub fn check_kernel_scalar(
    field: FieldSpec,
    n: u8,
    k: u8,
    r: u8,
) -> Result<KernelScalarReport, OperatorError> {
    validate(field, n)?;
    if k > n {
        return Err(OperatorError::InvalidLevel { n, k, what: "kernel scalar" });
    }
    if r < 1 || r > k + 1 {
        return Err(OperatorError::InvalidIterate { n, k, r, max: k + 1 });
    }

    let scalars: Vec<(u8, i128)> = (1..=r).map(|rr| (rr, iterate_product(n, k, rr))).collect();

    if 2 * u32::from(k) < u32::from(n) {
        let zero = scalars.iter().find(|(_, c)| *c == 0);
        return Ok(KernelScalarReport {
            n,
            k,
            r,
            kernel_dim: None,
            pass: zero.is_none(),
            witness: zero.map(|(rr, _)| format!("product vanishes at r={rr} despite k < n/2")),
            scalars,
        });
    }

    let kernel: Vec<LevelVector> = if k == n {
        // M on the top level is the zero map, so the kernel is everything.
        let dim = level_dim(n, i16::from(n));
        (0..dim)
            .map(|i| {
                let mut entries = vec![field.zero(); dim];
                entries[i] = field.one();
                LevelVector { n, k, entries }
            })
            .collect()
    } else {
        let map = up_map(field, n, k)?;
        kernel_of_zero_one_map(field, &map)
            .into_iter()
            .map(|entries| LevelVector { n, k, entries })
            .collect()
    };

    let downs: Vec<LevelMap> =
        (1..=k).map(|lvl| down_map(field, n, lvl).expect("validated")).collect();
    let ups: Vec<LevelMap> = (0..k).map(|lvl| up_map(field, n, lvl).expect("validated")).collect();

    let mut witness = None;
    'outer: for (i, f) in kernel.iter().enumerate() {
        debug_assert!(
            k == n || up_map(field, n, k)?.apply(f).is_zero(),
            "kernel basis vector escapes the kernel"
        );
        for &(rr, c) in &scalars {
            let actual = m_r_l_r(field, n, k, rr, &downs, &ups, f);
            let expected = f.scale(&field.from_i128(c));
            if actual != expected {
                witness = Some(format!("kernel vector {i} fails at r={rr} (scalar {c})"));
                break 'outer;
            }
        }
    }

    Ok(KernelScalarReport {
        n,
        k,
        r,
        kernel_dim: Some(kernel.len()),
        pass: witness.is_none(),
        witness,
        scalars,
    })
}
