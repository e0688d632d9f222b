//! Symmetric unimodal polynomials with nonnegative integer coefficients
//! ("Z-polynomials"), tracked by darga: the sum of the lowest and highest
//! degrees. Darga adds under products, which is what makes the closure facts
//! mechanical to verify.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::binomial::BinomialTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZpolyError {
    #[error("the zero polynomial has no darga")]
    ZeroPolynomial,
    #[error("darga mismatch: {0} vs {1}")]
    DargaMismatch(u64, u64),
    #[error("operand is not a Z-polynomial: {0}")]
    NotZ(String),
    #[error("atom requires a <= b, got a={0} b={1}")]
    EmptyAtom(u64, u64),
}

/// A polynomial with nonnegative integer coefficients, stored as the
/// exponent of its lowest term plus the dense coefficient run up to the
/// highest term. The zero polynomial is the empty run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPolynomial {
    low: u64,
    coeffs: Vec<BigUint>,
}

impl ZPolynomial {
    /// Normalizing constructor: trims zero coefficients at both ends.
    pub fn new(low: u64, coeffs: Vec<BigUint>) -> Self {
        let mut low = low;
        let mut coeffs = coeffs;
        while coeffs.first().is_some_and(Zero::is_zero) {
            coeffs.remove(0);
            low += 1;
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            low = 0;
        }
        Self { low, coeffs }
    }

    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { low: 0, coeffs: vec![BigUint::one()] }
    }

    pub fn monomial(exponent: u64) -> Self {
        Self { low: exponent, coeffs: vec![BigUint::one()] }
    }

    pub fn from_u64_coeffs(low: u64, coeffs: &[u64]) -> Self {
        Self::new(low, coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> Option<u64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<u64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as u64 - 1)
    }

    /// Coefficient of x^exponent.
    pub fn coeff(&self, exponent: u64) -> BigUint {
        if exponent < self.low || exponent > self.high_degree().unwrap_or(0) || self.is_zero() {
            BigUint::zero()
        } else {
            self.coeffs[(exponent - self.low) as usize].clone()
        }
    }

    /// The dense coefficient run from `low_degree()` upward.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }
}

/// Low degree plus high degree. Undefined (an error) for the zero polynomial.
pub fn darga(p: &ZPolynomial) -> Result<u64, ZpolyError> {
    match (p.low_degree(), p.high_degree()) {
        (Some(low), Some(high)) => Ok(low + high),
        _ => Err(ZpolyError::ZeroPolynomial),
    }
}

/// True iff the coefficient run is palindromic and unimodal (nondecreasing
/// up to its midpoint; plateaus count). The zero polynomial is excluded.
pub fn is_z(p: &ZPolynomial) -> bool {
    if p.is_zero() {
        return false;
    }
    let c = &p.coeffs;
    let len = c.len();
    let symmetric = (0..len / 2).all(|i| c[i] == c[len - 1 - i]);
    let unimodal = (1..len.div_ceil(2)).all(|i| c[i - 1] <= c[i]);
    symmetric && unimodal
}

/// Coefficientwise sum of two Z-polynomials of equal darga; the result is
/// again a Z-polynomial of that darga.
pub fn add_same_darga(p: &ZPolynomial, q: &ZPolynomial) -> Result<ZPolynomial, ZpolyError> {
    if !is_z(p) {
        return Err(ZpolyError::NotZ(format!("{p:?}")));
    }
    if !is_z(q) {
        return Err(ZpolyError::NotZ(format!("{q:?}")));
    }
    let dp = darga(p)?;
    let dq = darga(q)?;
    if dp != dq {
        return Err(ZpolyError::DargaMismatch(dp, dq));
    }
    let low = p.low.min(q.low);
    let high = p.high_degree().unwrap().max(q.high_degree().unwrap());
    let mut coeffs = vec![BigUint::zero(); (high - low + 1) as usize];
    for (i, c) in p.coeffs.iter().enumerate() {
        coeffs[(p.low - low) as usize + i] += c;
    }
    for (i, c) in q.coeffs.iter().enumerate() {
        coeffs[(q.low - low) as usize + i] += c;
    }
    let sum = ZPolynomial::new(low, coeffs);
    assert!(is_z(&sum), "sum of equal-darga Z-polynomials must be Z");
    assert_eq!(darga(&sum).unwrap(), dp);
    Ok(sum)
}

/// Product of two Z-polynomials; the result is a Z-polynomial whose darga is
/// the sum of the dargas.
pub fn mul(p: &ZPolynomial, q: &ZPolynomial) -> Result<ZPolynomial, ZpolyError> {
    if !is_z(p) {
        return Err(ZpolyError::NotZ(format!("{p:?}")));
    }
    if !is_z(q) {
        return Err(ZpolyError::NotZ(format!("{q:?}")));
    }
    let product = mul_raw(p, q);
    assert!(is_z(&product), "product of Z-polynomials must be Z");
    assert_eq!(darga(&product).unwrap(), darga(p)? + darga(q)?);
    Ok(product)
}

/// Plain convolution without the Z contract.
pub fn mul_raw(p: &ZPolynomial, q: &ZPolynomial) -> ZPolynomial {
    if p.is_zero() || q.is_zero() {
        return ZPolynomial::zero();
    }
    let mut coeffs = vec![BigUint::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        for (j, b) in q.coeffs.iter().enumerate() {
            coeffs[i + j] += a * b;
        }
    }
    ZPolynomial::new(p.low + q.low, coeffs)
}

/// The indicator run x^a + x^(a+1) + ... + x^b, darga a+b. These are the
/// additive building blocks of Z-polynomials.
pub fn atom(a: u64, b: u64) -> Result<ZPolynomial, ZpolyError> {
    if a > b {
        return Err(ZpolyError::EmptyAtom(a, b));
    }
    Ok(ZPolynomial { low: a, coeffs: vec![BigUint::one(); (b - a + 1) as usize] })
}

/// Peels a Z-polynomial into atom layers: p = sum of m_i * atom(i, d-i)
/// with every m_i >= 0. A negative layer multiplicity or a nonzero residue
/// witnesses a non-Z input.
pub fn decompose_atoms(p: &ZPolynomial) -> Result<Vec<(ZPolynomial, BigUint)>, ZpolyError> {
    if p.is_zero() {
        return Err(ZpolyError::ZeroPolynomial);
    }
    let d = darga(p)?;
    let mut remaining: Vec<BigInt> = p.coeffs.iter().map(|c| BigInt::from(c.clone())).collect();
    let mut layers = Vec::new();
    for i in 0..remaining.len().div_ceil(2) {
        let m = remaining[i].clone();
        if m < BigInt::zero() {
            return Err(ZpolyError::NotZ(format!(
                "layer {} has multiplicity {m}",
                p.low + i as u64
            )));
        }
        let j = remaining.len() - 1 - i;
        for cell in &mut remaining[i..=j] {
            *cell -= &m;
        }
        if !m.is_zero() {
            let low = p.low + i as u64;
            layers.push((atom(low, d - low)?, m.to_biguint().unwrap()));
        }
    }
    if remaining.iter().any(|c| !c.is_zero()) {
        return Err(ZpolyError::NotZ("asymmetric coefficients leave a residue".into()));
    }
    Ok(layers)
}

/// (1+x)^n by repeated multiplication; the coefficients are checked against
/// the Pascal table row.
pub fn binomial_gf(n: u32) -> ZPolynomial {
    let base = atom(0, 1).expect("0 <= 1");
    let mut acc = ZPolynomial::one();
    for _ in 0..n {
        acc = mul(&acc, &base).expect("powers of 1+x stay Z");
    }
    let table = BinomialTable::new(n);
    assert_eq!(acc.coeffs(), table.row(n), "(1+x)^{n} must reproduce Pascal row {n}");
    acc
}

/// (1+x)^m (x+...+x^6)^n (x+...+x^4)^k: coin flips, dice, and tetrahedral
/// dice. Z with darga m + 7n + 5k; for pure dice the peak coefficient sits
/// at the expected gain 7n/2 (both neighbors when 7n is odd).
pub fn gambling_gf(m: u32, n: u32, k: u32) -> ZPolynomial {
    let coin = atom(0, 1).expect("0 <= 1");
    let die = atom(1, 6).expect("1 <= 6");
    let tetra = atom(1, 4).expect("1 <= 4");
    let mut acc = ZPolynomial::one();
    for _ in 0..m {
        acc = mul(&acc, &coin).expect("gambling products stay Z");
    }
    for _ in 0..n {
        acc = mul(&acc, &die).expect("gambling products stay Z");
    }
    for _ in 0..k {
        acc = mul(&acc, &tetra).expect("gambling products stay Z");
    }
    if m > 0 || n > 0 || k > 0 {
        assert_eq!(
            darga(&acc).unwrap(),
            u64::from(m) + 7 * u64::from(n) + 5 * u64::from(k),
            "gambling darga must be m + 7n + 5k"
        );
    }
    if m == 0 && k == 0 && n > 0 {
        let peak = acc.coeffs().iter().max().expect("dice polynomial is nonzero");
        let gain_low = 7 * u64::from(n) / 2;
        let gain_high = (7 * u64::from(n)).div_ceil(2);
        assert_eq!(&acc.coeff(gain_low), peak, "dice peak sits at floor(7n/2)");
        assert_eq!(&acc.coeff(gain_high), peak, "dice peak sits at ceil(7n/2)");
    }
    acc
}
