//! Exact scalars for the level maps: arbitrary-precision rationals, or
//! residues mod a prime p. Mixing the two, or two different primes, is a
//! programming error and panics.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Which exact field the level maps live over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    /// GF(p); construction sites check p prime and p > 2n.
    GfP(u64),
}

impl FieldSpec {
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        self.from_i128(i128::from(v))
    }

    pub fn from_i128(self, v: i128) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(v))),
            FieldSpec::GfP(p) => {
                let p_i = i128::from(p);
                Scalar::Residue { value: v.rem_euclid(p_i) as u64, p }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::GfP(p) => write!(f, "gfp:{p}"),
        }
    }
}

/// An element of the chosen field.
#[derive(Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Residue { p, .. } => FieldSpec::GfP(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Residue { value: (a + b) % p, p: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                let prod = (u128::from(*a) * u128::from(*b)) % u128::from(*p);
                Scalar::Residue { value: prod as u64, p: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, p } => {
                Scalar::Residue { value: if *value == 0 { 0 } else { p - value }, p: *p }
            }
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => (!a.is_zero()).then(|| Scalar::Rational(a.recip())),
            Scalar::Residue { value, p } => {
                (*value != 0).then(|| Scalar::Residue { value: pow_mod(*value, p - 2, *p), p: *p })
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Residue { value, p } => write!(f, "{value} (mod {p})"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{r}")
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

pub fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut base = u128::from(base % p);
    let modulus = u128::from(p);
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc as u64
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Rational scalars print as plain integers when they are integers; this
/// recovers the integer for witnesses.
pub fn scalar_to_bigint(s: &Scalar) -> Option<BigInt> {
    match s {
        Scalar::Rational(r) => r.is_integer().then(|| r.numer().clone()),
        Scalar::Residue { value, .. } => Some(BigInt::from(*value)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = FieldSpec::Rational;
        let third = f.from_i64(1).mul(&f.from_i64(3).inv().unwrap());
        let sum = third.add(&third).add(&third);
        assert_eq!(sum, f.one());
    }

    #[test]
    fn residue_arithmetic() {
        let f = FieldSpec::GfP(101);
        assert_eq!(f.from_i64(-3), f.from_i64(98));
        let x = f.from_i64(37);
        let inv = x.inv().unwrap();
        assert_eq!(x.mul(&inv), f.one());
        assert!(f.zero().inv().is_none());
        assert_eq!(f.from_i64(5).sub(&f.from_i64(7)), f.from_i64(-2));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(101));
        assert!(!is_prime(1));
        assert!(!is_prime(91)); // 7 * 13
    }

    #[test]
    #[should_panic(expected = "mixed scalar fields")]
    fn mixing_fields_panics() {
        let _ = FieldSpec::Rational.one().add(&FieldSpec::GfP(101).one());
    }
}
