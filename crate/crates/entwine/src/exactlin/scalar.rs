use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ExactLinError;

/// The ground field: either the rationals or a prime field of given modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::PrimeField(p) => write!(f, "gf {p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); prime-field residues lie in
/// `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(r) => *r == 0,
        }
    }

    /// Renders the scalar the way reports and `.ent` files spell it:
    /// `-3/7` over the rationals, a bare residue over a prime field.
    pub fn display(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    format!("{}", r.numer())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(r) => format!("{r}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self, ExactLinError> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(ExactLinError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64);
                Scalar::Mod(r as u64)
            }
        }
    }

    /// Builds `num/den`. Fails with `DivisionByZero` when `den` vanishes in
    /// the field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, ExactLinError> {
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(ExactLinError::DivisionByZero);
        }
        let n = self.from_i64(num);
        Ok(self.mul(&n, &self.inv(&d)?))
    }

    fn expect_pair<'a>(&self, a: &'a Scalar, b: &'a Scalar) -> (&'a Scalar, &'a Scalar) {
        debug_assert!(self.contains(a) && self.contains(b), "scalar/field mismatch");
        (a, b)
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rat(_)) => true,
            (FieldSpec::PrimeField(p), Scalar::Mod(r)) => r < p,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let (a, b) = self.expect_pair(a, b);
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 + *y as u128) % (*p as u128)) as u64)
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
            _ => unreachable!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let (a, b) = self.expect_pair(a, b);
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % (*p as u128)) as u64)
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, ExactLinError> {
        if a.is_zero() {
            return Err(ExactLinError::DivisionByZero);
        }
        Ok(match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => {
                // extended Euclid on (x, p)
                let (mut r0, mut r1) = (*x as i128, *p as i128);
                let (mut t0, mut t1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (t0, t1) = (t1, t0 - q * t1);
                }
                debug_assert_eq!(r0, 1);
                Scalar::Mod(t0.rem_euclid(*p as i128) as u64)
            }
            _ => unreachable!("scalar/field mismatch"),
        })
    }

    /// Parses a scalar literal: an integer, or `a/b` over the rationals.
    /// Prime-field literals are integers reduced mod p.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, ExactLinError> {
        let bad = || ExactLinError::DimensionMismatch(format!("bad scalar literal `{text}`"));
        if let Some((n, d)) = text.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            self.from_ratio(n, d)
        } else {
            let n: i64 = text.trim().parse().map_err(|_| bad())?;
            Ok(self.from_i64(n))
        }
    }
}

impl Scalar {
    /// Signed-magnitude ordering key used when picking pivots over the
    /// rationals; irrelevant over prime fields.
    pub fn abs_complexity(&self) -> u64 {
        match self {
            Scalar::Rat(r) => (r.numer().abs().bits() + r.denom().bits()) as u64,
            Scalar::Mod(_) => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_composite_modulus() {
        assert!(FieldSpec::prime_field(6).is_err());
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(97).is_ok());
    }

    #[test]
    fn mod_inverse() {
        let f = FieldSpec::prime_field(7).unwrap();
        for x in 1..7 {
            let s = Scalar::Mod(x);
            let inv = f.inv(&s).unwrap();
            assert_eq!(f.mul(&s, &inv), f.one());
        }
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn rational_display_lowest_terms() {
        let f = FieldSpec::Rationals;
        let s = f.from_ratio(4, -6).unwrap();
        assert_eq!(s.display(), "-2/3");
        assert_eq!(f.from_i64(5).display(), "5");
    }

    #[test]
    fn parse_scalar_literals() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse_scalar("3/7").unwrap().display(), "3/7");
        assert_eq!(q.parse_scalar("-2").unwrap().display(), "-2");
        let g = FieldSpec::prime_field(5).unwrap();
        assert_eq!(g.parse_scalar("7").unwrap(), Scalar::Mod(2));
        assert_eq!(g.parse_scalar("-1").unwrap(), Scalar::Mod(4));
    }
}
