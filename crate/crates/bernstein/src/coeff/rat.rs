//! Exact rationals and rationals-mod-1.
//!
//! `Rat` wraps an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. `QmodZ` is a rational reduced into `[0, 1)`; a value
//! `a/b` stands for the root of unity `e^{2πi a/b}`, so addition of `QmodZ`
//! values is multiplication of roots of unity.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::CoeffError;

/// Exact rational number, always in lowest terms, denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn recip(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Fractional part in `[0, 1)`.
    pub fn mod_one(&self) -> Self {
        let fl = self.0.floor();
        Rat(&self.0 - fl)
    }

    /// Approximate value, for numeric shadow checks in tests.
    pub fn to_f64(&self) -> f64 {
        let n = self.0.numer();
        let d = self.0.denom();
        // good enough for the small magnitudes appearing in tests
        str_to_f64(&n.to_string()) / str_to_f64(&d.to_string())
    }
}

fn str_to_f64(s: &str) -> f64 {
    s.parse::<f64>().unwrap_or(f64::NAN)
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl FromStr for Rat {
    type Err = CoeffError;

    /// Parses `"a"` or `"a/b"`.
    fn from_str(s: &str) -> Result<Self, CoeffError> {
        let bad = || CoeffError::MalformedRational(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rat(BigRational::from_integer(n)))
            }
            Some((a, b)) => {
                let n: BigInt = a.trim().parse().map_err(|_| bad())?;
                let d: BigInt = b.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Rat(BigRational::new(n, d)))
            }
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

/// A rational reduced modulo 1 into `[0, 1)`, read as the root of unity
/// `e^{2πi·value}`. Addition wraps mod 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QmodZ(Rat);

impl QmodZ {
    pub fn new(numer: i64, denom: i64) -> Self {
        QmodZ(Rat::new(numer, denom).mod_one())
    }

    pub fn from_rat(r: &Rat) -> Self {
        QmodZ(r.mod_one())
    }

    pub fn zero() -> Self {
        QmodZ(Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    /// Multiplicative order of the root of unity, i.e. the denominator.
    pub fn order(&self) -> u64 {
        let d = self.0.denom();
        d.try_into().expect("torsion order exceeds u64")
    }

    /// Numerator after reduction into `[0, 1)`.
    pub fn numer_u64(&self) -> u64 {
        self.0.numer().try_into().expect("numerator exceeds u64")
    }

    pub fn scale(&self, k: i64) -> Self {
        QmodZ((&self.0 * &Rat::from_int(k)).mod_one())
    }
}

impl Add for &QmodZ {
    type Output = QmodZ;
    fn add(self, rhs: &QmodZ) -> QmodZ {
        QmodZ((&self.0 + &rhs.0).mod_one())
    }
}

impl Sub for &QmodZ {
    type Output = QmodZ;
    fn sub(self, rhs: &QmodZ) -> QmodZ {
        QmodZ((&self.0 - &rhs.0).mod_one())
    }
}

impl Neg for &QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ((-&self.0).mod_one())
    }
}

impl FromStr for QmodZ {
    type Err = CoeffError;
    fn from_str(s: &str) -> Result<Self, CoeffError> {
        Ok(QmodZ(s.parse::<Rat>()?.mod_one()))
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_lowest_terms() {
        let r = Rat::new(4, -6);
        assert_eq!(r, Rat::new(-2, 3));
        assert_eq!(r.to_string(), "-2/3");
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn rat_parse_roundtrip() {
        for s in ["0", "7", "-3/4", "22/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn qmodz_wraps() {
        let a = QmodZ::new(3, 4);
        let b = QmodZ::new(1, 2);
        assert_eq!(&a + &b, QmodZ::new(1, 4));
        assert_eq!(-&a, QmodZ::new(1, 4));
        assert_eq!(QmodZ::new(-1, 4), QmodZ::new(3, 4));
        assert_eq!(a.order(), 4);
        assert!(QmodZ::new(5, 1).is_zero());
    }

    #[test]
    fn qmodz_scale() {
        let a = QmodZ::new(1, 10);
        assert_eq!(a.scale(10), QmodZ::zero());
        assert_eq!(a.scale(3), QmodZ::new(3, 10));
        assert_eq!(a.scale(-1), QmodZ::new(9, 10));
    }
}
