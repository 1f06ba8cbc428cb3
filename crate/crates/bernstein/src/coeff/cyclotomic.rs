//! Exact cyclotomic field elements.
//!
//! An element of the `N`-th cyclotomic field is stored by its coordinates in
//! the power basis `1, t, ..., t^{φ(N)-1}`, i.e. as a residue modulo the
//! `N`-th cyclotomic polynomial `Φ_N(t)`, where `t` stands for a fixed
//! primitive `N`-th root of unity. Elements at different conductors are
//! unified by lifting both into the field of conductor `lcm(N, M)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::integer::Integer;
use num::{One, Zero};

use super::rat::{QmodZ, Rat};
use super::CoeffError;

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
///
/// Computed by dividing `x^n - 1` by the product of all `Φ_d` with `d | n`,
/// `d < n`; results are memoized process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let poly = Arc::new(compute_cyclotomic(n));
    cache.lock().unwrap().insert(n, Arc::clone(&poly));
    poly
}

fn compute_cyclotomic(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)]; // x - 1
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); (n + 1) as usize];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = int_poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=(nd - dd)).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[i] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[i + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// Element of the `conductor`-th cyclotomic field in the power basis.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    /// Length `φ(conductor)`, constant term first.
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        Cyclotomic {
            conductor,
            coeffs: vec![Rat::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rat(conductor, Rat::one())
    }

    pub fn from_rat(conductor: u64, r: Rat) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[0] = r;
        c
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(1, Rat::from_int(n))
    }

    /// The power `t^k` of the fixed primitive root, reduced mod `Φ_N`.
    pub fn root_power(conductor: u64, k: i64) -> Self {
        let n = conductor as i64;
        let k = k.rem_euclid(n) as usize;
        let mut poly = vec![Rat::zero(); k + 1];
        poly[k] = Rat::one();
        Self::from_poly(conductor, poly)
    }

    /// Embeds `e^{2πi a/b}` into the field of the given conductor; the
    /// torsion order `b` must divide the conductor.
    pub fn from_qmodz(q: &QmodZ, conductor: u64) -> Result<Self, CoeffError> {
        let b = q.order();
        if b == 0 || conductor % b != 0 {
            return Err(CoeffError::ConductorMismatch {
                needed: b,
                have: conductor,
            });
        }
        let a = q.numer_u64();
        Ok(Self::root_power(conductor, (a * (conductor / b)) as i64))
    }

    /// Smallest conductor containing this root of unity.
    pub fn conductor_of(q: &QmodZ) -> u64 {
        q.order().max(1)
    }

    fn from_poly(conductor: u64, poly: Vec<Rat>) -> Self {
        let phi = euler_phi(conductor) as usize;
        let modulus = cyclotomic_polynomial(conductor);
        let reduced = poly_mod(poly, &modulus);
        let mut coeffs = vec![Rat::zero(); phi];
        for (i, c) in reduced.into_iter().enumerate() {
            coeffs[i] = c;
        }
        Cyclotomic { conductor, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rat::is_zero)
    }

    /// Returns the rational value if the element is rational.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Lifts into the field of conductor `m` (which `self.conductor` must
    /// divide) via `t_N = t_M^{M/N}`.
    pub fn lift(&self, m: u64) -> Self {
        if m == self.conductor {
            return self.clone();
        }
        assert!(m % self.conductor == 0, "can only lift into a multiple conductor");
        let stride = (m / self.conductor) as usize;
        let mut poly = vec![Rat::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * stride] = c.clone();
        }
        Self::from_poly(m, poly)
    }

    fn unify(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let m = a.conductor.lcm(&b.conductor);
            (a.lift(m), b.lift(m))
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Self::unify(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Self::unify(self, other);
        let mut prod = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let t = x * y;
                prod[i + j] += &t;
            }
        }
        Self::from_poly(a.conductor, prod)
    }

    pub fn scale(&self, r: &Rat) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `ℚ[t]`
    /// against the (irreducible) modulus `Φ_N`.
    pub fn inverse(&self) -> Result<Cyclotomic, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let modulus: Vec<Rat> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| Rat::from(num::rational::BigRational::from_integer(c.clone())))
            .collect();
        let a = trim(self.coeffs.clone());
        let (g, _, v) = poly_ext_gcd(&modulus, &a);
        // g is a nonzero constant since Φ_N is irreducible over ℚ
        debug_assert!(g.len() == 1 && !g[0].is_zero());
        let ginv = g[0].recip()?;
        let inv: Vec<Rat> = v.iter().map(|c| c * &ginv).collect();
        Ok(Self::from_poly(self.conductor, inv))
    }

    /// Numeric value at `t = e^{2πi/N}`, for shadow checks in tests.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64();
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::unify(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    write!(f, "{c}*")?;
                }
                write!(f, "z{}", self.conductor)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.len() > 1 && p.last().map_or(false, Rat::is_zero) {
        p.pop();
    }
    p
}

/// Reduces `poly` modulo the monic integer polynomial `modulus`.
fn poly_mod(poly: Vec<Rat>, modulus: &[BigInt]) -> Vec<Rat> {
    let d = modulus.len() - 1;
    let mut rem = poly;
    while rem.len() > d {
        let lead = rem.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = rem.len() - d;
        for j in 0..d {
            let m = Rat::from(num::rational::BigRational::from_integer(modulus[j].clone()));
            let t = &m * &lead;
            rem[shift + j] -= &t;
        }
    }
    trim(rem)
}

fn poly_is_zero(p: &[Rat]) -> bool {
    p.iter().all(Rat::is_zero)
}

fn poly_sub_scaled(a: &[Rat], b: &[Rat], c: &Rat, shift: usize) -> Vec<Rat> {
    let mut out = a.to_vec();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, Rat::zero());
    }
    for (j, bj) in b.iter().enumerate() {
        let t = bj * c;
        out[j + shift] -= &t;
    }
    trim(out)
}

/// Extended gcd over `ℚ[t]`: returns `(g, u, v)` with `u·a + v·b = g`.
fn poly_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut u0 = vec![Rat::one()];
    let mut u1 = vec![Rat::zero()];
    let mut v0 = vec![Rat::zero()];
    let mut v1 = vec![Rat::one()];
    while !poly_is_zero(&r1) {
        let (q, r) = poly_div_rem(&r0, &r1);
        let u2 = poly_sub(&u0, &poly_mul(&q, &u1));
        let v2 = poly_sub(&v0, &poly_mul(&q, &v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    (r0, u0, v0)
}

fn poly_div_rem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let b = trim(b.to_vec());
    assert!(!poly_is_zero(&b), "polynomial division by zero");
    let db = b.len() - 1;
    let lead = b.last().unwrap().clone();
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() || poly_is_zero(&rem) {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    while !poly_is_zero(&rem) && rem.len() >= b.len() {
        let shift = rem.len() - 1 - db;
        let c = rem.last().unwrap() / &lead;
        quot[shift] = c.clone();
        rem = poly_sub_scaled(&rem, &b, &c, shift);
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if poly_is_zero(a) || poly_is_zero(b) {
        return vec![Rat::zero()];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = x * y;
            out[i + j] += &t;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rat::zero());
    }
    for (j, y) in b.iter().enumerate() {
        out[j] -= y;
    }
    trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_coeffs(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), int_coeffs(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), int_coeffs(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(3), int_coeffs(&[1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), int_coeffs(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), int_coeffs(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), int_coeffs(&[1, 0, -1, 0, 1]));
        // degree is φ(n)
        for n in 1..=24 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64, euler_phi(n) + 1);
        }
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Cyclotomic::root_power(4, 1);
        let m1 = i.mul(&i);
        assert_eq!(m1, Cyclotomic::from_int(-1));
    }

    #[test]
    fn embedding_is_homomorphism_small_conductors() {
        // QmodZ -> Cyclotomic sends addition to multiplication, conductors <= 24
        for b1 in 1..=24u64 {
            for a1 in 0..b1 {
                // keep the loop size sane
                if b1 > 8 && a1 > 2 {
                    continue;
                }
                for (a2, b2) in [(1u64, 2u64), (1, 3), (2, 3), (1, 8), (5, 12)] {
                    let q1 = QmodZ::new(a1 as i64, b1 as i64);
                    let q2 = QmodZ::new(a2 as i64, b2 as i64);
                    let n = b1.lcm(&b2);
                    let e1 = Cyclotomic::from_qmodz(&q1, n).unwrap();
                    let e2 = Cyclotomic::from_qmodz(&q2, n).unwrap();
                    let esum = Cyclotomic::from_qmodz(&(&q1 + &q2), n).unwrap();
                    assert_eq!(e1.mul(&e2), esum, "a1/b1={a1}/{b1} a2/b2={a2}/{b2}");
                }
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let x = Cyclotomic::root_power(12, 5)
            .add(&Cyclotomic::from_int(3))
            .add(&Cyclotomic::root_power(12, 2).scale(&Rat::new(1, 2)));
        let inv = x.inverse().unwrap();
        assert!(x.mul(&inv).is_one());
        assert!(Cyclotomic::zero(4).inverse().is_err());
    }

    #[test]
    fn lift_preserves_value_numerically() {
        let x = Cyclotomic::root_power(3, 1).add(&Cyclotomic::from_int(2));
        let y = x.lift(12);
        let (re1, im1) = x.to_complex_f64();
        let (re2, im2) = y.to_complex_f64();
        assert!((re1 - re2).abs() < 1e-9 && (im1 - im2).abs() < 1e-9);
        assert_eq!(x, y);
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        let a = Cyclotomic::root_power(3, 1);
        let b = Cyclotomic::root_power(4, 1);
        let prod = a.mul(&b);
        assert_eq!(prod.conductor(), 12);
        // z3 * z4 = z12^7
        assert_eq!(prod, Cyclotomic::root_power(12, 7));
    }
}
