//! The coefficient ring of the Hecke algebras: exact Laurent polynomials in
//! formal variables `v_1, ..., v_p` over a cyclotomic field, where `v_i`
//! stands for `q_i^{1/2}` and `v_i^2` plays the role of the parameter `q_i`.

use std::collections::BTreeMap;
use std::fmt;

use super::cyclotomic::Cyclotomic;
use super::rat::{QmodZ, Rat};

/// Laurent polynomial in the half-power parameter variables.
///
/// Terms map a multi-exponent in `ℤ^p` (one exponent per `v_i`) to a nonzero
/// cyclotomic coefficient; the zero element stores no terms.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    params: usize,
    terms: BTreeMap<Vec<i32>, Cyclotomic>,
}

impl Scalar {
    pub fn zero(params: usize) -> Self {
        Scalar {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: usize) -> Self {
        Self::from_cyclotomic(params, Cyclotomic::from_int(1))
    }

    pub fn from_int(params: usize, n: i64) -> Self {
        Self::from_cyclotomic(params, Cyclotomic::from_int(n))
    }

    pub fn from_rat(params: usize, r: Rat) -> Self {
        Self::from_cyclotomic(params, Cyclotomic::from_rat(1, r))
    }

    pub fn from_cyclotomic(params: usize, c: Cyclotomic) -> Self {
        let mut s = Self::zero(params);
        if !c.is_zero() {
            s.terms.insert(vec![0; params], c);
        }
        s
    }

    /// The root of unity `e^{2πi q}` as a constant.
    pub fn root_of_unity(params: usize, q: &QmodZ) -> Self {
        let n = Cyclotomic::conductor_of(q);
        Self::from_cyclotomic(params, Cyclotomic::from_qmodz(q, n).expect("conductor"))
    }

    /// The monomial `v_i^k`.
    pub fn v_power(params: usize, i: usize, k: i32) -> Self {
        assert!(i < params, "parameter index out of range");
        let mut exp = vec![0; params];
        exp[i] = k;
        Self::monomial(params, exp, Cyclotomic::from_int(1))
    }

    /// The parameter `q_i^k = v_i^{2k}`.
    pub fn q_power(params: usize, i: usize, k: i32) -> Self {
        Self::v_power(params, i, 2 * k)
    }

    /// Monomial `∏ v_i^{e_i}` scaled by the given per-parameter exponents.
    pub fn v_monomial(params: usize, exps: &[i32]) -> Self {
        assert_eq!(exps.len(), params);
        Self::monomial(params, exps.to_vec(), Cyclotomic::from_int(1))
    }

    pub fn monomial(params: usize, exp: Vec<i32>, c: Cyclotomic) -> Self {
        assert_eq!(exp.len(), params);
        let mut s = Self::zero(params);
        if !c.is_zero() {
            s.terms.insert(exp, c);
        }
        s
    }

    pub fn params(&self) -> usize {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.params])
                .map_or(false, Cyclotomic::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(&mut self, exp: Vec<i32>, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            None => {
                self.terms.insert(exp, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(exp, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        assert_eq!(self.params, other.params, "parameter count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            params: self.params,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        assert_eq!(self.params, other.params, "parameter count mismatch");
        let mut out = Scalar::zero(self.params);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(exp, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale_cyclotomic(&self, c: &Cyclotomic) -> Scalar {
        if c.is_zero() {
            return Scalar::zero(self.params);
        }
        let mut out = Scalar::zero(self.params);
        for (e, x) in &self.terms {
            out.insert_term(e.clone(), x.mul(c));
        }
        out
    }

    /// Inverse of a single-term scalar (monomials with invertible cyclotomic
    /// coefficient are the units used by the Hecke layer).
    pub fn monomial_inverse(&self) -> Option<Scalar> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let cinv = c.inverse().ok()?;
        Some(Scalar::monomial(
            self.params,
            e.iter().map(|k| -k).collect(),
            cinv,
        ))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_const_exp = e.iter().all(|&k| k == 0);
            let coeff = format!("{c}");
            let coeff_simple = c.as_rat().is_some();
            if is_const_exp {
                if coeff_simple {
                    write!(f, "{coeff}")?;
                } else {
                    write!(f, "({coeff})")?;
                }
                continue;
            }
            if !c.is_one() {
                if coeff_simple {
                    write!(f, "{coeff}*")?;
                } else {
                    write!(f, "({coeff})*")?;
                }
            }
            let mut firstv = true;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !firstv {
                    write!(f, "*")?;
                }
                firstv = false;
                write!(f, "v{}", i + 1)?;
                if k != 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_yields_q() {
        // (q_1 - 1) + 1 = q_1
        let p = 1;
        let q1 = Scalar::q_power(p, 0, 1);
        let lhs = q1.sub(&Scalar::one(p)).add(&Scalar::one(p));
        assert_eq!(lhs, q1);
    }

    #[test]
    fn v_squared_is_q() {
        let p = 2;
        let v1 = Scalar::v_power(p, 0, 1);
        assert_eq!(v1.mul(&v1), Scalar::q_power(p, 0, 1));
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        // (ζ_4 q_1)(ζ_4 q_1^{-1}) = ζ_4^2 = -1 via reduction mod Φ_4 = t^2 + 1
        let p = 1;
        let i = Scalar::root_of_unity(p, &QmodZ::new(1, 4));
        let a = i.mul(&Scalar::q_power(p, 0, 1));
        let b = i.mul(&Scalar::q_power(p, 0, -1));
        assert_eq!(a.mul(&b), Scalar::from_int(p, -1));
    }

    #[test]
    fn zero_is_empty() {
        let p = 1;
        let a = Scalar::v_power(p, 0, 3);
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.sub(&a).num_terms(), 0);
    }

    #[test]
    fn display_is_canonical() {
        let p = 2;
        let s = Scalar::v_power(p, 0, 2)
            .mul(&Scalar::v_power(p, 1, -1))
            .add(&Scalar::from_int(p, 3));
        assert_eq!(s.to_string(), "3 + v1^2*v2^-1");
    }

    #[test]
    fn monomial_inverse_roundtrip() {
        let p = 2;
        let m = Scalar::monomial(p, vec![2, -3], Cyclotomic::root_power(4, 1));
        let inv = m.monomial_inverse().unwrap();
        assert!(m.mul(&inv).is_one());
        let not_mono = m.add(&Scalar::one(p));
        assert!(not_mono.monomial_inverse().is_none());
    }
}
