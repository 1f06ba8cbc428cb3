//! Laurent polynomials on the torus: the span of the monomials `θ_x` for
//! lattice vectors `x ∈ ℤ^r`, with `θ_x θ_y = θ_{x+y}` and coefficients in
//! the parameter ring [`Scalar`].

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::Scalar;
use super::CoeffError;

pub type LatticeVec = Vec<i32>;

/// An element of `O(T)`: finitely many monomials `θ_x` with `Scalar`
/// coefficients. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TorusLaurent {
    rank: usize,
    params: usize,
    terms: BTreeMap<LatticeVec, Scalar>,
}

impl TorusLaurent {
    pub fn zero(rank: usize, params: usize) -> Self {
        TorusLaurent {
            rank,
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, params: usize) -> Self {
        Self::theta(rank, params, &vec![0; rank])
    }

    /// The monomial `θ_x`.
    pub fn theta(rank: usize, params: usize, x: &[i32]) -> Self {
        assert_eq!(x.len(), rank);
        let mut t = Self::zero(rank, params);
        t.terms.insert(x.to_vec(), Scalar::one(params));
        t
    }

    pub fn monomial(rank: usize, x: &[i32], c: Scalar) -> Self {
        assert_eq!(x.len(), rank);
        let mut t = Self::zero(rank, c.params());
        if !c.is_zero() {
            t.terms.insert(x.to_vec(), c);
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn params(&self) -> usize {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVec, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, x: &[i32]) -> Option<&Scalar> {
        self.terms.get(x)
    }

    pub fn insert_term(&mut self, x: LatticeVec, c: Scalar) {
        assert_eq!(x.len(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&x) {
            None => {
                self.terms.insert(x, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(x, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &TorusLaurent) -> TorusLaurent {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.insert_term(x.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> TorusLaurent {
        TorusLaurent {
            rank: self.rank,
            params: self.params,
            terms: self
                .terms
                .iter()
                .map(|(x, c)| (x.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &TorusLaurent) -> TorusLaurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TorusLaurent) -> TorusLaurent {
        assert_eq!(self.rank, other.rank);
        let mut out = Self::zero(self.rank, self.params.max(other.params));
        for (x, c) in &self.terms {
            for (y, d) in &other.terms {
                let z: LatticeVec = x.iter().zip(y).map(|(a, b)| a + b).collect();
                out.insert_term(z, c.mul(d));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> TorusLaurent {
        let mut out = Self::zero(self.rank, self.params);
        for (x, d) in &self.terms {
            out.insert_term(x.clone(), d.mul(c));
        }
        out
    }

    /// Applies a lattice map to every exponent (used for Weyl actions).
    pub fn map_exponents<F: Fn(&[i32]) -> LatticeVec>(&self, f: F) -> TorusLaurent {
        let mut out = Self::zero(self.rank, self.params);
        for (x, c) in &self.terms {
            out.insert_term(f(x), c.clone());
        }
        out
    }
}

/// Exact division by `1 - θ_{-α}`.
///
/// The intended inputs are differences `θ_x - θ_{s(x)}` with
/// `x - s(x) = n·α`, whose quotient is the geometric sum
/// `θ_x (1 + θ_{-α} + ... + θ_{-(n-1)α})` for `n ≥ 0`; any Laurent element
/// that is exactly divisible is accepted. Works per congruence class modulo
/// `ℤα`: on each class the problem is univariate in `T = θ_α`, and
/// `g(T) / (1 - T^{-1}) = g(T)·T / (T - 1)`, which is exact iff `g(1) = 0`.
pub fn laurent_divide_geometric(
    numer: &TorusLaurent,
    alpha: &[i32],
) -> Result<TorusLaurent, CoeffError> {
    assert_eq!(alpha.len(), numer.rank());
    if alpha.iter().all(|&a| a == 0) {
        return Err(CoeffError::NotDivisible(
            "division by 1 - θ_0 = 0".to_string(),
        ));
    }
    if numer.is_zero() {
        return Ok(TorusLaurent::zero(numer.rank(), numer.params()));
    }
    let pivot = alpha.iter().position(|&a| a != 0).unwrap();

    // Partition terms into congruence classes modulo ℤα. The class key is the
    // representative with pivot coordinate reduced into [0, |α_pivot|).
    let mut classes: BTreeMap<LatticeVec, BTreeMap<i64, Scalar>> = BTreeMap::new();
    for (x, c) in numer.terms() {
        let k = (x[pivot] as i64).div_euclid(alpha[pivot] as i64);
        let rep: LatticeVec = x
            .iter()
            .zip(alpha)
            .map(|(&xi, &ai)| xi - (k as i32) * ai)
            .collect();
        classes.entry(rep).or_default().insert(k, c.clone());
    }

    let mut out = TorusLaurent::zero(numer.rank(), numer.params());
    for (rep, coeffs) in classes {
        // g(T) = Σ c_k T^k. Want h with h·(1 - T^{-1}) = g, i.e.
        // h = g·T/(T-1). Shift to an ordinary polynomial and divide by T-1
        // with synthetic division; exact iff the coefficients sum to zero.
        let kmin = *coeffs.keys().min().unwrap();
        let kmax = *coeffs.keys().max().unwrap();
        let deg = (kmax - kmin) as usize + 1; // g·T has degree deg, lowest power kmin+1
        let params = numer.params();
        let mut poly = vec![Scalar::zero(params); deg + 1];
        for (&k, c) in &coeffs {
            poly[(k - kmin) as usize + 1] = c.clone();
        }
        // divide poly by (T - 1): synthetic division at root 1
        let mut quot = vec![Scalar::zero(params); deg];
        let mut carry = Scalar::zero(params);
        for i in (0..=deg).rev() {
            let cur = poly[i].add(&carry);
            if i == 0 {
                if !cur.is_zero() {
                    return Err(CoeffError::NotDivisible(format!(
                        "class θ[{}] leaves remainder {}",
                        fmt_vec(&rep),
                        cur
                    )));
                }
            } else {
                quot[i - 1] = cur.clone();
                carry = cur;
            }
        }
        // quot holds h shifted: h = Σ quot[j] T^{j + kmin + ... }; the lowest
        // power of g·T is kmin+1 and division by (T-1) keeps offsets, so
        // quot[j] is the coefficient of T^{j+kmin+1-1} = T^{j+kmin} in h.
        for (j, c) in quot.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = kmin + j as i64;
            let x: LatticeVec = rep
                .iter()
                .zip(alpha)
                .map(|(&ri, &ai)| ri + (k as i32) * ai)
                .collect();
            out.insert_term(x, c);
        }
    }
    Ok(out)
}

fn fmt_vec(v: &[i32]) -> String {
    v.iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for TorusLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (x, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "theta[{}]", fmt_vec(x))?;
            } else {
                write!(f, "({c}) * theta[{}]", fmt_vec(x))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TorusLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th(x: &[i32]) -> TorusLaurent {
        TorusLaurent::theta(x.len(), 1, x)
    }

    #[test]
    fn theta_is_lattice_homomorphism() {
        let a = th(&[1, 0]);
        let b = th(&[-1, 0]);
        assert_eq!(a.mul(&b), TorusLaurent::one(2, 1));
        assert_eq!(th(&[2, 1]).mul(&th(&[0, 3])), th(&[2, 4]));
    }

    #[test]
    fn divide_single_step() {
        // (θ_{(1,0)} - θ_{(0,1)}) / (1 - θ_{-α}), α = (1,-1) → θ_{(1,0)}
        let numer = th(&[1, 0]).sub(&th(&[0, 1]));
        let q = laurent_divide_geometric(&numer, &[1, -1]).unwrap();
        assert_eq!(q, th(&[1, 0]));
    }

    #[test]
    fn divide_zero() {
        let z = TorusLaurent::zero(2, 1);
        let q = laurent_divide_geometric(&z, &[1, -1]).unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn divide_two_step_geometric_sum() {
        // (θ_{(2,0)} - θ_{(0,2)}) / (1 - θ_{(-1,1)}) = θ_{(2,0)} + θ_{(1,1)},
        // checked by multiplying back.
        let numer = th(&[2, 0]).sub(&th(&[0, 2]));
        let alpha = [1, -1];
        let q = laurent_divide_geometric(&numer, &alpha).unwrap();
        assert_eq!(q, th(&[2, 0]).add(&th(&[1, 1])));
        let back = q.mul(&TorusLaurent::one(2, 1).sub(&th(&[-1, 1])));
        assert_eq!(back, numer);
    }

    #[test]
    fn divide_negative_multiple() {
        // x - s(x) = -2α case: θ_{(0,2)} - θ_{(2,0)} with α = (1,-1)
        let numer = th(&[0, 2]).sub(&th(&[2, 0]));
        let q = laurent_divide_geometric(&numer, &[1, -1]).unwrap();
        let back = q.mul(&TorusLaurent::one(2, 1).sub(&th(&[-1, 1])));
        assert_eq!(back, numer);
        // sign-reflected form: -θ_{(0,2)}(θ_{... }) = -(θ_{(1,1)} + θ_{(2,0)})
        assert_eq!(q, th(&[1, 1]).add(&th(&[2, 0])).neg());
    }

    #[test]
    fn not_divisible_reports_error() {
        let numer = th(&[1, 0]);
        let err = laurent_divide_geometric(&numer, &[1, -1]);
        assert!(err.is_err());
        assert!(laurent_divide_geometric(&numer, &[0, 0]).is_err());
    }

    #[test]
    fn divide_roundtrip_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let rank = 3;
            let mut f = TorusLaurent::zero(rank, 1);
            let n_terms = rng.gen_range(1..=8);
            for _ in 0..n_terms {
                let x: Vec<i32> = (0..rank).map(|_| rng.gen_range(-4..=4)).collect();
                let c = rng.gen_range(-3i64..=3);
                f.insert_term(x, Scalar::from_int(1, c));
            }
            let alpha = [1, -1, 0];
            let denom = TorusLaurent::one(rank, 1).sub(&TorusLaurent::theta(
                rank,
                1,
                &[-1, 1, 0],
            ));
            let numer = f.mul(&denom);
            let q = laurent_divide_geometric(&numer, &alpha).unwrap();
            assert_eq!(q, f);
        }
    }
}
