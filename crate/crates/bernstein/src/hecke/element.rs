//! Elements of the affine Hecke algebra in the Bernstein basis `θ_x T_w`,
//! with exact multiplication.
//!
//! Products are normal-ordered to `Σ θ_x T_w` by moving each simple `T_s`
//! past Laurent monomials along reduced words, using the commutation rule
//! `T_s θ_y = θ_{s(y)} T_s - (q_s - 1)(θ_{s(y)} - θ_y)(1 - θ_{-α})^{-1}`,
//! whose correction term is an exact Laurent polynomial.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::datum::RootDatumGL;
use crate::coeff::{laurent_divide_geometric, Scalar, TorusLaurent};
use crate::fin::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("lattice vector {0:?} is not dominant")]
    NotDominant(Vec<i32>),

    #[error("elements belong to different root data")]
    DatumMismatch,
}

/// An element `Σ c_{x,w} θ_x T_w` of the affine Hecke algebra attached to a
/// [`RootDatumGL`]. Zero coefficients are never stored, so structural
/// equality decides algebra equality.
#[derive(Clone)]
pub struct HeckeElement {
    datum: Arc<RootDatumGL>,
    terms: BTreeMap<(Vec<i32>, Permutation), Scalar>,
}

impl HeckeElement {
    pub fn zero(datum: &Arc<RootDatumGL>) -> Self {
        HeckeElement {
            datum: Arc::clone(datum),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(datum: &Arc<RootDatumGL>) -> Self {
        Self::theta(datum, &vec![0; datum.rank()])
    }

    /// The Bernstein generator `θ_x`.
    pub fn theta(datum: &Arc<RootDatumGL>, x: &[i32]) -> Self {
        Self::term(
            datum,
            x.to_vec(),
            Permutation::identity(datum.rank()),
            Scalar::one(datum.num_params()),
        )
    }

    /// The finite Hecke generator `T_w` for a Weyl group element `w`.
    pub fn t_w(datum: &Arc<RootDatumGL>, w: &Permutation) -> Self {
        assert!(datum.is_weyl_element(w), "not a Weyl group element");
        Self::term(
            datum,
            vec![0; datum.rank()],
            w.clone(),
            Scalar::one(datum.num_params()),
        )
    }

    /// The Iwahori–Matsumoto element `[x] = q_s(x)^{1/2} θ_x` for dominant `x`.
    pub fn im_element(datum: &Arc<RootDatumGL>, x: &[i32]) -> Result<Self, HeckeError> {
        if !datum.is_dominant(x) {
            return Err(HeckeError::NotDominant(x.to_vec()));
        }
        let id = Permutation::identity(datum.rank());
        Ok(Self::term(datum, x.to_vec(), id.clone(), datum.q_sqrt(x, &id)))
    }

    pub fn term(datum: &Arc<RootDatumGL>, x: Vec<i32>, w: Permutation, c: Scalar) -> Self {
        assert_eq!(x.len(), datum.rank());
        assert_eq!(c.params(), datum.num_params());
        let mut el = Self::zero(datum);
        el.insert(x, w, c);
        el
    }

    pub fn scalar(datum: &Arc<RootDatumGL>, c: Scalar) -> Self {
        Self::term(
            datum,
            vec![0; datum.rank()],
            Permutation::identity(datum.rank()),
            c,
        )
    }

    pub fn datum(&self) -> &Arc<RootDatumGL> {
        &self.datum
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<i32>, Permutation), &Scalar)> {
        self.terms.iter()
    }

    fn insert(&mut self, x: Vec<i32>, w: Permutation, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (x, w);
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, c);
            }
            Some(old) => {
                let sum = old.add(&c);
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        assert_eq!(self.datum, other.datum, "datum mismatch");
        let mut out = self.clone();
        for ((x, w), c) in &other.terms {
            out.insert(x.clone(), w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> HeckeElement {
        HeckeElement {
            datum: Arc::clone(&self.datum),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> HeckeElement {
        let mut out = Self::zero(&self.datum);
        for ((x, w), d) in &self.terms {
            out.insert(x.clone(), w.clone(), d.mul(c));
        }
        out
    }

    /// Exact product, normal-ordered into the Bernstein basis.
    pub fn mul(&self, other: &HeckeElement) -> HeckeElement {
        assert_eq!(self.datum, other.datum, "datum mismatch");
        let mut out = Self::zero(&self.datum);
        for ((x, w), c) in &self.terms {
            // T_w · other, one simple letter at a time (right-to-left)
            let word = self.datum.reduced_word(w);
            let mut acc = other.clone();
            for &si in word.iter().rev() {
                acc = acc.left_mul_simple(si);
            }
            // θ_x c · acc
            for ((y, u), d) in &acc.terms {
                let z: Vec<i32> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                out.insert(z, u.clone(), c.mul(d));
            }
        }
        out
    }

    /// `T_s · self` for the `si`-th simple reflection.
    fn left_mul_simple(&self, si: usize) -> HeckeElement {
        let datum = &self.datum;
        let p = datum.num_params();
        let s = &datum.simple_reflections()[si];
        let (aj, ak) = datum.simple_root(si);
        let mut alpha = vec![0i32; datum.rank()];
        alpha[aj] = 1;
        alpha[ak] = -1;
        let qi = datum.simple_q_index(si);
        let q = Scalar::q_power(p, qi, 1);
        let q_minus_1 = q.sub(&Scalar::one(p));

        let mut out = Self::zero(datum);
        for ((y, u), c) in &self.terms {
            let sy = s.act_on_vec(y);
            // θ_{s(y)} · (T_s T_u)
            let su = s.compose(u);
            if datum.length(&su) > datum.length(u) {
                out.insert(sy.clone(), su, c.clone());
            } else {
                // T_s T_u = q T_{su} + (q - 1) T_u
                out.insert(sy.clone(), su, c.mul(&q));
                out.insert(sy.clone(), u.clone(), c.mul(&q_minus_1));
            }
            // correction: -(q-1) (θ_{s(y)} - θ_y)(1 - θ_{-α})^{-1} · T_u
            let numer = TorusLaurent::theta(datum.rank(), p, &sy)
                .sub(&TorusLaurent::theta(datum.rank(), p, y));
            let quot = laurent_divide_geometric(&numer, &alpha)
                .expect("θ_{s(y)} - θ_y is divisible by 1 - θ_{-α}");
            for (z, d) in quot.terms() {
                out.insert(z.clone(), u.clone(), c.mul(d).mul(&q_minus_1).neg());
            }
        }
        out
    }

    /// Whether the element lies in the span of the `θ_x` (no `T_w`, `w ≠ e`).
    pub fn is_theta_span(&self) -> bool {
        self.terms.keys().all(|(_, w)| w.is_identity())
    }

    /// The `θ`-part as a torus Laurent polynomial (coefficients of `T_e`).
    pub fn theta_coefficients(&self) -> TorusLaurent {
        let mut out = TorusLaurent::zero(self.datum.rank(), self.datum.num_params());
        for ((x, w), c) in &self.terms {
            if w.is_identity() {
                out.insert_term(x.clone(), c.clone());
            }
        }
        out
    }

    /// Central elements are exactly the Weyl-invariant elements of the
    /// `θ`-span: checks membership in the span and invariance of the
    /// exponent-to-coefficient map under every Weyl generator.
    pub fn is_central(&self) -> bool {
        if !self.is_theta_span() {
            return false;
        }
        let lau = self.theta_coefficients();
        self.datum.simple_reflections().iter().all(|s| {
            let moved = lau.map_exponents(|x| s.act_on_vec(x));
            moved == lau
        })
    }

    /// Independent centrality route: commutation with every algebra
    /// generator (`T_s` for all simple `s` and `θ_{±e_i}` for a lattice
    /// basis).
    pub fn commutes_with_generators(&self) -> bool {
        let datum = &self.datum;
        for s in datum.simple_reflections() {
            let ts = Self::t_w(datum, s);
            if self.mul(&ts) != ts.mul(self) {
                return false;
            }
        }
        for i in 0..datum.rank() {
            for sign in [1i32, -1] {
                let mut x = vec![0i32; datum.rank()];
                x[i] = sign;
                let th = Self::theta(datum, &x);
                if self.mul(&th) != th.mul(self) {
                    return false;
                }
            }
        }
        true
    }

    /// The orbit sum `Σ_{w ∈ W} θ_{w(x)}` (a central element).
    pub fn orbit_sum(datum: &Arc<RootDatumGL>, x: &[i32]) -> HeckeElement {
        let mut seen = std::collections::BTreeSet::new();
        for w in datum.weyl_elements() {
            seen.insert(w.act_on_vec(x));
        }
        let mut out = Self::zero(datum);
        for y in seen {
            out.insert(y, Permutation::identity(datum.rank()), Scalar::one(datum.num_params()));
        }
        out
    }
}

impl PartialEq for HeckeElement {
    fn eq(&self, other: &Self) -> bool {
        self.datum == other.datum && self.terms == other.terms
    }
}

impl Eq for HeckeElement {}

impl fmt::Display for HeckeElement {
    /// Canonical text form: `c * theta[x1,...,xr] * T[w]`, terms ordered
    /// lexicographically by `(x, w)`, `w` in cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((x, w), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let xs: Vec<String> = x.iter().map(|v| v.to_string()).collect();
            write!(f, "({c}) * theta[{}] * T[{w}]", xs.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Random element supported on lattice vectors with coordinates in
/// `[-window, window]`, for property tests and verification suites.
pub fn sample_element<R: rand::Rng>(
    datum: &Arc<RootDatumGL>,
    rng: &mut R,
    window: i32,
    max_terms: usize,
) -> HeckeElement {
    let weyl = datum.weyl_elements();
    let mut out = HeckeElement::zero(datum);
    let n_terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..n_terms {
        let x: Vec<i32> = (0..datum.rank())
            .map(|_| rng.gen_range(-window..=window))
            .collect();
        let w = weyl[rng.gen_range(0..weyl.len())].clone();
        let c = Scalar::from_int(datum.num_params(), rng.gen_range(-3i64..=3));
        out = out.add(&HeckeElement::term(datum, x, w, c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl2() -> Arc<RootDatumGL> {
        Arc::new(RootDatumGL::single_block(2))
    }

    #[test]
    fn theta_homomorphism_and_identity() {
        let d = gl2();
        let one = HeckeElement::one(&d);
        let a = HeckeElement::theta(&d, &[1, 0]);
        let b = HeckeElement::theta(&d, &[-1, 0]);
        assert_eq!(a.mul(&b), one);
        assert_eq!(HeckeElement::theta(&d, &[0, 0]), one);
        let c = HeckeElement::theta(&d, &[2, 1]);
        assert_eq!(a.mul(&c), HeckeElement::theta(&d, &[3, 1]));
    }

    #[test]
    fn quadratic_relation() {
        // T_s T_s = (q-1) T_s + q
        let d = gl2();
        let p = d.num_params();
        let s = Permutation::transposition(2, 0, 1);
        let ts = HeckeElement::t_w(&d, &s);
        let q = Scalar::q_power(p, 0, 1);
        let rhs = ts
            .scale(&q.sub(&Scalar::one(p)))
            .add(&HeckeElement::scalar(&d, q));
        assert_eq!(ts.mul(&ts), rhs);
    }

    #[test]
    fn bernstein_relation_gl2() {
        // θ_{(1,0)} T_s = T_s θ_{(0,1)} + (q-1) θ_{(1,0)}
        let d = gl2();
        let p = d.num_params();
        let s = Permutation::transposition(2, 0, 1);
        let ts = HeckeElement::t_w(&d, &s);
        let lhs = HeckeElement::theta(&d, &[1, 0]).mul(&ts);
        let rhs = ts.mul(&HeckeElement::theta(&d, &[0, 1])).add(
            &HeckeElement::theta(&d, &[1, 0])
                .scale(&Scalar::q_power(p, 0, 1).sub(&Scalar::one(p))),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn braid_relation_gl3() {
        let d = Arc::new(RootDatumGL::single_block(3));
        let s = HeckeElement::t_w(&d, &Permutation::transposition(3, 0, 1));
        let t = HeckeElement::t_w(&d, &Permutation::transposition(3, 1, 2));
        assert_eq!(
            s.mul(&t).mul(&s),
            t.mul(&s).mul(&t),
        );
    }

    #[test]
    fn distant_generators_commute() {
        let d = Arc::new(RootDatumGL::single_block(4));
        let s = HeckeElement::t_w(&d, &Permutation::transposition(4, 0, 1));
        let t = HeckeElement::t_w(&d, &Permutation::transposition(4, 2, 3));
        assert_eq!(s.mul(&t), t.mul(&s));
    }

    #[test]
    fn longest_element_against_theta() {
        // associativity smoke test on a length-3 word times θ
        let d = Arc::new(RootDatumGL::single_block(3));
        let w0 = Permutation::from_images(vec![2, 1, 0]);
        let tw = HeckeElement::t_w(&d, &w0);
        let th = HeckeElement::theta(&d, &[1, 0, -1]);
        let lhs = tw.mul(&th).mul(&tw);
        let rhs = tw.mul(&th.mul(&tw));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn im_element_values() {
        let d = gl2();
        // x = 0 → 1
        assert_eq!(
            HeckeElement::im_element(&d, &[0, 0]).unwrap(),
            HeckeElement::one(&d)
        );
        // central cocharacter (1,1): length 0, [x] = θ_x
        assert_eq!(
            HeckeElement::im_element(&d, &[1, 1]).unwrap(),
            HeckeElement::theta(&d, &[1, 1])
        );
        // (1,0): length 1, [x] = v θ_x
        let v = Scalar::v_power(1, 0, 1);
        assert_eq!(
            HeckeElement::im_element(&d, &[1, 0]).unwrap(),
            HeckeElement::theta(&d, &[1, 0]).scale(&v)
        );
        assert!(HeckeElement::im_element(&d, &[0, 1]).is_err());
    }

    #[test]
    fn im_elements_multiply_on_dominant_cone() {
        // lengths add for dominant cocharacters, so [x][y] = [x+y]
        let d = Arc::new(RootDatumGL::single_block(3));
        let xs = [[2, 1, 0], [1, 1, 0], [3, 0, 0], [1, 1, 1]];
        for x in &xs {
            for y in &xs {
                let xy: Vec<i32> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                let lhs = HeckeElement::im_element(&d, x)
                    .unwrap()
                    .mul(&HeckeElement::im_element(&d, y).unwrap());
                let rhs = HeckeElement::im_element(&d, &xy).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn centrality() {
        let d = gl2();
        assert!(HeckeElement::theta(&d, &[1, 1]).is_central());
        let sym = HeckeElement::theta(&d, &[1, 0]).add(&HeckeElement::theta(&d, &[0, 1]));
        assert!(sym.is_central());
        assert!(sym.commutes_with_generators());
        let asym = HeckeElement::theta(&d, &[1, 0]);
        assert!(!asym.is_central());
        assert!(!asym.commutes_with_generators());
        // commutator with T_s is (q-1)θ_{(1,0)} - hmm, check it is nonzero
        let s = Permutation::transposition(2, 0, 1);
        let ts = HeckeElement::t_w(&d, &s);
        assert_ne!(asym.mul(&ts), ts.mul(&asym));
    }

    #[test]
    fn basis_integrity_reexpansion() {
        // each term of a product re-expands to itself via θ-part times T-part
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let d = Arc::new(RootDatumGL::new(vec![
            super::super::datum::Block { size: 2, q_index: 0 },
            super::super::datum::Block { size: 2, q_index: 1 },
        ]));
        let a = sample_element(&d, &mut rng, 2, 4);
        let b = sample_element(&d, &mut rng, 2, 4);
        let prod = a.mul(&b);
        let mut rebuilt = HeckeElement::zero(&d);
        for ((x, w), c) in prod.terms() {
            let t = HeckeElement::theta(&d, x)
                .mul(&HeckeElement::t_w(&d, w))
                .scale(c);
            rebuilt = rebuilt.add(&t);
        }
        assert_eq!(rebuilt, prod);
    }

    #[test]
    fn display_canonical() {
        let d = gl2();
        let s = Permutation::transposition(2, 0, 1);
        let e = HeckeElement::t_w(&d, &s).add(&HeckeElement::theta(&d, &[1, 0]));
        assert_eq!(e.to_string(), "(1) * theta[0,0] * T[(1 2)] + (1) * theta[1,0] * T[e]");
    }
}
