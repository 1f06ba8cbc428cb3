//! Automorphisms of the Hecke algebra attached to pairs `(w, χ)`: a
//! permutation `w` normalizing the positive system (a block-unit
//! permutation between blocks of equal size and parameter) and a torsion
//! character `χ` of the lattice, constant on each block. The action is
//! `θ_x T_v ↦ χ^{-1}(x) · θ_{w(x)} T_{w v w^{-1}}`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::datum::RootDatumGL;
use super::element::HeckeElement;
use crate::coeff::{QmodZ, Scalar};
use crate::fin::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomorphismError {
    #[error("{0} maps a positive root to a negative root")]
    NotPositive(Permutation),

    #[error("{w} moves a block with parameter q{from} onto one with q{to}")]
    ParameterMismatch {
        w: Permutation,
        from: usize,
        to: usize,
    },

    #[error("character is not constant on block {0}")]
    NotBlockConstant(usize),

    #[error("composing supplied automorphisms leaves the set: {0} ∘ {1}")]
    NotAGroupAction(String, String),
}

/// The automorphism `θ_x T_v ↦ χ^{-1}(x) θ_{w(x)} T_{w v w^{-1}}`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeAutomorphism {
    datum: Arc<RootDatumGL>,
    w: Permutation,
    chi: Vec<QmodZ>,
}

impl HeckeAutomorphism {
    /// Validates that `w` normalizes the positive system, that blocks moved
    /// by `w` carry equal parameters, and that `χ` is constant per block.
    pub fn new(
        datum: &Arc<RootDatumGL>,
        w: Permutation,
        chi: Vec<QmodZ>,
    ) -> Result<Self, AutomorphismError> {
        assert_eq!(w.degree(), datum.rank());
        assert_eq!(chi.len(), datum.rank());
        for &(j, k) in datum.positive_roots() {
            let (wj, wk) = (w.apply(j), w.apply(k));
            if wj > wk || datum.block_of(wj) != datum.block_of(wk) {
                return Err(AutomorphismError::NotPositive(w));
            }
        }
        for c in 0..datum.rank() {
            let from = datum.blocks()[datum.block_of(c)].q_index;
            let to = datum.blocks()[datum.block_of(w.apply(c))].q_index;
            if from != to {
                return Err(AutomorphismError::ParameterMismatch { w, from, to });
            }
        }
        for (bi, _) in datum.blocks().iter().enumerate() {
            let (s, e) = datum.block_span(bi);
            if (s..e).any(|c| chi[c] != chi[s]) {
                return Err(AutomorphismError::NotBlockConstant(bi));
            }
        }
        Ok(HeckeAutomorphism {
            datum: Arc::clone(datum),
            w,
            chi,
        })
    }

    pub fn identity(datum: &Arc<RootDatumGL>) -> Self {
        HeckeAutomorphism {
            datum: Arc::clone(datum),
            w: Permutation::identity(datum.rank()),
            chi: vec![QmodZ::zero(); datum.rank()],
        }
    }

    /// Pure translation by a block-constant torsion character.
    pub fn translation(
        datum: &Arc<RootDatumGL>,
        chi: Vec<QmodZ>,
    ) -> Result<Self, AutomorphismError> {
        Self::new(datum, Permutation::identity(datum.rank()), chi)
    }

    pub fn datum(&self) -> &Arc<RootDatumGL> {
        &self.datum
    }

    pub fn permutation(&self) -> &Permutation {
        &self.w
    }

    pub fn chi(&self) -> &[QmodZ] {
        &self.chi
    }

    pub fn is_identity(&self) -> bool {
        self.w.is_identity() && self.chi.iter().all(QmodZ::is_zero)
    }

    /// `χ(x) = Σ x_i χ_i ∈ ℚ/ℤ`.
    pub fn chi_eval(&self, x: &[i32]) -> QmodZ {
        let mut acc = QmodZ::zero();
        for (&xi, ci) in x.iter().zip(&self.chi) {
            acc = &acc + &ci.scale(xi as i64);
        }
        acc
    }

    /// Applies the automorphism basis-wise.
    pub fn apply(&self, f: &HeckeElement) -> HeckeElement {
        assert_eq!(f.datum(), &self.datum, "datum mismatch");
        let p = self.datum.num_params();
        let mut out = HeckeElement::zero(&self.datum);
        for ((x, v), c) in f.terms() {
            let scalar = Scalar::root_of_unity(p, &-&self.chi_eval(x));
            let wx = self.w.act_on_vec(x);
            let wvw = v.conjugate_by(&self.w);
            out = out.add(&HeckeElement::term(
                &self.datum,
                wx,
                wvw,
                c.mul(&scalar),
            ));
        }
        out
    }

    /// Composition `self ∘ other` as maps; the result is again of the same
    /// shape, with `w = w_1 w_2` and `χ = χ_2 + w_2^{-1}·χ_1`.
    pub fn compose(&self, other: &HeckeAutomorphism) -> HeckeAutomorphism {
        assert_eq!(self.datum, other.datum);
        let w = self.w.compose(&other.w);
        let w2_inv = other.w.inverse();
        let chi: Vec<QmodZ> = (0..self.datum.rank())
            .map(|i| &other.chi[i] + &self.chi[w2_inv.apply(i)])
            .collect();
        HeckeAutomorphism {
            datum: Arc::clone(&self.datum),
            w,
            chi,
        }
    }

    pub fn inverse(&self) -> HeckeAutomorphism {
        // (w, χ)^{-1} = (w^{-1}, -w·χ)
        let w_inv = self.w.inverse();
        let chi: Vec<QmodZ> = (0..self.datum.rank())
            .map(|i| -&self.chi[w_inv.apply(i)])
            .collect();
        HeckeAutomorphism {
            datum: Arc::clone(&self.datum),
            w: w_inv,
            chi,
        }
    }

    /// Order as a group element.
    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            k += 1;
            assert!(k < 1_000_000, "automorphism has unreasonable order");
        }
        k
    }
}

impl fmt::Debug for HeckeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chis: Vec<String> = self.chi.iter().map(|c| c.to_string()).collect();
        write!(f, "(w={}, chi=[{}])", self.w, chis.join(","))
    }
}

/// A finite group of Hecke automorphisms closed under composition, with its
/// Cayley table. Built by closing a generating set; the closure is exact
/// because automorphisms here compose on the nose.
pub struct HeckeAction {
    elements: Vec<HeckeAutomorphism>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

impl HeckeAction {
    /// Generates the group from the given automorphisms. Errors only if the
    /// closure exceeds `limit` elements.
    pub fn generate(
        datum: &Arc<RootDatumGL>,
        generators: &[HeckeAutomorphism],
        limit: usize,
    ) -> Result<Self, AutomorphismError> {
        let mut elements = vec![HeckeAutomorphism::identity(datum)];
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for g in generators {
                let next = g.compose(&elements[i]);
                if !elements.contains(&next) {
                    elements.push(next);
                    frontier.push(elements.len() - 1);
                    if elements.len() > limit {
                        return Err(AutomorphismError::NotAGroupAction(
                            "closure".into(),
                            format!("exceeds {limit} elements"),
                        ));
                    }
                }
            }
        }
        Self::from_closed_set(elements)
    }

    /// Builds the Cayley table of an already-closed set; errors with
    /// `NotAGroupAction` if some composition leaves the set.
    pub fn from_closed_set(
        elements: Vec<HeckeAutomorphism>,
    ) -> Result<Self, AutomorphismError> {
        let n = elements.len();
        let identity = elements
            .iter()
            .position(HeckeAutomorphism::is_identity)
            .ok_or_else(|| {
                AutomorphismError::NotAGroupAction("set".into(), "missing identity".into())
            })?;
        let mut mul = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod = elements[i].compose(&elements[j]);
                let Some(k) = elements.iter().position(|e| *e == prod) else {
                    return Err(AutomorphismError::NotAGroupAction(
                        format!("{:?}", elements[i]),
                        format!("{:?}", elements[j]),
                    ));
                };
                mul[i][j] = k;
            }
        }
        let mut inv = vec![0usize; n];
        for i in 0..n {
            let Some(k) = (0..n).find(|&k| mul[i][k] == identity) else {
                return Err(AutomorphismError::NotAGroupAction(
                    format!("{:?}", elements[i]),
                    "has no inverse".into(),
                ));
            };
            inv[i] = k;
        }
        Ok(HeckeAction {
            elements,
            mul,
            inv,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[HeckeAutomorphism] {
        &self.elements
    }

    pub fn automorphism(&self, i: usize) -> &HeckeAutomorphism {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        self.mul[i][j]
    }

    pub fn inv_index(&self, i: usize) -> usize {
        self.inv[i]
    }

    /// The averaging projection `f ↦ |Γ|^{-1} Σ_γ α_γ(f)` onto the fixed
    /// subalgebra.
    pub fn invariant_projection(&self, f: &HeckeElement) -> HeckeElement {
        let p = f.datum().num_params();
        let mut acc = HeckeElement::zero(f.datum());
        for g in &self.elements {
            acc = acc.add(&g.apply(f));
        }
        let inv_order = Scalar::from_rat(
            p,
            crate::coeff::Rat::new(1, self.elements.len() as i64),
        );
        acc.scale(&inv_order)
    }
}
