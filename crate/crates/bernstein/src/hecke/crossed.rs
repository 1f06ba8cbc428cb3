//! Crossed products of the Hecke algebra by a finite group of
//! automorphisms: elements `Σ_g a_g ⋊ g` with multiplication
//! `(a ⋊ g)(b ⋊ h) = (a · α_g(b)) ⋊ gh`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use super::auto::HeckeAction;
use super::element::HeckeElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossedProductError {
    #[error("elements live over different group actions")]
    ActionMismatch,
}

/// An element of `H ⋊ Γ`, keyed by the index of the group element in its
/// [`HeckeAction`].
#[derive(Clone)]
pub struct CrossedProductElement {
    action: Arc<HeckeAction>,
    terms: BTreeMap<usize, HeckeElement>,
}

impl CrossedProductElement {
    pub fn zero(action: &Arc<HeckeAction>) -> Self {
        CrossedProductElement {
            action: Arc::clone(action),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(action: &Arc<HeckeAction>) -> Self {
        let datum = action.automorphism(0).datum();
        Self::monomial(
            action,
            HeckeElement::one(datum),
            action.identity_index(),
        )
    }

    /// The element `a ⋊ g`.
    pub fn monomial(action: &Arc<HeckeAction>, a: HeckeElement, g: usize) -> Self {
        assert!(g < action.order());
        let mut el = Self::zero(action);
        el.insert(g, a);
        el
    }

    /// The group element `1 ⋊ g`.
    pub fn group_element(action: &Arc<HeckeAction>, g: usize) -> Self {
        let datum = action.automorphism(0).datum();
        Self::monomial(action, HeckeElement::one(datum), g)
    }

    pub fn action(&self) -> &Arc<HeckeAction> {
        &self.action
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&usize, &HeckeElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: usize) -> Option<&HeckeElement> {
        self.terms.get(&g)
    }

    fn insert(&mut self, g: usize, a: HeckeElement) {
        if a.is_zero() {
            return;
        }
        match self.terms.remove(&g) {
            None => {
                self.terms.insert(g, a);
            }
            Some(old) => {
                let sum = old.add(&a);
                if !sum.is_zero() {
                    self.terms.insert(g, sum);
                }
            }
        }
    }

    fn same_action(&self, other: &Self) -> Result<(), CrossedProductError> {
        if Arc::ptr_eq(&self.action, &other.action) {
            return Ok(());
        }
        // structural fallback: identical element lists
        if self.action.order() == other.action.order()
            && self
                .action
                .elements()
                .iter()
                .zip(other.action.elements())
                .all(|(a, b)| a == b)
        {
            return Ok(());
        }
        Err(CrossedProductError::ActionMismatch)
    }

    pub fn add(&self, other: &Self) -> Result<Self, CrossedProductError> {
        self.same_action(other)?;
        let mut out = self.clone();
        for (&g, a) in &other.terms {
            out.insert(g, a.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        CrossedProductElement {
            action: Arc::clone(&self.action),
            terms: self.terms.iter().map(|(&g, a)| (g, a.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CrossedProductError> {
        self.add(&other.neg())
    }

    /// `(a ⋊ g)(b ⋊ h) = (a · α_g(b)) ⋊ gh`, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Result<Self, CrossedProductError> {
        self.same_action(other)?;
        let mut out = Self::zero(&self.action);
        for (&g, a) in &self.terms {
            let alpha_g = self.action.automorphism(g);
            for (&h, b) in &other.terms {
                let gh = self.action.mul_index(g, h);
                out.insert(gh, a.mul(&alpha_g.apply(b)));
            }
        }
        Ok(out)
    }

    /// Averaging projection applied coefficient-wise (the group fixes its
    /// own group algebra part).
    pub fn invariant_projection(&self) -> Self {
        CrossedProductElement {
            action: Arc::clone(&self.action),
            terms: self
                .terms
                .iter()
                .map(|(&g, a)| (g, self.action.invariant_projection(a)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }
}

impl PartialEq for CrossedProductElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_action(other).is_ok() && self.terms == other.terms
    }
}

impl Eq for CrossedProductElement {}

impl fmt::Display for CrossedProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&g, a) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({a}) x g{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CrossedProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::QmodZ;
    use crate::hecke::auto::HeckeAutomorphism;
    use crate::hecke::datum::RootDatumGL;

    fn z2_action() -> Arc<HeckeAction> {
        let d = Arc::new(RootDatumGL::single_block(2));
        let tr = HeckeAutomorphism::translation(&d, vec![QmodZ::new(1, 2), QmodZ::new(1, 2)])
            .unwrap();
        Arc::new(HeckeAction::generate(&d, &[tr], 8).unwrap())
    }

    #[test]
    fn group_elements_invert() {
        let act = z2_action();
        let g = (0..act.order())
            .find(|&i| i != act.identity_index())
            .unwrap();
        let ug = CrossedProductElement::group_element(&act, g);
        let ug_inv = CrossedProductElement::group_element(&act, act.inv_index(g));
        assert_eq!(ug.mul(&ug_inv).unwrap(), CrossedProductElement::one(&act));
    }

    #[test]
    fn defining_relation() {
        // (θ_x ⋊ e)(1 ⋊ g) = (1 ⋊ g)(α_{g^{-1}}(θ_x) ⋊ e)
        let act = z2_action();
        let d = act.automorphism(0).datum().clone();
        let g = (0..act.order())
            .find(|&i| i != act.identity_index())
            .unwrap();
        let th = HeckeElement::theta(&d, &[1, 0]);
        let lhs = CrossedProductElement::monomial(&act, th.clone(), act.identity_index())
            .mul(&CrossedProductElement::group_element(&act, g))
            .unwrap();
        let moved = act.automorphism(act.inv_index(g)).apply(&th);
        let rhs = CrossedProductElement::group_element(&act, g)
            .mul(&CrossedProductElement::monomial(
                &act,
                moved,
                act.identity_index(),
            ))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn associativity_on_random_triples() {
        use rand::{Rng, SeedableRng};
        let act = z2_action();
        let d = act.automorphism(0).datum().clone();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..15 {
            let mut rand_el = || {
                let mut e = CrossedProductElement::zero(&act);
                for _ in 0..2 {
                    let g = rng.gen_range(0..act.order());
                    let a = crate::hecke::sample_element(&d, &mut rng, 2, 2);
                    e = e.add(&CrossedProductElement::monomial(&act, a, g)).unwrap();
                }
                e
            };
            let (a, b, c) = (rand_el(), rand_el(), rand_el());
            let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
            let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn action_mismatch_detected() {
        let act1 = z2_action();
        let d = Arc::new(RootDatumGL::single_block(2));
        let tr = HeckeAutomorphism::translation(&d, vec![QmodZ::new(1, 3), QmodZ::new(1, 3)])
            .unwrap();
        let act2 = Arc::new(HeckeAction::generate(&d, &[tr], 8).unwrap());
        let a = CrossedProductElement::one(&act1);
        let b = CrossedProductElement::one(&act2);
        assert!(matches!(
            a.mul(&b),
            Err(CrossedProductError::ActionMismatch)
        ));
    }
}
