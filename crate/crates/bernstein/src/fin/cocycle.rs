//! 2-cocycles on finite abelian groups and the structure of the twisted
//! group algebras they define.

use std::fmt;

use thiserror::Error;

use super::abelian::{FinAbElement, FinAbGroup};
use crate::coeff::QmodZ;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("cocycle identity fails on triple ({g:?}, {h:?}, {k:?})")]
    InvalidCocycle {
        g: FinAbElement,
        h: FinAbElement,
        k: FinAbElement,
    },

    #[error("cocycle not normalized at ({0:?}, {1:?})")]
    NotNormalized(FinAbElement, FinAbElement),

    #[error("table entry missing or group mismatch")]
    BadTable,
}

/// A normalized 2-cocycle `κ : G × G → ℚ/ℤ`, stored as a full table. The
/// cocycle identity `κ(g,h) + κ(gh,k) = κ(h,k) + κ(g,hk)` is validated at
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct TwoCocycle {
    group: FinAbGroup,
    /// Row-major table indexed by element index pairs.
    table: Vec<QmodZ>,
}

impl TwoCocycle {
    pub fn trivial(group: &FinAbGroup) -> Self {
        let n = group.order() as usize;
        TwoCocycle {
            group: group.clone(),
            table: vec![QmodZ::zero(); n * n],
        }
    }

    /// Builds a cocycle from a value function and validates it.
    pub fn from_fn<F>(group: &FinAbGroup, f: F) -> Result<Self, CocycleError>
    where
        F: Fn(&FinAbElement, &FinAbElement) -> QmodZ,
    {
        let els = group.elements();
        let n = els.len();
        let mut table = vec![QmodZ::zero(); n * n];
        for (i, g) in els.iter().enumerate() {
            for (j, h) in els.iter().enumerate() {
                table[i * n + j] = f(g, h);
            }
        }
        let c = TwoCocycle {
            group: group.clone(),
            table,
        };
        c.validate()?;
        Ok(c)
    }

    /// Builds the bilinear cocycle `κ(g,h) = Σ_{i<j} B_ij g_i h_j / gcd`-style
    /// from a matrix of `ℚ/ℤ` values: `κ(g,h) = Σ_{i,j} g_i h_j · B[i][j]`.
    pub fn from_bilinear(group: &FinAbGroup, b: &[Vec<QmodZ>]) -> Result<Self, CocycleError> {
        let k = group.num_generators();
        assert_eq!(b.len(), k);
        Self::from_fn(group, |g, h| {
            let mut acc = QmodZ::zero();
            for i in 0..k {
                for j in 0..k {
                    let scaled = b[i][j].scale((g[i] as i64) * (h[j] as i64));
                    acc = &acc + &scaled;
                }
            }
            acc
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn value(&self, g: &FinAbElement, h: &FinAbElement) -> &QmodZ {
        let n = self.group.order() as usize;
        &self.table[self.group.index_of(g) * n + self.group.index_of(h)]
    }

    /// Checks normalization and the cocycle identity on all triples.
    pub fn validate(&self) -> Result<(), CocycleError> {
        let els = self.group.elements();
        let e = self.group.zero();
        for g in &els {
            if !self.value(&e, g).is_zero() {
                return Err(CocycleError::NotNormalized(e, g.clone()));
            }
            if !self.value(g, &e).is_zero() {
                return Err(CocycleError::NotNormalized(g.clone(), e));
            }
        }
        for g in &els {
            for h in &els {
                let gh = self.group.add(g, h);
                for k in &els {
                    let hk = self.group.add(h, k);
                    let lhs = &(self.value(g, h) + self.value(&gh, k));
                    let rhs = &(self.value(h, k) + self.value(g, &hk));
                    if lhs != rhs {
                        return Err(CocycleError::InvalidCocycle {
                            g: g.clone(),
                            h: h.clone(),
                            k: k.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The commutator form `β(g,h) = κ(g,h) - κ(h,g)`, which is alternating
    /// and bilinear on an abelian group and depends only on the cohomology
    /// class of `κ`.
    pub fn commutator_form(&self, g: &FinAbElement, h: &FinAbElement) -> QmodZ {
        self.value(g, h) - self.value(h, g)
    }

    /// A cocycle on a finite abelian group is a coboundary exactly when its
    /// commutator form vanishes identically.
    pub fn is_coboundary(&self) -> bool {
        let els = self.group.elements();
        for g in &els {
            for h in &els {
                if !self.commutator_form(g, h).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for TwoCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoCocycle on {}", self.group)
    }
}

/// Structure data of the twisted group algebra `ℂ[G, κ]`: the radical `C` of
/// the commutator form (the κ-regular subgroup), the common irreducible
/// dimension `δ` with `|G| = |C|·δ²`, and the irreducible count `|C|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedGroupAlgebra {
    pub group: FinAbGroup,
    pub regular_subgroup: Vec<FinAbElement>,
    pub regular_order: u64,
    pub irrep_dimension: u64,
    pub irrep_count: u64,
}

/// Computes the structure of `ℂ[G, κ]`.
pub fn twisted_algebra_structure(kappa: &TwoCocycle) -> TwistedGroupAlgebra {
    let group = kappa.group().clone();
    let els = group.elements();
    let regular: Vec<FinAbElement> = els
        .iter()
        .filter(|g| els.iter().all(|h| kappa.commutator_form(g, h).is_zero()))
        .cloned()
        .collect();
    let c = regular.len() as u64;
    let n = group.order();
    assert!(n % c == 0, "radical order divides group order");
    let quot = n / c;
    let delta = (quot as f64).sqrt().round() as u64;
    assert_eq!(
        delta * delta,
        quot,
        "index of the regular subgroup must be a perfect square"
    );
    TwistedGroupAlgebra {
        group,
        regular_subgroup: regular,
        regular_order: c,
        irrep_dimension: delta,
        irrep_count: c,
    }
}

/// Random valid cocycle for tests: an alternating bilinear form plus the
/// coboundary of a random 1-cochain, which spans every cohomology class on
/// an abelian group.
pub fn random_cocycle<R: rand::Rng>(group: &FinAbGroup, rng: &mut R) -> TwoCocycle {
    let k = group.num_generators();
    let d = group.invariant_factors();
    // upper-triangular bilinear form with B[i][j] a multiple of 1/gcd(d_i,d_j)
    let mut b = vec![vec![QmodZ::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            if i >= j {
                continue;
            }
            let g = num::integer::gcd(d[i], d[j]) as i64;
            let a = rng.gen_range(0..g);
            b[i][j] = QmodZ::new(a, g);
        }
    }
    let bilinear = TwoCocycle::from_bilinear(group, &b).expect("bilinear cocycles are valid");
    // coboundary of a random 1-cochain f: κ'(g,h) = f(g) + f(h) - f(gh)
    let els = group.elements();
    let f_vals: Vec<QmodZ> = els
        .iter()
        .map(|g| {
            if g.iter().all(|&c| c == 0) {
                QmodZ::zero()
            } else {
                QmodZ::new(rng.gen_range(0..24), 24)
            }
        })
        .collect();
    let f_of = |g: &FinAbElement| f_vals[group.index_of(g)].clone();
    TwoCocycle::from_fn(group, |g, h| {
        let gh = group.add(g, h);
        let base = bilinear.value(g, h);
        &(&(base + &f_of(g)) + &f_of(h)) - &f_of(&gh)
    })
    .expect("coboundary-shifted cocycles are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn c2c2() -> FinAbGroup {
        FinAbGroup::from_invariant_factors(vec![2, 2])
    }

    #[test]
    fn trivial_cocycle_on_c2c2() {
        let g = c2c2();
        let k = TwoCocycle::trivial(&g);
        k.validate().unwrap();
        assert!(k.is_coboundary());
        let t = twisted_algebra_structure(&k);
        assert_eq!(t.regular_order, 4);
        assert_eq!(t.irrep_dimension, 1);
        assert_eq!(t.irrep_count, 4);
    }

    #[test]
    fn nontrivial_cocycle_on_c2c2_gives_m2() {
        // κ(g,h) = g_2 h_1 / 2: β(e1,e2) = -1/2 = 1/2, nondegenerate
        let g = c2c2();
        let k = TwoCocycle::from_fn(&g, |a, b| QmodZ::new((a[1] * b[0]) as i64, 2)).unwrap();
        assert_eq!(
            k.commutator_form(&g.generator(0), &g.generator(1)),
            QmodZ::new(1, 2)
        );
        assert!(!k.is_coboundary());
        let t = twisted_algebra_structure(&k);
        assert_eq!(t.regular_order, 1); // C = {0}
        assert_eq!(t.irrep_dimension, 2); // algebra ≅ M_2
        assert_eq!(t.irrep_count, 1);
    }

    #[test]
    fn cyclic_groups_have_trivial_classes() {
        let g = FinAbGroup::cyclic(10);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let k = random_cocycle(&g, &mut rng);
            assert!(k.is_coboundary());
            // alternating bilinear forms on cyclic groups vanish
            for a in g.elements() {
                for b in g.elements() {
                    assert!(k.commutator_form(&a, &b).is_zero());
                }
            }
        }
    }

    #[test]
    fn commutator_form_is_bilinear() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for factors in [vec![2u64, 2], vec![2, 4], vec![16], vec![3, 3]] {
            let g = FinAbGroup::from_invariant_factors(factors);
            let k = random_cocycle(&g, &mut rng);
            let els = g.elements();
            for a in &els {
                for b in &els {
                    for c in &els {
                        let lhs = k.commutator_form(&g.add(a, b), c);
                        let rhs = &k.commutator_form(a, c) + &k.commutator_form(b, c);
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_table_rejected() {
        let g = c2c2();
        // break the identity with a non-bilinear asymmetric table
        let res = TwoCocycle::from_fn(&g, |a, b| {
            if a == &vec![1, 0] && b == &vec![1, 1] {
                QmodZ::new(1, 3)
            } else {
                QmodZ::new((a[1] * b[0]) as i64, 2)
            }
        });
        assert!(matches!(res, Err(CocycleError::InvalidCocycle { .. })));
    }

    #[test]
    fn law_on_random_cocycles() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let groups = [
            vec![2u64, 2],
            vec![2, 4],
            vec![4, 4],
            vec![2, 2, 2],
            vec![3, 3],
            vec![12],
        ];
        for factors in &groups {
            let g = FinAbGroup::from_invariant_factors(factors.clone());
            for _ in 0..20 {
                let k = random_cocycle(&g, &mut rng);
                let t = twisted_algebra_structure(&k);
                assert_eq!(
                    t.regular_order * t.irrep_dimension * t.irrep_dimension,
                    g.order()
                );
                assert_eq!(k.is_coboundary(), t.irrep_dimension == 1);
            }
        }
    }
}
