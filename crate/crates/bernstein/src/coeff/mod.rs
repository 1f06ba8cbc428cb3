//! Exact arithmetic kernel: rationals, rationals mod 1 (roots of unity as
//! exponents), cyclotomic field elements, Laurent polynomials in the formal
//! half-power parameter variables, and Laurent polynomials on the torus.
//!
//! Everything here is immutable after construction and structurally
//! normalized, so equality is decidable and values can be shared freely
//! across threads.

mod cyclotomic;
mod laurent;
mod rat;
mod scalar;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use laurent::{laurent_divide_geometric, LatticeVec, TorusLaurent};
pub use rat::{QmodZ, Rat};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("torsion order {needed} does not divide conductor {have}")]
    ConductorMismatch { needed: u64, have: u64 },

    #[error("malformed rational literal `{0}`")]
    MalformedRational(String),
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        // up to 3 terms in 2 parameters, small cyclotomic coefficients
        let term = (
            prop::collection::vec(-2i32..=2, 2),
            -3i64..=3,
            prop::sample::select(vec![1u64, 2, 3, 4]),
            0i64..=3,
        );
        prop::collection::vec(term, 0..3).prop_map(|terms| {
            let mut s = Scalar::zero(2);
            for (exp, c, cond, pow) in terms {
                let z = Cyclotomic::root_power(cond, pow).scale(&Rat::from_int(c));
                s = s.add(&Scalar::monomial(2, exp, z));
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn scalar_ring_axioms((a, b, c) in (arb_scalar(), arb_scalar(), arb_scalar())) {
            // associativity
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            // commutativity
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b), b.add(&a));
            // distributivity
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            // units
            prop_assert_eq!(a.mul(&Scalar::one(2)), a.clone());
            prop_assert_eq!(a.add(&Scalar::zero(2)), a.clone());
            prop_assert!(a.sub(&a).is_zero());
        }
    }
}
