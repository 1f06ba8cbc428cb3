//! Finite abelian groups in invariant-factor form, their elements, duals,
//! and presentations of subquotients.

use std::fmt;

use super::matrix::{lattice_quotient, IntMatrix};
use crate::coeff::QmodZ;

/// Finite abelian group `ℤ/d_1 × ... × ℤ/d_k` with `d_1 | d_2 | ... | d_k`,
/// every `d_i ≥ 2`. The trivial group is the empty product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    invariant_factors: Vec<u64>,
}

/// Group element as componentwise residues, `coords[i] ∈ ℤ/d_i`.
pub type FinAbElement = Vec<u64>;

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup {
            invariant_factors: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            FinAbGroup {
                invariant_factors: vec![n],
            }
        }
    }

    /// Builds the group from an invariant-factor chain. Panics if the chain
    /// is not divisible or contains factors < 2.
    pub fn from_invariant_factors(factors: Vec<u64>) -> Self {
        for w in factors.windows(2) {
            assert!(w[1] % w[0] == 0, "not a divisibility chain");
        }
        assert!(factors.iter().all(|&d| d >= 2), "factors must be >= 2");
        FinAbGroup {
            invariant_factors: factors,
        }
    }

    /// Builds the group `∏ ℤ/n_i` for arbitrary orders, normalizing to
    /// invariant-factor form via the Smith normal form.
    pub fn from_orders(orders: &[u64]) -> Self {
        let orders: Vec<u64> = orders.iter().copied().filter(|&n| n > 1).collect();
        if orders.is_empty() {
            return Self::trivial();
        }
        let n = orders.len();
        let mut rel = IntMatrix::zero(n, n);
        for (i, &d) in orders.iter().enumerate() {
            rel[(i, i)] = d.into();
        }
        let (factors, _) = lattice_quotient(&rel);
        assert!(factors.iter().all(|&d| d != 0));
        FinAbGroup {
            invariant_factors: factors,
        }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn num_generators(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn zero(&self) -> FinAbElement {
        vec![0; self.invariant_factors.len()]
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> FinAbElement {
        let mut g = self.zero();
        g[i] = 1;
        g
    }

    pub fn reduce(&self, coords: &[i64]) -> FinAbElement {
        assert_eq!(coords.len(), self.invariant_factors.len());
        coords
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
            .collect()
    }

    pub fn add(&self, a: &FinAbElement, b: &FinAbElement) -> FinAbElement {
        a.iter()
            .zip(b)
            .zip(&self.invariant_factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    }

    pub fn neg(&self, a: &FinAbElement) -> FinAbElement {
        a.iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect()
    }

    pub fn scale(&self, k: i64, a: &FinAbElement) -> FinAbElement {
        a.iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &d)| {
                let v = (x as i128 * k as i128).rem_euclid(d as i128);
                v as u64
            })
            .collect()
    }

    pub fn element_order(&self, a: &FinAbElement) -> u64 {
        let mut k = 1;
        let mut cur = a.clone();
        while cur.iter().any(|&c| c != 0) {
            cur = self.add(&cur, a);
            k += 1;
        }
        k
    }

    /// All elements, in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<FinAbElement> {
        let mut out = vec![self.zero()];
        for (i, &d) in self.invariant_factors.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for v in 0..d {
                    let mut e2 = e.clone();
                    e2[i] = v;
                    next.push(e2);
                }
            }
            out = next;
        }
        out
    }

    /// Index of an element in the [`elements`](Self::elements) order.
    pub fn index_of(&self, a: &FinAbElement) -> usize {
        let mut idx = 0usize;
        for (&c, &d) in a.iter().zip(&self.invariant_factors) {
            idx = idx * d as usize + c as usize;
        }
        idx
    }

    /// The dual group: abstractly isomorphic to the group itself, with the
    /// canonical coordinatewise pairing `⟨a, b⟩ = Σ a_i b_i / d_i ∈ ℚ/ℤ`.
    pub fn dual(&self) -> FinAbGroup {
        self.clone()
    }

    /// Canonical perfect pairing into `ℚ/ℤ`.
    pub fn pairing(&self, a: &FinAbElement, b: &FinAbElement) -> QmodZ {
        let mut acc = QmodZ::zero();
        for ((&x, &y), &d) in a.iter().zip(b).zip(&self.invariant_factors) {
            let num = ((x as i128 * y as i128) % d as i128) as i64;
            acc = &acc + &QmodZ::new(num, d as i64);
        }
        acc
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Invariant factors of the quotient `⟨sub_gens⟩ / ⟨mod_gens⟩` inside an
/// ambient finite abelian group. Relations are assembled as an integer
/// matrix and reduced with the Smith normal form.
pub fn abelian_quotient_factors(
    ambient: &FinAbGroup,
    sub_gens: &[FinAbElement],
    mod_gens: &[FinAbElement],
) -> Vec<u64> {
    if sub_gens.is_empty() {
        return Vec::new();
    }
    let k = sub_gens.len();
    let m = ambient.num_generators();
    // relation lattice R = { a in Z^k : Σ a_i g_i ∈ D·Z^m + ⟨mod_gens⟩ };
    // R is the projection onto the first k coordinates of the kernel of
    // [A | D | B] acting on column vectors.
    let l = mod_gens.len();
    let mut mat = IntMatrix::zero(m, k + m + l);
    for (j, g) in sub_gens.iter().enumerate() {
        for i in 0..m {
            mat[(i, j)] = g[i].into();
        }
    }
    for i in 0..m {
        mat[(i, k + i)] = ambient.invariant_factors[i].into();
    }
    for (j, g) in mod_gens.iter().enumerate() {
        for i in 0..m {
            mat[(i, k + m + j)] = g[i].into();
        }
    }
    let kernel = super::matrix::integer_kernel(&mat);
    // quotient Z^k / R, with the relation vectors a ∈ R as columns
    let mut rel = IntMatrix::zero(k, kernel.len());
    for (j, r) in kernel.iter().enumerate() {
        for i in 0..k {
            rel[(i, j)] = r[i].clone();
        }
    }
    let (factors, _) = lattice_quotient(&rel);
    assert!(
        factors.iter().all(|&d| d != 0),
        "quotient of a finite group must be finite"
    );
    factors
}
