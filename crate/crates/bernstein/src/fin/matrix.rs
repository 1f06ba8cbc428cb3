//! Integer matrices, Smith normal form, and the lattice computations built
//! on it (integer kernels, saturation, finite quotient presentations).
//!
//! Entries are arbitrary-precision integers: the transform matrices of a
//! Smith normal form can grow far beyond machine words even for small inputs.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

/// Dense integer matrix with exact arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Row converted to `i64`; panics if an entry does not fit.
    pub fn row_i64(&self, i: usize) -> Vec<i64> {
        self.row(i)
            .iter()
            .map(|v| v.try_into().expect("entry exceeds i64"))
            .collect()
    }

    pub fn col_i64(&self, j: usize) -> Vec<i64> {
        self.col(j)
            .iter()
            .map(|v| v.try_into().expect("entry exceeds i64"))
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut m = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    m[(i, j)] += t;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    let t = m[(k, j)].clone();
                    m[(k, j)] = m[(p, j)].clone();
                    m[(p, j)] = t;
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num / &prev;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form decomposition `M = U · D · V` with `U`, `V` unimodular
/// and `D` diagonal with a divisibility chain. The inverses of `U` and `V`
/// are tracked alongside.
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Nonzero diagonal entries (the elementary divisors).
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|d| !d.is_zero())
            .collect()
    }
}

struct SnfState {
    d: IntMatrix,
    p: IntMatrix,
    p_inv: IntMatrix,
    q: IntMatrix,
    q_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.d.cols() {
            self.d.entries.swap(a * self.d.cols + j, b * self.d.cols + j);
        }
        for j in 0..self.p.cols() {
            self.p.entries.swap(a * self.p.cols + j, b * self.p.cols + j);
        }
        // inverse of a swap is the same swap, applied on the other side
        for i in 0..self.p_inv.rows() {
            self.p_inv.entries.swap(i * self.p_inv.cols + a, i * self.p_inv.cols + b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.d.rows() {
            self.d.entries.swap(i * self.d.cols + a, i * self.d.cols + b);
        }
        for i in 0..self.q.rows() {
            self.q.entries.swap(i * self.q.cols + a, i * self.q.cols + b);
        }
        for j in 0..self.q_inv.cols() {
            self.q_inv.entries.swap(a * self.q_inv.cols + j, b * self.q_inv.cols + j);
        }
    }

    /// row[a] -= k * row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &BigInt) {
        for j in 0..self.d.cols() {
            let t = k * &self.d[(b, j)];
            self.d[(a, j)] -= t;
        }
        for j in 0..self.p.cols() {
            let t = k * &self.p[(b, j)];
            self.p[(a, j)] -= t;
        }
        // E^{-1} applied on the right of p_inv: col[b] += k * col[a]
        for i in 0..self.p_inv.rows() {
            let t = k * &self.p_inv[(i, a)];
            self.p_inv[(i, b)] += t;
        }
    }

    /// col[a] -= k * col[b]
    fn add_col(&mut self, a: usize, b: usize, k: &BigInt) {
        for i in 0..self.d.rows() {
            let t = k * &self.d[(i, b)];
            self.d[(i, a)] -= t;
        }
        for i in 0..self.q.rows() {
            let t = k * &self.q[(i, b)];
            self.q[(i, a)] -= t;
        }
        for j in 0..self.q_inv.cols() {
            let t = k * &self.q_inv[(a, j)];
            self.q_inv[(b, j)] += t;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.d.cols() {
            let t = -self.d[(a, j)].clone();
            self.d[(a, j)] = t;
        }
        for j in 0..self.p.cols() {
            let t = -self.p[(a, j)].clone();
            self.p[(a, j)] = t;
        }
        for i in 0..self.p_inv.rows() {
            let t = -self.p_inv[(i, a)].clone();
            self.p_inv[(i, a)] = t;
        }
    }
}

/// Computes the Smith normal form of `m`.
pub fn snf(m: &IntMatrix) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut st = SnfState {
        d: m.clone(),
        p: IntMatrix::identity(rows),
        p_inv: IntMatrix::identity(rows),
        q: IntMatrix::identity(cols),
        q_inv: IntMatrix::identity(cols),
    };

    let n = rows.min(cols);
    let mut t = 0;
    'stages: while t < n {
        loop {
            // re-select the globally smallest |entry| of the submatrix as
            // the pivot on every sweep; this keeps coefficient growth tame
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !st.d[(i, j)].is_zero()
                        && pivot
                            .map_or(true, |(pi, pj)| st.d[(i, j)].abs() < st.d[(pi, pj)].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'stages; // remaining submatrix is zero
            };
            if pi != t {
                st.swap_rows(t, pi);
            }
            if pj != t {
                st.swap_cols(t, pj);
            }
            // one euclidean step against the first leftover in column t,
            // then in row t; loop back to re-select the pivot
            if let Some(i) = (t + 1..rows).find(|&i| !st.d[(i, t)].is_zero()) {
                let k = st.d[(i, t)].div_euclid(&st.d[(t, t)]);
                st.add_row(i, t, &k);
                continue;
            }
            if let Some(j) = (t + 1..cols).find(|&j| !st.d[(t, j)].is_zero()) {
                let k = st.d[(t, j)].div_euclid(&st.d[(t, t)]);
                st.add_col(j, t, &k);
                continue;
            }
            // cleared; the pivot must divide every remaining entry, else
            // fold the offending row into row t and keep reducing
            let piv = st.d[(t, t)].clone();
            let mut offending = None;
            'search: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&st.d[(i, j)] % &piv).is_zero() {
                        offending = Some(i);
                        break 'search;
                    }
                }
            }
            match offending {
                Some(i) => st.add_row(t, i, &BigInt::from(-1)), // row t += row i
                None => break,
            }
        }
        t += 1;
    }
    // normalize signs
    for i in 0..n {
        if st.d[(i, i)].is_negative() {
            st.negate_row(i);
        }
    }
    Snf {
        u: st.p_inv,
        d: st.d,
        v: st.q_inv,
        u_inv: st.p,
        v_inv: st.q,
    }
}

/// Basis of the integer kernel `{x : M·x = 0}`, as columns.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = snf(m);
    let diag = s.d.diagonal();
    let mut basis = Vec::new();
    for j in 0..m.cols() {
        let free = diag.get(j).map_or(true, BigInt::is_zero);
        if free {
            // M (V^{-1} e_j) = U D e_j = 0
            basis.push(s.v_inv.col(j));
        }
    }
    basis
}

/// Presentation of the finite part of `ℤ^n / image(M)` (columns of `M` are
/// the relations): returns the invariant factors (`0` marking a free factor)
/// with the projection matrix mapping `x ∈ ℤ^n` to coordinates in `⊕ ℤ/d_i`.
pub fn lattice_quotient(m: &IntMatrix) -> (Vec<u64>, IntMatrix) {
    let s = snf(m);
    let n = m.rows();
    let diag = s.d.diagonal();
    // ℤ^n / M ℤ^k ≅ ⊕_i ℤ/d_i ⊕ ℤ^{n - rank}; coordinates via U^{-1}.
    let mut factors = Vec::new();
    let mut rows = Vec::new();
    for i in 0..n {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_one() {
            continue; // trivial factor
        }
        factors.push(u64::try_from(&di).expect("divisor fits u64"));
        rows.push(s.u_inv.row(i));
    }
    (factors, IntMatrix::from_bigint_rows(rows))
}

/// Euclidean division helper for `BigInt` (num's `div_floor` semantics with
/// a non-negative remainder for positive divisors).
trait DivEuclidBig {
    fn div_euclid(&self, other: &BigInt) -> BigInt;
}

impl DivEuclidBig for BigInt {
    fn div_euclid(&self, other: &BigInt) -> BigInt {
        let (q, r) = self.div_rem(other);
        if r.is_negative() {
            if other.is_negative() {
                q + BigInt::one()
            } else {
                q - BigInt::one()
            }
        } else {
            q
        }
    }
}
