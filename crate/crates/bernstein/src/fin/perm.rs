//! Permutations of `{0, ..., r-1}` with cycle-notation parsing and display
//! (1-indexed in text form, as usual for permutation groups).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed cycle notation `{0}`")]
    Malformed(String),

    #[error("index {0} out of range 1..={1}")]
    OutOfRange(usize, usize),

    #[error("index {0} repeated in cycle notation")]
    Repeated(usize),
}

/// A permutation stored as the image list: `map[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    pub fn from_images(map: Vec<usize>) -> Self {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            assert!(v < n && !seen[v], "not a permutation");
            seen[v] = true;
        }
        Permutation { map }
    }

    /// Transposition of `i` and `j` (0-indexed).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut map: Vec<usize> = (0..n).collect();
        map.swap(i, j);
        Permutation { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: first apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    pub fn conjugate_by(&self, w: &Permutation) -> Permutation {
        // w ∘ self ∘ w^{-1}
        w.compose(self).compose(&w.inverse())
    }

    pub fn order(&self) -> u64 {
        let mut p = self.clone();
        let mut k = 1u64;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Left action on lattice vectors: `(w·x)_i = x_{w^{-1}(i)}`.
    pub fn act_on_vec<T: Clone>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.map.len());
        let mut out = vec![x[0].clone(); x.len()];
        for (i, &v) in self.map.iter().enumerate() {
            out[v] = x[i].clone();
        }
        out
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.map[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.map[cur];
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Parses cycle notation such as `"(1 3 5)(2 4 6)"`; single-digit cycles
    /// may omit separators, e.g. `"(135)(246)"`. `"e"`, `"()"` and the empty
    /// string denote the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Permutation, PermError> {
        let s = s.trim();
        let mut map: Vec<usize> = (0..n).collect();
        if s.is_empty() || s == "e" || s == "()" || s == "1" {
            return Ok(Permutation { map });
        }
        let mut touched = vec![false; n];
        let bad = || PermError::Malformed(s.to_string());
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(bad)?;
            if !rest[..open].trim().is_empty() {
                return Err(bad());
            }
            let close = rest.find(')').ok_or_else(bad)?;
            let inner = &rest[open + 1..close];
            let entries: Vec<usize> = if inner.contains(' ') || inner.contains(',') {
                inner
                    .split(|c| c == ' ' || c == ',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?
            } else {
                inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<_, _>>()?
            };
            for &v in &entries {
                if v == 0 || v > n {
                    return Err(PermError::OutOfRange(v, n));
                }
                if touched[v - 1] {
                    return Err(PermError::Repeated(v));
                }
                touched[v - 1] = true;
            }
            for i in 0..entries.len() {
                let from = entries[i] - 1;
                let to = entries[(i + 1) % entries.len()] - 1;
                map[from] = to;
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Permutation::from_images(map))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses cycle notation; the degree is the largest index mentioned.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().unwrap_or(0))
            .max()
            .unwrap_or(0);
        Permutation::parse_cycles(s, max)
    }
}

/// Enumerates all permutations of degree `n` in lexicographic order of their
/// image lists.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(items.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| items[i] < items[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| items[j] > items[i]).unwrap();
        items.swap(i, j);
        items[i + 1..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::parse_cycles("(1 2 3)", 4).unwrap();
        let b = Permutation::parse_cycles("(3 4)", 4).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(2), 3); // b: 3->4 (0-indexed 2->3), a: 3 fixed
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.order(), 3);
    }

    #[test]
    fn cycle_parse_display_roundtrip() {
        for s in ["(1 3 5)(2 4 6)", "(1 2)", "e"] {
            let p = Permutation::parse_cycles(s, 6).unwrap();
            assert_eq!(p.to_string(), s);
        }
        // digit shorthand
        let p = Permutation::parse_cycles("(135)(246)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 3 5)(2 4 6)");
        assert!(Permutation::parse_cycles("(1 7)", 6).is_err());
        assert!(Permutation::parse_cycles("(1 1)", 6).is_err());
    }

    #[test]
    fn lattice_action_is_left_action() {
        let a = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        let b = Permutation::parse_cycles("(2 3)", 3).unwrap();
        let x = vec![10, 20, 30];
        let lhs = a.compose(&b).act_on_vec(&x);
        let rhs = a.act_on_vec(&b.act_on_vec(&x));
        assert_eq!(lhs, rhs);
        // (w·x)_{w(i)} = x_i
        let w = a;
        let wx = w.act_on_vec(&x);
        for i in 0..3 {
            assert_eq!(wx[w.apply(i)], x[i]);
        }
    }

    #[test]
    fn all_permutations_count() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(1).len(), 1);
        assert_eq!(all_permutations(0).len(), 1);
    }
}
