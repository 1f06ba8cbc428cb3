//! Root data of type GL products: blocks of sizes `e_i`, each carrying one
//! of the formal parameters `q_i`, acting on the lattice `ℤ^r` with
//! `r = Σ e_i`. The Weyl group is `∏ S_{e_i}`, permuting coordinates within
//! blocks; positive roots are `e_j - e_k` for `j < k` inside a block.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::coeff::Scalar;
use crate::fin::Permutation;

/// One GL block: `size` consecutive lattice coordinates sharing the formal
/// parameter with index `q_index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub size: usize,
    pub q_index: usize,
}

/// Root datum for a product of GL factors with per-block parameters.
///
/// Holds a memo of reduced words, safe for concurrent readers.
pub struct RootDatumGL {
    blocks: Vec<Block>,
    rank: usize,
    params: usize,
    /// block index of each coordinate
    coord_block: Vec<usize>,
    /// (start, end) coordinate range of each block
    spans: Vec<(usize, usize)>,
    /// positive roots as coordinate pairs (j, k), j < k, same block
    positive_roots: Vec<(usize, usize)>,
    /// simple reflections: adjacent transpositions within blocks
    simples: Vec<Permutation>,
    reduced_words: RwLock<HashMap<Permutation, Vec<usize>>>,
}

impl RootDatumGL {
    pub fn new(blocks: Vec<Block>) -> Self {
        let rank: usize = blocks.iter().map(|b| b.size).sum();
        let params = blocks.iter().map(|b| b.q_index + 1).max().unwrap_or(0);
        let mut coord_block = Vec::with_capacity(rank);
        let mut spans = Vec::with_capacity(blocks.len());
        let mut start = 0;
        for (bi, b) in blocks.iter().enumerate() {
            spans.push((start, start + b.size));
            for _ in 0..b.size {
                coord_block.push(bi);
            }
            start += b.size;
        }
        let mut positive_roots = Vec::new();
        let mut simples = Vec::new();
        for &(s, e) in &spans {
            for j in s..e {
                for k in j + 1..e {
                    positive_roots.push((j, k));
                }
                if j + 1 < e {
                    simples.push(Permutation::transposition(rank, j, j + 1));
                }
            }
        }
        RootDatumGL {
            blocks,
            rank,
            params,
            coord_block,
            spans,
            positive_roots,
            simples,
            reduced_words: RwLock::new(HashMap::new()),
        }
    }

    /// A single GL_n block with one parameter.
    pub fn single_block(n: usize) -> Self {
        Self::new(vec![Block {
            size: n,
            q_index: 0,
        }])
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_params(&self) -> usize {
        self.params
    }

    pub fn block_of(&self, coord: usize) -> usize {
        self.coord_block[coord]
    }

    pub fn block_span(&self, block: usize) -> (usize, usize) {
        self.spans[block]
    }

    pub fn positive_roots(&self) -> &[(usize, usize)] {
        &self.positive_roots
    }

    /// The simple reflections, one per adjacent within-block pair.
    pub fn simple_reflections(&self) -> &[Permutation] {
        &self.simples
    }

    /// The root `e_j - e_k` of the `i`-th simple reflection, as `(j, j+1)`.
    pub fn simple_root(&self, i: usize) -> (usize, usize) {
        let s = &self.simples[i];
        let j = (0..self.rank).find(|&c| s.apply(c) != c).unwrap();
        (j, j + 1)
    }

    /// Parameter index of the block containing the `i`-th simple reflection.
    pub fn simple_q_index(&self, i: usize) -> usize {
        let (j, _) = self.simple_root(i);
        self.blocks[self.coord_block[j]].q_index
    }

    /// Order of the Weyl group `∏ e_i!`.
    pub fn weyl_order(&self) -> u64 {
        self.blocks
            .iter()
            .map(|b| (1..=b.size as u64).product::<u64>())
            .product()
    }

    /// Whether `w` lies in the Weyl group, i.e. fixes every block setwise.
    pub fn is_weyl_element(&self, w: &Permutation) -> bool {
        w.degree() == self.rank
            && (0..self.rank).all(|c| self.coord_block[w.apply(c)] == self.coord_block[c])
    }

    /// Coxeter length: the number of within-block inversions.
    pub fn length(&self, w: &Permutation) -> usize {
        self.positive_roots
            .iter()
            .filter(|&&(j, k)| w.apply(j) > w.apply(k))
            .count()
    }

    /// A reduced word for `w` as indices into `simple_reflections`, memoized.
    /// `w` must be a Weyl element.
    pub fn reduced_word(&self, w: &Permutation) -> Vec<usize> {
        assert!(self.is_weyl_element(w), "not a Weyl group element");
        if let Some(word) = self.reduced_words.read().unwrap().get(w) {
            return word.clone();
        }
        // bubble-sort the inverse image list; each adjacent swap that fixes
        // an inversion contributes one simple reflection, w = s_{i1}...s_{ik}
        let mut word = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            let mut progressed = false;
            for (si, s) in self.simples.iter().enumerate() {
                // if l(s·cur) < l(cur), peel s off on the left
                let peeled = s.compose(&cur);
                if self.length(&peeled) < self.length(&cur) {
                    word.push(si);
                    cur = peeled;
                    progressed = true;
                    break;
                }
            }
            assert!(progressed, "no descent found for a non-identity element");
        }
        debug_assert_eq!(word.len(), self.length(w));
        self.reduced_words
            .write()
            .unwrap()
            .insert(w.clone(), word.clone());
        word
    }

    /// All Weyl group elements (products over all blocks).
    pub fn weyl_elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.rank)];
        for &(s, e) in &self.spans {
            let size = e - s;
            let locals = crate::fin::all_permutations(size);
            let mut next = Vec::with_capacity(out.len() * locals.len());
            for w in &out {
                for loc in &locals {
                    let mut map: Vec<usize> = w.images().to_vec();
                    for c in s..e {
                        map[c] = s + loc.apply(c - s);
                    }
                    next.push(Permutation::from_images(map));
                }
            }
            out = next;
        }
        out
    }

    /// Length per parameter of `x ⋊ w` in the extended affine Weyl group:
    /// for each parameter, the count
    /// `Σ_{α>0, w^{-1}α>0} |⟨x,α^∨⟩| + Σ_{α>0, w^{-1}α<0} |⟨x,α^∨⟩ − 1|`
    /// over the positive roots in blocks carrying that parameter.
    pub fn im_length(&self, x: &[i32], w: &Permutation) -> Vec<u64> {
        assert_eq!(x.len(), self.rank);
        let winv = w.inverse();
        let mut lengths = vec![0u64; self.params];
        for &(j, k) in &self.positive_roots {
            let pairing = (x[j] - x[k]) as i64;
            let q = self.blocks[self.coord_block[j]].q_index;
            // w^{-1}(e_j - e_k) positive iff w^{-1}(j) < w^{-1}(k)
            if winv.apply(j) < winv.apply(k) {
                lengths[q] += pairing.unsigned_abs();
            } else {
                lengths[q] += (pairing - 1).unsigned_abs();
            }
        }
        lengths
    }

    /// `∏ v_i^{ℓ_i}`, the square root `q_s(x ⋊ w)^{1/2}` as a Scalar.
    pub fn q_sqrt(&self, x: &[i32], w: &Permutation) -> Scalar {
        let lengths = self.im_length(x, w);
        let exps: Vec<i32> = lengths.iter().map(|&l| l as i32).collect();
        Scalar::v_monomial(self.params, &exps)
    }

    /// Whether `x` is dominant: `⟨x, α^∨⟩ ≥ 0` for every positive root,
    /// i.e. coordinates are non-increasing within each block.
    pub fn is_dominant(&self, x: &[i32]) -> bool {
        self.positive_roots.iter().all(|&(j, k)| x[j] >= x[k])
    }
}

impl std::fmt::Debug for RootDatumGL {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("GL{}[q{}]", b.size, b.q_index))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl PartialEq for RootDatumGL {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks
    }
}

impl Eq for RootDatumGL {}
