use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use parking_lot::Mutex;

use super::CombinatoricsError;

/// A permutation of `{1..r}`.
///
/// Stored 0-based; `images[k] = w(k)`. Products compose right to left,
/// `(uv)(k) = u(v(k))`, which makes `(i·w)_k = i_{w(k)}` a right action on
/// multi-indices and turns `w ↦ w s_i` into swapping positions `i, i+1` of
/// the one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation { images: (0..r as u8).collect() }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self, CombinatoricsError> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &x in images {
            if x == 0 || x > r || seen[x - 1] {
                return Err(CombinatoricsError::NotAPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// From 0-based images; the caller guarantees bijectivity.
    pub(crate) fn from_images(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Permutation { images }
    }

    /// The Coxeter generator `s_i = (i, i+1)`, `1 ≤ i < r`.
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(i >= 1 && i < r, "s_{i} is not a generator of S_{r}");
        let mut w = Self::identity(r);
        w.images.swap(i - 1, i);
        w
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `w(k)` for a 0-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`.
    pub fn product(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutations of different degree");
        Permutation { images: other.images.iter().map(|&k| self.images[k as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x as usize] = k as u8;
        }
        Permutation { images: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// `w s_i` (1-based `i`).
    pub fn mul_simple(&self, i: usize) -> Permutation {
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        w
    }

    /// `s_i w` (1-based `i`).
    pub fn simple_mul(&self, i: usize) -> Permutation {
        let (a, b) = ((i - 1) as u8, i as u8);
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.degree()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.mul_simple(i);
        }
        word.reverse();
        word
    }

    pub fn from_word(r: usize, word: &[usize]) -> Permutation {
        word.iter().fold(Self::identity(r), |w, &i| w.mul_simple(i))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All of `S_r` in length-then-lexicographic order, with multiplication
/// tables for the Coxeter generators.
pub struct SymmetricGroup {
    pub r: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    lengths: Vec<u8>,
    /// `right[w][i-1]` is the index of `w s_i`.
    right: Vec<Vec<u32>>,
}

impl SymmetricGroup {
    pub fn new(r: usize) -> Self {
        let mut elements = vec![Permutation::identity(r)];
        // Breadth-first by length is automatically length-graded.
        let mut frontier = elements.clone();
        let mut seen: std::collections::HashSet<Permutation> = elements.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 1..r {
                    if !w.has_right_descent(i) {
                        let ws = w.mul_simple(i);
                        if seen.insert(ws.clone()) {
                            next.push(ws);
                        }
                    }
                }
            }
            next.sort();
            elements.extend(next.iter().cloned());
            frontier = next;
        }
        let index: HashMap<Permutation, u32> = elements.iter().enumerate().map(|(k, w)| (w.clone(), k as u32)).collect();
        let lengths = elements.iter().map(|w| w.length() as u8).collect();
        let right = elements
            .iter()
            .map(|w| (1..r).map(|i| index[&w.mul_simple(i)]).collect())
            .collect();
        SymmetricGroup { r, elements, index, lengths, right }
    }

    /// Shared instance for degree `r`.
    pub fn get(r: usize) -> Arc<SymmetricGroup> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<SymmetricGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().get(&r) {
            return g.clone();
        }
        let g = Arc::new(SymmetricGroup::new(r));
        cache.lock().entry(r).or_insert(g).clone()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &Permutation {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &Permutation) -> usize {
        self.index[w] as usize
    }

    pub fn length(&self, k: usize) -> usize {
        self.lengths[k] as usize
    }

    /// Index of `w s_i` for the element with index `k` (1-based `i`).
    pub fn mul_simple(&self, k: usize, i: usize) -> usize {
        self.right[k][i - 1] as usize
    }
}

/// All permutations of degree `r` in length-then-lexicographic order.
pub fn all_permutations(r: usize) -> Vec<Permutation> {
    SymmetricGroup::get(r).elements().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_lengths() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        assert!(s1.product(&s1).is_identity());
        assert_eq!(s1.product(&s2).length(), 2);
        assert_eq!(s1.product(&s2).product(&s1), s2.product(&s1).product(&s2));
        assert_eq!(Permutation::from_one_line(&[3, 2, 1]).unwrap().length(), 3);
        assert_eq!(Permutation::identity(4).length(), 0);
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
    }

    #[test]
    fn right_multiplication_swaps_positions() {
        let w = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(w.mul_simple(1), w.product(&Permutation::simple(3, 1)));
        assert_eq!(w.simple_mul(2), Permutation::simple(3, 2).product(&w));
    }

    #[test]
    fn reduced_words_reconstruct() {
        for w in all_permutations(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word), w);
        }
    }

    #[test]
    fn group_order_and_grading() {
        let g = SymmetricGroup::new(4);
        assert_eq!(g.order(), 24);
        assert!(g.element(0).is_identity());
        for k in 1..g.order() {
            assert!(g.length(k - 1) <= g.length(k));
        }
        for k in 0..g.order() {
            for i in 1..4 {
                let ws = g.mul_simple(k, i);
                assert_eq!(g.element(ws), &g.element(k).mul_simple(i));
            }
        }
    }
}
