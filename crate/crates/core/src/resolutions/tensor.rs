//! Complexes `X ⊗ ψ_{μ1}J_1ψ_{μ2} ⊗ ⋯ ⊗ ψ_{μk}J_1ψ_λ` over chains
//! `μ1 ▷ ⋯ ▷ μk ▷ λ`, with the alternating-sum differential that multiplies
//! neighbouring factors. The left factor `X` decides which complex this is:
//! the bar resolution over `S⁺` (`S⁺ψ_{μ1}`), its induction to `S`
//! (`Sψ_{μ1}`), the Schur functor image (`ψ_δSψ_{μ1}`), or the Boltje–Maisch
//! complex (`Hom_R(M^{μ1}, R)`).
//!
//! Each chain contributes a block whose basis is the product of the factor
//! bases, so labels are addressed by mixed-radix digits and never stored.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::combinatorics::{dominance_chains, Composition};
use crate::linalg::Matrix;
use crate::qschur::{SchurAlgebra, SchurLabel};
use crate::ring::Ring;

use super::{combine, ChainComplex, ComplexError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeftFactors {
    /// `S⁺ψ_μ`: all `ψ^d_νμ` of level ≥ 0.
    Borel,
    /// `Sψ_μ`: all `ψ^d_νμ`.
    Full,
    /// `ψ_ν S ψ_μ` for one fixed `ν` (a position in the algebra's weights).
    Weight(u16),
    /// `Hom_R(M^μ, R)` in the basis dual to `{x_μ T_d}`.
    Dual,
}

/// What sits in degree −1.
#[derive(Clone, Debug)]
pub enum Augmentation<E> {
    /// Nothing: the complex starts in degree 0.
    None,
    /// `L_λ = R`, on which `ψ_λ` acts as 1 and every other basis element as 0.
    Trivial,
    /// An explicit `d_0` (rows: `C_0`, columns: the basis of `C_{-1}`).
    Explicit(Matrix<E>),
}

/// A basis element: `chain = [μ1, …, μk, λ]` (weight positions), the left
/// factor (a packed [`SchurLabel`], or a position in `M^{μ1}` for duals)
/// and the homomorphisms `h_i = ψ^{d_i}_{μi μ(i+1)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorLabel {
    pub chain: Vec<u16>,
    pub left: u64,
    pub homs: Vec<SchurLabel>,
}

struct Block {
    chain: Vec<u16>,
    offset: usize,
    /// Sizes of the factor bases: left factor first.
    radices: Vec<usize>,
}

struct Degree {
    blocks: Vec<Block>,
    by_chain: HashMap<Vec<u16>, usize>,
    dim: usize,
}

pub struct TensorComplex<R: Ring> {
    pub alg: Arc<SchurAlgebra<R>>,
    pub lam: u16,
    pub pool: Vec<u16>,
    pub left: LeftFactors,
    aug: Augmentation<R::Elem>,
    aug_dim: usize,
    degrees: Vec<Degree>,
    /// Sorted left factor keys over each `μ1`.
    lefts: HashMap<u16, Vec<u64>>,
    /// Sorted `d` with `ψ^d_μν ∈ J_1`, for each consecutive pair.
    j1: HashMap<(u16, u16), Vec<u32>>,
}

impl<R: Ring> TensorComplex<R> {
    pub fn new(
        alg: Arc<SchurAlgebra<R>>,
        lam: &Composition,
        pool: &[Composition],
        left: LeftFactors,
        aug: Augmentation<R::Elem>,
        aug_dim: usize,
    ) -> Result<Self, ComplexError> {
        let idx = alg.index.clone();
        let lam_pos = idx.position(lam).ok_or_else(|| ComplexError::UnknownWeight(lam.clone()))?;
        if !pool.contains(lam) {
            return Err(ComplexError::NotInPool(lam.clone()));
        }
        let pool_pos = pool
            .iter()
            .map(|c| idx.position(c).ok_or_else(|| ComplexError::UnknownWeight(c.clone())))
            .collect::<Result<Vec<u16>, _>>()?;
        let mut tc = TensorComplex {
            alg,
            lam: lam_pos,
            pool: pool_pos,
            left,
            aug,
            aug_dim,
            degrees: Vec::new(),
            lefts: HashMap::new(),
            j1: HashMap::new(),
        };
        let mut k = 0;
        loop {
            let chains: Vec<Vec<u16>> = dominance_chains(pool, lam, k)
                .into_iter()
                .map(|c| c.iter().map(|m| idx.position(m).unwrap()).chain([lam_pos]).collect())
                .collect();
            let mut degree = Degree { blocks: Vec::new(), by_chain: HashMap::new(), dim: 0 };
            for chain in chains {
                let mut radices = vec![tc.left_keys(chain[0]).len()];
                for w in chain.windows(2) {
                    radices.push(tc.j1_reps(w[0], w[1]).len());
                }
                let size: usize = radices.iter().product();
                if size == 0 {
                    continue;
                }
                degree.by_chain.insert(chain.clone(), degree.blocks.len());
                degree.blocks.push(Block { chain, offset: degree.dim, radices });
                degree.dim += size;
            }
            if degree.dim == 0 && k > 0 {
                break;
            }
            tc.degrees.push(degree);
            k += 1;
        }
        Ok(tc)
    }

    fn left_keys(&mut self, mu: u16) -> &Vec<u64> {
        let idx = self.alg.index.clone();
        let left = self.left;
        self.lefts.entry(mu).or_insert_with(|| {
            let k = idx.compositions().len() as u16;
            let mut keys: Vec<u64> = match left {
                LeftFactors::Borel => (0..k).flat_map(|nu| idx.truncated(nu, mu, 0).collect::<Vec<_>>()).map(SchurLabel::pack).collect(),
                LeftFactors::Full => (0..k).flat_map(|nu| idx.labels(nu, mu).collect::<Vec<_>>()).map(SchurLabel::pack).collect(),
                LeftFactors::Weight(nu) => idx.labels(nu, mu).map(SchurLabel::pack).collect(),
                LeftFactors::Dual => (0..idx.module(mu).dim() as u64).collect(),
            };
            keys.sort_unstable();
            keys
        })
    }

    fn j1_reps(&mut self, a: u16, b: u16) -> &Vec<u32> {
        let idx = self.alg.index.clone();
        self.j1.entry((a, b)).or_insert_with(|| idx.truncated(a, b, 1).map(|l| l.d).collect())
    }

    pub fn ring(&self) -> &R {
        &self.alg.ring
    }

    pub fn augmentation(&self) -> &Augmentation<R::Elem> {
        &self.aug
    }

    /// Number of basis elements of degree `k ≥ 0` lying over `chain`.
    pub fn block_dim(&self, k: usize, chain: &[u16]) -> usize {
        self.degrees
            .get(k)
            .and_then(|d| d.by_chain.get(chain).map(|&b| d.blocks[b].radices.iter().product()))
            .unwrap_or(0)
    }

    /// The chains (as `[μ1, …, μk, λ]`) carrying basis elements in degree `k`.
    pub fn chains(&self, k: usize) -> Vec<Vec<u16>> {
        self.degrees.get(k).map_or_else(Vec::new, |d| d.blocks.iter().map(|b| b.chain.clone()).collect())
    }

    /// Left factor keys over `μ`.
    pub fn left_basis(&self, mu: u16) -> &[u64] {
        self.lefts.get(&mu).map_or(&[], Vec::as_slice)
    }

    fn decode(&self, k: usize, i: usize) -> (&Block, Vec<usize>) {
        let degree = &self.degrees[k];
        let b = degree.blocks.partition_point(|b| b.offset <= i) - 1;
        let block = &degree.blocks[b];
        let mut rest = i - block.offset;
        let mut digits = vec![0; block.radices.len()];
        for (d, &r) in digits.iter_mut().zip(&block.radices).rev() {
            *d = rest % r;
            rest /= r;
        }
        (block, digits)
    }

    fn encode(&self, k: usize, chain: &[u16], digits: &[usize]) -> Option<usize> {
        let degree = self.degrees.get(k)?;
        let block = &degree.blocks[*degree.by_chain.get(chain)?];
        let mut i = 0;
        for (&d, &r) in digits.iter().zip(&block.radices) {
            debug_assert!(d < r);
            i = i * r + d;
        }
        Some(block.offset + i)
    }

    fn hom(&self, a: u16, b: u16, digit: usize) -> SchurLabel {
        SchurLabel { lam: a, mu: b, d: self.j1[&(a, b)][digit] }
    }

    fn hom_digit(&self, l: SchurLabel) -> usize {
        self.j1[&(l.lam, l.mu)].binary_search(&l.d).expect("products of J_1 stay in J_1")
    }

    fn left_digit(&self, mu: u16, key: u64) -> Option<usize> {
        self.lefts.get(&mu)?.binary_search(&key).ok()
    }

    pub fn label(&self, k: i64, i: usize) -> TensorLabel {
        if k < 0 {
            return TensorLabel { chain: vec![self.lam], left: i as u64, homs: Vec::new() };
        }
        let (block, digits) = self.decode(k as usize, i);
        let chain = block.chain.clone();
        let left = self.lefts[&chain[0]][digits[0]];
        let homs = (1..chain.len()).map(|t| self.hom(chain[t - 1], chain[t], digits[t])).collect();
        TensorLabel { chain, left, homs }
    }

    /// Position of a label in its degree.
    pub fn index_of(&self, label: &TensorLabel) -> Option<usize> {
        let k = label.homs.len();
        let mut digits = vec![self.left_digit(label.chain[0], label.left)?];
        for h in &label.homs {
            digits.push(self.j1.get(&(h.lam, h.mu))?.binary_search(&h.d).ok()?);
        }
        self.encode(k, &label.chain, &digits)
    }

    pub fn describe(&self, k: i64, i: usize) -> String {
        let idx = &self.alg.index;
        if k < 0 {
            return format!("aug[{i}]");
        }
        let l = self.label(k, i);
        let mut s = match self.left {
            LeftFactors::Dual => format!("x*[{}|{}]", idx.composition(l.chain[0]), l.left),
            _ => format!("ψ[{}]", idx.label_key(SchurLabel::unpack(l.left))),
        };
        for h in &l.homs {
            let _ = write!(s, " ⊗ ψ[{}]", idx.label_key(*h));
        }
        s
    }

    /// The `t = 0` term: the left factor times `h_1`, as `(left digit over μ2, coefficient)`.
    fn left_times(&self, chain: &[u16], left_digit: usize, h1: SchurLabel) -> Vec<(usize, R::Elem)> {
        let key = self.lefts[&chain[0]][left_digit];
        match self.left {
            LeftFactors::Dual => {
                // (x*_j ∘ h)(x T_d') is the j-th coordinate of h(x T_d').
                self.alg.hom(h1).matrix.row(key as usize).iter().map(|(j, c)| (*j, c.clone())).collect()
            }
            _ => self
                .alg
                .compose(SchurLabel::unpack(key), h1)
                .iter()
                .map(|(l, c)| (self.left_digit(chain[1], l.pack()).expect("left factors are closed under J_1"), c.clone()))
                .collect(),
        }
    }
}

impl<R: Ring> ChainComplex<R::Elem> for TensorComplex<R> {
    fn bottom(&self) -> i64 {
        match self.aug {
            Augmentation::None => 0,
            _ => -1,
        }
    }

    fn top(&self) -> i64 {
        self.degrees.len() as i64 - 1
    }

    fn dim(&self, k: i64) -> usize {
        match k {
            -1 if self.bottom() == -1 => self.aug_dim,
            k if k >= 0 => self.degrees.get(k as usize).map_or(0, |d| d.dim),
            _ => 0,
        }
    }

    fn boundary(&self, k: i64, i: usize) -> Vec<(usize, R::Elem)> {
        let ring = &self.alg.ring;
        if k <= self.bottom() || k > self.top() {
            return Vec::new();
        }
        if k == 0 {
            return match &self.aug {
                Augmentation::None => Vec::new(),
                Augmentation::Trivial => {
                    let idem = self.alg.index.idempotent(self.lam).pack();
                    if self.lefts[&self.lam][i] == idem {
                        vec![(0, ring.one())]
                    } else {
                        Vec::new()
                    }
                }
                Augmentation::Explicit(m) => m.row(i).to_vec(),
            };
        }
        let k = k as usize;
        let (block, digits) = self.decode(k, i);
        let chain = &block.chain;
        let mut terms = Vec::new();
        // t = 0: act on the left factor.
        let h1 = self.hom(chain[0], chain[1], digits[1]);
        let rest_chain = &chain[1..];
        let mut new_digits = digits[1..].to_vec();
        for (d, c) in self.left_times(chain, digits[0], h1) {
            new_digits[0] = d;
            terms.push((self.encode(k - 1, rest_chain, &new_digits).expect("shorter chains are present"), c));
        }
        // 0 < t < k: compose h_t h_{t+1}, dropping μ(t+1) from the chain.
        for t in 1..k {
            let (a, b) = (self.hom(chain[t - 1], chain[t], digits[t]), self.hom(chain[t], chain[t + 1], digits[t + 1]));
            let product = self.alg.compose(a, b);
            if product.is_empty() {
                continue;
            }
            let mut sub_chain = chain.clone();
            sub_chain.remove(t);
            let mut sub_digits = digits.clone();
            sub_digits.remove(t + 1);
            for (l, c) in product.iter() {
                sub_digits[t] = self.hom_digit(*l);
                let c = if t % 2 == 1 { ring.neg(c) } else { c.clone() };
                terms.push((self.encode(k - 1, &sub_chain, &sub_digits).expect("shorter chains are present"), c));
            }
        }
        // t = k would let h_k act on L_λ, where J_1 acts by zero.
        combine(ring, terms)
    }
}
