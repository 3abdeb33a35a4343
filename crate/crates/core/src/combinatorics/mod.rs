//! Index combinatorics: compositions and dominance, permutations of `S_r`,
//! Young subgroups and their (double) coset representatives, tableaux,
//! multi-indices and weight matrices.

mod cosets;
mod permutation;
mod tableaux;

use std::fmt;

use thiserror::Error;

pub use cosets::{
    block_of, canonical_multi_index, double_coset_rep_from_matrix, double_coset_reps, is_distinguished,
    is_double_coset_rep, min_coset_reps, omega_level, row_semistandard_tableaux, tableau_to_double_coset_rep,
    double_coset_rep_to_tableau, weight_matrix, young_subgroup, MultiIndex, RowTableau, WeightMatrix,
};
pub use permutation::{all_permutations, Permutation, SymmetricGroup};
pub use tableaux::{hook_length_count, standard_tableaux_count, standard_tableaux_enumerated};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("compositions {0} and {1} have different size or length")]
    SizeMismatch(Composition, Composition),
    #[error("{0} is not a partition")]
    NotAPartition(Composition),
    #[error("{0:?} is not a permutation in one-line notation")]
    NotAPermutation(Vec<usize>),
    #[error("{d} is not a distinguished double coset representative for ({lam}, {mu})")]
    NotDistinguished { lam: Composition, mu: Composition, d: Permutation },
    #[error("cannot parse composition {0:?}")]
    Parse(String),
}

/// A composition of `r` into exactly `n` parts (trailing zeros kept).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    /// Parses `a,b,c`.
    pub fn parse(s: &str) -> Result<Self, CombinatoricsError> {
        s.split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map(Composition::new)
            .map_err(|_| CombinatoricsError::Parse(s.to_string()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `(1, ..., 1, 0, ..., 0)` with `r` ones and `n` parts.
    pub fn delta(n: usize, r: usize) -> Self {
        assert!(n >= r);
        Composition { parts: (0..n).map(|i| usize::from(i < r)).collect() }
    }

    /// `(r, 0, ..., 0)`.
    pub fn row(n: usize, r: usize) -> Self {
        Composition { parts: (0..n).map(|i| if i == 0 { r } else { 0 }).collect() }
    }

    /// Partial sums `a_0 = 0, a_1, ..., a_n`.
    pub fn boundaries(&self) -> Vec<usize> {
        let mut b = vec![0];
        for p in &self.parts {
            b.push(b.last().unwrap() + p);
        }
        b
    }

    pub fn conjugate(&self) -> Result<Composition, CombinatoricsError> {
        if !self.is_partition() {
            return Err(CombinatoricsError::NotAPartition(self.clone()));
        }
        let width = self.parts.first().copied().unwrap_or(0);
        Ok(Composition {
            parts: (1..=width).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect(),
        })
    }

    /// `Π λ_i!`.
    pub fn young_order(&self) -> usize {
        self.parts.iter().map(|&p| (1..=p).product::<usize>()).product()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All of `Λ(n, r)` in reverse-lexicographic order.
pub fn compositions(n: usize, r: usize) -> Vec<Composition> {
    fn rec(n: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(r);
            out.push(Composition::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=r).rev() {
            prefix.push(first);
            rec(n - 1, r - first, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "compositions need at least one part");
    let mut out = Vec::new();
    rec(n, r, &mut Vec::new(), &mut out);
    out
}

/// The partitions in `Λ(n, r)`, in the same order.
pub fn partitions(n: usize, r: usize) -> Vec<Composition> {
    compositions(n, r).into_iter().filter(Composition::is_partition).collect()
}

/// `λ ⊵ μ`: every partial sum of `λ` is at least that of `μ`.
pub fn dominates(lam: &Composition, mu: &Composition) -> Result<bool, CombinatoricsError> {
    if lam.len() != mu.len() || lam.total() != mu.total() {
        return Err(CombinatoricsError::SizeMismatch(lam.clone(), mu.clone()));
    }
    let (mut a, mut b) = (0, 0);
    for (x, y) in lam.parts.iter().zip(&mu.parts) {
        a += x;
        b += y;
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `λ ▷ μ`.
pub fn strictly_dominates(lam: &Composition, mu: &Composition) -> Result<bool, CombinatoricsError> {
    Ok(lam != mu && dominates(lam, mu)?)
}

/// `Σ_s s·(μ_s − λ_s)`; equals the level of every upper-triangular weight
/// matrix with row sums `λ` and column sums `μ`.
pub fn level_between(lam: &Composition, mu: &Composition) -> i64 {
    lam.parts
        .iter()
        .zip(&mu.parts)
        .enumerate()
        .map(|(s, (l, m))| s as i64 * (*m as i64 - *l as i64))
        .sum()
}

/// All chains `μ^(1) ▷ ⋯ ▷ μ^(k) ▷ λ` with every `μ^(i)` in `pool`,
/// ordered lexicographically by the positions of their members in `pool`.
pub fn dominance_chains(pool: &[Composition], lam: &Composition, k: usize) -> Vec<Vec<Composition>> {
    let above = |x: &Composition| -> Vec<usize> {
        (0..pool.len())
            .filter(|&i| strictly_dominates(&pool[i], x).unwrap_or(false))
            .collect()
    };
    // Build chains from the bottom up as index vectors, then sort.
    let mut chains: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for chain in &chains {
            let top = chain.first().map_or(lam, |&i| &pool[i]);
            for i in above(top) {
                let mut c = Vec::with_capacity(chain.len() + 1);
                c.push(i);
                c.extend_from_slice(chain);
                next.push(c);
            }
        }
        chains = next;
    }
    chains.sort();
    chains
        .into_iter()
        .map(|c| c.into_iter().map(|i| pool[i].clone()).collect())
        .collect()
}

/// Length of the longest chain `μ^(1) ▷ ⋯ ▷ μ^(k) ▷ λ` over `pool`.
pub fn longest_chain_above(pool: &[Composition], lam: &Composition) -> usize {
    let mut best = 0;
    for mu in pool {
        if strictly_dominates(mu, lam).unwrap_or(false) {
            best = best.max(1 + longest_chain_above(pool, mu));
        }
    }
    best
}

/// Length of the longest strict dominance chain in `Λ(n, r)`.
pub fn longest_chain(n: usize, r: usize) -> usize {
    let pool = compositions(n, r);
    pool.iter().map(|lam| longest_chain_above(&pool, lam)).max().unwrap_or(0)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
