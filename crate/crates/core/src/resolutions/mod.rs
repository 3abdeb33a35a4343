//! Finite free chain complexes and their homology, and the bar resolution
//! `C⁺_*(L_λ)` of the trivial module over the Borel subalgebra, with its
//! contracting homotopy and its induction to the full q-Schur algebra.

mod bar;
mod homology;
mod tensor;

use rayon::prelude::*;
use thiserror::Error;

use crate::combinatorics::Composition;
use crate::linalg::{LinalgError, Matrix};
use crate::ring::Ring;

pub use bar::{bar_complex, check_splitting, induce_to_schur, schur_functor_image, splitting_check, splitting_maps};
pub use homology::{homology, DegreeHomology, Homology, RankMethod, CHECK_PRIME};
pub use tensor::{Augmentation, LeftFactors, TensorComplex, TensorLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("d_{degree} is {got:?}, expected {expected:?}")]
    Shape { degree: i64, got: (usize, usize), expected: (usize, usize) },
    #[error("{0} is not in the pool")]
    NotInPool(Composition),
    #[error("{0} is not a partition")]
    NotAPartition(Composition),
    #[error("{0} has no weight in the current algebra")]
    UnknownWeight(Composition),
    #[error("the Schur functor needs n ≥ r (n = {n}, r = {r})")]
    NoSchurFunctor { n: usize, r: usize },
    #[error("the splitting map leaves the complex at degree {0}")]
    SplittingOutOfRange(i64),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A bounded complex of finitely generated free modules, degrees
/// `bottom..=top`, with `d_k : C_k → C_{k-1}`.
///
/// Differentials use the row convention: row `i` of `d_k` is the boundary
/// of the `i`-th basis element of `C_k`, so `d_k ∘ d_{k+1}` is the matrix
/// product `D_{k+1} · D_k`.
pub trait ChainComplex<E>: Sync {
    fn bottom(&self) -> i64;
    fn top(&self) -> i64;
    /// Rank of `C_k` (zero outside `bottom..=top`).
    fn dim(&self, k: i64) -> usize;
    /// Boundary of the `i`-th basis element of `C_k`, sorted by column.
    fn boundary(&self, k: i64, i: usize) -> Vec<(usize, E)>;

    fn differential<R: Ring<Elem = E>>(&self, ring: &R, k: i64) -> Matrix<E>
    where
        E: Clone + Send,
    {
        let rows: Vec<Vec<(usize, E)>> = (0..self.dim(k)).into_par_iter().map(|i| self.boundary(k, i)).collect();
        Matrix::from_sparse_rows(ring, self.dim(k - 1), rows)
    }

    fn dims(&self) -> Vec<usize> {
        (self.bottom()..=self.top()).map(|k| self.dim(k)).collect()
    }

    fn euler_characteristic(&self) -> i64 {
        (self.bottom()..=self.top()).map(|k| if k.rem_euclid(2) == 0 { 1 } else { -1 } * self.dim(k) as i64).sum()
    }
}

/// A complex stored as explicit labels and matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeChainComplex<E> {
    pub bottom: i64,
    /// `labels[i]` names the basis of `C_{bottom+i}`.
    pub labels: Vec<Vec<String>>,
    /// `diffs[i]` is `d_{bottom+i+1}`.
    pub diffs: Vec<Matrix<E>>,
}

impl<E: Clone + Send + Sync> FreeChainComplex<E> {
    pub fn new(bottom: i64, labels: Vec<Vec<String>>, diffs: Vec<Matrix<E>>) -> Result<Self, ComplexError> {
        let c = FreeChainComplex { bottom, labels, diffs };
        c.check_shapes()?;
        Ok(c)
    }

    /// Stores any complex explicitly.
    pub fn materialize<R, C>(ring: &R, c: &C, label: impl Fn(i64, usize) -> String) -> Self
    where
        R: Ring<Elem = E>,
        C: ChainComplex<E>,
    {
        let labels = (c.bottom()..=c.top()).map(|k| (0..c.dim(k)).map(|i| label(k, i)).collect()).collect();
        let diffs = (c.bottom() + 1..=c.top()).map(|k| c.differential(ring, k)).collect();
        FreeChainComplex { bottom: c.bottom(), labels, diffs }
    }

    pub fn check_shapes(&self) -> Result<(), ComplexError> {
        if self.diffs.len() + 1 != self.labels.len().max(1) {
            return Err(ComplexError::Shape {
                degree: self.bottom + self.diffs.len() as i64,
                got: (self.diffs.len(), 0),
                expected: (self.labels.len().saturating_sub(1), 0),
            });
        }
        for (i, d) in self.diffs.iter().enumerate() {
            let expected = (self.labels[i + 1].len(), self.labels[i].len());
            if (d.rows(), d.cols()) != expected {
                return Err(ComplexError::Shape { degree: self.bottom + i as i64 + 1, got: (d.rows(), d.cols()), expected });
            }
        }
        Ok(())
    }

    /// `d_k`, or `None` outside the stored range.
    pub fn d(&self, k: i64) -> Option<&Matrix<E>> {
        usize::try_from(k - self.bottom - 1).ok().and_then(|i| self.diffs.get(i))
    }

    pub fn d_mut(&mut self, k: i64) -> Option<&mut Matrix<E>> {
        usize::try_from(k - self.bottom - 1).ok().and_then(|i| self.diffs.get_mut(i))
    }

    /// The complex restricted to the given basis elements in each degree
    /// (meaningful when they span a subcomplex).
    pub fn restrict(&self, keep: impl Fn(i64, usize) -> bool) -> Self {
        let kept: Vec<Vec<usize>> = (0..self.labels.len())
            .map(|i| (0..self.labels[i].len()).filter(|&j| keep(self.bottom + i as i64, j)).collect())
            .collect();
        let labels = kept.iter().enumerate().map(|(i, ks)| ks.iter().map(|&j| self.labels[i][j].clone()).collect()).collect();
        let diffs = self.diffs.iter().enumerate().map(|(i, d)| d.submatrix(&kept[i + 1], &kept[i])).collect();
        FreeChainComplex { bottom: self.bottom, labels, diffs }
    }
}

impl<E: Clone + Send + Sync> ChainComplex<E> for FreeChainComplex<E> {
    fn bottom(&self) -> i64 {
        self.bottom
    }

    fn top(&self) -> i64 {
        self.bottom + self.labels.len() as i64 - 1
    }

    fn dim(&self, k: i64) -> usize {
        usize::try_from(k - self.bottom).ok().and_then(|i| self.labels.get(i)).map_or(0, Vec::len)
    }

    fn boundary(&self, k: i64, i: usize) -> Vec<(usize, E)> {
        self.d(k).map_or_else(Vec::new, |d| d.row(i).to_vec())
    }
}

/// True iff `d_k ∘ d_{k+1} = 0` in every degree. Each boundary of a
/// boundary is expanded and summed exactly; one differential is kept in
/// memory at a time.
pub fn validate<R: Ring, C: ChainComplex<R::Elem>>(ring: &R, c: &C) -> bool {
    let mut lower: Vec<Vec<(usize, R::Elem)>> = Vec::new();
    for k in c.bottom() + 1..=c.top() {
        let rows: Vec<Vec<(usize, R::Elem)>> = (0..c.dim(k)).into_par_iter().map(|i| c.boundary(k, i)).collect();
        let zero = rows.par_iter().all(|row| {
            let mut terms = Vec::new();
            for (j, a) in row {
                terms.extend(lower.get(*j).into_iter().flatten().map(|(l, b)| (*l, ring.mul(a, b))));
            }
            combine(ring, terms).is_empty()
        });
        if !zero {
            return false;
        }
        lower = rows;
    }
    true
}

/// `d_{k-1} ∘ d_k = 0`.
pub fn d_squared_vanishes<R: Ring, C: ChainComplex<R::Elem>>(ring: &R, c: &C, k: i64) -> bool {
    (0..c.dim(k)).into_par_iter().all(|i| {
        let mut terms = Vec::new();
        for (j, a) in c.boundary(k, i) {
            terms.extend(c.boundary(k - 1, j).into_iter().map(|(l, b)| (l, ring.mul(&a, &b))));
        }
        combine(ring, terms).is_empty()
    })
}

/// Sorts by column and adds up repeated columns, dropping zeros.
pub(crate) fn combine<R: Ring>(ring: &R, mut terms: Vec<(usize, R::Elem)>) -> Vec<(usize, R::Elem)> {
    terms.sort_by_key(|(j, _)| *j);
    let mut out: Vec<(usize, R::Elem)> = Vec::with_capacity(terms.len());
    for (j, v) in terms {
        match out.last_mut() {
            Some((l, acc)) if *l == j => ring.add_assign(acc, &v),
            _ => {
                if let Some((_, acc)) = out.last() {
                    if ring.is_zero(acc) {
                        out.pop();
                    }
                }
                out.push((j, v));
            }
        }
    }
    if out.last().is_some_and(|(_, acc)| ring.is_zero(acc)) {
        out.pop();
    }
    out
}

/// [`validate`] for a stored complex, with shape checking.
pub fn validate_stored<R: Ring>(ring: &R, c: &FreeChainComplex<R::Elem>) -> Result<bool, ComplexError>
where
    R::Elem: Send + Sync,
{
    c.check_shapes()?;
    Ok(validate(ring, c))
}

#[cfg(test)]
mod tests;
