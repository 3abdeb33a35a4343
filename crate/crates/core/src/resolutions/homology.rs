use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::linalg::sparse::{eliminate, sparse_rank};
use crate::linalg::{smith_normal_form, Matrix};
use crate::ring::{Integers, PrimeField, Ring, RingKind};

use super::ChainComplex;

/// Prime used for modular rank bounds over the rationals.
pub const CHECK_PRIME: u64 = 2_147_483_647;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMethod {
    /// Elimination over the coefficient field itself.
    Field,
    /// Ranks mod [`CHECK_PRIME`] certified by `rank d_k + rank d_{k+1} = dim C_k`
    /// (modular ranks never exceed rational ones), exact elimination
    /// wherever that fails.
    Modular,
    /// Unit-pivot elimination and Smith normal form over the integers.
    Smith,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: i64,
    pub dim: usize,
    /// Rank of `d_k` (out of this degree).
    pub rank_out: usize,
    /// Rank of `d_{k+1}` (into this degree).
    pub rank_in: usize,
    pub betti: usize,
    /// Invariant factors of `d_{k+1}` other than 1 (integers only).
    pub torsion: Vec<BigInt>,
    /// All nonzero invariant factors of `d_{k+1}` (integers only).
    pub factors_in: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub method: RankMethod,
    pub degrees: Vec<DegreeHomology>,
}

impl Homology {
    pub fn bettis(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    pub fn is_exact(&self) -> bool {
        self.degrees.iter().all(|d| d.betti == 0 && d.torsion.is_empty())
    }
}

/// Homology in every degree `bottom..=top`, counting the ends (the maps
/// out of `bottom` and into `top` are zero). Assumes `d² = 0`; see
/// [`super::validate`].
///
/// Differentials are reduced from the top down. Rows of the eliminated
/// `d_{k+1}` that took a unit pivot span a direct summand of `C_k` inside
/// `ker d_k`, so the rows of `d_k` at their pivot columns can be dropped
/// without changing its image. In an exact complex this leaves `d_k` with
/// exactly `rank d_k` rows, none of which has to be reduced to zero.
pub fn homology<R: Ring, C: ChainComplex<R::Elem>>(ring: &R, c: &C) -> Homology {
    match ring.spec().kind {
        RingKind::PrimeField(p) => {
            let ranks = modular_ranks(ring, c, p).expect("own characteristic");
            assemble(c, RankMethod::Field, ranks, None)
        }
        RingKind::Rationals => {
            let degrees: Vec<i64> = (c.bottom()..=c.top()).collect();
            let mut ranks = modular_ranks(ring, c, CHECK_PRIME).unwrap_or_else(|| vec![usize::MAX; degrees.len()]);
            let mut exact = vec![false; degrees.len()];
            for (i, &k) in degrees.iter().enumerate() {
                let next = ranks.get(i + 1).copied().unwrap_or(0);
                let certified = ranks[i].checked_add(next) == Some(c.dim(k));
                if !certified {
                    for j in [i, i + 1] {
                        if j < degrees.len() && !exact[j] {
                            ranks[j] = field_rank(ring, c, degrees[j]);
                            exact[j] = true;
                        }
                    }
                }
            }
            assemble(c, RankMethod::Modular, ranks, None)
        }
        RingKind::Integers => {
            let factors = integral_factors(ring, c);
            let ranks = factors.iter().map(Vec::len).collect();
            assemble(c, RankMethod::Smith, ranks, Some(factors))
        }
    }
}

/// Rows of `d_k` outside the pivot columns of `d_{k+1}`.
fn kept_rows<E, C: ChainComplex<E>>(c: &C, k: i64, dropped: &[bool]) -> Vec<usize> {
    (0..c.dim(k)).filter(|&i| !dropped.get(i).copied().unwrap_or(false)).collect()
}

fn drop_mask(len: usize, pivot_cols: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; len];
    for &j in pivot_cols {
        mask[j] = true;
    }
    mask
}

/// Ranks of `d_bottom, …, d_top` mod `p`, or `None` if an entry has no
/// reduction.
fn modular_ranks<R: Ring, C: ChainComplex<R::Elem>>(ring: &R, c: &C, p: u64) -> Option<Vec<usize>> {
    let fp = PrimeField::new(p, 1);
    let mut ranks = vec![0; (c.top() - c.bottom() + 1) as usize];
    let mut dropped = Vec::new();
    for k in (c.bottom() + 1..=c.top()).rev() {
        let rows: Option<Vec<Vec<(usize, u64)>>> = kept_rows(c, k, &dropped)
            .into_par_iter()
            .map(|i| {
                let mut row = Vec::new();
                for (j, v) in c.boundary(k, i) {
                    let v = ring.reduce_mod(&v, p)?;
                    if v != 0 {
                        row.push((j, v));
                    }
                }
                Some(row)
            })
            .collect();
        let elim = eliminate(&fp, c.dim(k - 1), rows?, |v| *v != 0);
        ranks[(k - c.bottom()) as usize] = elim.pivots;
        dropped = drop_mask(c.dim(k - 1), &elim.pivot_cols);
    }
    Some(ranks)
}

/// Rank of `d_k` by exact elimination of all its rows.
fn field_rank<R: Ring, C: ChainComplex<R::Elem>>(ring: &R, c: &C, k: i64) -> usize {
    if k <= c.bottom() {
        return 0;
    }
    let rows = (0..c.dim(k)).into_par_iter().map(|i| c.boundary(k, i)).collect();
    sparse_rank(ring, c.dim(k - 1), rows)
}

/// Nonzero invariant factors of each `d_k` over the integers.
fn integral_factors<R: Ring, C: ChainComplex<R::Elem>>(ring: &R, c: &C) -> Vec<Vec<BigInt>> {
    let mut factors = vec![Vec::new(); (c.top() - c.bottom() + 1) as usize];
    let mut dropped = Vec::new();
    for k in (c.bottom() + 1..=c.top()).rev() {
        let rows: Vec<Vec<(usize, R::Elem)>> = kept_rows(c, k, &dropped).into_par_iter().map(|i| c.boundary(k, i)).collect();
        let elim = eliminate(ring, c.dim(k - 1), rows, |v| ring.is_unit(v));
        let mut fs = vec![BigInt::one(); elim.pivots];
        if !elim.remainder.is_empty() {
            let z = Integers { q_positive: true };
            let rows = elim.remainder.iter().map(|r| r.iter().map(|(j, v)| (*j, to_integer(ring, v))).collect()).collect();
            fs.extend(smith_normal_form(&Matrix::from_sparse_rows(&z, c.dim(k - 1), rows)).factors);
        }
        factors[(k - c.bottom()) as usize] = fs;
        dropped = drop_mask(c.dim(k - 1), &elim.pivot_cols);
    }
    factors
}

/// `ranks[i]` is the rank of `d_{bottom+i}`.
fn assemble<E, C: ChainComplex<E>>(c: &C, method: RankMethod, ranks: Vec<usize>, factors: Option<Vec<Vec<BigInt>>>) -> Homology {
    let degrees = (c.bottom()..=c.top())
        .enumerate()
        .map(|(i, k)| {
            let rank_in = ranks.get(i + 1).copied().unwrap_or(0);
            let factors_in = factors.as_ref().and_then(|f| f.get(i + 1).cloned()).unwrap_or_default();
            let dim = c.dim(k);
            DegreeHomology {
                degree: k,
                dim,
                rank_out: ranks[i],
                rank_in,
                // Only a complex (d² = 0) keeps this from saturating.
                betti: dim.saturating_sub(ranks[i] + rank_in),
                torsion: factors_in.iter().filter(|f| !f.is_one()).cloned().collect(),
                factors_in,
            }
        })
        .collect();
    Homology { method, degrees }
}

fn to_integer<R: Ring>(ring: &R, v: &R::Elem) -> BigInt {
    ring.format(v).parse().expect("integer entry")
}
