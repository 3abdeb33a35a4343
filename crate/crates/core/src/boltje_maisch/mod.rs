//! The Boltje–Maisch complex `B̃^λ_*`: `B̃_{-1} = (S^λ)^*`,
//! `B̃_0 = Hom_R(M^λ, R)` and in degree `k` the sum of
//! `Hom_R(M^{μ1}, R) ⊗ Hom^∧(M^{μ2}, M^{μ1}) ⊗ ⋯ ⊗ Hom^∧(M^λ, M^{μk})`, with
//! `d(f_0 ⊗ ⋯ ⊗ f_k) = Σ_{t<k} (−1)^t f_0 ⊗ ⋯ ⊗ f_t f_{t+1} ⊗ ⋯ ⊗ f_k` and
//! `d_0` the restriction to `S^λ`. Also: the isomorphism with the Schur
//! functor image of the induced bar resolution, and exactness reports.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use crate::combinatorics::{compositions, partitions, Composition, Permutation};
use crate::hecke::specht_basis;
use crate::linalg::sparse::eliminate;
use crate::linalg::{smith_normal_form, Matrix};
use crate::qschur::{weight_truncate, SchurAlgebra, SchurIndex, SchurLabel};
use crate::resolutions::{
    bar_complex, homology, induce_to_schur, schur_functor_image, validate, Augmentation, ChainComplex,
    ComplexError, Homology, LeftFactors, TensorComplex, TensorLabel,
};
use crate::ring::{Integers, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BmError {
    #[error("{0} is not a partition")]
    NotAPartition(Composition),
    #[error("unknown pool {0:?} (expected partitions or compositions)")]
    UnknownPool(String),
    #[error("chains differ between the two complexes: {0:?}")]
    LabelMismatch(Vec<String>),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Which weights may appear in the chains `μ1 ▷ ⋯ ▷ μk ▷ λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Pool {
    Partitions,
    #[default]
    Compositions,
}

impl Pool {
    pub fn weights(self, n: usize, r: usize) -> Vec<Composition> {
        match self {
            Pool::Partitions => partitions(n, r),
            Pool::Compositions => compositions(n, r),
        }
    }
}

impl FromStr for Pool {
    type Err = BmError;

    fn from_str(s: &str) -> Result<Self, BmError> {
        match s {
            "partitions" => Ok(Pool::Partitions),
            "compositions" => Ok(Pool::Compositions),
            _ => Err(BmError::UnknownPool(s.to_string())),
        }
    }
}

impl fmt::Display for Pool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pool::Partitions => "partitions",
            Pool::Compositions => "compositions",
        })
    }
}

/// Basis of `Hom^∧(M^bottom, M^top)`: `ψ^d` with `d ∈ Ω^{⪰0}`.
pub fn hom_wedge_basis(index: &SchurIndex, top: &Composition, bottom: &Composition) -> Vec<SchurLabel> {
    weight_truncate(index, top, 0, bottom)
}

pub fn build_bm_complex<R: Ring>(
    alg: Arc<SchurAlgebra<R>>,
    lam: &Composition,
    pool: Pool,
) -> Result<TensorComplex<R>, BmError> {
    if !lam.is_partition() {
        return Err(BmError::NotAPartition(lam.clone()));
    }
    let specht = specht_basis(&alg.ring, lam).map_err(|_| BmError::NotAPartition(lam.clone()))?;
    // ε ↦ ε|_{S^λ}: the coordinate functional x*_d restricts to (b_i)_d on basis vector b_i.
    let d0 = specht.matrix(&alg.ring).transpose();
    let weights = pool.weights(alg.n(), alg.r());
    Ok(TensorComplex::new(alg, lam, &weights, LeftFactors::Dual, Augmentation::Explicit(d0), specht.rank())?)
}

/// The Schur functor image of the induced bar resolution of `L_λ`.
pub fn induced_schur_image<R: Ring>(
    alg: Arc<SchurAlgebra<R>>,
    lam: &Composition,
    pool: Pool,
) -> Result<TensorComplex<R>, BmError> {
    let weights = pool.weights(alg.n(), alg.r());
    let bar = bar_complex(alg, lam, &weights)?;
    Ok(schur_functor_image(&induce_to_schur(&bar)?)?)
}

/// `φ_ν : Hom_H(M^ν, H) → Hom_R(M^ν, R)`, `f ↦ (m ↦ coefficient of T_1 in f(m))`,
/// in the bases `{ψ^d_δν}` (rows) and the dual of `{x_ν T_d}` (columns).
pub fn phi_iso<R: Ring>(alg: &SchurAlgebra<R>, nu: &Composition) -> Result<Matrix<R::Elem>, BmError> {
    let idx = &alg.index;
    let (n, r) = (alg.n(), alg.r());
    if n < r {
        return Err(ComplexError::NoSchurFunctor { n, r }.into());
    }
    let delta = idx.position(&Composition::delta(n, r)).expect("δ is a weight");
    let nu_pos = idx.position(nu).ok_or_else(|| ComplexError::UnknownWeight(nu.clone()))?;
    let e = idx.module(delta).position(&Permutation::identity(r)).expect("T_1 ∈ M^δ = H");
    let rows: Vec<Vec<(usize, R::Elem)>> = idx.labels(delta, nu_pos).map(|l| alg.hom(l).matrix.row(e).to_vec()).collect();
    Ok(Matrix::from_sparse_rows(&alg.ring, idx.module(nu_pos).dim(), rows))
}

/// `Φ_k = φ_{μ1} ⊗ id ⊗ ⋯ ⊗ id` from the Schur functor image to `B̃`,
/// for every degree `k ≥ 0`.
pub fn iso_maps<R: Ring>(bm: &TensorComplex<R>, sf: &TensorComplex<R>) -> Result<Vec<Matrix<R::Elem>>, BmError> {
    let alg = &bm.alg;
    let idx = &alg.index;
    let mut unmatched = Vec::new();
    for k in 0..=bm.top().max(sf.top()) as usize {
        let (a, b) = (sf.chains(k), bm.chains(k));
        for chain in a.iter().filter(|c| !b.contains(c)).chain(b.iter().filter(|c| !a.contains(c))) {
            unmatched.push(chain.iter().map(|&p| idx.composition(p).to_string()).collect::<Vec<_>>().join(" ▷ "));
        }
    }
    if !unmatched.is_empty() {
        return Err(BmError::LabelMismatch(unmatched));
    }
    let mut phis = std::collections::HashMap::new();
    let mut maps = Vec::new();
    for k in 0..=bm.top() {
        let mut entries = Vec::new();
        for i in 0..sf.dim(k) {
            let l = sf.label(k, i);
            let mu = l.chain[0];
            if !phis.contains_key(&mu) {
                phis.insert(mu, phi_iso(alg, idx.composition(mu))?);
            }
            let a = sf.left_basis(mu).binary_search(&l.left).expect("left factor of the Schur functor image");
            for (j, c) in phis[&mu].row(a) {
                let target = TensorLabel { chain: l.chain.clone(), left: *j as u64, homs: l.homs.clone() };
                entries.push((i, bm.index_of(&target).expect("chains match"), c.clone()));
            }
        }
        maps.push(Matrix::from_entries(&alg.ring, sf.dim(k), bm.dim(k), entries));
    }
    Ok(maps)
}

/// True iff each `maps[k]` (degree `k ≥ 0`) is invertible and
/// `Φ_{k-1} ∘ d_k = d_k ∘ Φ_k`.
pub fn check_chain_map<R, A, B>(ring: &R, source: &A, target: &B, maps: &[Matrix<R::Elem>]) -> bool
where
    R: Ring,
    A: ChainComplex<R::Elem>,
    B: ChainComplex<R::Elem>,
{
    let top = source.top().max(target.top());
    if maps.len() as i64 != top + 1 {
        return false;
    }
    (0..=top).all(|k| {
        let phi = &maps[k as usize];
        if (phi.rows(), phi.cols()) != (source.dim(k), target.dim(k)) || !is_invertible(ring, phi) {
            return false;
        }
        if k == 0 {
            return true;
        }
        let left = phi.mul(ring, &target.differential(ring, k));
        let right = source.differential(ring, k).mul(ring, &maps[k as usize - 1]);
        matches!((left, right), (Ok(l), Ok(r)) if l == r)
    })
}

pub fn chain_iso_check<R: Ring>(bm: &TensorComplex<R>, sf: &TensorComplex<R>) -> Result<bool, BmError> {
    let maps = iso_maps(bm, sf)?;
    Ok(check_chain_map(bm.ring(), sf, bm, &maps))
}

/// Invertibility over the coefficient ring: full rank with every invariant
/// factor a unit.
pub fn is_invertible<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let elim = eliminate(ring, m.cols(), m.row_data().to_vec(), |v| ring.is_unit(v));
    if elim.remainder.is_empty() {
        return elim.pivots == m.rows();
    }
    if ring.is_field() {
        return false;
    }
    let z = Integers { q_positive: true };
    let rows = elim
        .remainder
        .iter()
        .map(|r| r.iter().map(|(j, v)| (*j, ring.format(v).parse::<BigInt>().expect("integer entry"))).collect())
        .collect();
    let smith = smith_normal_form(&Matrix::from_sparse_rows(&z, m.cols(), rows));
    smith.is_unimodular() && elim.pivots + smith.rank() == m.rows()
}

#[derive(Clone, Debug)]
pub struct ExactnessReport {
    pub lam: Composition,
    pub pool: Pool,
    pub dims: Vec<usize>,
    pub d2_zero: bool,
    pub homology: Homology,
    pub euler_characteristic: i64,
}

impl ExactnessReport {
    /// Zero homology (and no torsion) in every degree of a genuine complex.
    pub fn exact(&self) -> bool {
        self.d2_zero && self.homology.is_exact()
    }

    /// Highest degree with a nonzero module.
    pub fn top_degree(&self) -> i64 {
        self.dims.len() as i64 - 2
    }
}

pub fn exactness_report<R: Ring>(alg: Arc<SchurAlgebra<R>>, lam: &Composition, pool: Pool) -> Result<ExactnessReport, BmError> {
    let c = build_bm_complex(alg, lam, pool)?;
    Ok(report_for(&c, lam, pool))
}

pub fn report_for<R: Ring>(c: &TensorComplex<R>, lam: &Composition, pool: Pool) -> ExactnessReport {
    let ring = c.ring();
    let d2_zero = validate(ring, c);
    let homology = homology(ring, c);
    ExactnessReport { lam: lam.clone(), pool, dims: c.dims(), d2_zero, homology, euler_characteristic: c.euler_characteristic() }
}

#[cfg(test)]
mod tests;
