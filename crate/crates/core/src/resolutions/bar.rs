use std::sync::Arc;

use crate::combinatorics::Composition;
use crate::linalg::Matrix;
use crate::qschur::{SchurAlgebra, SchurLabel};
use crate::ring::Ring;

use super::{Augmentation, ChainComplex, ComplexError, LeftFactors, TensorComplex, TensorLabel};

/// `C⁺_*(L_λ)`: `C_{-1} = L_λ`, `C_0 = S⁺ψ_λ`, and in degree `k` the sum of
/// `S⁺ψ_{μ1} ⊗ ψ_{μ1}J_1ψ_{μ2} ⊗ ⋯ ⊗ ψ_{μk}J_1ψ_λ` over chains in `pool`.
pub fn bar_complex<R: Ring>(
    alg: Arc<SchurAlgebra<R>>,
    lam: &Composition,
    pool: &[Composition],
) -> Result<TensorComplex<R>, ComplexError> {
    TensorComplex::new(alg, lam, pool, LeftFactors::Borel, Augmentation::Trivial, 1)
}

/// `S ⊗_{S⁺} C⁺_*(L_λ)` in degrees ≥ 0: the left factors become `Sψ_{μ1}`.
pub fn induce_to_schur<R: Ring>(bar: &TensorComplex<R>) -> Result<TensorComplex<R>, ComplexError> {
    rebuild(bar, LeftFactors::Full)
}

/// `ψ_δ(S ⊗_{S⁺} C⁺_*(L_λ))`, `δ = (1, …, 1, 0, …, 0)`.
pub fn schur_functor_image<R: Ring>(induced: &TensorComplex<R>) -> Result<TensorComplex<R>, ComplexError> {
    let (n, r) = (induced.alg.n(), induced.alg.r());
    if n < r {
        return Err(ComplexError::NoSchurFunctor { n, r });
    }
    let delta = induced.alg.index.position(&Composition::delta(n, r)).expect("δ is a weight");
    rebuild(induced, LeftFactors::Weight(delta))
}

fn rebuild<R: Ring>(c: &TensorComplex<R>, left: LeftFactors) -> Result<TensorComplex<R>, ComplexError> {
    let idx = &c.alg.index;
    let pool: Vec<Composition> = c.pool.iter().map(|&p| idx.composition(p).clone()).collect();
    TensorComplex::new(c.alg.clone(), idx.composition(c.lam), &pool, left, Augmentation::None, 0)
}

/// `s_k : C_k → C_{k+1}` for `k = -1, …, top`: `s_{-1}(m) = ψ_λ ⊗ m` and
/// `s_k(a ⊗ h) = ψ_ν ⊗ (a − p(a)) ⊗ h` for `a ∈ ψ_ν S⁺`, where `p` keeps
/// only the idempotent part.
pub fn splitting_maps<R: Ring>(c: &TensorComplex<R>) -> Result<Vec<Matrix<R::Elem>>, ComplexError> {
    assert!(c.left == LeftFactors::Borel && c.bottom() == -1, "splitting maps belong to the bar complex");
    let ring = c.ring();
    let idx = &c.alg.index;
    let mut maps = Vec::new();
    let unit = TensorLabel { chain: vec![c.lam], left: idx.idempotent(c.lam).pack(), homs: Vec::new() };
    let j = c.index_of(&unit).expect("ψ_λ is in degree 0");
    maps.push(Matrix::from_entries(ring, 1, c.dim(0), [(0, j, ring.one())]));
    for k in 0..=c.top() {
        let mut entries = Vec::new();
        for i in 0..c.dim(k) {
            let l = c.label(k, i);
            let a = SchurLabel::unpack(l.left);
            if idx.is_idempotent(a) {
                continue;
            }
            let mut chain = vec![a.lam];
            chain.extend_from_slice(&l.chain);
            let mut homs = vec![a];
            homs.extend(l.homs);
            let target = TensorLabel { chain, left: idx.idempotent(a.lam).pack(), homs };
            let j = c.index_of(&target).ok_or(ComplexError::SplittingOutOfRange(k))?;
            entries.push((i, j, ring.one()));
        }
        maps.push(Matrix::from_entries(ring, c.dim(k), c.dim(k + 1), entries));
    }
    Ok(maps)
}

/// `d_0 s_{-1} = id` and `d_{k+1} s_k + s_{k-1} d_k = id` for `k ≥ 0`, as
/// exact matrix identities. `maps[i]` is `s_{i-1}`.
pub fn check_splitting<R: Ring, C: ChainComplex<R::Elem>>(ring: &R, c: &C, maps: &[Matrix<R::Elem>]) -> bool {
    if maps.len() as i64 != c.top() - c.bottom() + 1 {
        return false;
    }
    let s = |k: i64| &maps[(k - c.bottom()) as usize];
    let mut d_k: Option<Matrix<R::Elem>> = None;
    for k in c.bottom()..=c.top() {
        let d_up = c.differential(ring, k + 1);
        let Ok(mut total) = s(k).mul(ring, &d_up) else { return false };
        if let Some(d_k) = &d_k {
            let Ok(down) = d_k.mul(ring, s(k - 1)) else { return false };
            let Ok(sum) = total.add(ring, &down) else { return false };
            total = sum;
        }
        if total != Matrix::identity(ring, c.dim(k)) {
            return false;
        }
        d_k = Some(d_up);
    }
    true
}

/// Builds the splitting maps of a bar complex and checks both identities.
pub fn splitting_check<R: Ring>(c: &TensorComplex<R>) -> bool {
    splitting_maps(c).is_ok_and(|maps| check_splitting(c.ring(), c, &maps))
}
