use std::collections::HashMap;
use std::sync::Arc;

use crate::combinatorics::{
    block_of, is_double_coset_rep, min_coset_reps, young_subgroup, Composition, Permutation, SymmetricGroup,
};
use crate::linalg::Matrix;
use crate::ring::Ring;

use super::algebra::{HeckeAlgebra, HeckeElement};
use super::HeckeError;

/// Effect of `T_s` on a basis vector `x_μ T_d` of `M^μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// `ds ∈ D_μ`, longer: `x_μ T_{ds}`.
    Up(usize),
    /// `ds ∈ D_μ`, shorter: `q x_μ T_{ds} + (q−1) x_μ T_d`.
    Down(usize),
    /// `ds ∉ D_μ`: `q x_μ T_d`.
    Stay,
}

/// The permutation module `M^μ = x_μ H_r` with basis `x_μ T_d`, `d ∈ D_μ`.
/// Purely combinatorial: arithmetic happens in the methods taking a ring.
pub struct PermModule {
    pub mu: Composition,
    pub basis: Vec<Permutation>,
    group: Arc<SymmetricGroup>,
    /// Group index → basis position.
    position: HashMap<usize, usize>,
    /// `steps[d][i-1]`.
    steps: Vec<Vec<Step>>,
    /// For every `d ≠ e`: a right descent `i` with `d s_i ∈ D_μ`, and its position.
    parents: Vec<Option<(usize, usize)>>,
}

impl PermModule {
    pub fn new(mu: &Composition) -> Self {
        let r = mu.total();
        let group = SymmetricGroup::get(r);
        let basis = min_coset_reps(mu);
        let position: HashMap<usize, usize> = basis.iter().enumerate().map(|(k, d)| (group.index_of(d), k)).collect();
        let steps = basis
            .iter()
            .map(|d| {
                let k = group.index_of(d);
                (1..r)
                    .map(|i| {
                        let ks = group.mul_simple(k, i);
                        match position.get(&ks) {
                            Some(&j) if group.length(ks) > group.length(k) => Step::Up(j),
                            Some(&j) => Step::Down(j),
                            None => Step::Stay,
                        }
                    })
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>();
        let parents = steps
            .iter()
            .map(|row| {
                row.iter().enumerate().find_map(|(i, s)| match s {
                    Step::Down(j) => Some((i + 1, *j)),
                    _ => None,
                })
            })
            .collect();
        PermModule { mu: mu.clone(), basis, group, position, steps, parents }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn r(&self) -> usize {
        self.mu.total()
    }

    pub fn position(&self, d: &Permutation) -> Option<usize> {
        self.position.get(&self.group.index_of(d)).copied()
    }

    pub fn step(&self, d: usize, i: usize) -> Step {
        self.steps[d][i - 1]
    }

    pub fn unit<R: Ring>(&self, ring: &R, d: usize) -> Vec<R::Elem> {
        let mut v = vec![ring.zero(); self.dim()];
        v[d] = ring.one();
        v
    }

    /// `v·T_{s_i}` on coordinate vectors.
    pub fn act_generator<R: Ring>(&self, ring: &R, v: &[R::Elem], i: usize) -> Vec<R::Elem> {
        let q = ring.q();
        let q1 = ring.sub(&q, &ring.one());
        let mut out = vec![ring.zero(); self.dim()];
        for (d, c) in v.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            match self.steps[d][i - 1] {
                Step::Up(j) => ring.add_assign(&mut out[j], c),
                Step::Down(j) => {
                    ring.add_assign(&mut out[j], &ring.mul(&q, c));
                    ring.add_assign(&mut out[d], &ring.mul(&q1, c));
                }
                Step::Stay => ring.add_assign(&mut out[d], &ring.mul(&q, c)),
            }
        }
        out
    }

    /// `v·T_w` along a reduced word.
    pub fn act<R: Ring>(&self, ring: &R, v: &[R::Elem], w: &Permutation) -> Vec<R::Elem> {
        w.reduced_word().into_iter().fold(v.to_vec(), |acc, i| self.act_generator(ring, &acc, i))
    }

    /// The element `Σ v_d x_μ T_d` of `H_r`.
    pub fn to_hecke<R: Ring>(&self, alg: &HeckeAlgebra<R>, v: &[R::Elem]) -> HeckeElement<R::Elem> {
        let sub = young_subgroup(&self.mu);
        let mut h = alg.zero();
        for (d, c) in self.basis.iter().zip(v) {
            for u in &sub {
                // ℓ(ud) = ℓ(u) + ℓ(d), so x_μ T_d = Σ_u T_{ud}.
                alg.add_term(&mut h, self.group.index_of(&u.product(d)), c.clone());
            }
        }
        h
    }

    /// Coordinates of `h` in the basis `x_μ T_d`, or `None` if `h ∉ M^μ`.
    /// The supports of distinct basis vectors are disjoint right cosets, so
    /// the coordinate at `d` is the coefficient of `T_d`; the answer is then
    /// verified by re-expanding.
    pub fn coords<R: Ring>(&self, alg: &HeckeAlgebra<R>, h: &HeckeElement<R::Elem>) -> Option<Vec<R::Elem>> {
        let v: Vec<R::Elem> = self.basis.iter().map(|d| alg.coefficient(h, d)).collect();
        (self.to_hecke(alg, &v) == *h).then_some(v)
    }

    /// Each basis vector `x_μ T_d`, `d ≠ e`, as `x_μ T_{d'} T_{s_i}` with
    /// `d' ∈ D_μ` shorter: returns `(i, d')`.
    pub fn parent(&self, d: usize) -> Option<(usize, usize)> {
        self.parents[d]
    }
}

/// The matrix of `ψ^d_λμ : M^μ → M^λ` (rows: basis of `M^λ`, columns:
/// basis of `M^μ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMatrix<E> {
    pub lam: Composition,
    pub mu: Composition,
    pub d: Permutation,
    pub matrix: Matrix<E>,
}

/// `D_λ ∩ S_λ d S_μ`, as positions in `M^λ`: `ψ^d_λμ(x_μ)` is the sum of
/// those basis vectors.
pub fn double_coset_in_basis(target: &PermModule, mu: &Composition, d: &Permutation) -> Vec<usize> {
    let (lb, mb) = (block_of(&target.mu), block_of(mu));
    let n = target.mu.len();
    let weights = |w: &Permutation| {
        let mut omega = vec![0u16; n * n];
        for k in 0..mb.len() {
            omega[lb[w.apply(k)] * n + mb[k]] += 1;
        }
        omega
    };
    let w0 = weights(d);
    (0..target.dim()).filter(|&j| weights(&target.basis[j]) == w0).collect()
}

/// Builds `ψ^d_λμ`. Column `e` is the indicator of the double coset; every
/// other column is obtained from a shorter one by one generator action,
/// since `ψ(x_μ T_{d'} T_s) = ψ(x_μ T_{d'}) T_s`.
pub fn psi_hom<R: Ring>(
    ring: &R,
    target: &PermModule,
    source: &PermModule,
    d: &Permutation,
) -> Result<HomMatrix<R::Elem>, HeckeError> {
    let (lam, mu) = (&target.mu, &source.mu);
    if !is_double_coset_rep(lam, mu, d) {
        return Err(HeckeError::NotDoubleCosetRep { lam: lam.clone(), mu: mu.clone(), d: d.clone() });
    }
    let mut columns: Vec<Vec<R::Elem>> = Vec::with_capacity(source.dim());
    let mut first = vec![ring.zero(); target.dim()];
    for j in double_coset_in_basis(target, mu, d) {
        first[j] = ring.one();
    }
    columns.push(first);
    for k in 1..source.dim() {
        let (i, parent) = source.parent(k).expect("non-identity coset representatives have a descent");
        debug_assert!(parent < k);
        let col = target.act_generator(ring, &columns[parent], i);
        columns.push(col);
    }
    let matrix = Matrix::from_entries(
        ring,
        target.dim(),
        source.dim(),
        columns
            .into_iter()
            .enumerate()
            .flat_map(|(c, col)| col.into_iter().enumerate().map(move |(row, v)| (row, c, v))),
    );
    Ok(HomMatrix { lam: lam.clone(), mu: mu.clone(), d: d.clone(), matrix })
}

impl<E: Clone> HomMatrix<E> {
    /// Image of a coordinate vector of `M^μ`.
    pub fn apply<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Vec<E> {
        let mut out = vec![ring.zero(); self.matrix.rows()];
        for (row, o) in out.iter_mut().enumerate() {
            for (c, a) in self.matrix.row(row) {
                if !ring.is_zero(&v[*c]) {
                    ring.add_assign(o, &ring.mul(a, &v[*c]));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{compositions, double_coset_reps};
    use crate::linalg::rank;
    use crate::ring::{Rational, Rationals};

    fn ring() -> Rationals {
        Rationals::new(Rational::from_int(2))
    }

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec())
    }

    #[test]
    fn r2_hom_matrix() {
        let r = ring();
        let (t, s) = (PermModule::new(&c(&[2, 0])), PermModule::new(&c(&[1, 1])));
        let h = psi_hom(&r, &t, &s, &Permutation::identity(2)).unwrap();
        assert_eq!(h.matrix.to_dense(&r), vec![vec![Rational::one(), Rational::from_int(2)]]);
        assert!(psi_hom(&r, &t, &s, &Permutation::simple(2, 1)).is_err());
    }

    #[test]
    fn coords_examples() {
        let r = ring();
        let alg = HeckeAlgebra::new(r.clone(), 2);
        let m = PermModule::new(&c(&[2]));
        let x = alg.x_element(&c(&[2]));
        assert_eq!(m.coords(&alg, &x), Some(vec![Rational::one()]));
        let xx = alg.multiply(&x, &x).unwrap();
        assert_eq!(m.coords(&alg, &xx), Some(vec![Rational::from_int(3)]));
        assert_eq!(m.coords(&alg, &alg.generator(1)), None);
    }

    /// The action on coordinates agrees with multiplication in `H_r`.
    #[test]
    fn module_action_matches_algebra() {
        let r = ring();
        for n in 1..=3 {
            for mu in compositions(n, 4) {
                let alg = HeckeAlgebra::new(r.clone(), 4);
                let m = PermModule::new(&mu);
                for d in 0..m.dim() {
                    let v = m.unit(&r, d);
                    for i in 1..4 {
                        let lhs = m.to_hecke(&alg, &m.act_generator(&r, &v, i));
                        let rhs = alg.mul_generator(&m.to_hecke(&alg, &v), i);
                        assert_eq!(lhs, rhs, "{mu} d={d} s{i}");
                    }
                }
            }
        }
    }

    /// Cross-check against the direct route `(Σ_{coset} T_w) T_{d'}`.
    #[test]
    fn hom_matrix_matches_direct_expansion() {
        let r = ring();
        let alg = HeckeAlgebra::new(r.clone(), 3);
        for lam in compositions(3, 3) {
            let t = PermModule::new(&lam);
            for mu in compositions(3, 3) {
                let s = PermModule::new(&mu);
                let (a, b) = (young_subgroup(&lam), young_subgroup(&mu));
                for d in double_coset_reps(&lam, &mu) {
                    let h = psi_hom(&r, &t, &s, &d).unwrap();
                    let mut coset: Vec<Permutation> =
                        a.iter().flat_map(|u| b.iter().map(|v| u.product(&d).product(v))).collect();
                    coset.sort();
                    coset.dedup();
                    let mut image = alg.zero();
                    for w in &coset {
                        image = alg.add(&image, &alg.t(w)).unwrap();
                    }
                    for (k, dp) in s.basis.iter().enumerate() {
                        let col = t.coords(&alg, &alg.mul_basis(&image, dp)).expect("image lies in M^λ");
                        let got: Vec<Rational> = (0..t.dim()).map(|row| h.matrix.get(row, k).cloned().unwrap_or_else(Rational::zero)).collect();
                        assert_eq!(col, got);
                    }
                }
            }
        }
    }

    #[test]
    fn hom_matrices_are_linear_and_independent() {
        let r = ring();
        for lam in compositions(3, 4) {
            let t = PermModule::new(&lam);
            for mu in compositions(3, 4) {
                let s = PermModule::new(&mu);
                let reps = double_coset_reps(&lam, &mu);
                let mut stacked = Vec::new();
                for d in &reps {
                    let h = psi_hom(&r, &t, &s, d).unwrap();
                    for k in 0..s.dim() {
                        for i in 1..4 {
                            let lhs = t.act_generator(&r, &h.apply(&r, &s.unit(&r, k)), i);
                            let rhs = h.apply(&r, &s.act_generator(&r, &s.unit(&r, k), i));
                            assert_eq!(lhs, rhs);
                        }
                    }
                    stacked.push(h.matrix.to_dense(&r).concat());
                }
                let m = Matrix::from_dense(&r, &stacked);
                assert_eq!(rank(&r, &m).unwrap(), reps.len());
            }
        }
    }

    #[test]
    fn identity_hom() {
        let r = ring();
        let m = PermModule::new(&c(&[2, 1, 0]));
        let h = psi_hom(&r, &m, &m, &Permutation::identity(3)).unwrap();
        assert_eq!(h.matrix, Matrix::identity(&r, 3));
    }
}
