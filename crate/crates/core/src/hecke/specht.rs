use crate::combinatorics::{young_subgroup, Composition, CombinatoricsError, Permutation, SymmetricGroup};
use crate::linalg::{Echelon, Matrix};
use crate::ring::Ring;

use super::module::PermModule;

/// `w_λ`: sends the entry of each cell in the column-reading tableau to
/// the entry of the same cell in the row-reading tableau.
pub fn w_lambda(lam: &Composition) -> Result<Permutation, CombinatoricsError> {
    let conj = lam.conjugate()?;
    let (rows, cols) = (lam.boundaries(), conj.boundaries());
    let mut images = vec![0u8; lam.total()];
    for (i, &len) in lam.parts().iter().enumerate() {
        for j in 0..len {
            images[cols[j] + i] = (rows[i] + j) as u8;
        }
    }
    Ok(Permutation::from_images(images))
}

/// A basis of `S^λ = z_λ H_r ⊆ M^λ`, `z_λ = x_λ T_{w_λ} y_{λ'}`.
#[derive(Clone, Debug)]
pub struct SpechtBasis<E> {
    pub lam: Composition,
    /// Basis vectors in `M^λ` coordinates (a lattice basis over the integers).
    pub rows: Vec<Vec<(usize, E)>>,
    pub ambient_dim: usize,
}

impl<E: Clone> SpechtBasis<E> {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows are basis vectors.
    pub fn matrix<R: Ring<Elem = E>>(&self, ring: &R) -> Matrix<E> {
        Matrix::from_sparse_rows(ring, self.ambient_dim, self.rows.clone())
    }
}

/// Row-reduces `{z_λ T_w : w ∈ S_r}` inside `M^λ`.
pub fn specht_basis<R: Ring>(ring: &R, lam: &Composition) -> Result<SpechtBasis<R::Elem>, CombinatoricsError> {
    let conj = lam.conjugate()?;
    let r = lam.total();
    let module = PermModule::new(lam);
    let w = w_lambda(lam)?;
    let start = module.position(&w).expect("w_λ is a distinguished coset representative");
    let x_t = module.unit(ring, start);
    // Pad λ' with zeros so it is a composition of r with at least one part.
    let mut conj_parts = conj.parts().to_vec();
    if conj_parts.is_empty() {
        conj_parts.push(0);
    }
    let minus_q = ring.neg(&ring.q());
    let mut z = vec![ring.zero(); module.dim()];
    for u in young_subgroup(&Composition::new(conj_parts)) {
        let coef = ring.pow(&minus_q, -(u.length() as i64));
        for (acc, v) in z.iter_mut().zip(module.act(ring, &x_t, &u)) {
            ring.add_assign(acc, &ring.mul(&coef, &v));
        }
    }
    // z T_w for all w, each from a shorter prefix.
    let g = SymmetricGroup::get(r);
    let mut images: Vec<Vec<R::Elem>> = Vec::with_capacity(g.order());
    images.push(z);
    for k in 1..g.order() {
        let w = g.element(k);
        let i = (1..r).find(|&i| w.has_right_descent(i)).unwrap();
        let parent = g.index_of(&w.mul_simple(i));
        let v = module.act_generator(ring, &images[parent], i);
        images.push(v);
    }
    let mut ech = Echelon::new();
    for v in &images {
        let sparse: Vec<(usize, R::Elem)> =
            v.iter().enumerate().filter(|(_, x)| !ring.is_zero(x)).map(|(j, x)| (j, x.clone())).collect();
        ech.insert(ring, sparse);
    }
    Ok(SpechtBasis { lam: lam.clone(), rows: ech.rows(), ambient_dim: module.dim() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{is_distinguished, partitions, standard_tableaux_count};
    use crate::ring::{Integers, PrimeField, Rational, Rationals};

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec())
    }

    #[test]
    fn w_lambda_is_distinguished() {
        for r in 1..=5 {
            for lam in partitions(r, r) {
                assert!(is_distinguished(&lam, &w_lambda(&lam).unwrap()));
            }
        }
        assert_eq!(w_lambda(&c(&[2, 1])).unwrap().one_line(), vec![1, 3, 2]);
    }

    #[test]
    fn small_ranks() {
        let q = Rationals::new(Rational::from_int(2));
        assert_eq!(specht_basis(&q, &c(&[2, 0])).unwrap().rank(), 1);
        assert_eq!(specht_basis(&q, &c(&[2, 1, 0])).unwrap().rank(), 2);
        let s = specht_basis(&q, &c(&[1, 1])).unwrap();
        assert_eq!(s.rank(), 1);
        // Spanned by T_e − q⁻¹ T_s, on which T_s acts by −1.
        let m = PermModule::new(&c(&[1, 1]));
        let v: Vec<Rational> = (0..2).map(|j| s.matrix(&q).get(0, j).cloned().unwrap_or_else(Rational::zero)).collect();
        assert_eq!(v[1], v[0].mul(&Rational::new(-1, 2)));
        let acted = m.act_generator(&q, &v, 1);
        assert_eq!(acted, v.iter().map(Rational::neg).collect::<Vec<_>>());
    }

    #[test]
    fn ranks_match_standard_tableaux() {
        let rings: Vec<Rationals> = [Rational::one(), Rational::from_int(2), Rational::new(1, 3)]
            .into_iter()
            .map(Rationals::new)
            .collect();
        for r in 1..=4 {
            for lam in partitions(r, r) {
                let f = standard_tableaux_count(&lam).unwrap();
                for q in &rings {
                    assert_eq!(specht_basis(q, &lam).unwrap().rank(), f, "{lam} q={}", q.q);
                }
                assert_eq!(specht_basis(&PrimeField::new(5, 2), &lam).unwrap().rank(), f);
                assert_eq!(specht_basis(&Integers { q_positive: true }, &lam).unwrap().rank(), f);
            }
        }
    }

    #[test]
    fn stable_under_generators() {
        let q = Rationals::new(Rational::new(1, 3));
        for lam in partitions(4, 4) {
            let s = specht_basis(&q, &lam).unwrap();
            let m = PermModule::new(&lam);
            let dense = s.matrix(&q).to_dense(&q);
            for v in &dense {
                for i in 1..4 {
                    let mut ech = Echelon::new();
                    for row in &s.rows {
                        ech.insert(&q, row.clone());
                    }
                    let w = m.act_generator(&q, v, i);
                    let sparse = w.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                    assert!(!ech.insert(&q, sparse), "{lam} not stable under s{i}");
                }
            }
        }
    }
}
