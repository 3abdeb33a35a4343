use std::collections::BTreeMap;
use std::sync::Arc;

use crate::combinatorics::{young_subgroup, Composition, Permutation, SymmetricGroup};
use crate::ring::Ring;

use super::HeckeError;

/// An element `Σ c_w T_w`, keyed by the index of `w` in [`SymmetricGroup`]
/// order. Stored coefficients are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement<E> {
    pub(crate) r: usize,
    pub(crate) coeffs: BTreeMap<usize, E>,
}

impl<E: Clone> HeckeElement<E> {
    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &E)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }
}

/// `H_r` over a ring, with `(T_s − q)(T_s + 1) = 0`.
#[derive(Clone)]
pub struct HeckeAlgebra<R: Ring> {
    pub ring: R,
    pub group: Arc<SymmetricGroup>,
}

impl<R: Ring> HeckeAlgebra<R> {
    pub fn new(ring: R, r: usize) -> Self {
        HeckeAlgebra { ring, group: SymmetricGroup::get(r) }
    }

    pub fn r(&self) -> usize {
        self.group.r
    }

    pub fn zero(&self) -> HeckeElement<R::Elem> {
        HeckeElement { r: self.r(), coeffs: BTreeMap::new() }
    }

    /// `c·T_w`.
    pub fn basis(&self, w: &Permutation, c: R::Elem) -> HeckeElement<R::Elem> {
        let mut h = self.zero();
        self.add_term(&mut h, self.group.index_of(w), c);
        h
    }

    pub fn t(&self, w: &Permutation) -> HeckeElement<R::Elem> {
        self.basis(w, self.ring.one())
    }

    /// `T_{s_i}`.
    pub fn generator(&self, i: usize) -> HeckeElement<R::Elem> {
        self.t(&Permutation::simple(self.r(), i))
    }

    pub fn one(&self) -> HeckeElement<R::Elem> {
        self.t(&Permutation::identity(self.r()))
    }

    pub fn coefficient(&self, h: &HeckeElement<R::Elem>, w: &Permutation) -> R::Elem {
        h.coeffs.get(&self.group.index_of(w)).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub(crate) fn add_term(&self, h: &mut HeckeElement<R::Elem>, k: usize, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match h.coeffs.get_mut(&k) {
            Some(v) => {
                *v = self.ring.add(v, &c);
                if self.ring.is_zero(v) {
                    h.coeffs.remove(&k);
                }
            }
            None => {
                h.coeffs.insert(k, c);
            }
        }
    }

    pub fn add(&self, a: &HeckeElement<R::Elem>, b: &HeckeElement<R::Elem>) -> Result<HeckeElement<R::Elem>, HeckeError> {
        self.check(a, b)?;
        let mut out = a.clone();
        for (k, c) in &b.coeffs {
            self.add_term(&mut out, *k, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, a: &HeckeElement<R::Elem>, c: &R::Elem) -> HeckeElement<R::Elem> {
        let mut out = self.zero();
        for (k, v) in &a.coeffs {
            self.add_term(&mut out, *k, self.ring.mul(c, v));
        }
        out
    }

    fn check(&self, a: &HeckeElement<R::Elem>, b: &HeckeElement<R::Elem>) -> Result<(), HeckeError> {
        for x in [a, b] {
            if x.r != self.r() {
                return Err(HeckeError::DegreeMismatch(x.r, self.r()));
            }
        }
        Ok(())
    }

    /// `h·T_{s_i}`: `T_w T_s = T_{ws}` if `ℓ(ws) > ℓ(w)`, otherwise
    /// `q T_{ws} + (q − 1) T_w`.
    pub fn mul_generator(&self, h: &HeckeElement<R::Elem>, i: usize) -> HeckeElement<R::Elem> {
        let ring = &self.ring;
        let q = ring.q();
        let q1 = ring.sub(&q, &ring.one());
        let mut out = self.zero();
        for (&k, c) in &h.coeffs {
            let ks = self.group.mul_simple(k, i);
            if self.group.length(ks) > self.group.length(k) {
                self.add_term(&mut out, ks, c.clone());
            } else {
                self.add_term(&mut out, ks, ring.mul(&q, c));
                self.add_term(&mut out, k, ring.mul(&q1, c));
            }
        }
        out
    }

    /// `h·T_w` along a reduced word of `w`.
    pub fn mul_basis(&self, h: &HeckeElement<R::Elem>, w: &Permutation) -> HeckeElement<R::Elem> {
        w.reduced_word().into_iter().fold(h.clone(), |acc, i| self.mul_generator(&acc, i))
    }

    pub fn multiply(&self, a: &HeckeElement<R::Elem>, b: &HeckeElement<R::Elem>) -> Result<HeckeElement<R::Elem>, HeckeError> {
        self.check(a, b)?;
        let mut out = self.zero();
        for (&k, c) in &b.coeffs {
            let part = self.mul_basis(a, self.group.element(k));
            for (j, v) in part.coeffs {
                self.add_term(&mut out, j, self.ring.mul(&v, c));
            }
        }
        Ok(out)
    }

    /// `x_μ = Σ_{w ∈ S_μ} T_w`.
    pub fn x_element(&self, mu: &Composition) -> HeckeElement<R::Elem> {
        let mut h = self.zero();
        for w in young_subgroup(mu) {
            self.add_term(&mut h, self.group.index_of(&w), self.ring.one());
        }
        h
    }

    /// `y_ν = Σ_{w ∈ S_ν} (−q)^{−ℓ(w)} T_w`.
    pub fn y_element(&self, nu: &Composition) -> HeckeElement<R::Elem> {
        let ring = &self.ring;
        let minus_q = ring.neg(&ring.q());
        let mut h = self.zero();
        for w in young_subgroup(nu) {
            self.add_term(&mut h, self.group.index_of(&w), ring.pow(&minus_q, -(w.length() as i64)));
        }
        h
    }

    /// The anti-automorphism `T_w ↦ T_{w⁻¹}`.
    pub fn chi(&self, h: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        let mut out = self.zero();
        for (&k, c) in &h.coeffs {
            let inv = self.group.element(k).inverse();
            self.add_term(&mut out, self.group.index_of(&inv), c.clone());
        }
        out
    }
}
