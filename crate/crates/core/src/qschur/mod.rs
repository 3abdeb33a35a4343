//! The q-Schur algebra `S(n, r)` on its basis `ψ^d_λμ`: structure constants
//! by composing homomorphisms of permutation modules, the Borel subalgebra
//! and its ideals `J_m`, the anti-automorphism `ξ`, and the radical.

mod table;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use parking_lot::Mutex;
use rayon::prelude::*;

use crate::combinatorics::{
    compositions, double_coset_reps, omega_level, Composition, Permutation, SymmetricGroup,
};
use crate::hecke::{psi_hom, HomMatrix, PermModule};
use crate::linalg::Echelon;
use crate::ring::Ring;

pub use table::{StructureConstantTable, TableError, TextTable};

/// `ψ^d_λμ : M^μ → M^λ`, with `λ, μ` given by their positions in
/// `compositions(n, r)` and `d` by its position in the symmetric group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SchurLabel {
    pub lam: u16,
    pub mu: u16,
    pub d: u32,
}

impl SchurLabel {
    pub fn pack(self) -> u64 {
        (self.lam as u64) << 48 | (self.mu as u64) << 32 | self.d as u64
    }

    pub fn unpack(x: u64) -> Self {
        SchurLabel { lam: (x >> 48) as u16, mu: (x >> 32) as u16, d: x as u32 }
    }
}

/// Combinatorial data shared by all rings for fixed `(n, r)`.
pub struct SchurIndex {
    pub n: usize,
    pub r: usize,
    comps: Vec<Composition>,
    position: HashMap<Composition, usize>,
    modules: Vec<PermModule>,
    group: Arc<SymmetricGroup>,
    /// `(λ, μ)` → `[(d, level)]` in group order.
    reps: Vec<OnceLock<Vec<(u32, Option<u8>)>>>,
}

impl SchurIndex {
    pub fn new(n: usize, r: usize) -> Self {
        let comps = compositions(n, r);
        let position = comps.iter().enumerate().map(|(k, c)| (c.clone(), k)).collect();
        let modules = comps.iter().map(PermModule::new).collect();
        let reps = (0..comps.len() * comps.len()).map(|_| OnceLock::new()).collect();
        SchurIndex { n, r, comps, position, modules, group: SymmetricGroup::get(r), reps }
    }

    pub fn get(n: usize, r: usize) -> Arc<SchurIndex> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<SchurIndex>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(s) = cache.lock().get(&(n, r)) {
            return s.clone();
        }
        let s = Arc::new(SchurIndex::new(n, r));
        cache.lock().entry((n, r)).or_insert(s).clone()
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.comps
    }

    pub fn composition(&self, k: u16) -> &Composition {
        &self.comps[k as usize]
    }

    pub fn position(&self, c: &Composition) -> Option<u16> {
        self.position.get(c).map(|&k| k as u16)
    }

    pub fn module(&self, k: u16) -> &PermModule {
        &self.modules[k as usize]
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    fn rep_data(&self, lam: u16, mu: u16) -> &[(u32, Option<u8>)] {
        self.reps[lam as usize * self.comps.len() + mu as usize].get_or_init(|| {
            let (l, m) = (&self.comps[lam as usize], &self.comps[mu as usize]);
            double_coset_reps(l, m)
                .into_iter()
                .map(|d| {
                    let level = omega_level(l, m, &d).expect("distinguished").map(|x| x as u8);
                    (self.group.index_of(&d) as u32, level)
                })
                .collect()
        })
    }

    /// `{ψ^d_λμ : d ∈ D_λμ}`.
    pub fn labels(&self, lam: u16, mu: u16) -> impl Iterator<Item = SchurLabel> + '_ {
        self.rep_data(lam, mu).iter().map(move |&(d, _)| SchurLabel { lam, mu, d })
    }

    /// `{ψ^d_λμ : d ∈ Ω^{⪰m}_λμ}`.
    pub fn truncated(&self, lam: u16, mu: u16, m: usize) -> impl Iterator<Item = SchurLabel> + '_ {
        self.rep_data(lam, mu)
            .iter()
            .filter(move |(_, level)| level.is_some_and(|l| l as usize >= m))
            .map(move |&(d, _)| SchurLabel { lam, mu, d })
    }

    pub fn level(&self, label: SchurLabel) -> Option<usize> {
        let data = self.rep_data(label.lam, label.mu);
        let k = data.binary_search_by_key(&label.d, |(d, _)| *d).expect("label is a basis element");
        data[k].1.map(usize::from)
    }

    pub fn perm(&self, label: SchurLabel) -> &Permutation {
        self.group.element(label.d as usize)
    }

    pub fn idempotent(&self, lam: u16) -> SchurLabel {
        SchurLabel { lam, mu: lam, d: 0 }
    }

    pub fn is_idempotent(&self, label: SchurLabel) -> bool {
        label.lam == label.mu && label.d == 0
    }

    pub fn all_labels(&self) -> Vec<SchurLabel> {
        let k = self.comps.len() as u16;
        (0..k).flat_map(|l| (0..k).flat_map(move |m| self.labels(l, m).collect::<Vec<_>>())).collect()
    }

    pub fn dimension(&self) -> usize {
        let k = self.comps.len() as u16;
        (0..k).flat_map(|l| (0..k).map(move |m| (l, m))).map(|(l, m)| self.rep_data(l, m).len()).sum()
    }

    /// `λ|μ|d` with comma-joined parts and `d` in one-line notation.
    pub fn label_key(&self, label: SchurLabel) -> String {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        format!(
            "{}|{}|{}",
            join(self.composition(label.lam).parts()),
            join(self.composition(label.mu).parts()),
            join(&self.perm(label).one_line())
        )
    }

    pub fn parse_label_key(&self, key: &str) -> Option<SchurLabel> {
        let mut it = key.split('|');
        let lam = self.position(&Composition::parse(it.next()?).ok()?)?;
        let mu = self.position(&Composition::parse(it.next()?).ok()?)?;
        let d: Vec<usize> = it.next()?.split(',').map(|x| x.parse().ok()).collect::<Option<_>>()?;
        if it.next().is_some() {
            return None;
        }
        let d = Permutation::from_one_line(&d).ok()?;
        if d.degree() != self.r {
            return None;
        }
        let label = SchurLabel { lam, mu, d: self.group.index_of(&d) as u32 };
        self.rep_data(lam, mu).binary_search_by_key(&label.d, |(d, _)| *d).ok()?;
        Some(label)
    }

    /// `ψ^{d⁻¹}_μλ`.
    pub fn xi_label(&self, label: SchurLabel) -> SchurLabel {
        let inv = self.perm(label).inverse();
        let out = SchurLabel { lam: label.mu, mu: label.lam, d: self.group.index_of(&inv) as u32 };
        debug_assert!(self.rep_data(out.lam, out.mu).binary_search_by_key(&out.d, |(d, _)| *d).is_ok());
        out
    }
}

/// Linear combination of basis labels.
#[derive(Clone, PartialEq, Eq)]
pub struct SchurElement<E> {
    pub terms: BTreeMap<SchurLabel, E>,
}

impl<E: Clone> SchurElement<E> {
    pub fn zero() -> Self {
        SchurElement { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<E: fmt::Debug> fmt::Debug for SchurElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub type Product<E> = Arc<[(SchurLabel, E)]>;

/// `S(n, r)` over a ring, with memoised homomorphism matrices and
/// structure constants.
pub struct SchurAlgebra<R: Ring> {
    pub ring: R,
    pub index: Arc<SchurIndex>,
    homs: DashMap<SchurLabel, Arc<HomMatrix<R::Elem>>>,
    products: DashMap<(SchurLabel, SchurLabel), Product<R::Elem>>,
}

impl<R: Ring> SchurAlgebra<R> {
    pub fn new(ring: R, n: usize, r: usize) -> Self {
        SchurAlgebra { ring, index: SchurIndex::get(n, r), homs: DashMap::new(), products: DashMap::new() }
    }

    pub fn n(&self) -> usize {
        self.index.n
    }

    pub fn r(&self) -> usize {
        self.index.r
    }

    pub fn hom(&self, label: SchurLabel) -> Arc<HomMatrix<R::Elem>> {
        if let Some(h) = self.homs.get(&label) {
            return h.clone();
        }
        let idx = &self.index;
        let h = Arc::new(
            psi_hom(&self.ring, idx.module(label.lam), idx.module(label.mu), idx.perm(label)).expect("basis label"),
        );
        self.homs.entry(label).or_insert(h).clone()
    }

    /// Drops memoised homomorphism matrices (structure constants are kept).
    pub fn clear_homs(&self) {
        self.homs.clear();
    }

    /// `ψ^d_λμ(x_μ)` in the basis of `M^λ`: the 0/1 indicator of the double
    /// coset, as positions.
    fn image_of_generator(&self, label: SchurLabel) -> Vec<usize> {
        let idx = &self.index;
        crate::hecke::double_coset_in_basis(idx.module(label.lam), idx.composition(label.mu), idx.perm(label))
    }

    /// `ψ_a ∘ ψ_b` expanded in the basis. Zero unless the source of `a` is
    /// the target of `b`. The coefficient of `ψ^d_λν` is read off at the
    /// basis vector `x_λ T_d` of the image of `x_ν` (double cosets have
    /// disjoint supports) and the expansion is verified in full.
    pub fn compose(&self, a: SchurLabel, b: SchurLabel) -> Product<R::Elem> {
        if a.mu != b.lam {
            return Arc::from(Vec::new());
        }
        if let Some(p) = self.products.get(&(a, b)) {
            return p.clone();
        }
        let ring = &self.ring;
        let idx = &self.index;
        let ha = self.hom(a);
        let target = idx.module(a.lam);
        let mut generator = vec![ring.zero(); idx.module(b.lam).dim()];
        for j in self.image_of_generator(b) {
            generator[j] = ring.one();
        }
        let image = ha.apply(ring, &generator);
        let mut terms = Vec::new();
        let mut check = vec![ring.zero(); target.dim()];
        for label in idx.labels(a.lam, b.mu) {
            let pos = target.position(idx.perm(label)).expect("D_λν ⊆ D_λ");
            let coef = image[pos].clone();
            if ring.is_zero(&coef) {
                continue;
            }
            for j in self.image_of_generator(label) {
                ring.add_assign(&mut check[j], &coef);
            }
            terms.push((label, coef));
        }
        assert!(check == image, "product {a:?}·{b:?} is not a combination of basis maps");
        let p: Product<R::Elem> = Arc::from(terms);
        self.products.entry((a, b)).or_insert(p).clone()
    }

    pub(crate) fn seed_product(&self, a: SchurLabel, b: SchurLabel, p: Vec<(SchurLabel, R::Elem)>) {
        self.products.insert((a, b), Arc::from(p));
    }

    pub fn cached_products(&self) -> usize {
        self.products.len()
    }

    pub fn basis_element(&self, label: SchurLabel) -> SchurElement<R::Elem> {
        let mut terms = BTreeMap::new();
        terms.insert(label, self.ring.one());
        SchurElement { terms }
    }

    pub fn add_to(&self, acc: &mut SchurElement<R::Elem>, label: SchurLabel, c: R::Elem) {
        let ring = &self.ring;
        if ring.is_zero(&c) {
            return;
        }
        let v = acc.terms.entry(label).or_insert_with(|| ring.zero());
        *v = ring.add(v, &c);
        if ring.is_zero(v) {
            acc.terms.remove(&label);
        }
    }

    pub fn multiply(&self, x: &SchurElement<R::Elem>, y: &SchurElement<R::Elem>) -> SchurElement<R::Elem> {
        let mut out = SchurElement::zero();
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                let cab = self.ring.mul(ca, cb);
                for (l, c) in self.compose(*a, *b).iter() {
                    self.add_to(&mut out, *l, self.ring.mul(&cab, c));
                }
            }
        }
        out
    }

    /// `e = Σ_λ ψ_λ`.
    pub fn unit(&self) -> SchurElement<R::Elem> {
        let mut out = SchurElement::zero();
        for k in 0..self.index.compositions().len() as u16 {
            self.add_to(&mut out, self.index.idempotent(k), self.ring.one());
        }
        out
    }

    /// The anti-automorphism `ψ^d_λμ ↦ ψ^{d⁻¹}_μλ`.
    pub fn xi(&self, x: &SchurElement<R::Elem>) -> SchurElement<R::Elem> {
        SchurElement { terms: x.terms.iter().map(|(l, c)| (self.index.xi_label(*l), c.clone())).collect() }
    }

    /// Basis of the ideal `J_m` (`m = 0` gives the Borel subalgebra `S⁺`).
    pub fn ideal_basis(&self, m: usize) -> Vec<SchurLabel> {
        ideal_basis(&self.index, m)
    }

    /// Every structure constant `ψ_a ψ_b` with matching middle weight.
    pub fn full_table(&self) -> StructureConstantTable<R::Elem> {
        let labels = self.index.all_labels();
        let pairs: Vec<(SchurLabel, SchurLabel)> = labels
            .iter()
            .flat_map(|a| labels.iter().filter(move |b| b.lam == a.mu).map(move |b| (*a, *b)))
            .collect();
        let entries: BTreeMap<(SchurLabel, SchurLabel), Vec<(SchurLabel, R::Elem)>> =
            pairs.par_iter().map(|&(a, b)| ((a, b), self.compose(a, b).to_vec())).collect();
        StructureConstantTable { n: self.n(), r: self.r(), spec: self.ring.spec(), entries }
    }

    /// A product `ψ_a ψ_b` of Borel basis elements with a term `ψ_c` of level
    /// below `level(a) + level(b)`, as `(a, b, c)`; `None` if there is none.
    pub fn triangularity_violation(&self) -> Option<(SchurLabel, SchurLabel, SchurLabel)> {
        let idx = &self.index;
        let borel = self.ideal_basis(0);
        borel.par_iter().find_map_first(|&a| {
            let la = idx.level(a)?;
            borel.iter().filter(|b| b.lam == a.mu).find_map(|&b| {
                let floor = la + idx.level(b).unwrap_or(0);
                let product = self.compose(a, b);
                product.iter().find(|(c, _)| idx.level(*c).is_none_or(|l| l < floor)).map(|(c, _)| (a, b, *c))
            })
        })
    }

    /// Smallest `N` with `J_1^N = 0` (requires a field).
    pub fn radical_nilpotency(&self) -> usize {
        assert!(self.ring.is_field(), "nilpotency degree is computed over a field");
        let j1 = self.ideal_basis(1);
        let coords: HashMap<SchurLabel, usize> = self.index.all_labels().into_iter().enumerate().map(|(k, l)| (l, k)).collect();
        let to_row = |x: &SchurElement<R::Elem>| -> Vec<(usize, R::Elem)> {
            let mut row: Vec<(usize, R::Elem)> = x.terms.iter().map(|(l, c)| (coords[l], c.clone())).collect();
            row.sort_by_key(|(k, _)| *k);
            row
        };
        let mut power: Vec<SchurElement<R::Elem>> = j1.iter().map(|l| self.basis_element(*l)).collect();
        let mut k = 1;
        loop {
            if power.is_empty() {
                return k;
            }
            let mut ech = Echelon::new();
            let mut next = Vec::new();
            for x in &power {
                for l in &j1 {
                    let p = self.multiply(x, &self.basis_element(*l));
                    if !p.is_zero() && ech.insert(&self.ring, to_row(&p)) {
                        next.push(p);
                    }
                }
            }
            power = next;
            k += 1;
        }
    }
}

pub fn ideal_basis(index: &SchurIndex, m: usize) -> Vec<SchurLabel> {
    let k = index.compositions().len() as u16;
    (0..k)
        .flat_map(|l| (0..k).map(move |mu| (l, mu)))
        .flat_map(|(l, mu)| index.truncated(l, mu, m).collect::<Vec<_>>())
        .collect()
}

/// `Σ_{λ,μ} |D_λμ|`.
pub fn schur_dimension(n: usize, r: usize) -> usize {
    SchurIndex::get(n, r).dimension()
}

/// `{ψ^d_νμ : d ∈ Ω^{⪰m}_νμ}`.
pub fn weight_truncate(index: &SchurIndex, nu: &Composition, m: usize, mu: &Composition) -> Vec<SchurLabel> {
    match (index.position(nu), index.position(mu)) {
        (Some(a), Some(b)) => index.truncated(a, b, m).collect(),
        _ => Vec::new(),
    }
}
