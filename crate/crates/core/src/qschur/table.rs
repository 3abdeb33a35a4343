use std::collections::BTreeMap;

use thiserror::Error;

use crate::ring::{Ring, RingSpec};

use super::{SchurAlgebra, SchurLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("table is for n={0}, r={1}, {2}")]
    Mismatch(usize, usize, String),
    #[error("unknown basis label {0:?}")]
    BadLabel(String),
    #[error("cannot parse coefficient {0:?}")]
    BadCoefficient(String),
}

/// All products `ψ_a ψ_b` with `a`'s source equal to `b`'s target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstantTable<E> {
    pub n: usize,
    pub r: usize,
    pub spec: RingSpec,
    pub entries: BTreeMap<(SchurLabel, SchurLabel), Vec<(SchurLabel, E)>>,
}

/// Portable form: `"λ|μ|d ⊗ λ'|μ'|d'"` → `[("λ|ν|d''", "coefficient")]`.
pub type TextTable = BTreeMap<String, Vec<(String, String)>>;

impl<E: Clone> StructureConstantTable<E> {
    pub fn to_text<R: Ring<Elem = E>>(&self, alg: &SchurAlgebra<R>) -> TextTable {
        let idx = &alg.index;
        self.entries
            .iter()
            .map(|((a, b), terms)| {
                (
                    format!("{} ⊗ {}", idx.label_key(*a), idx.label_key(*b)),
                    terms.iter().map(|(l, c)| (idx.label_key(*l), alg.ring.format(c))).collect(),
                )
            })
            .collect()
    }

    pub fn from_text<R: Ring<Elem = E>>(alg: &SchurAlgebra<R>, text: &TextTable) -> Result<Self, TableError> {
        let idx = &alg.index;
        let label = |s: &str| idx.parse_label_key(s.trim()).ok_or_else(|| TableError::BadLabel(s.to_string()));
        let mut entries = BTreeMap::new();
        for (key, terms) in text {
            let (a, b) = key.split_once('⊗').ok_or_else(|| TableError::BadLabel(key.clone()))?;
            let (a, b) = (label(a)?, label(b)?);
            if a.mu != b.lam {
                return Err(TableError::BadLabel(key.clone()));
            }
            let mut out = Vec::with_capacity(terms.len());
            for (l, c) in terms {
                let l = label(l)?;
                if l.lam != a.lam || l.mu != b.mu {
                    return Err(TableError::BadLabel(key.clone()));
                }
                let c = alg.ring.parse_elem(c).ok_or_else(|| TableError::BadCoefficient(c.clone()))?;
                out.push((l, c));
            }
            entries.insert((a, b), out);
        }
        Ok(StructureConstantTable { n: idx.n, r: idx.r, spec: alg.ring.spec(), entries })
    }
}

impl<R: Ring> SchurAlgebra<R> {
    /// The structure constants computed (or loaded) so far.
    pub fn cached_table(&self) -> StructureConstantTable<R::Elem> {
        let entries = self.products.iter().map(|e| (*e.key(), e.value().to_vec())).collect();
        StructureConstantTable { n: self.n(), r: self.r(), spec: self.ring.spec(), entries }
    }

    /// Seeds the product cache from a table built for the same parameters.
    pub fn load_table(&self, table: &StructureConstantTable<R::Elem>) -> Result<(), TableError> {
        if (table.n, table.r, &table.spec) != (self.n(), self.r(), &self.ring.spec()) {
            return Err(TableError::Mismatch(table.n, table.r, table.spec.to_string()));
        }
        for ((a, b), terms) in &table.entries {
            self.seed_product(*a, *b, terms.clone());
        }
        Ok(())
    }
}
