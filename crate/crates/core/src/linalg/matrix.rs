use std::collections::BTreeMap;

use crate::ring::Ring;

use super::LinalgError;

/// Sparse matrix stored row-major; every stored entry is nonzero and rows
/// are sorted by column, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, E)>>,
}

impl<E: Clone> Matrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Builds a matrix from `(row, col, value)` triples, summing repeats.
    pub fn from_entries<R, I>(ring: &R, rows: usize, cols: usize, entries: I) -> Self
    where
        R: Ring<Elem = E>,
        I: IntoIterator<Item = (usize, usize, E)>,
    {
        let mut acc: Vec<BTreeMap<usize, E>> = vec![BTreeMap::new(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry ({i},{j}) outside {rows}x{cols}");
            if ring.is_zero(&v) {
                continue;
            }
            acc[i]
                .entry(j)
                .and_modify(|e| ring.add_assign(e, &v))
                .or_insert(v);
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect())
            .collect();
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from already-sorted sparse rows (zeros are dropped).
    pub fn from_sparse_rows<R: Ring<Elem = E>>(ring: &R, cols: usize, rows: Vec<Vec<(usize, E)>>) -> Self {
        let data: Vec<Vec<(usize, E)>> = rows
            .into_iter()
            .map(|mut row| {
                row.retain(|(_, v)| !ring.is_zero(v));
                row.sort_by_key(|(j, _)| *j);
                debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0), "duplicate column");
                debug_assert!(row.iter().all(|(j, _)| *j < cols));
                row
            })
            .collect();
        Matrix { rows: data.len(), cols, data }
    }

    pub fn from_dense<R: Ring<Elem = E>>(ring: &R, dense: &[Vec<E>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        Self::from_entries(
            ring,
            rows,
            cols,
            dense
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))),
        )
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, ring.one())]).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, E)] {
        &self.data[i]
    }

    pub fn row_data(&self) -> &[Vec<(usize, E)>] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<Vec<(usize, E)>> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&E> {
        let row = &self.data[i];
        row.binary_search_by_key(&j, |(c, _)| *c).ok().map(|k| &row[k].1)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, E)>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Overwrites one entry (setting zero removes it).
    pub fn set<R: Ring<Elem = E>>(&mut self, ring: &R, i: usize, j: usize, v: E) {
        assert!(i < self.rows && j < self.cols);
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => {
                if ring.is_zero(&v) {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !ring.is_zero(&v) {
                    row.insert(k, (j, v));
                }
            }
        }
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Matrix<E>) -> Result<Matrix<E>, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, E> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        let prod = ring.mul(a, b);
                        acc.entry(*j)
                            .and_modify(|e| ring.add_assign(e, &prod))
                            .or_insert(prod);
                    }
                }
                acc.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect()
            })
            .collect();
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Matrix<E>) -> Result<Matrix<E>, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch {
                op: "add",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| super::elim::axpy(ring, a, &ring.one(), b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Matrix<E> {
        let data = self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(j, v)| (*j, ring.mul(c, v)))
                    .filter(|(_, v)| !ring.is_zero(v))
                    .collect()
            })
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, other: &Matrix<E>) -> Result<Matrix<E>, LinalgError> {
        self.add(ring, &other.scale(ring, &ring.from_i64(-1)))
    }

    /// Entry-wise conversion into another ring; `None` if any entry fails.
    pub fn try_map<F, T>(&self, mut f: F) -> Option<Matrix<T>>
    where
        F: FnMut(&E) -> Option<T>,
        T: Clone,
        E: Clone,
    {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut out = Vec::with_capacity(row.len());
            for (j, v) in row {
                out.push((*j, f(v)?));
            }
            data.push(out);
        }
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Reduction modulo `p`; entries that vanish are dropped.
    pub fn reduce_mod<R: Ring<Elem = E>>(&self, ring: &R, p: u64) -> Option<Matrix<u64>> {
        let m = self.try_map(|v| ring.reduce_mod(v, p))?;
        let data = m.data.into_iter().map(|row| row.into_iter().filter(|(_, v)| *v != 0).collect()).collect();
        Some(Matrix { rows: m.rows, cols: m.cols, data })
    }

    pub fn to_dense<R: Ring<Elem = E>>(&self, ring: &R) -> Vec<Vec<E>> {
        self.data
            .iter()
            .map(|row| {
                let mut out = vec![ring.zero(); self.cols];
                for (j, v) in row {
                    out[*j] = v.clone();
                }
                out
            })
            .collect()
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix<E> {
        let mut col_map = vec![usize::MAX; self.cols];
        for (new, &old) in cols.iter().enumerate() {
            col_map[old] = new;
        }
        let data = rows
            .iter()
            .map(|&i| {
                let mut row: Vec<(usize, E)> = self.data[i]
                    .iter()
                    .filter(|(j, _)| col_map[*j] != usize::MAX)
                    .map(|(j, v)| (col_map[*j], v.clone()))
                    .collect();
                row.sort_by_key(|(j, _)| *j);
                row
            })
            .collect();
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }
}
