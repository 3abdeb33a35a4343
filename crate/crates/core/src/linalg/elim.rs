use std::collections::HashMap;

use crate::ring::Ring;

use super::{LinalgError, Matrix};

/// Sparse `a + c * b` on sorted rows.
pub fn axpy<R: Ring>(ring: &R, a: &[(usize, R::Elem)], c: &R::Elem, b: &[(usize, R::Elem)]) -> Vec<(usize, R::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = ring.mul(c, &b[j].1);
            if !ring.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = ring.add(&a[i].1, &ring.mul(c, &b[j].1));
            if !ring.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form built by inserting rows one at a time.
///
/// Works over any Euclidean ring: when a pivot does not divide the
/// incoming leading entry the two rows are combined by Euclid's algorithm,
/// so the stored rows always form a basis of the row lattice.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pivots: HashMap<usize, Vec<(usize, E)>>,
}

impl<E: Clone> Default for Echelon<E> {
    fn default() -> Self {
        Echelon { pivots: HashMap::new() }
    }
}

impl<E: Clone> Echelon<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the current rows; returns `true` if it was
    /// independent (and has been added).
    pub fn insert<R: Ring<Elem = E>>(&mut self, ring: &R, mut v: Vec<(usize, E)>) -> bool {
        loop {
            let Some((col, lead)) = v.first().cloned() else {
                return false;
            };
            let Some(pivot) = self.pivots.get_mut(&col) else {
                let u = ring.canonical_unit(&lead);
                if !ring.is_one(&u) {
                    for (_, x) in v.iter_mut() {
                        *x = ring.mul(&u, x);
                    }
                }
                self.pivots.insert(col, v);
                return true;
            };
            let (quot, rem) = ring.div_rem(&lead, &pivot[0].1);
            v = axpy(ring, &v, &ring.neg(&quot), pivot);
            if !ring.is_zero(&rem) {
                // v now leads with the (smaller) remainder: it becomes the pivot.
                std::mem::swap(pivot, &mut v);
            }
        }
    }

    /// Rows sorted by leading column.
    pub fn rows(&self) -> Vec<Vec<(usize, E)>> {
        let mut cols: Vec<&usize> = self.pivots.keys().collect();
        cols.sort();
        cols.into_iter().map(|c| self.pivots[c].clone()).collect()
    }
}

/// Rank over a field.
pub fn rank<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<usize, LinalgError> {
    if !ring.is_field() {
        return Err(LinalgError::NotAField(ring.spec().kind_name()));
    }
    Ok(super::sparse::sparse_rank(ring, m.cols(), m.row_data().to_vec()))
}

/// Basis of the row span (a lattice basis over the integers).
pub fn row_space_basis<R: Ring>(ring: &R, rows: &[Vec<(usize, R::Elem)>]) -> Vec<Vec<(usize, R::Elem)>> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(ring, r.clone());
    }
    ech.rows()
}

/// Some `x` with `m * x = b`, or `None` if the system is inconsistent.
pub fn solve<R: Ring>(ring: &R, m: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Option<Matrix<R::Elem>>, LinalgError> {
    if !ring.is_field() {
        return Err(LinalgError::NotAField(ring.spec().kind_name()));
    }
    if m.rows() != b.rows() {
        return Err(LinalgError::DimensionMismatch {
            op: "solve",
            left: (m.rows(), m.cols()),
            right: (b.rows(), b.cols()),
        });
    }
    let (n, k) = (m.cols(), b.cols());
    let mut aug: Vec<Vec<R::Elem>> = m
        .to_dense(ring)
        .into_iter()
        .zip(b.to_dense(ring))
        .map(|(mut a, bb)| {
            a.extend(bb);
            a
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..aug.len()).find(|&i| !ring.is_zero(&aug[i][col])) else {
            continue;
        };
        aug.swap(row, p);
        let inv = ring.inv(&aug[row][col]).expect("field");
        for x in aug[row].iter_mut() {
            *x = ring.mul(&inv, x);
        }
        for i in 0..aug.len() {
            if i != row && !ring.is_zero(&aug[i][col]) {
                let f = aug[i][col].clone();
                for j in 0..n + k {
                    let t = ring.mul(&f, &aug[row][j]);
                    aug[i][j] = ring.sub(&aug[i][j], &t);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    // Inconsistent if a zero row of m meets a nonzero entry of b.
    if aug[row..].iter().any(|r| r[n..].iter().any(|x| !ring.is_zero(x))) {
        return Ok(None);
    }
    let mut x = vec![vec![ring.zero(); k]; n];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[i][n..].to_vec();
    }
    Ok(Some(Matrix::from_dense(ring, &x).with_shape(n, k)))
}

impl<E: Clone> Matrix<E> {
    fn with_shape(self, rows: usize, cols: usize) -> Self {
        if self.rows() == rows && self.cols() == cols {
            self
        } else {
            Matrix::zeros(rows, cols)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, PrimeField, Rational, Rationals};
    use num_bigint::BigInt;

    fn q() -> Rationals {
        Rationals::new(Rational::from_int(2))
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        Matrix::from_dense(&q(), &dense)
    }

    #[test]
    fn ranks() {
        let r = q();
        assert_eq!(rank(&r, &Matrix::identity(&r, 3)).unwrap(), 3);
        assert_eq!(rank(&r, &Matrix::zeros(3, 4)).unwrap(), 0);
        assert_eq!(rank(&r, &qm(&[&[1, 2], &[2, 4]])).unwrap(), 1);
    }

    #[test]
    fn rank_rejects_integers() {
        let z = Integers { q_positive: true };
        let m = Matrix::identity(&z, 2);
        assert!(matches!(rank(&z, &m), Err(LinalgError::NotAField(_))));
    }

    #[test]
    fn solve_examples() {
        let r = q();
        let b = qm(&[&[1], &[5]]);
        assert_eq!(solve(&r, &Matrix::identity(&r, 2), &b).unwrap().unwrap(), b);
        let x = solve(&r, &qm(&[&[2]]), &qm(&[&[1]])).unwrap().unwrap();
        assert_eq!(x.get(0, 0), Some(&Rational::new(1, 2)));
        assert!(solve(&r, &qm(&[&[1, 1], &[1, 1]]), &qm(&[&[1], &[2]])).unwrap().is_none());
    }

    #[test]
    fn lattice_basis_uses_gcd() {
        let z = Integers { q_positive: true };
        let rows = vec![vec![(0, BigInt::from(4)), (1, BigInt::from(1))], vec![(0, BigInt::from(6))]];
        let basis = row_space_basis(&z, &rows);
        assert_eq!(basis.len(), 2);
        // The lattice contains (2, *) so the pivot in column 0 must be 2.
        assert_eq!(basis[0][0], (0, BigInt::from(2)));
    }

    #[test]
    fn modular_rank() {
        let f = PrimeField::new(5, 2);
        let m = Matrix::from_dense(&f, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&f, &m).unwrap(), 1);
        let m = Matrix::from_dense(&f, &[vec![1, 2], vec![3, 1]]);
        // det = 1 - 6 = -5 = 0 mod 5
        assert_eq!(rank(&f, &m).unwrap(), 1);
    }
}
