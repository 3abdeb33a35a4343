//! Smith normal form over the integers.
//!
//! Unit pivots are removed first by sparse elimination (each contributes an
//! invariant factor 1); the remaining block is reduced densely, always
//! pivoting on the entry of least absolute value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::{Integers, Ring};

use super::sparse::eliminate;
use super::Matrix;

/// Invariant factors `d_1 | d_2 | ... | d_k`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// True when every invariant factor is 1 (no torsion in the cokernel).
    pub fn is_unimodular(&self) -> bool {
        self.factors.iter().all(One::is_one)
    }
}

pub fn smith_normal_form(m: &Matrix<BigInt>) -> SmithForm {
    let z = Integers { q_positive: true };
    let elim = eliminate(&z, m.cols(), m.row_data().to_vec(), |v| z.is_unit(v));
    let mut factors = vec![BigInt::one(); elim.pivots];
    if !elim.remainder.is_empty() {
        let mut used: Vec<usize> = elim.remainder.iter().flat_map(|r| r.iter().map(|(j, _)| *j)).collect();
        used.sort_unstable();
        used.dedup();
        let dense: Vec<Vec<BigInt>> = elim
            .remainder
            .iter()
            .map(|r| {
                let mut out = vec![BigInt::zero(); used.len()];
                for (j, v) in r {
                    out[used.binary_search(j).unwrap()] = v.clone();
                }
                out
            })
            .collect();
        factors.extend(dense_smith(dense));
    }
    SmithForm { factors }
}

fn dense_smith(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_entry(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let quot = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &a[i][j] - &quot * &a[t][j];
                        a[i][j] = v;
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let quot = a[t][j].div_floor(&a[t][t]);
                    for i in t..rows {
                        let v = &a[i][j] - &quot * &a[i][t];
                        a[i][j] = v;
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // A nonzero remainder is smaller than the pivot: move it in.
                let (pi, pj) = min_in_cross(&a, t);
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                continue;
            }
            // Divisibility: fold a row with a non-multiple into the pivot row.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = &a[t][j] + &a[i][j];
                        a[t][j] = v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

fn min_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t..a.len() {
        let v = &a[i][t];
        if !v.is_zero() && v.abs() < a[best.0][best.1].abs() {
            best = (i, t);
        }
    }
    for j in t..a[t].len() {
        let v = &a[t][j];
        if !v.is_zero() && v.abs() < a[best.0][best.1].abs() {
            best = (t, j);
        }
    }
    best
}
