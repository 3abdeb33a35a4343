//! Sparse Gaussian elimination with Markowitz-style pivoting.
//!
//! Rows are eliminated greedily: the shortest remaining row supplies the
//! pivot, taken in its least populated admissible column. Eliminating a
//! pivot `(r, c)` replaces every other row touching `c` by its Schur
//! complement, then drops row `r` and column `c`. Over a field every nonzero
//! entry is admissible and the pivot count is the rank; over the integers
//! only units are admissible, so each pivot contributes an invariant
//! factor 1 and whatever is left over is handed to a dense Smith reduction.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use crate::ring::Ring;

use super::elim::axpy;

type Row<E> = Vec<(usize, E)>;

/// Result of [`eliminate`]: the number of pivots taken and the rows that
/// still have entries but no admissible pivot.
pub struct Elimination<E> {
    pub pivots: usize,
    /// Columns that received a pivot, in elimination order.
    pub pivot_cols: Vec<usize>,
    pub remainder: Vec<Row<E>>,
}

/// Rows to update in one step before switching to parallel updates.
const PAR_THRESHOLD: usize = 64;

pub fn eliminate<R, F>(ring: &R, cols: usize, rows: Vec<Row<R::Elem>>, admissible: F) -> Elimination<R::Elem>
where
    R: Ring,
    F: Fn(&R::Elem) -> bool + Sync,
{
    let mut rows: Vec<Option<Row<R::Elem>>> = rows.into_iter().map(|r| (!r.is_empty()).then_some(r)).collect();
    // col_rows[c] may contain stale rows; entries are checked on use.
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); cols];
    let mut heap = BinaryHeap::new();
    for (i, row) in rows.iter().enumerate() {
        if let Some(row) = row {
            for (c, _) in row {
                col_rows[*c].push(i);
            }
            heap.push(Reverse((row.len(), i)));
        }
    }
    let mut pivot_cols = Vec::new();
    while let Some(Reverse((len, r))) = heap.pop() {
        let Some(row) = rows[r].as_ref() else { continue };
        if row.len() != len {
            continue;
        }
        if row.is_empty() {
            rows[r] = None;
            continue;
        }
        let best = row
            .iter()
            .enumerate()
            .filter(|(_, (_, v))| admissible(v))
            .min_by_key(|(_, (c, _))| (col_rows[*c].len(), *c))
            .map(|(k, _)| k);
        let Some(k) = best else {
            // Left for the caller unless a later update gives it a unit.
            continue;
        };
        let pivot_row = rows[r].take().unwrap();
        let (c, pv) = pivot_row[k].clone();
        let inv = ring.inv(&pv).expect("admissible pivots are units");
        pivot_cols.push(c);
        let mut targets = std::mem::take(&mut col_rows[c]);
        targets.sort_unstable();
        targets.dedup();
        targets.retain(|&i| rows[i].as_ref().is_some_and(|row| row.binary_search_by_key(&c, |(j, _)| *j).is_ok()));
        let update = |i: usize, row: &Row<R::Elem>| -> (usize, Row<R::Elem>) {
            let a = &row[row.binary_search_by_key(&c, |(j, _)| *j).unwrap()].1;
            let coef = ring.neg(&ring.mul(a, &inv));
            (i, axpy(ring, row, &coef, &pivot_row))
        };
        let updated: Vec<(usize, Row<R::Elem>)> = if targets.len() >= PAR_THRESHOLD {
            targets.par_iter().map(|&i| update(i, rows[i].as_ref().unwrap())).collect()
        } else {
            targets.iter().map(|&i| update(i, rows[i].as_ref().unwrap())).collect()
        };
        for (i, new_row) in updated {
            let old_cols: Vec<usize> = rows[i].as_ref().unwrap().iter().map(|(j, _)| *j).collect();
            for (j, _) in &new_row {
                if old_cols.binary_search(j).is_err() {
                    col_rows[*j].push(i);
                }
            }
            heap.push(Reverse((new_row.len(), i)));
            rows[i] = Some(new_row);
        }
    }
    let remainder = rows.into_iter().flatten().filter(|r| !r.is_empty()).collect();
    Elimination { pivots: pivot_cols.len(), pivot_cols, remainder }
}

/// Rank over a field by sparse elimination.
pub fn sparse_rank<R: Ring>(ring: &R, cols: usize, rows: Vec<Row<R::Elem>>) -> usize {
    debug_assert!(ring.is_field());
    let e = eliminate(ring, cols, rows, |v| !ring.is_zero(v));
    debug_assert!(e.remainder.is_empty());
    e.pivots
}
