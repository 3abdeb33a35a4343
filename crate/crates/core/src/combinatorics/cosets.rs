use std::fmt;

use super::{Composition, CombinatoricsError, Permutation, SymmetricGroup};

/// `block_of(λ)[k]` is the (0-based) block of `λ` containing the 0-based
/// point `k`.
pub fn block_of(lam: &Composition) -> Vec<usize> {
    lam.parts()
        .iter()
        .enumerate()
        .flat_map(|(s, &p)| std::iter::repeat_n(s, p))
        .collect()
}

/// The Young subgroup `S_λ`, in group order.
pub fn young_subgroup(lam: &Composition) -> Vec<Permutation> {
    let blocks = block_of(lam);
    SymmetricGroup::get(lam.total())
        .elements()
        .iter()
        .filter(|w| (0..blocks.len()).all(|k| blocks[w.apply(k)] == blocks[k]))
        .cloned()
        .collect()
}

/// `d ∈ D_λ`: the minimal element of its right coset `S_λ d`, i.e. `d⁻¹`
/// is increasing on every block of `λ`.
pub fn is_distinguished(lam: &Composition, d: &Permutation) -> bool {
    let blocks = block_of(lam);
    let inv = d.inverse();
    (1..blocks.len()).all(|v| blocks[v - 1] != blocks[v] || inv.apply(v - 1) < inv.apply(v))
}

/// `d ∈ D_λμ = D_λ ∩ D_μ⁻¹`: additionally `d` is increasing on the blocks
/// of `μ`.
pub fn is_double_coset_rep(lam: &Composition, mu: &Composition, d: &Permutation) -> bool {
    let blocks = block_of(mu);
    is_distinguished(lam, d) && (1..blocks.len()).all(|k| blocks[k - 1] != blocks[k] || d.apply(k - 1) < d.apply(k))
}

/// `D_λ` in length-then-lexicographic order; the basis labels of `M^λ`.
pub fn min_coset_reps(lam: &Composition) -> Vec<Permutation> {
    SymmetricGroup::get(lam.total())
        .elements()
        .iter()
        .filter(|d| is_distinguished(lam, d))
        .cloned()
        .collect()
}

/// `D_λμ` in length-then-lexicographic order.
pub fn double_coset_reps(lam: &Composition, mu: &Composition) -> Vec<Permutation> {
    assert_eq!(lam.total(), mu.total());
    SymmetricGroup::get(lam.total())
        .elements()
        .iter()
        .filter(|d| is_double_coset_rep(lam, mu, d))
        .cloned()
        .collect()
}

/// A sequence `(i_1, ..., i_r)` with entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    pub entries: Vec<usize>,
}

impl MultiIndex {
    /// `(i·w)_k = i_{w(k)}`.
    pub fn act(&self, w: &Permutation) -> MultiIndex {
        MultiIndex { entries: (0..self.entries.len()).map(|k| self.entries[w.apply(k)]).collect() }
    }

    pub fn weight(&self, n: usize) -> Composition {
        let mut parts = vec![0; n];
        for &e in &self.entries {
            parts[e - 1] += 1;
        }
        Composition::new(parts)
    }
}

/// `i_λ = (1^{λ_1}, 2^{λ_2}, ...)`.
pub fn canonical_multi_index(lam: &Composition) -> MultiIndex {
    MultiIndex { entries: block_of(lam).into_iter().map(|s| s + 1).collect() }
}

/// `ω_st = #{k : i_k = s, j_k = t}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightMatrix {
    pub omega: Vec<Vec<usize>>,
}

impl WeightMatrix {
    pub fn is_upper_triangular(&self) -> bool {
        self.omega.iter().enumerate().all(|(s, row)| row[..s].iter().all(|&x| x == 0))
    }

    /// `Σ_{k≤l} (l−k) ω_kl` when upper triangular.
    pub fn level(&self) -> Option<usize> {
        self.is_upper_triangular().then(|| {
            self.omega
                .iter()
                .enumerate()
                .flat_map(|(k, row)| row.iter().enumerate().skip(k).map(move |(l, &x)| (l - k) * x))
                .sum()
        })
    }

    pub fn total(&self) -> usize {
        self.omega.iter().flatten().sum()
    }
}

impl fmt::Debug for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.omega)
    }
}

pub fn weight_matrix(i: &MultiIndex, j: &MultiIndex, n: usize) -> WeightMatrix {
    assert_eq!(i.entries.len(), j.entries.len());
    let mut omega = vec![vec![0; n]; n];
    for (a, b) in i.entries.iter().zip(&j.entries) {
        omega[a - 1][b - 1] += 1;
    }
    WeightMatrix { omega }
}

/// `wt(i_λ d, i_μ)`, defined for any `d`.
pub(crate) fn coset_weight_matrix(lam: &Composition, mu: &Composition, d: &Permutation) -> WeightMatrix {
    weight_matrix(&canonical_multi_index(lam).act(d), &canonical_multi_index(mu), lam.len())
}

/// Level of `wt(i_λ d, i_μ)`, or `None` when it is not upper triangular.
pub fn omega_level(lam: &Composition, mu: &Composition, d: &Permutation) -> Result<Option<usize>, CombinatoricsError> {
    if lam.len() != mu.len() || lam.total() != mu.total() {
        return Err(CombinatoricsError::SizeMismatch(lam.clone(), mu.clone()));
    }
    if !is_double_coset_rep(lam, mu, d) {
        return Err(CombinatoricsError::NotDistinguished { lam: lam.clone(), mu: mu.clone(), d: d.clone() });
    }
    Ok(coset_weight_matrix(lam, mu, d).level())
}

/// The distinguished representative with weight matrix `ω` (row sums `λ`,
/// column sums `μ`): the points of `μ`-block `t`, in increasing order, go
/// first to `λ`-block 1, then to block 2, and so on; inside each `λ`-block
/// the targets are handed out to sources in increasing order.
pub fn double_coset_rep_from_matrix(lam: &Composition, mu: &Composition, omega: &WeightMatrix) -> Permutation {
    let (lb, mb) = (lam.boundaries(), mu.boundaries());
    let n = lam.len();
    let mut images = vec![0u8; lam.total()];
    let mut next_target: Vec<usize> = lb[..n].to_vec();
    for t in 0..n {
        let mut source = mb[t];
        for s in 0..n {
            for _ in 0..omega.omega[s][t] {
                images[source] = next_target[s] as u8;
                next_target[s] += 1;
                source += 1;
            }
        }
    }
    Permutation::from_images(images)
}

/// A row-semistandard filling: `rows[s]` lists the entries (1-based) of
/// row `s`, weakly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowTableau {
    pub rows: Vec<Vec<usize>>,
}

impl RowTableau {
    fn from_matrix(omega: &WeightMatrix) -> Self {
        RowTableau {
            rows: omega
                .omega
                .iter()
                .map(|row| row.iter().enumerate().flat_map(|(t, &c)| std::iter::repeat_n(t + 1, c)).collect())
                .collect(),
        }
    }

    fn to_matrix(&self, n: usize) -> WeightMatrix {
        let mut omega = vec![vec![0; n]; n];
        for (s, row) in self.rows.iter().enumerate() {
            for &t in row {
                omega[s][t - 1] += 1;
            }
        }
        WeightMatrix { omega }
    }
}

/// All row-semistandard tableaux of shape `λ` and content `μ`, in
/// lexicographic order of their rows.
pub fn row_semistandard_tableaux(lam: &Composition, mu: &Composition) -> Vec<RowTableau> {
    // Fill the shape row by row; each row is a multiset drawn from the
    // remaining content.
    fn rec(lam: &[usize], remaining: &mut Vec<usize>, rows: &mut Vec<Vec<usize>>, out: &mut Vec<RowTableau>) {
        let s = rows.len();
        if s == lam.len() {
            if remaining.iter().all(|&x| x == 0) {
                out.push(RowTableau { rows: rows.clone() });
            }
            return;
        }
        let mut row = Vec::new();
        fill(lam, remaining, rows, &mut row, 0, lam[s], out);
    }
    fn fill(
        lam: &[usize],
        remaining: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        row: &mut Vec<usize>,
        from: usize,
        left: usize,
        out: &mut Vec<RowTableau>,
    ) {
        if left == 0 {
            rows.push(row.clone());
            rec(lam, remaining, rows, out);
            rows.pop();
            return;
        }
        for t in from..remaining.len() {
            if remaining[t] > 0 {
                remaining[t] -= 1;
                row.push(t + 1);
                fill(lam, remaining, rows, row, t, left - 1, out);
                row.pop();
                remaining[t] += 1;
            }
        }
    }
    assert_eq!(lam.total(), mu.total());
    let mut out = Vec::new();
    rec(lam.parts(), &mut mu.parts().to_vec(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn tableau_to_double_coset_rep(lam: &Composition, mu: &Composition, t: &RowTableau) -> Permutation {
    double_coset_rep_from_matrix(lam, mu, &t.to_matrix(lam.len()))
}

pub fn double_coset_rep_to_tableau(lam: &Composition, mu: &Composition, d: &Permutation) -> RowTableau {
    RowTableau::from_matrix(&coset_weight_matrix(lam, mu, d))
}

#[cfg(test)]
mod tests {
    use super::super::{compositions, dominates};
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec())
    }

    fn perm(p: &[usize]) -> Permutation {
        Permutation::from_one_line(p).unwrap()
    }

    #[test]
    fn subgroup_and_coset_counts() {
        assert_eq!(young_subgroup(&c(&[1, 1, 1])).len(), 1);
        assert_eq!(young_subgroup(&c(&[3])).len(), 6);
        assert_eq!(young_subgroup(&c(&[2, 1])), vec![perm(&[1, 2, 3]), perm(&[2, 1, 3])]);
        assert_eq!(min_coset_reps(&c(&[1, 1, 1])).len(), 6);
        assert_eq!(min_coset_reps(&c(&[3])), vec![Permutation::identity(3)]);
        assert_eq!(min_coset_reps(&c(&[2, 1])).len(), 3);
    }

    #[test]
    fn coset_reps_match_brute_force() {
        // Oracle: group S_r into right cosets S_λ w and take the shortest.
        for lam in compositions(3, 4) {
            let sub = young_subgroup(&lam);
            let g = SymmetricGroup::get(4);
            let mut reps: Vec<Permutation> = g
                .elements()
                .iter()
                .map(|w| sub.iter().map(|u| u.product(w)).min_by_key(|x| (x.length(), x.clone())).unwrap())
                .collect();
            reps.sort_by_key(|x| g.index_of(x));
            reps.dedup();
            assert_eq!(reps, min_coset_reps(&lam), "{lam}");
            assert_eq!(reps.len() * lam.young_order(), 24);
        }
    }

    #[test]
    fn double_coset_examples() {
        assert_eq!(double_coset_reps(&c(&[1, 1, 1]), &c(&[1, 1, 1])).len(), 6);
        assert_eq!(double_coset_reps(&c(&[2, 0]), &c(&[1, 1])), vec![Permutation::identity(2)]);
        assert_eq!(double_coset_reps(&c(&[1, 1]), &c(&[1, 1])), vec![Permutation::identity(2), perm(&[2, 1])]);
    }

    #[test]
    fn double_cosets_match_brute_force() {
        for lam in compositions(3, 3) {
            for mu in compositions(3, 3) {
                let (a, b) = (young_subgroup(&lam), young_subgroup(&mu));
                let g = SymmetricGroup::get(3);
                let mut reps: Vec<Permutation> = g
                    .elements()
                    .iter()
                    .map(|w| {
                        a.iter()
                            .flat_map(|u| b.iter().map(move |v| u.product(w).product(v)))
                            .min_by_key(|x| (x.length(), x.clone()))
                            .unwrap()
                    })
                    .collect();
                reps.sort_by_key(|x| g.index_of(x));
                reps.dedup();
                assert_eq!(reps, double_coset_reps(&lam, &mu));
            }
        }
    }

    #[test]
    fn tableaux_biject_with_double_cosets() {
        for lam in compositions(3, 3) {
            for mu in compositions(3, 3) {
                let tabs = row_semistandard_tableaux(&lam, &mu);
                let reps = double_coset_reps(&lam, &mu);
                assert_eq!(tabs.len(), reps.len());
                for t in &tabs {
                    let d = tableau_to_double_coset_rep(&lam, &mu, t);
                    assert!(is_double_coset_rep(&lam, &mu, &d));
                    assert_eq!(&double_coset_rep_to_tableau(&lam, &mu, &d), t);
                }
                for d in &reps {
                    assert_eq!(&tableau_to_double_coset_rep(&lam, &mu, &double_coset_rep_to_tableau(&lam, &mu, d)), d);
                }
            }
        }
        assert_eq!(row_semistandard_tableaux(&c(&[2]), &c(&[1, 1])), vec![RowTableau { rows: vec![vec![1, 2]] }]);
        assert_eq!(row_semistandard_tableaux(&c(&[1, 1]), &c(&[1, 1])).len(), 2);
    }

    #[test]
    fn multi_indices_and_weights() {
        assert_eq!(canonical_multi_index(&c(&[2, 0])).entries, vec![1, 1]);
        assert_eq!(canonical_multi_index(&c(&[1, 1])).entries, vec![1, 2]);
        assert_eq!(canonical_multi_index(&c(&[0, 2])).entries, vec![2, 2]);
        let i = MultiIndex { entries: vec![1, 1] };
        let j = MultiIndex { entries: vec![1, 2] };
        assert_eq!(weight_matrix(&i, &j, 2).omega, vec![vec![1, 1], vec![0, 0]]);
        assert_eq!(weight_matrix(&j, &i, 2).omega, vec![vec![1, 0], vec![1, 0]]);
        assert_eq!(weight_matrix(&j, &j, 2).omega, vec![vec![1, 0], vec![0, 1]]);
        // Right action: (i·u)·v = i·(uv).
        let u = perm(&[2, 3, 1]);
        let v = perm(&[3, 1, 2]);
        let m = MultiIndex { entries: vec![1, 2, 2] };
        assert_eq!(m.act(&u).act(&v), m.act(&u.product(&v)));
    }

    #[test]
    fn levels() {
        let e = Permutation::identity(2);
        assert_eq!(omega_level(&c(&[2, 0]), &c(&[1, 1]), &e).unwrap(), Some(1));
        assert_eq!(omega_level(&c(&[2, 0]), &c(&[0, 2]), &e).unwrap(), Some(2));
        assert_eq!(omega_level(&c(&[1, 1]), &c(&[2, 0]), &e).unwrap(), None);
        assert!(omega_level(&c(&[1, 1]), &c(&[1, 1]), &perm(&[2, 1])).is_ok());
        assert!(omega_level(&c(&[2, 0]), &c(&[1, 1]), &perm(&[2, 1])).is_err());
    }

    #[test]
    fn weight_matrix_is_a_double_coset_invariant() {
        for lam in compositions(3, 4) {
            for mu in compositions(3, 4) {
                let (a, b) = (young_subgroup(&lam), young_subgroup(&mu));
                for d in double_coset_reps(&lam, &mu) {
                    let w0 = coset_weight_matrix(&lam, &mu, &d);
                    for u in &a {
                        for v in &b {
                            assert_eq!(coset_weight_matrix(&lam, &mu, &u.product(&d).product(v)), w0);
                        }
                    }
                    // Upper triangular forces dominance; off the diagonal the level is positive.
                    if let Some(level) = w0.level() {
                        assert!(dominates(&lam, &mu).unwrap());
                        if lam != mu {
                            assert!(level >= 1);
                        }
                    }
                }
            }
        }
    }
}
