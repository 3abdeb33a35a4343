use std::sync::Arc;

use num_bigint::BigInt;

use super::*;
use crate::combinatorics::compositions;
use crate::linalg::rank;
use crate::qschur::{SchurAlgebra, SchurLabel};
use crate::ring::{Integers, PrimeField, Rational, Rationals};

fn c(p: &[usize]) -> Composition {
    Composition::new(p.to_vec())
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// `0 → R^a → R^b → R^c → 0` from explicit dense matrices (row convention).
fn free<R: Ring>(ring: &R, dims: &[usize], mats: &[Vec<Vec<R::Elem>>]) -> FreeChainComplex<R::Elem> {
    let diffs = mats
        .iter()
        .enumerate()
        .map(|(i, m)| if m.is_empty() { Matrix::zeros(dims[i + 1], dims[i]) } else { Matrix::from_dense(ring, m) })
        .collect();
    FreeChainComplex::new(0, dims.iter().map(|&n| names(n)).collect(), diffs).unwrap()
}

/// Betti numbers from ranks of the materialized differentials (dense echelon).
fn oracle_bettis<R: Ring, C: ChainComplex<R::Elem>>(ring: &R, c: &C) -> Vec<usize> {
    let rk = |k: i64| if k <= c.bottom() || k > c.top() { 0 } else { rank(ring, &c.differential(ring, k)).unwrap() };
    (c.bottom()..=c.top()).map(|k| c.dim(k) - rk(k) - rk(k + 1)).collect()
}

fn qq(q: Rational, n: usize, r: usize) -> Arc<SchurAlgebra<Rationals>> {
    Arc::new(SchurAlgebra::new(Rationals::new(q), n, r))
}

#[test]
fn shapes_are_checked() {
    let q = Rationals::new(Rational::one());
    let bad = FreeChainComplex::new(0, vec![names(2), names(3)], vec![Matrix::<Rational>::zeros(2, 3)]);
    assert!(matches!(bad, Err(ComplexError::Shape { degree: 1, got: (2, 3), expected: (3, 2) })));
    let missing = FreeChainComplex::<Rational>::new(0, vec![names(2), names(3)], vec![]);
    assert!(missing.is_err());
    let ok = free(&q, &[2, 3], &[vec![]]);
    assert_eq!(ok.dims(), vec![2, 3]);
    assert_eq!(ok.euler_characteristic(), -1);
}

#[test]
fn validate_small_complexes() {
    let q = Rationals::new(Rational::one());
    let i = |n: i64| Rational::from_int(n);
    // R --(1 1)ᵀ--> R² --(1 −1)--> R
    let good = free(&q, &[1, 2, 1], &[vec![vec![i(1)], vec![i(-1)]], vec![vec![i(1), i(1)]]]);
    assert!(validate(&q, &good));
    assert!(validate_stored(&q, &good).unwrap());
    let mut bad = good.clone();
    bad.d_mut(1).unwrap().set(&q, 1, 0, i(2));
    assert!(!validate(&q, &bad));
    let zero = free::<Rationals>(&q, &[3, 0, 2], &[vec![], vec![]]);
    assert!(validate(&q, &zero));
    assert_eq!(homology(&q, &zero).bettis(), vec![3, 0, 2]);
}

#[test]
fn homology_of_small_complexes() {
    let q = Rationals::new(Rational::one());
    let id = free(&q, &[1, 1], &[vec![vec![Rational::one()]]]);
    assert!(homology(&q, &id).is_exact());
    let single = free::<Rationals>(&q, &[1], &[]);
    assert_eq!(homology(&q, &single).bettis(), vec![1]);

    // Multiplication by 2: exact over Q and F3, torsion over Z, both Bettis over F2.
    let z = Integers { q_positive: true };
    let two = free(&z, &[1, 1], &[vec![vec![BigInt::from(2)]]]);
    let h = homology(&z, &two);
    assert_eq!(h.method, RankMethod::Smith);
    assert_eq!(h.bettis(), vec![0, 0]);
    assert_eq!(h.degrees[0].torsion, vec![BigInt::from(2)]);
    assert!(!h.is_exact());
    let f2 = PrimeField::new(2, 1);
    let two_mod_2 = free(&f2, &[1, 1], &[vec![]]);
    assert_eq!(homology(&f2, &two_mod_2).bettis(), vec![1, 1]);
    let f3 = PrimeField::new(3, 1);
    assert!(homology(&f3, &free(&f3, &[1, 1], &[vec![vec![2]]])).is_exact());
}

#[test]
fn integral_homology_of_a_longer_complex() {
    // Z² --diag(1, 6)--> Z² --0--> Z
    let z = Integers { q_positive: true };
    let b = |x: i64| BigInt::from(x);
    let cpx = free(&z, &[1, 2, 2], &[vec![], vec![vec![b(1), b(0)], vec![b(0), b(6)]]]);
    let h = homology(&z, &cpx);
    assert_eq!(h.bettis(), vec![1, 0, 0]);
    assert_eq!(h.degrees[1].torsion, vec![b(6)]);
    assert_eq!(h.degrees[1].factors_in, vec![b(1), b(6)]);
}

#[test]
fn homology_drops_only_harmless_rows() {
    // d_2 has pivot columns that must not hide the image of d_1.
    let f = PrimeField::new(7, 1);
    let cpx = free(
        &f,
        &[2, 3, 1],
        &[vec![vec![1, 0], vec![0, 1], vec![1, 1]], vec![vec![1, 1, 6]]],
    );
    assert!(validate(&f, &cpx));
    assert_eq!(homology(&f, &cpx).bettis(), oracle_bettis(&f, &cpx));
    assert_eq!(homology(&f, &cpx).bettis(), vec![0, 0, 0]);
}

#[test]
fn bar_complex_two_two() {
    let pool = compositions(2, 2);
    for q in [Rational::from_int(2), Rational::new(1, 3), Rational::one()] {
        let alg = qq(q, 2, 2);
        for lam in &pool {
            let bar = bar_complex(alg.clone(), lam, &pool).unwrap();
            assert!(validate(bar.ring(), &bar), "{lam}");
            assert!(homology(bar.ring(), &bar).is_exact(), "{lam}");
            assert_eq!(homology(bar.ring(), &bar).bettis(), oracle_bettis(bar.ring(), &bar));
            assert!(splitting_check(&bar), "{lam}");
        }
    }
    let alg = qq(Rational::from_int(2), 2, 2);
    // (0,2) sits at the bottom of the chain (2,0) ▷ (1,1) ▷ (0,2).
    let bottom = bar_complex(alg.clone(), &c(&[0, 2]), &pool).unwrap();
    assert_eq!((bottom.bottom(), bottom.top()), (-1, 2));
    assert_eq!(bottom.chains(2).len(), 1);
    // Nothing lies above (2,0): 0 → S⁺ψ_λ → L_λ.
    let top = bar_complex(alg, &c(&[2, 0]), &pool).unwrap();
    assert_eq!(top.top(), 0);
    assert_eq!(top.dims(), vec![1, 1]);
}

#[test]
fn bar_complex_three_three_over_several_rings() {
    let pool = compositions(3, 3);
    let f3 = Arc::new(SchurAlgebra::new(PrimeField::new(3, 2), 3, 3));
    let z = Arc::new(SchurAlgebra::new(Integers { q_positive: true }, 3, 3));
    for lam in &pool {
        let a = bar_complex(f3.clone(), lam, &pool).unwrap();
        let b = bar_complex(z.clone(), lam, &pool).unwrap();
        assert_eq!(a.dims(), b.dims());
        assert!(validate(a.ring(), &a) && validate(b.ring(), &b), "{lam}");
        assert!(homology(a.ring(), &a).is_exact() && homology(b.ring(), &b).is_exact(), "{lam}");
        assert!(splitting_check(&a) && splitting_check(&b), "{lam}");
    }
}

#[test]
fn perturbed_splitting_fails() {
    let pool = compositions(2, 2);
    let alg = qq(Rational::from_int(2), 2, 2);
    let bar = bar_complex(alg, &c(&[0, 2]), &pool).unwrap();
    let ring = bar.ring().clone();
    let mut maps = splitting_maps(&bar).unwrap();
    assert!(check_splitting(&ring, &bar, &maps));
    let (i, j, v) = maps[1].entries().next().map(|(i, j, v)| (i, j, v.clone())).unwrap();
    maps[1].set(&ring, i, j, ring.add(&v, &ring.one()));
    assert!(!check_splitting(&ring, &bar, &maps));
    maps.pop();
    assert!(!check_splitting(&ring, &bar, &maps));
}

#[test]
fn induced_complex() {
    let pool = compositions(2, 2);
    let alg = qq(Rational::from_int(2), 2, 2);
    let bar = bar_complex(alg.clone(), &c(&[1, 1]), &pool).unwrap();
    let induced = induce_to_schur(&bar).unwrap();
    assert_eq!(induced.bottom(), 0);
    // Sψ_(1,1) is spanned by every ψ^d_{ν,(1,1)}: 1 + 2 + 1 of them.
    assert_eq!(induced.dim(0), 4);
    assert!(validate(induced.ring(), &induced));
    let pool3 = compositions(3, 3);
    let alg3 = qq(Rational::new(1, 3), 3, 3);
    for lam in &pool3 {
        let induced = induce_to_schur(&bar_complex(alg3.clone(), lam, &pool3).unwrap()).unwrap();
        assert!(validate(&alg3.ring, &induced), "{lam}");
    }
}

#[test]
fn schur_functor_image_is_the_delta_part_of_the_induced_complex() {
    let pool = compositions(3, 3);
    let alg = qq(Rational::from_int(2), 3, 3);
    let delta = alg.index.position(&Composition::delta(3, 3)).unwrap();
    for lam in &pool {
        let induced = induce_to_schur(&bar_complex(alg.clone(), lam, &pool).unwrap()).unwrap();
        let image = schur_functor_image(&induced).unwrap();
        let whole = FreeChainComplex::materialize(&alg.ring, &induced, |k, i| induced.describe(k, i));
        let part = whole.restrict(|k, i| SchurLabel::unpack(induced.label(k, i).left).lam == delta);
        let direct = FreeChainComplex::materialize(&alg.ring, &image, |k, i| image.describe(k, i));
        assert_eq!(part.labels[..direct.labels.len()], direct.labels[..], "{lam}");
        assert!(part.labels[direct.labels.len()..].iter().all(Vec::is_empty));
        assert_eq!(part.diffs[..direct.diffs.len()], direct.diffs[..], "{lam}");
    }
}

#[test]
fn schur_functor_needs_n_at_least_r() {
    let pool = compositions(2, 3);
    let alg = qq(Rational::from_int(2), 2, 3);
    let induced = induce_to_schur(&bar_complex(alg, &c(&[2, 1]), &pool).unwrap()).unwrap();
    assert!(matches!(schur_functor_image(&induced), Err(ComplexError::NoSchurFunctor { n: 2, r: 3 })));
}

#[test]
fn labels_round_trip() {
    let pool = compositions(3, 3);
    let alg = qq(Rational::from_int(2), 3, 3);
    let bar = bar_complex(alg, &c(&[1, 1, 1]), &pool).unwrap();
    for k in 0..=bar.top() {
        for i in 0..bar.dim(k) {
            let l = bar.label(k, i);
            assert_eq!(l.homs.len() as i64, k);
            assert_eq!(bar.index_of(&l), Some(i));
        }
    }
    assert!(matches!(
        bar_complex(bar.alg.clone(), &c(&[1, 1, 1]), &[c(&[3, 0, 0])]),
        Err(ComplexError::NotInPool(_))
    ));
}

#[test]
fn modular_ranks_agree_with_exact_ranks() {
    let pool = compositions(3, 3);
    let alg = qq(Rational::new(1, 3), 3, 3);
    for lam in &pool {
        let bar = bar_complex(alg.clone(), lam, &pool).unwrap();
        let h = homology(&alg.ring, &bar);
        assert_eq!(h.method, RankMethod::Modular);
        for d in &h.degrees {
            let exact = if d.degree <= bar.bottom() { 0 } else { rank(&alg.ring, &bar.differential(&alg.ring, d.degree)).unwrap() };
            assert_eq!(d.rank_out, exact, "{lam} degree {}", d.degree);
        }
    }
}

mod random_complexes {
    use proptest::prelude::*;

    use super::*;

    /// `0 → C_2 → C_1 → C_0 → 0` assembled from `free[k]` copies of `R`
    /// in degree `k` and pieces `R --f--> R` in `d_1` and `d_2`.
    #[derive(Clone, Debug)]
    struct Pieces {
        free: [usize; 3],
        maps: [Vec<i64>; 2],
    }

    impl Pieces {
        fn dims(&self) -> [usize; 3] {
            [
                self.free[0] + self.maps[0].len(),
                self.free[1] + self.maps[0].len() + self.maps[1].len(),
                self.free[2] + self.maps[1].len(),
            ]
        }

        /// Dense differentials `[d_1, d_2]`, before any change of basis.
        fn matrices(&self) -> [Vec<Vec<i64>>; 2] {
            let dims = self.dims();
            let mut d1 = vec![vec![0; dims[0]]; dims[1]];
            let mut d2 = vec![vec![0; dims[1]]; dims[2]];
            for (t, f) in self.maps[0].iter().enumerate() {
                d1[self.free[1] + t][self.free[0] + t] = *f;
            }
            for (t, f) in self.maps[1].iter().enumerate() {
                d2[self.free[2] + t][self.free[1] + self.maps[0].len() + t] = *f;
            }
            [d1, d2]
        }
    }

    /// Replaces `e_i` by `e_i + c·e_j` in degree `k`.
    fn change_basis(mats: &mut [Vec<Vec<i64>>; 2], k: usize, i: usize, j: usize, c: i64) {
        if k >= 1 {
            let d = &mut mats[k - 1];
            let row_j = d[j].clone();
            for (x, y) in d[i].iter_mut().zip(row_j) {
                *x += c * y;
            }
        }
        if k <= 1 {
            for row in mats[k].iter_mut() {
                row[j] -= c * row[i];
            }
        }
    }

    fn pieces() -> impl Strategy<Value = Pieces> {
        let factor = prop::sample::select(vec![1i64, 1, 2, 4, 8]);
        (
            [0usize..3, 0usize..3, 0usize..3],
            prop::collection::vec(factor.clone(), 0..4),
            prop::collection::vec(factor, 0..4),
        )
            .prop_map(|(free, m1, m2)| Pieces { free, maps: [m1, m2] })
    }

    fn ops() -> impl Strategy<Value = Vec<(usize, usize, usize, i64)>> {
        prop::collection::vec((0usize..3, 0usize..16, 0usize..16, -2i64..=2), 0..24)
    }

    fn build<R: Ring>(ring: &R, dims: [usize; 3], mats: &[Vec<Vec<i64>>; 2], conv: impl Fn(i64) -> R::Elem) -> FreeChainComplex<R::Elem> {
        let diffs = mats
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let entries = m.iter().enumerate().flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, *v)));
                Matrix::from_entries(ring, dims[k + 1], dims[k], entries.map(|(i, j, v)| (i, j, conv(v))).collect::<Vec<_>>())
            })
            .collect();
        FreeChainComplex::new(0, dims.iter().map(|&n| names(n)).collect(), diffs).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn homology_of_disguised_sums(p in pieces(), ops in ops()) {
            let dims = p.dims();
            let mut mats = p.matrices();
            for (k, i, j, c) in ops {
                if dims[k] >= 2 {
                    let (i, j) = (i % dims[k], j % dims[k]);
                    if i != j {
                        change_basis(&mut mats, k, i, j, c);
                    }
                }
            }
            let z = Integers { q_positive: true };
            let cz = build(&z, dims, &mats, BigInt::from);
            prop_assert!(validate(&z, &cz));
            let h = homology(&z, &cz);
            prop_assert_eq!(h.bettis(), p.free.to_vec());
            for k in 0..2 {
                let mut expected: Vec<BigInt> = p.maps[k].iter().filter(|f| **f != 1).map(|f| BigInt::from(*f)).collect();
                let mut got = h.degrees[k].torsion.clone();
                expected.sort();
                got.sort();
                prop_assert_eq!(got, expected);
            }

            let f2 = PrimeField::new(2, 1);
            let c2 = build(&f2, dims, &mats, |v| v.rem_euclid(2) as u64);
            let even = |k: usize| p.maps[k].iter().filter(|f| **f % 2 == 0).count();
            let expected = [p.free[0] + even(0), p.free[1] + even(0) + even(1), p.free[2] + even(1)];
            prop_assert_eq!(homology(&f2, &c2).bettis(), expected.to_vec());
            prop_assert_eq!(homology(&f2, &c2).bettis(), oracle_bettis(&f2, &c2));

            let q = Rationals::new(Rational::one());
            let cq = build(&q, dims, &mats, Rational::from_int);
            prop_assert_eq!(homology(&q, &cq).bettis(), p.free.to_vec());
        }
    }
}
