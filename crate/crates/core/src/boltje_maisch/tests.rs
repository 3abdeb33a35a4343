use num_bigint::BigInt;

use super::*;
use crate::combinatorics::standard_tableaux_count;
use crate::ring::{PrimeField, Rational, Rationals};

fn c(p: &[usize]) -> Composition {
    Composition::new(p.to_vec())
}

fn qq(q: Rational, r: usize) -> Arc<SchurAlgebra<Rationals>> {
    Arc::new(SchurAlgebra::new(Rationals::new(q), r, r))
}

#[test]
fn pools_parse_and_print() {
    assert_eq!("partitions".parse::<Pool>().unwrap(), Pool::Partitions);
    assert_eq!("compositions".parse::<Pool>().unwrap(), Pool::Compositions);
    assert_eq!(Pool::default(), Pool::Compositions);
    assert!(matches!("chains".parse::<Pool>(), Err(BmError::UnknownPool(_))));
    assert_eq!(Pool::Partitions.to_string(), "partitions");
    assert_eq!(Pool::Partitions.weights(3, 3).len(), 3);
    assert_eq!(Pool::Compositions.weights(3, 3).len(), 10);
}

#[test]
fn small_ranks() {
    let alg = qq(Rational::from_int(2), 2);
    let one_one = build_bm_complex(alg.clone(), &c(&[1, 1]), Pool::Compositions).unwrap();
    assert_eq!(one_one.dims(), vec![1, 2, 1]);
    let two = build_bm_complex(alg.clone(), &c(&[2, 0]), Pool::Compositions).unwrap();
    assert_eq!(two.dims(), vec![1, 1]);
    assert!(matches!(build_bm_complex(alg, &c(&[0, 2]), Pool::Compositions), Err(BmError::NotAPartition(_))));
}

#[test]
fn wedge_basis_is_the_level_zero_truncation() {
    let alg = qq(Rational::from_int(2), 3);
    let idx = &alg.index;
    let (top, bottom) = (c(&[2, 1, 0]), c(&[1, 1, 1]));
    let basis = hom_wedge_basis(idx, &top, &bottom);
    let (t, b) = (idx.position(&top).unwrap(), idx.position(&bottom).unwrap());
    assert_eq!(basis, idx.truncated(t, b, 0).collect::<Vec<_>>());
    assert!(basis.iter().all(|l| idx.level(*l).is_some()));
    assert!(!basis.is_empty() && basis.len() < idx.labels(t, b).count());
}

#[test]
fn augmentation_has_rank_of_the_specht_module() {
    for r in 1..=4 {
        let alg = qq(Rational::from_int(2), r);
        for lam in partitions(r, r) {
            let bm = build_bm_complex(alg.clone(), &lam, Pool::Compositions).unwrap();
            assert_eq!(bm.dim(-1), standard_tableaux_count(&lam).unwrap(), "{lam}");
            assert_eq!(bm.euler_characteristic(), 0, "{lam}");
        }
    }
}

#[test]
fn phi_examples() {
    let alg = qq(Rational::from_int(2), 2);
    let row = phi_iso(&alg, &c(&[2, 0])).unwrap();
    assert_eq!(row, Matrix::identity(&alg.ring, 1));
    let delta = phi_iso(&alg, &c(&[1, 1])).unwrap();
    assert_eq!((delta.rows(), delta.cols()), (2, 2));
    assert!(is_invertible(&alg.ring, &delta));
    let small = Arc::new(SchurAlgebra::new(Rationals::new(Rational::one()), 2, 3));
    assert!(matches!(phi_iso(&small, &c(&[2, 1])), Err(BmError::Complex(ComplexError::NoSchurFunctor { .. }))));
}

#[test]
fn phi_is_invertible_over_the_integers() {
    let z = SchurAlgebra::new(Integers { q_positive: true }, 3, 3);
    for nu in compositions(3, 3) {
        assert!(is_invertible(&z.ring, &phi_iso(&z, &nu).unwrap()), "{nu}");
    }
}

#[test]
fn invertibility() {
    let z = Integers { q_positive: true };
    let q = Rationals::new(Rational::one());
    let b = |x: i64| BigInt::from(x);
    assert!(!is_invertible(&z, &Matrix::from_dense(&z, &[vec![b(2)]])));
    assert!(is_invertible(&q, &Matrix::from_dense(&q, &[vec![Rational::from_int(2)]])));
    assert!(is_invertible(&z, &Matrix::from_dense(&z, &[vec![b(2), b(1)], vec![b(1), b(1)]])));
    assert!(!is_invertible(&z, &Matrix::from_dense(&z, &[vec![b(2), b(0)], vec![b(0), b(3)]])));
    assert!(!is_invertible(&q, &Matrix::<Rational>::zeros(2, 3)));
}

#[test]
fn chain_isomorphism_for_small_partitions() {
    for r in 1..=3 {
        for pool in [Pool::Partitions, Pool::Compositions] {
            for q in [Rational::from_int(2), Rational::new(1, 3)] {
                let alg = qq(q, r);
                for lam in partitions(r, r) {
                    let bm = build_bm_complex(alg.clone(), &lam, pool).unwrap();
                    let sf = induced_schur_image(alg.clone(), &lam, pool).unwrap();
                    assert!(chain_iso_check(&bm, &sf).unwrap(), "{lam} {pool}");
                }
            }
        }
    }
}

#[test]
fn chain_isomorphism_over_finite_fields_and_integers() {
    let f = Arc::new(SchurAlgebra::new(PrimeField::new(5, 4), 3, 3));
    let z = Arc::new(SchurAlgebra::new(Integers { q_positive: true }, 3, 3));
    for lam in partitions(3, 3) {
        let (bm, sf) = (build_bm_complex(f.clone(), &lam, Pool::Compositions).unwrap(), induced_schur_image(f.clone(), &lam, Pool::Compositions).unwrap());
        assert!(chain_iso_check(&bm, &sf).unwrap(), "{lam}");
        let (bm, sf) = (build_bm_complex(z.clone(), &lam, Pool::Compositions).unwrap(), induced_schur_image(z.clone(), &lam, Pool::Compositions).unwrap());
        assert!(chain_iso_check(&bm, &sf).unwrap(), "{lam}");
    }
}

#[test]
fn broken_chain_maps_are_rejected() {
    let alg = qq(Rational::from_int(2), 3);
    let lam = c(&[1, 1, 1]);
    let bm = build_bm_complex(alg.clone(), &lam, Pool::Compositions).unwrap();
    let sf = induced_schur_image(alg.clone(), &lam, Pool::Compositions).unwrap();
    let ring = &alg.ring;
    let maps = iso_maps(&bm, &sf).unwrap();
    assert!(check_chain_map(ring, &sf, &bm, &maps));
    // Flipping the sign in one degree breaks commutativity but not invertibility.
    let mut flipped = maps.clone();
    flipped[1] = flipped[1].scale(ring, &ring.neg(&ring.one()));
    assert!(is_invertible(ring, &flipped[1]));
    assert!(!check_chain_map(ring, &sf, &bm, &flipped));
    let mut singular = maps.clone();
    singular[0] = Matrix::zeros(maps[0].rows(), maps[0].cols());
    assert!(!check_chain_map(ring, &sf, &bm, &singular));
    assert!(!check_chain_map(ring, &sf, &bm, &maps[..maps.len() - 1]));
}

#[test]
fn mismatched_pools_are_reported() {
    let alg = qq(Rational::from_int(2), 3);
    let lam = c(&[1, 1, 1]);
    let bm = build_bm_complex(alg.clone(), &lam, Pool::Compositions).unwrap();
    let sf = induced_schur_image(alg, &lam, Pool::Partitions).unwrap();
    assert!(matches!(chain_iso_check(&bm, &sf), Err(BmError::LabelMismatch(v)) if !v.is_empty()));
}

#[test]
fn exactness_over_several_rings() {
    let lam = c(&[2, 1, 0]);
    let f = Arc::new(SchurAlgebra::new(PrimeField::new(5, 2), 3, 3));
    let z = Arc::new(SchurAlgebra::new(Integers { q_positive: true }, 3, 3));
    let a = exactness_report(f, &lam, Pool::Compositions).unwrap();
    let b = exactness_report(z, &lam, Pool::Compositions).unwrap();
    assert!(a.exact() && b.exact());
    assert_eq!(b.homology.method, crate::resolutions::RankMethod::Smith);
    assert!(b.homology.degrees.iter().all(|d| d.torsion.is_empty()));
    assert_eq!(a.dims, b.dims);
    assert_eq!(a.top_degree(), a.dims.len() as i64 - 2);
}

#[test]
fn ranks_do_not_depend_on_the_ring() {
    let lam = c(&[2, 1, 1, 0]);
    let dims = |pool| {
        let q = exactness_report(qq(Rational::new(1, 3), 4), &lam, pool).unwrap();
        let f = exactness_report(Arc::new(SchurAlgebra::new(PrimeField::new(3, 2), 4, 4)), &lam, pool).unwrap();
        assert_eq!(q.dims, f.dims);
        assert_eq!(q.homology.bettis(), f.homology.bettis());
        q
    };
    let comp = dims(Pool::Compositions);
    assert!(comp.exact());
    assert_eq!(comp.euler_characteristic, 0);
    dims(Pool::Partitions);
}

#[test]
fn partition_chains_alone_are_not_exact_for_one_four() {
    let lam = c(&[1, 1, 1, 1]);
    let report = exactness_report(qq(Rational::from_int(2), 4), &lam, Pool::Partitions).unwrap();
    assert!(report.d2_zero);
    assert_eq!(report.homology.bettis(), vec![0, 0, 5, 0, 0, 0]);
    assert_eq!(report.euler_characteristic, -5);
    assert!(!report.exact());
}

#[test]
fn perturbed_differential_is_caught() {
    let alg = qq(Rational::from_int(2), 3);
    let bm = build_bm_complex(alg.clone(), &c(&[2, 1, 0]), Pool::Compositions).unwrap();
    let ring = &alg.ring;
    let mut stored = crate::resolutions::FreeChainComplex::materialize(ring, &bm, |k, i| bm.describe(k, i));
    assert!(validate(ring, &stored));
    let d = stored.d_mut(1).unwrap();
    let (i, j, v) = d.entries().next().map(|(i, j, v)| (i, j, v.clone())).unwrap();
    d.set(ring, i, j, ring.add(&v, &ring.one()));
    assert!(!validate(ring, &stored));
}
