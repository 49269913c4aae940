use arrcoh::exactlin::{hermite_normal_form, prime_field_rank, smith_normal_form, IntegerMatrix, PrimeFieldMatrix, RationalMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-4i64..5, r * c)))
}

fn rows_of(r: usize, c: usize, v: &[i64]) -> Vec<Vec<i64>> {
    (0..r).map(|i| v[i * c..(i + 1) * c].to_vec()).collect()
}

fn rational(r: usize, c: usize, v: &[i64]) -> RationalMatrix {
    let rows = rows_of(r, c, v);
    let refs: Vec<&[i64]> = rows.iter().map(|x| x.as_slice()).collect();
    RationalMatrix::from_i64_rows(c, &refs)
}

fn integer(r: usize, c: usize, v: &[i64]) -> IntegerMatrix {
    let rows = rows_of(r, c, v);
    let refs: Vec<&[i64]> = rows.iter().map(|x| x.as_slice()).collect();
    IntegerMatrix::from_i64_rows(c, &refs)
}

/// Random unimodular matrix as a product of elementary operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntegerMatrix {
    let mut m = IntegerMatrix::identity(n);
    for &(i, j, f) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        let mut e = IntegerMatrix::identity(n);
        e[(i, j)] = BigInt::from(f);
        m = e.mul(&m);
    }
    m
}

proptest! {
    #[test]
    fn rank_is_transpose_and_permutation_invariant((r, c, v) in small_matrix(), shift in 0usize..5) {
        let m = rational(r, c, &v);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let mut rows = rows_of(r, c, &v);
        rows.rotate_left(shift % r);
        let flat: Vec<i64> = rows.concat();
        prop_assert_eq!(rational(r, c, &flat).rank(), m.rank());
        prop_assert!(m.rank() <= r.min(c));
    }

    #[test]
    fn rational_rank_bounds_prime_rank((r, c, v) in small_matrix(), p in prop::sample::select(vec![3u64, 5, 7, 11])) {
        let rows = rows_of(r, c, &v);
        let refs: Vec<&[i64]> = rows.iter().map(|x| x.as_slice()).collect();
        let fp = PrimeFieldMatrix::from_i64_rows(p, c, &refs).unwrap();
        prop_assert!(prime_field_rank(&fp) <= rational(r, c, &v).rank());
    }

    #[test]
    fn smith_form_is_diagonalizing((r, c, v) in small_matrix()) {
        let m = integer(r, c, &v);
        let s = smith_normal_form(&m);
        let d = s.left.mul(&m).mul(&s.right);
        for i in 0..r {
            for j in 0..c {
                let expect = if i == j { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&d[(i, j)], &expect);
            }
        }
        prop_assert_eq!(s.left.determinant().abs(), BigInt::one());
        prop_assert_eq!(s.right.determinant().abs(), BigInt::one());
        for w in s.diagonal.windows(2) {
            prop_assert!(!w[0].is_negative());
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
        prop_assert_eq!(s.rank(), rational(r, c, &v).rank());
    }

    #[test]
    fn smith_diagonal_is_unimodular_invariant(
        (r, c, v) in small_matrix(),
        lops in proptest::collection::vec((0usize..5, 0usize..5, -3i64..4), 0..6),
        rops in proptest::collection::vec((0usize..5, 0usize..5, -3i64..4), 0..6),
    ) {
        let m = integer(r, c, &v);
        let moved = unimodular(r, &lops).mul(&m).mul(&unimodular(c, &rops));
        prop_assert_eq!(smith_normal_form(&m).diagonal, smith_normal_form(&moved).diagonal);
    }

    #[test]
    fn hermite_form_depends_only_on_row_lattice(
        (r, c, v) in small_matrix(),
        ops in proptest::collection::vec((0usize..5, 0usize..5, -3i64..4), 0..6),
    ) {
        let m = integer(r, c, &v);
        let moved = unimodular(r, &ops).mul(&m);
        prop_assert_eq!(format!("{:?}", hermite_normal_form(&m)), format!("{:?}", hermite_normal_form(&moved)));
    }
}
