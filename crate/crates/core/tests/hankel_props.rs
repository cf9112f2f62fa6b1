use curvecount::hankel::{self, HankelInstance, IntMatrix, SecantPoint};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

/// Gaussian elimination over the rationals.
fn naive_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for j in 0..cols {
                    let sub = &f * &m[rank][j];
                    m[r][j] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| {
        // small entries make rank deficiency common
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bareiss_rank_matches_rational_elimination(rows in matrix()) {
        let m = IntMatrix::from_rows(&rows);
        prop_assert_eq!(hankel::rank_exact(&m), naive_rank(&rows));
    }

    #[test]
    fn nullspace_is_a_kernel_basis(rows in matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let basis = hankel::nullspace(&m);
        prop_assert_eq!(basis.len(), m.cols() - hankel::rank_exact(&m));
        for v in &basis {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            prop_assert!(v.iter().any(|x| !x.is_zero()));
        }
        let as_rows: Vec<Vec<i64>> = basis
            .iter()
            .map(|v| v.iter().map(|x| i64::try_from(x.clone()).unwrap()).collect())
            .collect();
        if !as_rows.is_empty() {
            prop_assert_eq!(naive_rank(&as_rows), basis.len());
        }
    }
}

proptest! {
    #[test]
    fn hankel_entries_follow_antidiagonals(
        (a, b, c) in (1usize..=5, 1usize..=5).prop_flat_map(|(a, b)| {
            (Just(a), Just(b), prop::collection::vec(-20i64..=20, a + b + 1))
        })
    ) {
        prop_assume!(c.iter().any(|&x| x != 0));
        let h = HankelInstance::new(a, b, c.clone()).unwrap();
        let m = h.matrix();
        prop_assert_eq!((m.rows(), m.cols()), (a + 1, b + 1));
        for i in 0..=a {
            for j in 0..=b {
                prop_assert_eq!(m.get(i, j), &BigInt::from(c[i + j]));
            }
        }
        for f in h.dv_basis() {
            prop_assert!(h.annihilates(&f));
        }
    }

    /// At most max(a+1, b+1) distinct points give full rank min(a+1, b+1, ell).
    #[test]
    fn secant_rank_in_exact_range(
        a in 1usize..=4,
        b in 1usize..=4,
        raw in prop::collection::vec(((-9i64..=9, 1i64..=9), -9i64..=9), 1..=5)
    ) {
        let mut points = Vec::new();
        let mut weights = Vec::new();
        for ((s, t), w) in raw {
            let fresh = points.iter().all(|&(s2, t2): &(i64, i64)| s * t2 != s2 * t);
            if w != 0 && fresh {
                points.push((s, t));
                weights.push(w);
            }
        }
        let ell = points.len();
        prop_assume!(ell >= 1 && ell <= (a + 1).max(b + 1));
        let sp = SecantPoint::new(points, weights).unwrap();
        let h = hankel::secant_sample(a, b, &sp).unwrap();
        prop_assert_eq!(h.codim_dv(), (a + 1).min(b + 1).min(ell));
    }
}

#[test]
fn pairing_with_products() {
    // c from the point [1:2] on W_3; f = t - 2s vanishes there
    let c = hankel::rnc_functional(3, 1, 2).unwrap();
    let f = vec![BigInt::from(-2), BigInt::from(1)];
    let g = vec![BigInt::from(5), BigInt::from(-1), BigInt::from(7)];
    assert!(hankel::pairing(&c, &hankel::poly_mul(&f, &g)).is_zero());
    assert!(!hankel::pairing(&c, &hankel::poly_mul(&g, &[BigInt::from(1), BigInt::from(1)])).is_zero());
}
