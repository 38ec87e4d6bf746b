use proptest::prelude::*;

use num_traits::{One, Zero};
use quot_core::bundle::{chern_total, direct_sum, segre_total, twist_bundle};
use quot_core::chow::surfaces;
use quot_core::linalg::Matrix;
use quot_core::rational::{format_rational, frac, parse_rational, rat, Rational};
use quot_core::series::eta_power_expand;
use quot_core::{BundleData, GradedClass, SurfaceModel};

fn q() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, d)| frac(p, d))
}

fn surface() -> impl Strategy<Value = SurfaceModel> {
    prop_oneof![
        Just(surfaces::projective_plane()),
        Just(surfaces::p1_x_p1()),
        Just(surfaces::zero_surface()),
    ]
}

fn class(rank: usize) -> impl Strategy<Value = GradedClass> {
    (q(), prop::collection::vec(q(), rank), q()).prop_map(|(a, b, c)| GradedClass::new(a, b, c))
}

fn surface_with_classes(n: usize) -> impl Strategy<Value = (SurfaceModel, Vec<GradedClass>)> {
    surface().prop_flat_map(move |s| {
        let r = s.rank();
        (Just(s), prop::collection::vec(class(r), n))
    })
}

fn bundle_on(s: &SurfaceModel) -> impl Strategy<Value = BundleData> {
    let r = s.rank();
    (1u32..=4, prop::collection::vec(-5i64..=5, r), -8i64..=8).prop_map(|(rank, c1, c2)| {
        let c2 = if rank == 1 { 0 } else { c2 };
        BundleData::new(rank, c1.into_iter().map(rat).collect(), rat(c2)).unwrap()
    })
}

fn line_on(s: &SurfaceModel) -> impl Strategy<Value = BundleData> {
    prop::collection::vec(-5i64..=5, s.rank()).prop_map(|c1| BundleData::line(c1.into_iter().map(rat).collect()))
}

/// Rank by plain Gaussian elimination over the rationals.
fn naive_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            let f = &m[i][col] / &m[rank][col];
            for j in col..ncols {
                let delta = &f * &m[rank][j];
                m[i][j] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chow_ring_axioms((s, v) in surface_with_classes(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let ab = s.mul(a, b).unwrap();
        prop_assert_eq!(&ab, &s.mul(b, a).unwrap());
        prop_assert_eq!(s.mul(&ab, c).unwrap(), s.mul(a, &s.mul(b, c).unwrap()).unwrap());
        let lhs = s.mul(a, &b.add(c).unwrap()).unwrap();
        let rhs = ab.add(&s.mul(a, c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(s.mul(a, &s.one()).unwrap(), a.clone());
    }

    #[test]
    fn inverse_of_unit((s, v) in surface_with_classes(1)) {
        let a = &v[0];
        prop_assume!(!a.deg0.is_zero());
        let inv = s.inverse(a).unwrap();
        prop_assert_eq!(s.mul(a, &inv).unwrap(), s.one());
    }

    #[test]
    fn segre_inverts_chern((s, e) in surface().prop_flat_map(|s| { let b = bundle_on(&s); (Just(s), b) })) {
        let prod = s.mul(&chern_total(&e), &segre_total(&s, &e).unwrap()).unwrap();
        prop_assert_eq!(prod, s.one());
    }

    #[test]
    fn whitney_sum((s, e, f) in surface().prop_flat_map(|s| { let a = bundle_on(&s); let b = bundle_on(&s); (Just(s), a, b) })) {
        let sum = direct_sum(&s, &e, &f).unwrap();
        prop_assert_eq!(chern_total(&sum), s.mul(&chern_total(&e), &chern_total(&f)).unwrap());
    }

    #[test]
    fn twist_composes((s, e, l, m) in surface().prop_flat_map(|s| {
        let e = bundle_on(&s);
        let l = line_on(&s);
        let m = line_on(&s);
        (Just(s), e, l, m)
    })) {
        let lm = twist_bundle(&s, &l, &m).unwrap();
        let once = twist_bundle(&s, &e, &lm).unwrap();
        let twice = twist_bundle(&s, &twist_bundle(&s, &e, &l).unwrap(), &m).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn eta_powers_multiply(a in q(), b in q()) {
        let lhs = eta_power_expand(&(&a + &b), 7);
        let rhs = eta_power_expand(&a, 7).mul(&eta_power_expand(&b, 7));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(eta_power_expand(&Rational::zero(), 7).coeffs().iter().skip(1).all(Zero::is_zero));
        prop_assert_eq!(eta_power_expand(&a, 7).coeff(0), Rational::one());
    }

    #[test]
    fn bareiss_rank_matches_naive(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6), dup in any::<bool>()) {
        let mut rows: Vec<Vec<Rational>> = rows.into_iter().map(|r| r.into_iter().map(|x| frac(x, 2)).collect()).collect();
        if dup {
            let extra: Vec<Rational> = rows[0].iter().zip(rows.last().unwrap()).map(|(a, b)| a * rat(3) - b).collect();
            rows.push(extra);
        }
        let m = Matrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(m.rank(), naive_rank(&rows));
    }

    #[test]
    fn rational_round_trip(x in q()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }
}
