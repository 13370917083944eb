//! Randomized invariants of the exact layers.

use num_traits::{One, Zero};
use proptest::prelude::*;

use nichols_cft::braiding::{generalized_cartan, reflect, twist_equivalent, weyl_orbit};
use nichols_cft::catalog::{self, Params};
use nichols_cft::charge::{central_charge_rank2, solve_xi, GramMatrix};
use nichols_cft::exact::{rat, Cyclotomic, ExactMatrix, Rational, RationalAngle};
use nichols_cft::freefield::{BosonSpace, Field, Momentum};
use nichols_cft::suite::orbit_dimension_invariance_2_2;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn arb_angle() -> impl Strategy<Value = RationalAngle> {
    (-24i64..=24, 1i64..=12).prop_map(|(n, d)| RationalAngle::from_ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn angle_group_laws(a in arb_angle(), b in arb_angle(), c in arb_angle()) {
        let left = &(&a * &b) * &c;
        let right = &a * &(&b * &c);
        prop_assert_eq!(left, right);
        prop_assert_eq!(&a * &a.inverse(), RationalAngle::zero());
        prop_assert_eq!(&a * &b, &b * &a);
        // inverse of t is (1 - t) mod 1
        let inv = a.inverse();
        if a.t().is_zero() {
            prop_assert!(inv.t().is_zero());
        } else {
            prop_assert_eq!(inv.t().clone(), Rational::one() - a.t());
        }
    }

    #[test]
    fn rank_equals_transpose_rank(rows in proptest::collection::vec(
        proptest::collection::vec(arb_rational(), 4), 3)) {
        let m = ExactMatrix::from_rows(rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_multiplies_back(
        entries in proptest::collection::vec(arb_rational(), 9),
        rhs in proptest::collection::vec(arb_rational(), 3),
    ) {
        let rows: Vec<Vec<Rational>> = entries.chunks(3).map(<[Rational]>::to_vec).collect();
        let m = ExactMatrix::from_rows(rows.clone());
        if let Ok(x) = m.solve(&rhs) {
            for i in 0..3 {
                let mut acc = Rational::zero();
                for j in 0..3 {
                    acc += &rows[i][j] * &x[j];
                }
                prop_assert_eq!(acc, rhs[i].clone());
            }
        }
    }

    #[test]
    fn cyclotomic_embedding_is_multiplicative(
        a in -6i64..=6, b in -6i64..=6, c in -6i64..=6, d in -6i64..=6, k in 2u64..=4,
    ) {
        // random pair in Q(zeta_6), embedded into Q(zeta_{6k})
        let scaled = |power: u64, by: i64| {
            Cyclotomic::root_power(6, power).mul(&Cyclotomic::from_rational(6, rat(by, 1)))
        };
        let x = scaled(1, a).add(&Cyclotomic::from_rational(6, rat(b, 1)));
        let y = scaled(5, c).add(&Cyclotomic::from_rational(6, rat(d, 1)));
        let lhs = x.mul(&y).embed(6 * k).unwrap();
        let rhs = x.embed(6 * k).unwrap().mul(&y.embed(6 * k).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closed_form_matches_solver(g11 in arb_rational(), g12 in arb_rational(), g22 in arb_rational()) {
        let g = GramMatrix::rank2(g11, g12, g22);
        if !g.det2().is_zero() {
            let closed = central_charge_rank2(&g).unwrap();
            let solved = solve_xi(&g).unwrap().charge;
            prop_assert_eq!(closed, solved);
        }
    }

    #[test]
    fn block_diagonal_charges_add(a in arb_rational(), b in arb_rational()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = GramMatrix::new(vec![
            vec![a.clone(), Rational::zero()],
            vec![Rational::zero(), b.clone()],
        ]);
        let joint = solve_xi(&g).unwrap().charge;
        let ca = solve_xi(&GramMatrix::new(vec![vec![a]])).unwrap().charge;
        let cb = solve_xi(&GramMatrix::new(vec![vec![b]])).unwrap().charge;
        prop_assert_eq!(joint, ca + cb);
    }

    #[test]
    fn wick_product_weights_add(
        k1 in 1u32..=3, k2 in 1u32..=3, d1 in 0usize..2, d2 in 0usize..2,
    ) {
        let g = GramMatrix::rank2(rat(2, 3), rat(-1, 3), rat(2, 3));
        let s = BosonSpace::new(g).unwrap();
        let a = Field::deriv(2, d1, k1);
        let b = Field::deriv(2, d2, k2).mul(&Field::vertex(Momentum(vec![rat(1, 1), rat(2, 1)])));
        let w = s.weight(&a.mul(&b)).unwrap();
        prop_assert_eq!(w, s.weight(&a).unwrap() + s.weight(&b).unwrap());
    }
}

#[test]
fn reflections_are_involutive_on_catalog_items() {
    let cases: [(&str, Vec<(&str, i64)>); 6] = [
        ("2.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        ("2.2", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        ("2.3", vec![("m", 0), ("s", 1), ("j", 0), ("p", 5)]),
        ("2.4.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        ("2.4.2", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        ("3.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
    ];
    for (id, pairs) in cases {
        let item = catalog::get_item(id).unwrap();
        let b = item.braiding(&Params::from_pairs(&pairs)).unwrap();
        for k in 0..2 {
            let once = reflect(&b, k).unwrap();
            assert_eq!(once.at(k, k), b.at(k, k), "{id}: pivot moved");
            let twice = reflect(&once, k).unwrap();
            assert!(twist_equivalent(&twice, &b), "{id}: double reflection at {k}");
        }
    }
}

#[test]
fn cartan_type_orbits_keep_their_cartan_matrix() {
    // items stable under reflections: every orbit member has the same
    // generalized Cartan matrix
    for (id, pairs) in [
        ("2.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 7)]),
        ("2.4.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        ("2.4.2", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
    ] {
        let item = catalog::get_item(id).unwrap();
        let b = item.braiding(&Params::from_pairs(&pairs)).unwrap();
        let a0 = generalized_cartan(&b).unwrap();
        for class in weyl_orbit(&b, 64).unwrap() {
            assert_eq!(class.cartan, a0, "{id}");
        }
    }
}

#[test]
fn orbits_terminate_on_rank2_catalog_items() {
    let cases: [(&str, Vec<(&str, i64)>); 8] = [
        ("2.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        ("2.2", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        ("2.3", vec![("m", 0), ("s", 1), ("j", 0), ("p", 5)]),
        ("2.5", vec![("m", 0), ("n", 0), ("j", 0), ("r", 1)]),
        ("2.6", vec![("m", 0), ("n", 0), ("j", 0), ("r", 1)]),
        ("2.7", vec![("m", 0), ("n", 3), ("j", 0), ("r", -7)]),
        ("3.2.1", vec![("m", 0), ("n", 0), ("l", 0), ("s", 1)]),
        ("4.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
    ];
    for (id, pairs) in cases {
        let item = catalog::get_item(id).unwrap();
        let b = item.braiding(&Params::from_pairs(&pairs)).unwrap();
        let orbit = weyl_orbit(&b, 64).unwrap();
        assert!(
            (1..=8).contains(&orbit.len()),
            "{id}: orbit size {}",
            orbit.len()
        );
    }
}

#[test]
fn nichols_dimension_is_an_orbit_invariant() {
    let dims = orbit_dimension_invariance_2_2().unwrap();
    assert_eq!(dims.len(), 3);
    assert!(dims.iter().all(|&d| d == 12), "{dims:?}");
}

#[test]
fn item_1_charge_is_a_sum_of_single_boson_charges() {
    let item = catalog::get_item("1").unwrap();
    for (p1, p2, n1, n2) in [(2, 3, 0, 0), (3, 5, 0, 0), (5, 7, 1, 0), (4, 9, 0, -1)] {
        let params = Params::from_pairs(&[("n1", n1), ("n2", n2), ("j", 0), ("p1", p1), ("p2", p2)]);
        let g = item.gram(&params).unwrap();
        let c = solve_xi(&g).unwrap().charge;
        let expect = catalog::expected_charge("1", catalog::SolutionClass::Regular, &params).unwrap();
        assert_eq!(c, expect);
    }
}
