//! The verification battery: every headline claim as an executable check.
//!
//! `run_paper_suite(false)` is the fast tier; the deep tier adds the
//! octuplet at p = 3. Results are deterministic: random inputs come from
//! a fixed-seed generator and all iteration orders are canonical.

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::braiding;
use crate::braiding::GeneralizedCartanMatrix;
use crate::catalog::{self, Params, SolutionClass};
use crate::charge::{
    self, central_charge_rank2, check_cartan_log, enumerate_solutions, fkw_charge, solve_xi,
    GramMatrix, ScanBounds,
};
use crate::exact::{format_rational, rat, Rational};
use crate::freefield::{self, BosonSpace, Momentum};
use crate::nichols::{BraidedSpace, NicholsDimension};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub details: String,
}

impl CriterionResult {
    fn new(id: u32, name: &'static str, pass: bool, details: impl Into<String>) -> Self {
        CriterionResult { id, name, pass, details: details.into() }
    }
}

/// Golden OPE coefficients of the octuplet at p = 2, frozen from a run of
/// the engine and cross-checked internally (the dT coefficient at order
/// 6p-7 must equal c2/2 independently).
pub const OCTUPLET_P2_GOLDEN: (&str, &str, &str, &str) = ("60", "-48", "-18", "-18");

pub fn run_paper_suite(deep: bool) -> Vec<CriterionResult> {
    let mut out = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
        criterion_12(),
        criterion_13(),
        criterion_14(deep),
        criterion_15(),
    ];
    out.sort_by_key(|c| c.id);
    out
}

fn rand_rational(rng: &mut StdRng, max_num: i64, max_den: i64) -> Rational {
    let num = rng.gen_range(-max_num..=max_num);
    let den = rng.gen_range(1..=max_den);
    rat(num, den)
}

/// 1. Closed form vs solver on random nonsingular rank-2 Grams.
fn criterion_1() -> CriterionResult {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let mut checked = 0;
    while checked < 1000 {
        let g = GramMatrix::rank2(
            rand_rational(&mut rng, 40, 20),
            rand_rational(&mut rng, 40, 20),
            rand_rational(&mut rng, 40, 20),
        );
        if g.det2().is_zero() {
            continue;
        }
        let closed = central_charge_rank2(&g).unwrap();
        let solved = solve_xi(&g).unwrap().charge;
        if closed != solved {
            return CriterionResult::new(
                1,
                "closed form equals solver on random Grams",
                false,
                format!("mismatch at {g:?}: {closed} vs {solved}"),
            );
        }
        checked += 1;
    }
    CriterionResult::new(
        1,
        "closed form equals solver on random Grams",
        true,
        "1000 random nonsingular rank-2 Gram matrices",
    )
}

/// 2. Charge invariance under reflections for constructed (G, A) pairs
/// satisfying the lifted Cartan conditions, both branches exercised.
fn criterion_2() -> CriterionResult {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let offdiag = [-1i64, -2, -3];
    let mut verified = 0;
    let mut branch_first = 0usize;
    let mut branch_second = 0usize;
    let mut attempts = 0;
    while verified < 200 {
        attempts += 1;
        if attempts > 100_000 {
            return CriterionResult::new(2, "charge invariance theorem", false, "generator stalled");
        }
        let rank3 = verified % 4 == 3;
        let (g, a) = if rank3 {
            // uniform off-diagonal rows make every ordered pair satisfy
            // the second branch, leaving the off-diagonal entries free
            let rows: Vec<i64> = (0..3).map(|_| offdiag[rng.gen_range(0..3)]).collect();
            let mut am = vec![vec![0i64; 3]; 3];
            let mut gm = vec![vec![Rational::zero(); 3]; 3];
            for i in 0..3 {
                am[i][i] = 2;
                for j in 0..3 {
                    if i != j {
                        am[i][j] = rows[i];
                    }
                }
                gm[i][i] = rat(2, 1) / rat(1 - rows[i], 1);
            }
            for i in 0..3 {
                for j in i + 1..3 {
                    let v = rand_rational(&mut rng, 8, 6);
                    gm[i][j] = v.clone();
                    gm[j][i] = v;
                }
            }
            (GramMatrix::new(gm), GeneralizedCartanMatrix { a: am })
        } else {
            let a12 = offdiag[rng.gen_range(0..3)];
            let a21 = offdiag[rng.gen_range(0..3)];
            let combo = verified % 4;
            let (g11, g12, g22) = match combo {
                // first/first
                0 => {
                    let g11 = rand_rational(&mut rng, 8, 6);
                    let g12 = rat(a12, 2) * &g11;
                    let g22 = rat(2, 1) * &g12 / rat(a21, 1);
                    (g11, g12, g22)
                }
                // first/second
                1 => {
                    let g11 = rand_rational(&mut rng, 8, 6);
                    let g12 = rat(a12, 2) * &g11;
                    (g11, g12, rat(2, 1) / rat(1 - a21, 1))
                }
                // second/first
                2 => {
                    let g22 = rand_rational(&mut rng, 8, 6);
                    let g12 = rat(a21, 2) * &g22;
                    (rat(2, 1) / rat(1 - a12, 1), g12, g22)
                }
                // second/second
                _ => (
                    rat(2, 1) / rat(1 - a12, 1),
                    rand_rational(&mut rng, 8, 6),
                    rat(2, 1) / rat(1 - a21, 1),
                ),
            };
            (
                GramMatrix::rank2(g11, g12, g22),
                GeneralizedCartanMatrix { a: vec![vec![2, a12], vec![a21, 2]] },
            )
        };
        let branches = check_cartan_log(&g, &a);
        if !branches.all_satisfied() {
            continue;
        }
        for (_, b) in &branches.pairs {
            match b {
                charge::Branch::First | charge::Branch::Both => branch_first += 1,
                charge::Branch::Second => branch_second += 1,
                charge::Branch::Neither => {}
            }
        }
        let report = match charge::verify_invariance(&g, &a) {
            Ok(r) => r,
            Err(charge::ChargeError::DegenerateMomenta) => continue,
            Err(e) => {
                return CriterionResult::new(2, "charge invariance theorem", false, e.to_string())
            }
        };
        if !report.invariant() {
            return CriterionResult::new(
                2,
                "charge invariance theorem",
                false,
                format!("invariance or xi-shift failed for {g:?}"),
            );
        }
        verified += 1;
    }
    let both = branch_first > 0 && branch_second > 0;
    CriterionResult::new(
        2,
        "charge invariance theorem",
        both,
        format!(
            "200 constructed pairs (rank 2 and 3); branch counts first={branch_first} second={branch_second}"
        ),
    )
}

/// 3. Item 2.1 regular charges against the W3 closed form for p = 2..12.
fn criterion_3() -> CriterionResult {
    for p in 2..=12 {
        let params = Params::from_pairs(&[("m", 0), ("n", 0), ("j", 0), ("p", p)]);
        let item = catalog::get_item("2.1").unwrap();
        let g = item.gram(&params).unwrap();
        let c = solve_xi(&g).unwrap().charge;
        let t = rat(1, p);
        let expect = rat(50, 1) - rat(24, 1) * &t - rat(24, 1) / &t;
        let evaluated = catalog::expected_charge("2.1", SolutionClass::Regular, &params).unwrap();
        if c != expect || evaluated != expect {
            return CriterionResult::new(
                3,
                "item 2.1 charges match the W3 closed form",
                false,
                format!("p={p}: gram {c}, closed {expect}, evaluator {evaluated}"),
            );
        }
    }
    CriterionResult::new(3, "item 2.1 charges match the W3 closed form", true, "p = 2..12, j = 0")
}

/// 4. Items 2.2 and 3.1: scans find only m = n = 0; charges match the
/// coset form; 3.1 satisfies the level duality at j = 0.
fn criterion_4() -> CriterionResult {
    let bounds = ScanBounds { int_bound: 10, order_min: 3, order_max: 12 };
    for id in ["2.2", "3.1"] {
        let item = catalog::get_item(id).unwrap();
        let records = enumerate_solutions(item, &bounds);
        if records.is_empty() {
            return CriterionResult::new(4, "items 2.2/3.1 admit only regular solutions", false, format!("empty scan for {id}"));
        }
        for r in &records {
            if r.params.get("m") != 0 || r.params.get("n") != 0 {
                return CriterionResult::new(
                    4,
                    "items 2.2/3.1 admit only regular solutions",
                    false,
                    format!("{id}: solution at {}", r.params),
                );
            }
            let Some((_, class)) = &r.class else {
                return CriterionResult::new(4, "items 2.2/3.1 admit only regular solutions", false, format!("{id}: unclassified {}", r.params));
            };
            if *class != SolutionClass::Regular {
                return CriterionResult::new(4, "items 2.2/3.1 admit only regular solutions", false, format!("{id}: class {class} at {}", r.params));
            }
            let expect = catalog::expected_charge(id, SolutionClass::Regular, &r.params).unwrap();
            if r.charge.as_ref() != Some(&expect) {
                return CriterionResult::new(
                    4,
                    "items 2.2/3.1 admit only regular solutions",
                    false,
                    format!("{id}: charge mismatch at {}", r.params),
                );
            }
        }
    }
    // duality 1/(p+1) + 1/(k+2) = 1 at j = 0 for item 3.1
    for p in 3..=12 {
        let k = rat(1, p) + rat(0, 1) - rat(1, 1);
        let lhs = rat(1, p + 1) + Rational::one() / (&k + rat(2, 1));
        if lhs != Rational::one() {
            return CriterionResult::new(4, "items 2.2/3.1 admit only regular solutions", false, format!("duality fails at p={p}"));
        }
    }
    CriterionResult::new(
        4,
        "items 2.2/3.1 admit only regular solutions",
        true,
        "|m|,|n|,|j| <= 10, 3 <= |p| <= 12; coset charges and 3.1 duality exact",
    )
}

/// 5. Item 2.4.1: exactly the two printed peculiar families plus the
/// regular one; charges match; the Hamiltonian-reduction formula agrees.
fn criterion_5() -> CriterionResult {
    let item = catalog::get_item("2.4.1").unwrap();
    let bounds = ScanBounds { int_bound: 10, order_min: 4, order_max: 12 };
    let records = enumerate_solutions(item, &bounds);
    let mut seen: Vec<String> = Vec::new();
    for r in &records {
        let Some((name, _)) = &r.class else {
            return CriterionResult::new(5, "item 2.4.1 families and WB2 charge", false, format!("unclassified {}", r.params));
        };
        if !seen.contains(name) {
            seen.push(name.clone());
        }
        let family = item.classify(&r.params).unwrap();
        let expect = (family.charge.as_ref().unwrap().eval)(&r.params).unwrap();
        if r.charge.as_ref() != Some(&expect) {
            return CriterionResult::new(5, "item 2.4.1 families and WB2 charge", false, format!("charge mismatch at {}", r.params));
        }
    }
    seen.sort();
    if seen != vec!["peculiar p=-4", "peculiar p=4", "regular"] {
        return CriterionResult::new(5, "item 2.4.1 families and WB2 charge", false, format!("families seen: {seen:?}"));
    }
    // FKW with B2 data reproduces 86 - 60(k+3) - 30/(k+3)
    let fkw = item.fkw.as_ref().unwrap();
    let samples = [
        rat(-2, 1), rat(-1, 1), rat(1, 2), rat(1, 3), rat(5, 7),
        rat(3, 1), rat(-7, 2), rat(22, 7), rat(-13, 5), rat(9, 4),
    ];
    for k in samples {
        let c = fkw_charge(
            fkw.rank,
            &rat(fkw.dual_coxeter, 1),
            &fkw.rho_sq_printed,
            &fkw.rho_dual_sq_printed,
            &fkw.rho_rho_dual,
            &k,
        )
        .unwrap();
        let t = &k + rat(3, 1);
        let closed = rat(86, 1) - rat(60, 1) * &t - rat(30, 1) / &t;
        if c != closed {
            return CriterionResult::new(5, "item 2.4.1 families and WB2 charge", false, format!("FKW mismatch at k={}", format_rational(&k)));
        }
    }
    CriterionResult::new(
        5,
        "item 2.4.1 families and WB2 charge",
        true,
        format!("{} scan records; families regular, p=4, p=-4; FKW at 10 levels", records.len()),
    )
}

/// 6. Item 2.4.2: regular charges match the printed form; the printed
/// rho assignments only work after swapping, and that is flagged.
fn criterion_6() -> CriterionResult {
    let item = catalog::get_item("2.4.2").unwrap();
    for (p, j) in [(4, 0), (5, 0), (7, 0), (5, 1), (-5, 0), (9, -1)] {
        let params = Params::from_pairs(&[("m", 0), ("n", 0), ("j", j), ("p", p)]);
        let g = item.gram(&params).unwrap();
        let c = solve_xi(&g).unwrap().charge;
        let t = rat(1, p) + rat(j, 1);
        let closed = rat(194, 1) - rat(168, 1) * &t - rat(56, 1) / &t;
        let evaluated = catalog::expected_charge("2.4.2", SolutionClass::Regular, &params).unwrap();
        if c != closed || evaluated != closed {
            return CriterionResult::new(6, "item 2.4.2 WG2 charge and rho-swap flag", false, format!("mismatch at p={p}, j={j}"));
        }
    }
    let fkw = item.fkw.as_ref().unwrap();
    if !fkw.swap_needed {
        return CriterionResult::new(6, "item 2.4.2 WG2 charge and rho-swap flag", false, "discrepancy flag not raised");
    }
    let mut swapped_ok = true;
    let mut printed_differs = false;
    for k in [rat(-3, 1), rat(-7, 2), rat(1, 3), rat(2, 1), rat(-9, 4)] {
        let t = &k + rat(4, 1);
        let closed = rat(194, 1) - rat(168, 1) * &t - rat(56, 1) / &t;
        // swapped: rho^2 and rho_dual^2 exchanged relative to print
        let swapped = fkw_charge(
            fkw.rank,
            &rat(fkw.dual_coxeter, 1),
            &fkw.rho_dual_sq_printed,
            &fkw.rho_sq_printed,
            &fkw.rho_rho_dual,
            &k,
        )
        .unwrap();
        let printed = fkw_charge(
            fkw.rank,
            &rat(fkw.dual_coxeter, 1),
            &fkw.rho_sq_printed,
            &fkw.rho_dual_sq_printed,
            &fkw.rho_rho_dual,
            &k,
        )
        .unwrap();
        swapped_ok &= swapped == closed;
        printed_differs |= printed != closed;
    }
    let pass = swapped_ok && printed_differs;
    CriterionResult::new(
        6,
        "item 2.4.2 WG2 charge and rho-swap flag",
        pass,
        format!("swapped assignment matches: {swapped_ok}; printed assignment differs somewhere: {printed_differs}"),
    )
}

/// 7. Item 2.5 at n = 0 gives c = 26.
fn criterion_7() -> CriterionResult {
    let params = Params::from_pairs(&[("m", 0), ("n", 0), ("j", 0), ("r", 1)]);
    let evaluated = catalog::expected_charge("2.5", SolutionClass::Regular, &params).unwrap();
    let item = catalog::get_item("2.5").unwrap();
    let g = item.gram(&params).unwrap();
    let solved = solve_xi(&g).unwrap().charge;
    let pass = evaluated == rat(26, 1) && solved == rat(26, 1);
    CriterionResult::new(
        7,
        "item 2.5 regular solution hits c = 26",
        pass,
        format!("evaluator {evaluated}, solver {solved}"),
    )
}

/// 8. Remaining charge-bearing items match their printed closed forms at
/// five parameter points each.
fn criterion_8() -> CriterionResult {
    // (item, family name, five parameter tuples)
    let cases: Vec<(&str, &str, Vec<Vec<(&str, i64)>>)> = vec![
        ("2.3", "regular", vec![
            vec![("m", 0), ("s", 1), ("j", 0), ("p", 4)],
            vec![("m", 0), ("s", 1), ("j", 0), ("p", 5)],
            vec![("m", 0), ("s", 1), ("j", 1), ("p", 7)],
            vec![("m", 0), ("s", 1), ("j", 0), ("p", -5)],
            vec![("m", 0), ("s", 1), ("j", -1), ("p", 9)],
        ]),
        ("2.3", "peculiar p=3", vec![
            vec![("m", 0), ("s", 2), ("j", -1), ("p", 3)],
            vec![("m", 0), ("s", 5), ("j", -3), ("p", 3)],
            vec![("m", 0), ("s", -4), ("j", 3), ("p", 3)],
            vec![("m", 0), ("s", 8), ("j", -5), ("p", 3)],
            vec![("m", 0), ("s", -7), ("j", 5), ("p", 3)],
        ]),
        ("2.6", "regular", vec![
            vec![("m", 0), ("n", 0), ("j", 0), ("r", 1)],
            vec![("m", 0), ("n", 2), ("j", 0), ("r", -7)],
            vec![("m", 0), ("n", 3), ("j", 0), ("r", -11)],
            vec![("m", 0), ("n", 5), ("j", 0), ("r", -19)],
            vec![("m", 0), ("n", 6), ("j", -1), ("r", 1)],
        ]),
        ("2.7", "L=1 mod 6", vec![
            vec![("m", 0), ("n", 3), ("j", 0), ("r", -7)],
            vec![("m", 0), ("n", 15), ("j", 0), ("r", -37)],
            vec![("m", 0), ("n", 15), ("j", -1), ("r", -7)],
            vec![("m", 0), ("n", 27), ("j", 0), ("r", -67)],
            vec![("m", 0), ("n", -21), ("j", 0), ("r", 53)],
        ]),
        ("2.7", "L=3 mod 6", vec![
            vec![("m", 0), ("n", 7), ("j", 0), ("r", -17)],
            vec![("m", 0), ("n", 19), ("j", 0), ("r", -47)],
            vec![("m", 0), ("n", 19), ("j", -1), ("r", -17)],
            vec![("m", 0), ("n", 31), ("j", 0), ("r", -77)],
            vec![("m", 0), ("n", -17), ("j", 0), ("r", 43)],
        ]),
        ("3.2.1", "s=1-3L", vec![
            vec![("m", 0), ("n", 0), ("l", 0), ("s", 1)],
            vec![("m", 0), ("n", 1), ("l", 0), ("s", 1)],
            vec![("m", 0), ("n", 2), ("l", 1), ("s", -2)],
            vec![("m", 0), ("n", -1), ("l", 1), ("s", -2)],
            vec![("m", 0), ("n", 3), ("l", -1), ("s", 4)],
        ]),
        ("3.2.1", "s=-n-3L", vec![
            vec![("m", 0), ("n", 1), ("l", 0), ("s", -1)],
            vec![("m", 0), ("n", 2), ("l", 0), ("s", -2)],
            vec![("m", 0), ("n", 4), ("l", 0), ("s", -4)],
            vec![("m", 0), ("n", -2), ("l", 0), ("s", 2)],
            vec![("m", 0), ("n", -4), ("l", 1), ("s", 1)],
        ]),
        ("3.2.2", "regular", vec![
            vec![("m", 0), ("n", 0), ("l", 0), ("s", 1)],
            vec![("m", 0), ("n", 1), ("l", 0), ("s", 1)],
            vec![("m", 0), ("n", 2), ("l", 1), ("s", -2)],
            vec![("m", 0), ("n", -1), ("l", 0), ("s", 1)],
            vec![("m", 0), ("n", -2), ("l", -1), ("s", 4)],
        ]),
        ("4.1", "regular", vec![
            vec![("m", 0), ("n", 0), ("j", 0), ("p", 5)],
            vec![("m", 0), ("n", 0), ("j", 0), ("p", 6)],
            vec![("m", 0), ("n", 0), ("j", 0), ("p", 7)],
            vec![("m", 0), ("n", 0), ("j", 1), ("p", 5)],
            vec![("m", 0), ("n", 0), ("j", 0), ("p", -5)],
        ]),
    ];
    let mut count = 0;
    for (id, family_name, tuples) in cases {
        let item = catalog::get_item(id).unwrap();
        for pairs in tuples {
            let params = Params::from_pairs(&pairs);
            let family = item
                .families
                .iter()
                .find(|f| f.name == family_name)
                .expect("family recorded");
            if !(family.matches)(&params) || !item.params_valid(&params) {
                return CriterionResult::new(8, "printed closed forms at sample parameters", false, format!("{id} [{family_name}]: tuple {params} does not match"));
            }
            let expect = (family.charge.as_ref().unwrap().eval)(&params).unwrap();
            let g = item.gram(&params).unwrap();
            let solved = solve_xi(&g).unwrap().charge;
            if solved != expect {
                return CriterionResult::new(
                    8,
                    "printed closed forms at sample parameters",
                    false,
                    format!("{id} [{family_name}] at {params}: {solved} vs {expect}"),
                );
            }
            if let Some(alt) = family.charge.as_ref().unwrap().eval_alt {
                if let Ok(alt_val) = alt(&params) {
                    if alt_val != expect {
                        return CriterionResult::new(8, "printed closed forms at sample parameters", false, format!("{id} [{family_name}]: alternate mapping disagrees at {params}"));
                    }
                }
            }
            count += 1;
        }
    }
    CriterionResult::new(
        8,
        "printed closed forms at sample parameters",
        true,
        format!("{count} (item, family, parameters) evaluations, all exact"),
    )
}

fn braided_space(id: &str, pairs: &[(&str, i64)]) -> BraidedSpace {
    let item = catalog::get_item(id).unwrap();
    BraidedSpace::new(item.braiding(&Params::from_pairs(pairs)).unwrap())
}

fn series_is_palindromic(series: &[u64]) -> bool {
    let trimmed: Vec<u64> = {
        let mut s = series.to_vec();
        while s.last() == Some(&0) {
            s.pop();
        }
        s
    };
    let n = trimmed.len();
    (0..n).all(|i| trimmed[i] == trimmed[n - 1 - i])
}

/// 9. Nichols dimensions via the symmetrizer, the shuffle cross-oracle,
/// and palindromic Hilbert series.
fn criterion_9() -> CriterionResult {
    let cases: [(&str, Vec<(&str, i64)>, u64); 6] = [
        ("2.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 2)], 8),
        ("2.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 3)], 27),
        ("2.2", vec![("m", 0), ("n", 0), ("j", 0), ("p", 3)], 12),
        ("2.2", vec![("m", 0), ("n", 0), ("j", 0), ("p", 4)], 16),
        ("3.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 3)], 12),
        ("3.2.2", vec![("m", 0), ("n", 0), ("l", 0), ("s", 1)], 36),
    ];
    let mut details = Vec::new();
    for (id, pairs, expected) in &cases {
        let space = braided_space(id, pairs);
        let dim = match space.nichols_dimension(12) {
            Ok(NicholsDimension::Finite { total, series }) => {
                if !series_is_palindromic(&series) {
                    return CriterionResult::new(9, "Nichols dimensions with cross-oracle", false, format!("{id}: series {series:?} not palindromic"));
                }
                total
            }
            Ok(NicholsDimension::Unbounded { cap, .. }) => {
                return CriterionResult::new(9, "Nichols dimensions with cross-oracle", false, format!("{id}: no zero degree below {cap}"));
            }
            Err(e) => {
                return CriterionResult::new(9, "Nichols dimensions with cross-oracle", false, format!("{id}: {e}"));
            }
        };
        if dim != *expected {
            return CriterionResult::new(
                9,
                "Nichols dimensions with cross-oracle",
                false,
                format!("{id}: dimension {dim}, expected {expected}"),
            );
        }
        // cross-oracle on every multidegree of total degree <= 8
        for total in 0..=8usize {
            for a in 0..=total {
                let d = vec![a, total - a];
                let sym = space.symmetrizer_rank(&d).unwrap();
                let shuf = space.shuffle_rank(&d).unwrap();
                if sym != shuf {
                    return CriterionResult::new(
                        9,
                        "Nichols dimensions with cross-oracle",
                        false,
                        format!("{id}: oracle mismatch at {d:?}: {sym} vs {shuf}"),
                    );
                }
            }
        }
        details.push(format!("{id}:{dim}"));
    }
    CriterionResult::new(
        9,
        "Nichols dimensions with cross-oracle",
        true,
        format!("{}; shuffle oracle agrees on all multidegrees of degree <= 8; series palindromic", details.join(", ")),
    )
}

/// 10. Presentation ideal generators vanish in the Nichols quotient; the
/// negative control does not.
fn criterion_10() -> CriterionResult {
    let cases: [(&str, Vec<(&str, i64)>); 4] = [
        ("2.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 3)]),
        ("2.2", vec![("m", 0), ("n", 0), ("j", 0), ("p", 3)]),
        ("3.1", vec![("m", 0), ("n", 0), ("j", 0), ("p", 3)]),
        ("3.2.2", vec![("m", 0), ("n", 0), ("l", 0), ("s", 1)]),
    ];
    for (id, pairs) in &cases {
        let space = braided_space(id, pairs);
        let params = Params::from_pairs(pairs);
        let gens = catalog::presentation_generators(id, &params).unwrap();
        for g in gens {
            let e = space.generator_element(&g.word, g.power);
            match space.vanishes_in_nichols(&e) {
                Ok(true) => {}
                Ok(false) => {
                    return CriterionResult::new(10, "ideal generators vanish in the quotient", false, format!("{id}: generator {g} does not vanish"));
                }
                Err(e) => {
                    return CriterionResult::new(10, "ideal generators vanish in the quotient", false, format!("{id}: {e}"));
                }
            }
        }
    }
    // negative control: a PBW generator must survive
    let space = braided_space("2.4.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
    let e = space.q_commutator(&catalog::BracketWord::left_nested(&[0, 0, 1]));
    match space.vanishes_in_nichols(&e) {
        Ok(false) => {}
        _ => {
            return CriterionResult::new(10, "ideal generators vanish in the quotient", false, "negative control [F1,F1,F2] vanished for 2.4.1 at p=5");
        }
    }
    CriterionResult::new(
        10,
        "ideal generators vanish in the quotient",
        true,
        "items 2.1, 2.2, 3.1 (p=3), 3.2.2; negative control nonzero for 2.4.1 (p=5)",
    )
}

/// 11. Free-field layer: weight-2 centralizer is one-dimensional and the
/// TT OPE reproduces the Gram charge; the weight-3 generator matches its
/// printed coefficients.
fn criterion_11() -> CriterionResult {
    let grams: [(&str, i64); 3] = [("2.1", 3), ("2.2", 3), ("2.4.1", 5)];
    for (id, p) in grams {
        let item = catalog::get_item(id).unwrap();
        let params = Params::from_pairs(&[("m", 0), ("n", 0), ("j", 0), ("p", p)]);
        let g = item.gram(&params).unwrap();
        let space = match BosonSpace::new(g) {
            Ok(s) => s,
            Err(e) => return CriterionResult::new(11, "energy-momentum tensor from screenings", false, format!("{id}: {e}")),
        };
        let screenings = [Momentum::unit(2, 0), Momentum::unit(2, 1)];
        let basis = match space.centralizer_basis(2, &screenings) {
            Ok(b) => b,
            Err(e) => return CriterionResult::new(11, "energy-momentum tensor from screenings", false, format!("{id}: {e}")),
        };
        if basis.len() != 1 {
            return CriterionResult::new(11, "energy-momentum tensor from screenings", false, format!("{id}: weight-2 centralizer has dimension {}", basis.len()));
        }
        let t = space.build_t();
        let ope = space.ope(&t, &t, 0).unwrap();
        let c_from_ope = ope.coefficient(4).coefficient(&vec![], &Momentum::zero(2)) * rat(2, 1);
        if &c_from_ope != space.central_charge() {
            return CriterionResult::new(11, "energy-momentum tensor from screenings", false, format!("{id}: TT charge {c_from_ope}"));
        }
    }
    for p in [2, 3, 5] {
        match freefield::w3_generator(p) {
            Ok(report) if report.pass => {}
            Ok(report) => {
                let failed: Vec<String> =
                    report.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
                return CriterionResult::new(11, "energy-momentum tensor from screenings", false, format!("spin-3 generator at p={p}: {failed:?}"));
            }
            Err(e) => {
                return CriterionResult::new(11, "energy-momentum tensor from screenings", false, format!("spin-3 generator at p={p}: {e}"));
            }
        }
    }
    CriterionResult::new(
        11,
        "energy-momentum tensor from screenings",
        true,
        "weight-2 centralizer = T and TT charge exact for 2.1/2.2/2.4.1; spin-3 generator coefficients exact at p = 2, 3, 5",
    )
}

/// 12. Coset currents: screening residues are total derivatives; the
/// deliberately wrong current fails.
fn criterion_12() -> CriterionResult {
    for item in ["2.2", "3.1"] {
        for p in [3, 5] {
            match freefield::coset_currents(item, p, false) {
                Ok(report) if report.pass => {}
                Ok(report) => {
                    let failed: Vec<String> =
                        report.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
                    return CriterionResult::new(12, "coset currents centralize the screenings", false, format!("{item} p={p}: {failed:?}"));
                }
                Err(e) => {
                    return CriterionResult::new(12, "coset currents centralize the screenings", false, format!("{item} p={p}: {e}"));
                }
            }
        }
    }
    let control = match freefield::coset_currents("2.2", 5, true) {
        Ok(report) => !report.pass,
        Err(_) => false,
    };
    CriterionResult::new(
        12,
        "coset currents centralize the screenings",
        control,
        if control {
            "items 2.2/3.1 at p = 3, 5; negative control fails as expected".into()
        } else {
            "negative control unexpectedly passed".to_string()
        },
    )
}

/// 13. The weight-4 primary of item 2.4.1 at p = 5 with its printed
/// quartic coefficient ratios.
fn criterion_13() -> CriterionResult {
    let report = match freefield::find_unique_primary("2.4.1", 5, 4) {
        Ok(r) => r,
        Err(e) => return CriterionResult::new(13, "unique weight-4 primary of item 2.4.1", false, e.to_string()),
    };
    let zero = Momentum::zero(2);
    let quartics: Vec<Rational> = [
        vec![(0, 1), (0, 1), (0, 1), (0, 1)],
        vec![(0, 1), (0, 1), (0, 1), (1, 1)],
        vec![(0, 1), (0, 1), (1, 1), (1, 1)],
        vec![(0, 1), (1, 1), (1, 1), (1, 1)],
        vec![(1, 1), (1, 1), (1, 1), (1, 1)],
    ]
    .iter()
    .map(|m| report.field.coefficient(m, &zero))
    .collect();
    if quartics[0].is_zero() {
        return CriterionResult::new(13, "unique weight-4 primary of item 2.4.1", false, "leading quartic coefficient vanishes");
    }
    let scale = rat(1030, 1) / &quartics[0];
    let scaled: Vec<Rational> = quartics.iter().map(|c| c * &scale).collect();
    let expect = [rat(1030, 1), rat(2060, 1), rat(-2415, 1), rat(-3445, 1), rat(-3445, 4)];
    let pass = scaled == expect;
    CriterionResult::new(
        13,
        "unique weight-4 primary of item 2.4.1",
        pass,
        format!(
            "quartic ratios {}",
            scaled.iter().map(format_rational).collect::<Vec<_>>().join(" : ")
        ),
    )
}

/// 14. The octuplet at p = 2 (p = 3 in the deep tier): eight fields with
/// the stated weights, orders and OPE structure, plus frozen golden
/// coefficients.
fn criterion_14(deep: bool) -> CriterionResult {
    let report = match freefield::octuplet(2) {
        Ok(r) => r,
        Err(e) => return CriterionResult::new(14, "octuplet structure at p = 2", false, e.to_string()),
    };
    if !report.pass {
        let failed: Vec<String> =
            report.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
        return CriterionResult::new(14, "octuplet structure at p = 2", false, format!("{failed:?}"));
    }
    let opes = match freefield::octuplet_opes(2) {
        Ok(r) => r,
        Err(e) => return CriterionResult::new(14, "octuplet structure at p = 2", false, e.to_string()),
    };
    if !opes.pass {
        let failed: Vec<String> =
            opes.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
        return CriterionResult::new(14, "octuplet structure at p = 2", false, format!("OPE checks: {failed:?}"));
    }
    let golden = OCTUPLET_P2_GOLDEN;
    if (opes.c1.as_str(), opes.c2.as_str(), opes.c3.as_str(), opes.c3_prime.as_str())
        != (golden.0, golden.1, golden.2, golden.3)
    {
        return CriterionResult::new(
            14,
            "octuplet structure at p = 2",
            false,
            format!("golden coefficients drifted: c1={} c2={} c3={} c3'={}", opes.c1, opes.c2, opes.c3, opes.c3_prime),
        );
    }
    if deep {
        match freefield::octuplet(3).and_then(|r| {
            if r.pass { freefield::octuplet_opes(3) } else { Err(crate::freefield::FreeFieldError::StructureMismatch("octuplet p=3 structure".into())) }
        }) {
            Ok(r) if r.pass => {}
            Ok(r) => {
                let failed: Vec<String> =
                    r.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
                return CriterionResult::new(14, "octuplet structure at p = 2", false, format!("p=3 OPE checks: {failed:?}"));
            }
            Err(e) => return CriterionResult::new(14, "octuplet structure at p = 2", false, format!("p=3: {e}")),
        }
    }
    CriterionResult::new(
        14,
        "octuplet structure at p = 2",
        true,
        format!(
            "eight primaries of weight 4; c1={} c2={} c3={} c3'={}{}",
            opes.c1,
            opes.c2,
            opes.c3,
            opes.c3_prime,
            if deep { "; p = 3 verified in deep tier" } else { "" }
        ),
    )
}

/// 15. Desk-scale exclusions: the big dimension formulas stay out of
/// scope; the substituted existence/uniqueness check for the weight-6
/// primary of item 2.4.2 runs here (cheap enough for the fast tier).
fn criterion_15() -> CriterionResult {
    let report = match freefield::find_unique_primary("2.4.2", 5, 6) {
        Ok(r) => r,
        Err(e) => return CriterionResult::new(15, "weight-6 primary exists and is unique (2.4.2)", false, e.to_string()),
    };
    let pass = report.primary_dim == 1;
    CriterionResult::new(
        15,
        "weight-6 primary exists and is unique (2.4.2)",
        pass,
        format!(
            "centralizer dimension {} at weight 6; primary subspace dimension {}; coefficients not asserted (none recorded)",
            report.centralizer_dim, report.primary_dim
        ),
    )
}

/// Helper used by tests and the braiding property suite: orbit dimension
/// invariance for item 2.2 at p = 3.
pub fn orbit_dimension_invariance_2_2() -> Result<Vec<u64>, String> {
    let item = catalog::get_item("2.2").map_err(|e| e.to_string())?;
    let b = item
        .braiding(&Params::from_pairs(&[("m", 0), ("n", 0), ("j", 0), ("p", 3)]))
        .map_err(|e| e.to_string())?;
    let orbit = braiding::weyl_orbit(&b, braiding::DEFAULT_ORBIT_CAP).map_err(|e| e.to_string())?;
    let mut dims = Vec::new();
    for class in &orbit {
        let space = BraidedSpace::new(class.representative.clone());
        match space.nichols_dimension(10).map_err(|e| e.to_string())? {
            NicholsDimension::Finite { total, .. } => dims.push(total),
            NicholsDimension::Unbounded { .. } => return Err("orbit member unbounded".into()),
        }
    }
    Ok(dims)
}
