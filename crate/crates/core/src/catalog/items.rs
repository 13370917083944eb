//! The item records. Everything here is data entry: defining conditions,
//! braiding templates, Gram families, recorded solution families with
//! their closed-form charges, and presentations.

use num_integer::Integer;
use num_traits::Zero;

use super::{
    BracketWord, CatalogError, ChargeEvaluator, FkwData, IdealGenerator, ItemSpec, Params,
    Presentation, PresentationCase, SolutionClass, SolutionFamily,
};
use crate::braiding::BraidingMatrix;
use crate::charge::GramMatrix;
use crate::exact::{rat, Rational, RationalAngle};

fn ang(n: i64, d: i64) -> RationalAngle {
    RationalAngle::from_ratio(n, d)
}

fn angr(t: Rational) -> RationalAngle {
    RationalAngle::new(t)
}

fn half() -> RationalAngle {
    RationalAngle::half()
}

/// `a/b` as an exact rational with `b` taken from a parameter (may be
/// negative; never zero for validated parameters).
fn frac(a: i64, b: i64) -> Rational {
    rat(a, b)
}

fn div(num: Rational, den: Rational) -> Result<Rational, CatalogError> {
    if den.is_zero() {
        Err(CatalogError::EvaluatorPole)
    } else {
        Ok(num / den)
    }
}

/// `c = c0 + c1 * t + c2 / t`.
fn pole_form(c0: Rational, c1: Rational, c2: Rational, t: Rational) -> Result<Rational, CatalogError> {
    Ok(c0 + c1 * &t + div(c2, t)?)
}

fn coprime(a: i64, n: i64) -> bool {
    a.gcd(&n) == 1
}

// Common boxed conditions per section.

fn common2(b: &BraidingMatrix) -> bool {
    let mono = b.monodromy(0, 1);
    !mono.is_one() && (&mono * b.at(1, 1)).is_one()
}

fn common3(b: &BraidingMatrix) -> bool {
    let mono = b.monodromy(0, 1);
    !mono.is_one()
        && !(&mono * b.at(0, 0)).is_one()
        && !(&mono * b.at(1, 1)).is_one()
        && b.at(1, 1) == &half()
        && matches!(b.at(0, 0).order(), 2 | 3)
}

fn common4(b: &BraidingMatrix) -> bool {
    let mono = b.monodromy(0, 1);
    !mono.is_one()
        && !(&mono * b.at(0, 0)).is_one()
        && !(&mono * b.at(1, 1)).is_one()
        && b.at(1, 1) == &half()
        && !matches!(b.at(0, 0).order(), 2 | 3)
}

fn common5(b: &BraidingMatrix) -> bool {
    let mono = b.monodromy(0, 1);
    !mono.is_one()
        && !(&mono * b.at(0, 0)).is_one()
        && !(&mono * b.at(1, 1)).is_one()
        && b.at(0, 0) != &half()
        && b.at(1, 1).order() == 3
}

fn symmetric(q11: RationalAngle, q12: RationalAngle, q22: RationalAngle) -> BraidingMatrix {
    BraidingMatrix::rank2(q11, q12.clone(), q12, q22)
}

fn gram2(aa: Rational, ab: Rational, bb: Rational) -> GramMatrix {
    GramMatrix::rank2(aa, ab, bb)
}

fn letters(v: &[u8]) -> BracketWord {
    BracketWord::left_nested(v)
}

fn gen(word: BracketWord, power: u32) -> IdealGenerator {
    IdealGenerator { word, power }
}

fn f1() -> BracketWord {
    BracketWord::letter(0)
}

fn f2() -> BracketWord {
    BracketWord::letter(1)
}

/// [[F1,F2],F2]: the Lyndon-standard nesting of the word 122.
fn bracket_122() -> BracketWord {
    BracketWord::bracket(letters(&[0, 1]), f2())
}

/// [[F1,[F1,F2]],[F1,F2]]: the Lyndon-standard nesting of 11212.
fn bracket_11212() -> BracketWord {
    BracketWord::bracket(letters(&[0, 0, 1]), letters(&[0, 1]))
}

pub(super) fn build() -> Vec<ItemSpec> {
    vec![
        item_1(),
        item_2_1(),
        item_2_2(),
        item_2_3(),
        item_2_4_1(),
        item_2_4_2(),
        item_2_5(),
        item_2_6(),
        item_2_7(),
        item_3_1(),
        item_3_2_1(),
        item_3_2_2(),
        item_3_3(),
        item_3_4(),
        item_3_5(),
        item_3_6(),
        item_3_7(),
        item_4_1(),
        conditions_only_item("4.2", "common 4.*; ord(q11) in {5,8,12,14,20}; q12 q21 = q11^-3"),
        conditions_only_item("4.3", "common 4.*; ord(q11) in {10,18}; q12 q21 = q11^-4"),
        conditions_only_item("4.4", "common 4.*; ord(q11) in {14,24}; q12 q21 = q11^-5"),
        conditions_only_item("4.5", "common 4.*; q12 q21 in R8; q11 = (q12 q21)^-2"),
        conditions_only_item("4.6", "common 4.*; q12 q21 in R12; q11 = (q12 q21)^-3"),
        conditions_only_item("4.7", "common 4.*; q12 q21 in R20; q11 = (q12 q21)^-4"),
        conditions_only_item("4.8", "common 4.*; q12 q21 in R30; q11 = (q12 q21)^-6"),
        conditions_only_item("5.1", "common 5.*; q0 := q11 q12 q21 in R12; q11 = q0^4; q22 = -q0^2"),
        conditions_only_item("5.2", "common 5.*; q12 q21 in R12; q11 = q22 = -(q12 q21)^2"),
        conditions_only_item("5.3", "common 5.*; q12 q21 in R24; q11 = (q12 q21)^-6; q22 = (q12 q21)^-8"),
        conditions_only_item("5.4", "common 5.*; q11 in R18; q12 q21 = q11^-2; q22 = -q11^3"),
        conditions_only_item("5.5", "common 5.*; q11 in R30; q12 q21 = q11^-3; q22 = -q11^5"),
    ]
}

fn item_1() -> ItemSpec {
    ItemSpec {
        id: "1",
        cartan_label: Some("A1 x A1"),
        conditions_text: "q12 q21 = 1; q11, q22 roots of unity of order >= 2",
        scalar_conditions_text: Some(
            "a.a = 2/p1 + 2 n1; b.b = 2/p2 + 2 n2; a.b = j (integer)",
        ),
        conditions_only: false,
        matches_fn: |b| {
            b.monodromy(0, 1).is_one() && b.at(0, 0).order() >= 2 && b.at(1, 1).order() >= 2
        },
        braiding_fn: Some(|pr| {
            symmetric(
                ang(1, pr.get("p1")),
                ang(pr.get("j"), 2),
                ang(1, pr.get("p2")),
            )
        }),
        gram_fn: Some(|pr| {
            gram2(
                frac(2, pr.get("p1")) + rat(2 * pr.get("n1"), 1),
                rat(pr.get("j"), 1),
                frac(2, pr.get("p2")) + rat(2 * pr.get("n2"), 1),
            )
        }),
        int_params: &["n1", "n2", "j"],
        order_params: &["p1", "p2"],
        order_min_abs: 2,
        validity_fn: |_| true,
        families: vec![SolutionFamily {
            name: "regular",
            class: SolutionClass::Regular,
            constraint_text: "j = 0 (orthogonal momenta)",
            matches: |pr| pr.get("j") == 0,
            charge: Some(ChargeEvaluator {
                // sum of two single-boson charges
                text: "c = [1 - 3(a.a-2)^2/a.a] + [1 - 3(b.b-2)^2/b.b]",
                eval: |pr| {
                    let aa = frac(2, pr.get("p1")) + rat(2 * pr.get("n1"), 1);
                    let bb = frac(2, pr.get("p2")) + rat(2 * pr.get("n2"), 1);
                    let ca = crate::charge::single_boson_charge(&aa)
                        .map_err(|_| CatalogError::EvaluatorPole)?;
                    let cb = crate::charge::single_boson_charge(&bb)
                        .map_err(|_| CatalogError::EvaluatorPole)?;
                    Ok(ca + cb)
                },
                eval_alt: None,
            }),
        }],
        presentation: None,
        fkw: None,
        notes: "Product of two one-boson models; the lifted Cartan conditions \
                also admit tuples with a.a = 2 or b.b = 2, which are not part \
                of the recorded family.",
    }
}

fn item_2_1() -> ItemSpec {
    fn k_charge(k: Rational) -> Result<Rational, CatalogError> {
        // 3k/(k+2) - 1
        let den = &k + rat(2, 1);
        Ok(div(rat(3, 1) * k, den)? - rat(1, 1))
    }
    ItemSpec {
        id: "2.1",
        cartan_label: Some("A2"),
        conditions_text: "q12 q21 q22 = 1; q12 q21 != 1; q11 q12 q21 = 1",
        scalar_conditions_text: Some(
            "a.a + 2 a.b = 2n; 2 a.b = -2/p + 2j, |p| >= 2; 2 a.b + b.b = 2m",
        ),
        conditions_only: false,
        matches_fn: |b| common2(b) && (b.at(0, 0) * &b.monodromy(0, 1)).is_one(),
        braiding_fn: Some(|pr| {
            let (p, j) = (pr.get("p"), pr.get("j"));
            symmetric(
                ang(1, p),
                angr(frac(j, 2) - frac(1, 2 * p)),
                ang(1, p),
            )
        }),
        gram_fn: Some(|pr| {
            let ab = frac(-1, pr.get("p")) + rat(pr.get("j"), 1);
            gram2(
                rat(2 * pr.get("n"), 1) - rat(2, 1) * &ab,
                ab.clone(),
                rat(2 * pr.get("m"), 1) - rat(2, 1) * &ab,
            )
        }),
        int_params: &["m", "n", "j"],
        order_params: &["p"],
        order_min_abs: 2,
        validity_fn: |_| true,
        families: vec![
            SolutionFamily {
                name: "regular",
                class: SolutionClass::Regular,
                constraint_text: "m = n = 0",
                matches: |pr| pr.get("m") == 0 && pr.get("n") == 0,
                charge: Some(ChargeEvaluator {
                    text: "c = 50 - 24/(k+3) - 24(k+3), k+3 = 1/p - j",
                    eval: |pr| {
                        let t = frac(1, pr.get("p")) - rat(pr.get("j"), 1);
                        if t.is_zero() {
                            return Err(CatalogError::EvaluatorPole);
                        }
                        pole_form(rat(50, 1), rat(-24, 1), rat(-24, 1), t)
                    },
                    eval_alt: Some(|pr| {
                        // 1/(k+3) = 1/p - j
                        let t = div(rat(1, 1), frac(1, pr.get("p")) - rat(pr.get("j"), 1))?;
                        pole_form(rat(50, 1), rat(-24, 1), rat(-24, 1), t)
                    }),
                }),
            },
            peculiar_2_1("peculiar p=2 m=0", "p = 2, m = 0, j = n; k = -n - 3/2", |pr| {
                pr.get("p") == 2 && pr.get("m") == 0 && pr.get("j") == pr.get("n")
            }, |pr| k_charge(rat(-pr.get("n"), 1) - rat(3, 2))),
            peculiar_2_1("peculiar p=-2 m=0", "p = -2, m = 0, j = n - 1; k = -n - 3/2", |pr| {
                pr.get("p") == -2 && pr.get("m") == 0 && pr.get("j") == pr.get("n") - 1
            }, |pr| k_charge(rat(-pr.get("n"), 1) - rat(3, 2))),
            peculiar_2_1("peculiar p=2 n=0", "p = 2, n = 0, j = m; k = -m - 3/2", |pr| {
                pr.get("p") == 2 && pr.get("n") == 0 && pr.get("j") == pr.get("m")
            }, |pr| k_charge(rat(-pr.get("m"), 1) - rat(3, 2))),
            peculiar_2_1("peculiar p=-2 n=0", "p = -2, n = 0, j = m - 1; k = -m - 3/2", |pr| {
                pr.get("p") == -2 && pr.get("n") == 0 && pr.get("j") == pr.get("m") - 1
            }, |pr| k_charge(rat(-pr.get("m"), 1) - rat(3, 2))),
            peculiar_2_1("peculiar p=2 m=n", "p = 2, m = n = j; k = m - 3/2", |pr| {
                pr.get("p") == 2 && pr.get("m") == pr.get("n") && pr.get("j") == pr.get("m")
            }, |pr| k_charge(rat(pr.get("m"), 1) - rat(3, 2))),
            peculiar_2_1("peculiar p=-2 m=n", "p = -2, m = n, j = m - 1; k = m - 3/2", |pr| {
                pr.get("p") == -2 && pr.get("m") == pr.get("n") && pr.get("j") == pr.get("m") - 1
            }, |pr| k_charge(rat(pr.get("m"), 1) - rat(3, 2))),
        ],
        presentation: Some(Presentation {
            cases: vec![
                PresentationCase {
                    domain_text: "p >= 3",
                    domain: |pr| pr.get("p") >= 3,
                    generators: |pr| {
                        let p = pr.get("p") as u32;
                        vec![
                            gen(letters(&[0, 0, 1]), 1),
                            gen(bracket_122(), 1),
                            gen(f1(), p),
                            gen(letters(&[0, 1]), p),
                            gen(f2(), p),
                        ]
                    },
                    dimension_text: "p^3",
                    dimension: |pr| (pr.get("p") as u64).pow(3),
                },
                PresentationCase {
                    // triple-bracket generators drop out for fermionic screenings
                    domain_text: "p = 2",
                    domain: |pr| pr.get("p") == 2,
                    generators: |_| {
                        vec![gen(f1(), 2), gen(letters(&[0, 1]), 2), gen(f2(), 2)]
                    },
                    dimension_text: "p^3 = 8",
                    dimension: |_| 8,
                },
            ],
        }),
        fkw: None,
        notes: "Stable under Weyl reflections. Regular charge is the W3 value; \
                peculiar families use a half-integer bookkeeping level.",
    }
}

fn peculiar_2_1(
    name: &'static str,
    constraint: &'static str,
    matches: fn(&Params) -> bool,
    eval: fn(&Params) -> Result<Rational, CatalogError>,
) -> SolutionFamily {
    SolutionFamily {
        name,
        class: SolutionClass::Peculiar,
        constraint_text: constraint,
        matches,
        charge: Some(ChargeEvaluator { text: "c = 3k/(k+2) - 1", eval, eval_alt: None }),
    }
}

fn item_2_2() -> ItemSpec {
    ItemSpec {
        id: "2.2",
        cartan_label: Some("A2"),
        conditions_text: "q12 q21 q22 = 1; q12 q21 != 1; q11 = -1; ord(q12 q21) >= 3",
        scalar_conditions_text: Some(
            "a.a = 1 + 2n; 2 a.b = -2/p + 2j, |p| >= 3; 2 a.b + b.b = 2m",
        ),
        conditions_only: false,
        matches_fn: |b| common2(b) && b.at(0, 0) == &half() && b.monodromy(0, 1).order() >= 3,
        braiding_fn: Some(|pr| {
            let (p, j) = (pr.get("p"), pr.get("j"));
            symmetric(half(), angr(frac(j, 2) - frac(1, 2 * p)), ang(1, p))
        }),
        gram_fn: Some(|pr| {
            let ab = frac(-1, pr.get("p")) + rat(pr.get("j"), 1);
            gram2(
                rat(1 + 2 * pr.get("n"), 1),
                ab.clone(),
                rat(2 * pr.get("m"), 1) - rat(2, 1) * &ab,
            )
        }),
        int_params: &["m", "n", "j"],
        order_params: &["p"],
        order_min_abs: 3,
        validity_fn: |_| true,
        families: vec![SolutionFamily {
            name: "regular",
            class: SolutionClass::Regular,
            constraint_text: "m = n = 0 (the only solutions)",
            matches: |pr| pr.get("m") == 0 && pr.get("n") == 0,
            charge: Some(ChargeEvaluator {
                text: "c = 3k/(k+2) - 1, k+2 = 1/p - j",
                eval: |pr| {
                    let t = frac(1, pr.get("p")) - rat(pr.get("j"), 1);
                    if t.is_zero() {
                        return Err(CatalogError::EvaluatorPole);
                    }
                    let k = &t - rat(2, 1);
                    Ok(div(rat(3, 1) * k, t)? - rat(1, 1))
                },
                eval_alt: None,
            }),
        }],
        presentation: Some(Presentation {
            cases: vec![PresentationCase {
                domain_text: "p >= 3",
                domain: |pr| pr.get("p") >= 3,
                generators: |pr| {
                    vec![gen(bracket_122(), 1), gen(f1(), 2), gen(f2(), pr.get("p") as u32)]
                },
                dimension_text: "4p",
                dimension: |pr| 4 * pr.get("p") as u64,
            }],
        }),
        fkw: None,
        notes: "The -1 entry is a genuine fermionic screening: nonzero m or n \
                would force |p| = 2, which the conditions exclude.",
    }
}

fn item_2_3() -> ItemSpec {
    fn wb2_charge(t: Rational) -> Result<Rational, CatalogError> {
        if t.is_zero() {
            return Err(CatalogError::EvaluatorPole);
        }
        pole_form(rat(86, 1), rat(-60, 1), rat(-30, 1), t)
    }
    fn regular_charge(z: Rational) -> Result<Rational, CatalogError> {
        // -21/2 - 6z - 27/(2(4z-3))
        let den = rat(2, 1) * (rat(4, 1) * &z - rat(3, 1));
        Ok(rat(-21, 2) - rat(6, 1) * &z - div(rat(27, 1), den)?)
    }
    ItemSpec {
        id: "2.3",
        cartan_label: Some("B2"),
        conditions_text: "q12 q21 q22 = 1; q12 q21 != 1; q11 in R3; ord(q12 q21) >= 2; \
                          q11 q12 q21 != 1",
        scalar_conditions_text: Some(
            "a.a = 2s/3, gcd(s,3) = 1; 2 a.b = -2/p + 2j, |p| >= 2; 2 a.b + b.b = 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            let mono = b.monodromy(0, 1);
            common2(b)
                && b.at(0, 0).order() == 3
                && mono.order() >= 2
                && !(b.at(0, 0) * &mono).is_one()
        },
        braiding_fn: Some(|pr| {
            let (p, j, s) = (pr.get("p"), pr.get("j"), pr.get("s"));
            symmetric(ang(s, 3), angr(frac(j, 2) - frac(1, 2 * p)), ang(1, p))
        }),
        gram_fn: Some(|pr| {
            let ab = frac(-1, pr.get("p")) + rat(pr.get("j"), 1);
            gram2(
                frac(2 * pr.get("s"), 3),
                ab.clone(),
                rat(2 * pr.get("m"), 1) - rat(2, 1) * &ab,
            )
        }),
        int_params: &["m", "s", "j"],
        order_params: &["p"],
        order_min_abs: 2,
        validity_fn: |pr| coprime(pr.get("s"), 3),
        families: vec![
            SolutionFamily {
                name: "regular",
                class: SolutionClass::Regular,
                constraint_text: "m = 0, s = 1",
                matches: |pr| pr.get("m") == 0 && pr.get("s") == 1,
                charge: Some(ChargeEvaluator {
                    text: "c = -21/2 - 6z - 27/(2(4z-3)), 1/z = 1/p - j",
                    eval: |pr| {
                        let u = frac(1, pr.get("p")) - rat(pr.get("j"), 1);
                        regular_charge(div(rat(1, 1), u)?)
                    },
                    eval_alt: Some(|pr| {
                        // 1/z = -1/p + 4/3 + j
                        let u = frac(-1, pr.get("p")) + rat(4, 3) + rat(pr.get("j"), 1);
                        regular_charge(div(rat(1, 1), u)?)
                    }),
                }),
            },
            SolutionFamily {
                name: "peculiar p=3",
                class: SolutionClass::Peculiar,
                constraint_text: "m = 0, p = 3, s = 3L - 1, j = 1 - 2L",
                matches: |pr| {
                    let j = pr.get("j");
                    pr.get("p") == 3
                        && pr.get("m") == 0
                        && (1 - j) % 2 == 0
                        && pr.get("s") == 3 * ((1 - j) / 2) - 1
                },
                charge: Some(ChargeEvaluator {
                    text: "c = 86 - 60(k+3) - 30/(k+3), k+3 = -1/3 + L",
                    eval: |pr| {
                        let l = (1 - pr.get("j")) / 2;
                        wb2_charge(rat(l, 1) - rat(1, 3))
                    },
                    eval_alt: Some(|pr| {
                        // 1/(k+3) = -2/3 + 2L
                        let l = (1 - pr.get("j")) / 2;
                        wb2_charge(div(rat(1, 1), rat(2 * l, 1) - rat(2, 3))?)
                    }),
                }),
            },
            SolutionFamily {
                name: "peculiar p=-3",
                class: SolutionClass::Peculiar,
                constraint_text: "m = 0, p = -3, s = 3L + 1, j = -1 - 2L",
                matches: |pr| {
                    let j = pr.get("j");
                    pr.get("p") == -3
                        && pr.get("m") == 0
                        && (-1 - j) % 2 == 0
                        && pr.get("s") == 3 * ((-1 - j) / 2) + 1
                },
                charge: Some(ChargeEvaluator {
                    text: "c = 86 - 60(k+3) - 30/(k+3), k+3 = 1/3 + L",
                    eval: |pr| {
                        let l = (-1 - pr.get("j")) / 2;
                        wb2_charge(rat(l, 1) + rat(1, 3))
                    },
                    eval_alt: Some(|pr| {
                        let l = (-1 - pr.get("j")) / 2;
                        wb2_charge(div(rat(1, 1), rat(2 * l, 1) + rat(2, 3))?)
                    }),
                }),
            },
        ],
        presentation: Some(Presentation {
            cases: vec![PresentationCase {
                domain_text: "p >= 4",
                domain: |pr| pr.get("p") >= 4,
                generators: |pr| {
                    let p = pr.get("p");
                    let p_prime = angr(rat(1, 3) - frac(1, p)).order() as u32;
                    vec![
                        gen(bracket_122(), 1),
                        gen(f1(), 3),
                        gen(letters(&[0, 0, 1]), p_prime),
                        gen(f2(), p as u32),
                    ]
                },
                dimension_text: "9 p p', p' = ord(q11 q22^-1)",
                dimension: |pr| {
                    let p = pr.get("p");
                    9 * p as u64 * angr(rat(1, 3) - frac(1, p)).order()
                },
            }],
        }),
        fkw: None,
        notes: "The condition q11 q12 q21 != 1 excludes p = 3 in the regular \
                family. Dimension 9pp' exceeds desk scale; not verified by \
                the symmetrizer engine.",
    }
}

fn item_2_4_1() -> ItemSpec {
    fn wb2_charge(t: Rational) -> Result<Rational, CatalogError> {
        if t.is_zero() {
            return Err(CatalogError::EvaluatorPole);
        }
        pole_form(rat(86, 1), rat(-60, 1), rat(-30, 1), t)
    }
    ItemSpec {
        id: "2.4.1",
        cartan_label: Some("B2"),
        conditions_text: "q12 q21 q22 = 1; q12 q21 != 1; ord(q11) >= 4; q12 q21 = q11^-2",
        scalar_conditions_text: Some(
            "a.a = 2/p + 2j, |p| >= 4; 2 a.b + 2 a.a = 2n; 2 a.b + b.b = 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            common2(b) && b.at(0, 0).order() >= 4 && b.monodromy(0, 1) == b.at(0, 0).pow(-2)
        },
        braiding_fn: Some(|pr| {
            let (p, n) = (pr.get("p"), pr.get("n"));
            symmetric(ang(1, p), angr(frac(n, 2) - frac(1, p)), ang(2, p))
        }),
        gram_fn: Some(|pr| {
            let aa = frac(2, pr.get("p")) + rat(2 * pr.get("j"), 1);
            let ab = rat(pr.get("n"), 1) - &aa;
            gram2(aa, ab.clone(), rat(2 * pr.get("m"), 1) - rat(2, 1) * &ab)
        }),
        int_params: &["m", "n", "j"],
        order_params: &["p"],
        order_min_abs: 4,
        validity_fn: |_| true,
        families: vec![
            SolutionFamily {
                name: "regular",
                class: SolutionClass::Regular,
                constraint_text: "m = n = 0",
                matches: |pr| pr.get("m") == 0 && pr.get("n") == 0,
                charge: Some(ChargeEvaluator {
                    text: "c = 86 - 60(k+3) - 30/(k+3), k+3 = 1/p + j",
                    eval: |pr| {
                        wb2_charge(frac(1, pr.get("p")) + rat(pr.get("j"), 1))
                    },
                    eval_alt: Some(|pr| {
                        // 1/(k+3) = 2/p + 2j
                        let t = div(rat(1, 1), frac(2, pr.get("p")) + rat(2 * pr.get("j"), 1))?;
                        wb2_charge(t)
                    }),
                }),
            },
            SolutionFamily {
                name: "peculiar p=4",
                class: SolutionClass::Peculiar,
                constraint_text: "p = 4, n = 0, m = -2j",
                matches: |pr| {
                    pr.get("p") == 4 && pr.get("n") == 0 && pr.get("m") == -2 * pr.get("j")
                },
                charge: Some(ChargeEvaluator {
                    text: "c = -1 - 24/(4j+1) + 24/(4j-1)",
                    eval: |pr| {
                        let j = pr.get("j");
                        Ok(rat(-1, 1) - rat(24, 4 * j + 1) + rat(24, 4 * j - 1))
                    },
                    eval_alt: None,
                }),
            },
            SolutionFamily {
                name: "peculiar p=-4",
                class: SolutionClass::Peculiar,
                constraint_text: "p = -4, n = 0, m = 1 - 2j",
                matches: |pr| {
                    pr.get("p") == -4 && pr.get("n") == 0 && pr.get("m") == 1 - 2 * pr.get("j")
                },
                charge: Some(ChargeEvaluator {
                    text: "c = -1 - 24/(4j-1) + 24/(4j-3)",
                    eval: |pr| {
                        let j = pr.get("j");
                        Ok(rat(-1, 1) - rat(24, 4 * j - 1) + rat(24, 4 * j - 3))
                    },
                    eval_alt: None,
                }),
            },
        ],
        presentation: Some(Presentation {
            cases: vec![
                PresentationCase {
                    domain_text: "p >= 5 odd",
                    domain: |pr| pr.get("p") >= 5 && pr.get("p") % 2 == 1,
                    generators: |pr| {
                        let p = pr.get("p") as u32;
                        vec![
                            gen(letters(&[0, 0, 0, 1]), 1),
                            gen(bracket_122(), 1),
                            gen(f1(), p),
                            gen(letters(&[0, 0, 1]), p),
                            gen(letters(&[0, 1]), p),
                            gen(f2(), p),
                        ]
                    },
                    dimension_text: "p^4",
                    dimension: |pr| (pr.get("p") as u64).pow(4),
                },
                PresentationCase {
                    // [F1,F2,F2] drops out of the ideal at p = 4
                    domain_text: "p >= 4 even",
                    domain: |pr| pr.get("p") >= 4 && pr.get("p") % 2 == 0,
                    generators: |pr| {
                        let p = pr.get("p") as u32;
                        let mut gens = vec![gen(letters(&[0, 0, 0, 1]), 1)];
                        if p > 4 {
                            gens.push(gen(bracket_122(), 1));
                        }
                        gens.extend([
                            gen(f1(), p),
                            gen(letters(&[0, 0, 1]), p / 2),
                            gen(letters(&[0, 1]), p),
                            gen(f2(), p / 2),
                        ]);
                        gens
                    },
                    dimension_text: "p^4/4",
                    dimension: |pr| (pr.get("p") as u64).pow(4) / 4,
                },
            ],
        }),
        fkw: Some(FkwData {
            rank: 2,
            dual_coxeter: 3,
            rho_sq_printed: rat(5, 2),
            rho_dual_sq_printed: rat(5, 1),
            rho_rho_dual: rat(7, 2),
            level: |pr| Ok(frac(1, pr.get("p")) + rat(pr.get("j"), 1) - rat(3, 1)),
            swap_needed: false,
        }),
        notes: "Stable under Weyl reflections. Regular charge is the WB2 value \
                from Hamiltonian reduction of level-k B2.",
    }
}

fn item_2_4_2() -> ItemSpec {
    fn wg2_charge(t: Rational) -> Result<Rational, CatalogError> {
        if t.is_zero() {
            return Err(CatalogError::EvaluatorPole);
        }
        pole_form(rat(194, 1), rat(-168, 1), rat(-56, 1), t)
    }
    ItemSpec {
        id: "2.4.2",
        cartan_label: Some("G2"),
        conditions_text: "q12 q21 q22 = 1; q12 q21 != 1; ord(q11) >= 4; q12 q21 = q11^-3",
        scalar_conditions_text: Some(
            "a.a = 2/p + 2j, |p| >= 4; 2 a.b + 3 a.a = 2n; 2 a.b + b.b = 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            common2(b) && b.at(0, 0).order() >= 4 && b.monodromy(0, 1) == b.at(0, 0).pow(-3)
        },
        braiding_fn: Some(|pr| {
            let (p, n, j) = (pr.get("p"), pr.get("n"), pr.get("j"));
            symmetric(ang(1, p), angr(frac(j + n, 2) - frac(3, 2 * p)), ang(3, p))
        }),
        gram_fn: Some(|pr| {
            let aa = frac(2, pr.get("p")) + rat(2 * pr.get("j"), 1);
            let ab = rat(pr.get("n"), 1) - rat(3, 2) * &aa;
            gram2(aa, ab.clone(), rat(2 * pr.get("m"), 1) - rat(2, 1) * &ab)
        }),
        int_params: &["m", "n", "j"],
        order_params: &["p"],
        order_min_abs: 4,
        validity_fn: |_| true,
        families: vec![
            SolutionFamily {
                name: "regular",
                class: SolutionClass::Regular,
                constraint_text: "m = n = 0",
                matches: |pr| pr.get("m") == 0 && pr.get("n") == 0,
                charge: Some(ChargeEvaluator {
                    text: "c = 194 - 168(k+4) - 56/(k+4), k+4 = 1/p + j",
                    eval: |pr| wg2_charge(frac(1, pr.get("p")) + rat(pr.get("j"), 1)),
                    eval_alt: Some(|pr| {
                        // 1/(k+4) = 3/p + 3j
                        let t = div(rat(1, 1), frac(3, pr.get("p")) + rat(3 * pr.get("j"), 1))?;
                        wg2_charge(t)
                    }),
                }),
            },
            SolutionFamily {
                name: "peculiar p=4",
                class: SolutionClass::Peculiar,
                constraint_text: "p = 4, j = 0, m = 0",
                matches: |pr| pr.get("p") == 4 && pr.get("j") == 0 && pr.get("m") == 0,
                charge: Some(ChargeEvaluator {
                    text: "c = -10 - 54/(4n+1) + 24/(4n-3)",
                    eval: |pr| {
                        let n = pr.get("n");
                        Ok(rat(-10, 1) - rat(54, 4 * n + 1) + rat(24, 4 * n - 3))
                    },
                    eval_alt: None,
                }),
            },
            SolutionFamily {
                name: "peculiar p=6",
                class: SolutionClass::Peculiar,
                constraint_text: "p = 6, n = 0, m = -3j",
                matches: |pr| {
                    pr.get("p") == 6 && pr.get("n") == 0 && pr.get("m") == -3 * pr.get("j")
                },
                charge: Some(ChargeEvaluator {
                    text: "c = -2/3 + 400/(3(18j-1)) - 36/(6j+1)",
                    eval: |pr| {
                        let j = pr.get("j");
                        Ok(rat(-2, 3) + rat(400, 3 * (18 * j - 1)) - rat(36, 6 * j + 1))
                    },
                    eval_alt: None,
                }),
            },
            SolutionFamily {
                name: "peculiar p=-6",
                class: SolutionClass::Peculiar,
                constraint_text: "p = -6, n = 0, m = 1 - 3j",
                matches: |pr| {
                    pr.get("p") == -6 && pr.get("n") == 0 && pr.get("m") == 1 - 3 * pr.get("j")
                },
                charge: Some(ChargeEvaluator {
                    text: "c = -2/3 + 400/(3(18j-7)) - 36/(6j-1)",
                    eval: |pr| {
                        let j = pr.get("j");
                        Ok(rat(-2, 3) + rat(400, 3 * (18 * j - 7)) - rat(36, 6 * j - 1))
                    },
                    eval_alt: None,
                }),
            },
        ],
        presentation: None,
        fkw: Some(FkwData {
            rank: 2,
            dual_coxeter: 4,
            // As printed: |rho|^2 = 14, |rho_dual|^2 = 14/3. Only the
            // swapped assignment reproduces 194 - 168(k+4) - 56/(k+4).
            rho_sq_printed: rat(14, 1),
            rho_dual_sq_printed: rat(14, 3),
            rho_rho_dual: rat(8, 1),
            level: |pr| Ok(frac(1, pr.get("p")) + rat(pr.get("j"), 1) - rat(4, 1)),
            swap_needed: true,
        }),
        notes: "Stable under Weyl reflections. The printed (rho^2, rho_dual^2) \
                assignment reproduces the transpose 194 - 56(k+4) - 168/(k+4); \
                the swapped assignment reproduces the displayed charge. Both \
                are recorded and the discrepancy is flagged. The unique \
                dimension-6 primary exists; its coefficients are not recorded.",
    }
}

fn item_2_5() -> ItemSpec {
    ItemSpec {
        id: "2.5",
        cartan_label: Some("G2"),
        conditions_text: "q12 q21 q22 = 1; q12 q21 in R8; q11 = (q12 q21)^2",
        scalar_conditions_text: Some(
            "2 a.b = r/4 + 2j, r odd; a.a - 4 a.b = 2n; 2 a.b + b.b = 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            let mono = b.monodromy(0, 1);
            common2(b) && mono.order() == 8 && b.at(0, 0) == &mono.pow(2)
        },
        braiding_fn: Some(|pr| {
            let (r, j) = (pr.get("r"), pr.get("j"));
            symmetric(ang(r, 4), angr(frac(j, 2) + frac(r, 16)), ang(-r, 8))
        }),
        gram_fn: Some(|pr| {
            let ab = frac(pr.get("r"), 8) + rat(pr.get("j"), 1);
            gram2(
                rat(4, 1) * &ab + rat(2 * pr.get("n"), 1),
                ab.clone(),
                rat(2 * pr.get("m"), 1) - rat(2, 1) * &ab,
            )
        }),
        int_params: &["m", "n", "j", "r"],
        order_params: &[],
        order_min_abs: 2,
        validity_fn: |pr| pr.get("r").rem_euclid(2) == 1,
        families: vec![SolutionFamily {
            name: "regular",
            class: SolutionClass::Regular,
            constraint_text: "m = 0, r = 1 - 8j - 4n",
            matches: |pr| {
                pr.get("m") == 0 && pr.get("r") == 1 - 8 * pr.get("j") - 4 * pr.get("n")
            },
            charge: Some(ChargeEvaluator {
                text: "c = -10 - 48/(4n-1) + 108/(4n-9); c = 26 at n = 0",
                eval: |pr| {
                    let n = pr.get("n");
                    Ok(rat(-10, 1) - rat(48, 4 * n - 1) + rat(108, 4 * n - 9))
                },
                eval_alt: None,
            }),
        }],
        presentation: None,
        fkw: None,
        notes: "The n = 0 member hits the bosonic-string value c = 26.",
    }
}

fn item_2_6() -> ItemSpec {
    ItemSpec {
        id: "2.6",
        cartan_label: None,
        conditions_text: "q12 q21 q22 = 1; q12 q21 in R24; q11 = (q12 q21)^6",
        scalar_conditions_text: Some(
            "2 a.b = r/12 + 2j, gcd(r,6) = 1; a.a - 12 a.b = 2n; 2 a.b + b.b = 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            let mono = b.monodromy(0, 1);
            common2(b) && mono.order() == 24 && b.at(0, 0) == &mono.pow(6)
        },
        braiding_fn: Some(|pr| {
            let (r, j) = (pr.get("r"), pr.get("j"));
            symmetric(ang(r, 4), angr(frac(j, 2) + frac(r, 48)), ang(-r, 24))
        }),
        gram_fn: Some(|pr| {
            let ab = frac(pr.get("r"), 24) + rat(pr.get("j"), 1);
            gram2(
                rat(12, 1) * &ab + rat(2 * pr.get("n"), 1),
                ab.clone(),
                rat(2 * pr.get("m"), 1) - rat(2, 1) * &ab,
            )
        }),
        int_params: &["m", "n", "j", "r"],
        order_params: &[],
        order_min_abs: 2,
        validity_fn: |pr| coprime(pr.get("r"), 6),
        families: vec![SolutionFamily {
            name: "regular",
            class: SolutionClass::Regular,
            constraint_text: "m = 0, r = 1 - 24j - 4n (n = 0 or 2 mod 3)",
            matches: |pr| {
                pr.get("m") == 0 && pr.get("r") == 1 - 24 * pr.get("j") - 4 * pr.get("n")
            },
            charge: Some(ChargeEvaluator {
                text: "c = -10 - 144/(4n-1) + 324/(4n-25)",
                eval: |pr| {
                    let n = pr.get("n");
                    Ok(rat(-10, 1) - rat(144, 4 * n - 1) + rat(324, 4 * n - 25))
                },
                eval_alt: None,
            }),
        }],
        presentation: None,
        fkw: None,
        notes: "Coprimality of r with 2 and 3 selects n = 2 + 3L or n = 3 + 3L. \
                Further Weyl reflections produce several generalized Cartan \
                matrices.",
    }
}

fn item_2_7() -> ItemSpec {
    ItemSpec {
        id: "2.7",
        cartan_label: None,
        conditions_text: "q12 q21 q22 = 1; q12 q21 in R30; q11 = (q12 q21)^12",
        scalar_conditions_text: Some(
            "2 a.b = r/15 + 2j, gcd(r,30) = 1; a.a - 24 a.b = 2n; 2 a.b + b.b = 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            let mono = b.monodromy(0, 1);
            common2(b) && mono.order() == 30 && b.at(0, 0) == &mono.pow(12)
        },
        braiding_fn: Some(|pr| {
            let (r, j) = (pr.get("r"), pr.get("j"));
            symmetric(ang(2 * r, 5), angr(frac(j, 2) + frac(r, 60)), ang(-r, 30))
        }),
        gram_fn: Some(|pr| {
            let ab = frac(pr.get("r"), 30) + rat(pr.get("j"), 1);
            gram2(
                rat(24, 1) * &ab + rat(2 * pr.get("n"), 1),
                ab.clone(),
                rat(2 * pr.get("m"), 1) - rat(2, 1) * &ab,
            )
        }),
        int_params: &["m", "n", "j", "r"],
        order_params: &[],
        order_min_abs: 2,
        validity_fn: |pr| coprime(pr.get("r"), 30),
        families: vec![
            SolutionFamily {
                name: "L=1 mod 6",
                class: SolutionClass::Regular,
                constraint_text: "m = 0, n = 1 + 2L, r = -2 - 5L - 30j, L = 1 + 6u",
                matches: |pr| {
                    let n = pr.get("n");
                    if pr.get("m") != 0 || n.rem_euclid(2) != 1 {
                        return false;
                    }
                    let l = (n - 1) / 2;
                    l.rem_euclid(6) == 1 && pr.get("r") == -2 - 5 * l - 30 * pr.get("j")
                },
                charge: Some(ChargeEvaluator {
                    text: "c = -62/5 + 2916/(5(30u-17)) - 180/(30u+7)",
                    eval: |pr| {
                        let u = ((pr.get("n") - 1) / 2 - 1) / 6;
                        Ok(rat(-62, 5) + rat(2916, 5 * (30 * u - 17)) - rat(180, 30 * u + 7))
                    },
                    eval_alt: None,
                }),
            },
            SolutionFamily {
                name: "L=3 mod 6",
                class: SolutionClass::Regular,
                constraint_text: "m = 0, n = 1 + 2L, r = -2 - 5L - 30j, L = 3 + 6u",
                matches: |pr| {
                    let n = pr.get("n");
                    if pr.get("m") != 0 || n.rem_euclid(2) != 1 {
                        return false;
                    }
                    let l = (n - 1) / 2;
                    l.rem_euclid(6) == 3 && pr.get("r") == -2 - 5 * l - 30 * pr.get("j")
                },
                charge: Some(ChargeEvaluator {
                    text: "c = -62/5 + 2916/(5(30u-7)) - 180/(30u+17)",
                    eval: |pr| {
                        let u = ((pr.get("n") - 1) / 2 - 3) / 6;
                        Ok(rat(-62, 5) + rat(2916, 5 * (30 * u - 7)) - rat(180, 30 * u + 17))
                    },
                    eval_alt: None,
                }),
            },
        ],
        presentation: None,
        fkw: None,
        notes: "Coprimality of r with 30 forces L odd and L != 2 mod 3.",
    }
}

fn item_3_1() -> ItemSpec {
    ItemSpec {
        id: "3.1",
        cartan_label: Some("A2"),
        conditions_text: "q12 q21 != 1; q11 q12 q21 != 1; q12 q21 q22 != 1; q22 = -1; \
                          q11 = -1; ord(q12 q21) >= 3",
        scalar_conditions_text: Some(
            "a.a = 1 + 2n; 2 a.b = 2/p + 2j, |p| >= 3; b.b = 1 + 2m",
        ),
        conditions_only: false,
        matches_fn: |b| common3(b) && b.at(0, 0) == &half() && b.monodromy(0, 1).order() >= 3,
        braiding_fn: Some(|pr| {
            let (p, j) = (pr.get("p"), pr.get("j"));
            symmetric(half(), angr(frac(j, 2) + frac(1, 2 * p)), half())
        }),
        gram_fn: Some(|pr| {
            gram2(
                rat(1 + 2 * pr.get("n"), 1),
                frac(1, pr.get("p")) + rat(pr.get("j"), 1),
                rat(1 + 2 * pr.get("m"), 1),
            )
        }),
        int_params: &["m", "n", "j"],
        order_params: &["p"],
        order_min_abs: 3,
        validity_fn: |_| true,
        families: vec![SolutionFamily {
            name: "regular",
            class: SolutionClass::Regular,
            constraint_text: "m = n = 0 (the only solutions)",
            matches: |pr| pr.get("m") == 0 && pr.get("n") == 0,
            charge: Some(ChargeEvaluator {
                text: "c = 3k/(k+2) - 1, k+1 = 1/p + j",
                eval: |pr| {
                    let k = frac(1, pr.get("p")) + rat(pr.get("j"), 1) - rat(1, 1);
                    let den = &k + rat(2, 1);
                    Ok(div(rat(3, 1) * k, den)? - rat(1, 1))
                },
                eval_alt: None,
            }),
        }],
        presentation: Some(Presentation {
            cases: vec![PresentationCase {
                domain_text: "p >= 3",
                domain: |pr| pr.get("p") >= 3,
                generators: |pr| {
                    vec![gen(f1(), 2), gen(letters(&[0, 1]), pr.get("p") as u32), gen(f2(), 2)]
                },
                dimension_text: "4p",
                dimension: |pr| 4 * pr.get("p") as u64,
            }],
        }),
        fkw: None,
        notes: "Both -1 entries are genuine fermionic screenings. At j = 0 the \
                levels satisfy the duality 1/(p+1) + 1/(k+2) = 1.",
    }
}

fn item_3_2_1() -> ItemSpec {
    ItemSpec {
        id: "3.2.1",
        cartan_label: Some("B2"),
        conditions_text: "q12 q21 != 1; q11 q12 q21 != 1; q12 q21 q22 != 1; q22 = -1; \
                          q11 in R3; q12 q21 = q11",
        scalar_conditions_text: Some(
            "a.a = 2s/3 + 2L, gcd(s,3) = 1; 2 a.b = a.a + 2n; b.b = 1 + 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            common3(b) && b.at(0, 0).order() == 3 && &b.monodromy(0, 1) == b.at(0, 0)
        },
        braiding_fn: Some(|pr| {
            let (s, n, l) = (pr.get("s"), pr.get("n"), pr.get("l"));
            symmetric(ang(s, 3), angr(frac(n + l, 2) + frac(s, 6)), half())
        }),
        gram_fn: Some(|pr| {
            let aa = frac(2 * pr.get("s"), 3) + rat(2 * pr.get("l"), 1);
            let ab = &aa / rat(2, 1) + rat(pr.get("n"), 1);
            gram2(aa, ab, rat(1 + 2 * pr.get("m"), 1))
        }),
        int_params: &["m", "n", "l", "s"],
        order_params: &[],
        order_min_abs: 2,
        validity_fn: |pr| coprime(pr.get("s"), 3),
        families: vec![
            SolutionFamily {
                name: "s=1-3L",
                class: SolutionClass::Regular,
                constraint_text: "m = 0, s = 1 - 3L",
                matches: |pr| pr.get("m") == 0 && pr.get("s") == 1 - 3 * pr.get("l"),
                charge: Some(ChargeEvaluator {
                    text: "c = 2 - 6(12n-7)/(9n^2+6n-5)",
                    eval: |pr| {
                        let n = pr.get("n");
                        let den = rat(9 * n * n + 6 * n - 5, 1);
                        Ok(rat(2, 1) - div(rat(6 * (12 * n - 7), 1), den)?)
                    },
                    eval_alt: None,
                }),
            },
            SolutionFamily {
                name: "s=-n-3L",
                class: SolutionClass::Regular,
                constraint_text: "m = 0, s = -n - 3L",
                matches: |pr| pr.get("m") == 0 && pr.get("s") == -pr.get("n") - 3 * pr.get("l"),
                charge: Some(ChargeEvaluator {
                    text: "c = -1 - 36/(2n+3) + 18/n",
                    eval: |pr| {
                        let n = pr.get("n");
                        if n == 0 {
                            return Err(CatalogError::EvaluatorPole);
                        }
                        Ok(rat(-1, 1) - rat(36, 2 * n + 3) + rat(18, n))
                    },
                    eval_alt: None,
                }),
            },
        ],
        presentation: None,
        fkw: None,
        notes: "The two displayed solution families agree where they overlap \
                (s = 1 - 3L and s = -n - 3L meet at n = -1).",
    }
}

fn item_3_2_2() -> ItemSpec {
    ItemSpec {
        id: "3.2.2",
        cartan_label: Some("B2"),
        conditions_text: "q12 q21 != 1; q11 q12 q21 != 1; q12 q21 q22 != 1; q22 = -1; \
                          q11 in R3; q12 q21 = -q11",
        scalar_conditions_text: Some(
            "a.a = 2s/3, gcd(s,3) = 1; 2 a.b - a.a = 1 + 2n; b.b = 1 + 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            common3(b)
                && b.at(0, 0).order() == 3
                && b.monodromy(0, 1) == &half() * b.at(0, 0)
        },
        braiding_fn: Some(|pr| {
            let (s, n, l) = (pr.get("s"), pr.get("n"), pr.get("l"));
            symmetric(
                ang(s, 3),
                angr(frac(n + l, 2) + rat(1, 4) + frac(s, 6)),
                half(),
            )
        }),
        // a.a carries the honest-log integer 2L (as in 3.2.1); with
        // s = 1 - 3L this keeps a.a = 2/3 across the solution family.
        gram_fn: Some(|pr| {
            let aa = frac(2 * pr.get("s"), 3) + rat(2 * pr.get("l"), 1);
            let ab = &aa / rat(2, 1) + rat(1, 2) + rat(pr.get("n"), 1);
            gram2(aa, ab, rat(1 + 2 * pr.get("m"), 1))
        }),
        int_params: &["m", "n", "l", "s"],
        order_params: &[],
        order_min_abs: 2,
        validity_fn: |pr| coprime(pr.get("s"), 3),
        families: vec![SolutionFamily {
            name: "regular",
            class: SolutionClass::Regular,
            constraint_text: "m = 0, s = 1 - 3L",
            matches: |pr| pr.get("m") == 0 && pr.get("s") == 1 - 3 * pr.get("l"),
            charge: Some(ChargeEvaluator {
                text: "c = 2 - 24(12n-1)/(36n^2+60n+1); c = 26 at n = 0",
                eval: |pr| {
                    let n = pr.get("n");
                    let den = rat(36 * n * n + 60 * n + 1, 1);
                    Ok(rat(2, 1) - div(rat(24 * (12 * n - 1), 1), den)?)
                },
                eval_alt: None,
            }),
        }],
        presentation: Some(Presentation {
            cases: vec![PresentationCase {
                domain_text: "all parameters",
                domain: |_| true,
                generators: |_| {
                    vec![gen(bracket_11212(), 1), gen(f1(), 3), gen(f2(), 2)]
                },
                dimension_text: "36",
                dimension: |_| 36,
            }],
        }),
        fkw: None,
        notes: "The five-letter generator is stored in its Lyndon-standard \
                nesting [[F1,[F1,F2]],[F1,F2]]; other nestings of the same \
                word are probed by the relations check. The stored Gram \
                family reads a.a = 2s/3 + 2L: without the honest-log \
                integer the displayed solutions with L != 0 fail the \
                lifted Cartan conditions.",
    }
}

/// Items 3.3-3.7 print conditions but no solutions or charges.
fn conditions_only_3(
    id: &'static str,
    conditions: &'static str,
    scalar: &'static str,
    matches_fn: fn(&BraidingMatrix) -> bool,
    braiding_fn: fn(&Params) -> BraidingMatrix,
    gram_fn: fn(&Params) -> GramMatrix,
    validity_fn: fn(&Params) -> bool,
    notes: &'static str,
) -> ItemSpec {
    ItemSpec {
        id,
        cartan_label: None,
        conditions_text: conditions,
        scalar_conditions_text: Some(scalar),
        conditions_only: true,
        matches_fn,
        braiding_fn: Some(braiding_fn),
        gram_fn: Some(gram_fn),
        int_params: &["m", "n", "j", "r"],
        order_params: &[],
        order_min_abs: 2,
        validity_fn,
        families: vec![],
        presentation: None,
        fkw: None,
        notes,
    }
}

fn item_3_3() -> ItemSpec {
    conditions_only_3(
        "3.3",
        "common 3.*; q0 := q11 q12 q21 in R12; q11 = q0^4",
        "a.a + 2 a.b = r/6 + 2j, gcd(r,12) = 1; 3 a.a + 8 a.b = -2n; b.b = 1 + 2m",
        |b| {
            let q0 = b.at(0, 0) * &b.monodromy(0, 1);
            common3(b) && q0.order() == 12 && b.at(0, 0) == &q0.pow(4)
        },
        |pr| {
            let (r, j) = (pr.get("r"), pr.get("j"));
            symmetric(ang(r, 3), angr(frac(-r, 8) + frac(j, 2)), half())
        },
        |pr| {
            let (r, j, n) = (pr.get("r"), pr.get("j"), pr.get("n"));
            gram2(
                frac(2 * r, 3) + rat(8 * j + 2 * n, 1),
                frac(-r, 4) - rat(3 * j + n, 1),
                rat(1 + 2 * pr.get("m"), 1),
            )
        },
        |pr| coprime(pr.get("r"), 12),
        "Conditions-only.",
    )
}

fn item_3_4() -> ItemSpec {
    conditions_only_3(
        "3.4",
        "common 3.*; q12 q21 in R12; q11 = -(q12 q21)^2",
        "2 a.b = r/6 + 2j, gcd(r,12) = 1; a.a = 4 a.b + 1 + 2n; b.b = 1 + 2m",
        |b| {
            let m = b.monodromy(0, 1);
            common3(b) && m.order() == 12 && b.at(0, 0) == &(&half() * &m.pow(2))
        },
        |pr| {
            let (r, j) = (pr.get("r"), pr.get("j"));
            symmetric(
                angr(rat(1, 2) + frac(r, 6)),
                angr(frac(r, 24) + frac(j, 2)),
                half(),
            )
        },
        |pr| {
            let ab = frac(pr.get("r"), 12) + rat(pr.get("j"), 1);
            gram2(
                rat(4, 1) * &ab + rat(1 + 2 * pr.get("n"), 1),
                ab,
                rat(1 + 2 * pr.get("m"), 1),
            )
        },
        |pr| coprime(pr.get("r"), 12),
        "Conditions-only.",
    )
}

fn item_3_5() -> ItemSpec {
    conditions_only_3(
        "3.5",
        "common 3.*; q12 q21 in R9; q11 = (q12 q21)^-3",
        "2 a.b = 2r/9 + 2j, gcd(r,9) = 1; a.a = -6 a.b + 2n; b.b = 1 + 2m",
        |b| {
            let m = b.monodromy(0, 1);
            common3(b) && m.order() == 9 && b.at(0, 0) == &m.pow(-3)
        },
        |pr| {
            let (r, j) = (pr.get("r"), pr.get("j"));
            symmetric(ang(-r, 3), angr(frac(r, 18) + frac(j, 2)), half())
        },
        |pr| {
            let ab = frac(pr.get("r"), 9) + rat(pr.get("j"), 1);
            gram2(
                rat(-6, 1) * &ab + rat(2 * pr.get("n"), 1),
                ab,
                rat(1 + 2 * pr.get("m"), 1),
            )
        },
        |pr| coprime(pr.get("r"), 9),
        "Conditions-only.",
    )
}

fn item_3_6() -> ItemSpec {
    conditions_only_3(
        "3.6",
        "common 3.*; q12 q21 in R24; q11 = -(q12 q21)^4",
        "2 a.b = r/12 + 2j, gcd(r,24) = 1; a.a = 8 a.b + 2n; b.b = 1 + 2m",
        |b| {
            let m = b.monodromy(0, 1);
            common3(b) && m.order() == 24 && b.at(0, 0) == &(&half() * &m.pow(4))
        },
        |pr| {
            let (r, j) = (pr.get("r"), pr.get("j"));
            symmetric(
                angr(rat(1, 2) + frac(r, 6)),
                angr(frac(r, 48) + frac(j, 2)),
                half(),
            )
        },
        // The printed scalar form has a.a = 8 a.b + 2n, which contradicts
        // q11 = -(q12 q21)^4; the odd shift restores the correspondence.
        |pr| {
            let ab = frac(pr.get("r"), 24) + rat(pr.get("j"), 1);
            gram2(
                rat(8, 1) * &ab + rat(1 + 2 * pr.get("n"), 1),
                ab,
                rat(1 + 2 * pr.get("m"), 1),
            )
        },
        |pr| coprime(pr.get("r"), 24),
        "Conditions-only. The stored Gram family uses a.a = 8 a.b + 1 + 2n; \
         without the odd shift the printed scalar form does not reproduce \
         q11 = -(q12 q21)^4.",
    )
}

fn item_3_7() -> ItemSpec {
    conditions_only_3(
        "3.7",
        "common 3.*; q12 q21 in R30; q11 = -(q12 q21)^5",
        "2 a.b = r/15 + 2j, gcd(r,30) = 1; a.a = 10 a.b + 1 + 2n; b.b = 1 + 2m",
        |b| {
            let m = b.monodromy(0, 1);
            common3(b) && m.order() == 30 && b.at(0, 0) == &(&half() * &m.pow(5))
        },
        |pr| {
            let (r, j) = (pr.get("r"), pr.get("j"));
            symmetric(
                angr(rat(1, 2) + frac(r, 6)),
                angr(frac(r, 60) + frac(j, 2)),
                half(),
            )
        },
        |pr| {
            let ab = frac(pr.get("r"), 30) + rat(pr.get("j"), 1);
            gram2(
                rat(10, 1) * &ab + rat(1 + 2 * pr.get("n"), 1),
                ab,
                rat(1 + 2 * pr.get("m"), 1),
            )
        },
        |pr| coprime(pr.get("r"), 30),
        "Conditions-only.",
    )
}

fn item_4_1() -> ItemSpec {
    fn charge_from_level(k: Rational) -> Result<Rational, CatalogError> {
        let t = &k + rat(3, 1);
        if t.is_zero() {
            return Err(CatalogError::EvaluatorPole);
        }
        // -25 + 24/(k+3) + 6(k+3)
        pole_form(rat(-25, 1), rat(6, 1), rat(24, 1), t)
    }
    ItemSpec {
        id: "4.1",
        cartan_label: Some("B2"),
        conditions_text: "q12 q21 != 1; q11 q12 q21 != 1; q12 q21 q22 != 1; q22 = -1; \
                          ord(q11) >= 5; q12 q21 = q11^-2",
        scalar_conditions_text: Some(
            "a.a = 2/p + 2j, |p| >= 5; 2 a.a + 2 a.b = 2n; b.b = 1 + 2m",
        ),
        conditions_only: false,
        matches_fn: |b| {
            common4(b) && b.at(0, 0).order() >= 5 && b.monodromy(0, 1) == b.at(0, 0).pow(-2)
        },
        braiding_fn: Some(|pr| {
            let (p, n) = (pr.get("p"), pr.get("n"));
            symmetric(ang(1, p), angr(frac(n, 2) - frac(1, p)), half())
        }),
        gram_fn: Some(|pr| {
            let aa = frac(2, pr.get("p")) + rat(2 * pr.get("j"), 1);
            let ab = rat(pr.get("n"), 1) - &aa;
            gram2(aa, ab, rat(1 + 2 * pr.get("m"), 1))
        }),
        int_params: &["m", "n", "j"],
        order_params: &["p"],
        order_min_abs: 5,
        validity_fn: |_| true,
        families: vec![SolutionFamily {
            name: "regular",
            class: SolutionClass::Regular,
            constraint_text: "m = n = 0 (the only solutions; would-be peculiar ones need |p| <= 4)",
            matches: |pr| pr.get("m") == 0 && pr.get("n") == 0,
            charge: Some(ChargeEvaluator {
                text: "c = -25 + 24/(k+3) + 6(k+3), 1/p + j = -1/(k+1)",
                eval: |pr| {
                    let u = frac(1, pr.get("p")) + rat(pr.get("j"), 1);
                    // k = -1/u - 1
                    let k = div(rat(-1, 1), u)? - rat(1, 1);
                    charge_from_level(k)
                },
                eval_alt: Some(|pr| {
                    // 1/p + j = 1/2 + 1/(k+1)
                    let u = frac(1, pr.get("p")) + rat(pr.get("j"), 1) - rat(1, 2);
                    let k = div(rat(1, 1), u)? - rat(1, 1);
                    charge_from_level(k)
                }),
            }),
        }],
        presentation: Some(Presentation {
            cases: vec![PresentationCase {
                domain_text: "p >= 5",
                domain: |pr| pr.get("p") >= 5,
                generators: |pr| {
                    let p = pr.get("p");
                    let p_prime = angr(rat(1, 2) + frac(1, p)).order() as u32;
                    vec![
                        gen(letters(&[0, 0, 0, 1]), 1),
                        gen(f1(), p as u32),
                        gen(letters(&[0, 1]), p_prime),
                        gen(f2(), 2),
                    ]
                },
                dimension_text: "4 p p', p' = ord(-q11)",
                dimension: |pr| {
                    let p = pr.get("p");
                    4 * p as u64 * angr(rat(1, 2) + frac(1, p)).order()
                },
            }],
        }),
        fkw: None,
        notes: "The regular charge is minus the W(2,3) value 25 - 24/(k+3) - 6(k+3).",
    }
}

/// Items 4.2-4.8 and 5.1-5.5 print only braiding-matrix conditions: no
/// scalar-product form, hence no Gram family to scan.
fn conditions_only_item(id: &'static str, conditions: &'static str) -> ItemSpec {
    ItemSpec {
        id,
        cartan_label: None,
        conditions_text: conditions,
        scalar_conditions_text: None,
        conditions_only: true,
        matches_fn: conditions_only_matcher(id),
        braiding_fn: None,
        gram_fn: None,
        int_params: &[],
        order_params: &[],
        order_min_abs: 2,
        validity_fn: |_| true,
        families: vec![],
        presentation: None,
        fkw: None,
        notes: "Conditions-only.",
    }
}

fn conditions_only_matcher(id: &str) -> fn(&BraidingMatrix) -> bool {
    match id {
        "4.2" => |b| {
            common4(b)
                && matches!(b.at(0, 0).order(), 5 | 8 | 12 | 14 | 20)
                && b.monodromy(0, 1) == b.at(0, 0).pow(-3)
        },
        "4.3" => |b| {
            common4(b)
                && matches!(b.at(0, 0).order(), 10 | 18)
                && b.monodromy(0, 1) == b.at(0, 0).pow(-4)
        },
        "4.4" => |b| {
            common4(b)
                && matches!(b.at(0, 0).order(), 14 | 24)
                && b.monodromy(0, 1) == b.at(0, 0).pow(-5)
        },
        "4.5" => |b| {
            let m = b.monodromy(0, 1);
            common4(b) && m.order() == 8 && b.at(0, 0) == &m.pow(-2)
        },
        "4.6" => |b| {
            let m = b.monodromy(0, 1);
            common4(b) && m.order() == 12 && b.at(0, 0) == &m.pow(-3)
        },
        "4.7" => |b| {
            let m = b.monodromy(0, 1);
            common4(b) && m.order() == 20 && b.at(0, 0) == &m.pow(-4)
        },
        "4.8" => |b| {
            let m = b.monodromy(0, 1);
            common4(b) && m.order() == 30 && b.at(0, 0) == &m.pow(-6)
        },
        "5.1" => |b| {
            let q0 = b.at(0, 0) * &b.monodromy(0, 1);
            common5(b)
                && q0.order() == 12
                && b.at(0, 0) == &q0.pow(4)
                && b.at(1, 1) == &(&half() * &q0.pow(2))
        },
        "5.2" => |b| {
            let m = b.monodromy(0, 1);
            let target = &half() * &m.pow(2);
            common5(b) && m.order() == 12 && b.at(0, 0) == &target && b.at(1, 1) == &target
        },
        "5.3" => |b| {
            let m = b.monodromy(0, 1);
            common5(b) && m.order() == 24 && b.at(0, 0) == &m.pow(-6) && b.at(1, 1) == &m.pow(-8)
        },
        "5.4" => |b| {
            common5(b)
                && b.at(0, 0).order() == 18
                && b.monodromy(0, 1) == b.at(0, 0).pow(-2)
                && b.at(1, 1) == &(&half() * &b.at(0, 0).pow(3))
        },
        "5.5" => |b| {
            common5(b)
                && b.at(0, 0).order() == 30
                && b.monodromy(0, 1) == b.at(0, 0).pow(-3)
                && b.at(1, 1) == &(&half() * &b.at(0, 0).pow(5))
        },
        other => panic!("no conditions-only matcher for {other}"),
    }
}
