use kronlab::alphabet::{Alphabet, AlphabetExpr};
use kronlab::coefficients::{kronecker, reduced_kronecker, ReducedMethod};
use kronlab::laurent::LaurentPoly;
use kronlab::partition::{ell_and_cone, Cone, ConePosition, Partition};
use kronlab::series::{extract_constant, sigma_expand};
use kronlab::stability::{
    abc_coefficients, abc_record, classify_direction, hook_stab_verify, hook_stable_value, q_polynomial,
    quasipoly_eval, row_bounds_kprime, AbcMethod, HookMethod, QVariant, StabilityKind,
};
use kronlab::straighten::{straighten, vertex_term, VertexVariant};
use kronlab::IntSequence;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn e() -> Partition {
    Partition::empty()
}

fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_weight, 0..=max_weight).prop_map(Partition::from_unsorted)
}

fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i32..=3, -3i32..=3, -2i32..=2), -5i64..=5), 0..5).prop_map(|terms| {
        let mut out = LaurentPoly::zero();
        for ((a, b, c), k) in terms {
            out.add_term([a, b, c, 0], BigRational::from_integer(BigInt::from(k)));
        }
        out
    })
}

proptest! {
    #[test]
    fn conjugation_is_involutive(lambda in partition_strategy(12)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
        prop_assert_eq!(lambda.conjugate().len(), lambda.first());
    }

    #[test]
    fn cuts_and_padding(lambda in partition_strategy(12), extra in 0usize..6) {
        prop_assert_eq!(lambda.cut_row().weight() + lambda.first(), lambda.weight());
        let n = lambda.weight() + lambda.first() + extra;
        let (seq, valid) = lambda.pad_to_weight(n as i64);
        prop_assert!(valid);
        let padded = seq.to_partition().unwrap();
        prop_assert_eq!(padded.cut_row(), lambda.clone());
        if !lambda.is_empty() {
            let hat = lambda.cut_hook();
            prop_assert_eq!(hat.weight(), lambda.weight() + 1 - lambda.first() - lambda.len());
        }
    }

    #[test]
    fn hook_add_grows_row_and_column(lambda in partition_strategy(10), a in 0usize..5, b in 0usize..5) {
        prop_assume!(!lambda.is_empty());
        let grown = lambda.hook_add(a, b).unwrap();
        prop_assert_eq!(grown.weight(), lambda.weight() + a + b);
        prop_assert_eq!(grown.cut_hook(), lambda.cut_hook());
    }

    #[test]
    fn straightening_fixes_partitions(lambda in partition_strategy(10)) {
        let seq = IntSequence::new(lambda.parts().iter().map(|&v| v as i64).collect());
        let s = straighten(&seq);
        prop_assert_eq!(s.sign, 1);
        prop_assert_eq!(s.shape, Some(lambda));
    }

    #[test]
    fn row_vertex_prepends(lambda in partition_strategy(8), extra in 0usize..4) {
        let n = lambda.first() + extra;
        let t = vertex_term(&lambda, n as i64, VertexVariant::Row);
        prop_assert_eq!(t.shape, Some(lambda.prepend(n).unwrap()));
    }

    #[test]
    fn laurent_ring_laws(a in laurent_strategy(), b in laurent_strategy(), c in laurent_strategy()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        let one = BigRational::from_integer(BigInt::from(1));
        let two = BigRational::from_integer(BigInt::from(2));
        let at = [&one, &two, &one, &one];
        prop_assert_eq!((&a * &b).eval(at), a.eval(at) * b.eval(at));
    }
}

#[test]
fn eps_squares_to_one() {
    let e2 = AlphabetExpr::eps() * AlphabetExpr::eps();
    assert_eq!(e2.normal_form(), AlphabetExpr::int(1).normal_form());
    let f = AlphabetExpr::x() * AlphabetExpr::y();
    let g = f.substitute(Alphabet::X, &(AlphabetExpr::neg_eps() * AlphabetExpr::x()));
    assert_eq!(
        g.normal_form(),
        (AlphabetExpr::neg_eps() * AlphabetExpr::x() * AlphabetExpr::y()).normal_form()
    );
}

#[test]
fn omega_matches_substitution() {
    let f = AlphabetExpr::x() * AlphabetExpr::y() + AlphabetExpr::x() * AlphabetExpr::z();
    let caps = [3, 3, 3];
    let direct = sigma_expand(&f, caps).unwrap().omega(Alphabet::X);
    let substituted = sigma_expand(&f.substitute(Alphabet::X, &(AlphabetExpr::neg_eps() * AlphabetExpr::x())), caps).unwrap();
    assert_eq!(direct, substituted);
}

#[test]
fn kronecker_with_trivial_and_sign() {
    for n in 1..=7 {
        let parts = Partition::all(n);
        for l in &parts {
            for m in &parts {
                assert_eq!(kronecker(l, m, &Partition::row(n)), u128::from(l == m));
                assert_eq!(kronecker(l, m, &Partition::column(n)), u128::from(*l == m.conjugate()));
            }
        }
    }
}

#[test]
fn reduced_methods_agree_on_weight_four_sample() {
    let parts = Partition::all_up_to(4);
    for (i, a) in parts.iter().enumerate() {
        for b in parts.iter().skip(i % 3).step_by(3) {
            for c in parts.iter().skip(i % 5).step_by(5) {
                let s = reduced_kronecker(a, b, c, ReducedMethod::Stabilize).unwrap();
                let br = reduced_kronecker(a, b, c, ReducedMethod::Brion).unwrap();
                assert_eq!(s, br, "({a};{b};{c})");
            }
        }
    }
}

#[test]
fn two_hooks_and_a_near_hook() {
    for a in 1..=5usize {
        for b in 1..=5usize {
            for c in 1..=5usize {
                let d = a.abs_diff(b);
                let want = if (c == d && a + b > c + 1) || (c > d && a + b == c + 1) {
                    1
                } else if c > d && a + b > c + 1 {
                    2
                } else {
                    0
                };
                let near = Partition::column(c - 1).prepend(2).unwrap();
                let (x, y) = (Partition::column(a), Partition::column(b));
                assert_eq!(reduced_kronecker(&x, &y, &near, ReducedMethod::Brion).unwrap(), want, "{a} {b} {c}");
                assert_eq!(reduced_kronecker(&x, &y, &near, ReducedMethod::ClosedForm).unwrap(), want);
                let n = ((a + b + c + 6) / 2).max(a + 1).max(b + 1).max(c + 3);
                let pad = |q: &Partition| q.prepend(n - q.weight()).unwrap();
                assert_eq!(kronecker(&pad(&x), &pad(&y), &pad(&near)), want, "kronecker {a} {b} {c}");
            }
        }
    }
}

#[test]
fn col_polynomial_specializations() {
    let parts = Partition::all_up_to(2);
    for a in &parts {
        for b in &parts {
            for c in &parts {
                let q = q_polynomial(a, b, c, QVariant::Col).unwrap().poly;
                let v = q.eval_all(1);
                let h = hook_stable_value(a, b, c, HookMethod::Series).unwrap();
                assert_eq!(v, BigRational::from_integer(BigInt::from(h)));
                assert_eq!(h, hook_stable_value(a, b, c, HookMethod::Polynomial).unwrap());
            }
        }
    }
}

#[test]
fn symmetric_quantities_are_symmetric() {
    let parts = Partition::all_up_to(2);
    for a in &parts {
        for b in &parts {
            for c in &parts {
                let base = abc_coefficients(a, b, c, AbcMethod::FromPolynomial).unwrap();
                let h = hook_stable_value(a, b, c, HookMethod::Series).unwrap();
                for [x, y, z] in [[a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
                    let t = abc_coefficients(x, y, z, AbcMethod::FromPolynomial).unwrap();
                    assert_eq!((t.a, t.c), (base.a, base.c));
                    assert_eq!(hook_stable_value(x, y, z, HookMethod::Series).unwrap(), h);
                }
                let swapped = abc_coefficients(a, c, b, AbcMethod::FromPolynomial).unwrap();
                assert_eq!(swapped.b, base.b);
                assert_eq!(
                    abc_record(a, b, c, AbcMethod::FromPolynomial).unwrap(),
                    abc_record(a, b, c, AbcMethod::FromSeries).unwrap()
                );
            }
        }
    }
}

#[test]
fn two_row_family() {
    for w in 0..=5usize {
        for a2 in 0..=w / 2 {
            let a1 = w - a2;
            let alpha = Partition::new(vec![a1, a2]).unwrap();
            let t = abc_coefficients(&alpha, &e(), &e(), AbcMethod::FromPolynomial).unwrap();
            assert_eq!(t.a, (a1 - a2 + 1) as i64);
            let c = if (a1 + a2) % 2 == 0 { if a2 % 2 == 0 { 1 } else { -1 } } else { 0 };
            assert_eq!(t.c, c, "{alpha}");
            let (x1, x2) = (a1 as i64, a2 as i64);
            assert_eq!(t.b, nearest_quarter(-3 * (x1 * x1 - (x2 - 1) * (x2 - 1))), "{alpha}");
            let s = abc_coefficients(&e(), &alpha, &e(), AbcMethod::FromPolynomial).unwrap();
            assert_eq!(s.b, nearest_quarter(-((x1 - 1) * (x1 - 1) - (x2 - 2) * (x2 - 2))), "{alpha}");
        }
    }
}

/// Nearest integer to `n / 4`, for `n` not congruent to 2 mod 4.
fn nearest_quarter(n: i64) -> i64 {
    assert_ne!(n.rem_euclid(4), 2);
    (n + 1).div_euclid(4) + i64::from((n + 1).rem_euclid(4) >= 3)
}

#[test]
fn nearest_quarter_rounds() {
    assert_eq!(nearest_quarter(3), 1);
    assert_eq!(nearest_quarter(-9), -2);
    assert_eq!(nearest_quarter(-3), -1);
    assert_eq!(nearest_quarter(1), 0);
    assert_eq!(nearest_quarter(-1), 0);
    assert_eq!(nearest_quarter(8), 2);
}

#[test]
fn quasipolynomial_matches_stabilization() {
    for (alpha, beta, gamma) in [(e(), e(), e()), (p("1"), e(), e()), (p("1"), p("1"), e())] {
        let k = row_bounds_kprime(&alpha, &beta, &gamma);
        let mut points = 0;
        'outer: for a in 0..=16i64 {
            for b in 0..=a {
                for c in 0..=a {
                    if a - b < k[0] || a - c < k[1] || b + c - a < k[2] {
                        continue;
                    }
                    if b < beta.first() as i64 || c < gamma.first() as i64 || a < alpha.first() as i64 {
                        continue;
                    }
                    let q = quasipoly_eval(&alpha, &beta, &gamma, a, b, c).unwrap();
                    let g = reduced_kronecker(
                        &alpha.prepend(a as usize).unwrap(),
                        &beta.prepend(b as usize).unwrap(),
                        &gamma.prepend(c as usize).unwrap(),
                        ReducedMethod::Stabilize,
                    )
                    .unwrap();
                    assert_eq!(q as u128, g, "({alpha};{beta};{gamma}) at ({a},{b},{c})");
                    points += 1;
                    if points == 20 {
                        break 'outer;
                    }
                }
            }
        }
        assert_eq!(points, 20);
    }
}

#[test]
fn hook_stability_at_bound() {
    let s = p("3,3");
    let r = hook_stab_verify(&s, &s, &s, 8, 8, 8, 16).unwrap();
    assert_eq!((r.kronecker, r.reduced, r.hook_stable), (145, 145, 145));
    assert!(r.region_ok);
}

#[test]
fn linear_directions_have_linear_growth() {
    let r = classify_direction(&p("2"), &p("1"), &p("1"), 2, 2, 1).unwrap();
    let (ell, pos) = ell_and_cone(2, 2, 1, Cone::C);
    assert_eq!(pos, ConePosition::Interior);
    match r.kind {
        StabilityKind::Linear { slope, .. } => {
            let a = abc_coefficients(&e(), &e(), &e(), AbcMethod::FromPolynomial).unwrap().a;
            assert_eq!(slope, num_rational::Rational64::new(a * ell[0], 2).to_string());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn brion_series_coefficients_are_reduced_coefficients() {
    let f = kronlab::finite::brion_kernel();
    for a in Partition::all_up_to(2) {
        for b in Partition::all_up_to(2) {
            let c = p("1");
            let s = sigma_expand(&f, [a.weight(), b.weight(), 1]).unwrap();
            let v = extract_constant(&s, &a, &b, &c).unwrap();
            let r = reduced_kronecker(&a, &b, &c, ReducedMethod::Stabilize).unwrap();
            assert_eq!(v, BigRational::from_integer(BigInt::from(r)));
        }
    }
}
