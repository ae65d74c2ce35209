//! Acceptance criteria, one PASS/FAIL line each. All tolerances are exact.

use std::time::Instant;

use kronlab::coefficients::{kronecker, reduced_kronecker, ReducedMethod};
use kronlab::fixtures::{golden_rows, hook_table};
use kronlab::identities::check_identities;
use kronlab::partition::{ell_forms, Partition};
use kronlab::stability::{
    abc_coefficients, abc_record, conj111_search, hook_bounds_k, hook_stable_value, q_polynomial, quasipoly_eval,
    row_bounds_kprime, AbcMethod, HookMethod, QVariant,
};
use kronlab::characters::{enumerate_partitions, global_cache, z_order};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { passed: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { passed: false, detail: detail.into() }
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn e() -> Partition {
    Partition::empty()
}

fn rk(a: &Partition, b: &Partition, c: &Partition, m: ReducedMethod) -> u128 {
    reduced_kronecker(a, b, c, m).unwrap()
}

fn hook_grid() -> Outcome {
    let expected = hook_table();
    let base = p("3,3");
    let mut cells = 0;
    for (i, row) in expected.iter().enumerate() {
        for (j, &want) in row.iter().enumerate() {
            let s = base.hook_add(i, j).unwrap();
            let got = kronecker(&s, &s, &s);
            if got != want {
                return fail(format!("cell ({i},{j}): got {got}, printed {want}"));
            }
            cells += 1;
        }
    }
    pass(format!("{cells}/100 cells, n up to 24"))
}

fn column_sequence() -> Outcome {
    let printed = [1u128, 17, 66, 133, 180, 198, 203, 204, 204, 204];
    let grow = |base: &str, k: usize| p(base).union(&Partition::column(k));
    let values: Vec<u128> = (0..=10)
        .map(|k| rk(&grow("2,2", k), &grow("3", k), &grow("4", k), ReducedMethod::Brion))
        .collect();
    if values[..10] != printed || values[10] != 204 {
        return fail(format!("computed {values:?}"));
    }
    let stabilized: Vec<u128> = (0..=10)
        .map(|k| rk(&grow("2,2", k), &grow("3", k), &grow("4", k), ReducedMethod::Stabilize))
        .collect();
    if stabilized != values {
        return fail(format!("stabilization gives {stabilized:?}"));
    }
    pass("printed values at 1^0..1^9 and 204 at 1^10 (printed labels run k=1..10); stabilization agrees at 1^0..1^10".to_string())
}

fn appendix_golden() -> Outcome {
    let rows = golden_rows();
    let light: Vec<_> = rows
        .iter()
        .filter(|r| r.alpha.weight() <= 2 && r.beta.weight() <= 2 && r.gamma.weight() <= 2)
        .collect();
    let heavy_keys = [
        ("3", "3", "3"),
        ("3", "-", "-"),
        ("3", "1", "-"),
        ("3", "2", "1"),
        ("3", "1,1", "1"),
        ("3", "2", "2"),
        ("2,1", "-", "-"),
        ("2,1", "2,1", "1"),
        ("2,1", "2,1", "2,1"),
        ("1,1,1", "1,1,1", "1,1,1"),
        ("2", "1,1,1", "1,1"),
        ("3", "2,1", "1,1,1"),
    ];
    let mut chosen = light.clone();
    for (a, b, c) in heavy_keys {
        match rows.iter().find(|r| r.alpha == p(a) && r.beta == p(b) && r.gamma == p(c)) {
            Some(r) => chosen.push(r),
            None => return fail(format!("fixture has no row ({a};{b};{c})")),
        }
    }
    for r in &chosen {
        let (a, b, c) = (&r.alpha, &r.beta, &r.gamma);
        let h = hook_stable_value(a, b, c, HookMethod::Series).unwrap();
        if h != r.hook_stable {
            return fail(format!("ḡ̄({a};{b};{c}) = {h}, printed {}", r.hook_stable));
        }
        for m in [AbcMethod::FromPolynomial, AbcMethod::FromSeries] {
            let got = abc_record(a, b, c, m).unwrap();
            if got.a != r.a || got.b != r.b || got.c != r.c {
                return fail(format!("{m:?} ({a};{b};{c}): got {got:?}, printed A={} B={:?} C={}", r.a, r.b, r.c));
            }
        }
    }
    pass(format!("{} rows of weight ≤ 2 and {} heavier rows", light.len(), heavy_keys.len()))
}

fn cross_agreement() -> Outcome {
    let parts = Partition::all_up_to(3);
    let mut n = 0;
    for a in &parts {
        for b in &parts {
            for c in &parts {
                let s = rk(a, b, c, ReducedMethod::Stabilize);
                let br = rk(a, b, c, ReducedMethod::Brion);
                if s != br {
                    return fail(format!("({a};{b};{c}): stabilize {s}, brion {br}"));
                }
                n += 1;
            }
        }
    }
    pass(format!("{n} triples (all {} partitions of weight ≤ 3 in each slot)", parts.len()))
}

/// Coefficient of `x^a y^b z^c` in `1 / ((1-xyz)(1-xy)(1-xz)(1-yz))`, or in
/// `(1+xyz) / ((1-xy)(1-xz)(1-yz))` when `columns`, by counting exponent
/// choices.
fn count_lattice(a: usize, b: usize, c: usize, columns: bool) -> u128 {
    let mut total = 0;
    for t in 0..=a.min(b).min(c) {
        if columns && t > 1 {
            break;
        }
        let (a, b, c) = (a - t, b - t, c - t);
        // (xy)^p (xz)^q (yz)^r: p + q = a, p + r = b, q + r = c.
        if (a + b + c) % 2 != 0 {
            continue;
        }
        let half = (a + b + c) / 2;
        if half >= a && half >= b && half >= c {
            total += 1;
        }
    }
    total
}

fn closed_forms() -> Outcome {
    let mut n = 0;
    for a in 0..=6 {
        for b in 0..=6 {
            for c in 0..=6 {
                let l = ell_forms(a as i64, b as i64, c as i64);
                let inside = l.iter().all(|&v| v >= 0);
                let row_formula = if inside { 1 + (l.iter().min().unwrap() / 2) as u128 } else { 0 };
                let col_formula = u128::from(inside);
                let rows = [a, b, c].map(Partition::row);
                let cols = [a, b, c].map(Partition::column);
                let row_generic = rk(&rows[0], &rows[1], &rows[2], ReducedMethod::Brion);
                let col_generic = rk(&cols[0], &cols[1], &cols[2], ReducedMethod::Brion);
                let row_closed = rk(&rows[0], &rows[1], &rows[2], ReducedMethod::ClosedForm);
                let col_closed = rk(&cols[0], &cols[1], &cols[2], ReducedMethod::ClosedForm);
                let row_count = count_lattice(a, b, c, false);
                let col_count = count_lattice(a, b, c, true);
                if [row_generic, row_closed, row_count].iter().any(|&v| v != row_formula) {
                    return fail(format!("rows ({a},{b},{c}): formula {row_formula}, generic {row_generic}, closed {row_closed}, series {row_count}"));
                }
                if [col_generic, col_closed, col_count].iter().any(|&v| v != col_formula) {
                    return fail(format!("columns ({a},{b},{c}): formula {col_formula}, generic {col_generic}, closed {col_closed}, series {col_count}"));
                }
                n += 1;
            }
        }
    }
    pass(format!("{n} row triples and {n} column triples"))
}

fn p111_identities() -> Outcome {
    let parts = Partition::all_up_to(2);
    let one = BigRational::from_integer(BigInt::from(1));
    let minus = -one.clone();
    let mut n = 0;
    for a in &parts {
        for b in &parts {
            for c in &parts {
                let q = q_polynomial(a, b, c, QVariant::Col).unwrap().poly;
                let at_one = q.eval([&one, &one, &one, &one]);
                let at_minus = q.eval([&minus, &minus, &minus, &one]);
                let h = hook_stable_value(a, b, c, HookMethod::Series).unwrap();
                let g = kronecker(a, b, c);
                if at_one != BigRational::from_integer(BigInt::from(h)) || at_minus != BigRational::from_integer(BigInt::from(g)) {
                    return fail(format!("({a};{b};{c}): P(1)={at_one} vs {h}, P(-1)={at_minus} vs {g}"));
                }
                n += 1;
            }
        }
    }
    pass(format!("{n} triples"))
}

fn quasipolynomial_region() -> Outcome {
    let mut n = 0;
    for (alpha, beta, gamma) in [(e(), e(), e()), (p("1"), e(), e()), (p("1"), p("1"), p("1"))] {
        let k = row_bounds_kprime(&alpha, &beta, &gamma);
        for a in alpha.first()..=25usize {
            for b in beta.first()..=a {
                for c in gamma.first()..=a {
                    let (ai, bi, ci) = (a as i64, b as i64, c as i64);
                    if ai - bi < k[0] || ai - ci < k[1] || bi + ci - ai < k[2] {
                        continue;
                    }
                    let q = quasipoly_eval(&alpha, &beta, &gamma, ai, bi, ci).unwrap();
                    let g = rk(&alpha.prepend(a).unwrap(), &beta.prepend(b).unwrap(), &gamma.prepend(c).unwrap(), ReducedMethod::Brion);
                    if q < 0 || q as u128 != g {
                        return fail(format!("({alpha};{beta};{gamma}) at ({a},{b},{c}): quasipolynomial {q}, brion {g}"));
                    }
                    n += 1;
                }
            }
        }
    }
    if n == 0 {
        return fail("no lattice points in the region");
    }
    pass(format!("{n} lattice points with a ≤ 25"))
}

fn column_stabilization() -> Outcome {
    let mut details = Vec::new();
    for s in ["2", "1"] {
        let base = p(s);
        let k1 = hook_bounds_k(&base, &base, &base)[0] as usize;
        let limit = hook_stable_value(&base, &base, &base, HookMethod::Series).unwrap();
        for t in k1..=k1 + 3 {
            let grown = base.add(&Partition::column(t));
            let v = rk(&grown, &grown, &grown, ReducedMethod::Stabilize);
            let w = rk(&grown, &grown, &grown, ReducedMethod::Brion);
            if v != limit || w != limit {
                return fail(format!("({s})+(1^{t}): stabilize {v}, brion {w}, ḡ̄ {limit}"));
            }
        }
        details.push(format!("({s})^3 → {limit} for a=b=c={k1}..{}", k1 + 3));
    }
    pass(details.join("; "))
}

/// The printed degree-3, period-6 quasipolynomial, in exact integer form.
fn stretched_formula(k: i64) -> i64 {
    let num = match k.rem_euclid(6) {
        0 => (k + 6) * (k * k + 6 * k + 12),
        1 => (k + 5) * (k * k + 7 * k + 4),
        2 => (k + 4).pow(3),
        3 => (k + 3) * (k * k + 9 * k + 12),
        4 => (k + 2) * (k * k + 10 * k + 28),
        _ => (k + 1) * (k + 4) * (k + 7),
    };
    assert_eq!(num % 72, 0, "formula is integral at k = {k}");
    num / 72
}

fn stretched() -> Outcome {
    let mut got = Vec::new();
    let mut want = Vec::new();
    for k in 1..=5usize {
        let sq = Partition::new(vec![k, k]).unwrap();
        got.push(rk(&Partition::row(k), &sq, &sq, ReducedMethod::Stabilize));
        want.push(stretched_formula(k as i64) as u128);
    }
    let brion: Vec<u128> = (1..=5usize)
        .map(|k| {
            let sq = Partition::new(vec![k, k]).unwrap();
            rk(&Partition::row(k), &sq, &sq, ReducedMethod::Brion)
        })
        .collect();
    if got != want || brion != want {
        return fail(format!("stabilize {got:?}, brion {brion:?}, formula {want:?}"));
    }
    pass(format!("ḡ((k),(k,k),(k,k)) = {got:?} for k = 1..5"))
}

fn conjecture_sweep() -> Outcome {
    match conj111_search(8) {
        None => pass("no counterexample with weight ≤ 8"),
        Some(t) => fail(format!("counterexample {t:?}")),
    }
}

fn properties() -> Outcome {
    let mut done = Vec::new();
    for check in check_identities(5).unwrap() {
        if !check.passed() {
            return fail(format!("{}: {}", check.name, check.failure.unwrap()));
        }
        done.push(check.name);
    }
    // Column orthogonality of characters.
    let cache = global_cache();
    for n in 0..=7 {
        let parts = enumerate_partitions(n);
        for r in &parts {
            for s in &parts {
                let sum: i128 = parts
                    .iter()
                    .map(|l| cache.value(l, r).unwrap() * cache.value(l, s).unwrap())
                    .sum();
                let want = if r == s { z_order(r) } else { BigInt::zero() };
                if BigInt::from(sum) != want {
                    return fail(format!("orthogonality at {r} / {s}"));
                }
            }
        }
    }
    done.push("orthogonality");
    // Kronecker symmetries: permutations and conjugating two indices.
    for n in 1..=6 {
        let parts = Partition::all(n);
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    let g = kronecker(a, b, c);
                    let others = [kronecker(b, a, c), kronecker(c, b, a), kronecker(&a.conjugate(), &b.conjugate(), c)];
                    if others.iter().any(|&v| v != g) {
                        return fail(format!("symmetry at ({a};{b};{c})"));
                    }
                }
            }
        }
    }
    done.push("kronecker-symmetry");
    // Murnaghan vanishing and monotonicity of padded sequences.
    for a in Partition::all_up_to(3) {
        for b in Partition::all_up_to(3) {
            for c in Partition::all_up_to(3) {
                let (wa, wb, wc) = (a.weight(), b.weight(), c.weight());
                let admissible = wa <= wb + wc && wb <= wa + wc && wc <= wa + wb;
                let v = rk(&a, &b, &c, ReducedMethod::Brion);
                if !admissible && v != 0 {
                    return fail(format!("Murnaghan vanishing fails at ({a};{b};{c})"));
                }
                let prof = kronlab::coefficients::stabilization_profile(&a, &b, &c);
                if prof.values.windows(2).any(|w| w[0] > w[1]) || prof.stable_value != v {
                    return fail(format!("padded sequence at ({a};{b};{c}): {:?}", prof.values));
                }
                let abc = abc_coefficients(&a, &b, &c, AbcMethod::FromPolynomial).unwrap();
                if (abc.k + abc.a_minus) % 2 != 0 || abc.a < 0 {
                    return fail(format!("B integrality at ({a};{b};{c})"));
                }
            }
        }
    }
    done.extend(["murnaghan-vanishing", "monotonicity", "b-integrality"]);
    pass(done.join(", "))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("table of (3,3)+{i}{j} coefficients", hook_grid),
        ("column-growth sequence to 204", column_sequence),
        ("golden coefficient tables", appendix_golden),
        ("stabilize = brion for weight ≤ 3", cross_agreement),
        ("row and column closed forms, 0 ≤ a,b,c ≤ 6", closed_forms),
        ("P̄col(1,1,1) = ḡ̄ and P̄col(-1,-1,-1) = g", p111_identities),
        ("quasipolynomial region", quasipolynomial_region),
        ("column stabilization", column_stabilization),
        ("stretched period-6 quasipolynomial", stretched),
        ("(1)(1) monotonicity sweep", conjecture_sweep),
        ("property suites", properties),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {:>2} {name} [tolerance: exact] {} ({:.1}s)",
            i + 1,
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
        if !outcome.passed {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
