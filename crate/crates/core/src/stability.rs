//! Hook-stable limits, the `Q` polynomials, the `A, B, C` coefficients of the
//! linear quasipolynomials along two-row directions, effective bounds, and the
//! asymptotic classification of reduced Kronecker sequences.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::AlphabetExpr;
use crate::coefficients::{kronecker, reduced, reduced_kronecker, stabilization_weight, ReducedMethod};
use crate::error::{KronError, Result};
use crate::finite::{hook_kernel, schur_coefficient};
use crate::laurent::{rational_to_i64, LaurentPoly};
use crate::partition::{ell_and_cone, ell_forms, n0_bound, Cone, ConePosition, Partition};
use crate::series::{caps_for, chi_series, extract_constant, extract_schur_coeff, sigma_expand, PowerSumSeries};

/// Padded weight above which the limit method refuses to run.
pub const LIMIT_CEILING: usize = 30;

/// Consecutive equal terms required before a border sequence is declared
/// constant.
pub const PROBE_WINDOW: usize = 4;

/// Index from which probing starts counting agreements.
pub const PROBE_START: usize = 8;

/// Longest sequence the probes will compute.
pub const PROBE_LIMIT: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QVariant {
    /// `X' = x`: grows first rows.
    Row,
    /// `X' = -εx`: grows first columns.
    Col,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QPolynomial {
    pub variant: QVariant,
    pub indices: [Partition; 3],
    #[serde(serialize_with = "serialize_display")]
    pub poly: LaurentPoly,
}

fn serialize_display<S: serde::Serializer>(p: &LaurentPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

fn letter_alphabet(index: usize, power: i32, variant: QVariant) -> AlphabetExpr {
    let l = AlphabetExpr::letter(index, power);
    match variant {
        QVariant::Row => l,
        // (-ε)^{-1} = -ε.
        QVariant::Col => AlphabetExpr::neg_eps() * l,
    }
}

/// The alphabet `H` with `X', Y', Z'` specialized according to `variant`.
pub fn h_alphabet(variant: QVariant) -> AlphabetExpr {
    let (x, y, z) = (AlphabetExpr::x(), AlphabetExpr::y(), AlphabetExpr::z());
    let (xp, yp, zp) = (
        letter_alphabet(0, 1, variant),
        letter_alphabet(1, 1, variant),
        letter_alphabet(2, 1, variant),
    );
    let (xi, yi, zi) = (
        letter_alphabet(0, -1, variant),
        letter_alphabet(1, -1, variant),
        letter_alphabet(2, -1, variant),
    );
    let sx = x.clone() + xp.clone();
    let sy = y.clone() + yp.clone();
    let sz = z.clone() + zp.clone();
    sx.clone() * sy.clone() * sz.clone() + sx.clone() * sy.clone() + sx * sz.clone() + sy * sz
        - (xp.clone() * yp.clone() * zp.clone() + xp.clone() * yp.clone() + xp * zp.clone() + yp * zp)
        - x * xi
        - y * yi
        - z * zi
}

/// `P̄row` or `P̄col` for the triple.
pub fn q_polynomial(alpha: &Partition, beta: &Partition, gamma: &Partition, variant: QVariant) -> Result<QPolynomial> {
    let series = sigma_expand(&h_alphabet(variant), caps_for(alpha, beta, gamma))?;
    let poly = extract_schur_coeff(&series, alpha, beta, gamma)?;
    Ok(QPolynomial {
        variant,
        indices: [alpha.clone(), beta.clone(), gamma.clone()],
        poly,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HookMethod {
    /// Schur coefficient of `σ[XYZ + (1-ε)(XY+XZ+YZ+X+Y+Z)]`.
    Series,
    /// `P̄col(1, 1, 1)`.
    Polynomial,
    /// Reduced Kronecker coefficient past the column bounds.
    Limit,
}

fn nonneg(v: i128, what: &str) -> u128 {
    u128::try_from(v).unwrap_or_else(|_| panic!("{what} is negative: {v}"))
}

fn big_to_i64(r: &BigRational, what: &str) -> Result<i64> {
    rational_to_i64(r).ok_or_else(|| KronError::Overflow(format!("{what} = {r} is not a 64-bit integer")))
}

/// The column-stable value `ḡ̄(α, β, γ)`.
pub fn hook_stable_value(alpha: &Partition, beta: &Partition, gamma: &Partition, method: HookMethod) -> Result<u128> {
    match method {
        HookMethod::Series => Ok(nonneg(schur_coefficient(&hook_kernel(), alpha, beta, gamma)?, "hook-stable value")),
        HookMethod::Polynomial => {
            let q = q_polynomial(alpha, beta, gamma, QVariant::Col)?;
            let v = big_to_i64(&q.poly.eval_all(1), "P̄col(1,1,1)")?;
            Ok(nonneg(v as i128, "P̄col(1,1,1)"))
        }
        HookMethod::Limit => {
            let k = hook_bounds_k(alpha, beta, gamma);
            let t = k
                .iter()
                .copied()
                .chain([alpha.len() as i64, beta.len() as i64, gamma.len() as i64])
                .max()
                .unwrap_or(0)
                .max(0) as usize;
            let grown = [alpha, beta, gamma].map(|p| p.add_column(t).expect("t is at least the length"));
            let needed = stabilization_weight(&grown[0], &grown[1], &grown[2]);
            if needed > LIMIT_CEILING {
                return Err(KronError::LimitInfeasible { needed, ceiling: LIMIT_CEILING });
            }
            reduced_kronecker(&grown[0], &grown[1], &grown[2], ReducedMethod::Stabilize)
        }
    }
}

/// Column bounds `(k_1, k_2, k_3)`.
pub fn hook_bounds_k(alpha: &Partition, beta: &Partition, gamma: &Partition) -> [i64; 3] {
    let w = |p: &Partition| p.weight() as i64;
    let r = |p: &Partition| p.first() as i64;
    let c = |p: &Partition| p.len() as i64;
    [
        w(alpha) + r(alpha) + c(beta) + c(gamma),
        w(beta) + r(beta) + c(alpha) + c(gamma),
        w(gamma) + r(gamma) + c(alpha) + c(beta),
    ]
}

/// Row bounds `(k'_1, k'_2, k'_3)` of the quasipolynomial region.
pub fn row_bounds_kprime(alpha: &Partition, beta: &Partition, gamma: &Partition) -> [i64; 3] {
    let total = (alpha.weight() + beta.weight() + gamma.weight()) as i64;
    let (a1, b1, c1) = (alpha.first() as i64, beta.first() as i64, gamma.first() as i64);
    [total + b1, total + c1, total + a1 + b1 + c1]
}

/// Bounds `(d_1, d_2, d_3)` and `d` of the hook stability region for
/// non-empty `λ, μ, ν` of equal weight.
pub fn hook_stab_bounds(lambda: &Partition, mu: &Partition, nu: &Partition) -> ([i64; 3], Rational64) {
    let (lh, mh, nh) = (lambda.cut_hook(), mu.cut_hook(), nu.cut_hook());
    let k = hook_bounds_k(&lh, &mh, &nh);
    let cols = [lambda.len() as i64, mu.len() as i64, nu.len() as i64];
    let l = ell_forms(cols[0], cols[1], cols[2]);
    let d = [k[0] - l[0] + 1, k[1] - l[1] + 1, k[2] - l[2] + 1];
    let n = lambda.weight() as i64;
    let d0 = n0_bound(&lh, &mh, &nh) + Rational64::new(cols.iter().sum::<i64>(), 2) - Rational64::from_integer(n);
    (d, d0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "which")]
pub enum HookBounds {
    K { k: [i64; 3] },
    KPrime { k_prime: [i64; 3] },
    D { d: [i64; 3], d0: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AbcMethod {
    FromPolynomial,
    FromSeries,
}

/// `A, B, C` for one index order, with the auxiliary sums `K, A⁺, A⁻`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbcTriple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub k: i64,
    pub a_plus: i64,
    pub a_minus: i64,
}

/// `A`, the three `B` orderings `(αβγ, βαγ, γαβ)`, and `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AbcRecord {
    #[serde(rename = "A")]
    pub a: i64,
    #[serde(rename = "B")]
    pub b: [i64; 3],
    #[serde(rename = "C")]
    pub c: i64,
}

fn abc_from_polynomial(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<AbcTriple> {
    let q = q_polynomial(alpha, beta, gamma, QVariant::Row)?;
    let mut a = BigRational::zero();
    let mut k = BigRational::zero();
    let mut plus = BigRational::zero();
    let mut minus = BigRational::zero();
    for (exp, coeff) in q.poly.terms() {
        a += coeff;
        let l1 = ell_forms(exp[0] as i64, exp[1] as i64, exp[2] as i64)[0];
        k += coeff * BigRational::from_integer(BigInt::from(l1));
        if (exp[0] + exp[1] + exp[2]).rem_euclid(2) == 0 {
            plus += coeff;
        } else {
            minus += coeff;
        }
    }
    let (a, k, a_plus, a_minus) = (
        big_to_i64(&a, "A")?,
        big_to_i64(&k, "K")?,
        big_to_i64(&plus, "A+")?,
        big_to_i64(&minus, "A-")?,
    );
    if (k + a_minus) % 2 != 0 {
        return Err(KronError::Overflow(format!("K + A- = {} is odd", k + a_minus)));
    }
    Ok(AbcTriple { a, b: a - (k + a_minus) / 2, c: a_plus - a_minus, k, a_plus, a_minus })
}

fn series_coefficient(s: &PowerSumSeries, alpha: &Partition, beta: &Partition, gamma: &Partition, what: &str) -> Result<i64> {
    big_to_i64(&extract_constant(s, alpha, beta, gamma)?, what)
}

fn abc_from_series(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<AbcTriple> {
    let caps = caps_for(alpha, beta, gamma);
    let (x, y, z) = (AlphabetExpr::x(), AlphabetExpr::y(), AlphabetExpr::z());
    let xyz = x.clone() * y.clone() * z.clone();
    let w = AlphabetExpr::w();
    let base = sigma_expand(&(xyz.clone() + AlphabetExpr::int(2) * w.clone()), caps)?;
    let a = series_coefficient(&base, alpha, beta, gamma, "A")?;
    let c_series = sigma_expand(&(xyz + (AlphabetExpr::int(1) + AlphabetExpr::eps()) * w.clone()), caps)?;
    let c = series_coefficient(&c_series, alpha, beta, gamma, "C")?;

    let quarter = |n: i64| LaurentPoly::constant(BigRational::new(BigInt::from(n), BigInt::from(4)));
    let mut factor = PowerSumSeries::one(caps).scale(&quarter(3));
    let hooks = sigma_expand(&((AlphabetExpr::eps() - AlphabetExpr::int(1)) * w.clone()), caps)?;
    factor = factor.add(&hooks.scale(&quarter(1)))?;
    factor = factor.sub(&chi_series(&w, caps)?.scale(&quarter(2)))?;
    factor = factor.add(&chi_series(&(y * z - x), caps)?)?;
    let b = series_coefficient(&base.mul(&factor)?, alpha, beta, gamma, "B")?;

    if (a + c) % 2 != 0 {
        return Err(KronError::Overflow(format!("A + C = {} is odd", a + c)));
    }
    let (a_plus, a_minus) = ((a + c) / 2, (a - c) / 2);
    Ok(AbcTriple { a, b, c, k: 2 * (a - b) - a_minus, a_plus, a_minus })
}

/// `A, B, C` for the given index order.
pub fn abc_coefficients(alpha: &Partition, beta: &Partition, gamma: &Partition, method: AbcMethod) -> Result<AbcTriple> {
    match method {
        AbcMethod::FromPolynomial => abc_from_polynomial(alpha, beta, gamma),
        AbcMethod::FromSeries => abc_from_series(alpha, beta, gamma),
    }
}

/// `A`, `C` and `B` in the three orders used by the appendix tables.
pub fn abc_record(alpha: &Partition, beta: &Partition, gamma: &Partition, method: AbcMethod) -> Result<AbcRecord> {
    let first = abc_coefficients(alpha, beta, gamma, method)?;
    let second = abc_coefficients(beta, alpha, gamma, method)?;
    let third = abc_coefficients(gamma, alpha, beta, method)?;
    Ok(AbcRecord { a: first.a, b: [first.b, second.b, third.b], c: first.c })
}

/// Value of the quasipolynomial for `ḡ((a,α), (b,β), (c,γ))` inside its
/// region of validity.
pub fn quasipoly_eval(alpha: &Partition, beta: &Partition, gamma: &Partition, a: i64, b: i64, c: i64) -> Result<i64> {
    let kp = row_bounds_kprime(alpha, beta, gamma);
    let checks = [
        (a >= alpha.first() as i64, "a >= α1"),
        (b >= beta.first() as i64, "b >= β1"),
        (c >= gamma.first() as i64, "c >= γ1"),
        (a - b >= kp[0], "a - b >= k'1"),
        (a - c >= kp[1], "a - c >= k'2"),
        (b + c - a >= kp[2], "b + c - a >= k'3"),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(KronError::OutOfRegion(format!("({a},{b},{c}) violates {what}")));
    }
    let abc = abc_coefficients(alpha, beta, gamma, AbcMethod::FromPolynomial)?;
    Ok(quasipoly_value(&abc, b + c - a))
}

fn quasipoly_value(abc: &AbcTriple, l1: i64) -> i64 {
    // ½A·ℓ1 + B - [ℓ1 odd]·C/2, computed on doubled values.
    let odd = l1.rem_euclid(2);
    let twice = abc.a * l1 + 2 * abc.b - odd * abc.c;
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum StabilityKind {
    EventuallyZero,
    EventuallyConstant { value: Option<u128>, probed: bool },
    Linear {
        slope: String,
        even_offset: String,
        odd_offset: Option<String>,
        offsets_probed: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StabilityReport {
    #[serde(flatten)]
    pub kind: StabilityKind,
    /// Indices of the original triple, in the order used (largest direction
    /// coordinate first).
    pub order: [usize; 3],
    pub direction: [i64; 3],
    pub ell: [i64; 3],
    pub cone: ConePosition,
    pub cone1: ConePosition,
    /// `A` of the row-cut triple.
    pub a_cut: i64,
}

fn grow(p: &Partition, n: usize, step: usize) -> Partition {
    if p.is_empty() && step * n == 0 {
        return Partition::empty();
    }
    p.cut_row().prepend(p.first() + n * step).expect("growing the first row keeps a partition")
}

fn direction_term(shapes: &[Partition; 3], dir: [usize; 3], n: usize) -> u128 {
    let g = [0, 1, 2].map(|i| grow(&shapes[i], n, dir[i]));
    reduced(&g[0], &g[1], &g[2])
}

/// Asymptotic behaviour of `ḡ(λ + n(a), μ + n(b), ν + n(c))` as `n` grows.
pub fn classify_direction(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: u64,
    b: u64,
    c: u64,
) -> Result<StabilityReport> {
    let dir = [a as i64, b as i64, c as i64];
    let lead = (0..3).max_by_key(|&i| (dir[i], std::cmp::Reverse(i))).expect("three coordinates");
    let mut order = vec![lead];
    order.extend((0..3).filter(|&i| i != lead));
    let order = [order[0], order[1], order[2]];
    let input = [lambda, mu, nu];
    let shapes = order.map(|i| input[i].clone());
    let theta = order.map(|i| dir[i]);
    let (ell, cone) = ell_and_cone(theta[0], theta[1], theta[2], Cone::C);
    let (_, cone1) = ell_and_cone(theta[0], theta[1], theta[2], Cone::C1);
    let cuts = shapes.clone().map(|p| p.cut_row());
    let abc = abc_coefficients(&cuts[0], &cuts[1], &cuts[2], AbcMethod::FromPolynomial)?;
    let report = |kind| StabilityReport {
        kind,
        order,
        direction: theta,
        ell,
        cone,
        cone1,
        a_cut: abc.a,
    };
    if cone == ConePosition::Outside || abc.a == 0 {
        return Ok(report(StabilityKind::EventuallyZero));
    }
    let steps = theta.map(|t| t as usize);
    if cone == ConePosition::Border {
        let value = probe_constant(&shapes, steps);
        return Ok(report(StabilityKind::EventuallyConstant { value, probed: true }));
    }
    let slope = Rational64::new(abc.a * ell[0], 2);
    let (even_offset, odd_offset, offsets_probed) = if cone1 == ConePosition::Interior {
        let l0 = ell_forms(
            shapes[0].first() as i64,
            shapes[1].first() as i64,
            shapes[2].first() as i64,
        )[0];
        let offset = |l: i64| {
            Rational64::new(abc.a * l0 + 2 * abc.b - l.rem_euclid(2) * abc.c, 2)
        };
        (offset(l0), Some(offset(l0 + ell[0])), false)
    } else {
        let (even, odd) = probe_offsets(&shapes, steps, slope);
        (even, odd, true)
    };
    Ok(report(StabilityKind::Linear {
        slope: slope.to_string(),
        even_offset: even_offset.to_string(),
        odd_offset: odd_offset.map(|r| r.to_string()),
        offsets_probed,
    }))
}

fn probe_constant(shapes: &[Partition; 3], dir: [usize; 3]) -> Option<u128> {
    let mut last = None;
    let mut run = 0;
    for n in 0..=PROBE_LIMIT {
        let v = direction_term(shapes, dir, n);
        if Some(v) == last {
            run += 1;
        } else {
            run = 1;
            last = Some(v);
        }
        if n >= PROBE_START && run >= PROBE_WINDOW {
            return last;
        }
    }
    None
}

fn probe_offsets(shapes: &[Partition; 3], dir: [usize; 3], slope: Rational64) -> (Rational64, Option<Rational64>) {
    let residual = |n: usize| Rational64::from_integer(direction_term(shapes, dir, n) as i64) - slope * Rational64::from_integer(n as i64);
    let mut history: Vec<Rational64> = Vec::new();
    for n in 0..=PROBE_LIMIT {
        history.push(residual(n));
        if n >= PROBE_START + 2 * PROBE_WINDOW {
            let tail = &history[n + 1 - 2 * PROBE_WINDOW..];
            let stable = tail.iter().enumerate().all(|(i, r)| *r == tail[i % 2]);
            if stable {
                let (even, odd) = if n % 2 == 0 { (history[n], history[n - 1]) } else { (history[n - 1], history[n]) };
                return (even, Some(odd));
            }
        }
    }
    let n = PROBE_LIMIT;
    let (even, odd) = if n.is_multiple_of(2) { (history[n], history[n - 1]) } else { (history[n - 1], history[n]) };
    (even, if even == odd { None } else { Some(odd) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookStabCheck {
    pub kronecker: u128,
    pub reduced: u128,
    pub hook_stable: u128,
    pub region_ok: bool,
}

/// The three members of the hook stability identity, and whether
/// `(a, b, c, m)` lies in the region where they are proven equal.
pub fn hook_stab_verify(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: usize,
    b: usize,
    c: usize,
    m: usize,
) -> Result<HookStabCheck> {
    if lambda.is_empty() || mu.is_empty() || nu.is_empty() {
        return Err(KronError::InvalidShape("hook stability needs non-empty partitions".into()));
    }
    if lambda.weight() != mu.weight() || lambda.weight() != nu.weight() {
        return Err(KronError::InvalidShape("hook stability needs partitions of equal weight".into()));
    }
    if m < a || m < b || m < c {
        return Err(KronError::OutOfRegion(format!("m = {m} must be at least a, b and c")));
    }
    let g = kronecker(
        &lambda.hook_add(m - a, a)?,
        &mu.hook_add(m - b, b)?,
        &nu.hook_add(m - c, c)?,
    );
    let gbar = reduced(
        &lambda.cut_row().union(&Partition::column(a)),
        &mu.cut_row().union(&Partition::column(b)),
        &nu.cut_row().union(&Partition::column(c)),
    );
    let gbarbar = hook_stable_value(&lambda.cut_hook(), &mu.cut_hook(), &nu.cut_hook(), HookMethod::Series)?;
    let (d, d0) = hook_stab_bounds(lambda, mu, nu);
    let l = ell_forms(a as i64, b as i64, c as i64);
    let slack = Rational64::from_integer(m as i64) - Rational64::new((a + b + c) as i64, 2);
    let region_ok = (0..3).all(|i| l[i] >= d[i]) && slack >= d0;
    Ok(HookStabCheck { kronecker: g, reduced: gbar, hook_stable: gbarbar, region_ok })
}

/// First triple of equal weight at most `max_weight` with
/// `g(λ,μ,ν) > g(λ⊕{1}{1}, μ⊕{1}{1}, ν⊕{1}{1})`.
pub fn conj111_search(max_weight: usize) -> Option<[Partition; 3]> {
    for n in 1..=max_weight {
        let parts = Partition::all(n);
        let mut triples = Vec::new();
        for i in 0..parts.len() {
            for j in i..parts.len() {
                for k in j..parts.len() {
                    triples.push((i, j, k));
                }
            }
        }
        let bad = triples
            .par_iter()
            .filter(|&&(i, j, k)| {
                let (l, m, v) = (&parts[i], &parts[j], &parts[k]);
                let grown = [l, m, v].map(|p| p.hook_add(1, 1).expect("non-empty"));
                kronecker(l, m, v) > kronecker(&grown[0], &grown[1], &grown[2])
            })
            .min();
        if let Some(&(i, j, k)) = bad {
            return Some([parts[i].clone(), parts[j].clone(), parts[k].clone()]);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AVanishing {
    pub a: i64,
    pub probes: usize,
    pub all_probes_zero: bool,
    pub consistent: bool,
}

/// Compares `A_{α,β,γ} = 0` with the vanishing of `ḡ((a,α),(b,β),(c,γ))` over
/// all second rows `a, b, c` up to `probe_bound`.
pub fn a_vanishing_check(alpha: &Partition, beta: &Partition, gamma: &Partition, probe_bound: usize) -> Result<AVanishing> {
    let a = abc_coefficients(alpha, beta, gamma, AbcMethod::FromPolynomial)?.a;
    let mut probes = 0;
    let mut all_zero = true;
    for x in alpha.first()..=probe_bound {
        for y in beta.first()..=probe_bound {
            for z in gamma.first()..=probe_bound {
                probes += 1;
                let v = reduced(&alpha.prepend(x)?, &beta.prepend(y)?, &gamma.prepend(z)?);
                all_zero &= v == 0;
            }
        }
    }
    Ok(AVanishing { a, probes, all_probes_zero: all_zero, consistent: (a == 0) == all_zero })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn e() -> Partition {
        Partition::empty()
    }

    #[test]
    fn col_polynomials() {
        assert_eq!(q_polynomial(&e(), &e(), &e(), QVariant::Col).unwrap().poly, LaurentPoly::one());
        let q = q_polynomial(&e(), &e(), &p("1"), QVariant::Col).unwrap();
        assert_eq!(q.poly.to_string(), "x + y + x*y - z^-1");
        let q = q_polynomial(&e(), &e(), &p("2"), QVariant::Col).unwrap();
        let x = LaurentPoly::letter(0, 1);
        let y = LaurentPoly::letter(1, 1);
        let zi = LaurentPoly::letter(2, -1);
        let expect = &(&x * &x) * &(&y * &y) + &(&x * &x) * &y + &x * &(&y * &y) + &x * &y
            - &(&x * &y) * &zi
            - &x * &zi
            - &y * &zi
            + &zi * &zi;
        assert_eq!(q.poly, expect);
    }

    #[test]
    fn col_polynomial_two_boxes() {
        let q = q_polynomial(&e(), &p("1"), &p("1"), QVariant::Col).unwrap();
        let m = |i: i32, j: i32, k: i32| LaurentPoly::monomial(BigRational::from_integer(BigInt::from(1)), [i, j, k, 0]);
        let expect = m(2, 1, 1) + m(2, 1, 0) + m(2, 0, 1) + m(1, 1, 1) + m(1, 1, 1) + m(2, 0, 0) + m(1, 1, 0) + m(1, 0, 1)
            + m(0, 1, 1)
            - m(1, 0, 0)
            - m(1, -1, 0)
            - m(1, 0, -1)
            + m(0, -1, -1)
            - m(0, 0, 0);
        assert_eq!(q.poly, expect);
    }

    #[test]
    fn hook_stable_examples() {
        for m in [HookMethod::Series, HookMethod::Polynomial, HookMethod::Limit] {
            assert_eq!(hook_stable_value(&e(), &e(), &e(), m).unwrap(), 1);
            assert_eq!(hook_stable_value(&p("1"), &p("1"), &p("1"), m).unwrap(), 21);
        }
        for m in [HookMethod::Series, HookMethod::Limit] {
            assert_eq!(hook_stable_value(&p("2"), &p("2"), &p("2"), m).unwrap(), 145);
        }
        assert_eq!(hook_stable_value(&p("3,1"), &e(), &e(), HookMethod::Series).unwrap(), 2);
        assert_eq!(hook_stable_value(&p("2,2"), &e(), &e(), HookMethod::Series).unwrap(), 0);
        assert_eq!(
            hook_stable_value(&p("4,4"), &p("4,4"), &p("4,4"), HookMethod::Limit).unwrap_err().name(),
            "LimitInfeasible"
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(hook_bounds_k(&e(), &e(), &e()), [0, 0, 0]);
        assert_eq!(hook_bounds_k(&p("2"), &p("2"), &p("2")), [6, 6, 6]);
        assert_eq!(hook_bounds_k(&p("2,2"), &e(), &e()), [6, 2, 2]);
        assert_eq!(row_bounds_kprime(&e(), &e(), &e()), [0, 0, 0]);
        assert_eq!(row_bounds_kprime(&p("1"), &p("1"), &p("1")), [4, 4, 6]);
        assert_eq!(row_bounds_kprime(&p("2,2"), &p("3"), &p("4")), [14, 15, 20]);
        let (d, d0) = hook_stab_bounds(&p("3,3"), &p("3,3"), &p("3,3"));
        assert_eq!(d, [5, 5, 5]);
        assert_eq!(d0, Rational64::from_integer(3));
    }

    #[test]
    fn abc_examples() {
        for m in [AbcMethod::FromPolynomial, AbcMethod::FromSeries] {
            let t = abc_coefficients(&p("1"), &p("1"), &p("1"), m).unwrap();
            assert_eq!((t.a, t.b, t.c), (21, 0, 1));
            let t = abc_coefficients(&p("2"), &e(), &e(), m).unwrap();
            assert_eq!((t.a, t.b, t.c), (3, -2, 1));
            let r = abc_record(&p("2"), &p("1"), &p("1"), m).unwrap();
            assert_eq!(r, AbcRecord { a: 40, b: [-25, -5, -5], c: 0 });
            assert_eq!(abc_coefficients(&e(), &e(), &e(), m).unwrap().b, 1);
        }
    }

    #[test]
    fn quasipoly_examples() {
        assert_eq!(quasipoly_eval(&e(), &e(), &e(), 10, 8, 6).unwrap(), 3);
        assert_eq!(quasipoly_eval(&e(), &e(), &e(), 11, 8, 6).unwrap(), 2);
        assert_eq!(quasipoly_eval(&e(), &e(), &e(), 4, 2, 2).unwrap(), 1);
        assert_eq!(quasipoly_eval(&p("1"), &p("1"), &p("1"), 3, 3, 3).unwrap_err().name(), "OutOfRegion");
    }

    #[test]
    fn classification() {
        let r = classify_direction(&e(), &e(), &e(), 3, 1, 1).unwrap();
        assert_eq!(r.kind, StabilityKind::EventuallyZero);
        let r = classify_direction(&e(), &e(), &e(), 2, 1, 1).unwrap();
        assert_eq!(r.kind, StabilityKind::EventuallyConstant { value: Some(1), probed: true });
        let r = classify_direction(&e(), &e(), &e(), 1, 1, 1).unwrap();
        match r.kind {
            StabilityKind::Linear { slope, .. } => assert_eq!(slope, "1/2"),
            other => panic!("{other:?}"),
        }
        let r = classify_direction(&e(), &e(), &e(), 3, 2, 2).unwrap();
        assert_eq!(
            r.kind,
            StabilityKind::Linear {
                slope: "1/2".into(),
                even_offset: "1".into(),
                odd_offset: Some("1/2".into()),
                offsets_probed: false
            }
        );
    }

    #[test]
    fn hook_stab_examples() {
        let s = p("3,3");
        let r = hook_stab_verify(&s, &s, &s, 7, 7, 7, 14).unwrap();
        assert_eq!(r, HookStabCheck { kronecker: 145, reduced: 145, hook_stable: 145, region_ok: true });
        let r = hook_stab_verify(&s, &s, &s, 1, 1, 1, 2).unwrap();
        assert_eq!((r.kronecker, r.hook_stable, r.region_ok), (8, 145, false));
    }

    #[test]
    fn conj111_small() {
        assert_eq!(conj111_search(1), None);
        assert_eq!(conj111_search(4), None);
    }

    #[test]
    fn a_vanishing_examples() {
        let r = a_vanishing_check(&e(), &e(), &e(), 3).unwrap();
        assert!(r.consistent && r.a == 1 && !r.all_probes_zero);
        let r = a_vanishing_check(&p("1"), &p("1"), &p("1"), 3).unwrap();
        assert!(r.consistent && r.a == 21);
    }
}
