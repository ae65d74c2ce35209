//! Symmetric-function identities checked coefficient by coefficient in the
//! power-sum engine.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::alphabet::{Alphabet, AlphabetExpr};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::series::{chi_series, extract_schur_coeff, schur_plethysm, sigma_expand, PowerSumSeries};
use crate::straighten::{vertex_term, VertexVariant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: usize,
    /// First disagreement, if any.
    pub failure: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn int(n: i64) -> LaurentPoly {
    LaurentPoly::from_int(n)
}

fn e() -> Partition {
    Partition::empty()
}

/// Compares the `s_λ(X)` coefficients of `s` with `expected(λ)` for every
/// `|λ| ≤ d`.
fn single_alphabet(
    name: &'static str,
    s: &PowerSumSeries,
    d: usize,
    expected: impl Fn(&Partition) -> LaurentPoly,
) -> Result<IdentityCheck> {
    let mut cases = 0;
    for lambda in Partition::all_up_to(d) {
        cases += 1;
        let got = extract_schur_coeff(s, &lambda, &e(), &e())?;
        let want = expected(&lambda);
        if got != want {
            return Ok(IdentityCheck {
                name,
                cases,
                failure: Some(format!("s_{{{lambda}}}: got {got}, expected {want}")),
            });
        }
    }
    Ok(IdentityCheck { name, cases, failure: None })
}

fn cauchy(d: usize) -> Result<IdentityCheck> {
    let s = sigma_expand(&(AlphabetExpr::x() * AlphabetExpr::y()), [d, d, 0])?;
    let mut cases = 0;
    for l in Partition::all_up_to(d) {
        for m in Partition::all_up_to(d) {
            cases += 1;
            let got = extract_schur_coeff(&s, &l, &m, &e())?;
            if got != int(i64::from(l == m)) {
                return Ok(IdentityCheck {
                    name: "cauchy",
                    cases,
                    failure: Some(format!("s_{{{l}}}(X) s_{{{m}}}(Y): got {got}")),
                });
            }
        }
    }
    Ok(IdentityCheck { name: "cauchy", cases, failure: None })
}

fn omega_involution(d: usize) -> Result<IdentityCheck> {
    let mut cases = 0;
    for l in Partition::all_up_to(d) {
        cases += 1;
        let caps = [l.weight(), 0, 0];
        let s = schur_plethysm(&l, &AlphabetExpr::x(), caps).omega(Alphabet::X);
        let t = schur_plethysm(&l.conjugate(), &AlphabetExpr::x(), caps);
        if s != t || s.omega(Alphabet::X) != schur_plethysm(&l, &AlphabetExpr::x(), caps) {
            return Ok(IdentityCheck {
                name: "omega",
                cases,
                failure: Some(format!("ω s_{{{l}}} differs from s_{{{}}}", l.conjugate())),
            });
        }
    }
    Ok(IdentityCheck { name: "omega", cases, failure: None })
}

/// `σ[tX] · s_α[X - 1/t] = Σ_n s_{(n,α)}[X] tⁿ` and its column analogue with
/// `t ↦ -εt`.
fn vertex(d: usize) -> Result<IdentityCheck> {
    let x = AlphabetExpr::x();
    let t = AlphabetExpr::letter(3, 1);
    let t_inv = AlphabetExpr::letter(3, -1);
    let mut cases = 0;
    for variant in [VertexVariant::Row, VertexVariant::Col] {
        let (scale, scale_inv) = match variant {
            VertexVariant::Row => (t.clone(), t_inv.clone()),
            VertexVariant::Col => (AlphabetExpr::neg_eps() * t.clone(), AlphabetExpr::neg_eps() * t_inv.clone()),
        };
        let caps = [d, 0, 0];
        let sigma = sigma_expand(&(scale * x.clone()), caps)?;
        for alpha in Partition::all_up_to(d) {
            let shifted = schur_plethysm(&alpha, &(x.clone() - scale_inv.clone()), caps);
            let series = sigma.mul(&shifted)?;
            for lambda in Partition::all_up_to(d) {
                cases += 1;
                let got = extract_schur_coeff(&series, &lambda, &e(), &e())?;
                let n = lambda.weight() as i64 - alpha.weight() as i64;
                let term = vertex_term(&alpha, n, variant);
                let want = if term.shape.as_ref() == Some(&lambda) {
                    LaurentPoly::monomial(BigRational::from_integer(BigInt::from(term.sign)), [0, 0, 0, n as i32])
                } else {
                    LaurentPoly::zero()
                };
                if got != want {
                    return Ok(IdentityCheck {
                        name: "vertex",
                        cases,
                        failure: Some(format!("{variant:?} α={alpha} λ={lambda}: got {got}, expected {want}")),
                    });
                }
            }
        }
    }
    Ok(IdentityCheck { name: "vertex", cases, failure: None })
}

/// Hooks `(a|b)` have arm `a` and leg `b`.
fn hook_arm_leg(l: &Partition) -> Option<(usize, usize)> {
    if l.is_empty() || !l.is_hook() {
        None
    } else {
        Some((l.first() - 1, l.len() - 1))
    }
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Runs every identity with all Schur indices of weight at most `max_degree`.
pub fn check_identities(max_degree: usize) -> Result<Vec<IdentityCheck>> {
    let d = max_degree;
    let x = AlphabetExpr::x();
    let caps = [d, 0, 0];
    let mut out = vec![cauchy(d)?, omega_involution(d)?, vertex(d)?];

    let s = sigma_expand(&((AlphabetExpr::eps() - AlphabetExpr::int(1)) * x.clone()), caps)?;
    out.push(single_alphabet("sigma-eps-hooks", &s, d, |l| match hook_arm_leg(l) {
        _ if l.is_empty() => int(1),
        Some((a, b)) => int(2 * sign(1 + a + b)),
        None => int(0),
    })?);

    let s = chi_series(&x, caps)?;
    out.push(single_alphabet("chi-hooks", &s, d, |l| match hook_arm_leg(l) {
        Some((_, b)) => int(sign(b)),
        None => int(0),
    })?);

    let s = sigma_expand(&x, caps)?.mul(&chi_series(&x, caps)?)?;
    out.push(single_alphabet("sigma-chi", &s, d, |l| {
        if l.is_row() {
            int(l.weight() as i64)
        } else {
            int(0)
        }
    })?);

    let s = sigma_expand(&(AlphabetExpr::int(2) * x.clone()), caps)?.mul(&chi_series(&x, caps)?)?;
    out.push(single_alphabet("sigma2-chi", &s, d, |l| {
        if l.len() <= 2 {
            let (l1, l2) = (l.part(0) as i64, l.part(1) as i64);
            int((l1 - l2 + 1) * (l1 + l2) / 2)
        } else {
            int(0)
        }
    })?);

    Ok(out)
}
