//! Schur coefficients of `σ[F]` through finite alphabets.
//!
//! To read off the coefficient of `s_α(X) s_β(Y) s_γ(Z)` it is enough to keep
//! `ℓ(α)` variables in `X` (or `α_1` variables after applying `ω` to `X`,
//! which swaps `s_α` for `s_{α'}`), and likewise for `Y` and `Z`. The product
//! `σ[F]` then becomes a product of factors `(1 ∓ m)^{∓c}` over monomials `m`
//! in these variables, expanded on a dense box of exponents, and the Schur
//! coefficient is the alternating sum `Σ_π sgn(π) [x^{κ+δ-π(δ)}]` per
//! alphabet. This handles weights far beyond what the power-sum basis allows.

use crate::alphabet::{AlphabetExpr, Monomial};
use crate::error::{KronError, Result};
use crate::partition::Partition;

/// Largest dense box the engine will allocate.
pub const MAX_BOX: usize = 1 << 27;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Row,
    Col,
}

struct Slot {
    mode: Mode,
    shape: Partition,
    first_var: usize,
}

impl Slot {
    fn vars(&self) -> usize {
        self.shape.len()
    }
}

fn box_size(shape: &Partition) -> usize {
    let r = shape.len();
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + r - i)
        .fold(1usize, usize::saturating_mul)
}

fn choose_slot(target: &Partition, first_var: usize) -> Slot {
    let conj = target.conjugate();
    if box_size(&conj) < box_size(target) {
        Slot { mode: Mode::Col, shape: conj, first_var }
    } else {
        Slot { mode: Mode::Row, shape: target.clone(), first_var }
    }
}

struct Factor {
    /// Variables multiplied together in the monomial `m`.
    vars: Vec<usize>,
    /// `+1` for `(1 - m)`, `-1` for `(1 + m)`.
    sign: i128,
    /// Exponent is `-power`.
    power: i64,
}

/// Coefficient of `s_α(X) s_β(Y) s_γ(Z)` in `σ[F]` for a letter-free `F`
/// that is of degree at most one in each alphabet.
pub fn schur_coefficient(
    f: &AlphabetExpr,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<i128> {
    let nf = f.normal_form();
    let mut slots = Vec::with_capacity(3);
    let mut nvars = 0;
    for target in [alpha, beta, gamma] {
        let slot = choose_slot(target, nvars);
        nvars += slot.vars();
        slots.push(slot);
    }

    let mut dims = Vec::with_capacity(nvars);
    for slot in &slots {
        let r = slot.vars();
        for (i, &p) in slot.shape.parts().iter().enumerate() {
            dims.push(p + r - i);
        }
    }
    let total = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
    let total = match total {
        Some(t) if t <= MAX_BOX => t,
        _ => {
            return Err(KronError::Overflow(format!(
                "finite-alphabet box for ({alpha}, {beta}, {gamma}) is too large"
            )))
        }
    };
    let mut strides = vec![1usize; nvars];
    for v in (0..nvars.saturating_sub(1)).rev() {
        strides[v] = strides[v + 1] * dims[v + 1];
    }

    let mut factors = Vec::new();
    for (m, &c) in &nf {
        factors.extend(expand_monomial(m, c, &slots)?);
    }

    let mut coeffs = vec![0i128; total];
    coeffs[0] = 1;
    for factor in &factors {
        apply_factor(&mut coeffs, factor, &dims, &strides)?;
    }

    extract(&coeffs, &slots, &strides)
}

fn expand_monomial(m: &Monomial, c: i64, slots: &[Slot]) -> Result<Vec<Factor>> {
    if m.letters.iter().any(|&e| e != 0) {
        return Err(KronError::OutOfRegion(format!(
            "term {m} carries letters; use the power-sum engine"
        )));
    }
    if !m.has_alphabet() {
        return Err(KronError::NonTruncatable(m.to_string()));
    }
    if m.alph.iter().any(|&d| d > 1) {
        return Err(KronError::OutOfRegion(format!(
            "term {m} has degree above one in an alphabet"
        )));
    }
    let mut c = c;
    let mut eps = m.eps;
    let mut ranges = Vec::new();
    for (a, slot) in slots.iter().enumerate() {
        if m.alph[a] == 0 {
            continue;
        }
        if slot.mode == Mode::Col {
            // A ↦ -εA.
            c = -c;
            eps ^= 1;
        }
        if slot.vars() == 0 {
            return Ok(Vec::new());
        }
        ranges.push((slot.first_var, slot.vars()));
    }
    let sign = if eps == 0 { 1 } else { -1 };
    let mut out = Vec::new();
    let mut choice = vec![0usize; ranges.len()];
    loop {
        let vars = ranges.iter().zip(&choice).map(|(&(first, _), &k)| first + k).collect();
        out.push(Factor { vars, sign, power: c });
        let mut i = 0;
        loop {
            if i == ranges.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < ranges[i].1 {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn overflow() -> KronError {
    KronError::Overflow("coefficient exceeds 128 bits".into())
}

fn apply_factor(coeffs: &mut [i128], factor: &Factor, dims: &[usize], strides: &[usize]) -> Result<()> {
    let shift: usize = factor.vars.iter().map(|&v| strides[v]).sum();
    let valid = |idx: usize| factor.vars.iter().all(|&v| (idx / strides[v]) % dims[v] >= 1);
    let n = coeffs.len();
    if factor.power > 0 {
        // Divide by (1 - sign·m), `power` times.
        for _ in 0..factor.power {
            for idx in shift..n {
                if valid(idx) {
                    let prev = coeffs[idx - shift];
                    if prev != 0 {
                        let add = if factor.sign > 0 { prev } else { -prev };
                        coeffs[idx] = coeffs[idx].checked_add(add).ok_or_else(overflow)?;
                    }
                }
            }
        }
    } else {
        // Multiply by (1 - sign·m), `-power` times.
        for _ in 0..(-factor.power) {
            for idx in (shift..n).rev() {
                if valid(idx) {
                    let prev = coeffs[idx - shift];
                    if prev != 0 {
                        let sub = if factor.sign > 0 { prev } else { -prev };
                        coeffs[idx] = coeffs[idx].checked_sub(sub).ok_or_else(overflow)?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Signed offsets `Σ_i (κ_i + δ_i - δ_{π(i)}) · stride` over permutations.
fn alternant_offsets(slot: &Slot, strides: &[usize]) -> Vec<(i128, usize)> {
    let r = slot.vars();
    let kappa = slot.shape.parts();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..r).collect();
    permutations(&mut perm, 0, 1, &mut |perm, sign| {
        let mut offset = 0;
        for i in 0..r {
            let top = kappa[i] + (r - 1 - i);
            let d = r - 1 - perm[i];
            if d > top {
                return;
            }
            offset += (top - d) * strides[slot.first_var + i];
        }
        out.push((sign, offset));
    });
    out
}

fn permutations(perm: &mut Vec<usize>, k: usize, sign: i128, f: &mut impl FnMut(&[usize], i128)) {
    if k == perm.len() {
        f(perm, sign);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permutations(perm, k + 1, if i == k { sign } else { -sign }, f);
        perm.swap(k, i);
    }
}

fn extract(coeffs: &[i128], slots: &[Slot], strides: &[usize]) -> Result<i128> {
    let a = alternant_offsets(&slots[0], strides);
    let b = alternant_offsets(&slots[1], strides);
    let c = alternant_offsets(&slots[2], strides);
    let mut total = 0i128;
    for &(sa, oa) in &a {
        for &(sb, ob) in &b {
            for &(sc, oc) in &c {
                let v = coeffs[oa + ob + oc];
                if v != 0 {
                    let term = if sa * sb * sc > 0 { v } else { -v };
                    total = total.checked_add(term).ok_or_else(overflow)?;
                }
            }
        }
    }
    Ok(total)
}

/// `σ[XYZ + XY + XZ + YZ]`, whose Schur coefficients are the reduced
/// Kronecker coefficients.
pub fn brion_kernel() -> AlphabetExpr {
    let (x, y, z) = (AlphabetExpr::x(), AlphabetExpr::y(), AlphabetExpr::z());
    x.clone() * y.clone() * z.clone() + x.clone() * y.clone() + x * z.clone() + y * z
}

/// `σ[XYZ + (1-ε)(XY + XZ + YZ + X + Y + Z)]`, whose Schur coefficients are
/// the hook-stable limits.
pub fn hook_kernel() -> AlphabetExpr {
    let (x, y, z) = (AlphabetExpr::x(), AlphabetExpr::y(), AlphabetExpr::z());
    x * y * z + (AlphabetExpr::int(1) - AlphabetExpr::eps()) * AlphabetExpr::w()
}
