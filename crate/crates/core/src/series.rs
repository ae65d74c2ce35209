//! Truncated series in `Sym(X) ⊗ Sym(Y) ⊗ Sym(Z)` over Laurent polynomials,
//! stored in the power-sum basis.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::alphabet::{Alphabet, AlphabetExpr, Monomial, NormalForm};
use crate::characters::{character_value, cycle_sign, enumerate_partitions, z_order};
use crate::error::{KronError, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;

/// Per-alphabet degree bounds `(D_X, D_Y, D_Z)`.
pub type Caps = [usize; 3];

/// Power-sum index `(ρ, σ, τ)` standing for `p_ρ(X) p_σ(Y) p_τ(Z)`.
pub type PowerIndex = [Partition; 3];

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSumSeries {
    caps: Caps,
    terms: HashMap<PowerIndex, LaurentPoly>,
}

fn unit_index() -> PowerIndex {
    [Partition::empty(), Partition::empty(), Partition::empty()]
}

fn index_degrees(k: &PowerIndex) -> [usize; 3] {
    [k[0].weight(), k[1].weight(), k[2].weight()]
}

fn within(d: [usize; 3], caps: Caps) -> bool {
    d[0] <= caps[0] && d[1] <= caps[1] && d[2] <= caps[2]
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl PowerSumSeries {
    pub fn zero(caps: Caps) -> Self {
        PowerSumSeries { caps, terms: HashMap::new() }
    }

    pub fn one(caps: Caps) -> Self {
        let mut s = Self::zero(caps);
        s.terms.insert(unit_index(), LaurentPoly::one());
        s
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PowerIndex, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &PowerIndex) -> LaurentPoly {
        self.terms.get(index).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Terms in a deterministic order.
    pub fn sorted_terms(&self) -> Vec<(PowerIndex, LaurentPoly)> {
        let ordered: BTreeMap<_, _> = self.terms.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        ordered.into_iter().collect()
    }

    pub fn add_term(&mut self, index: PowerIndex, c: &LaurentPoly) {
        if c.is_zero() || !within(index_degrees(&index), self.caps) {
            return;
        }
        match self.terms.entry(index) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    fn check_caps(&self, other: &Self) -> Result<()> {
        if self.caps != other.caps {
            return Err(KronError::CapMismatch(self.caps, other.caps));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&LaurentPoly::from_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        Ok(mul_truncated(&self.terms, &other.terms, self.caps))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.caps);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    /// Apply `ω` to one alphabet: `p_ρ ↦ (-1)^{|ρ|-ℓ(ρ)} p_ρ`, i.e. replace
    /// that alphabet `A` by `-εA`.
    pub fn omega(&self, a: Alphabet) -> Self {
        let mut out = Self::zero(self.caps);
        for (k, v) in &self.terms {
            let s = cycle_sign(&k[a.index()]) as i64;
            out.add_term(k.clone(), &v.scale(&rat(s)));
        }
        out
    }

    /// Same coefficients under new caps, dropping what no longer fits.
    pub fn truncate(&self, caps: Caps) -> Self {
        let mut out = Self::zero(caps);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v);
        }
        out
    }
}

fn mul_truncated(
    a: &HashMap<PowerIndex, LaurentPoly>,
    b: &HashMap<PowerIndex, LaurentPoly>,
    caps: Caps,
) -> PowerSumSeries {
    let mut out = PowerSumSeries::zero(caps);
    for (ka, va) in a {
        let da = index_degrees(ka);
        for (kb, vb) in b {
            let db = index_degrees(kb);
            if !within([da[0] + db[0], da[1] + db[1], da[2] + db[2]], caps) {
                continue;
            }
            let key = [ka[0].union(&kb[0]), ka[1].union(&kb[1]), ka[2].union(&kb[2])];
            out.add_term(key, &(va * vb));
        }
    }
    out
}

/// `p_n` applied to one expanded monomial with coefficient `c`.
fn pn_monomial(m: &Monomial, c: i64, n: usize, caps: Caps) -> Option<(PowerIndex, LaurentPoly)> {
    let degrees = [m.alph[0] as usize * n, m.alph[1] as usize * n, m.alph[2] as usize * n];
    if !within(degrees, caps) {
        return None;
    }
    let key = [
        Partition::from_unsorted(vec![n; m.alph[0] as usize]),
        Partition::from_unsorted(vec![n; m.alph[1] as usize]),
        Partition::from_unsorted(vec![n; m.alph[2] as usize]),
    ];
    let sign = if m.eps == 1 && n % 2 == 1 { -1 } else { 1 };
    let letters = [
        m.letters[0] * n as i32,
        m.letters[1] * n as i32,
        m.letters[2] * n as i32,
        m.letters[3] * n as i32,
    ];
    Some((key, LaurentPoly::monomial(rat(sign * c), letters)))
}

/// `p_n[F]` as a series.
pub fn power_sum_at(f: &NormalForm, n: usize, caps: Caps) -> PowerSumSeries {
    let mut out = PowerSumSeries::zero(caps);
    for (m, &c) in f {
        if let Some((k, v)) = pn_monomial(m, c, n, caps) {
            out.add_term(k, &v);
        }
    }
    out
}

fn check_truncatable(f: &NormalForm) -> Result<()> {
    for m in f.keys() {
        if !m.has_alphabet() {
            return Err(KronError::NonTruncatable(m.to_string()));
        }
    }
    Ok(())
}

fn total_cap(caps: Caps) -> usize {
    caps.iter().sum()
}

/// `σ[F] = exp(Σ_{n≥1} p_n[F]/n)` truncated to `caps`.
pub fn sigma_expand(f: &AlphabetExpr, caps: Caps) -> Result<PowerSumSeries> {
    let nf = f.normal_form();
    check_truncatable(&nf)?;
    let top = total_cap(caps);
    // Homogeneous components of the logarithm, by total degree.
    let mut log: Vec<HashMap<PowerIndex, LaurentPoly>> = vec![HashMap::new(); top + 1];
    for n in 1..=top {
        let inv_n = BigRational::new(BigInt::one(), BigInt::from(n));
        for (m, &c) in &nf {
            if let Some((k, v)) = pn_monomial(m, c, n, caps) {
                let d: usize = index_degrees(&k).iter().sum();
                let entry = log[d].entry(k).or_insert_with(LaurentPoly::zero);
                *entry += &v.scale(&inv_n);
            }
        }
    }
    for comp in log.iter_mut() {
        comp.retain(|_, v| !v.is_zero());
    }
    // Θ E = Θ(L) E with Θ the degree operator, solved degree by degree.
    let mut exp: Vec<HashMap<PowerIndex, LaurentPoly>> = Vec::with_capacity(top + 1);
    let mut e0 = HashMap::new();
    e0.insert(unit_index(), LaurentPoly::one());
    exp.push(e0);
    for d in 1..=top {
        let mut acc = PowerSumSeries::zero(caps);
        for k in 1..=d {
            if log[k].is_empty() || exp[d - k].is_empty() {
                continue;
            }
            let part = mul_truncated(&log[k], &exp[d - k], caps);
            let kk = LaurentPoly::from_int(k as i64);
            for (key, v) in part.terms {
                acc.add_term(key, &(&v * &kk));
            }
        }
        let inv_d = BigRational::new(BigInt::one(), BigInt::from(d));
        exp.push(acc.terms.into_iter().map(|(k, v)| (k, v.scale(&inv_d))).collect());
    }
    let mut out = PowerSumSeries::zero(caps);
    for comp in exp {
        for (k, v) in comp {
            out.add_term(k, &v);
        }
    }
    Ok(out)
}

/// `χ[A] = Σ_{n≥1} p_n[A]` truncated to `caps`.
pub fn chi_series(a: &AlphabetExpr, caps: Caps) -> Result<PowerSumSeries> {
    let nf = a.normal_form();
    check_truncatable(&nf)?;
    let mut out = PowerSumSeries::zero(caps);
    for n in 1..=total_cap(caps) {
        for (m, &c) in &nf {
            if let Some((k, v)) = pn_monomial(m, c, n, caps) {
                out.add_term(k, &v);
            }
        }
    }
    Ok(out)
}

/// `S · χ[A]`.
pub fn chi_factor(s: &PowerSumSeries, a: &AlphabetExpr) -> Result<PowerSumSeries> {
    s.mul(&chi_series(a, s.caps())?)
}

/// Exact sum or product of two series with identical caps.
pub fn series_combine(op: SeriesOp, a: &PowerSumSeries, b: &PowerSumSeries) -> Result<PowerSumSeries> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Mul => a.mul(b),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
}

/// `s_λ = Σ_ρ z_ρ^{-1} χ^λ_ρ p_ρ`.
pub fn schur_to_power(lambda: &Partition) -> BTreeMap<Partition, BigRational> {
    let mut out = BTreeMap::new();
    for rho in enumerate_partitions(lambda.weight()) {
        let chi = character_value(lambda, &rho).expect("equal weights");
        if chi != 0 {
            out.insert(
                rho.clone(),
                BigRational::new(BigInt::from(chi), z_order(&rho)),
            );
        }
    }
    out
}

/// `s_λ[F]` as a series: each `p_ρ` becomes `∏ p_{ρ_i}[F]`.
pub fn schur_plethysm(lambda: &Partition, f: &AlphabetExpr, caps: Caps) -> PowerSumSeries {
    let nf = f.normal_form();
    let mut pn_cache: HashMap<usize, PowerSumSeries> = HashMap::new();
    let mut out = PowerSumSeries::zero(caps);
    for (rho, c) in schur_to_power(lambda) {
        let mut term = PowerSumSeries::one(caps);
        for &part in rho.parts() {
            let pn = pn_cache
                .entry(part)
                .or_insert_with(|| power_sum_at(&nf, part, caps))
                .clone();
            term = term.mul(&pn).expect("same caps");
            if term.is_zero() {
                break;
            }
        }
        out = out.add(&term.scale(&LaurentPoly::constant(c))).expect("same caps");
    }
    out
}

/// `⟨S, s_α(X) s_β(Y) s_γ(Z)⟩` over the exact tri-degree `(|α|,|β|,|γ|)`.
pub fn extract_schur_coeff(
    s: &PowerSumSeries,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<LaurentPoly> {
    let requested = [alpha.weight(), beta.weight(), gamma.weight()];
    if !within(requested, s.caps()) {
        return Err(KronError::CapExceeded { requested, caps: s.caps() });
    }
    let shapes = [alpha, beta, gamma];
    let mut out = LaurentPoly::zero();
    for (k, v) in &s.terms {
        if index_degrees(k) != requested {
            continue;
        }
        let mut chi = 1i128;
        for i in 0..3 {
            chi *= character_value(shapes[i], &k[i])?;
            if chi == 0 {
                break;
            }
        }
        if chi != 0 {
            out += &v.scale(&BigRational::from_integer(BigInt::from(chi)));
        }
    }
    Ok(out)
}

/// Like [`extract_schur_coeff`] but requires a letter-free rational result.
pub fn extract_constant(
    s: &PowerSumSeries,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<BigRational> {
    let poly = extract_schur_coeff(s, alpha, beta, gamma)?;
    poly.as_constant()
        .ok_or_else(|| KronError::Parse(format!("coefficient {poly} is not a constant")))
}

/// Caps that exactly fit a triple of shapes.
pub fn caps_for(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Caps {
    [alpha.weight(), beta.weight(), gamma.weight()]
}
