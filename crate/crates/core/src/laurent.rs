//! Laurent polynomials with exact rational coefficients in the letters
//! `x, y, z, t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub const LETTERS: [char; 4] = ['x', 'y', 'z', 't'];

/// Exponents of `x, y, z, t`.
pub type Exponent = [i32; 4];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, [0; 4])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, exp: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// A single letter to a power, e.g. `letter(2, -1)` is `z^-1`.
    pub fn letter(index: usize, power: i32) -> Self {
        let mut exp = [0; 4];
        exp[index] = power;
        Self::monomial(BigRational::one(), exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &Exponent) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exp: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by the monomial `x^e`.
    pub fn shift(&self, e: &Exponent) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut k = *k;
                    for i in 0..4 {
                        k[i] += e[i];
                    }
                    (k, v.clone())
                })
                .collect(),
        }
    }

    /// The value when the polynomial has no letters.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    /// Evaluate at `x, y, z, t` equal to the given nonzero rationals.
    pub fn eval(&self, at: [&BigRational; 4]) -> BigRational {
        let mut total = BigRational::zero();
        for (exp, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..4 {
                if exp[i] != 0 {
                    v *= pow(at[i], exp[i]);
                }
            }
            total += v;
        }
        total
    }

    /// Evaluate with every letter set to the same integer `s` (typically ±1).
    pub fn eval_all(&self, s: i64) -> BigRational {
        let s = BigRational::from_integer(BigInt::from(s));
        self.eval([&s, &s, &s, &s])
    }

    /// Sum of the coefficients, weighted by `f(exponent)`.
    pub fn weighted_sum(&self, f: impl Fn(&Exponent) -> i64) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| c * BigRational::from_integer(BigInt::from(f(e))))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    fn display_key(exp: &Exponent) -> (i64, i64, [i32; 4]) {
        let negative: i64 = exp.iter().filter(|&&e| e < 0).map(|&e| -(e as i64)).sum();
        let degree: i64 = exp.iter().map(|&e| e as i64).sum();
        let rev = [-exp[0], -exp[1], -exp[2], -exp[3]];
        (negative, degree, rev)
    }

    /// Terms in display order: fewest negative powers first, then ascending
    /// total degree, then lexicographically descending exponents.
    pub fn sorted_terms(&self) -> Vec<(Exponent, BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by_key(|(e, _)| Self::display_key(e));
        v
    }
}

fn pow(base: &BigRational, e: i32) -> BigRational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn monomial_text(exp: &Exponent) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exp.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(LETTERS[i].to_string()),
            _ => parts.push(format!("{}^{}", LETTERS[i], e)),
        }
    }
    parts.join("*")
}

fn rational_text(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.sorted_terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = monomial_text(exp);
            if mono.is_empty() {
                write!(f, "{}", rational_text(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rational_text(&abs))?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Exact conversion of an integral rational to `i64`.
pub fn rational_to_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn display_order_and_signs() {
        let p = LaurentPoly::letter(0, 1) + LaurentPoly::letter(1, 1)
            + LaurentPoly::letter(0, 1) * LaurentPoly::letter(1, 1)
            - LaurentPoly::letter(2, -1);
        assert_eq!(p.to_string(), "x + y + x*y - z^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_int(-3).to_string(), "-3");
        let half = LaurentPoly::monomial(BigRational::new(BigInt::from(1), BigInt::from(2)), [2, 0, 0, 0]);
        assert_eq!(half.to_string(), "1/2*x^2");
    }

    #[test]
    fn arithmetic_and_eval() {
        let x = LaurentPoly::letter(0, 1);
        let xi = LaurentPoly::letter(0, -1);
        assert_eq!(&x * &xi, LaurentPoly::one());
        let p = &(&x + &LaurentPoly::one()) * &(&x - &LaurentPoly::one());
        assert_eq!(p.to_string(), "-1 + x^2");
        assert_eq!(p.eval_all(1), r(0));
        let two = r(2);
        let one = r(1);
        assert_eq!(xi.eval([&two, &one, &one, &one]), BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn constants() {
        assert_eq!(LaurentPoly::from_int(5).as_constant(), Some(r(5)));
        assert_eq!(LaurentPoly::zero().as_constant(), Some(r(0)));
        assert_eq!(LaurentPoly::letter(3, 1).as_constant(), None);
    }
}
