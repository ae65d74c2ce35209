//! Plethystic alphabet expressions.
//!
//! An expression is built from the alphabets `X, Y, Z`, the sign alphabet
//! `ε` (with `p_n[ε] = (-1)^n`), the letters `x, y, z, t` raised to integer
//! powers, and integer multiplicities, combined by `+`, `-` and `×`. Every
//! expression expands to a finite integer combination of [`Monomial`]s, on
//! which power sums act multiplicatively.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// One of the three symmetric-function alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    X,
    Y,
    Z,
}

impl Alphabet {
    pub const ALL: [Alphabet; 3] = [Alphabet::X, Alphabet::Y, Alphabet::Z];

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlphabetExpr {
    Alph(Alphabet),
    Eps,
    /// Letter index into `x, y, z, t` and its exponent.
    Letter(usize, i32),
    Int(i64),
    Add(Box<AlphabetExpr>, Box<AlphabetExpr>),
    Sub(Box<AlphabetExpr>, Box<AlphabetExpr>),
    Mul(Box<AlphabetExpr>, Box<AlphabetExpr>),
}

/// A product `ε^eps · X^a Y^b Z^c · x^i y^j z^k t^l` with unit coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub eps: u8,
    pub alph: [u32; 3],
    pub letters: [i32; 4],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { eps: 0, alph: [0; 3], letters: [0; 4] };

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        m.eps = (self.eps + other.eps) % 2;
        for i in 0..3 {
            m.alph[i] += other.alph[i];
        }
        for i in 0..4 {
            m.letters[i] += other.letters[i];
        }
        m
    }

    pub fn has_alphabet(&self) -> bool {
        self.alph.iter().any(|&d| d > 0)
    }
}

/// Expanded form: monomials with nonzero integer coefficients.
pub type NormalForm = BTreeMap<Monomial, i64>;

impl AlphabetExpr {
    pub fn x() -> Self {
        AlphabetExpr::Alph(Alphabet::X)
    }

    pub fn y() -> Self {
        AlphabetExpr::Alph(Alphabet::Y)
    }

    pub fn z() -> Self {
        AlphabetExpr::Alph(Alphabet::Z)
    }

    pub fn alph(a: Alphabet) -> Self {
        AlphabetExpr::Alph(a)
    }

    pub fn eps() -> Self {
        AlphabetExpr::Eps
    }

    /// `-ε`, the alphabet whose `σ` is the elementary generating series.
    pub fn neg_eps() -> Self {
        -AlphabetExpr::Eps
    }

    pub fn int(m: i64) -> Self {
        AlphabetExpr::Int(m)
    }

    pub fn letter(index: usize, power: i32) -> Self {
        assert!(index < 4, "letters are x, y, z, t");
        AlphabetExpr::Letter(index, power)
    }

    /// `XY + XZ + YZ + X + Y + Z`.
    pub fn w() -> Self {
        let (x, y, z) = (Self::x(), Self::y(), Self::z());
        x.clone() * y.clone() + x.clone() * z.clone() + y.clone() * z.clone() + x + y + z
    }

    pub fn normal_form(&self) -> NormalForm {
        let mut out = NormalForm::new();
        match self {
            AlphabetExpr::Alph(a) => {
                let mut m = Monomial::ONE;
                m.alph[a.index()] = 1;
                out.insert(m, 1);
            }
            AlphabetExpr::Eps => {
                out.insert(Monomial { eps: 1, ..Monomial::ONE }, 1);
            }
            AlphabetExpr::Letter(i, e) => {
                let mut m = Monomial::ONE;
                m.letters[*i] = *e;
                out.insert(m, 1);
            }
            AlphabetExpr::Int(c) => {
                if *c != 0 {
                    out.insert(Monomial::ONE, *c);
                }
            }
            AlphabetExpr::Add(a, b) => {
                out = a.normal_form();
                accumulate(&mut out, &b.normal_form(), 1);
            }
            AlphabetExpr::Sub(a, b) => {
                out = a.normal_form();
                accumulate(&mut out, &b.normal_form(), -1);
            }
            AlphabetExpr::Mul(a, b) => {
                let (fa, fb) = (a.normal_form(), b.normal_form());
                for (ma, ca) in &fa {
                    for (mb, cb) in &fb {
                        add_to(&mut out, ma.mul(mb), ca * cb);
                    }
                }
            }
        }
        out
    }

    /// Replace every occurrence of alphabet `a` by `by`.
    pub fn substitute(&self, a: Alphabet, by: &AlphabetExpr) -> AlphabetExpr {
        match self {
            AlphabetExpr::Alph(b) if *b == a => by.clone(),
            AlphabetExpr::Add(l, r) => l.substitute(a, by) + r.substitute(a, by),
            AlphabetExpr::Sub(l, r) => l.substitute(a, by) - r.substitute(a, by),
            AlphabetExpr::Mul(l, r) => l.substitute(a, by) * r.substitute(a, by),
            other => other.clone(),
        }
    }
}

fn add_to(f: &mut NormalForm, m: Monomial, c: i64) {
    let e = f.entry(m).or_insert(0);
    *e += c;
    if *e == 0 {
        f.remove(&m);
    }
}

fn accumulate(f: &mut NormalForm, g: &NormalForm, sign: i64) {
    for (m, c) in g {
        add_to(f, *m, sign * c);
    }
}

impl Add for AlphabetExpr {
    type Output = AlphabetExpr;
    fn add(self, rhs: AlphabetExpr) -> AlphabetExpr {
        AlphabetExpr::Add(Box::new(self), Box::new(rhs))
    }
}

impl Sub for AlphabetExpr {
    type Output = AlphabetExpr;
    fn sub(self, rhs: AlphabetExpr) -> AlphabetExpr {
        AlphabetExpr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl Mul for AlphabetExpr {
    type Output = AlphabetExpr;
    fn mul(self, rhs: AlphabetExpr) -> AlphabetExpr {
        AlphabetExpr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl Neg for AlphabetExpr {
    type Output = AlphabetExpr;
    fn neg(self) -> AlphabetExpr {
        AlphabetExpr::Int(-1) * self
    }
}

impl fmt::Display for AlphabetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetExpr::Alph(a) => write!(f, "{a:?}"),
            AlphabetExpr::Eps => write!(f, "ε"),
            AlphabetExpr::Letter(i, 1) => write!(f, "{}", crate::laurent::LETTERS[*i]),
            AlphabetExpr::Letter(i, e) => write!(f, "{}^{}", crate::laurent::LETTERS[*i], e),
            AlphabetExpr::Int(c) => write!(f, "{c}"),
            AlphabetExpr::Add(a, b) => write!(f, "({a} + {b})"),
            AlphabetExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            AlphabetExpr::Mul(a, b) => write!(f, "{a}·{b}"),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.eps == 1 {
            parts.push("ε".to_string());
        }
        for (i, name) in ["X", "Y", "Z"].iter().enumerate() {
            match self.alph[i] {
                0 => {}
                1 => parts.push(name.to_string()),
                d => parts.push(format!("{name}^{d}")),
            }
        }
        for (i, &e) in self.letters.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(crate::laurent::LETTERS[i].to_string()),
                e => parts.push(format!("{}^{}", crate::laurent::LETTERS[i], e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("·"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_squares_to_one() {
        let e = AlphabetExpr::eps() * AlphabetExpr::eps();
        let nf = e.normal_form();
        assert_eq!(nf.len(), 1);
        assert_eq!(nf.get(&Monomial::ONE), Some(&1));
    }

    #[test]
    fn neg_eps_is_its_own_inverse() {
        let e = AlphabetExpr::neg_eps() * AlphabetExpr::neg_eps();
        assert_eq!(e.normal_form().get(&Monomial::ONE), Some(&1));
    }

    #[test]
    fn cancellation() {
        let x = AlphabetExpr::x();
        let letter = AlphabetExpr::letter(0, 1);
        let e = (x.clone() + letter.clone()) * (x.clone() + letter.clone()) - letter.clone() * letter - x.clone() * x;
        let nf = e.normal_form();
        assert_eq!(nf.len(), 1);
        let (m, c) = nf.iter().next().unwrap();
        assert_eq!(*c, 2);
        assert_eq!(m.alph, [1, 0, 0]);
        assert_eq!(m.letters, [1, 0, 0, 0]);
    }

    #[test]
    fn w_has_six_terms() {
        assert_eq!(AlphabetExpr::w().normal_form().len(), 6);
    }

    #[test]
    fn substitution() {
        let e = AlphabetExpr::x() * AlphabetExpr::y();
        let s = e.substitute(Alphabet::X, &(AlphabetExpr::neg_eps() * AlphabetExpr::x()));
        let nf = s.normal_form();
        let (m, c) = nf.iter().next().unwrap();
        assert_eq!((*c, m.eps), (-1, 1));
    }
}
