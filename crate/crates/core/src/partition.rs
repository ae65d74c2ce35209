//! Integer partitions, the sequence operations used to pad and grow them, and
//! the cone geometry (linear forms, cones `C` and `C1`, Murnaghan's
//! inequalities, the padding bound) that the stability results quantify over.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the empty sequence; trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping zero parts. Fails unless the nonzero
    /// parts are weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(KronError::InvalidShape(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// First part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Length of the first column, i.e. the number of parts.
    pub fn first_column(&self) -> usize {
        self.parts.len()
    }

    /// A hook is a non-empty partition of the form `(a, 1^b)`.
    pub fn is_hook(&self) -> bool {
        !self.is_empty() && self.parts[1..].iter().all(|&p| p == 1)
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        let mut out = Vec::with_capacity(first);
        for col in 0..first {
            out.push(self.parts.iter().take_while(|&&p| p > col).count());
        }
        Partition { parts: out }
    }

    /// Removes the first part.
    pub fn cut_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Removes the first row and the first column of the diagram.
    pub fn cut_hook(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .skip(1)
                .map(|&p| p - 1)
                .filter(|&p| p > 0)
                .collect(),
        }
    }

    /// The sequence `(n - |self|, self_1, self_2, ...)` together with a flag
    /// telling whether it is a partition.
    pub fn pad_to_weight(&self, n: i64) -> (IntSequence, bool) {
        let mut entries = Vec::with_capacity(self.len() + 1);
        entries.push(n - self.weight() as i64);
        entries.extend(self.parts.iter().map(|&p| p as i64));
        let seq = IntSequence::new(entries);
        let valid = seq.is_partition();
        (seq, valid)
    }

    /// `self + (a) ∪ (1^b)`: lengthen the first row by `a`, then add `b`
    /// parts equal to 1. On the empty partition this is `(a) ∪ (1^b)`.
    pub fn hook_add(&self, a: usize, b: usize) -> Result<Partition> {
        if self.is_empty() && a == 0 && b > 0 {
            return Err(KronError::InvalidShape(format!("-⊕{{0}}{{{b}}} has no first row")));
        }
        Ok(self.add(&Partition::row(a)).union(&Partition::column(b)))
    }

    /// Part-wise sum.
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition {
            parts: (0..n).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// Multiset union of parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().chain(&other.parts).copied().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Multiplies every part by `n`.
    pub fn dilate(&self, n: usize) -> Partition {
        if n == 0 {
            return Partition::empty();
        }
        Partition {
            parts: self.parts.iter().map(|&p| p * n).collect(),
        }
    }

    /// `self + (1^a)`: attach a new first column of height `a`. Requires
    /// `a >= len(self)`.
    pub fn add_column(&self, a: usize) -> Result<Partition> {
        if a < self.len() {
            return Err(KronError::InvalidShape(format!(
                "{self} + (1^{a}) needs a column of height at least {}",
                self.len()
            )));
        }
        Ok(self.add(&Partition::column(a)))
    }

    /// Prepend a first part: `(a, self)`. Requires `a >= self_1`.
    pub fn prepend(&self, a: usize) -> Result<Partition> {
        if a < self.first() {
            return Err(KronError::InvalidShape(format!("({a}, {self}) is not a partition")));
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(a);
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// Multiplicities `m_i` for `i = 1..=first`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.first() + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of weight at most `w`, by weight then reverse lex.
    pub fn all_up_to(w: usize) -> Vec<Partition> {
        (0..=w).flat_map(Partition::all).collect()
    }

    /// Degree-lexicographic comparison: by weight, then reverse lex (so that
    /// `(2) > (1,1)`).
    pub fn deglex_cmp(&self, other: &Partition) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = KronError;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deglex_cmp(other)
    }
}

/// Canonical text form `8,3,3,1`; the empty partition prints as `-`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() || s == "-" || s == "ε" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| KronError::Parse(format!("bad part `{t}` in `{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A finite sequence of integers, not necessarily a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSequence {
    pub entries: Vec<i64>,
}

impl IntSequence {
    pub fn new(entries: Vec<i64>) -> Self {
        IntSequence { entries }
    }

    /// True when entries are weakly decreasing and nonnegative.
    pub fn is_partition(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0) && self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_partition() {
            return None;
        }
        Some(Partition::from_unsorted(
            self.entries.iter().map(|&e| e as usize).collect(),
        ))
    }
}

impl From<&Partition> for IntSequence {
    fn from(p: &Partition) -> Self {
        IntSequence::new(p.parts().iter().map(|&x| x as i64).collect())
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConePosition {
    Outside,
    Border,
    Interior,
}

/// `C`: all three linear forms nonnegative. `C1`: the subcone where `ℓ1` is
/// the smallest form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cone {
    C,
    C1,
}

/// `(b+c-a, a+c-b, a+b-c)`.
pub fn ell_forms(a: i64, b: i64, c: i64) -> [i64; 3] {
    [b + c - a, a + c - b, a + b - c]
}

/// Linear forms together with the position of `(a,b,c)` relative to `cone`.
pub fn ell_and_cone(a: i64, b: i64, c: i64, cone: Cone) -> ([i64; 3], ConePosition) {
    let l = ell_forms(a, b, c);
    let ineqs = match cone {
        Cone::C => l,
        Cone::C1 => [l[0], l[1] - l[0], l[2] - l[0]],
    };
    let pos = if ineqs.iter().any(|&v| v < 0) {
        ConePosition::Outside
    } else if ineqs.contains(&0) {
        ConePosition::Border
    } else {
        ConePosition::Interior
    };
    (l, pos)
}

/// Murnaghan's inequalities on the weights: `(|α|,|β|,|γ|) ∈ C`.
pub fn murnaghan_admissible(alpha: &Partition, beta: &Partition, gamma: &Partition) -> bool {
    let (_, pos) = ell_and_cone(
        alpha.weight() as i64,
        beta.weight() as i64,
        gamma.weight() as i64,
        Cone::C,
    );
    pos != ConePosition::Outside
}

/// `(|α|+α1+|β|+β1+|γ|+γ1)/2`, exact.
pub fn n0_bound(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Rational64 {
    let s: usize = [alpha, beta, gamma]
        .iter()
        .map(|p| p.weight() + p.first())
        .sum();
    Rational64::new(s as i64, 2)
}

/// Smallest integer not below `r`.
pub fn ceil_rational(r: Rational64) -> i64 {
    r.ceil().to_integer()
}
