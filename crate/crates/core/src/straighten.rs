//! Jacobi–Trudi straightening and vertex-operator terms.

use serde::Serialize;

use crate::partition::{IntSequence, Partition};

/// `sign · s_shape`, or zero when `sign == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedSchur {
    pub sign: i8,
    pub shape: Option<Partition>,
}

impl SignedSchur {
    pub fn zero() -> Self {
        SignedSchur { sign: 0, shape: None }
    }

    pub fn plus(shape: Partition) -> Self {
        SignedSchur { sign: 1, shape: Some(shape) }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

/// Rewrites `s_s` for an arbitrary integer sequence as `±s_λ` or `0`.
pub fn straighten(s: &IntSequence) -> SignedSchur {
    let mut mu: Vec<i64> = s
        .entries
        .iter()
        .enumerate()
        .map(|(j, &v)| v - (j as i64 + 1))
        .collect();
    let mut sign = 1i8;
    // Insertion sort into decreasing order, counting transpositions.
    for i in 1..mu.len() {
        let mut j = i;
        while j > 0 && mu[j - 1] < mu[j] {
            mu.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && mu[j - 1] == mu[j] {
            return SignedSchur::zero();
        }
    }
    if mu.windows(2).any(|w| w[0] == w[1]) {
        return SignedSchur::zero();
    }
    let parts: Vec<i64> = mu.iter().enumerate().map(|(j, &m)| m + j as i64 + 1).collect();
    if parts.last().is_some_and(|&p| p < 0) {
        return SignedSchur::zero();
    }
    let shape = Partition::new(parts.into_iter().map(|p| p as usize).collect())
        .expect("straightened sequence is a partition");
    SignedSchur { sign, shape: Some(shape) }
}

/// Which vertex operator: `Γ(t)` grows the first row, its `ω`-image grows
/// the first column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexVariant {
    Row,
    Col,
}

/// Coefficient of `t^n` in the vertex operator applied to `s_α`.
pub fn vertex_term(alpha: &Partition, n: i64, variant: VertexVariant) -> SignedSchur {
    let base = match variant {
        VertexVariant::Row => alpha.clone(),
        VertexVariant::Col => alpha.conjugate(),
    };
    let mut entries = vec![n];
    entries.extend(base.parts().iter().map(|&p| p as i64));
    let s = straighten(&IntSequence::new(entries));
    match variant {
        VertexVariant::Row => s,
        VertexVariant::Col => SignedSchur {
            sign: s.sign,
            shape: s.shape.map(|p| p.conjugate()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[i64]) -> IntSequence {
        IntSequence::new(v.to_vec())
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn straighten_examples() {
        assert!(straighten(&seq(&[1, 2])).is_zero());
        assert_eq!(straighten(&seq(&[1, 3])), SignedSchur { sign: -1, shape: Some(p("2,2")) });
        assert_eq!(straighten(&seq(&[5, 3, 1])), SignedSchur::plus(p("5,3,1")));
        assert_eq!(straighten(&seq(&[-2, 1, 1])), SignedSchur::plus(Partition::empty()));
        assert!(straighten(&seq(&[-1])).is_zero());
        assert_eq!(straighten(&seq(&[0])), SignedSchur::plus(Partition::empty()));
    }

    #[test]
    fn vertex_examples() {
        assert_eq!(vertex_term(&p("3,1"), 5, VertexVariant::Row), SignedSchur::plus(p("5,3,1")));
        assert_eq!(vertex_term(&p("2"), 3, VertexVariant::Col), SignedSchur::plus(p("3,1,1")));
        assert!(vertex_term(&p("2"), 1, VertexVariant::Row).is_zero());
    }

    #[test]
    fn col_vertex_attaches_a_column() {
        for alpha in Partition::all_up_to(5) {
            for n in alpha.len()..alpha.len() + 4 {
                let expect = alpha.add_column(n).unwrap();
                assert_eq!(vertex_term(&alpha, n as i64, VertexVariant::Col), SignedSchur::plus(expect));
            }
        }
    }
}
