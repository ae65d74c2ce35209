//! Kronecker, Littlewood–Richardson and reduced Kronecker coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::characters::{enumerate_partitions, global_cache, triple_character_sum, z_order};
use crate::error::{KronError, Result};
use crate::finite::{brion_kernel, schur_coefficient};
use crate::partition::{ceil_rational, ell_and_cone, n0_bound, Cone, ConePosition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReducedMethod {
    /// Kronecker coefficient at a padding weight past the stability bound.
    Stabilize,
    /// Schur coefficient of `σ[XYZ + XY + XZ + YZ]`.
    Brion,
    /// Closed forms for rows, columns and the `(1^a),(1^b),(2,1^{c-1})` family.
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationProfile {
    pub weights: Vec<usize>,
    pub values: Vec<u128>,
    pub stable_value: u128,
    /// First padding weight from which the values stay constant.
    pub onset: usize,
}

fn to_u128(v: BigInt, what: &str) -> u128 {
    v.to_u128()
        .unwrap_or_else(|| panic!("{what} is negative or too large: {v}"))
}

/// `g(λ, μ, ν)`, zero when the weights differ.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> u128 {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return 0;
    }
    to_u128(triple_character_sum(global_cache(), lambda, mu, nu), "Kronecker coefficient")
}

/// `c^λ_{μ,ν} = ⟨s_μ s_ν, s_λ⟩`, computed in the power-sum basis.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> u128 {
    if lambda.weight() != mu.weight() + nu.weight() {
        return 0;
    }
    let cache = global_cache();
    let mut total = BigRational::zero();
    for rho in enumerate_partitions(mu.weight()) {
        let a = cache.value(mu, &rho).expect("equal weights");
        if a == 0 {
            continue;
        }
        for sigma in enumerate_partitions(nu.weight()) {
            let b = cache.value(nu, &sigma).expect("equal weights");
            if b == 0 {
                continue;
            }
            let c = cache.value(lambda, &rho.union(&sigma)).expect("equal weights");
            if c == 0 {
                continue;
            }
            total += BigRational::new(
                BigInt::from(a) * BigInt::from(b) * BigInt::from(c),
                z_order(&rho) * z_order(&sigma),
            );
        }
    }
    assert!(total.is_integer(), "non-integral Littlewood–Richardson sum");
    to_u128(total.to_integer(), "Littlewood–Richardson coefficient")
}

/// Padding weight used by the stabilization method.
pub fn stabilization_weight(alpha: &Partition, beta: &Partition, gamma: &Partition) -> usize {
    let bound = ceil_rational(n0_bound(alpha, beta, gamma)).max(0) as usize;
    [alpha, beta, gamma]
        .iter()
        .map(|p| p.weight() + p.first())
        .fold(bound, usize::max)
}

fn padded(p: &Partition, n: usize) -> Partition {
    let (seq, valid) = p.pad_to_weight(n as i64);
    assert!(valid, "padding {p} to {n} is not a partition");
    seq.to_partition().expect("valid padding")
}

/// `ḡ(α, β, γ)` by the chosen method.
pub fn reduced_kronecker(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    method: ReducedMethod,
) -> Result<u128> {
    match method {
        ReducedMethod::Stabilize => {
            let n = stabilization_weight(alpha, beta, gamma);
            Ok(kronecker(&padded(alpha, n), &padded(beta, n), &padded(gamma, n)))
        }
        ReducedMethod::Brion => {
            let v = schur_coefficient(&brion_kernel(), alpha, beta, gamma)?;
            Ok(u128::try_from(v).expect("reduced Kronecker coefficients are nonnegative"))
        }
        ReducedMethod::ClosedForm => closed_form(alpha, beta, gamma),
    }
}

/// `ḡ(α, β, γ)` through the fastest general method.
pub fn reduced(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u128 {
    reduced_kronecker(alpha, beta, gamma, ReducedMethod::Brion)
        .or_else(|_| reduced_kronecker(alpha, beta, gamma, ReducedMethod::Stabilize))
        .expect("stabilization never fails")
}

fn closed_form(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<u128> {
    let shapes = [alpha, beta, gamma];
    if shapes.iter().all(|p| p.is_row()) {
        let (l, pos) = ell_and_cone(alpha.first() as i64, beta.first() as i64, gamma.first() as i64, Cone::C);
        if pos == ConePosition::Outside {
            return Ok(0);
        }
        let min = *l.iter().min().expect("three forms");
        return Ok(1 + (min / 2) as u128);
    }
    if shapes.iter().all(|p| p.is_column()) {
        let (_, pos) = ell_and_cone(alpha.len() as i64, beta.len() as i64, gamma.len() as i64, Cone::C);
        return Ok(u128::from(pos != ConePosition::Outside));
    }
    for k in 0..3 {
        let special = shapes[k];
        let others: Vec<&Partition> = (0..3).filter(|&i| i != k).map(|i| shapes[i]).collect();
        let is_pattern = special.first() == 2 && special.parts()[1..].iter().all(|&p| p == 1);
        if is_pattern && others.iter().all(|p| p.is_column()) {
            let c = special.len() as i64;
            let (a, b) = (others[0].len() as i64, others[1].len() as i64);
            let d = (a - b).abs();
            let value = if (c == d && a + b > c + 1) || (c > d && a + b == c + 1) {
                1
            } else if c > d && a + b > c + 1 {
                2
            } else {
                0
            };
            return Ok(value);
        }
    }
    Err(KronError::ClosedFormUnavailable(alpha.clone(), beta.clone(), gamma.clone()))
}

/// `g(α[N], β[N], γ[N])` from the first valid padding up to two past the
/// stability bound.
pub fn stabilization_profile(alpha: &Partition, beta: &Partition, gamma: &Partition) -> StabilizationProfile {
    let start = [alpha, beta, gamma]
        .iter()
        .map(|p| p.weight() + p.first())
        .max()
        .unwrap_or(0);
    let end = (ceil_rational(n0_bound(alpha, beta, gamma)).max(0) as usize + 2).max(start + 1);
    let weights: Vec<usize> = (start..=end).collect();
    let values: Vec<u128> = weights
        .iter()
        .map(|&n| kronecker(&padded(alpha, n), &padded(beta, n), &padded(gamma, n)))
        .collect();
    let stable_value = *values.last().expect("non-empty profile");
    let mut onset_index = values.len() - 1;
    while onset_index > 0 && values[onset_index - 1] == stable_value {
        onset_index -= 1;
    }
    StabilizationProfile {
        onset: weights[onset_index],
        weights,
        values,
        stable_value,
    }
}
