//! Symmetric group characters by the Murnaghan–Nakayama rule.
//!
//! A character is computed one column at a time: for a fixed shape `λ` the
//! values `χ^λ_ρ` for every cycle type `ρ ⊢ |λ|` come out of a single depth
//! first walk over cycle types, where each node carries the signed multiset of
//! shapes left after removing border strips of the sizes chosen so far. Shapes
//! are encoded as beta-sets packed in a `u64`, so strip removal is a bead move.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::{KronError, Result};
use crate::partition::Partition;

/// Largest weight whose beta-sets fit the 64-bit encoding.
pub const MAX_WEIGHT: usize = 62;

const CACHE_ENV: &str = "KRONLAB_CACHE_DIR";
const CACHE_FILE: &str = "characters.txt";

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    Partition::all(n)
}

/// Centralizer order `z_ρ = ∏ i^{m_i} m_i!`.
pub fn z_order(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in rho.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Sign of a permutation of cycle type `ρ`.
pub fn cycle_sign(rho: &Partition) -> i128 {
    if (rho.weight() - rho.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Cycle types of one weight with their class sizes `n!/z_ρ`.
pub struct ClassData {
    pub types: Vec<Partition>,
    pub class_sizes: Vec<BigInt>,
    index: HashMap<Partition, usize>,
}

impl ClassData {
    fn new(n: usize) -> Self {
        let types = enumerate_partitions(n);
        let fact = factorial(n);
        let class_sizes = types.iter().map(|r| &fact / z_order(r)).collect();
        let index = types
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        ClassData { types, class_sizes, index }
    }

    pub fn index_of(&self, rho: &Partition) -> Option<usize> {
        self.index.get(rho).copied()
    }
}

/// Memo of character columns, safe to share between threads. Entries are
/// deterministic, so concurrent writers of the same column are harmless.
pub struct CharacterCache {
    columns: DashMap<Partition, Arc<Vec<i128>>>,
    classes: DashMap<usize, Arc<ClassData>>,
    store: Option<DiskStore>,
}

struct DiskStore {
    path: PathBuf,
    writer: Mutex<()>,
}

impl Default for CharacterCache {
    fn default() -> Self {
        Self::in_memory()
    }
}

impl CharacterCache {
    pub fn in_memory() -> Self {
        CharacterCache {
            columns: DashMap::new(),
            classes: DashMap::new(),
            store: None,
        }
    }

    /// A cache that preloads and appends to `<dir>/characters.txt`.
    pub fn with_dir(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        let path = dir.join(CACHE_FILE);
        let cache = CharacterCache {
            columns: DashMap::new(),
            classes: DashMap::new(),
            store: Some(DiskStore { path: path.clone(), writer: Mutex::new(()) }),
        };
        if path.exists() {
            cache.load(&path)?;
        }
        Ok(cache)
    }

    /// Honors `KRONLAB_CACHE_DIR`; falls back to memory only.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => {
                Self::with_dir(PathBuf::from(dir)).unwrap_or_else(|_| Self::in_memory())
            }
            _ => Self::in_memory(),
        }
    }

    fn load(&self, path: &PathBuf) -> std::io::Result<()> {
        let file = fs::File::open(path)?;
        let mut partial: HashMap<Partition, Vec<(Partition, i128)>> = HashMap::new();
        for line in BufReader::new(file).lines() {
            let line = line?;
            let mut fields = line.split(';');
            let (Some(l), Some(r), Some(v), None) =
                (fields.next(), fields.next(), fields.next(), fields.next())
            else {
                continue;
            };
            let (Ok(l), Ok(r), Ok(v)) = (l.parse::<Partition>(), r.parse::<Partition>(), v.trim().parse::<i128>())
            else {
                continue;
            };
            if l.weight() == r.weight() {
                partial.entry(l).or_default().push((r, v));
            }
        }
        for (lambda, values) in partial {
            let classes = self.classes(lambda.weight());
            if values.len() != classes.types.len() {
                continue;
            }
            let mut column = vec![0i128; values.len()];
            let mut seen = vec![false; values.len()];
            for (rho, v) in values {
                if let Some(i) = classes.index_of(&rho) {
                    column[i] = v;
                    seen[i] = true;
                }
            }
            if seen.iter().all(|&s| s) {
                self.columns.insert(lambda, Arc::new(column));
            }
        }
        Ok(())
    }

    fn persist(&self, lambda: &Partition, column: &[i128]) {
        let Some(store) = &self.store else { return };
        let classes = self.classes(lambda.weight());
        let mut text = String::new();
        for (rho, v) in classes.types.iter().zip(column) {
            text.push_str(&format!("{};{};{}\n", lambda, rho, v));
        }
        let _guard = store.writer.lock().unwrap_or_else(|e| e.into_inner());
        if let Ok(mut f) = OpenOptions::new().create(true).append(true).open(&store.path) {
            let _ = f.write_all(text.as_bytes());
        }
    }

    /// Cycle types of weight `n` with class sizes, cached.
    pub fn classes(&self, n: usize) -> Arc<ClassData> {
        if let Some(c) = self.classes.get(&n) {
            return c.clone();
        }
        let data = Arc::new(ClassData::new(n));
        self.classes.entry(n).or_insert(data).clone()
    }

    /// `χ^λ_ρ` for all `ρ ⊢ |λ|`, in the order of [`enumerate_partitions`].
    pub fn column(&self, lambda: &Partition) -> Arc<Vec<i128>> {
        if let Some(c) = self.columns.get(lambda) {
            return c.clone();
        }
        assert!(lambda.weight() <= MAX_WEIGHT, "weight {} too large", lambda.weight());
        let column = Arc::new(compute_column(lambda));
        self.persist(lambda, &column);
        self.columns.entry(lambda.clone()).or_insert(column).clone()
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Result<i128> {
        if lambda.weight() != rho.weight() {
            return Err(KronError::WeightMismatch { lambda: lambda.clone(), rho: rho.clone() });
        }
        let classes = self.classes(lambda.weight());
        let i = classes.index_of(rho).expect("cycle type of matching weight");
        Ok(self.column(lambda)[i])
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }
}

static GLOBAL: Lazy<CharacterCache> = Lazy::new(CharacterCache::from_env);

/// The process-wide cache.
pub fn global_cache() -> &'static CharacterCache {
    &GLOBAL
}

/// `χ^λ_ρ`, memoized in the global cache.
pub fn character_value(lambda: &Partition, rho: &Partition) -> Result<i128> {
    GLOBAL.value(lambda, rho)
}

/// Beta-set of `λ` with `len(λ)` beads: bead `i` sits at `λ_i + ℓ - 1 - i`.
fn beta_set(lambda: &Partition) -> u64 {
    let l = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &p)| acc | 1u64 << (p + l - 1 - i))
}

/// All signed results of removing a border strip of size `k`.
fn remove_strips(beta: u64, k: usize, out: &mut Vec<(u64, i128)>) {
    let mut beads = beta;
    while beads != 0 {
        let b = beads.trailing_zeros() as usize;
        beads &= beads - 1;
        if b < k {
            continue;
        }
        let target = b - k;
        if beta & (1u64 << target) != 0 {
            continue;
        }
        let between = beta & ((1u64 << b) - 1) & !((1u64 << (target + 1)) - 1);
        let sign = if between.count_ones().is_multiple_of(2) { 1 } else { -1 };
        out.push(((beta & !(1u64 << b)) | (1u64 << target), sign));
    }
}

fn compute_column(lambda: &Partition) -> Vec<i128> {
    let n = lambda.weight();
    let mut out = Vec::with_capacity(enumerate_partitions(n).len());
    let start = vec![(beta_set(lambda), 1i128)];
    walk(&start, n, n, &mut out);
    out
}

/// Depth first over cycle types with parts `<= max`, largest part first,
/// which visits them in reverse lexicographic order.
fn walk(state: &[(u64, i128)], remaining: usize, max: usize, out: &mut Vec<i128>) {
    if remaining == 0 {
        // Only the empty shape survives at weight zero.
        out.push(state.iter().map(|&(_, c)| c).sum());
        return;
    }
    let mut scratch = Vec::new();
    for k in (1..=remaining.min(max)).rev() {
        let mut next: HashMap<u64, i128> = HashMap::new();
        for &(beta, coeff) in state {
            scratch.clear();
            remove_strips(beta, k, &mut scratch);
            for &(b, s) in &scratch {
                *next.entry(b).or_insert(0) += s * coeff;
            }
        }
        let next: Vec<(u64, i128)> = next.into_iter().filter(|&(_, c)| c != 0).collect();
        if next.is_empty() {
            push_zeros(remaining - k, k, out);
        } else {
            walk(&next, remaining - k, k, out);
        }
    }
}

fn push_zeros(remaining: usize, max: usize, out: &mut Vec<i128>) {
    out.extend(std::iter::repeat_n(0, count_bounded(remaining, max)));
}

/// Number of partitions of `n` with parts at most `max`.
fn count_bounded(n: usize, max: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in 1..=max.min(n) {
        for s in part..=n {
            ways[s] += ways[s - part];
        }
    }
    ways[n]
}

/// `n!/z_ρ · χ^λ_ρ χ^μ_ρ χ^ν_ρ` summed over `ρ`, divided by `n!`.
pub(crate) fn triple_character_sum(
    cache: &CharacterCache,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> BigInt {
    let n = lambda.weight();
    let classes = cache.classes(n);
    let (a, b, c) = (cache.column(lambda), cache.column(mu), cache.column(nu));
    let mut total = BigInt::zero();
    for (i, size) in classes.class_sizes.iter().enumerate() {
        let prod = BigInt::from(a[i]) * BigInt::from(b[i]) * BigInt::from(c[i]);
        if !prod.is_zero() {
            total += size * prod;
        }
    }
    let fact = factorial(n);
    debug_assert!((&total % &fact).is_zero());
    total / fact
}
