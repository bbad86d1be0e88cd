//! Class functions of symmetric groups: Murnaghan–Nakayama values, traces of
//! explicit modules, inner products and decompositions.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_partitions, Partition};
use crate::error::Result;
use crate::linalg::RationalMatrix;
use crate::monoid::PartialTransformation;
use crate::rational::{factorial, Rational};
use crate::schur::{LabeledModule, StandardSchurModule};

/// Anything carrying an action of `S_n` by matrices.
pub trait SnModule {
    fn n(&self) -> usize;
    fn dim(&self) -> usize;
    fn act_permutation(&self, p: &PartialTransformation) -> Result<RationalMatrix>;
}

impl SnModule for LabeledModule {
    fn n(&self) -> usize {
        LabeledModule::n(self)
    }
    fn dim(&self) -> usize {
        LabeledModule::dim(self)
    }
    fn act_permutation(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        self.act_map(p)
    }
}

impl SnModule for StandardSchurModule {
    fn n(&self) -> usize {
        self.m
    }
    fn dim(&self) -> usize {
        StandardSchurModule::dim(self)
    }
    fn act_permutation(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        self.act_map(p)
    }
}

/// A function on the conjugacy classes of `S_n`, keyed by cycle type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    pub n: usize,
    pub values: BTreeMap<Partition, Rational>,
}

/// `z_ρ = ∏ i^{m_i} m_i!`; the class of `ρ` has `n!/z_ρ` elements.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    let mut counts: HashMap<usize, u64> = HashMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.into_iter().map(|(i, m)| BigInt::from(i).pow(m as u32) * factorial(m)).product()
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction { n, values: enumerate_partitions(n, None).into_iter().map(|p| (p, Rational::zero())).collect() }
    }

    pub fn value(&self, rho: &Partition) -> &Rational {
        &self.values[rho]
    }

    /// Value on the identity class.
    pub fn degree(&self) -> Rational {
        self.values[&Partition::from_parts(&vec![1; self.n])].clone()
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.n, other.n);
        let values = self.values.iter().map(|(k, v)| (k.clone(), v + &other.values[k])).collect();
        ClassFunction { n: self.n, values }
    }

    /// `⟨χ, ψ⟩ = (1/n!) Σ_ρ |class ρ| χ(ρ) ψ(ρ)`.
    pub fn inner(&self, other: &ClassFunction) -> Rational {
        assert_eq!(self.n, other.n);
        let mut acc = Rational::zero();
        for (rho, v) in &self.values {
            let z = Rational::from_bigint(centralizer_order(rho));
            acc += &(&(v * &other.values[rho]) / &z);
        }
        acc
    }

    /// Multiplicities of the irreducible characters `χ^λ`, zeros omitted.
    pub fn decompose(&self) -> BTreeMap<Partition, Rational> {
        enumerate_partitions(self.n, None)
            .into_iter()
            .filter_map(|l| {
                let m = self.inner(&specht_character(&l));
                (!m.is_zero()).then_some((l, m))
            })
            .collect()
    }
}

/// Removes rim hooks of length `k` from a beta-set; yields the new set and sign.
fn remove_hooks(beta: &[usize], k: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.to_vec();
        nb[idx] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        out.push((nb, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn mn(beta: &[usize], rho: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (beta.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let v = remove_hooks(beta, rho[0]).into_iter().map(|(nb, s)| s as i64 * mn(&nb, &rho[1..], memo)).sum();
    memo.insert(key, v);
    v
}

/// `χ^λ(ρ)` by Murnaghan–Nakayama on beta-sets.
pub fn mn_value(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "χ^λ(ρ) needs |λ| = |ρ|");
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    mn(&beta, rho.parts(), &mut HashMap::new())
}

static SPECHT_CACHE: Mutex<Option<HashMap<Partition, ClassFunction>>> = Mutex::new(None);

/// The irreducible character `χ^λ` of `S_{|λ|}`.
pub fn specht_character(lambda: &Partition) -> ClassFunction {
    if let Some(c) = SPECHT_CACHE.lock().unwrap().as_ref().and_then(|m| m.get(lambda)) {
        return c.clone();
    }
    let n = lambda.size();
    let values = enumerate_partitions(n, None)
        .into_iter()
        .map(|rho| {
            let v = mn_value(lambda, &rho);
            (rho, Rational::from_int(v))
        })
        .collect();
    let c = ClassFunction { n, values };
    SPECHT_CACHE.lock().unwrap().get_or_insert_with(HashMap::new).insert(lambda.clone(), c.clone());
    c
}

/// Trace of one permutation of each cycle type.
pub fn module_character<M: SnModule + ?Sized>(m: &M) -> Result<ClassFunction> {
    let n = m.n();
    let mut values = BTreeMap::new();
    for rho in enumerate_partitions(n, None) {
        let v = if m.dim() == 0 {
            Rational::zero()
        } else {
            m.act_permutation(&PartialTransformation::permutation_of_cycle_type(&rho))?.trace()
        };
        values.insert(rho, v);
    }
    Ok(ClassFunction { n, values })
}

/// `f(L_{λ′}(V_n))` with `n = |λ|`: the weight-`(1^n)` space, on which `S_n`
/// acts as the Specht module `S^λ`.
pub struct SpechtFromSchur {
    pub module: std::sync::Arc<LabeledModule>,
    pub indices: Vec<usize>,
}

impl SpechtFromSchur {
    pub fn new(lambda: &Partition) -> Result<Self> {
        let n = lambda.size();
        let module = crate::schur::schur_module(&crate::combinatorics::SkewShape::straight(lambda.conjugate()), n)?;
        let indices = module.indices_where(|w| w.coords().iter().all(|&c| c == 1));
        Ok(SpechtFromSchur { module, indices })
    }
}

impl SnModule for SpechtFromSchur {
    fn n(&self) -> usize {
        self.module.n()
    }
    fn dim(&self) -> usize {
        self.indices.len()
    }
    fn act_permutation(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        let pos: HashMap<usize, usize> = self.indices.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let cols: Vec<_> = self
            .module
            .act_map_on(p, &self.indices)?
            .into_iter()
            .map(|c| c.remap(|i| pos.get(&i).copied()))
            .collect();
        Ok(RationalMatrix::from_columns(self.indices.len(), &cols))
    }
}
